#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace bchtrees {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number. Values are kept in canonical form: numerator and
/// denominator coprime, denominator positive, zero stored as 0/1. Equality
/// is therefore structural. No floating point is used anywhere.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(Integer(num)) / Rational(Integer(den));
}

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "3", "-1/2", "0"
inline std::string rational_text(const Rational& q) {
  if (denominator_of(q) == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

/// Accepts "p" or "p/q" with optional sign on p.
inline Rational parse_rational(const std::string& text) {
  auto bad = [&]() { return std::invalid_argument("malformed rational '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto is_int = [](const std::string& s, bool sign_ok) {
    if (s.empty()) return false;
    size_t i = (sign_ok && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!is_int(num, true) || !is_int(den, false)) throw bad();
  Integer d(den);
  if (d == 0) throw bad();
  return Rational(Integer(num)) / Rational(d);
}

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace bchtrees
