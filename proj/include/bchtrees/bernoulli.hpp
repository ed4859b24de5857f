#pragma once

#include <mutex>
#include <stdexcept>
#include <vector>

#include "bchtrees/rational.hpp"

namespace bchtrees {

/// Taylor coefficients b_n of x/(e^x - 1).
///
/// Convention adopted throughout this library: b_n is defined by the
/// generating function, i.e. b_0 = 1 and
///     sum_{i=0..n} b_i / (n+1-i)! = 0   for n >= 1,
/// which gives b_n = B_n / n! for the classical Bernoulli numbers with
/// B_1 = -1/2. In particular b_1 = -1/2, b_2 = 1/12, b_4 = -1/720 and
/// b_n = 0 for odd n >= 3.
class BernoulliSequence {
 public:
  Rational at(int n) const {
    if (n < 0) throw std::invalid_argument("bernoulli index must be >= 0");
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<int>(cache_.size()) <= n) {
      const int m = static_cast<int>(cache_.size());
      Rational acc = 0;
      for (int i = 0; i < m; ++i) acc += cache_[i] / Rational(factorial(m + 1 - i));
      cache_.push_back(-acc);
    }
    return cache_[n];
  }

 private:
  mutable std::mutex mutex_;
  mutable std::vector<Rational> cache_{Rational(1)};
};

inline const BernoulliSequence& bernoulli_sequence() {
  static const BernoulliSequence seq;
  return seq;
}

inline Rational bernoulli_b(int n) { return bernoulli_sequence().at(n); }

/// Checks (1 + n(-1)^n) b_n == -sum_{i=1..n-1} (-1)^i b_i b_{n-i} exactly.
inline bool check_b_relation(int n) {
  if (n < 1) throw std::invalid_argument("check_b_relation needs n >= 1");
  const int sign_n = (n % 2 == 0) ? 1 : -1;
  const Rational lhs = Rational(1 + n * sign_n) * bernoulli_b(n);
  Rational rhs = 0;
  for (int i = 1; i < n; ++i) {
    const Rational term = bernoulli_b(i) * bernoulli_b(n - i);
    rhs += (i % 2 == 0) ? term : -term;
  }
  return lhs == -rhs;
}

}  // namespace bchtrees
