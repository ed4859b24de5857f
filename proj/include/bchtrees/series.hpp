#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bchtrees/rational.hpp"
#include "bchtrees/tree.hpp"

namespace bchtrees {

/// Words are stored as byte strings of letter indices into the alphabet.
/// Canonical term order: by word length, then lexicographically.
struct WordOrder {
  bool operator()(const std::string& x, const std::string& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

/// Degree-truncated noncommutative polynomial over Rational on a fixed
/// ordered alphabet. Stored words have length <= max_degree and never carry
/// a zero coefficient, so equality is structural. Operations require both
/// operands to share alphabet and truncation degree; there is no implicit
/// re-truncation.
class NCSeries {
 public:
  using TermMap = std::map<std::string, Rational, WordOrder>;

  NCSeries() = default;

  NCSeries(std::vector<std::string> alphabet, int max_degree)
      : alphabet_(std::move(alphabet)), max_degree_(max_degree) {
    if (max_degree_ < 0) throw std::invalid_argument("negative truncation degree");
    if (alphabet_.empty()) throw std::invalid_argument("empty alphabet");
  }

  static NCSeries constant(std::vector<std::string> alphabet, int max_degree,
                           const Rational& value) {
    NCSeries s(std::move(alphabet), max_degree);
    s.add_term("", value);
    return s;
  }

  static NCSeries generator(std::vector<std::string> alphabet, int max_degree,
                            const std::string& letter) {
    NCSeries s(std::move(alphabet), max_degree);
    if (max_degree < 1) throw std::invalid_argument("truncation degree < 1 has no generators");
    s.add_term(std::string(1, static_cast<char>(s.letter_index(letter))), 1);
    return s;
  }

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  int max_degree() const { return max_degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int letter_index(const std::string& letter) const {
    for (size_t i = 0; i < alphabet_.size(); ++i)
      if (alphabet_[i] == letter) return static_cast<int>(i);
    throw std::invalid_argument("letter '" + letter + "' not in alphabet");
  }

  Rational coeff(const std::string& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Coefficient of the word given by letter names, e.g. {"a","b"}.
  Rational coeff_of(const std::vector<std::string>& letters) const {
    std::string word;
    for (const auto& l : letters) word.push_back(static_cast<char>(letter_index(l)));
    return coeff(word);
  }

  /// Adds c to the coefficient of the word, dropping the term if it becomes
  /// zero. Words longer than the truncation degree are rejected.
  void add_term(const std::string& word, const Rational& c) {
    if (static_cast<int>(word.size()) > max_degree_)
      throw std::invalid_argument("word exceeds truncation degree");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(word, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  NCSeries& operator+=(const NCSeries& other) {
    require_compatible(other);
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
  }

  NCSeries& operator-=(const NCSeries& other) {
    require_compatible(other);
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
  }

  NCSeries& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
  }

  friend NCSeries operator+(NCSeries x, const NCSeries& y) { return x += y; }
  friend NCSeries operator-(NCSeries x, const NCSeries& y) { return x -= y; }
  friend NCSeries operator-(NCSeries x) {
    for (auto& [w, c] : x.terms_) c = -c;
    return x;
  }
  friend NCSeries operator*(const Rational& c, NCSeries x) { return x *= c; }
  friend NCSeries operator*(NCSeries x, const Rational& c) { return x *= c; }

  /// Truncated product: words of combined length > max_degree are dropped.
  friend NCSeries operator*(const NCSeries& x, const NCSeries& y) {
    x.require_compatible(y);
    NCSeries out(x.alphabet_, x.max_degree_);
    for (const auto& [wx, cx] : x.terms_) {
      const size_t room = static_cast<size_t>(x.max_degree_) - wx.size();
      for (const auto& [wy, cy] : y.terms_) {
        if (wy.size() > room) break;  // terms ordered by length
        out.add_term(wx + wy, cx * cy);
      }
    }
    return out;
  }

  friend bool operator==(const NCSeries& x, const NCSeries& y) {
    return x.alphabet_ == y.alphabet_ && x.max_degree_ == y.max_degree_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const NCSeries& x, const NCSeries& y) { return !(x == y); }

 private:
  void require_compatible(const NCSeries& other) const {
    if (alphabet_ != other.alphabet_)
      throw std::invalid_argument("series alphabets differ");
    if (max_degree_ != other.max_degree_)
      throw std::invalid_argument("series truncation degrees differ");
  }

  std::vector<std::string> alphabet_;
  int max_degree_ = 0;
  TermMap terms_;
};

inline NCSeries commutator(const NCSeries& x, const NCSeries& y) { return x * y - y * x; }

/// ad(x)^m applied to y.
inline NCSeries ad_pow(const NCSeries& x, int m, NCSeries y) {
  if (m < 0) throw std::invalid_argument("negative ad power");
  for (int i = 0; i < m; ++i) y = commutator(x, y);
  return y;
}

/// sum_k x^k / k!; requires zero constant term.
inline NCSeries exp_series(const NCSeries& x) {
  if (x.coeff("") != 0) throw std::invalid_argument("exp needs zero constant term");
  NCSeries out = NCSeries::constant(x.alphabet(), x.max_degree(), 1);
  NCSeries power = NCSeries::constant(x.alphabet(), x.max_degree(), 1);
  for (int k = 1; k <= x.max_degree() && !power.is_zero(); ++k) {
    power = power * x;
    power *= Rational(1, k);
    out += power;
  }
  return out;
}

/// sum_k (-1)^{k+1} (y-1)^k / k; requires constant term 1.
inline NCSeries log_series(const NCSeries& y) {
  if (y.coeff("") != 1) throw std::invalid_argument("log needs constant term 1");
  NCSeries u = y - NCSeries::constant(y.alphabet(), y.max_degree(), 1);
  NCSeries out(y.alphabet(), y.max_degree());
  NCSeries power = NCSeries::constant(y.alphabet(), y.max_degree(), 1);
  for (int k = 1; k <= y.max_degree() && !power.is_zero(); ++k) {
    power = power * u;
    out += Rational(k % 2 == 1 ? 1 : -1, k) * power;
  }
  return out;
}

/// Right-nested bracketing of a word: x1 x2 ... xm |-> ad(x1)...ad(x_{m-1}) xm.
inline NCSeries bracket_word(const std::vector<std::string>& alphabet, int max_degree,
                             const std::string& word) {
  if (word.empty()) throw std::invalid_argument("cannot bracket the empty word");
  auto gen = [&](char idx) {
    return NCSeries::generator(alphabet, max_degree, alphabet.at(static_cast<size_t>(idx)));
  };
  NCSeries out = gen(word.back());
  for (size_t i = word.size() - 1; i > 0; --i) out = commutator(gen(word[i - 1]), out);
  return out;
}

/// Linear extension of the right-nested bracketing to series with zero
/// constant term. Single letters map to themselves; a homogeneous Lie
/// element of degree n is multiplied by n.
inline NCSeries dsw_bracketing(const NCSeries& x) {
  if (x.coeff("") != 0) throw std::invalid_argument("bracketing needs zero constant term");
  NCSeries out(x.alphabet(), x.max_degree());
  for (const auto& [w, c] : x.terms()) out += c * bracket_word(x.alphabet(), x.max_degree(), w);
  return out;
}

/// Degree-n homogeneous part.
inline NCSeries component(const NCSeries& x, int n) {
  if (n < 0 || n > x.max_degree()) throw std::out_of_range("component degree out of range");
  NCSeries out(x.alphabet(), x.max_degree());
  for (const auto& [w, c] : x.terms()) {
    if (static_cast<int>(w.size()) == n) out.add_term(w, c);
    if (static_cast<int>(w.size()) > n) break;
  }
  return out;
}

/// Smallest degree with a nonzero term; max_degree+1 for the zero series.
inline int min_degree(const NCSeries& x) {
  if (x.is_zero()) return x.max_degree() + 1;
  return static_cast<int>(x.terms().begin()->first.size());
}

/// Substitutes images[i] for letter i. All images must share one alphabet
/// and the truncation degree of x, and must have zero constant term (this
/// makes truncated substitution exact).
inline NCSeries substitute(const NCSeries& x, const std::vector<NCSeries>& images) {
  if (images.size() != x.alphabet().size())
    throw std::invalid_argument("substitute: one image per letter required");
  for (const auto& img : images) {
    if (img.alphabet() != images.front().alphabet() ||
        img.max_degree() != images.front().max_degree())
      throw std::invalid_argument("substitute: images must agree on alphabet and degree");
    if (img.max_degree() != x.max_degree())
      throw std::invalid_argument("substitute: image truncation degree must match source");
    if (img.coeff("") != 0)
      throw std::invalid_argument("substitute: images must have zero constant term");
  }
  NCSeries out(images.front().alphabet(), images.front().max_degree());
  for (const auto& [w, c] : x.terms()) {
    NCSeries prod = NCSeries::constant(out.alphabet(), out.max_degree(), 1);
    for (char idx : w) {
      prod = prod * images[static_cast<size_t>(idx)];
      if (prod.is_zero()) break;
    }
    prod *= c;
    out += prod;
  }
  return out;
}

/// Operadic evaluation of a labeled binary tree under the commutator:
/// a leaf evaluates to the series its label is mapped to, an internal
/// vertex to [left, right].
inline NCSeries eval_bracket(const PlanarTree& t,
                             const std::map<std::string, NCSeries>& interpretation) {
  if (t.is_leaf()) {
    auto it = interpretation.find(t.label);
    if (it == interpretation.end())
      throw std::invalid_argument("no interpretation for label '" +
                                  (t.label.empty() ? "*" : t.label) + "'");
    return it->second;
  }
  if (t.children.size() != 2)
    throw std::invalid_argument("bracket evaluation needs a binary tree");
  return commutator(eval_bracket(t.children[0], interpretation),
                    eval_bracket(t.children[1], interpretation));
}

/// Nested-commutator text of a labeled binary tree, e.g. "[[b,a],a]".
inline std::string bracket_text(const PlanarTree& t) {
  if (t.is_leaf()) return t.label.empty() ? "*" : t.label;
  if (t.children.size() != 2)
    throw std::invalid_argument("bracket text needs a binary tree");
  return "[" + bracket_text(t.children[0]) + "," + bracket_text(t.children[1]) + "]";
}

inline std::string word_display(const NCSeries& s, const std::string& word) {
  std::string out;
  for (char idx : word) out += s.alphabet().at(static_cast<size_t>(idx));
  return out;
}

/// "a + b + 1/2 ab - 1/2 ba"; the zero series renders as "0".
inline std::string render_text(const NCSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : s.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const std::string word = word_display(s, w);
    if (word.empty()) {
      out << rational_text(mag);
    } else if (mag == 1) {
      out << word;
    } else {
      out << rational_text(mag) << " " << word;
    }
  }
  return out.str();
}

inline std::string latex_rational(const Rational& q) {
  if (denominator_of(q) == 1) return numerator_of(q).str();
  const bool negative = q < 0;
  const Rational mag = negative ? Rational(-q) : q;
  return std::string(negative ? "-" : "") + "\\frac{" + numerator_of(mag).str() + "}{" +
         denominator_of(mag).str() + "}";
}

/// Word expansion in LaTeX, e.g. "a + b + \frac{1}{2} ab - \frac{1}{2} ba".
inline std::string render_latex(const NCSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : s.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const std::string word = word_display(s, w);
    if (word.empty()) {
      out << latex_rational(mag);
    } else if (mag == 1) {
      out << word;
    } else {
      out << latex_rational(mag) << " " << word;
    }
  }
  return out.str();
}

}  // namespace bchtrees
