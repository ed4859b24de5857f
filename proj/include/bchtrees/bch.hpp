#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bchtrees/bernoulli.hpp"
#include "bchtrees/posetted.hpp"
#include "bchtrees/rational.hpp"
#include "bchtrees/series.hpp"
#include "bchtrees/tree.hpp"

namespace bchtrees {

enum class BchEngine { Posetted, PosettedReversed, Recursive, Dynkin, LogOracle, Star };

inline std::string engine_name(BchEngine e) {
  switch (e) {
    case BchEngine::Posetted: return "posetted";
    case BchEngine::PosettedReversed: return "posetted_reversed";
    case BchEngine::Recursive: return "recursive";
    case BchEngine::Dynkin: return "dynkin";
    case BchEngine::LogOracle: return "log";
    case BchEngine::Star: return "star";
  }
  throw std::logic_error("unreachable");
}

inline BchEngine parse_engine(const std::string& name) {
  if (name == "posetted") return BchEngine::Posetted;
  if (name == "posetted_reversed" || name == "posetted-reversed" || name == "reversed")
    return BchEngine::PosettedReversed;
  if (name == "recursive") return BchEngine::Recursive;
  if (name == "dynkin") return BchEngine::Dynkin;
  if (name == "log" || name == "log_oracle" || name == "log-oracle") return BchEngine::LogOracle;
  if (name == "star") return BchEngine::Star;
  throw std::invalid_argument("unknown engine '" + name + "'");
}

/// One audited summand of a tree-summation engine.
struct LedgerEntry {
  std::string tree;     // labeled tree text, e.g. "((b,a),a)"
  Rational coefficient; // includes any per-degree sign
  std::string bracket;  // nested-commutator text, e.g. "[[b,a],a]"
};

struct BchResult {
  NCSeries series;
  std::vector<NCSeries> components;  // components[i] = degree i+1 part
  bool has_ledger = false;
  std::vector<LedgerEntry> ledger;
};

struct BchRequest {
  int letters = 2;
  int max_degree = 1;
  BchEngine engine = BchEngine::Posetted;
  bool restrict_to_c = false;
  bool with_ledger = false;
  std::optional<std::vector<Rational>> star_table;  // c_1..c_m for Star
};

inline std::vector<std::string> default_letters(int k) {
  if (k < 1 || k > 26) throw std::invalid_argument("letter count must be in 1..26");
  std::vector<std::string> out;
  for (int i = 0; i < k; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

inline void validate_request(const BchRequest& req) {
  if (req.max_degree < 1) throw std::invalid_argument("max degree must be >= 1");
  default_letters(req.letters);
  const bool two_letter_only = req.engine == BchEngine::Recursive ||
                               req.engine == BchEngine::Dynkin ||
                               req.engine == BchEngine::LogOracle ||
                               req.engine == BchEngine::Star;
  if (two_letter_only && req.letters != 2)
    throw std::invalid_argument("engine '" + engine_name(req.engine) + "' needs exactly 2 letters");
  if (req.restrict_to_c && (req.engine != BchEngine::Posetted || req.letters != 2))
    throw std::invalid_argument("restrict-c applies only to the 2-letter posetted engine");
  if (req.star_table && req.engine != BchEngine::Star)
    throw std::invalid_argument("a coefficient table applies only to the star engine");
  if (req.engine == BchEngine::Star && req.star_table &&
      static_cast<int>(req.star_table->size()) < req.max_degree - 1)
    throw std::invalid_argument("star engine needs coefficients c_1..c_" +
                                std::to_string(req.max_degree - 1));
}

namespace detail {

inline std::vector<NCSeries> split_components(const NCSeries& s) {
  std::vector<NCSeries> out;
  for (int n = 1; n <= s.max_degree(); ++n) out.push_back(component(s, n));
  return out;
}

inline BchResult finish_result(NCSeries series, std::vector<LedgerEntry> ledger, bool with_ledger) {
  BchResult res;
  res.components = split_components(series);
  res.series = std::move(series);
  res.has_ledger = with_ledger;
  if (with_ledger) res.ledger = std::move(ledger);
  return res;
}

/// Shared tree-summation core. Sums coefficient(tree) * Z(tree) over all
/// binary posetted trees over `chain` with at most max_degree leaves; a tree
/// with n leaves is homogeneous of degree n, so the cutoff is exact. With
/// `alternating`, degree n carries the extra sign (-1)^{n-1}.
inline NCSeries posetted_sum(const ChainPoset& chain, const std::vector<std::string>& alphabet,
                             int max_degree, const CoefficientSeq& seq, bool restrict_c,
                             bool alternating, std::vector<LedgerEntry>* ledger) {
  std::map<std::string, NCSeries> interp;
  for (const auto& label : chain.labels)
    interp.emplace(label, NCSeries::generator(alphabet, max_degree, label));
  NCSeries total(alphabet, max_degree);
  for (int n = 1; n <= max_degree; ++n) {
    const Rational sign = (alternating && n % 2 == 0) ? Rational(-1) : Rational(1);
    for (const PlanarTree& pt : enumerate_posetted(n, chain, /*binary_only=*/true)) {
      if (restrict_c && !in_c_subset(pt, chain)) continue;
      const Rational c = sign * posetted_coefficient(pt, seq);
      if (c != 0) total += c * eval_bracket(pt, interp);
      if (ledger) ledger->push_back({render_tree(pt), c, bracket_text(pt)});
    }
  }
  return total;
}

}  // namespace detail

/// Tree-summation engine: with letters a_1..a_k (alphabet order) it expands
/// a_1 * a_2 * ... * a_k (* = BCH product) as the sum over binary posetted
/// trees over the chain a_k <= ... <= a_1, with coefficients built from the
/// Bernoulli-derived sequence b_n.
inline BchResult bch_posetted(int letters, int max_degree, bool restrict_c = false,
                              bool with_ledger = false) {
  const std::vector<std::string> alphabet = default_letters(letters);
  ChainPoset chain{std::vector<std::string>(alphabet.rbegin(), alphabet.rend())};
  std::vector<LedgerEntry> ledger;
  NCSeries series =
      detail::posetted_sum(chain, alphabet, max_degree, bernoulli_coefficients(), restrict_c,
                           /*alternating=*/false, with_ledger ? &ledger : nullptr);
  return detail::finish_result(std::move(series), std::move(ledger), with_ledger);
}

/// Same product a_1 * ... * a_k, expanded over the reversed chain
/// a_1 <= ... <= a_k with the alternating sign (-1)^(n-1) per leaf count n.
inline BchResult bch_posetted_reversed(int letters, int max_degree, bool with_ledger = false) {
  const std::vector<std::string> alphabet = default_letters(letters);
  ChainPoset chain{alphabet};
  std::vector<LedgerEntry> ledger;
  NCSeries series =
      detail::posetted_sum(chain, alphabet, max_degree, bernoulli_coefficients(),
                           /*restrict_c=*/false,
                           /*alternating=*/true, with_ledger ? &ledger : nullptr);
  return detail::finish_result(std::move(series), std::move(ledger), with_ledger);
}

/// Generalized tree summation on two letters with an arbitrary coefficient
/// sequence in place of b_n.
inline BchResult star_product(const CoefficientSeq& seq, int max_degree,
                              bool with_ledger = false) {
  const std::vector<std::string> alphabet = default_letters(2);
  ChainPoset chain{{"b", "a"}};
  std::vector<LedgerEntry> ledger;
  NCSeries series = detail::posetted_sum(chain, alphabet, max_degree, seq,
                                         /*restrict_c=*/false,
                                         /*alternating=*/false, with_ledger ? &ledger : nullptr);
  return detail::finish_result(std::move(series), std::move(ledger), with_ledger);
}

/// Ground truth: log(exp(a) exp(b)) in the truncated free algebra.
inline BchResult bch_log_oracle(int max_degree) {
  const std::vector<std::string> alphabet = default_letters(2);
  const NCSeries a = NCSeries::generator(alphabet, max_degree, "a");
  const NCSeries b = NCSeries::generator(alphabet, max_degree, "b");
  NCSeries series = log_series(exp_series(a) * exp_series(b));
  return detail::finish_result(std::move(series), {}, false);
}

/// Recursive expansion of a*b: Z_0 = b and
///   Z_{r+1} = 1/(r+1) sum_{m>=0} b_m sum_{i_1+...+i_m=r}
///             ad(Z_{i_1})...ad(Z_{i_m}) a,
/// summed over r. The inner sums are evaluated by the convolution
///   T_{m,s} = sum_{i=0..s} ad(Z_i) T_{m-1,s-i},  T_{0,s} = [s=0] a,
/// so Z_{r+1} = 1/(r+1) sum_m b_m T_{m,r}. At truncation N everything
/// with r > N or m > N-1 vanishes.
inline BchResult bch_recursive(int max_degree) {
  const int N = max_degree;
  const std::vector<std::string> alphabet = default_letters(2);
  const NCSeries a = NCSeries::generator(alphabet, N, "a");
  const NCSeries b = NCSeries::generator(alphabet, N, "b");
  const NCSeries zero(alphabet, N);

  std::vector<NCSeries> z;          // z[r] = Z_r
  z.push_back(b);
  // t[m][s] = T_{m,s}; column s becomes computable once Z_s is known.
  std::vector<std::vector<NCSeries>> t(static_cast<size_t>(N), std::vector<NCSeries>());
  NCSeries total = b;
  for (int s = 0; s + 1 <= N; ++s) {
    for (int m = 0; m < N; ++m) {
      NCSeries value = zero;
      if (m == 0) {
        if (s == 0) value = a;
      } else {
        for (int i = 0; i <= s; ++i) {
          const NCSeries& prev = t[static_cast<size_t>(m - 1)][static_cast<size_t>(s - i)];
          if (!prev.is_zero() && !z[static_cast<size_t>(i)].is_zero())
            value += commutator(z[static_cast<size_t>(i)], prev);
        }
      }
      t[static_cast<size_t>(m)].push_back(std::move(value));
    }
    NCSeries next = zero;
    for (int m = 0; m < N; ++m) {
      const Rational bm = bernoulli_b(m);
      if (bm != 0) next += bm * t[static_cast<size_t>(m)][static_cast<size_t>(s)];
    }
    next *= Rational(1, s + 1);
    total += next;
    z.push_back(std::move(next));
  }
  return detail::finish_result(std::move(total), {}, false);
}

/// Dynkin's nested-commutator expansion of log(e^a e^b): summing over block
/// tuples (p_1,q_1),...,(p_k,q_k) with p_i + q_i >= 1,
///   sum (-1)^(k-1) / (k * m * prod p_i! q_i!) * W(a^p_1 b^q_1 ... a^p_k b^q_k)
/// where m is the total degree and W is the right-nested bracketing (its
/// last letter is the bracket argument, which resolves the q_k = 0 case).
inline BchResult bch_dynkin(int max_degree) {
  const int N = max_degree;
  const std::vector<std::string> alphabet = default_letters(2);
  NCSeries total(alphabet, N);
  std::string word;  // letter indices: 0 = a, 1 = b
  auto emit = [&](int blocks, const Integer& block_factorials) {
    const int m = static_cast<int>(word.size());
    Rational coeff(Integer(blocks % 2 == 1 ? 1 : -1),
                   Integer(blocks) * Integer(m) * block_factorials);
    total += coeff * bracket_word(alphabet, N, word);
  };
  auto extend = [&](auto&& self, int remaining, int blocks, const Integer& factors) -> void {
    if (blocks >= 1) emit(blocks, factors);
    if (remaining == 0) return;
    for (int size = 1; size <= remaining; ++size) {
      for (int p = 0; p <= size; ++p) {
        const int q = size - p;
        word.append(static_cast<size_t>(p), static_cast<char>(0));
        word.append(static_cast<size_t>(q), static_cast<char>(1));
        self(self, remaining - size, blocks + 1, factors * factorial(p) * factorial(q));
        word.resize(word.size() - static_cast<size_t>(size));
      }
    }
  };
  extend(extend, N, 0, Integer(1));
  return detail::finish_result(std::move(total), {}, false);
}

inline BchResult run_bch(const BchRequest& req) {
  validate_request(req);
  switch (req.engine) {
    case BchEngine::Posetted:
      return bch_posetted(req.letters, req.max_degree, req.restrict_to_c, req.with_ledger);
    case BchEngine::PosettedReversed:
      return bch_posetted_reversed(req.letters, req.max_degree, req.with_ledger);
    case BchEngine::Recursive:
      return bch_recursive(req.max_degree);
    case BchEngine::Dynkin:
      return bch_dynkin(req.max_degree);
    case BchEngine::LogOracle:
      return bch_log_oracle(req.max_degree);
    case BchEngine::Star: {
      const CoefficientSeq seq =
          req.star_table ? table_coefficients(*req.star_table) : bernoulli_coefficients();
      return star_product(seq, req.max_degree, req.with_ledger);
    }
  }
  throw std::logic_error("unreachable");
}

/// w_n, the degree-n homogeneous part of the result.
inline NCSeries extract_component(const BchResult& res, int n) {
  if (n < 1 || n > static_cast<int>(res.components.size()))
    throw std::out_of_range("component degree out of range");
  return res.components[static_cast<size_t>(n) - 1];
}

/// BCH product of two series (zero constant term) over any alphabet,
/// computed by substituting them into the 2-letter log oracle. Exact at the
/// shared truncation degree.
inline NCSeries bch_pair(const NCSeries& x, const NCSeries& y) {
  const NCSeries base = bch_log_oracle(x.max_degree()).series;
  return substitute(base, {x, y});
}

/// Generalized product of two series obtained by substitution into a
/// 2-letter product series (first letter = left factor).
inline NCSeries compose_product(const NCSeries& base2, const NCSeries& x, const NCSeries& y) {
  return substitute(base2, {x, y});
}

/// a_1 * a_2 * ... * a_k via iterated 2-letter substitution,
/// right-associated: a_1 * (a_2 * (... * a_k)).
inline NCSeries bch_via_substitution(int letters, int max_degree) {
  const std::vector<std::string> alphabet = default_letters(letters);
  NCSeries acc = NCSeries::generator(alphabet, max_degree, alphabet.back());
  for (int i = letters - 2; i >= 0; --i)
    acc = bch_pair(NCSeries::generator(alphabet, max_degree, alphabet[static_cast<size_t>(i)]),
                   acc);
  return acc;
}

/// Sum over binary posetted trees over the chain a <= b with exactly n
/// leaves labeled b and one leaf labeled a. The result is proportional to
/// ad(b)^n(a) (the multidegree component is one-dimensional); returns the
/// proportionality constant, which equals (-1)^n b_n.
inline Rational cn_constant(int n) {
  if (n < 1) throw std::invalid_argument("cn_constant needs n >= 1");
  const int N = n + 1;
  const std::vector<std::string> alphabet = default_letters(2);
  const ChainPoset chain{{"a", "b"}};
  std::map<std::string, NCSeries> interp;
  interp.emplace("a", NCSeries::generator(alphabet, N, "a"));
  interp.emplace("b", NCSeries::generator(alphabet, N, "b"));
  NCSeries sum(alphabet, N);
  for (const PlanarTree& shape : enumerate_trees(N, /*binary_only=*/true)) {
    const LeafOrder order = leaf_partial_order(shape);
    // Labelings with a single 'a': position runs over all leaves.
    for (int a_pos = 1; a_pos <= N; ++a_pos) {
      bool monotone = true;
      for (const auto& [l1, l2] : order.pairs) {
        const int p1 = l1 == a_pos ? 0 : 1;
        const int p2 = l2 == a_pos ? 0 : 1;
        if (p1 > p2) {
          monotone = false;
          break;
        }
      }
      if (!monotone) continue;
      PlanarTree labeled = shape;
      int next = 0;
      auto put = [&](auto&& self, PlanarTree& v) -> void {
        if (v.is_leaf()) {
          ++next;
          v.label = next == a_pos ? "a" : "b";
          return;
        }
        for (auto& c : v.children) self(self, c);
      };
      put(put, labeled);
      const Rational c = posetted_coefficient(labeled);
      if (c != 0) sum += c * eval_bracket(labeled, interp);
    }
  }
  const NCSeries target = ad_pow(interp.at("b"), n, interp.at("a"));
  if (sum.is_zero()) return 0;
  const auto& [word, coeff] = *sum.terms().begin();
  const Rational ratio = coeff / target.coeff(word);
  if (sum != ratio * target)
    throw std::runtime_error("tree sum is not proportional to ad(b)^n(a)");
  return ratio;
}

/// Outcome of comparing (x*y)*z with x*(y*z) at truncation.
struct AssocReport {
  bool associative = false;
  int first_failing_degree = 0;
  std::vector<std::string> witness_words;
  Rational lhs_coefficient;
  Rational rhs_coefficient;
};

/// Checks associativity of the generalized product with the given
/// coefficient sequence on the 3-letter alphabet. With seq = b_n this is the
/// BCH product and the check passes at every truncation.
inline AssocReport check_associativity(const CoefficientSeq& seq, int max_degree) {
  const NCSeries base = star_product(seq, max_degree).series;
  const std::vector<std::string> abc = default_letters(3);
  const NCSeries x = NCSeries::generator(abc, max_degree, "a");
  const NCSeries y = NCSeries::generator(abc, max_degree, "b");
  const NCSeries z = NCSeries::generator(abc, max_degree, "c");
  const NCSeries lhs = compose_product(base, compose_product(base, x, y), z);
  const NCSeries rhs = compose_product(base, x, compose_product(base, y, z));
  AssocReport report;
  const NCSeries diff = lhs - rhs;
  if (diff.is_zero()) {
    report.associative = true;
    return report;
  }
  report.first_failing_degree = min_degree(diff);
  for (const auto& [w, c] : diff.terms()) {
    if (static_cast<int>(w.size()) != report.first_failing_degree) break;
    report.witness_words.push_back(word_display(diff, w));
  }
  const std::string& first = diff.terms().begin()->first;
  report.lhs_coefficient = lhs.coeff(first);
  report.rhs_coefficient = rhs.coeff(first);
  return report;
}

inline AssocReport check_bch_associativity(int max_degree) {
  return check_associativity(bernoulli_coefficients(), max_degree);
}

}  // namespace bchtrees
