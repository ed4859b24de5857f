#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "bchtrees/bch.hpp"

namespace bchtrees {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline CheckResult make_check(std::string name, bool pass, std::string detail = "") {
  return CheckResult{std::move(name), pass, std::move(detail)};
}

/// Independent cross-check: classical Bernoulli numbers B_n from the
/// binomial recurrence sum_{k=0..n} C(n+1,k) B_k = 0, compared against
/// n! * b_n.
inline bool bernoulli_binomial_crosscheck(int upto) {
  std::vector<Rational> big{Rational(1)};
  for (int n = 1; n <= upto; ++n) {
    Rational acc = 0;
    Integer binom = 1;  // C(n+1, 0)
    for (int k = 0; k < n; ++k) {
      acc += Rational(binom) * big[static_cast<size_t>(k)];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    big.push_back(-acc / Rational(Integer(n + 1)));
  }
  for (int n = 0; n <= upto; ++n)
    if (big[static_cast<size_t>(n)] != Rational(factorial(n)) * bernoulli_b(n)) return false;
  return true;
}

}  // namespace detail

/// Four 2-letter expansions agree, the alternating-sign expansion matches,
/// and restricting the summation to the nonvanishing-bracket family changes
/// nothing.
inline std::vector<CheckResult> verify_engines(int max_degree) {
  std::vector<CheckResult> out;
  const NCSeries oracle = bch_log_oracle(max_degree).series;
  out.push_back(detail::make_check("engines/posetted-equals-log",
                                   bch_posetted(2, max_degree).series == oracle));
  out.push_back(detail::make_check("engines/recursive-equals-log",
                                   bch_recursive(max_degree).series == oracle));
  out.push_back(detail::make_check("engines/dynkin-equals-log",
                                   bch_dynkin(max_degree).series == oracle));
  out.push_back(detail::make_check("engines/reversed-equals-posetted",
                                   bch_posetted_reversed(2, max_degree).series == oracle));
  const int n3 = std::min(max_degree, 4);
  out.push_back(detail::make_check(
      "engines/reversed-equals-posetted-3-letters",
      bch_posetted_reversed(3, n3).series == bch_posetted(3, n3).series));
  const int nc = std::min(max_degree, 6);
  out.push_back(detail::make_check(
      "engines/restricted-sum-equals-full-sum",
      bch_posetted(2, nc, /*restrict_c=*/true).series == bch_posetted(2, nc).series));
  return out;
}

/// Group laws of the BCH product at truncation: x*0 = x, x*(-x) = 0 and
/// associativity on three letters.
inline std::vector<CheckResult> verify_group_laws(int max_degree) {
  std::vector<CheckResult> out;
  const std::vector<std::string> abc = default_letters(3);
  const NCSeries x = NCSeries::generator(abc, max_degree, "a");
  const NCSeries zero(abc, max_degree);
  out.push_back(detail::make_check("group-laws/identity", bch_pair(x, zero) == x));
  out.push_back(detail::make_check("group-laws/inverse", bch_pair(x, -x) == zero));
  const AssocReport assoc = check_bch_associativity(max_degree);
  out.push_back(detail::make_check("group-laws/associativity", assoc.associative));
  return out;
}

inline std::vector<CheckResult> verify_bernoulli() {
  std::vector<CheckResult> out;
  bool odd_zero = true;
  for (int k = 1; k <= 14; ++k)
    if (bernoulli_b(2 * k + 1) != 0) odd_zero = false;
  out.push_back(detail::make_check("bernoulli/odd-terms-vanish", odd_zero));
  bool relation = true;
  int bad = 0;
  for (int n = 1; n <= 20; ++n)
    if (!check_b_relation(n)) {
      relation = false;
      bad = n;
    }
  out.push_back(detail::make_check("bernoulli/symmetric-relation", relation,
                                   relation ? "" : "fails at n=" + std::to_string(bad)));
  out.push_back(detail::make_check("bernoulli/binomial-crosscheck",
                                   detail::bernoulli_binomial_crosscheck(20)));
  return out;
}

/// The ad(b)^n(a) constants from tree summation: C_n = (-1)^n b_n, and the
/// recursion C_n = -b_n/n - sum_{i<n} (b_i/n) C_{n-i}.
inline std::vector<CheckResult> verify_cn(int max_degree) {
  std::vector<CheckResult> out;
  const int upto = std::clamp(max_degree - 1, 1, 8);
  bool formula = true;
  bool recursion = true;
  std::vector<Rational> cn{Rational(0)};  // cn[0] unused
  for (int n = 1; n <= upto; ++n) {
    const Rational c = cn_constant(n);
    cn.push_back(c);
    const Rational expected = (n % 2 == 0) ? bernoulli_b(n) : -bernoulli_b(n);
    if (c != expected) formula = false;
    Rational rec = -bernoulli_b(n) / Rational(n);
    for (int i = 1; i < n; ++i) rec -= bernoulli_b(i) / Rational(n) * cn[static_cast<size_t>(n - i)];
    if (c != rec) recursion = false;
  }
  const std::string range = "n<=" + std::to_string(upto);
  out.push_back(detail::make_check("cn/equals-signed-bernoulli", formula, range));
  out.push_back(detail::make_check("cn/recursion", recursion, range));
  return out;
}

/// The generalized product is associative for scaled sequences h^n b_n and
/// provably fails for the designed sequence c_1 = -1/2, c_2 = 0 (the
/// negative check passes exactly when associativity breaks by degree 4).
inline std::vector<CheckResult> verify_star(int max_degree) {
  std::vector<CheckResult> out;
  const int n = std::min(max_degree, 4);
  for (const long long h : {1LL, 2LL, -1LL}) {
    CoefficientSeq seq = [h](int k) {
      Rational scale = 1;
      for (int i = 0; i < k; ++i) scale *= Rational(h);
      return scale * bernoulli_b(k);
    };
    out.push_back(detail::make_check("star/associative-h=" + std::to_string(h),
                                     check_associativity(seq, n).associative));
  }
  // Designed failure: c_1 = -1/2 forces h = 1, hence c_2 would have to be
  // 1/12; with c_2 = 0 associativity must break at degree <= 4.
  const CoefficientSeq broken = table_coefficients(
      {make_rational(-1, 2), Rational(0), Rational(0), Rational(0)});
  const AssocReport report = check_associativity(broken, 4);
  std::string detail;
  if (!report.associative) {
    detail = "fails at degree " + std::to_string(report.first_failing_degree) + ", witness";
    for (const auto& w : report.witness_words) detail += " " + w;
  }
  out.push_back(detail::make_check("star/designed-sequence-fails",
                                   !report.associative && report.first_failing_degree <= 4,
                                   detail));
  return out;
}

inline std::vector<CheckResult> verify_suite(const std::string& suite, int max_degree) {
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> more) {
    for (auto& c : more) out.push_back(std::move(c));
  };
  const bool all = suite == "all";
  if (all || suite == "engines") append(verify_engines(max_degree));
  if (all || suite == "group-laws") append(verify_group_laws(max_degree));
  if (all || suite == "bernoulli") append(verify_bernoulli());
  if (all || suite == "cn") append(verify_cn(max_degree));
  if (all || suite == "star") append(verify_star(max_degree));
  if (out.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

}  // namespace bchtrees
