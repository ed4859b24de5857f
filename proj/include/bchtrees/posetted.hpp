#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bchtrees/bernoulli.hpp"
#include "bchtrees/rational.hpp"
#include "bchtrees/tree.hpp"

namespace bchtrees {

/// Totally ordered label set, smallest first: {"b","a"} encodes b <= a.
/// Text form "b<=a" (labels joined by "<=").
struct ChainPoset {
  std::vector<std::string> labels;

  int position(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("label '" + label + "' not in poset");
  }

  bool contains(const std::string& label) const {
    for (const auto& l : labels)
      if (l == label) return true;
    return false;
  }

  bool leq(const std::string& x, const std::string& y) const {
    return position(x) <= position(y);
  }

  const std::string& bottom() const { return labels.front(); }
  const std::string& top() const { return labels.back(); }

  static ChainPoset parse(const std::string& text) {
    ChainPoset poset;
    size_t pos = 0;
    while (true) {
      const size_t next = text.find("<=", pos);
      const std::string label =
          next == std::string::npos ? text.substr(pos) : text.substr(pos, next - pos);
      if (label.empty()) throw std::invalid_argument("empty label in poset '" + text + "'");
      for (char c : label)
        if (!detail::is_label_char(c))
          throw std::invalid_argument("invalid label '" + label + "' in poset");
      if (poset.contains(label))
        throw std::invalid_argument("duplicate label '" + label + "' in poset");
      poset.labels.push_back(label);
      if (next == std::string::npos) break;
      pos = next + 2;
    }
    return poset;
  }

  std::string render() const {
    std::string out;
    for (size_t i = 0; i < labels.size(); ++i) {
      if (i) out += "<=";
      out += labels[i];
    }
    return out;
  }
};

/// A posetted tree is a PlanarTree whose leaves are labeled by elements of a
/// chain, monotonically with respect to the leaf partial order. Functions in
/// this header take such labeled trees directly.

/// Coefficient sequence n |-> c_n (n >= 1) used for tree coefficients.
using CoefficientSeq = std::function<Rational(int)>;

inline CoefficientSeq bernoulli_coefficients() {
  return [](int n) { return bernoulli_b(n); };
}

/// Finite table holding c_1..c_m; out-of-range indices are an error.
inline CoefficientSeq table_coefficients(std::vector<Rational> table) {
  return [table = std::move(table)](int n) {
    if (n < 1 || static_cast<size_t>(n) > table.size())
      throw std::out_of_range("coefficient sequence has no term " + std::to_string(n));
    return table[static_cast<size_t>(n) - 1];
  };
}

/// The first generating pair (l1, l2) of the leaf order violated by the
/// labeling, if any. Labels must all belong to the chain.
inline std::optional<std::pair<int, int>> find_monotonicity_violation(const PlanarTree& t,
                                                                      const ChainPoset& chain) {
  const std::vector<std::string> labels = leaf_labels(t);
  std::vector<int> pos(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) pos[i] = chain.position(labels[i]);
  for (const auto& [l1, l2] : leaf_partial_order(t).pairs)
    if (pos[l1 - 1] > pos[l2 - 1]) return std::make_pair(l1, l2);
  return std::nullopt;
}

inline bool is_monotone(const PlanarTree& t, const ChainPoset& chain) {
  return !find_monotonicity_violation(t, chain).has_value();
}

/// All posetted trees with n leaves over the chain, each exactly once.
/// Order: underlying trees in enumerate_trees order; for each tree, label
/// sequences (f(1),...,f(n)) in lexicographic order with respect to the
/// chain (bottom label smallest), filtered by monotonicity.
inline std::vector<PlanarTree> enumerate_posetted(int n, const ChainPoset& chain,
                                                  bool binary_only) {
  if (chain.labels.empty()) throw std::invalid_argument("empty poset");
  std::vector<PlanarTree> out;
  const int k = static_cast<int>(chain.labels.size());
  for (const PlanarTree& shape : enumerate_trees(n, binary_only)) {
    const LeafOrder order = leaf_partial_order(shape);
    std::vector<int> assign(n, 0);
    while (true) {
      bool ok = true;
      for (const auto& [l1, l2] : order.pairs)
        if (assign[l1 - 1] > assign[l2 - 1]) {
          ok = false;
          break;
        }
      if (ok) {
        PlanarTree labeled = shape;
        int next = 0;
        auto put = [&](auto&& self, PlanarTree& v) -> void {
          if (v.is_leaf()) {
            v.label = chain.labels[assign[next++]];
            return;
          }
          for (auto& c : v.children) self(self, c);
        };
        put(put, labeled);
        out.push_back(std::move(labeled));
      }
      int i = n - 1;
      while (i >= 0 && assign[i] == k - 1) assign[i--] = 0;
      if (i < 0) break;
      ++assign[i];
    }
  }
  return out;
}

/// t(v): number of leaves u of the subtree at the subroot v whose label
/// equals the label of m(v). Always >= 1.
inline int multiplicity_t(const PlanarTree& t, const VertexPath& subroot) {
  for (const auto& info : detail::analyze(t)) {
    if (info.path != subroot) continue;
    if (!info.subroot) throw std::invalid_argument("vertex is not a subroot");
    const std::vector<std::string> labels = leaf_labels(t);
    const std::string& target = labels[info.rightmost_leaf - 1];
    int count = 0;
    for (int l = info.leaf_lo; l <= info.leaf_hi; ++l)
      if (labels[l - 1] == target) ++count;
    return count;
  }
  throw std::out_of_range("invalid vertex path");
}

/// Product over subroots v of seq(d(v)) / t(v); 1 for a single leaf.
inline Rational posetted_coefficient(const PlanarTree& t, const CoefficientSeq& seq) {
  Rational product = 1;
  for (const auto& s : subroots(t))
    product *= seq(s.distance) / Rational(multiplicity_t(t, s.subroot));
  return product;
}

inline Rational posetted_coefficient(const PlanarTree& t) {
  return posetted_coefficient(t, bernoulli_coefficients());
}

/// Membership in the two-label family over which bracket evaluation can be
/// nonzero: either the tree is a single leaf, or every local rightmost leaf
/// carries the top label of the chain.
inline bool in_c_subset(const PlanarTree& t, const ChainPoset& chain) {
  if (chain.labels.size() != 2)
    throw std::invalid_argument("in_c_subset needs a two-element chain");
  if (t.is_leaf()) return true;
  const std::vector<std::string> labels = leaf_labels(t);
  for (const auto& s : subroots(t))
    if (labels[s.rightmost_leaf - 1] != chain.top()) return false;
  return true;
}

/// Number of leaves carrying the given label.
inline int count_label(const PlanarTree& t, const std::string& label) {
  int count = 0;
  for (const auto& l : leaf_labels(t))
    if (l == label) ++count;
  return count;
}

}  // namespace bchtrees
