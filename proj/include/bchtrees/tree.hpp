#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bchtrees {

/// Address of a vertex: child indices from the root (empty = root).
using VertexPath = std::vector<int>;

/// Finite planar rooted tree. A vertex is a leaf (no children) or an
/// internal vertex with at least two children, ordered left to right.
/// Leaves may carry a label; the empty label means "unlabeled" and is
/// rendered as "*". Leaves are numbered 1..n in left-to-right order.
struct PlanarTree {
  std::string label;
  std::vector<PlanarTree> children;

  bool is_leaf() const { return children.empty(); }

  friend bool operator==(const PlanarTree& x, const PlanarTree& y) {
    return x.label == y.label && x.children == y.children;
  }
  friend bool operator!=(const PlanarTree& x, const PlanarTree& y) { return !(x == y); }
};

inline PlanarTree leaf(std::string label = "") { return PlanarTree{std::move(label), {}}; }

inline PlanarTree internal(std::vector<PlanarTree> children) {
  if (children.size() < 2)
    throw std::invalid_argument("internal vertex needs at least two children");
  return PlanarTree{"", std::move(children)};
}

inline PlanarTree binary_node(PlanarTree left, PlanarTree right) {
  std::vector<PlanarTree> c;
  c.push_back(std::move(left));
  c.push_back(std::move(right));
  return internal(std::move(c));
}

struct TreeParseError : std::runtime_error {
  size_t position;
  TreeParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (position " + std::to_string(pos) + ")"), position(pos) {}
};

namespace detail {

inline bool is_label_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

struct TreeParser {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r'))
      ++pos;
  }

  PlanarTree parse() {
    skip_ws();
    if (pos >= text.size()) throw TreeParseError("unexpected end of input", pos);
    if (text[pos] == '(') {
      const size_t open = pos;
      ++pos;
      std::vector<PlanarTree> children;
      children.push_back(parse());
      skip_ws();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        children.push_back(parse());
        skip_ws();
      }
      if (pos >= text.size() || text[pos] != ')')
        throw TreeParseError("expected ',' or ')'", pos);
      ++pos;
      if (children.size() < 2)
        throw TreeParseError("internal vertex with fewer than two children", open);
      return PlanarTree{"", std::move(children)};
    }
    if (text[pos] == '*') {  // unlabeled leaf
      ++pos;
      return leaf();
    }
    const size_t start = pos;
    while (pos < text.size() && is_label_char(text[pos])) ++pos;
    if (pos == start) throw TreeParseError("expected leaf label or '('", pos);
    return leaf(text.substr(start, pos - start));
  }
};

}  // namespace detail

/// Grammar: Tree := LABEL | "*" | "(" Tree ("," Tree)+ ")". Whitespace is
/// ignored; "*" parses to an unlabeled leaf.
inline PlanarTree parse_tree(const std::string& text) {
  detail::TreeParser p{text};
  PlanarTree t = p.parse();
  p.skip_ws();
  if (p.pos != text.size()) throw TreeParseError("trailing characters", p.pos);
  return t;
}

/// Canonical text form: no spaces, comma-separated, unlabeled leaves as "*".
/// parse_tree(render_tree(t)) == t.
inline std::string render_tree(const PlanarTree& t) {
  if (t.is_leaf()) return t.label.empty() ? "*" : t.label;
  std::string out = "(";
  for (size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ",";
    out += render_tree(t.children[i]);
  }
  out += ")";
  return out;
}

inline int leaf_count(const PlanarTree& t) {
  if (t.is_leaf()) return 1;
  int n = 0;
  for (const auto& c : t.children) n += leaf_count(c);
  return n;
}

inline std::vector<std::string> leaf_labels(const PlanarTree& t) {
  std::vector<std::string> out;
  auto walk = [&](auto&& self, const PlanarTree& v) -> void {
    if (v.is_leaf()) {
      out.push_back(v.label);
      return;
    }
    for (const auto& c : v.children) self(self, c);
  };
  walk(walk, t);
  return out;
}

inline const PlanarTree& node_at(const PlanarTree& t, const VertexPath& path) {
  const PlanarTree* v = &t;
  for (int i : path) {
    if (i < 0 || static_cast<size_t>(i) >= v->children.size())
      throw std::out_of_range("invalid vertex path");
    v = &v->children[i];
  }
  return *v;
}

inline std::string path_text(const VertexPath& path) {
  std::string out = "(";
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(path[i]);
  }
  return out + ")";
}

/// A subroot together with its non-trivial rightmost branch: the branch
/// runs from the subroot down last-child edges to the leaf m(v); the
/// distance d(v) is the number of edges on it.
struct SubrootInfo {
  VertexPath subroot;
  int rightmost_leaf = 0;  // 1-based leaf index m(v)
  int distance = 0;        // d(v) >= 1
  std::vector<VertexPath> branch;  // vertices from subroot to m(v), inclusive
};

namespace detail {

/// Per-vertex facts gathered in one pre-order pass. Leaves of the subtree
/// rooted at the vertex occupy indices [leaf_lo, leaf_hi]; following
/// last-child edges from the vertex ends at leaf_hi.
struct VertexInfo {
  VertexPath path;
  bool internal = false;
  bool subroot = false;
  int leaf_lo = 0;
  int leaf_hi = 0;
  int rightmost_leaf = 0;
  int rightmost_distance = 0;
};

inline void analyze_walk(const PlanarTree& v, VertexPath& path, int leaf_lo, bool branch_top,
                         std::vector<VertexInfo>& out) {
  VertexInfo info;
  info.path = path;
  info.leaf_lo = leaf_lo;
  if (v.is_leaf()) {
    info.leaf_hi = leaf_lo;
    info.rightmost_leaf = leaf_lo;
    info.rightmost_distance = 0;
    out.push_back(info);
    return;
  }
  info.internal = true;
  // A subroot is an internal vertex whose outgoing edge is not a rightmost
  // edge, i.e. the root or a non-last child.
  info.subroot = branch_top;
  info.leaf_hi = leaf_lo + leaf_count(v) - 1;
  info.rightmost_leaf = info.leaf_hi;
  const PlanarTree* w = &v;
  int d = 0;
  while (!w->is_leaf()) {
    w = &w->children.back();
    ++d;
  }
  info.rightmost_distance = d;
  out.push_back(info);
  int lo = leaf_lo;
  for (size_t i = 0; i < v.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    analyze_walk(v.children[i], path, lo, i + 1 != v.children.size(), out);
    path.pop_back();
    lo += leaf_count(v.children[i]);
  }
}

inline std::vector<VertexInfo> analyze(const PlanarTree& t) {
  std::vector<VertexInfo> out;
  VertexPath path;
  analyze_walk(t, path, 1, true, out);
  return out;
}

}  // namespace detail

/// All subroots in pre-order (= lexicographic VertexPath order).
inline std::vector<SubrootInfo> subroots(const PlanarTree& t) {
  std::vector<SubrootInfo> out;
  for (const auto& info : detail::analyze(t)) {
    if (!info.subroot) continue;
    SubrootInfo s;
    s.subroot = info.path;
    s.rightmost_leaf = info.rightmost_leaf;
    s.distance = info.rightmost_distance;
    VertexPath p = info.path;
    const PlanarTree* v = &node_at(t, info.path);
    s.branch.push_back(p);
    while (!v->is_leaf()) {
      p.push_back(static_cast<int>(v->children.size()) - 1);
      s.branch.push_back(p);
      v = &v->children.back();
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Follows rightmost (last-child) edges from the vertex at `path` down to a
/// leaf; returns (m(v), d(v)). A leaf returns itself with distance 0.
inline std::pair<int, int> distance_to_rightmost(const PlanarTree& t, const VertexPath& path) {
  node_at(t, path);  // validates
  for (const auto& info : detail::analyze(t))
    if (info.path == path) return {info.rightmost_leaf, info.rightmost_distance};
  throw std::out_of_range("invalid vertex path");
}

inline bool is_binary(const PlanarTree& t) {
  if (t.is_leaf()) return true;
  if (t.children.size() != 2) return false;
  for (const auto& c : t.children)
    if (!is_binary(c)) return false;
  return true;
}

/// Partial order on leaves, given by its generating pairs
/// { (l, m(v)) : v subroot, l a leaf of the subtree at v, l != m(v) }.
/// The reflexive closure of these pairs is already transitive.
struct LeafOrder {
  int leaf_count = 0;
  std::set<std::pair<int, int>> pairs;
};

inline LeafOrder leaf_partial_order(const PlanarTree& t) {
  LeafOrder order;
  order.leaf_count = leaf_count(t);
  for (const auto& info : detail::analyze(t)) {
    if (!info.subroot) continue;
    for (int l = info.leaf_lo; l < info.rightmost_leaf; ++l)
      order.pairs.insert({l, info.rightmost_leaf});
  }
  return order;
}

/// All planar rooted trees with n leaves (internal arity >= 2), each exactly
/// once, unlabeled. Order: by arity k of the root (2, then 3, ...), then by
/// the composition (c_1,...,c_k) of n in lexicographic order, then by the
/// recursively enumerated subtrees with the rightmost slot varying fastest.
/// With binary_only, only k = 2 is used and the count is Catalan(n-1).
inline std::vector<PlanarTree> enumerate_trees(int n, bool binary_only) {
  if (n < 1) throw std::invalid_argument("enumerate_trees needs n >= 1");
  std::map<int, std::vector<PlanarTree>> memo;
  auto build = [&](auto&& self, int m) -> const std::vector<PlanarTree>& {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    std::vector<PlanarTree> result;
    if (m == 1) {
      result.push_back(leaf());
    } else {
      const int max_arity = binary_only ? 2 : m;
      std::vector<int> parts;
      auto emit = [&]() {
        // Cartesian product over subtrees of the chosen sizes, rightmost
        // slot varying fastest.
        std::vector<size_t> pick(parts.size(), 0);
        bool done = false;
        while (!done) {
          std::vector<PlanarTree> children;
          children.reserve(parts.size());
          for (size_t i = 0; i < parts.size(); ++i)
            children.push_back(self(self, parts[i])[pick[i]]);
          result.push_back(internal(std::move(children)));
          done = true;
          for (size_t i = parts.size(); i > 0;) {
            --i;
            if (++pick[i] < self(self, parts[i]).size()) {
              done = false;
              break;
            }
            pick[i] = 0;
          }
        }
      };
      auto compositions = [&](auto&& comp_self, int rest, int slots) -> void {
        if (slots == 1) {
          parts.push_back(rest);
          emit();
          parts.pop_back();
          return;
        }
        for (int first = 1; first <= rest - (slots - 1); ++first) {
          parts.push_back(first);
          comp_self(comp_self, rest - first, slots - 1);
          parts.pop_back();
        }
      };
      for (int k = 2; k <= max_arity; ++k) compositions(compositions, m, k);
    }
    return memo.emplace(m, std::move(result)).first->second;
  };
  return build(build, n);
}

/// Replaces the leaf with the given 1-based index by the scion.
inline PlanarTree graft(const PlanarTree& host, int leaf_index, const PlanarTree& scion) {
  const int total = leaf_count(host);
  if (leaf_index < 1 || leaf_index > total)
    throw std::out_of_range("graft: leaf index out of range");
  int seen = 0;
  auto rebuild = [&](auto&& self, const PlanarTree& v) -> PlanarTree {
    if (v.is_leaf()) {
      ++seen;
      return seen == leaf_index ? scion : v;
    }
    PlanarTree out;
    out.children.reserve(v.children.size());
    for (const auto& c : v.children) out.children.push_back(self(self, c));
    return out;
  };
  return rebuild(rebuild, host);
}

/// Graphviz rendering: one node per vertex (pre-order ids), edges from
/// parent to child in planar order, subroots drawn filled.
inline std::string tree_to_dot(const PlanarTree& t, const std::string& name = "tree") {
  std::set<VertexPath> subroot_paths;
  for (const auto& s : subroots(t)) subroot_paths.insert(s.subroot);
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  int next_id = 0;
  auto walk = [&](auto&& self, const PlanarTree& v, VertexPath& path, int parent_id) -> void {
    const int id = next_id++;
    out << "  n" << id;
    if (v.is_leaf()) {
      out << " [shape=circle,label=\"" << (v.label.empty() ? "*" : v.label) << "\"]";
    } else if (subroot_paths.count(path)) {
      out << " [shape=circle,style=filled,fillcolor=gray,label=\"\"]";
    } else {
      out << " [shape=circle,label=\"\"]";
    }
    out << ";\n";
    if (parent_id >= 0) out << "  n" << parent_id << " -> n" << id << ";\n";
    for (size_t i = 0; i < v.children.size(); ++i) {
      path.push_back(static_cast<int>(i));
      self(self, v.children[i], path, id);
      path.pop_back();
    }
  };
  VertexPath path;
  walk(walk, t, path, -1);
  out << "}\n";
  return out.str();
}

}  // namespace bchtrees
