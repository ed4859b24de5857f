#include "bchtrees/tree.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace bchtrees;

// The seven-leaf example tree: root r with children a = ((1,2),3) and
// b = ((4,5),(6,7)).
const char* kExampleTree = "(((1,2),3),((4,5),(6,7)))";

// --- independent oracles -------------------------------------------------

// Catalan numbers C_0.. via the convolution recurrence.
std::vector<std::int64_t> catalan(int upto) {
  std::vector<std::int64_t> c{1};
  for (int n = 1; n <= upto; ++n) {
    std::int64_t total = 0;
    for (int i = 0; i < n; ++i) total += c[i] * c[n - 1 - i];
    c.push_back(total);
  }
  return c;
}

// Little Schroeder numbers s_1, s_2, ... (planar rooted trees with n leaves,
// internal arity >= 2) via (n+1) s_{n+1} = 3(2n-1) s_n - (n-2) s_{n-1}.
std::vector<std::int64_t> schroeder(int upto) {
  std::vector<std::int64_t> s{0, 1, 1};  // s[0] unused
  for (int n = 2; n < upto; ++n) {
    const std::int64_t next = (3 * (2 * n - 1) * s[n] - (n - 2) * s[n - 1]) / (n + 1);
    s.push_back(next);
  }
  return s;
}

// Brute-force subroot scan, independent of the leaf-span implementation:
// a vertex heads a non-trivial rightmost branch iff it is internal (so a
// rightmost edge arrives from below) and its own outgoing edge is not a
// rightmost edge.
struct FlatVertex {
  VertexPath path;
  bool internal = false;
  bool last_child = false;
};

void flatten(const PlanarTree& t, VertexPath& path, bool last, std::vector<FlatVertex>& out) {
  out.push_back(FlatVertex{path, !t.is_leaf(), last});
  for (size_t i = 0; i < t.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    flatten(t.children[i], path, i + 1 == t.children.size(), out);
    path.pop_back();
  }
}

std::set<VertexPath> brute_force_subroots(const PlanarTree& t) {
  std::vector<FlatVertex> vertices;
  VertexPath path;
  flatten(t, path, false, vertices);
  std::set<VertexPath> out;
  for (const auto& v : vertices)
    if (v.internal && (v.path.empty() || !v.last_child)) out.insert(v.path);
  return out;
}

int leaf_index_of(const PlanarTree& t, const VertexPath& target) {
  int index = 0;
  int found = -1;
  auto walk = [&](auto&& self, const PlanarTree& v, VertexPath& p) -> void {
    if (v.is_leaf()) {
      ++index;
      if (p == target) found = index;
      return;
    }
    for (size_t i = 0; i < v.children.size(); ++i) {
      p.push_back(static_cast<int>(i));
      self(self, v.children[i], p);
      p.pop_back();
    }
  };
  VertexPath p;
  walk(walk, t, p);
  return found;
}

// --- parsing and rendering -----------------------------------------------

TEST(TreeParse, Basics) {
  const PlanarTree t = parse_tree("((b,a),a)");
  EXPECT_EQ(leaf_count(t), 3);
  EXPECT_TRUE(is_binary(t));
  EXPECT_EQ(leaf_labels(t), (std::vector<std::string>{"b", "a", "a"}));
  EXPECT_FALSE(t.is_leaf());
  EXPECT_FALSE(t.children[0].is_leaf());
  EXPECT_TRUE(t.children[1].is_leaf());

  const PlanarTree corolla = parse_tree("(a,b,c)");
  EXPECT_EQ(leaf_count(corolla), 3);
  EXPECT_EQ(corolla.children.size(), 3u);
  EXPECT_FALSE(is_binary(corolla));

  EXPECT_EQ(parse_tree(" ( b , a ) "), parse_tree("(b,a)"));
}

TEST(TreeParse, Errors) {
  EXPECT_THROW(parse_tree("(a)"), TreeParseError);
  EXPECT_THROW(parse_tree(""), TreeParseError);
  EXPECT_THROW(parse_tree("(a,b"), TreeParseError);
  EXPECT_THROW(parse_tree("(a,b))"), TreeParseError);
  EXPECT_THROW(parse_tree("a b"), TreeParseError);
  try {
    parse_tree("(a,b))");
  } catch (const TreeParseError& e) {
    EXPECT_EQ(e.position, 5u);
  }
}

TEST(TreeRender, RoundTrip) {
  for (const char* text : {"((b,a),a)", "(a,b,c)", "x1", "(x1,((x2,x3),(x4,x5)),x6)"}) {
    EXPECT_EQ(render_tree(parse_tree(text)), text);
    EXPECT_EQ(parse_tree(render_tree(parse_tree(text))), parse_tree(text));
  }
}

TEST(TreeRender, RoundTripOnEnumeratedTrees) {
  for (int n = 1; n <= 6; ++n)
    for (const PlanarTree& t : enumerate_trees(n, false))
      EXPECT_EQ(parse_tree(render_tree(t)), t);
}

// --- subroots and distances ----------------------------------------------

TEST(Subroots, ExampleTree) {
  const PlanarTree t = parse_tree(kExampleTree);
  const auto subs = subroots(t);
  ASSERT_EQ(subs.size(), 4u);
  // Pre-order: r = (), a = (0), c = (0,0), e = (1,0).
  EXPECT_EQ(subs[0].subroot, VertexPath{});
  EXPECT_EQ(subs[1].subroot, (VertexPath{0}));
  EXPECT_EQ(subs[2].subroot, (VertexPath{0, 0}));
  EXPECT_EQ(subs[3].subroot, (VertexPath{1, 0}));
  EXPECT_EQ(subs[0].rightmost_leaf, 7);
  EXPECT_EQ(subs[0].distance, 3);
  EXPECT_EQ(subs[1].rightmost_leaf, 3);
  EXPECT_EQ(subs[1].distance, 1);
  EXPECT_EQ(subs[2].rightmost_leaf, 2);
  EXPECT_EQ(subs[2].distance, 1);
  EXPECT_EQ(subs[3].rightmost_leaf, 5);
  EXPECT_EQ(subs[3].distance, 1);
  // Branch of the root: r -> b -> f -> leaf 7.
  EXPECT_EQ(subs[0].branch.size(), 4u);
  EXPECT_EQ(subs[0].branch.front(), VertexPath{});
  EXPECT_EQ(subs[0].branch.back(), (VertexPath{1, 1, 1}));
}

TEST(Subroots, DistancesAtNonSubroots) {
  const PlanarTree t = parse_tree(kExampleTree);
  // b = (1) is not a subroot but still has m(b) = 7, d(b) = 2.
  EXPECT_EQ(distance_to_rightmost(t, {1}), std::make_pair(7, 2));
  EXPECT_EQ(distance_to_rightmost(t, {}), std::make_pair(7, 3));
  // Any leaf: itself with distance 0.
  EXPECT_EQ(distance_to_rightmost(t, {0, 0, 0}), std::make_pair(1, 0));
  EXPECT_THROW(distance_to_rightmost(t, {5}), std::out_of_range);
}

TEST(Subroots, SmallCases) {
  EXPECT_TRUE(subroots(leaf("a")).empty());
  // Left comb ((a,b),c): root (m = 3, d = 1) and left child (m = 2, d = 1).
  const auto subs = subroots(parse_tree("((a,b),c)"));
  ASSERT_EQ(subs.size(), 2u);
  EXPECT_EQ(subs[0].rightmost_leaf, 3);
  EXPECT_EQ(subs[0].distance, 1);
  EXPECT_EQ(subs[1].rightmost_leaf, 2);
  EXPECT_EQ(subs[1].distance, 1);
}

TEST(Subroots, MatchesBruteForceScan) {
  for (int n = 1; n <= 6; ++n) {
    for (const PlanarTree& t : enumerate_trees(n, false)) {
      std::set<VertexPath> got;
      for (const auto& s : subroots(t)) got.insert(s.subroot);
      EXPECT_EQ(got, brute_force_subroots(t)) << render_tree(t);
    }
  }
}

TEST(Subroots, BranchEndsAtRightmostLeaf) {
  for (int n = 1; n <= 6; ++n) {
    for (const PlanarTree& t : enumerate_trees(n, false)) {
      for (const auto& s : subroots(t)) {
        EXPECT_EQ(static_cast<int>(s.branch.size()), s.distance + 1);
        EXPECT_EQ(leaf_index_of(t, s.branch.back()), s.rightmost_leaf) << render_tree(t);
      }
    }
  }
}

TEST(Subroots, CountEqualsLocalRightmostLeaves) {
  for (int n = 1; n <= 8; ++n) {
    for (const PlanarTree& t : enumerate_trees(n, false)) {
      std::set<int> rightmost;
      for (const auto& s : subroots(t)) rightmost.insert(s.rightmost_leaf);
      EXPECT_EQ(rightmost.size(), subroots(t).size()) << render_tree(t);
    }
  }
}

// --- binarity ------------------------------------------------------------

TEST(Binary, DistanceCriterion) {
  // A tree is binary iff the subroot distances sum to n - 1.
  for (int n = 1; n <= 8; ++n) {
    for (const PlanarTree& t : enumerate_trees(n, false)) {
      int sum = 0;
      for (const auto& s : subroots(t)) sum += s.distance;
      if (is_binary(t)) {
        EXPECT_EQ(sum, n - 1) << render_tree(t);
      } else {
        EXPECT_LT(sum, n - 1) << render_tree(t);
      }
    }
  }
}

TEST(Binary, Examples) {
  EXPECT_TRUE(is_binary(parse_tree("((b,a),a)")));
  EXPECT_FALSE(is_binary(parse_tree("(a,b,c)")));
  EXPECT_TRUE(is_binary(leaf("a")));
}

// --- leaf partial order --------------------------------------------------

TEST(LeafOrder, SixLeafExample) {
  const LeafOrder order = leaf_partial_order(parse_tree("(x1,((x2,x3),(x4,x5)),x6)"));
  const std::set<std::pair<int, int>> expected{
      {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}, {2, 5}, {3, 5}, {4, 5}, {2, 3}};
  EXPECT_EQ(order.pairs, expected);
}

TEST(LeafOrder, SmallCases) {
  EXPECT_TRUE(leaf_partial_order(leaf("a")).pairs.empty());
  const LeafOrder comb = leaf_partial_order(parse_tree("(a,(b,c))"));
  EXPECT_EQ(comb.pairs, (std::set<std::pair<int, int>>{{1, 3}, {2, 3}}));
}

TEST(LeafOrder, ReflexiveClosureIsPartialOrder) {
  for (int n = 1; n <= 7; ++n) {
    for (const PlanarTree& t : enumerate_trees(n, false)) {
      const LeafOrder order = leaf_partial_order(t);
      std::vector<std::vector<bool>> rel(n + 1, std::vector<bool>(n + 1, false));
      for (int i = 1; i <= n; ++i) rel[i][i] = true;
      for (const auto& [a, b] : order.pairs) rel[a][b] = true;
      // Transitive closure (Warshall).
      std::vector<std::vector<bool>> closed = rel;
      for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j)
            if (closed[i][k] && closed[k][j]) closed[i][j] = true;
      // The generating pairs are already transitively closed.
      EXPECT_EQ(closed, rel) << render_tree(t);
      // Antisymmetry.
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          EXPECT_FALSE(closed[i][j] && closed[j][i]) << render_tree(t);
    }
  }
}

// --- enumeration ----------------------------------------------------------

TEST(Enumerate, BinaryCountsAreCatalan) {
  const auto expected = catalan(8);
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(static_cast<std::int64_t>(enumerate_trees(n, true).size()), expected[n - 1]);
}

TEST(Enumerate, AllTreeCountsAreSchroeder) {
  const auto expected = schroeder(9);
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(static_cast<std::int64_t>(enumerate_trees(n, false).size()), expected[n]);
}

TEST(Enumerate, SmallCases) {
  const auto single = enumerate_trees(1, false);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(single[0].is_leaf());

  const auto three = enumerate_trees(3, false);
  ASSERT_EQ(three.size(), 3u);  // two binary shapes plus the 3-corolla
  EXPECT_EQ(render_tree(three[0]), "(*,(*,*))");
  EXPECT_EQ(render_tree(three[1]), "((*,*),*)");
  EXPECT_EQ(render_tree(three[2]), "(*,*,*)");
}

TEST(Enumerate, NoDuplicates) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> seen;
    for (const PlanarTree& t : enumerate_trees(n, false)) {
      EXPECT_TRUE(seen.insert(render_tree(t)).second);
      EXPECT_EQ(leaf_count(t), n);
    }
  }
}

// --- grafting ------------------------------------------------------------

TEST(Graft, Identities) {
  const PlanarTree t = parse_tree("((b,a),a)");
  EXPECT_EQ(graft(leaf(), 1, t), t);
  EXPECT_EQ(graft(parse_tree("(x,y)"), 1, parse_tree("(u,v)")), parse_tree("((u,v),y)"));
  EXPECT_EQ(graft(parse_tree("(x,y)"), 2, leaf("z")), parse_tree("(x,z)"));
  EXPECT_THROW(graft(t, 0, t), std::out_of_range);
  EXPECT_THROW(graft(t, 4, t), std::out_of_range);
}

TEST(Graft, LeafCountIsAdditive) {
  // Deterministic pseudo-random pairs.
  const auto pool = enumerate_trees(5, false);
  std::uint64_t state = 88172645463325252ull;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int round = 0; round < 200; ++round) {
    const PlanarTree& host = pool[next() % pool.size()];
    const PlanarTree& scion = pool[next() % pool.size()];
    const int index = 1 + static_cast<int>(next() % leaf_count(host));
    const PlanarTree result = graft(host, index, scion);
    EXPECT_EQ(leaf_count(result), leaf_count(host) + leaf_count(scion) - 1);
  }
}

// --- dot -----------------------------------------------------------------

TEST(Dot, MarksSubroots) {
  const std::string dot = tree_to_dot(parse_tree("((b,a),a)"));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("style=filled"), std::string::npos);
  EXPECT_NE(dot.find("label=\"b\""), std::string::npos);
  // Two subroots: root and the left child.
  size_t count = 0;
  for (size_t pos = dot.find("style=filled"); pos != std::string::npos;
       pos = dot.find("style=filled", pos + 1))
    ++count;
  EXPECT_EQ(count, 2u);
}

}  // namespace
