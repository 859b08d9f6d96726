#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_util.hpp"

using namespace dyncut;
using namespace dyncut::testing;

namespace {

struct Counted {
  CutTree tree;
  std::uint64_t cuts;
};

Counted counted_build(const Graph& g) {
  const auto start = cut_computations();
  CutTree tree = static_build(g);
  return {std::move(tree), cut_computations() - start};
}

IntermediateTree thin_star(const Graph& g) {
  IntermediateTree t;
  const auto vs = g.vertices();
  for (VertexId v : vs) t.add_vertex(v);
  for (std::size_t i = 1; i < vs.size(); ++i) t.add_edge(vs[0], vs[i], {0, EdgeKind::thin});
  return t;
}

/// Bipartition induced by a tree edge, as the side holding the smallest vertex.
template <typename Label>
std::vector<VertexId> normalized_side(const Tree<Label>& t, VertexId a, VertexId b) {
  auto side = t.side(a, b);
  if (side.front() != t.vertices().front()) side = t.side(b, a);
  return side;
}

}  // namespace

TEST(StaticBuild, PathGraph) {
  const auto [tree, cuts] = counted_build(path3());
  EXPECT_EQ(to_text(tree), "1 2 3\n2 3 2\n");
  EXPECT_EQ(cuts, 2u);
}

TEST(StaticBuild, Triangle) {
  const auto [tree, cuts] = counted_build(triangle());
  EXPECT_EQ(cuts, 2u);
  EXPECT_EQ(query_value(tree, 1, 2), 3);
  EXPECT_EQ(query_value(tree, 2, 3), 3);
  EXPECT_EQ(query_value(tree, 1, 3), 4);
  EXPECT_EQ(tree, triangle_tree());
}

TEST(StaticBuild, SingleVertex) {
  const auto [tree, cuts] = counted_build(make_graph({5}, {}));
  EXPECT_EQ(tree.vertex_count(), 1u);
  EXPECT_EQ(tree.edge_count(), 0u);
  EXPECT_EQ(cuts, 0u);
}

TEST(StaticBuild, EmptyGraphIsRejected) {
  try {
    static_build(Graph{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::empty_graph);
  }
}

TEST(StaticBuild, DisconnectedGraphGetsZeroEdges) {
  const Graph g = make_graph({1, 2, 3, 4}, {{1, 2, 5}, {3, 4, 2}});
  const CutTree tree = static_build(g);
  EXPECT_TRUE(oracle::verify_cut_tree(tree, g).passed());
  EXPECT_EQ(query_value(tree, 1, 4), 0);
}

TEST(Complete, AllFatTreeIsAFixedPoint) {
  const CutTree tree = static_build(triangle());
  const auto done = complete(as_intermediate(tree), triangle());
  EXPECT_EQ(done.tree, tree);
  EXPECT_EQ(done.cuts_used, 0u);
}

TEST(Complete, ThinStarMatchesStaticBuild) {
  const auto done = complete(thin_star(path3()), path3());
  EXPECT_EQ(done.tree, static_build(path3()));
  EXPECT_EQ(done.cuts_used, 2u);
}

TEST(Complete, IntermediateAfterTriangleIncrease) {
  const Graph after = applied(triangle(), ChangeEvent::increase(1, 2, 2));
  IntermediateTree t;
  for (VertexId v : {1, 2, 3}) t.add_vertex(v);
  t.add_edge(2, 3, {5, EdgeKind::fat});
  t.add_edge(1, 3, {4, EdgeKind::thin});
  const auto done = complete(t, after, true);
  EXPECT_EQ(done.cuts_used, 1u);
  EXPECT_EQ(query_value(done.tree, 1, 2), 5);
  EXPECT_EQ(query_value(done.tree, 1, 3), 5);
  EXPECT_EQ(query_value(done.tree, 2, 3), 5);
  EXPECT_TRUE(oracle::verify_cut_tree(done.tree, after).passed());
}

TEST(Complete, VerifyModeRejectsWrongFatEdge) {
  IntermediateTree t;
  for (VertexId v : {1, 2, 3}) t.add_vertex(v);
  t.add_edge(2, 3, {9, EdgeKind::fat});
  t.add_edge(1, 3, {0, EdgeKind::thin});
  try {
    complete(t, triangle(), true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_intermediate);
  }
}

TEST(Complete, VertexSetMustMatch) {
  try {
    complete(thin_star(path3()), square());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::vertex_set_mismatch);
  }
}

TEST(Query, ValueIsPathMinimum) {
  const CutTree t = triangle_tree();
  EXPECT_EQ(query_value(t, 1, 2), 3);
  EXPECT_EQ(query_value(t, 1, 3), 4);
  const CutTree split = parse_tree("1 2 5\n2 3 0\n3 4 7\n");
  EXPECT_EQ(query_value(split, 1, 4), 0);
}

TEST(Query, CutRemovesCheapestPathEdge) {
  const Cut c = query_cut(triangle_tree(), 1, 2);
  EXPECT_EQ(c.side, (std::vector<VertexId>{1, 3}));
  EXPECT_EQ(c.cost, 3);

  const Cut p = query_cut(static_build(path3()), 1, 3);
  EXPECT_EQ(p.side, (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(p.cost, 2);

  const Cut r = query_cut(static_build(triangle()), 2, 1);
  EXPECT_EQ(r.side, (std::vector<VertexId>{2}));
  EXPECT_EQ(r.cost, 3);
}

TEST(Query, TiesPreferEdgeNearestToFirstVertex) {
  const CutTree t = parse_tree("1 2 2\n2 3 2\n");
  EXPECT_EQ(query_cut(t, 1, 3).side, (std::vector<VertexId>{1}));
  EXPECT_EQ(query_cut(t, 3, 1).side, (std::vector<VertexId>{3}));
}

TEST(Query, Errors) {
  const CutTree t = triangle_tree();
  try {
    query_value(t, 2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::same_vertex);
  }
  try {
    query_cut(t, 2, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::vertex_missing);
  }
}

TEST(Path, Examples) {
  EXPECT_EQ(path(static_build(path3()), 1, 3), (std::vector<VertexPair>{{1, 2}, {2, 3}}));
  EXPECT_EQ(path(triangle_tree(), 1, 2), (std::vector<VertexPair>{{1, 3}, {3, 2}}));
  EXPECT_EQ(path(triangle_tree(), 3, 2), (std::vector<VertexPair>{{3, 2}}));
  EXPECT_EQ(path(as_intermediate(triangle_tree()), 2, 1), (std::vector<VertexPair>{{2, 3}, {3, 1}}));
}

TEST(TreeText, RoundTrip) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(rng, 8, 0.4, 9);
    const CutTree t = static_build(g);
    EXPECT_EQ(parse_tree(to_text(t)), t);
  }
  const auto only = std::vector<VertexId>{4};
  EXPECT_EQ(parse_tree("", only).vertices(), only);
}

TEST(CutTreeProperty, StaticBuildIsValidWithNMinusOneCuts) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const Graph g = random_graph(rng, n, trial % 3 == 0 ? 0.2 : 0.5, 10);
    const auto [tree, cuts] = counted_build(g);
    EXPECT_EQ(cuts, n - 1);
    const auto report = oracle::verify_cut_tree(tree, g, oracle::Mode::enumeration);
    EXPECT_TRUE(report.passed()) << report.summary();
  }
}

TEST(CutTreeProperty, CompleteKeepsFatEdgeCuts) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, 9, 0.45, 10);
    IntermediateTree t = as_intermediate(static_build(g));
    std::size_t thin = 0;
    std::set<std::pair<std::vector<VertexId>, Weight>> fat_cuts;
    for (auto& [e, label] : t.edges()) {
      if (rng() % 2 == 0) {
        t.label(e.first, e.second) = {label.cost + 3, EdgeKind::thin};
        ++thin;
      }
    }
    for (const auto& [e, label] : t.edges()) {
      if (label.fat()) fat_cuts.emplace(normalized_side(t, e.first, e.second), label.cost);
    }

    const auto done = complete(t, g, true);
    EXPECT_EQ(done.cuts_used, thin);
    std::set<std::pair<std::vector<VertexId>, Weight>> result_cuts;
    for (const auto& [e, w] : done.tree.edges()) {
      result_cuts.emplace(normalized_side(done.tree, e.first, e.second), w);
    }
    for (const auto& c : fat_cuts) EXPECT_TRUE(result_cuts.contains(c));
    EXPECT_TRUE(oracle::verify_cut_tree(done.tree, g).passed());
  }
}
