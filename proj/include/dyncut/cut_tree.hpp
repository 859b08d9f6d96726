#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "dyncut/error.hpp"
#include "dyncut/graph.hpp"
#include "dyncut/mincut.hpp"
#include "dyncut/tree.hpp"

namespace dyncut {

namespace detail {

inline void check_same_vertices(const std::vector<VertexId>& tree_vertices,
                                const Graph& graph) {
  if (tree_vertices != graph.vertices()) {
    throw Error(ErrorCode::vertex_set_mismatch,
                "tree spans " + std::to_string(tree_vertices.size()) +
                    " vertices, graph has " + std::to_string(graph.vertex_count()));
  }
}

/// Vertices thin-connected to `root`, sorted.
inline std::vector<VertexId> thin_component(const IntermediateTree& tree, VertexId root) {
  std::vector<VertexId> out{root};
  std::set<VertexId> seen{root};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const VertexId x = out[i];
    for (VertexId y : tree.neighbors(x)) {
      if (!tree.label(x, y).fat() && seen.insert(y).second) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void check_spanning(const IntermediateTree& tree) {
  if (tree.empty()) return;
  const auto vs = tree.vertices();
  if (tree.edge_count() + 1 != vs.size() ||
      tree.reachable(vs.front(), vs.front()).size() != vs.size()) {
    throw Error(ErrorCode::invalid_intermediate, "edges do not form a spanning tree");
  }
}

}  // namespace detail

/// Checks that every fat edge's induced bipartition costs exactly its label.
inline void verify_fat_edges(const IntermediateTree& tree, const Graph& graph) {
  for (const auto& [e, label] : tree.edges()) {
    if (!label.fat()) continue;
    const Weight induced = cut_cost(graph, tree.side(e.first, e.second));
    if (induced != label.cost) {
      throw Error(ErrorCode::invalid_intermediate,
                  "fat edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                      "} labelled " + std::to_string(label.cost) + " induces a cut of cost " +
                      std::to_string(induced));
    }
  }
}

struct Completion {
  CutTree tree;
  std::uint64_t cuts_used = 0;
};

/// Unfolds every compound node of an intermediate tree into singletons.
///
/// Each step takes the node holding the smallest vertex id, contracts the
/// subtrees hanging off it, splits it by a minimum cut between its two
/// smallest vertices and reattaches the subtrees to whichever half they fell
/// on. Exactly one cut computation per thin edge.
inline Completion complete(IntermediateTree tree, const Graph& graph, bool verify = false) {
  detail::check_same_vertices(tree.vertices(), graph);
  detail::check_spanning(tree);
  if (verify) verify_fat_edges(tree, graph);

  Completion out;
  std::set<VertexId> settled;
  for (VertexId root : tree.vertices()) {
    if (settled.contains(root)) continue;
    auto node = detail::thin_component(tree, root);
    while (node.size() > 1) {
      const VertexId u = node[0];
      const VertexId v = node[1];

      struct Attachment {
        VertexId inner, outer;
      };
      std::vector<Attachment> attached;
      std::vector<std::vector<VertexId>> groups;
      for (VertexId x : node) {
        for (VertexId y : tree.neighbors(x)) {
          if (tree.label(x, y).fat()) {
            attached.push_back({x, y});
            groups.push_back(tree.reachable(y, x));
          }
        }
      }

      const auto contracted = contract(graph, groups);
      const Cut cut = min_cut(contracted.graph, u, v);
      ++out.cuts_used;
      auto on_u_side = [&](VertexId w) { return cut.contains(contracted.node_of.at(w)); };

      std::vector<VertexId> side_u, side_v;
      for (VertexId x : node) (on_u_side(x) ? side_u : side_v).push_back(x);
      for (VertexId x : node) {
        const auto nbrs = tree.neighbors(x);
        for (VertexId y : nbrs) {
          if (x < y && !tree.label(x, y).fat()) tree.remove_edge(x, y);
        }
      }
      for (VertexId x : side_u) {
        if (x != u) tree.add_edge(u, x, {0, EdgeKind::thin});
      }
      for (VertexId x : side_v) {
        if (x != v) tree.add_edge(v, x, {0, EdgeKind::thin});
      }
      tree.add_edge(u, v, {cut.cost, EdgeKind::fat});

      for (const auto& [inner, outer] : attached) {
        const bool outer_u = on_u_side(outer);
        const VertexId anchor = on_u_side(inner) == outer_u ? inner : (outer_u ? u : v);
        if (anchor != inner) tree.reconnect(outer, inner, anchor);
      }

      // Keep working on the half that still holds the smallest vertex; the
      // other half is picked up when the scan reaches it.
      node = std::move(side_u.front() < side_v.front() ? side_u : side_v);
    }
    settled.insert(node.begin(), node.end());
  }

  for (VertexId v : tree.vertices()) out.tree.add_vertex(v);
  for (const auto& [e, label] : tree.edges()) out.tree.add_edge(e.first, e.second, label.cost);
  return out;
}

/// Static construction: n-1 cut computations starting from the all-thin star
/// on the smallest vertex.
inline CutTree static_build(const Graph& graph) {
  if (graph.empty()) throw Error(ErrorCode::empty_graph, "static_build on an empty graph");
  IntermediateTree star;
  const auto vs = graph.vertices();
  for (VertexId v : vs) star.add_vertex(v);
  for (std::size_t i = 1; i < vs.size(); ++i) star.add_edge(vs[0], vs[i], {0, EdgeKind::thin});
  return complete(std::move(star), graph).tree;
}

/// Connectivity of u and v: the cheapest label on their tree path.
inline Weight query_value(const CutTree& tree, VertexId u, VertexId v) {
  const auto steps = path(tree, u, v);
  Weight best = tree.label(steps.front().first, steps.front().second);
  for (const auto& [a, b] : steps) best = std::min(best, tree.label(a, b));
  return best;
}

/// Minimum u-v cut read off the tree: removes the cheapest path edge (the one
/// nearest to u on ties) and returns u's side.
inline Cut query_cut(const CutTree& tree, VertexId u, VertexId v) {
  const auto steps = path(tree, u, v);
  VertexPair best = steps.front();
  for (const auto& step : steps) {
    if (tree.label(step.first, step.second) < tree.label(best.first, best.second)) best = step;
  }
  return Cut{tree.side(best.first, best.second), tree.label(best.first, best.second)};
}

}  // namespace dyncut
