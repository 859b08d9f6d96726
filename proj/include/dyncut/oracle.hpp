#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dyncut/cut_tree.hpp"
#include "dyncut/error.hpp"
#include "dyncut/graph.hpp"
#include "dyncut/mincut.hpp"
#include "dyncut/tree.hpp"

// Brute-force ground truth. Nothing in here is used by the update routines;
// it exists so that tests and verify mode can check them independently.
namespace dyncut::oracle {

/// How connectivities are obtained: exhaustive bipartition enumeration
/// (independent of the flow kernel, n <= 12 only), one min_cut per pair, or
/// enumeration when small enough and flow otherwise.
enum class Mode { enumeration, flow, automatic };

inline constexpr std::size_t max_enumeration_vertices = 12;

using Connectivity = std::map<VertexPair, Weight>;

namespace detail {

inline void check_enumerable(const Graph& graph) {
  if (graph.vertex_count() > max_enumeration_vertices) {
    throw Error(ErrorCode::enumeration_too_large,
                std::to_string(graph.vertex_count()) + " vertices, limit is " +
                    std::to_string(max_enumeration_vertices));
  }
}

/// Calls f(mask, cost) once per bipartition, where bit i of mask says whether
/// the i-th smallest vertex is on the side not holding the largest vertex.
template <typename F>
void for_each_bipartition(const Graph& graph, F&& f) {
  check_enumerable(graph);
  const auto vs = graph.vertices();
  const std::size_t n = vs.size();
  if (n < 2) return;
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(vs[i], i);
  std::vector<std::tuple<std::size_t, std::size_t, Weight>> edges;
  for (const auto& [u, v, w] : graph.edges()) edges.emplace_back(index.at(u), index.at(v), w);

  const std::uint32_t limit = std::uint32_t{1} << (n - 1);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    Weight cost = 0;
    for (const auto& [a, b, w] : edges) {
      if (((mask >> a) & 1U) != ((mask >> b) & 1U)) cost += w;
    }
    f(mask, cost);
  }
}

inline std::vector<VertexId> side_of_mask(const std::vector<VertexId>& vs, std::uint32_t mask) {
  std::vector<VertexId> side;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if ((mask >> i) & 1U) side.push_back(vs[i]);
  }
  return side;
}

}  // namespace detail

/// lambda(u,v) for every unordered pair u < v.
inline Connectivity all_pairs_connectivity(const Graph& graph, Mode mode = Mode::automatic) {
  if (graph.vertex_count() < 2) {
    throw Error(ErrorCode::empty_graph, "connectivity needs at least two vertices");
  }
  if (mode == Mode::automatic) {
    mode = graph.vertex_count() <= max_enumeration_vertices ? Mode::enumeration : Mode::flow;
  }
  const auto vs = graph.vertices();
  const std::size_t n = vs.size();
  Connectivity out;

  if (mode == Mode::flow) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) out[{vs[i], vs[j]}] = min_cut(graph, vs[i], vs[j]).cost;
    }
    return out;
  }

  std::vector<Weight> best(n * n, std::numeric_limits<Weight>::max());
  detail::for_each_bipartition(graph, [&](std::uint32_t mask, Weight cost) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (((mask >> i) & 1U) != ((mask >> j) & 1U) && cost < best[i * n + j]) {
          best[i * n + j] = cost;
        }
      }
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out[{vs[i], vs[j]}] = best[i * n + j];
  }
  return out;
}

inline Weight connectivity(const Connectivity& table, VertexId u, VertexId v) {
  return table.at(ordered_pair(u, v));
}

/// Every minimum s-t cut, each as the side containing s, by enumeration.
inline std::vector<Cut> all_min_cuts(const Graph& graph, VertexId s, VertexId t) {
  if (s == t) throw Error(ErrorCode::same_vertex, "vertex " + std::to_string(s));
  const auto vs = graph.vertices();
  std::vector<Cut> out;
  Weight best = std::numeric_limits<Weight>::max();
  detail::for_each_bipartition(graph, [&](std::uint32_t mask, Weight cost) {
    auto side = detail::side_of_mask(vs, mask);
    const bool has_s = std::binary_search(side.begin(), side.end(), s);
    const bool has_t = std::binary_search(side.begin(), side.end(), t);
    if (has_s == has_t || cost > best) return;
    if (cost < best) {
      best = cost;
      out.clear();
    }
    out.push_back({has_s ? std::move(side) : complement(graph, side), cost});
  });
  return out;
}

struct Violation {
  enum class Kind { not_spanning, induced_cost, not_minimum, query_mismatch };

  Kind kind;
  VertexId u = 0;
  VertexId v = 0;
  Weight expected = 0;
  Weight actual = 0;

  std::string describe() const {
    std::ostringstream out;
    switch (kind) {
      case Kind::not_spanning: out << "tree is not a spanning tree"; return out.str();
      case Kind::induced_cost: out << "edge {" << u << "," << v << "} labelled " << expected
                                   << " induces a cut of cost " << actual; break;
      case Kind::not_minimum: out << "edge {" << u << "," << v << "} labelled " << actual
                                  << " but connectivity is " << expected; break;
      case Kind::query_mismatch: out << "pair {" << u << "," << v << "} queries " << actual
                                     << " but connectivity is " << expected; break;
    }
    return out.str();
  }
};

struct VerificationReport {
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }

  std::string summary() const {
    if (passed()) return "pass";
    std::string out = std::to_string(violations.size()) + " violation(s): ";
    out += violations.front().describe();
    return out;
  }
};

/// Checks that (a) every tree edge induces a cut costing its label, (b) that
/// label is the connectivity of its endpoints, and (c) path minima give the
/// connectivity of every pair.
inline VerificationReport verify_cut_tree(const CutTree& tree, const Graph& graph,
                                          Mode mode = Mode::automatic) {
  if (tree.vertices() != graph.vertices()) {
    throw Error(ErrorCode::vertex_set_mismatch, "tree and graph have different vertex sets");
  }
  VerificationReport report;
  const auto vs = tree.vertices();
  if (vs.empty()) return report;
  if (tree.edge_count() + 1 != vs.size() ||
      tree.reachable(vs.front(), vs.front()).size() != vs.size()) {
    report.violations.push_back({Violation::Kind::not_spanning});
    return report;
  }
  if (vs.size() < 2) return report;

  const auto lambda = all_pairs_connectivity(graph, mode);
  for (const auto& [e, label] : tree.edges()) {
    const Weight induced = cut_cost(graph, tree.side(e.first, e.second));
    if (induced != label) {
      report.violations.push_back({Violation::Kind::induced_cost, e.first, e.second, label, induced});
    }
    const Weight conn = connectivity(lambda, e.first, e.second);
    if (conn != label) {
      report.violations.push_back({Violation::Kind::not_minimum, e.first, e.second, conn, label});
    }
  }
  for (const auto& [p, conn] : lambda) {
    const Weight got = query_value(tree, p.first, p.second);
    if (got != conn) {
      report.violations.push_back({Violation::Kind::query_mismatch, p.first, p.second, conn, got});
    }
  }
  return report;
}

enum class BendMode { absorb, evict };

/// Reshapes `moving` along the side of `shelter`: absorb takes the union,
/// evict removes the shelter side. The cost is recomputed in `graph`.
inline Cut bend_cut(const Graph& graph, const Cut& moving, const Cut& shelter, BendMode mode) {
  const auto a = dyncut::detail::sorted_unique(moving.side);
  const auto x = dyncut::detail::sorted_unique(shelter.side);
  for (VertexId v : x) {
    if (!graph.has_vertex(v)) throw Error(ErrorCode::unknown_vertex, "vertex " + std::to_string(v));
  }
  std::vector<VertexId> side;
  if (mode == BendMode::absorb) {
    std::set_union(a.begin(), a.end(), x.begin(), x.end(), std::back_inserter(side));
  } else {
    std::set_difference(a.begin(), a.end(), x.begin(), x.end(), std::back_inserter(side));
  }
  const Weight cost = cut_cost(graph, side);
  return Cut{std::move(side), cost};
}

}  // namespace dyncut::oracle
