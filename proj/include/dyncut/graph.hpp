#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "dyncut/error.hpp"

namespace dyncut {

using VertexId = std::uint64_t;
using Weight = std::int64_t;
using VertexPair = std::pair<VertexId, VertexId>;

inline VertexPair ordered_pair(VertexId a, VertexId b) noexcept {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

/// Undirected graph with strictly positive integer edge weights.
///
/// Vertex ids are caller supplied and never renumbered. Adjacency is kept in
/// ordered maps so that every traversal is deterministic.
class Graph {
 public:
  using Adjacency = std::map<VertexId, Weight>;

  Graph() = default;

  bool has_vertex(VertexId v) const { return adj_.contains(v); }

  bool has_edge(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.contains(v);
  }

  /// Weight of {u,v}, or 0 when the edge is absent.
  Weight weight(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    if (it == adj_.end()) return 0;
    auto jt = it->second.find(v);
    return jt == it->second.end() ? 0 : jt->second;
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  bool empty() const noexcept { return adj_.empty(); }

  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  const Adjacency& neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) {
      throw Error(ErrorCode::vertex_missing, "vertex " + std::to_string(v));
    }
    return it->second;
  }

  const std::map<VertexId, Adjacency>& adjacency() const noexcept { return adj_; }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
  }

  /// Edges as (u, v, w) with u < v, in ascending (u, v) order.
  std::vector<std::tuple<VertexId, VertexId, Weight>> edges() const {
    std::vector<std::tuple<VertexId, VertexId, Weight>> out;
    out.reserve(edges_);
    for (const auto& [u, nbrs] : adj_) {
      for (const auto& [v, w] : nbrs) {
        if (u < v) out.emplace_back(u, v, w);
      }
    }
    return out;
  }

  void add_vertex(VertexId v) {
    if (has_vertex(v)) {
      throw Error(ErrorCode::vertex_exists, "vertex " + std::to_string(v));
    }
    adj_.emplace(v, Adjacency{});
  }

  void remove_vertex(VertexId v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) {
      throw Error(ErrorCode::vertex_missing, "vertex " + std::to_string(v));
    }
    if (!it->second.empty()) {
      throw Error(ErrorCode::vertex_not_isolated,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(it->second.size()));
    }
    adj_.erase(it);
  }

  void add_edge(VertexId u, VertexId v, Weight w) {
    check_endpoints(u, v);
    if (w <= 0) {
      throw Error(ErrorCode::invalid_weight, "edge weight must be positive");
    }
    if (has_edge(u, v)) throw Error(ErrorCode::edge_exists, edge_name(u, v));
    adj_[u][v] = w;
    adj_[v][u] = w;
    ++edges_;
  }

  /// Adds w to {u,v}, inserting the edge when absent. Used at ingestion so
  /// that parallel edges collapse into one summed edge.
  void merge_edge(VertexId u, VertexId v, Weight w) {
    if (has_edge(u, v)) {
      increase(u, v, w);
    } else {
      add_edge(u, v, w);
    }
  }

  void remove_edge(VertexId u, VertexId v) {
    check_endpoints(u, v);
    if (!has_edge(u, v)) throw Error(ErrorCode::edge_missing, edge_name(u, v));
    adj_[u].erase(v);
    adj_[v].erase(u);
    --edges_;
  }

  void increase(VertexId u, VertexId v, Weight delta) {
    check_endpoints(u, v);
    if (!has_edge(u, v)) throw Error(ErrorCode::edge_missing, edge_name(u, v));
    if (delta <= 0) throw Error(ErrorCode::invalid_delta, "delta must be positive");
    adj_[u][v] += delta;
    adj_[v][u] += delta;
  }

  /// Strict decrease; a delta equal to the current weight is a removal and
  /// must go through remove_edge.
  void decrease(VertexId u, VertexId v, Weight delta) {
    check_endpoints(u, v);
    if (!has_edge(u, v)) throw Error(ErrorCode::edge_missing, edge_name(u, v));
    const Weight w = weight(u, v);
    if (delta <= 0 || delta >= w) {
      throw Error(ErrorCode::invalid_delta,
                  "decrease of " + edge_name(u, v) + " (weight " +
                      std::to_string(w) + ") by " + std::to_string(delta));
    }
    adj_[u][v] -= delta;
    adj_[v][u] -= delta;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static std::string edge_name(VertexId u, VertexId v) {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
  }

  void check_endpoints(VertexId u, VertexId v) const {
    if (u == v) throw Error(ErrorCode::self_loop, edge_name(u, v));
    for (VertexId x : {u, v}) {
      if (!has_vertex(x)) {
        throw Error(ErrorCode::vertex_missing, "vertex " + std::to_string(x));
      }
    }
  }

  std::map<VertexId, Adjacency> adj_;
  std::size_t edges_ = 0;
};

enum class ChangeKind {
  add_vertex,
  remove_vertex,
  add_edge,
  remove_edge,
  increase_weight,
  decrease_weight,
};

/// One atomic change. `v` and `delta` are unused for vertex events; `delta` is
/// unused for remove_edge (the removed amount is the current weight).
struct ChangeEvent {
  ChangeKind kind = ChangeKind::add_vertex;
  VertexId u = 0;
  VertexId v = 0;
  Weight delta = 0;

  static ChangeEvent add_vertex(VertexId x) { return {ChangeKind::add_vertex, x, 0, 0}; }
  static ChangeEvent remove_vertex(VertexId x) { return {ChangeKind::remove_vertex, x, 0, 0}; }
  static ChangeEvent add_edge(VertexId a, VertexId b, Weight w) {
    return {ChangeKind::add_edge, a, b, w};
  }
  static ChangeEvent remove_edge(VertexId a, VertexId b) {
    return {ChangeKind::remove_edge, a, b, 0};
  }
  static ChangeEvent increase(VertexId a, VertexId b, Weight d) {
    return {ChangeKind::increase_weight, a, b, d};
  }
  static ChangeEvent decrease(VertexId a, VertexId b, Weight d) {
    return {ChangeKind::decrease_weight, a, b, d};
  }

  bool is_vertex_event() const noexcept {
    return kind == ChangeKind::add_vertex || kind == ChangeKind::remove_vertex;
  }

  friend bool operator==(const ChangeEvent&, const ChangeEvent&) = default;
};

/// Stream token of a change kind (`av`, `rv`, `ae`, `re`, `iw`, `dw`).
constexpr std::string_view token(ChangeKind kind) noexcept {
  switch (kind) {
    case ChangeKind::add_vertex: return "av";
    case ChangeKind::remove_vertex: return "rv";
    case ChangeKind::add_edge: return "ae";
    case ChangeKind::remove_edge: return "re";
    case ChangeKind::increase_weight: return "iw";
    case ChangeKind::decrease_weight: return "dw";
  }
  return "??";
}

/// Applies the event in place. On error the graph is left untouched.
inline void apply_change(Graph& graph, const ChangeEvent& e) {
  switch (e.kind) {
    case ChangeKind::add_vertex: graph.add_vertex(e.u); break;
    case ChangeKind::remove_vertex: graph.remove_vertex(e.u); break;
    case ChangeKind::add_edge: graph.add_edge(e.u, e.v, e.delta); break;
    case ChangeKind::remove_edge: graph.remove_edge(e.u, e.v); break;
    case ChangeKind::increase_weight: graph.increase(e.u, e.v, e.delta); break;
    case ChangeKind::decrease_weight: graph.decrease(e.u, e.v, e.delta); break;
  }
}

inline Graph applied(Graph graph, const ChangeEvent& e) {
  apply_change(graph, e);
  return graph;
}

/// The event that undoes `e`; needs the graph `e` is about to be applied to,
/// since remove_edge does not carry the removed weight.
inline ChangeEvent inverse(const Graph& before, const ChangeEvent& e) {
  switch (e.kind) {
    case ChangeKind::add_vertex: return ChangeEvent::remove_vertex(e.u);
    case ChangeKind::remove_vertex: return ChangeEvent::add_vertex(e.u);
    case ChangeKind::add_edge: return ChangeEvent::remove_edge(e.u, e.v);
    case ChangeKind::remove_edge:
      return ChangeEvent::add_edge(e.u, e.v, before.weight(e.u, e.v));
    case ChangeKind::increase_weight: return ChangeEvent::decrease(e.u, e.v, e.delta);
    case ChangeKind::decrease_weight: return ChangeEvent::increase(e.u, e.v, e.delta);
  }
  return e;
}

/// A bipartition, represented by one sorted side and its cost.
struct Cut {
  std::vector<VertexId> side;
  Weight cost = 0;

  bool contains(VertexId v) const {
    return std::binary_search(side.begin(), side.end(), v);
  }

  friend bool operator==(const Cut&, const Cut&) = default;
};

namespace detail {

inline std::vector<VertexId> sorted_unique(std::span<const VertexId> xs) {
  std::vector<VertexId> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Sum of weights of edges with exactly one endpoint in `side`.
inline Weight cut_cost(const Graph& graph, std::span<const VertexId> side) {
  const auto members = detail::sorted_unique(side);
  for (VertexId v : members) {
    if (!graph.has_vertex(v)) {
      throw Error(ErrorCode::unknown_vertex, "vertex " + std::to_string(v));
    }
  }
  Weight total = 0;
  for (VertexId v : members) {
    for (const auto& [x, w] : graph.neighbors(v)) {
      if (!std::binary_search(members.begin(), members.end(), x)) total += w;
    }
  }
  return total;
}

inline Weight cut_cost(const Graph& graph, std::initializer_list<VertexId> side) {
  return cut_cost(graph, std::span<const VertexId>(side.begin(), side.size()));
}

/// Complement of `side` within the graph's vertex set, sorted.
inline std::vector<VertexId> complement(const Graph& graph, std::span<const VertexId> side) {
  const auto members = detail::sorted_unique(side);
  std::vector<VertexId> out;
  for (const auto& [v, _] : graph.adjacency()) {
    if (!std::binary_search(members.begin(), members.end(), v)) out.push_back(v);
  }
  return out;
}

struct Contraction {
  Graph graph;
  /// Original vertex -> node of the contracted graph. A group is represented
  /// by its smallest member id; untouched vertices map to themselves.
  std::map<VertexId, VertexId> node_of;
};

/// Contracts each group to a single node; edge weights between nodes are
/// summed and edges inside a group vanish.
inline Contraction contract(const Graph& graph,
                            const std::vector<std::vector<VertexId>>& groups) {
  Contraction out;
  for (const auto& group : groups) {
    if (group.empty()) {
      throw Error(ErrorCode::overlapping_groups, "empty contraction group");
    }
    const VertexId rep = *std::min_element(group.begin(), group.end());
    for (VertexId v : group) {
      if (!graph.has_vertex(v)) {
        throw Error(ErrorCode::unknown_vertex, "vertex " + std::to_string(v));
      }
      if (!out.node_of.emplace(v, rep).second) {
        throw Error(ErrorCode::overlapping_groups,
                    "vertex " + std::to_string(v) + " in more than one group");
      }
    }
  }
  for (const auto& [v, _] : graph.adjacency()) out.node_of.emplace(v, v);

  for (const auto& [v, node] : out.node_of) {
    if (!out.graph.has_vertex(node)) out.graph.add_vertex(node);
  }
  for (const auto& [u, nbrs] : graph.adjacency()) {
    const VertexId nu = out.node_of.at(u);
    for (const auto& [v, w] : nbrs) {
      if (u >= v) continue;
      const VertexId nv = out.node_of.at(v);
      if (nu != nv) out.graph.merge_edge(nu, nv, w);
    }
  }
  return out;
}

/// Builds a graph from an edge list, merging parallel edges by summation.
inline Graph make_graph(std::span<const VertexId> vertices,
                        std::span<const std::tuple<VertexId, VertexId, Weight>> edges) {
  Graph g;
  for (VertexId v : vertices) {
    if (!g.has_vertex(v)) g.add_vertex(v);
  }
  for (const auto& [u, v, w] : edges) g.merge_edge(u, v, w);
  return g;
}

inline Graph make_graph(std::initializer_list<VertexId> vertices,
                        std::initializer_list<std::tuple<VertexId, VertexId, Weight>> edges) {
  return make_graph(std::span<const VertexId>(vertices.begin(), vertices.size()),
                    std::span<const std::tuple<VertexId, VertexId, Weight>>(
                        edges.begin(), edges.size()));
}

}  // namespace dyncut
