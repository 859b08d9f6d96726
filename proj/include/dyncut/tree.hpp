#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dyncut/error.hpp"
#include "dyncut/graph.hpp"

namespace dyncut {

/// Undirected tree (or forest while under construction) on caller-supplied
/// vertex ids with one Label per edge. Edges are keyed by their ordered
/// endpoint pair, so iteration order is deterministic.
template <typename Label>
class Tree {
 public:
  using label_type = Label;

  bool has_vertex(VertexId v) const { return adj_.contains(v); }

  bool has_edge(VertexId u, VertexId v) const {
    return edges_.contains(ordered_pair(u, v));
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return adj_.empty(); }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
  }

  const std::map<VertexPair, Label>& edges() const noexcept { return edges_; }

  const std::set<VertexId>& neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) {
      throw Error(ErrorCode::vertex_missing, "tree vertex " + std::to_string(v));
    }
    return it->second;
  }

  const Label& label(VertexId u, VertexId v) const {
    auto it = edges_.find(ordered_pair(u, v));
    if (it == edges_.end()) throw missing_edge(u, v);
    return it->second;
  }

  Label& label(VertexId u, VertexId v) {
    auto it = edges_.find(ordered_pair(u, v));
    if (it == edges_.end()) throw missing_edge(u, v);
    return it->second;
  }

  void add_vertex(VertexId v) {
    if (!adj_.emplace(v, std::set<VertexId>{}).second) {
      throw Error(ErrorCode::vertex_exists, "tree vertex " + std::to_string(v));
    }
  }

  /// Removes v together with its incident edges.
  void remove_vertex(VertexId v) {
    const auto nbrs = neighbors(v);
    for (VertexId x : nbrs) remove_edge(v, x);
    adj_.erase(v);
  }

  void add_edge(VertexId u, VertexId v, Label label) {
    if (u == v) throw Error(ErrorCode::self_loop, "tree edge at " + std::to_string(u));
    for (VertexId x : {u, v}) {
      if (!has_vertex(x)) {
        throw Error(ErrorCode::vertex_missing, "tree vertex " + std::to_string(x));
      }
    }
    if (!edges_.emplace(ordered_pair(u, v), std::move(label)).second) {
      throw Error(ErrorCode::edge_exists, edge_name(u, v));
    }
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  Label remove_edge(VertexId u, VertexId v) {
    auto it = edges_.find(ordered_pair(u, v));
    if (it == edges_.end()) throw missing_edge(u, v);
    Label out = std::move(it->second);
    edges_.erase(it);
    adj_[u].erase(v);
    adj_[v].erase(u);
    return out;
  }

  /// Moves the edge {from, pivot} to {to, pivot}, keeping its label.
  void reconnect(VertexId pivot, VertexId from, VertexId to) {
    add_edge(pivot, to, remove_edge(pivot, from));
  }

  /// Vertices on u's side once the edge {u,v} is removed, sorted.
  std::vector<VertexId> side(VertexId u, VertexId v) const {
    if (!has_edge(u, v)) throw missing_edge(u, v);
    return reachable(u, v);
  }

  /// Vertices reachable from `root` without stepping from `root` to
  /// `blocked`; `blocked` need not be adjacent. Sorted.
  std::vector<VertexId> reachable(VertexId root, VertexId blocked) const {
    std::vector<VertexId> out{root};
    std::set<VertexId> seen{root, blocked};
    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : neighbors(x)) {
        if (seen.insert(y).second) {
          out.push_back(y);
          stack.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  static std::string edge_name(VertexId u, VertexId v) {
    return "tree edge {" + std::to_string(u) + "," + std::to_string(v) + "}";
  }
  static Error missing_edge(VertexId u, VertexId v) {
    return Error(ErrorCode::edge_missing, edge_name(u, v));
  }

  std::map<VertexId, std::set<VertexId>> adj_;
  std::map<VertexPair, Label> edges_;
};

/// Gomory-Hu tree: every edge label is the cost of the minimum cut between
/// its endpoints that the edge induces.
using CutTree = Tree<Weight>;

enum class EdgeKind { thin, fat };

/// Edge of an intermediate tree. Fat edges stand for verified minimum cuts;
/// thin edges only tie the vertices of one compound node together and carry
/// whatever cost they had before.
struct TreeEdge {
  Weight cost = 0;
  EdgeKind kind = EdgeKind::thin;

  bool fat() const noexcept { return kind == EdgeKind::fat; }
  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

using IntermediateTree = Tree<TreeEdge>;

inline Weight cost_of(Weight w) noexcept { return w; }
inline Weight cost_of(const TreeEdge& e) noexcept { return e.cost; }

/// The unique tree path from u to v as an oriented edge sequence.
template <typename Label>
std::vector<VertexPair> path(const Tree<Label>& tree, VertexId u, VertexId v) {
  for (VertexId x : {u, v}) {
    if (!tree.has_vertex(x)) {
      throw Error(ErrorCode::vertex_missing, "tree vertex " + std::to_string(x));
    }
  }
  if (u == v) throw Error(ErrorCode::same_vertex, "vertex " + std::to_string(u));

  std::map<VertexId, VertexId> parent{{v, v}};
  std::vector<VertexId> queue{v};
  for (std::size_t i = 0; i < queue.size() && !parent.contains(u); ++i) {
    for (VertexId y : tree.neighbors(queue[i])) {
      if (parent.emplace(y, queue[i]).second) queue.push_back(y);
    }
  }
  if (!parent.contains(u)) {
    throw Error(ErrorCode::internal_invariant_violation,
                "tree is disconnected between " + std::to_string(u) + " and " +
                    std::to_string(v));
  }
  std::vector<VertexPair> out;
  for (VertexId x = u; x != v; x = parent.at(x)) out.emplace_back(x, parent.at(x));
  return out;
}

/// IntermediateTree view of a finished tree: every edge fat.
inline IntermediateTree as_intermediate(const CutTree& tree) {
  IntermediateTree out;
  for (VertexId v : tree.vertices()) out.add_vertex(v);
  for (const auto& [e, w] : tree.edges()) out.add_edge(e.first, e.second, {w, EdgeKind::fat});
  return out;
}

/// `u v cost` per edge with u < v, ascending by (u, v).
inline std::string to_text(const CutTree& tree) {
  std::ostringstream out;
  for (const auto& [e, w] : tree.edges()) {
    out << e.first << ' ' << e.second << ' ' << w << '\n';
  }
  return out.str();
}

/// Parses to_text output. Vertices that only appear in `extra_vertices` are
/// added as well (an edgeless single-vertex tree has no lines).
inline CutTree parse_tree(std::string_view text, std::span<const VertexId> extra_vertices = {}) {
  CutTree tree;
  for (VertexId v : extra_vertices) {
    if (!tree.has_vertex(v)) tree.add_vertex(v);
  }
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    VertexId u = 0, v = 0;
    Weight w = 0;
    std::string rest;
    if (!(fields >> u >> v >> w) || (fields >> rest)) {
      throw Error(ErrorCode::syntax_error, "tree line " + std::to_string(lineno));
    }
    for (VertexId x : {u, v}) {
      if (!tree.has_vertex(x)) tree.add_vertex(x);
    }
    tree.add_edge(u, v, w);
  }
  return tree;
}

}  // namespace dyncut
