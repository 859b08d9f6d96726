#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dyncut/error.hpp"
#include "dyncut/graph.hpp"

namespace dyncut {

/// Process-wide number of min_cut invocations. Routines that report their own
/// cost count locally as well, so concurrent replays do not need this value.
inline std::atomic<std::uint64_t>& cut_computation_counter() noexcept {
  static std::atomic<std::uint64_t> counter{0};
  return counter;
}

inline std::uint64_t cut_computations() noexcept {
  return cut_computation_counter().load(std::memory_order_relaxed);
}

namespace detail {

/// Dinic's algorithm on an undirected network. Each undirected edge is a pair
/// of opposite arcs that serve as each other's residual arc.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : head_(n, -1), level_(n), cursor_(n) {}

  void add_undirected(int a, int b, Weight capacity) {
    arcs_.push_back({b, head_[a], capacity});
    head_[a] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({a, head_[b], capacity});
    head_[b] = static_cast<int>(arcs_.size()) - 1;
  }

  Weight max_flow(int s, int t) {
    Weight total = 0;
    while (build_levels(s, t)) {
      std::copy(head_.begin(), head_.end(), cursor_.begin());
      while (Weight pushed = augment(s, t, std::numeric_limits<Weight>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  /// Vertices reachable from s over arcs with positive residual capacity.
  std::vector<char> reachable_from(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        const int y = arcs_[a].to;
        if (arcs_[a].residual > 0 && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    Weight residual;
  };

  bool build_levels(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue{s};
    level_[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int x = queue[i];
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].residual > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[x] + 1;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Weight augment(int x, int t, Weight limit) {
    if (x == t) return limit;
    for (int& a = cursor_[x]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.residual <= 0 || level_[arc.to] != level_[x] + 1) continue;
      if (Weight got = augment(arc.to, t, std::min(limit, arc.residual))) {
        arc.residual -= got;
        arcs_[a ^ 1].residual += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

inline std::vector<VertexId> component_of(const Graph& graph, VertexId s) {
  std::vector<VertexId> seen{s};
  std::vector<VertexId> stack{s};
  std::set<VertexId> mark{s};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const auto& [y, _] : graph.neighbors(x)) {
      if (mark.insert(y).second) {
        seen.push_back(y);
        stack.push_back(y);
      }
    }
  }
  std::sort(seen.begin(), seen.end());
  return seen;
}

}  // namespace detail

/// Minimum s-t cut. The returned side is the set of vertices reachable from s
/// in the residual network of a maximum flow, which makes it the unique
/// inclusion-minimal minimum cut side containing s.
///
/// Every call counts as one cut computation, including the disconnected
/// short-circuit.
inline Cut min_cut(const Graph& graph, VertexId s, VertexId t) {
  if (s == t) throw Error(ErrorCode::same_vertex, "vertex " + std::to_string(s));
  for (VertexId x : {s, t}) {
    if (!graph.has_vertex(x)) {
      throw Error(ErrorCode::vertex_missing, "vertex " + std::to_string(x));
    }
  }
  cut_computation_counter().fetch_add(1, std::memory_order_relaxed);

  auto component = detail::component_of(graph, s);
  if (!std::binary_search(component.begin(), component.end(), t)) {
    return Cut{std::move(component), 0};
  }

  // Only the shared component takes part in the flow.
  std::map<VertexId, int> index;
  for (VertexId v : component) index.emplace(v, static_cast<int>(index.size()));
  detail::FlowNetwork net(component.size());
  for (VertexId u : component) {
    for (const auto& [v, w] : graph.neighbors(u)) {
      if (u < v) net.add_undirected(index.at(u), index.at(v), w);
    }
  }
  const Weight flow = net.max_flow(index.at(s), index.at(t));
  const auto reach = net.reachable_from(index.at(s));

  Cut cut;
  cut.cost = flow;
  for (VertexId v : component) {
    if (reach[index.at(v)]) cut.side.push_back(v);
  }
  return cut;
}

}  // namespace dyncut
