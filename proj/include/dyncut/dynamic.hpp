#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "dyncut/cut_tree.hpp"
#include "dyncut/error.hpp"
#include "dyncut/graph.hpp"
#include "dyncut/mincut.hpp"
#include "dyncut/tree.hpp"

namespace dyncut {

enum class BridgeStatus { existing_bridge, new_bridge, non_bridge };

/// Classifies {b,d} from the tree alone: an existing edge is a bridge iff its
/// weight equals the connectivity of its endpoints, and an edge between
/// vertices of connectivity 0 becomes a new bridge.
inline BridgeStatus detect_bridge(const CutTree& tree, const Graph& graph, VertexId b,
                                  VertexId d) {
  const Weight lambda = query_value(tree, b, d);
  if (lambda == 0) return BridgeStatus::new_bridge;
  if (graph.weight(b, d) == lambda) return BridgeStatus::existing_bridge;
  return BridgeStatus::non_bridge;
}

/// How the former tree edges handled by one update were settled.
///
/// For increases the reused b-d cut counts as `path_reused` and each cut
/// computed while unfolding the path as `recomputed`. For decreases the fat
/// path edges count as `path_reused` and every thin edge lands in exactly one
/// of threshold / zero_or_bridge_edge / unfolded / revalidated / recomputed.
struct ReuseBreakdown {
  std::uint64_t bridge = 0;
  std::uint64_t new_bridge = 0;
  std::uint64_t path_reused = 0;
  std::uint64_t threshold = 0;
  std::uint64_t zero_or_bridge_edge = 0;
  std::uint64_t unfolded = 0;
  std::uint64_t revalidated = 0;
  std::uint64_t recomputed = 0;

  std::uint64_t total() const noexcept {
    return bridge + new_bridge + path_reused + threshold + zero_or_bridge_edge + unfolded +
           revalidated + recomputed;
  }

  ReuseBreakdown& operator+=(const ReuseBreakdown& o) noexcept {
    bridge += o.bridge;
    new_bridge += o.new_bridge;
    path_reused += o.path_reused;
    threshold += o.threshold;
    zero_or_bridge_edge += o.zero_or_bridge_edge;
    unfolded += o.unfolded;
    revalidated += o.revalidated;
    recomputed += o.recomputed;
    return *this;
  }

  friend bool operator==(const ReuseBreakdown&, const ReuseBreakdown&) = default;
};

struct UpdateStats {
  ChangeEvent event;
  std::uint64_t cuts_used = 0;
  /// n-1 for the graph the new tree belongs to.
  std::uint64_t static_equivalent = 0;
  /// Number of edges on the b-d path of the old tree; 0 for vertex events.
  std::size_t path_length = 0;
  BridgeStatus bridge = BridgeStatus::non_bridge;
  ReuseBreakdown reuse;
};

struct UpdateResult {
  CutTree tree;
  UpdateStats stats;
};

enum class ReuseRule { threshold, zero_or_bridge_edge, unfolded, revalidated };

constexpr std::string_view to_string(ReuseRule rule) noexcept {
  switch (rule) {
    case ReuseRule::threshold: return "threshold";
    case ReuseRule::zero_or_bridge_edge: return "zero-or-bridge-edge";
    case ReuseRule::unfolded: return "unfolded";
    case ReuseRule::revalidated: return "revalidated";
  }
  return "?";
}

/// Hooks into the decrease routine, used by tests and verify mode. Neither
/// hook may modify the tree.
struct DecreaseObserver {
  /// A thin edge turned fat while keeping its old label.
  std::function<void(VertexId u, VertexId v, Weight label, ReuseRule rule)> on_reuse;
  /// After the intermediate tree is built and after every loop iteration.
  std::function<void(const IntermediateTree&)> on_iteration;
};

namespace detail {

inline std::uint64_t static_cost(std::size_t n) noexcept { return n == 0 ? 0 : n - 1; }

inline void check_tree_matches(const CutTree& tree, const Graph& graph) {
  check_same_vertices(tree.vertices(), graph);
}

}  // namespace detail

inline UpdateResult update_add_vertex(CutTree tree, VertexId id) {
  if (tree.has_vertex(id)) {
    throw Error(ErrorCode::vertex_exists, "tree vertex " + std::to_string(id));
  }
  const bool attach = !tree.empty();
  const VertexId smallest = attach ? tree.vertices().front() : id;
  tree.add_vertex(id);
  if (attach) tree.add_edge(id, smallest, 0);

  UpdateResult out{std::move(tree), {}};
  out.stats.event = ChangeEvent::add_vertex(id);
  out.stats.static_equivalent = detail::static_cost(out.tree.vertex_count());
  return out;
}

/// Drops an isolated vertex and stars its orphaned subtrees onto the
/// smallest former tree neighbour with zero-cost edges.
inline UpdateResult update_remove_vertex(CutTree tree, VertexId id) {
  const auto nbrs = tree.neighbors(id);
  for (VertexId x : nbrs) {
    if (tree.label(id, x) != 0) {
      throw Error(ErrorCode::vertex_not_isolated,
                  "tree edge {" + std::to_string(id) + "," + std::to_string(x) +
                      "} has cost " + std::to_string(tree.label(id, x)));
    }
  }
  tree.remove_vertex(id);
  if (!nbrs.empty()) {
    const VertexId hub = *nbrs.begin();
    for (VertexId x : nbrs) {
      if (x != hub) tree.add_edge(hub, x, 0);
    }
  }

  UpdateResult out{std::move(tree), {}};
  out.stats.event = ChangeEvent::remove_vertex(id);
  out.stats.static_equivalent = detail::static_cost(out.tree.vertex_count());
  return out;
}

/// Edge insertion or weight increase of {b,d} by delta; `after` is `before`
/// with the change applied.
inline UpdateResult update_increase(CutTree tree, const Graph& before, const Graph& after,
                                    VertexId b, VertexId d, Weight delta) {
  detail::check_tree_matches(tree, before);
  if (delta <= 0 || after.weight(b, d) != before.weight(b, d) + delta) {
    throw Error(ErrorCode::invalid_delta, "graphs do not differ by an increase of {" +
                                              std::to_string(b) + "," + std::to_string(d) +
                                              "} by " + std::to_string(delta));
  }

  UpdateResult out;
  UpdateStats& stats = out.stats;
  stats.event = before.has_edge(b, d) ? ChangeEvent::increase(b, d, delta)
                                      : ChangeEvent::add_edge(b, d, delta);
  stats.static_equivalent = detail::static_cost(after.vertex_count());

  const auto steps = path(tree, b, d);
  stats.path_length = steps.size();
  stats.bridge = detect_bridge(tree, before, b, d);

  switch (stats.bridge) {
    case BridgeStatus::existing_bridge:
      tree.label(b, d) += delta;
      stats.reuse.bridge = 1;
      out.tree = std::move(tree);
      return out;

    case BridgeStatus::new_bridge:
      for (const auto& [x, y] : steps) {
        if (tree.label(x, y) == 0) {
          tree.remove_edge(x, y);
          tree.add_edge(b, d, after.weight(b, d));
          break;
        }
      }
      stats.reuse.new_bridge = 1;
      out.tree = std::move(tree);
      return out;

    case BridgeStatus::non_bridge:
      break;
  }

  // Off-path edges stay valid; the cheapest path edge (nearest b) is a
  // minimum b-d cut and stays valid with cost +delta; the rest of the path
  // collapses into compound nodes.
  VertexPair reused = steps.front();
  for (const auto& step : steps) {
    if (tree.label(step.first, step.second) < tree.label(reused.first, reused.second)) {
      reused = step;
    }
  }
  IntermediateTree intermediate = as_intermediate(tree);
  for (const auto& [x, y] : steps) intermediate.label(x, y).kind = EdgeKind::thin;
  auto& kept = intermediate.label(reused.first, reused.second);
  kept = {kept.cost + delta, EdgeKind::fat};

  auto completion = complete(std::move(intermediate), after);
  stats.cuts_used = completion.cuts_used;
  stats.reuse.path_reused = 1;
  stats.reuse.recomputed = completion.cuts_used;
  out.tree = std::move(completion.tree);
  return out;
}

namespace detail {

/// Thin-edge queue entry: most expensive first, then by endpoint ids.
struct QueuedEdge {
  Weight cost;
  VertexId lo;
  VertexId hi;

  QueuedEdge(Weight c, VertexId a, VertexId b) : cost(c), lo(std::min(a, b)), hi(std::max(a, b)) {}

  friend bool operator<(const QueuedEdge& x, const QueuedEdge& y) {
    if (x.cost != y.cost) return x.cost > y.cost;
    if (x.lo != y.lo) return x.lo < y.lo;
    return x.hi < y.hi;
  }
};

/// State of one run of the decrease routine: the intermediate tree, the set
/// of thin edges still to settle and the current vertex set of the b-d path.
class DecreaseRun {
 public:
  DecreaseRun(const CutTree& tree, const Graph& before, const Graph& after,
              const std::vector<VertexPair>& steps, Weight delta, const DecreaseObserver* observer)
      : before_(before), after_(after), observer_(observer), tree_(as_intermediate(tree)) {
    for (const auto& [x, y] : steps) {
      on_path_.insert(x);
      on_path_.insert(y);
    }
    for (const auto& [e, label] : tree.edges()) {
      if (on_path_.contains(e.first) && on_path_.contains(e.second)) {
        tree_.label(e.first, e.second).cost -= delta;
      } else {
        tree_.label(e.first, e.second).kind = EdgeKind::thin;
        queue_.emplace(label, e.first, e.second);
      }
    }
  }

  void run(UpdateStats& stats) {
    notify();
    while (!queue_.empty()) {
      const std::size_t before_size = queue_.size();
      step(stats);
      if (queue_.size() >= before_size) {
        throw Error(ErrorCode::internal_invariant_violation, "thin-edge queue did not shrink");
      }
      notify();
    }
  }

  CutTree result() const {
    CutTree out;
    for (VertexId v : tree_.vertices()) out.add_vertex(v);
    for (const auto& [e, label] : tree_.edges()) out.add_edge(e.first, e.second, label.cost);
    return out;
  }

 private:
  void notify() const {
    if (observer_ && observer_->on_iteration) observer_->on_iteration(tree_);
  }

  void report(VertexId u, VertexId v, Weight label, ReuseRule rule) const {
    if (observer_ && observer_->on_reuse) observer_->on_reuse(u, v, label, rule);
  }

  void step(UpdateStats& stats) {
    // Most expensive thin edge touching the path; thin edges never lie on it.
    auto it = queue_.begin();
    while (it != queue_.end() && !on_path_.contains(it->lo) && !on_path_.contains(it->hi)) ++it;
    if (it == queue_.end()) {
      throw Error(ErrorCode::internal_invariant_violation,
                  "no thin edge is incident to the b-d path");
    }
    const QueuedEdge edge = *it;
    queue_.erase(it);
    const VertexId v = on_path_.contains(edge.lo) ? edge.lo : edge.hi;
    const VertexId u = v == edge.lo ? edge.hi : edge.lo;
    const Weight stale = edge.cost;

    Weight threshold = -1;
    for (VertexId x : tree_.neighbors(v)) {
      if (!on_path_.contains(x)) continue;
      const Weight c = tree_.label(x, v).cost;
      threshold = threshold < 0 ? c : std::min(threshold, c);
    }

    tree_.label(u, v).kind = EdgeKind::fat;
    if (threshold >= stale) {
      ++stats.reuse.threshold;
      report(u, v, stale, ReuseRule::threshold);
      fatten_subtree(u, v, stats);
      return;
    }
    if (stale == 0 || before_.weight(u, v) == stale) {
      ++stats.reuse.zero_or_bridge_edge;
      report(u, v, stale, ReuseRule::zero_or_bridge_edge);
      fatten_subtree(u, v, stats);
      return;
    }

    // Every subtree at v except u's is shelved into one node; the cut can be
    // bent around each of them at no extra cost.
    std::vector<VertexId> others;
    std::vector<std::vector<VertexId>> groups;
    for (VertexId x : tree_.neighbors(v)) {
      if (x == u) continue;
      others.push_back(x);
      groups.push_back(tree_.reachable(x, v));
    }
    const auto contracted = contract(after_, groups);
    const Cut cut = min_cut(contracted.graph, u, v);
    ++stats.cuts_used;

    if (cut.cost == stale) {
      ++stats.reuse.revalidated;
      report(u, v, stale, ReuseRule::revalidated);
      fatten_subtree(u, v, stats);
      return;
    }
    if (cut.cost > stale) {
      throw Error(ErrorCode::internal_invariant_violation,
                  "min cut for {" + std::to_string(u) + "," + std::to_string(v) + "} costs " +
                      std::to_string(cut.cost) + ", more than its old label " +
                      std::to_string(stale));
    }

    ++stats.reuse.recomputed;
    tree_.label(u, v).cost = cut.cost;
    std::size_t path_moves = 0;
    for (VertexId x : others) {
      if (!cut.contains(contracted.node_of.at(x))) continue;
      const TreeEdge label = tree_.label(x, v);
      if (!label.fat()) queue_.erase(QueuedEdge(label.cost, x, v));
      tree_.reconnect(x, v, u);
      if (!label.fat()) queue_.emplace(label.cost, x, u);
      if (on_path_.contains(x)) ++path_moves;
    }
    if (path_moves != 1) {
      throw Error(ErrorCode::internal_invariant_violation,
                  "new cut for {" + std::to_string(u) + "," + std::to_string(v) + "} moved " +
                      std::to_string(path_moves) + " path neighbours");
    }
    on_path_.insert(u);
  }

  /// Marks every edge in the subtree hanging off v at u as fat.
  void fatten_subtree(VertexId u, VertexId v, UpdateStats& stats) {
    std::vector<VertexId> stack{u};
    std::set<VertexId> seen{u, v};
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : tree_.neighbors(x)) {
        if (!seen.insert(y).second) continue;
        stack.push_back(y);
        TreeEdge& label = tree_.label(x, y);
        if (label.fat()) continue;
        queue_.erase(QueuedEdge(label.cost, x, y));
        label.kind = EdgeKind::fat;
        ++stats.reuse.unfolded;
        report(x, y, label.cost, ReuseRule::unfolded);
      }
    }
  }

  const Graph& before_;
  const Graph& after_;
  const DecreaseObserver* observer_;
  IntermediateTree tree_;
  std::set<QueuedEdge> queue_;
  std::set<VertexId> on_path_;
};

}  // namespace detail

/// Edge removal or weight decrease of {b,d} by delta; `after` is `before`
/// with the change applied (edge absent when delta equals its old weight).
inline UpdateResult update_decrease(CutTree tree, const Graph& before, const Graph& after,
                                    VertexId b, VertexId d, Weight delta,
                                    const DecreaseObserver* observer = nullptr) {
  detail::check_tree_matches(tree, before);
  if (delta <= 0 || !before.has_edge(b, d) ||
      after.weight(b, d) != before.weight(b, d) - delta) {
    throw Error(ErrorCode::invalid_delta, "graphs do not differ by a decrease of {" +
                                              std::to_string(b) + "," + std::to_string(d) +
                                              "} by " + std::to_string(delta));
  }

  UpdateResult out;
  UpdateStats& stats = out.stats;
  stats.event = after.has_edge(b, d) ? ChangeEvent::decrease(b, d, delta)
                                     : ChangeEvent::remove_edge(b, d);
  stats.static_equivalent = detail::static_cost(after.vertex_count());

  const auto steps = path(tree, b, d);
  stats.path_length = steps.size();
  stats.bridge = detect_bridge(tree, before, b, d);

  if (stats.bridge == BridgeStatus::existing_bridge) {
    // A bridge is itself a tree edge, so the path is the single edge {b,d}.
    tree.label(b, d) -= delta;
    stats.reuse.bridge = 1;
    out.tree = std::move(tree);
    return out;
  }

  stats.reuse.path_reused = steps.size();
  detail::DecreaseRun run(tree, before, after, steps, delta, observer);
  run.run(stats);
  out.tree = run.result();
  return out;
}

/// Dispatches one change to the matching update routine. `before` is the
/// graph `tree` belongs to; `after` must already have the change applied.
inline UpdateResult update(CutTree tree, const Graph& before, const Graph& after,
                           const ChangeEvent& e, const DecreaseObserver* observer = nullptr) {
  switch (e.kind) {
    case ChangeKind::add_vertex: return update_add_vertex(std::move(tree), e.u);
    case ChangeKind::remove_vertex: return update_remove_vertex(std::move(tree), e.u);
    case ChangeKind::add_edge:
    case ChangeKind::increase_weight:
      return update_increase(std::move(tree), before, after, e.u, e.v, e.delta);
    case ChangeKind::remove_edge:
      return update_decrease(std::move(tree), before, after, e.u, e.v, before.weight(e.u, e.v),
                             observer);
    case ChangeKind::decrease_weight:
      return update_decrease(std::move(tree), before, after, e.u, e.v, e.delta, observer);
  }
  throw Error(ErrorCode::internal_invariant_violation, "unknown change kind");
}

}  // namespace dyncut
