#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "dyncut/dynamic.hpp"
#include "dyncut/error.hpp"
#include "dyncut/graph.hpp"
#include "dyncut/oracle.hpp"
#include "dyncut/stream.hpp"
#include "dyncut/tree.hpp"

namespace dyncut {

/// Raised by replay in verify mode at the first step whose tree fails the
/// oracle check.
class VerificationFailure : public Error {
 public:
  VerificationFailure(std::size_t step, oracle::VerificationReport report)
      : Error(ErrorCode::verification_failed,
              "step " + std::to_string(step) + ": " + report.summary()),
        step_(step),
        report_(std::move(report)) {}

  std::size_t step() const noexcept { return step_; }
  const oracle::VerificationReport& report() const noexcept { return report_; }

 private:
  std::size_t step_;
  oracle::VerificationReport report_;
};

/// A graph together with its maintained cut tree.
class Replayer {
 public:
  const Graph& graph() const noexcept { return graph_; }
  const CutTree& tree() const noexcept { return tree_; }

  /// Applies one change to both graph and tree. Throws without modifying
  /// anything when the event is not applicable.
  UpdateStats apply(const ChangeEvent& e, const DecreaseObserver* observer = nullptr) {
    Graph next = applied(graph_, e);
    auto result = update(tree_, graph_, next, e, observer);
    graph_ = std::move(next);
    tree_ = std::move(result.tree);
    return result.stats;
  }

 private:
  Graph graph_;
  CutTree tree_;
};

struct KindTotals {
  std::uint64_t events = 0;
  std::uint64_t cuts_used = 0;
  std::uint64_t static_equivalent = 0;

  double ratio() const noexcept {
    return static_equivalent == 0
               ? 0.0
               : static_cast<double>(cuts_used) / static_cast<double>(static_equivalent);
  }
};

struct ReplayReport {
  std::vector<UpdateStats> rows;
  KindTotals total;
  std::map<ChangeKind, KindTotals> by_kind;
  ReuseBreakdown reuse;
  CutTree final_tree;
  Graph final_graph;

  double ratio() const noexcept { return total.ratio(); }
};

struct ReplayOptions {
  /// Run the oracle after every event and stop at the first violation.
  bool verify = false;
  oracle::Mode verify_mode = oracle::Mode::automatic;
  std::ostream* csv = nullptr;
  const DecreaseObserver* observer = nullptr;
};

inline constexpr std::string_view csv_header =
    "step,kind,n,m,cuts_used,static_equiv,cum_dynamic,cum_static,cum_ratio";

/// Cumulative ratio as printed in the CSV: six decimals, 0 while nothing
/// would have been computed statically.
inline std::string format_ratio(std::uint64_t dynamic, std::uint64_t static_total) {
  char buf[32];
  const double r = static_total == 0 ? 0.0
                                     : static_cast<double>(dynamic) /
                                           static_cast<double>(static_total);
  std::snprintf(buf, sizeof buf, "%.6f", r);
  return buf;
}

/// Replays a stream from the empty graph, accumulating per-event statistics.
inline ReplayReport replay(const EventStream& stream, const ReplayOptions& options = {}) {
  ReplayReport report;
  Replayer state;
  if (options.csv) *options.csv << csv_header << '\n';

  for (std::size_t i = 0; i < stream.size(); ++i) {
    const ChangeEvent& e = stream.events[i];
    const std::size_t line = i < stream.lines.size() ? stream.lines[i] : i + 1;
    UpdateStats stats;
    try {
      stats = state.apply(e, options.observer);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::internal_invariant_violation) throw;
      throw StreamError(ErrorCode::validation_error, line, err.what());
    }

    report.total.events += 1;
    report.total.cuts_used += stats.cuts_used;
    report.total.static_equivalent += stats.static_equivalent;
    auto& kind = report.by_kind[e.kind];
    kind.events += 1;
    kind.cuts_used += stats.cuts_used;
    kind.static_equivalent += stats.static_equivalent;
    report.reuse += stats.reuse;

    if (options.csv) {
      *options.csv << (i + 1) << ',' << token(e.kind) << ',' << state.graph().vertex_count() << ','
                   << state.graph().edge_count() << ',' << stats.cuts_used << ','
                   << stats.static_equivalent << ',' << report.total.cuts_used << ','
                   << report.total.static_equivalent << ','
                   << format_ratio(report.total.cuts_used, report.total.static_equivalent)
                   << '\n';
    }
    report.rows.push_back(std::move(stats));

    if (options.verify) {
      auto check = oracle::verify_cut_tree(state.tree(), state.graph(), options.verify_mode);
      if (!check.passed()) throw VerificationFailure(i + 1, std::move(check));
    }
  }
  report.final_tree = state.tree();
  report.final_graph = state.graph();
  return report;
}

}  // namespace dyncut
