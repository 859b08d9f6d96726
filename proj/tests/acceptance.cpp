// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dyncut/dyncut.hpp"
#include "properties.hpp"
#include "test_util.hpp"

using namespace dyncut;
using namespace dyncut::testing;

namespace {

// Pinned sizes and tolerances.
constexpr std::uint64_t scenario_count = 1000;
constexpr std::uint64_t scenario_seed_base = 1'000'000;
constexpr int static_graphs = 100;
constexpr int increase_events = 200;
constexpr int decrease_events = 200;
constexpr std::size_t savings_vertices = 150;
constexpr std::size_t savings_events = 2000;
constexpr double savings_edge_probability = 0.03;
constexpr Weight savings_weight_max = 10;
constexpr std::uint64_t savings_seed = 20240601;
constexpr double savings_ratio_bound = 0.5;
constexpr int sheltering_configs = 500;
constexpr int bending_configs = 500;
constexpr int determinism_streams = 20;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string seconds_since(std::chrono::steady_clock::time_point start) {
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

// Criteria 1 and 8 share one pass over the scenarios.
struct ScenarioTotals {
  std::uint64_t scenarios = 0, events = 0, verified = 0, reused = 0, revalidated = 0;
  std::vector<std::string> failures, reuse_failures;
};

ScenarioTotals run_scenarios() {
  ScenarioTotals t;
  for (std::uint64_t i = 0; i < scenario_count; ++i) {
    const auto audit = audit_stream(mixed_scenario(scenario_seed_base + i));
    ++t.scenarios;
    t.events += audit.events;
    t.verified += audit.verified;
    t.reused += audit.reused;
    t.revalidated += audit.revalidated;
    for (const auto& f : audit.failures) t.failures.push_back("seed " + std::to_string(scenario_seed_base + i) + " " + f);
    for (const auto& f : audit.reuse_failures) t.reuse_failures.push_back("seed " + std::to_string(scenario_seed_base + i) + " " + f);
  }
  return t;
}

Outcome oracle_equivalence(const ScenarioTotals& t) {
  std::ostringstream d;
  d << t.scenarios << " scenarios, " << t.events << " events, " << t.verified << " trees verified";
  if (!t.failures.empty()) d << "; first failure: " << t.failures.front();
  return {t.failures.empty() && t.events > 0, d.str()};
}

Outcome static_cut_count() {
  std::mt19937_64 rng(2);
  int exact = 0;
  std::string first;
  for (int i = 0; i < static_graphs; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 40)(rng);
    const Graph g = random_graph(rng, n, std::uniform_real_distribution<double>(0.05, 0.6)(rng), 10);
    const auto start = cut_computations();
    static_build(g);
    const auto used = cut_computations() - start;
    if (used == n - 1) {
      ++exact;
    } else if (first.empty()) {
      first = "n=" + std::to_string(n) + " used " + std::to_string(used);
    }
  }
  return {exact == static_graphs,
          std::to_string(exact) + "/" + std::to_string(static_graphs) + " graphs used exactly n-1" +
              (first.empty() ? "" : "; " + first)};
}

Outcome increase_contract() {
  std::mt19937_64 rng(3);
  int non_bridge = 0, bridge = 0, bad = 0, invalid = 0;
  std::string first;
  while (non_bridge < increase_events) {
    const auto s = increase_sample(rng);
    (s.bridge == BridgeStatus::non_bridge ? non_bridge : bridge) += 1;
    if (!within_contract(s)) {
      ++bad;
      if (first.empty()) first = "path " + std::to_string(s.path_length) + " used " + std::to_string(s.cuts_used);
    }
    if (!s.valid) {
      ++invalid;
      if (first.empty()) first = s.detail;
    }
  }
  std::ostringstream d;
  d << non_bridge << " non-bridge + " << bridge << " bridge increases, " << bad
    << " off contract, " << invalid << " invalid trees";
  if (!first.empty()) d << "; " << first;
  return {bad == 0 && invalid == 0, d.str()};
}

Outcome decrease_contract() {
  std::mt19937_64 rng(4);
  int total = 0, bridge = 0, bad = 0, invalid = 0;
  std::uint64_t used = 0, allowed = 0;
  std::string first;
  while (total < decrease_events) {
    const auto s = decrease_sample(rng);
    if (!s) continue;
    ++total;
    if (s->bridge == BridgeStatus::existing_bridge) ++bridge;
    used += s->cuts_used;
    allowed += s->n - 1 - s->path_length;
    if (!within_contract(*s)) {
      ++bad;
      if (first.empty()) first = "n " + std::to_string(s->n) + " path " + std::to_string(s->path_length) + " used " + std::to_string(s->cuts_used);
    }
    if (!s->valid) {
      ++invalid;
      if (first.empty()) first = s->detail;
    }
  }
  std::ostringstream d;
  d << total << " decreases (" << bridge << " bridges), " << used << " cuts used of " << allowed
    << " allowed, " << bad << " off contract, " << invalid << " invalid trees";
  if (!first.empty()) d << "; " << first;
  return {bad == 0 && invalid == 0, d.str()};
}

Outcome savings() {
  GeneratorParams params;
  params.vertices = savings_vertices;
  params.events = savings_events;
  params.weight_max = savings_weight_max;
  params.edge_probability = savings_edge_probability;
  params.mix = {0, 0, 0.25, 0.25, 0.25, 0.25};
  const auto stream = generate(params, savings_seed);
  const auto report = replay(stream);

  // Window of the mixed events only, after the initial graph is in place.
  std::uint64_t window_dynamic = 0, window_static = 0;
  for (std::size_t i = stream.size() - savings_events; i < stream.size(); ++i) {
    window_dynamic += report.rows[i].cuts_used;
    window_static += report.rows[i].static_equivalent;
  }
  const double window = window_static == 0 ? 0.0 : double(window_dynamic) / double(window_static);
  std::ostringstream d;
  d << "n=" << savings_vertices << ", " << stream.size() - savings_events - savings_vertices
    << " initial edges + " << savings_events << " mixed events, final m="
    << report.final_graph.edge_count() << "; cumulative ratio " << fixed(report.ratio())
    << ", mixed-window ratio " << fixed(window) << " (bound " << savings_ratio_bound << ")";
  for (const auto& [kind, totals] : report.by_kind) {
    d << "; " << token(kind) << " " << fixed(totals.ratio());
  }
  return {report.ratio() < savings_ratio_bound && window < savings_ratio_bound, d.str()};
}

Outcome sheltering() {
  std::mt19937_64 rng(6);
  int done = 0, bad = 0, skipped = 0;
  std::string first;
  while (done < sheltering_configs) {
    const auto r = sheltering_trial(rng);
    if (!r) {
      ++skipped;
      continue;
    }
    ++done;
    if (!r->ok) {
      ++bad;
      if (first.empty()) first = r->detail;
    }
  }
  return {bad == 0, std::to_string(done) + " configurations (" + std::to_string(skipped) +
                        " samples rejected), " + std::to_string(bad) + " violations" +
                        (first.empty() ? "" : "; " + first)};
}

Outcome bending() {
  std::mt19937_64 rng(7);
  std::ostringstream d;
  bool pass = true;
  for (auto which : {BendCase::absorb_separating, BendCase::evict_non_separating}) {
    int done = 0, bad = 0;
    std::string first;
    while (done < bending_configs) {
      const auto r = bending_trial(rng, which);
      if (!r) continue;
      ++done;
      if (!r->ok) {
        ++bad;
        if (first.empty()) first = r->detail;
      }
    }
    pass = pass && bad == 0;
    d << (which == BendCase::absorb_separating ? "absorb " : "; evict ") << done
      << " configurations, " << bad << " violations";
    if (!first.empty()) d << " (" << first << ")";
  }
  return {pass, d.str()};
}

Outcome reuse_soundness(const ScenarioTotals& t) {
  std::ostringstream d;
  d << t.reused << " labels kept without a flow call and " << t.revalidated
    << " revalidated, " << t.reuse_failures.size() << " disagree with the oracle";
  if (!t.reuse_failures.empty()) d << "; first: " << t.reuse_failures.front();
  return {t.reuse_failures.empty() && t.reused > 0, d.str()};
}

Outcome determinism() {
  auto csv = [](const EventStream& s) {
    std::ostringstream out;
    ReplayOptions options;
    options.csv = &out;
    replay(s, options);
    return out.str();
  };
  int identical = 0;
  std::size_t bytes = 0;
  for (int i = 0; i < determinism_streams; ++i) {
    GeneratorParams params;
    params.vertices = 10 + static_cast<std::size_t>(i) * 3;
    params.events = 300;
    params.edge_probability = 0.2;
    params.mix = {0.05, 0.05, 0.25, 0.2, 0.25, 0.2};
    const auto stream = generate(params, 900 + static_cast<std::uint64_t>(i));
    const auto a = csv(stream);
    const auto b = csv(parse_stream(format_stream(stream)));
    if (a == b) ++identical;
    bytes += a.size();
  }
  return {identical == determinism_streams,
          std::to_string(identical) + "/" + std::to_string(determinism_streams) +
              " streams replayed to identical CSV (" + std::to_string(bytes) + " bytes)"};
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& check) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("criterion %d %s: %s - %s [%s]\n", id, name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), seconds_since(start).c_str());
    std::fflush(stdout);
  };

  ScenarioTotals scenarios;
  report(1, "oracle-equivalence", [&] {
    scenarios = run_scenarios();
    return oracle_equivalence(scenarios);
  });
  report(2, "static-cut-count", static_cut_count);
  report(3, "increase-contract", increase_contract);
  report(4, "decrease-contract", decrease_contract);
  report(5, "savings", savings);
  report(6, "sheltering", sheltering);
  report(7, "bending", bending);
  report(8, "reuse-soundness", [&] { return reuse_soundness(scenarios); });
  report(9, "determinism", determinism);
  return all ? 0 : 1;
}
