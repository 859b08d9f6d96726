#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dyncut/error.hpp"
#include "dyncut/graph.hpp"

namespace dyncut {

/// Parse or validation failure tied to a 1-based stream line.
class StreamError : public Error {
 public:
  StreamError(ErrorCode code, std::size_t line, const std::string& reason)
      : Error(code, "line " + std::to_string(line) + ": " + reason), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct EventStream {
  std::vector<ChangeEvent> events;
  /// Source line of each event; synthetic streams number events from 1.
  std::vector<std::size_t> lines;

  void push(const ChangeEvent& e, std::size_t line) {
    events.push_back(e);
    lines.push_back(line);
  }

  std::size_t size() const noexcept { return events.size(); }
};

namespace detail {

template <typename Int>
bool parse_int(std::string_view text, Int& out) {
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

/// Parses the line format `av v | rv v | ae u v w | re u v | iw u v d | dw u v d`
/// with `#` comments and blank lines. In strict mode every event is also
/// replayed on a scratch graph so that inapplicable events are rejected with
/// their line number.
inline EventStream parse_stream(std::string_view text, bool strict = true) {
  EventStream stream;
  Graph scratch;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto fields = detail::split_fields(line);
    if (fields.empty()) continue;

    const std::string_view tok = fields[0];
    auto syntax = [&](const std::string& why) {
      return StreamError(ErrorCode::syntax_error, lineno, why);
    };
    std::size_t arity = 0;
    ChangeKind kind{};
    if (tok == "av") { kind = ChangeKind::add_vertex; arity = 1; }
    else if (tok == "rv") { kind = ChangeKind::remove_vertex; arity = 1; }
    else if (tok == "ae") { kind = ChangeKind::add_edge; arity = 3; }
    else if (tok == "re") { kind = ChangeKind::remove_edge; arity = 2; }
    else if (tok == "iw") { kind = ChangeKind::increase_weight; arity = 3; }
    else if (tok == "dw") { kind = ChangeKind::decrease_weight; arity = 3; }
    else throw syntax("unknown event '" + std::string(tok) + "'");
    if (fields.size() != arity + 1) {
      throw syntax("'" + std::string(tok) + "' takes " + std::to_string(arity) + " argument(s)");
    }

    ChangeEvent e{kind, 0, 0, 0};
    if (!detail::parse_int(fields[1], e.u)) throw syntax("bad vertex id");
    if (arity >= 2 && !detail::parse_int(fields[2], e.v)) throw syntax("bad vertex id");
    if (arity == 3) {
      if (!detail::parse_int(fields[3], e.delta)) throw syntax("bad weight");
      if (e.delta <= 0) throw syntax("weight must be positive");
    }

    if (strict) {
      try {
        apply_change(scratch, e);
      } catch (const Error& err) {
        throw StreamError(ErrorCode::validation_error, lineno, err.what());
      }
    }
    stream.push(e, lineno);
  }
  return stream;
}

inline std::string format_event(const ChangeEvent& e) {
  std::string out(token(e.kind));
  out += ' ' + std::to_string(e.u);
  if (e.is_vertex_event()) return out;
  out += ' ' + std::to_string(e.v);
  if (e.kind != ChangeKind::remove_edge) out += ' ' + std::to_string(e.delta);
  return out;
}

inline std::string format_stream(const EventStream& stream) {
  std::string out;
  for (const auto& e : stream.events) out += format_event(e) + '\n';
  return out;
}

/// Fractions per event kind, in stream-token order av, rv, ae, re, iw, dw.
using EventMix = std::array<double, 6>;

inline constexpr std::array<ChangeKind, 6> all_change_kinds = {
    ChangeKind::add_vertex,  ChangeKind::remove_vertex,   ChangeKind::add_edge,
    ChangeKind::remove_edge, ChangeKind::increase_weight, ChangeKind::decrease_weight};

struct GeneratorParams {
  std::size_t vertices = 0;
  std::size_t events = 0;
  Weight weight_max = 10;
  EventMix mix{0, 0, 0.25, 0.25, 0.25, 0.25};
  /// Each vertex pair is joined with this probability before the mixed
  /// events start.
  double edge_probability = 0.0;
};

/// Event counts per kind: floor of fraction * total, the remainder handed
/// out by largest fractional part (ties to the earlier kind).
inline std::array<std::size_t, 6> mix_counts(const EventMix& mix, std::size_t total) {
  std::array<std::size_t, 6> counts{};
  std::array<double, 6> frac{};
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    const double exact = mix[k] * static_cast<double>(total);
    counts[k] = static_cast<std::size_t>(std::floor(exact + 1e-9));
    frac[k] = exact - static_cast<double>(counts[k]);
    assigned += counts[k];
  }
  std::array<std::size_t, 6> order{0, 1, 2, 3, 4, 5};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
  for (std::size_t i = 0; assigned < total; i = (i + 1) % 6, ++assigned) ++counts[order[i]];
  return counts;
}

namespace detail {

class StreamGenerator {
 public:
  StreamGenerator(const GeneratorParams& params, std::uint64_t seed)
      : params_(params), rng_(seed) {}

  EventStream run() {
    EventStream out;
    for (std::size_t i = 1; i <= params_.vertices; ++i) emit(out, ChangeEvent::add_vertex(i));
    next_id_ = params_.vertices + 1;
    std::bernoulli_distribution coin(params_.edge_probability);
    for (VertexId a = 1; a <= params_.vertices; ++a) {
      for (VertexId b = a + 1; b <= params_.vertices; ++b) {
        if (coin(rng_)) emit(out, ChangeEvent::add_edge(a, b, random_weight()));
      }
    }

    std::vector<ChangeKind> plan;
    const auto counts = mix_counts(params_.mix, params_.events);
    for (std::size_t k = 0; k < 6; ++k) plan.insert(plan.end(), counts[k], all_change_kinds[k]);
    std::shuffle(plan.begin(), plan.end(), rng_);

    for (std::size_t i = 0; i < plan.size(); ++i) {
      // Take the first planned kind that can be applied now; if none can,
      // substitute an applicable kind drawn by the mix weights.
      auto it = std::find_if(plan.begin() + static_cast<std::ptrdiff_t>(i), plan.end(),
                             [&](ChangeKind k) { return applicable(k); });
      if (it != plan.end()) {
        std::iter_swap(plan.begin() + static_cast<std::ptrdiff_t>(i), it);
      } else {
        plan[i] = fallback_kind();
      }
      emit(out, make_event(plan[i]));
    }
    return out;
  }

 private:
  void emit(EventStream& out, const ChangeEvent& e) {
    apply_change(graph_, e);
    out.push(e, out.size() + 1);
  }

  Weight random_weight() {
    return std::uniform_int_distribution<Weight>(1, params_.weight_max)(rng_);
  }

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng_)];
  }

  std::vector<VertexId> isolated() const {
    std::vector<VertexId> out;
    for (const auto& [v, nbrs] : graph_.adjacency()) {
      if (nbrs.empty()) out.push_back(v);
    }
    return out;
  }

  std::vector<std::tuple<VertexId, VertexId, Weight>> decreasable() const {
    auto es = graph_.edges();
    std::erase_if(es, [](const auto& e) { return std::get<2>(e) < 2; });
    return es;
  }

  bool applicable(ChangeKind k) const {
    const std::size_t n = graph_.vertex_count();
    switch (k) {
      case ChangeKind::add_vertex: return true;
      case ChangeKind::remove_vertex: return !isolated().empty();
      case ChangeKind::add_edge: return n >= 2 && graph_.edge_count() < n * (n - 1) / 2;
      case ChangeKind::remove_edge:
      case ChangeKind::increase_weight: return graph_.edge_count() > 0;
      case ChangeKind::decrease_weight: return !decreasable().empty();
    }
    return false;
  }

  ChangeKind fallback_kind() {
    std::vector<double> weights;
    for (std::size_t k = 0; k < 6; ++k) {
      weights.push_back(applicable(all_change_kinds[k]) ? params_.mix[k] : 0.0);
    }
    if (std::accumulate(weights.begin(), weights.end(), 0.0) <= 0.0) {
      return ChangeKind::add_vertex;
    }
    std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
    return all_change_kinds[dist(rng_)];
  }

  ChangeEvent make_event(ChangeKind k) {
    switch (k) {
      case ChangeKind::add_vertex: return ChangeEvent::add_vertex(next_id_++);
      case ChangeKind::remove_vertex: return ChangeEvent::remove_vertex(pick(isolated()));
      case ChangeKind::add_edge: {
        const auto [a, b] = random_non_edge();
        return ChangeEvent::add_edge(a, b, random_weight());
      }
      case ChangeKind::remove_edge: {
        const auto [a, b, w] = pick(graph_.edges());
        return ChangeEvent::remove_edge(a, b);
      }
      case ChangeKind::increase_weight: {
        const auto [a, b, w] = pick(graph_.edges());
        return ChangeEvent::increase(a, b, random_weight());
      }
      case ChangeKind::decrease_weight: {
        const auto [a, b, w] = pick(decreasable());
        return ChangeEvent::decrease(a, b, std::uniform_int_distribution<Weight>(1, w - 1)(rng_));
      }
    }
    throw Error(ErrorCode::internal_invariant_violation, "unknown change kind");
  }

  VertexPair random_non_edge() {
    const auto vs = graph_.vertices();
    for (int attempt = 0; attempt < 64; ++attempt) {
      const VertexId a = pick(vs);
      const VertexId b = pick(vs);
      if (a != b && !graph_.has_edge(a, b)) return ordered_pair(a, b);
    }
    std::vector<VertexPair> free;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (!graph_.has_edge(vs[i], vs[j])) free.emplace_back(vs[i], vs[j]);
      }
    }
    return pick(free);
  }

  GeneratorParams params_;
  std::mt19937_64 rng_;
  Graph graph_;
  VertexId next_id_ = 1;
};

}  // namespace detail

/// Seeded random stream: `vertices` add-vertex events (ids 1..n), optional
/// random initial edges, then `events` changes whose kind counts follow the
/// mix. Every event is applicable to the graph built by its prefix.
inline EventStream generate(const GeneratorParams& params, std::uint64_t seed) {
  double sum = 0.0;
  for (double f : params.mix) {
    if (!(f >= 0.0)) throw Error(ErrorCode::invalid_mix, "mix fractions must be non-negative");
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::invalid_mix, "mix fractions sum to " + std::to_string(sum));
  }
  if (params.weight_max < 1) throw Error(ErrorCode::invalid_mix, "weight_max must be >= 1");
  if (params.edge_probability < 0.0 || params.edge_probability > 1.0) {
    throw Error(ErrorCode::invalid_mix, "edge probability must lie in [0,1]");
  }
  return detail::StreamGenerator(params, seed).run();
}

}  // namespace dyncut
