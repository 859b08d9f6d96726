// Command-line front end: build, replay, gen, query.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dyncut/dyncut.hpp"

namespace {

using namespace dyncut;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

EventStream load(const std::string& path) { return parse_stream(read_file(path)); }

EventMix parse_mix(const std::string& text) {
  EventMix mix{};
  std::istringstream in(text);
  std::string field;
  std::size_t k = 0;
  while (std::getline(in, field, ',')) {
    if (k == mix.size()) throw Error(ErrorCode::invalid_mix, "mix takes six fractions");
    try {
      std::size_t used = 0;
      mix[k] = std::stod(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::invalid_mix, "bad fraction '" + field + "'");
    }
    ++k;
  }
  if (k != mix.size()) throw Error(ErrorCode::invalid_mix, "mix takes six fractions");
  return mix;
}

void print_summary(const ReplayReport& report, std::ostream& out) {
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.6f", report.ratio());
  out << "events " << report.total.events << "\n"
      << "cuts_used " << report.total.cuts_used << "\n"
      << "static_equiv " << report.total.static_equivalent << "\n"
      << "ratio " << ratio << "\n";
  for (const auto& [kind, totals] : report.by_kind) {
    std::snprintf(ratio, sizeof ratio, "%.6f", totals.ratio());
    out << "kind " << token(kind) << " events " << totals.events << " cuts " << totals.cuts_used
        << " static " << totals.static_equivalent << " ratio " << ratio << "\n";
  }
  const auto& r = report.reuse;
  out << "reuse bridge " << r.bridge << " new_bridge " << r.new_bridge << " path " << r.path_reused
      << " threshold " << r.threshold << " zero_or_bridge_edge " << r.zero_or_bridge_edge
      << " unfolded " << r.unfolded << " revalidated " << r.revalidated << " recomputed "
      << r.recomputed << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic minimum cut trees: build, replay and generate change streams"};
  app.require_subcommand(1);

  std::string file;
  auto* build = app.add_subcommand("build", "Static cut tree of the graph a stream ends in");
  build->add_option("file", file, "Event stream")->required();

  bool verify = false;
  std::string csv_path;
  auto* replay_cmd = app.add_subcommand("replay", "Replay a stream through the update routines");
  replay_cmd->add_option("file", file, "Event stream")->required();
  replay_cmd->add_flag("--verify", verify, "Check the tree against the oracle after every event");
  replay_cmd->add_option("--csv", csv_path, "Per-event CSV output ('-' for stdout)");

  GeneratorParams params;
  std::string mix_text = "0,0,0.25,0.25,0.25,0.25";
  std::uint64_t seed = 0;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Generate a random event stream");
  gen->add_option("--vertices", params.vertices, "Initial vertices")->required();
  gen->add_option("--events", params.events, "Mixed events after the initial graph")->required();
  gen->add_option("--mix", mix_text, "Fractions for av,rv,ae,re,iw,dw")->capture_default_str();
  gen->add_option("--weight-max", params.weight_max, "Largest weight or delta")
      ->capture_default_str();
  gen->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen->add_option("--edge-prob", params.edge_probability, "Initial edge probability")
      ->capture_default_str();
  gen->add_option("-o,--output", out_path, "Write to a file instead of stdout");

  VertexId qu = 0, qv = 0;
  auto* query = app.add_subcommand("query", "Connectivity of two vertices after a stream");
  query->add_option("file", file, "Event stream")->required();
  query->add_option("u", qu, "First vertex")->required();
  query->add_option("v", qv, "Second vertex")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      const auto report = replay(load(file));
      if (report.final_graph.empty()) throw Error(ErrorCode::empty_graph, "stream leaves no vertices");
      const auto start = cut_computations();
      const CutTree tree = static_build(report.final_graph);
      std::cout << to_text(tree);
      std::cerr << "cuts " << cut_computations() - start << "\n";
    } else if (*replay_cmd) {
      const auto stream = load(file);
      ReplayOptions options;
      options.verify = verify;
      std::ofstream csv_file;
      if (csv_path == "-") {
        options.csv = &std::cout;
      } else if (!csv_path.empty()) {
        csv_file.open(csv_path, std::ios::binary);
        if (!csv_file) throw std::runtime_error("cannot write " + csv_path);
        options.csv = &csv_file;
      }
      const auto report = replay(stream, options);
      print_summary(report, csv_path == "-" ? std::cerr : std::cout);
    } else if (*gen) {
      params.mix = parse_mix(mix_text);
      const std::string text = format_stream(generate(params, seed));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
      }
    } else if (*query) {
      const auto report = replay(load(file));
      std::cout << query_value(report.final_tree, qu, qv) << "\n";
    }
  } catch (const VerificationFailure& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
