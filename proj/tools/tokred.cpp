// Copyright 2026 The tokred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: route, verify, bench and arch subcommands.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tokred/bench.hpp"
#include "tokred/circuit.hpp"
#include "tokred/postprocess.hpp"
#include "tokred/registry.hpp"
#include "tokred/synthesis.hpp"

namespace {

using namespace tokred;

Circuit read_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circuit file " + path);
  return parse_circuit(in);
}

Mapping read_mapping(const std::string& path, const ArchGraph& graph) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mapping file " + path);
  return parse_mapping(in, graph);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

nlohmann::ordered_json mapping_json(const Mapping& m, const ArchGraph& graph) {
  auto pairs = nlohmann::ordered_json::array();
  for (Wire w = 0; w < m.size(); ++w) pairs.push_back({w, graph.name(m.node_of(w))});
  return pairs;
}

struct RouteOptions {
  std::string circuit;
  std::string arch;
  std::string mapping;
  std::string out = "-";
  std::string out_mapping;
  std::string report;
  bool no_postprocess = false;
};

int run_route(const RouteOptions& opt) {
  const Architecture arch = resolve_architecture(opt.arch);
  const Circuit c = read_circuit(opt.circuit);
  if (c.wires() != arch.graph.size()) {
    throw std::runtime_error("circuit has " + std::to_string(c.wires()) + " qubits but " +
                             arch.name + " has " + std::to_string(arch.graph.size()) + " nodes");
  }
  const Mapping m0 =
      opt.mapping.empty() ? Mapping(arch.initial_mapping) : read_mapping(opt.mapping, arch.graph);

  RoutedResult routed = route_general(c, arch.graph, m0);
  const Verification before = verify_equivalence(c, routed, arch.graph);
  Verification after{true, {}};
  if (!opt.no_postprocess) {
    routed = postprocess(routed);
    after = verify_equivalence(c, routed, arch.graph);
  }
  const bool ok = before.ok && after.ok;

  write_text(opt.out, format_circuit(routed.circuit));
  if (!opt.out_mapping.empty()) write_text(opt.out_mapping, format_mapping(routed.output_mapping, arch.graph));

  nlohmann::ordered_json report;
  report["architecture"] = arch.name;
  report["input_mapping"] = mapping_json(routed.input_mapping, arch.graph);
  report["output_mapping"] = mapping_json(routed.output_mapping, arch.graph);
  report["input_cnots"] = routed.stats.input_cnots;
  report["routed_cnots"] = routed.stats.routed_cnots;
  report["postprocessed_cnots"] = routed.stats.postprocessed_cnots
                                      ? nlohmann::ordered_json(*routed.stats.postprocessed_cnots)
                                      : nlohmann::ordered_json(nullptr);
  report["blocks"] = routed.stats.blocks;
  report["verified"] = ok;
  if (!ok) report["diagnostic"] = before.ok ? after.diagnostic : before.diagnostic;
  if (!opt.report.empty()) {
    write_text(opt.report, report.dump(2) + "\n");
  } else {
    std::cerr << "routed on " << arch.name << ": " << routed.stats.input_cnots << " -> "
              << routed.stats.routed_cnots << " CNOTs";
    if (routed.stats.postprocessed_cnots) {
      std::cerr << " (" << *routed.stats.postprocessed_cnots << " after post-processing)";
    }
    std::cerr << ", verification " << (ok ? "passed" : "FAILED") << '\n';
    std::cerr << "output mapping:\n" << format_mapping(routed.output_mapping, arch.graph);
    if (!ok) std::cerr << report["diagnostic"].get<std::string>() << '\n';
  }
  return ok ? 0 : 1;
}

struct VerifyOptions {
  std::string original;
  std::string routed;
  std::string arch;
  std::string mapping;
  std::string out_mapping;
};

int run_verify(const VerifyOptions& opt) {
  const Architecture arch = resolve_architecture(opt.arch);
  const Circuit original = read_circuit(opt.original);
  RoutedResult routed;
  routed.circuit = read_circuit(opt.routed);
  routed.input_mapping =
      opt.mapping.empty() ? Mapping(arch.initial_mapping) : read_mapping(opt.mapping, arch.graph);
  routed.output_mapping = read_mapping(opt.out_mapping, arch.graph);
  const Verification v = verify_equivalence(original, routed, arch.graph);
  if (v) {
    std::cout << "equivalent\n";
    return 0;
  }
  std::cout << "NOT equivalent: " << v.diagnostic << '\n';
  return 1;
}

struct BenchOptions {
  std::string arch = "all";
  std::vector<std::size_t> counts = {4, 8, 16, 32, 64, 128, 256};
  std::size_t trials = 100;
  std::uint64_t seed = 2020;
  std::string baseline = "swap";
  bool json = false;
  bool table = false;
  bool timing = false;
  std::size_t threads = 0;
  std::string output = "-";
};

int run_bench(const BenchOptions& opt) {
  std::vector<std::string> archs;
  if (opt.arch == "all") {
    archs = builtin_architecture_names();
  } else {
    archs.push_back(opt.arch);
  }
  std::vector<BenchReport> reports;
  for (const std::string& name : archs) {
    BenchConfig config;
    config.architecture = name;
    config.gate_counts = opt.counts;
    config.trials = opt.trials;
    config.seed = opt.seed;
    config.baseline = opt.baseline == "none" ? Baseline::kNone : Baseline::kSwapInsertion;
    config.threads = opt.threads;
    try {
      reports.push_back(run_benchmark(config));
    } catch (const BenchFailure& f) {
      std::cerr << f.what() << "\nreplay: tokred bench --arch " << f.architecture()
                << " --counts " << f.record().gate_count << " (trial seed " << f.record().seed
                << ")\n";
      return 1;
    }
  }
  const bool json = opt.json || !opt.table;
  std::string text;
  if (json) text += report_to_json(reports, opt.timing);
  if (opt.table) text += report_to_table(reports, opt.timing);
  write_text(opt.output, text);
  for (const auto& r : reports) {
    if (r.failed()) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CNOT circuit routing by token reduction"};
  app.require_subcommand(1);

  RouteOptions route;
  auto* route_cmd = app.add_subcommand("route", "Route a circuit onto an architecture");
  route_cmd->add_option("circuit", route.circuit, "Circuit file")->required()->check(CLI::ExistingFile);
  route_cmd->add_option("--arch", route.arch, "Built-in architecture name or JSON file")->required();
  route_cmd->add_option("--mapping", route.mapping, "Initial mapping file (wire node-name lines)");
  route_cmd->add_option("--out,-o", route.out, "Routed circuit output (default stdout)");
  route_cmd->add_option("--out-mapping", route.out_mapping, "Write the output mapping here");
  route_cmd->add_option("--report", route.report, "Write a JSON report here");
  route_cmd->add_flag("--no-postprocess", route.no_postprocess, "Skip SWAP synthesis and cancellation");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a routed circuit against its original");
  verify_cmd->add_option("original", verify.original, "Original circuit")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("routed", verify.routed, "Routed circuit")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--arch", verify.arch, "Built-in architecture name or JSON file")->required();
  verify_cmd->add_option("--mapping", verify.mapping, "Initial mapping (default: the architecture's)");
  verify_cmd->add_option("--out-mapping", verify.out_mapping, "Output mapping file")
      ->required()
      ->check(CLI::ExistingFile);

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Random-circuit benchmark");
  bench_cmd->add_option("--arch", bench.arch, "Architecture name, or 'all'")->capture_default_str();
  bench_cmd->add_option("--counts", bench.counts, "Gate counts")->capture_default_str();
  bench_cmd->add_option("--trials", bench.trials, "Circuits per gate count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Run seed")->capture_default_str();
  bench_cmd->add_option("--baseline", bench.baseline, "Comparison router")
      ->check(CLI::IsMember({"swap", "none"}))
      ->capture_default_str();
  bench_cmd->add_flag("--json", bench.json, "JSON report (the default)");
  bench_cmd->add_flag("--table", bench.table, "Human-readable table");
  bench_cmd->add_flag("--timing", bench.timing, "Include wall-clock seconds");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads (0 = all cores)");
  bench_cmd->add_option("--output,-o", bench.output, "Report destination (default stdout)");

  auto* arch_cmd = app.add_subcommand("arch", "Built-in architectures");
  arch_cmd->require_subcommand(1);
  auto* arch_list = arch_cmd->add_subcommand("list", "List built-in architectures");
  std::string arch_name;
  auto* arch_show = arch_cmd->add_subcommand("show", "Print an architecture as JSON");
  arch_show->add_option("name", arch_name, "Architecture name or file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*route_cmd) return run_route(route);
    if (*verify_cmd) return run_verify(verify);
    if (*bench_cmd) {
      for (std::size_t c : bench.counts) {
        if (c == 0) throw std::runtime_error("gate counts must be positive");
      }
      return run_bench(bench);
    }
    if (*arch_list) {
      for (const auto& name : builtin_architecture_names()) {
        const Architecture a = *find_architecture(name);
        std::cout << name << " (" << a.graph.size() << " nodes, " << a.graph.edges().size()
                  << " edges)\n";
      }
      return 0;
    }
    if (*arch_show) {
      std::cout << architecture_to_json(resolve_architecture(arch_name)) << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
