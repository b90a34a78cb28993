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

#include "tokred/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "tokred/heuristic.hpp"
#include "tokred/postprocess.hpp"
#include "tokred/registry.hpp"

namespace tokred {

Circuit random_cnot_circuit(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_cnot_circuit needs at least two wires");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_control(0, n - 1);
  std::uniform_int_distribution<std::size_t> pick_target(0, n - 2);
  Circuit c(n);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t control = pick_control(rng);
    std::size_t target = pick_target(rng);
    if (target >= control) ++target;
    c.cnot(control, target);
  }
  return c;
}

RoutedResult swap_insertion_baseline(const Circuit& c, const ArchGraph& graph, const Mapping& m0) {
  const std::size_t n = graph.size();
  if (c.wires() != n || m0.size() != n) {
    throw std::invalid_argument("swap_insertion_baseline: size mismatch with the architecture");
  }
  if (!c.is_cnot_only()) throw std::invalid_argument("swap_insertion_baseline: circuit is not CNOT-only");
  std::vector<Node> node_of = m0.wire_to_node();
  std::vector<Wire> wire_at(n);
  for (Wire w = 0; w < n; ++w) wire_at[node_of[w]] = w;

  RoutedResult out{Circuit(n), m0, m0, {}};
  out.stats.input_cnots = c.cnot_count();
  out.stats.blocks = 1;
  for (const Gate& g : c.gates()) {
    const auto& cx = std::get<Cnot>(g);
    Node u = node_of[cx.control];
    const Node v = node_of[cx.target];
    while (graph.distance(u, v) > 1) {
      const Node next = graph.successor(u, v);
      out.circuit.swap(u, next);
      std::swap(wire_at[u], wire_at[next]);
      node_of[wire_at[u]] = u;
      node_of[wire_at[next]] = next;
      u = next;
    }
    out.circuit.cnot(u, v);
  }
  out.output_mapping = Mapping(std::move(node_of));
  out.stats.routed_cnots = out.circuit.cnot_count();
  out.stats.max_block_cnots = out.stats.routed_cnots;
  return out;
}

void validate(const BenchConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("benchmark needs at least one trial");
  if (config.gate_counts.empty()) throw std::invalid_argument("benchmark needs a gate count");
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t gate_count, std::size_t trial) {
  // splitmix64 finaliser over a mix of the three inputs.
  std::uint64_t z = base ^ (0x9e3779b97f4a7c15ULL * (gate_count + 1)) ^
                    (0xbf58476d1ce4e5b9ULL * (trial + 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

TrialRecord run_trial(const Architecture& arch, std::size_t gate_count, std::size_t trial,
                      std::uint64_t seed, Baseline baseline) {
  const ArchGraph& graph = arch.graph;
  const Mapping m0(arch.initial_mapping);
  const Circuit c = random_cnot_circuit(graph.size(), gate_count, seed);

  TrialRecord rec;
  rec.gate_count = gate_count;
  rec.trial = trial;
  rec.seed = seed;

  const RoutedResult routed = route_general(c, graph, m0);
  rec.routed_cnots = routed.stats.routed_cnots;
  rec.max_block_cnots = routed.stats.max_block_cnots;
  const Verification v1 = verify_equivalence(c, routed, graph);
  rec.verified_routed = v1.ok;
  if (!v1) rec.diagnostic = "routed: " + v1.diagnostic;

  const RoutedResult post = postprocess(routed);
  rec.postprocessed_cnots = *post.stats.postprocessed_cnots;
  const Verification v2 = verify_equivalence(c, post, graph);
  rec.verified_postprocessed = v2.ok && rec.postprocessed_cnots <= rec.routed_cnots;
  if (!v2) rec.diagnostic += (rec.diagnostic.empty() ? "" : "; ") + ("post-processed: " + v2.diagnostic);

  if (baseline == Baseline::kSwapInsertion) {
    const RoutedResult base = swap_insertion_baseline(c, graph, m0);
    rec.baseline_cnots = base.stats.routed_cnots;
    const Verification v3 = verify_equivalence(c, base, graph);
    rec.verified_baseline = v3.ok;
    if (!v3) rec.diagnostic += (rec.diagnostic.empty() ? "" : "; ") + ("baseline: " + v3.diagnostic);
  }
  return rec;
}

bool BenchReport::failed() const {
  return std::any_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.failed(); });
}

namespace {

std::string failure_message(const std::string& arch, const TrialRecord& r) {
  return "verification failed on " + arch + ", gate count " + std::to_string(r.gate_count) +
         ", trial " + std::to_string(r.trial) + ", seed " + std::to_string(r.seed) + ": " +
         r.diagnostic;
}

BenchRow aggregate(std::size_t gate_count, const std::vector<TrialRecord>& recs,
                   const std::vector<double>& seconds) {
  BenchRow row;
  row.gate_count = gate_count;
  row.trials = recs.size();
  double routed = 0, post = 0, base = 0, saving_sum = 0;
  double saving_max = -1e300, saving_min = 1e300;
  std::size_t verified = 0, positive = 0;
  bool has_baseline = false;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const TrialRecord& r = recs[i];
    routed += static_cast<double>(r.routed_cnots);
    post += static_cast<double>(r.postprocessed_cnots);
    row.max_block_cnots = std::max(row.max_block_cnots, r.max_block_cnots);
    verified += r.verified() ? 1 : 0;
    row.wall_seconds += seconds[i];
    if (r.baseline_cnots) {
      has_baseline = true;
      const double b = static_cast<double>(*r.baseline_cnots);
      base += b;
      const double s = b == 0 ? 0.0 : 100.0 * (b - static_cast<double>(r.postprocessed_cnots)) / b;
      saving_sum += s;
      saving_max = std::max(saving_max, s);
      saving_min = std::min(saving_min, s);
      positive += s > 0 ? 1 : 0;
    }
  }
  const double t = static_cast<double>(recs.size());
  row.mean_routed = routed / t;
  row.mean_cnots = post / t;
  row.verification_rate = static_cast<double>(verified) / t;
  if (has_baseline) {
    row.mean_baseline = base / t;
    row.saving_mean = saving_sum / t;
    row.saving_max = saving_max;
    row.saving_min = saving_min;
    row.positive_fraction = static_cast<double>(positive) / t;
  }
  return row;
}

}  // namespace

BenchFailure::BenchFailure(std::string architecture, TrialRecord record)
    : std::runtime_error(failure_message(architecture, record)),
      architecture_(std::move(architecture)),
      record_(std::move(record)) {}

BenchReport run_benchmark(const BenchConfig& config) {
  validate(config);
  const Architecture arch = resolve_architecture(config.architecture);

  struct Task {
    std::size_t gate_count;
    std::size_t trial;
  };
  std::vector<Task> tasks;
  for (std::size_t count : config.gate_counts) {
    for (std::size_t t = 0; t < config.trials; ++t) tasks.push_back({count, t});
  }
  std::vector<TrialRecord> records(tasks.size());
  std::vector<double> seconds(tasks.size(), 0.0);
  std::vector<std::string> errors(tasks.size());
  std::vector<char> done(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size() && !stop; i = next++) {
      const auto start = std::chrono::steady_clock::now();
      try {
        const Task& task = tasks[i];
        records[i] = run_trial(arch, task.gate_count, task.trial,
                               trial_seed(config.seed, task.gate_count, task.trial),
                               config.baseline);
        done[i] = 1;
        if (!records[i].verified()) stop = true;
      } catch (const std::exception& e) {
        errors[i] = e.what();
        stop = true;
      }
      seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  std::size_t threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(tasks.size(), 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!errors[i].empty()) {
      TrialRecord r;
      r.gate_count = tasks[i].gate_count;
      r.trial = tasks[i].trial;
      r.seed = trial_seed(config.seed, r.gate_count, r.trial);
      r.diagnostic = errors[i];
      throw BenchFailure(arch.name, std::move(r));
    }
    if (done[i] && !records[i].verified()) throw BenchFailure(arch.name, records[i]);
  }

  BenchReport report;
  report.architecture = arch.name;
  report.nodes = arch.graph.size();
  report.bound = reduction_bound(arch.graph.size());
  report.config = config;
  std::size_t begin = 0;
  for (std::size_t count : config.gate_counts) {
    std::vector<TrialRecord> slice(records.begin() + static_cast<std::ptrdiff_t>(begin),
                                   records.begin() + static_cast<std::ptrdiff_t>(begin + config.trials));
    std::vector<double> secs(seconds.begin() + static_cast<std::ptrdiff_t>(begin),
                             seconds.begin() + static_cast<std::ptrdiff_t>(begin + config.trials));
    report.rows.push_back(aggregate(count, slice, secs));
    begin += config.trials;
  }
  report.trials = std::move(records);
  return report;
}

namespace {

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

const char* baseline_name(Baseline b) { return b == Baseline::kSwapInsertion ? "swap" : "none"; }

}  // namespace

std::string report_to_json(const std::vector<BenchReport>& reports, bool include_timing) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["generator"] =
      "uniform ordered pairs of distinct wires, std::mt19937_64, per-trial seed derived from "
      "(seed, gate count, trial)";
  ordered_json archs = ordered_json::array();
  for (const BenchReport& rep : reports) {
    ordered_json a;
    a["architecture"] = rep.architecture;
    a["nodes"] = rep.nodes;
    a["block_bound"] = rep.bound;
    a["seed"] = rep.config.seed;
    a["trials"] = rep.config.trials;
    a["baseline"] = baseline_name(rep.config.baseline);
    a["status"] = rep.failed() ? "FAILED" : "ok";
    ordered_json rows = ordered_json::array();
    for (const BenchRow& r : rep.rows) {
      ordered_json row;
      row["gate_count"] = r.gate_count;
      row["mean_cnots"] = r.mean_cnots;
      row["mean_cnots_before_postprocess"] = r.mean_routed;
      row["max_block_cnots"] = r.max_block_cnots;
      row["mean_baseline_cnots"] = optional_number(r.mean_baseline);
      row["saving_mean_percent"] = optional_number(r.saving_mean);
      row["saving_max_percent"] = optional_number(r.saving_max);
      row["saving_min_percent"] = optional_number(r.saving_min);
      row["positive_fraction"] = optional_number(r.positive_fraction);
      row["verification_rate"] = r.verification_rate;
      if (include_timing) row["wall_seconds"] = r.wall_seconds;
      rows.push_back(std::move(row));
    }
    a["rows"] = std::move(rows);
    archs.push_back(std::move(a));
  }
  doc["reports"] = std::move(archs);
  return doc.dump(2) + "\n";
}

std::string report_to_table(const std::vector<BenchReport>& reports, bool include_timing) {
  std::ostringstream out;
  char buf[256];
  for (const BenchReport& rep : reports) {
    out << rep.architecture << " (" << rep.nodes << " nodes, seed " << rep.config.seed << ", "
        << rep.config.trials << " trials)" << (rep.failed() ? "  FAILED" : "") << '\n';
    std::snprintf(buf, sizeof buf, "%6s %10s %10s %10s %9s %9s %9s %9s %9s", "gates", "TR",
                  "TR-raw", "baseline", "mean%", "max%", "min%", "positive", "verified");
    out << buf << (include_timing ? "   seconds" : "") << '\n';
    for (const BenchRow& r : rep.rows) {
      auto pct = [&](const std::optional<double>& v) {
        char cell[32];
        if (v) {
          std::snprintf(cell, sizeof cell, "%9.2f", *v);
        } else {
          std::snprintf(cell, sizeof cell, "%9s", "-");
        }
        return std::string(cell);
      };
      char base[32];
      if (r.mean_baseline) {
        std::snprintf(base, sizeof base, "%10.2f", *r.mean_baseline);
      } else {
        std::snprintf(base, sizeof base, "%10s", "-");
      }
      std::snprintf(buf, sizeof buf, "%6zu %10.2f %10.2f %s", r.gate_count, r.mean_cnots,
                    r.mean_routed, base);
      out << buf << ' ' << pct(r.saving_mean) << ' ' << pct(r.saving_max) << ' '
          << pct(r.saving_min) << ' '
          << pct(r.positive_fraction ? std::optional<double>(100.0 * *r.positive_fraction)
                                     : std::nullopt)
          << ' ' << pct(100.0 * r.verification_rate);
      if (include_timing) {
        std::snprintf(buf, sizeof buf, " %9.2f", r.wall_seconds);
        out << buf;
      }
      out << '\n';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace tokred
