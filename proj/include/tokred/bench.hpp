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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tokred/architecture_file.hpp"
#include "tokred/circuit.hpp"
#include "tokred/synthesis.hpp"

namespace tokred {

/// `count` CNOTs on `n` wires, each (control, target) drawn uniformly from the
/// ordered pairs of distinct wires by a std::mt19937_64 seeded with `seed`.
/// Throws std::invalid_argument if n < 2.
Circuit random_cnot_circuit(std::size_t n, std::size_t count, std::uint64_t seed);

/// Reference router: before each CNOT whose endpoints are not adjacent, the
/// control is swapped along a shortest path until it is. Never post-processed.
RoutedResult swap_insertion_baseline(const Circuit& c, const ArchGraph& graph, const Mapping& m0);

enum class Baseline { kSwapInsertion, kNone };

struct BenchConfig {
  std::string architecture;
  std::vector<std::size_t> gate_counts = {4, 8, 16, 32, 64, 128, 256};
  std::size_t trials = 100;
  std::uint64_t seed = 2020;
  Baseline baseline = Baseline::kSwapInsertion;
  /// 0 picks the hardware concurrency.
  std::size_t threads = 0;
};

/// Throws std::invalid_argument if trials is 0 or a gate count list is empty.
void validate(const BenchConfig& config);

/// Seed of one trial, derived from the run seed, gate count and trial index.
std::uint64_t trial_seed(std::uint64_t base, std::size_t gate_count, std::size_t trial);

struct TrialRecord {
  std::size_t gate_count = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t routed_cnots = 0;         // before post-processing
  std::size_t postprocessed_cnots = 0;  // the reported count
  std::size_t max_block_cnots = 0;
  std::optional<std::size_t> baseline_cnots;
  bool verified_routed = false;
  bool verified_postprocessed = false;
  bool verified_baseline = true;
  std::string diagnostic;

  bool verified() const { return verified_routed && verified_postprocessed && verified_baseline; }
};

/// Generates, routes (with post-processing), routes with the baseline and
/// verifies a single benchmark circuit.
TrialRecord run_trial(const Architecture& arch, std::size_t gate_count, std::size_t trial,
                      std::uint64_t seed, Baseline baseline);

struct BenchRow {
  std::size_t gate_count = 0;
  std::size_t trials = 0;
  double mean_routed = 0;  // before post-processing
  double mean_cnots = 0;   // after post-processing
  std::size_t max_block_cnots = 0;
  std::optional<double> mean_baseline;
  std::optional<double> saving_mean;  // percent of the baseline count
  std::optional<double> saving_max;
  std::optional<double> saving_min;
  std::optional<double> positive_fraction;
  double verification_rate = 0;
  double wall_seconds = 0;
  bool failed() const { return verification_rate != 1.0; }
};

struct BenchReport {
  std::string architecture;
  std::size_t nodes = 0;
  std::size_t bound = 0;  // per-block CNOT ceiling
  BenchConfig config;
  std::vector<BenchRow> rows;
  std::vector<TrialRecord> trials;  // ordered by gate count, then trial

  bool failed() const;
};

/// Raised when a benchmark circuit fails verification; carries what is needed
/// to replay it.
class BenchFailure : public std::runtime_error {
 public:
  BenchFailure(std::string architecture, TrialRecord record);
  const std::string& architecture() const { return architecture_; }
  const TrialRecord& record() const { return record_; }

 private:
  std::string architecture_;
  TrialRecord record_;
};

/// Runs every (gate count, trial) pair across a worker pool. Throws
/// BenchFailure on the first verification failure (by trial order) and
/// std::runtime_error for an unknown architecture.
BenchReport run_benchmark(const BenchConfig& config);

/// Deterministic JSON rendering; timing is only included when asked for.
std::string report_to_json(const std::vector<BenchReport>& reports, bool include_timing = false);
std::string report_to_table(const std::vector<BenchReport>& reports, bool include_timing = false);

}  // namespace tokred
