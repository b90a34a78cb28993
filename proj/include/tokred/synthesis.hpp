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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tokred/arch.hpp"
#include "tokred/circuit.hpp"
#include "tokred/row_graph.hpp"

namespace tokred {

struct RoutingStats {
  std::size_t input_cnots = 0;
  /// CNOT count of the routed circuit before post-processing (SWAP = 3).
  std::size_t routed_cnots = 0;
  /// Largest routed CNOT count of a single CNOT block.
  std::size_t max_block_cnots = 0;
  std::size_t blocks = 0;
  std::optional<std::size_t> postprocessed_cnots;
};

/// A circuit on architecture nodes together with where each input wire starts
/// and ends.
struct RoutedResult {
  Circuit circuit;
  Mapping input_mapping;
  Mapping output_mapping;
  RoutingStats stats;
};

/// Gates realising a logged reduction of P^T: ADD(u <- v) becomes CNOT(u, v)
/// and a swap becomes SWAP(u, v), in log order.
Circuit ops_to_circuit(std::size_t n, std::span<const RowOp> ops);

/// Routes a CNOT-only circuit whose wires start at the nodes given by m0. A
/// circuit that already fits the architecture under m0 is returned verbatim
/// (relabelled). Throws std::invalid_argument on other gates or on a size
/// mismatch.
RoutedResult route_cnot_block(const Circuit& c, const ArchGraph& graph, const Mapping& m0);

/// Routes CNOT, SWAP and one-qubit gates. Input SWAPs are expanded to CNOTs;
/// maximal CNOT runs are routed block by block while one-qubit gates follow
/// their wire's current node.
RoutedResult route_general(const Circuit& c, const ArchGraph& graph, const Mapping& m0);

struct Verification {
  bool ok = false;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// Every two-qubit gate of `c` acts on an edge of `graph`.
Verification check_compliance(const Circuit& c, const ArchGraph& graph);

/// Checks that `routed` implements `original` up to the wire placement given
/// by its input and output mappings, and that it respects the architecture.
/// CNOT-only circuits are compared through their parity matrices; circuits
/// with one-qubit gates are compared by symbolic simulation, treating every
/// one-qubit gate as an opaque function of its input.
Verification verify_equivalence(const Circuit& original, const RoutedResult& routed,
                                const ArchGraph& graph);

}  // namespace tokred
