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
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tokred/arch.hpp"
#include "tokred/f2.hpp"

namespace tokred {

/// Circuit wire (logical qubit) index.
using Wire = std::size_t;

struct Cnot {
  Wire control;
  Wire target;
  bool operator==(const Cnot&) const = default;
};

struct Swap {
  Wire a;
  Wire b;
  bool operator==(const Swap&) const = default;
};

/// Any single-qubit gate; only its label is kept.
struct OneQubitGate {
  std::string name;
  Wire wire;
  bool operator==(const OneQubitGate&) const = default;
};

using Gate = std::variant<Cnot, Swap, OneQubitGate>;

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n_wires) : n_wires_(n_wires) {}

  std::size_t wires() const { return n_wires_; }
  const std::vector<Gate>& gates() const { return gates_; }
  bool empty() const { return gates_.empty(); }

  /// Appends a gate. Throws std::invalid_argument for an out-of-range wire or
  /// a two-qubit gate acting twice on one wire.
  Circuit& add(Gate gate);
  Circuit& cnot(Wire control, Wire target) { return add(Cnot{control, target}); }
  Circuit& swap(Wire a, Wire b) { return add(Swap{a, b}); }
  Circuit& one_qubit(std::string name, Wire w) { return add(OneQubitGate{std::move(name), w}); }

  /// Two-qubit cost in CNOTs; a SWAP counts three.
  std::size_t cnot_count() const;
  bool is_cnot_only() const;
  bool has_one_qubit_gates() const;

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t n_wires_ = 0;
  std::vector<Gate> gates_;
};

/// Wires touched by a gate: one or two entries.
std::vector<Wire> gate_wires(const Gate& g);

/// Replaces each SWAP(a, b) by CNOT(a,b) CNOT(b,a) CNOT(a,b).
Circuit expand_swaps(const Circuit& c);

/// Parity matrix of a circuit of CNOTs and SWAPs: rows start as the identity,
/// each CNOT adds the control row into the target row and each SWAP exchanges
/// two rows, in circuit order. Throws std::invalid_argument on a one-qubit
/// gate.
BitMatrix circuit_to_matrix(const Circuit& c);

/// Line-based text format:
///
///   qubits <n>
///   cnot <control> <target>
///   swap <a> <b>
///   1q <name> <wire>
///
/// Wires are 0-based; '#' starts a comment. Throws std::runtime_error with a
/// line number on malformed input.
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit(std::string_view text);
/// Canonical rendering accepted by parse_circuit.
std::string format_circuit(const Circuit& c);

/// Bijection wire -> node.
class Mapping {
 public:
  Mapping() = default;
  /// Throws std::invalid_argument unless `wire_to_node` is a permutation of
  /// 0..n-1.
  explicit Mapping(std::vector<Node> wire_to_node);
  static Mapping identity(std::size_t n);

  std::size_t size() const { return to_node_.size(); }
  Node node_of(Wire w) const { return to_node_.at(w); }
  Wire wire_at(Node u) const { return to_wire_.at(u); }
  const std::vector<Node>& wire_to_node() const { return to_node_; }

  bool operator==(const Mapping&) const = default;

 private:
  std::vector<Node> to_node_;
  std::vector<Wire> to_wire_;
};

/// Rewrites a circuit on wires into one on nodes.
Circuit relabel(const Circuit& c, const Mapping& m);

/// Reads "<wire> <node-name>" lines ('#' comments allowed).
Mapping parse_mapping(std::istream& in, const ArchGraph& graph);
std::string format_mapping(const Mapping& m, const ArchGraph& graph);

}  // namespace tokred
