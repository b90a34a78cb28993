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

#include "tokred/synthesis.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>
#include <utility>

#include "tokred/heuristic.hpp"

namespace tokred {

Circuit ops_to_circuit(std::size_t n, std::span<const RowOp> ops) {
  Circuit out(n);
  for (const RowOp& op : ops) {
    if (op.kind == RowOpKind::kAdd) {
      out.cnot(op.a, op.b);
    } else {
      out.swap(op.a, op.b);
    }
  }
  return out;
}

namespace {

bool fits(const Circuit& on_nodes, const ArchGraph& graph) {
  for (const Gate& g : on_nodes.gates()) {
    const auto w = gate_wires(g);
    if (w.size() == 2 && !graph.adjacent(w[0], w[1])) return false;
  }
  return true;
}

}  // namespace

RoutedResult route_cnot_block(const Circuit& c, const ArchGraph& graph, const Mapping& m0) {
  const std::size_t n = graph.size();
  if (c.wires() != n || m0.size() != n) {
    throw std::invalid_argument("route_cnot_block: circuit has " + std::to_string(c.wires()) +
                                " wires and the mapping " + std::to_string(m0.size()) +
                                ", but the architecture has " + std::to_string(n) + " nodes");
  }
  if (!c.is_cnot_only()) throw std::invalid_argument("route_cnot_block: circuit is not CNOT-only");

  RoutedResult out{Circuit(n), m0, m0, {}};
  out.stats.input_cnots = c.cnot_count();
  out.stats.blocks = 1;

  Circuit on_nodes = relabel(c, m0);
  if (fits(on_nodes, graph)) {
    out.circuit = std::move(on_nodes);
  } else {
    RowGraph rg(graph, transpose(circuit_to_matrix(on_nodes)));
    const std::vector<RowOp> ops = heuristic_token_reduction(rg);
    out.circuit = ops_to_circuit(n, ops);
    // Node u now holds e_i: whatever started at node i ends at u.
    std::vector<Node> ends_at(n);
    for (Node u = 0; u < n; ++u) ends_at[*rg.assignment().row_unit_index(u)] = u;
    std::vector<Node> m(n);
    for (Wire w = 0; w < n; ++w) m[w] = ends_at[m0.node_of(w)];
    out.output_mapping = Mapping(std::move(m));
  }
  out.stats.routed_cnots = out.circuit.cnot_count();
  out.stats.max_block_cnots = out.stats.routed_cnots;
  return out;
}

RoutedResult route_general(const Circuit& c, const ArchGraph& graph, const Mapping& m0) {
  const std::size_t n = graph.size();
  if (c.wires() != n || m0.size() != n) {
    throw std::invalid_argument("route_general: circuit has " + std::to_string(c.wires()) +
                                " wires and the mapping " + std::to_string(m0.size()) +
                                ", but the architecture has " + std::to_string(n) + " nodes");
  }
  const Circuit expanded = expand_swaps(c);
  RoutedResult out{Circuit(n), m0, m0, {}};
  out.stats.input_cnots = c.cnot_count();

  const auto& gates = expanded.gates();
  std::size_t i = 0;
  while (i < gates.size()) {
    if (const auto* q = std::get_if<OneQubitGate>(&gates[i])) {
      out.circuit.one_qubit(q->name, out.output_mapping.node_of(q->wire));
      ++i;
      continue;
    }
    Circuit block(n);
    while (i < gates.size() && std::holds_alternative<Cnot>(gates[i])) block.add(gates[i++]);
    RoutedResult routed = route_cnot_block(block, graph, out.output_mapping);
    for (const Gate& g : routed.circuit.gates()) out.circuit.add(g);
    out.output_mapping = routed.output_mapping;
    out.stats.blocks += 1;
    out.stats.max_block_cnots = std::max(out.stats.max_block_cnots, routed.stats.routed_cnots);
  }
  out.stats.routed_cnots = out.circuit.cnot_count();
  return out;
}

Verification check_compliance(const Circuit& c, const ArchGraph& graph) {
  if (c.wires() != graph.size()) {
    return {false, "routed circuit has " + std::to_string(c.wires()) + " wires, architecture has " +
                       std::to_string(graph.size()) + " nodes"};
  }
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const auto w = gate_wires(c.gates()[i]);
    if (w.size() == 2 && !graph.adjacent(w[0], w[1])) {
      return {false, "gate " + std::to_string(i) + " acts on " + graph.name(w[0]) + " and " +
                         graph.name(w[1]) + ", which are not adjacent"};
    }
  }
  return {true, {}};
}

namespace {

/// Symbolic values: each wire holds a set of atoms XORed together. Atoms are
/// the initial inputs and the outputs of one-qubit gates, the latter
/// identified by the gate name and the exact value it was applied to.
class SymbolicState {
 public:
  using Value = std::vector<std::size_t>;  // sorted atom ids

  explicit SymbolicState(std::size_t n, std::map<std::pair<std::string, Value>, std::size_t>& atoms,
                         std::size_t& next_atom)
      : values_(n), atoms_(atoms), next_atom_(next_atom) {}

  void set(std::size_t w, Value v) { values_[w] = std::move(v); }
  const Value& get(std::size_t w) const { return values_[w]; }

  void apply(const Gate& g) {
    if (const auto* cx = std::get_if<Cnot>(&g)) {
      Value sum;
      const Value& a = values_[cx->target];
      const Value& b = values_[cx->control];
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                    std::back_inserter(sum));
      values_[cx->target] = std::move(sum);
    } else if (const auto* s = std::get_if<Swap>(&g)) {
      std::swap(values_[s->a], values_[s->b]);
    } else {
      const auto& q = std::get<OneQubitGate>(g);
      auto [it, inserted] = atoms_.try_emplace({q.name, values_[q.wire]}, next_atom_);
      if (inserted) ++next_atom_;
      values_[q.wire] = Value{it->second};
    }
  }

 private:
  std::vector<Value> values_;
  std::map<std::pair<std::string, Value>, std::size_t>& atoms_;
  std::size_t& next_atom_;
};

Verification verify_symbolic(const Circuit& original, const RoutedResult& routed) {
  const std::size_t n = original.wires();
  std::map<std::pair<std::string, SymbolicState::Value>, std::size_t> atoms;
  std::size_t next_atom = n;
  SymbolicState ref(n, atoms, next_atom);
  SymbolicState got(n, atoms, next_atom);
  for (std::size_t w = 0; w < n; ++w) {
    ref.set(w, {w});
    got.set(routed.input_mapping.node_of(w), {w});
  }
  for (const Gate& g : original.gates()) ref.apply(g);
  for (const Gate& g : routed.circuit.gates()) got.apply(g);
  for (std::size_t w = 0; w < n; ++w) {
    if (ref.get(w) != got.get(routed.output_mapping.node_of(w))) {
      return {false, "wire " + std::to_string(w) + " does not end at node " +
                         std::to_string(routed.output_mapping.node_of(w)) +
                         " with the value the original circuit computes"};
    }
  }
  return {true, {}};
}

}  // namespace

Verification verify_equivalence(const Circuit& original, const RoutedResult& routed,
                                const ArchGraph& graph) {
  const std::size_t n = graph.size();
  if (original.wires() != n || routed.input_mapping.size() != n ||
      routed.output_mapping.size() != n) {
    return {false, "circuit or mapping size does not match the architecture"};
  }
  if (Verification v = check_compliance(routed.circuit, graph); !v) return v;

  const Circuit lhs = expand_swaps(original);
  const Circuit rhs = expand_swaps(routed.circuit);
  if (lhs.has_one_qubit_gates() || rhs.has_one_qubit_gates()) {
    return verify_symbolic(original, routed);
  }

  // Row M_t(w) of the permutation picks row M0(w) of the relabelled original.
  const BitMatrix expected = circuit_to_matrix(relabel(lhs, routed.input_mapping));
  BitMatrix permuted(n);
  for (Wire w = 0; w < n; ++w) {
    permuted.set_row(routed.output_mapping.node_of(w),
                     expected.row(routed.input_mapping.node_of(w)));
  }
  const BitMatrix actual = circuit_to_matrix(rhs);
  if (!(actual == permuted)) {
    for (Node u = 0; u < n; ++u) {
      if (!actual.rows_equal(u, permuted.row(u))) {
        return {false, "parity of node " + graph.name(u) + " is " + actual.row(u).to_string() +
                           ", expected " + permuted.row(u).to_string()};
      }
    }
  }
  return {true, {}};
}

}  // namespace tokred
