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

#include "tokred/circuit.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace tokred {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::vector<Wire> gate_wires(const Gate& g) {
  return std::visit(Overloaded{
                        [](const Cnot& c) { return std::vector<Wire>{c.control, c.target}; },
                        [](const Swap& s) { return std::vector<Wire>{s.a, s.b}; },
                        [](const OneQubitGate& o) { return std::vector<Wire>{o.wire}; },
                    },
                    g);
}

Circuit& Circuit::add(Gate gate) {
  auto wires = gate_wires(gate);
  for (Wire w : wires) {
    if (w >= n_wires_) {
      throw std::invalid_argument("gate wire " + std::to_string(w) + " out of range for " +
                                  std::to_string(n_wires_) + " wires");
    }
  }
  if (wires.size() == 2 && wires[0] == wires[1]) {
    throw std::invalid_argument("two-qubit gate acts twice on wire " + std::to_string(wires[0]));
  }
  gates_.push_back(std::move(gate));
  return *this;
}

std::size_t Circuit::cnot_count() const {
  std::size_t count = 0;
  for (const Gate& g : gates_) {
    if (std::holds_alternative<Cnot>(g)) count += 1;
    if (std::holds_alternative<Swap>(g)) count += 3;
  }
  return count;
}

bool Circuit::is_cnot_only() const {
  for (const Gate& g : gates_) {
    if (!std::holds_alternative<Cnot>(g)) return false;
  }
  return true;
}

bool Circuit::has_one_qubit_gates() const {
  for (const Gate& g : gates_) {
    if (std::holds_alternative<OneQubitGate>(g)) return true;
  }
  return false;
}

Circuit expand_swaps(const Circuit& c) {
  Circuit out(c.wires());
  for (const Gate& g : c.gates()) {
    if (const auto* s = std::get_if<Swap>(&g)) {
      out.cnot(s->a, s->b).cnot(s->b, s->a).cnot(s->a, s->b);
    } else {
      out.add(g);
    }
  }
  return out;
}

BitMatrix circuit_to_matrix(const Circuit& c) {
  BitMatrix m = BitMatrix::identity(c.wires());
  for (const Gate& g : c.gates()) {
    if (const auto* cx = std::get_if<Cnot>(&g)) {
      m.row_add(cx->target, cx->control);
    } else if (const auto* sw = std::get_if<Swap>(&g)) {
      m.swap_rows(sw->a, sw->b);
    } else {
      throw std::invalid_argument("circuit_to_matrix: circuit contains a one-qubit gate");
    }
  }
  return m;
}

Circuit parse_circuit(std::istream& in) {
  std::optional<Circuit> circuit;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("circuit line " + std::to_string(line_no) + ": " + why);
  };
  auto read_index = [&](std::istringstream& fields, const char* what) {
    std::string token;
    if (!(fields >> token)) fail(std::string("missing ") + what);
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(token, &pos);
    } catch (const std::exception&) {
      fail(std::string("invalid ") + what + " '" + token + "'");
    }
    if (pos != token.size() || token[0] == '-') fail(std::string("invalid ") + what + " '" + token + "'");
    return static_cast<std::size_t>(value);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;

    if (keyword == "qubits") {
      if (circuit) fail("duplicate 'qubits' header");
      circuit.emplace(read_index(fields, "qubit count"));
    } else {
      if (!circuit) fail("gate before 'qubits' header");
      try {
        if (keyword == "cnot") {
          Wire c = read_index(fields, "control");
          Wire t = read_index(fields, "target");
          circuit->cnot(c, t);
        } else if (keyword == "swap") {
          Wire a = read_index(fields, "wire");
          Wire b = read_index(fields, "wire");
          circuit->swap(a, b);
        } else if (keyword == "1q") {
          std::string name;
          if (!(fields >> name)) fail("missing gate name");
          circuit->one_qubit(name, read_index(fields, "wire"));
        } else {
          fail("unknown gate '" + keyword + "'");
        }
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    std::string extra;
    if (fields >> extra) fail("unexpected trailing token '" + extra + "'");
  }
  if (!circuit) throw std::runtime_error("circuit has no 'qubits' header");
  return *std::move(circuit);
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_circuit(in);
}

std::string format_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.wires() << '\n';
  for (const Gate& g : c.gates()) {
    std::visit(Overloaded{
                   [&](const Cnot& x) { out << "cnot " << x.control << ' ' << x.target << '\n'; },
                   [&](const Swap& x) { out << "swap " << x.a << ' ' << x.b << '\n'; },
                   [&](const OneQubitGate& x) { out << "1q " << x.name << ' ' << x.wire << '\n'; },
               },
               g);
  }
  return out.str();
}

Mapping::Mapping(std::vector<Node> wire_to_node)
    : to_node_(std::move(wire_to_node)), to_wire_(to_node_.size(), kNoNode) {
  for (Wire w = 0; w < to_node_.size(); ++w) {
    const Node u = to_node_[w];
    if (u >= to_node_.size() || to_wire_[u] != kNoNode) {
      throw std::invalid_argument("mapping is not a bijection");
    }
    to_wire_[u] = w;
  }
}

Mapping Mapping::identity(std::size_t n) {
  std::vector<Node> m(n);
  for (Wire w = 0; w < n; ++w) m[w] = w;
  return Mapping(std::move(m));
}

Circuit relabel(const Circuit& c, const Mapping& m) {
  if (m.size() != c.wires()) throw std::invalid_argument("mapping size differs from circuit width");
  Circuit out(c.wires());
  for (const Gate& g : c.gates()) {
    out.add(std::visit(Overloaded{
                           [&](const Cnot& x) -> Gate {
                             return Cnot{m.node_of(x.control), m.node_of(x.target)};
                           },
                           [&](const Swap& x) -> Gate { return Swap{m.node_of(x.a), m.node_of(x.b)}; },
                           [&](const OneQubitGate& x) -> Gate {
                             return OneQubitGate{x.name, m.node_of(x.wire)};
                           },
                       },
                       g));
  }
  return out;
}

Mapping parse_mapping(std::istream& in, const ArchGraph& graph) {
  std::vector<Node> m(graph.size(), kNoNode);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::size_t wire = 0;
    std::string name;
    if (!(fields >> wire)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw std::runtime_error("mapping line " + std::to_string(line_no) + ": expected a wire index");
    }
    if (!(fields >> name)) {
      throw std::runtime_error("mapping line " + std::to_string(line_no) + ": expected a node name");
    }
    auto node = graph.index_of(name);
    if (!node) {
      throw std::runtime_error("mapping line " + std::to_string(line_no) + ": unknown node '" +
                               name + "'");
    }
    if (wire >= m.size() || m[wire] != kNoNode) {
      throw std::runtime_error("mapping line " + std::to_string(line_no) +
                               ": wire out of range or repeated");
    }
    m[wire] = *node;
  }
  try {
    return Mapping(std::move(m));
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("mapping does not assign every wire to a distinct node");
  }
}

std::string format_mapping(const Mapping& m, const ArchGraph& graph) {
  std::ostringstream out;
  for (Wire w = 0; w < m.size(); ++w) out << w << ' ' << graph.name(m.node_of(w)) << '\n';
  return out.str();
}

}  // namespace tokred
