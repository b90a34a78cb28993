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


#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "oracles.hpp"
#include "tokred/circuit.hpp"

namespace tokred {
namespace {

std::string error_of(std::string_view text) {
  try {
    parse_circuit(text);
  } catch (const std::runtime_error& e) {
    return e.what();
  }
  return "";
}

TEST(Circuit, Builders) {
  Circuit c(3);
  c.cnot(0, 1).swap(1, 2).one_qubit("h", 0);
  EXPECT_EQ(c.gates().size(), 3u);
  EXPECT_EQ(c.cnot_count(), 4u);
  EXPECT_FALSE(c.is_cnot_only());
  EXPECT_TRUE(c.has_one_qubit_gates());
  EXPECT_EQ(gate_wires(c.gates()[1]), (std::vector<Wire>{1, 2}));
  EXPECT_EQ(gate_wires(c.gates()[2]), (std::vector<Wire>{0}));
}

TEST(Circuit, RejectsBadWires) {
  Circuit c(2);
  EXPECT_THROW(c.cnot(0, 2), std::invalid_argument);
  EXPECT_THROW(c.cnot(1, 1), std::invalid_argument);
  EXPECT_THROW(c.swap(0, 0), std::invalid_argument);
  EXPECT_THROW(c.one_qubit("x", 5), std::invalid_argument);
  EXPECT_TRUE(c.empty());
}

TEST(Parse, RoundTrip) {
  const std::string text =
      "# example\n"
      "qubits 4\n"
      "cnot 0 2   # first\n"
      "\n"
      "swap 3 1\n"
      "1q rz(0.5) 2\n"
      "cnot 2 3\n";
  const Circuit c = parse_circuit(text);
  Circuit expected(4);
  expected.cnot(0, 2).swap(3, 1).one_qubit("rz(0.5)", 2).cnot(2, 3);
  EXPECT_EQ(c, expected);
  EXPECT_EQ(parse_circuit(format_circuit(c)), c);
  EXPECT_EQ(format_circuit(c), "qubits 4\ncnot 0 2\nswap 3 1\n1q rz(0.5) 2\ncnot 2 3\n");
}

TEST(Parse, RandomRoundTrip) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    Circuit c(n);
    for (int k = 0; k < 30; ++k) {
      const Wire a = rng() % n;
      const Wire b = (a + 1 + rng() % (n - 1)) % n;
      switch (rng() % 3) {
        case 0: c.cnot(a, b); break;
        case 1: c.swap(a, b); break;
        default: c.one_qubit("t", a); break;
      }
    }
    ASSERT_EQ(parse_circuit(format_circuit(c)), c);
  }
}

TEST(Parse, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_of("qubits 2\ncnot 0\n"), "circuit line 2: missing target");
  EXPECT_EQ(error_of("qubits 2\n\ncnot 0 x\n"), "circuit line 3: invalid target 'x'");
  EXPECT_EQ(error_of("qubits 2\ntoffoli 0 1\n"), "circuit line 2: unknown gate 'toffoli'");
  EXPECT_EQ(error_of("cnot 0 1\n"), "circuit line 1: gate before 'qubits' header");
  EXPECT_EQ(error_of("qubits 2\nqubits 3\n"), "circuit line 2: duplicate 'qubits' header");
  EXPECT_EQ(error_of("qubits 2\ncnot 0 1 1\n"), "circuit line 2: unexpected trailing token '1'");
  EXPECT_EQ(error_of("qubits 2\ncnot -1 1\n"), "circuit line 2: invalid control '-1'");
  EXPECT_NE(error_of("qubits 2\ncnot 0 2\n").find("circuit line 2:"), std::string::npos);
  EXPECT_EQ(error_of(""), "circuit has no 'qubits' header");
}

TEST(Matrix, WorkedExample) {
  Circuit c(4);
  c.cnot(0, 2).cnot(2, 3);
  EXPECT_EQ(circuit_to_matrix(c),
            BitMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 1, 1}}));
}

TEST(Matrix, EmptyAndInvolutions) {
  EXPECT_EQ(circuit_to_matrix(Circuit(5)), BitMatrix::identity(5));
  Circuit c(3);
  c.cnot(2, 0).cnot(2, 0);
  EXPECT_EQ(circuit_to_matrix(c), BitMatrix::identity(3));
  Circuit s(3);
  s.swap(0, 2);
  EXPECT_EQ(circuit_to_matrix(s), BitMatrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST(Matrix, RejectsOneQubitGates) {
  Circuit c(2);
  c.one_qubit("h", 0);
  EXPECT_THROW(circuit_to_matrix(c), std::invalid_argument);
}

// Gate-by-gate simulation on bitmask basis states.
TEST(Matrix, AgreesWithStateSimulation) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    Circuit c(n);
    for (int k = 0; k < 20; ++k) {
      const Wire a = rng() % n;
      const Wire b = (a + 1 + rng() % (n - 1)) % n;
      if (rng() % 4 == 0) {
        c.swap(a, b);
      } else {
        c.cnot(a, b);
      }
    }
    const BitMatrix m = circuit_to_matrix(c);
    for (std::size_t in = 0; in < n; ++in) {
      std::vector<int> state(n, 0);
      state[in] = 1;
      for (const Gate& g : c.gates()) {
        if (const auto* x = std::get_if<Cnot>(&g)) state[x->target] ^= state[x->control];
        if (const auto* x = std::get_if<Swap>(&g)) std::swap(state[x->a], state[x->b]);
      }
      for (std::size_t out = 0; out < n; ++out) ASSERT_EQ(m.get(out, in), state[out] == 1);
    }
  }
}

TEST(ExpandSwaps, ThreeCnots) {
  Circuit c(3);
  c.one_qubit("h", 1).swap(0, 2);
  Circuit expected(3);
  expected.one_qubit("h", 1).cnot(0, 2).cnot(2, 0).cnot(0, 2);
  EXPECT_EQ(expand_swaps(c), expected);
  Circuit s(3);
  s.swap(0, 2);
  EXPECT_EQ(circuit_to_matrix(expand_swaps(s)), circuit_to_matrix(s));
}

TEST(Mapping, Validation) {
  EXPECT_THROW(Mapping({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Mapping({0, 3, 1}), std::invalid_argument);
  const Mapping m({2, 0, 1});
  EXPECT_EQ(m.node_of(0), 2u);
  EXPECT_EQ(m.wire_at(2), 0u);
  EXPECT_EQ(m.wire_at(0), 1u);
  EXPECT_EQ(Mapping::identity(3).wire_to_node(), (std::vector<Node>{0, 1, 2}));
}

TEST(Mapping, Relabel) {
  Circuit c(3);
  c.cnot(0, 1).one_qubit("x", 2).swap(2, 0);
  Circuit expected(3);
  expected.cnot(2, 0).one_qubit("x", 1).swap(1, 2);
  EXPECT_EQ(relabel(c, Mapping({2, 0, 1})), expected);
  EXPECT_THROW(relabel(c, Mapping::identity(4)), std::invalid_argument);
}

TEST(Mapping, ParseAndFormat) {
  const ArchGraph g({"A", "B", "C"}, {{0, 1}, {1, 2}});
  std::istringstream in("# placement\n0 C\n\n2 A\n1 B\n");
  const Mapping m = parse_mapping(in, g);
  EXPECT_EQ(m.wire_to_node(), (std::vector<Node>{2, 1, 0}));
  EXPECT_EQ(format_mapping(m, g), "0 C\n1 B\n2 A\n");
  std::istringstream again(format_mapping(m, g));
  EXPECT_EQ(parse_mapping(again, g), m);
}

TEST(Mapping, ParseErrors) {
  const ArchGraph g({"A", "B"}, {{0, 1}});
  auto error = [&](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_mapping(in, g);
    } catch (const std::runtime_error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_EQ(error("0 A\n1 Z\n"), "mapping line 2: unknown node 'Z'");
  EXPECT_EQ(error("0 A\n0 B\n"), "mapping line 2: wire out of range or repeated");
  EXPECT_EQ(error("0\n"), "mapping line 1: expected a node name");
  EXPECT_EQ(error("A 0\n"), "mapping line 1: expected a wire index");
  EXPECT_EQ(error("0 A\n1 A\n"), "mapping does not assign every wire to a distinct node");
  EXPECT_EQ(error("0 A\n"), "mapping does not assign every wire to a distinct node");
}

}  // namespace
}  // namespace tokred
