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

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "oracles.hpp"
#include "tokred/heuristic.hpp"
#include "tokred/postprocess.hpp"
#include "tokred/synthesis.hpp"

namespace tokred {
namespace {

const ArchGraph& path4() {
  static const ArchGraph g({"A", "B", "C", "D"}, {{0, 1}, {1, 2}, {2, 3}});
  return g;
}

Circuit worked_example() {
  Circuit c(4);
  c.cnot(0, 2).cnot(2, 3);
  return c;
}

BitMatrix elementary(std::size_t n, std::size_t i, std::size_t j) {
  BitMatrix e = BitMatrix::identity(n);
  e.set(i, j, true);
  return e;
}

Circuit random_cnots(std::size_t n, std::size_t count, std::mt19937_64& rng) {
  Circuit c(n);
  for (std::size_t k = 0; k < count; ++k) {
    const Wire a = rng() % n;
    c.cnot(a, (a + 1 + rng() % (n - 1)) % n);
  }
  return c;
}

// Independent simulation on 64-bit atom masks. The k-th one-qubit gate of a
// circuit replaces its wire with atom n+k and records (name, value seen);
// the routed circuit must see the same sequence and end with the same
// per-wire values at the output mapping's nodes.
struct Trace {
  std::vector<std::uint64_t> values;
  std::vector<std::pair<std::string, std::uint64_t>> one_qubit;
};

Trace simulate(const Circuit& c, const std::vector<std::uint64_t>& start) {
  Trace t{start, {}};
  const Circuit expanded = expand_swaps(c);
  for (const Gate& g : expanded.gates()) {
    if (const auto* x = std::get_if<Cnot>(&g)) {
      t.values[x->target] ^= t.values[x->control];
    } else {
      const auto& q = std::get<OneQubitGate>(g);
      t.one_qubit.emplace_back(q.name, t.values[q.wire]);
      t.values[q.wire] = std::uint64_t{1} << (c.wires() + t.one_qubit.size() - 1);
    }
  }
  return t;
}

bool oracle_equivalent(const Circuit& original, const RoutedResult& r) {
  const std::size_t n = original.wires();
  std::vector<std::uint64_t> ref_start(n), got_start(n);
  for (Wire w = 0; w < n; ++w) {
    ref_start[w] = std::uint64_t{1} << w;
    got_start[r.input_mapping.node_of(w)] = std::uint64_t{1} << w;
  }
  const Trace ref = simulate(original, ref_start);
  const Trace got = simulate(r.circuit, got_start);
  if (ref.one_qubit != got.one_qubit) return false;
  for (Wire w = 0; w < n; ++w) {
    if (ref.values[w] != got.values[r.output_mapping.node_of(w)]) return false;
  }
  return true;
}

TEST(ReferenceDecomposition, ProductOfFactors) {
  const BitMatrix pt = BitMatrix::from_rows({{1, 0, 1, 1}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
  const BitMatrix mt = BitMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  const std::vector<BitMatrix> factors = {elementary(4, 0, 1), elementary(4, 1, 0), elementary(4, 0, 1),
                                          elementary(4, 1, 2), elementary(4, 2, 3), mt};
  BitMatrix product = BitMatrix::identity(4);
  for (const BitMatrix& f : factors) product = mat_mul(product, f);
  EXPECT_EQ(factors.size(), 6u);
  EXPECT_EQ(product, pt);
  EXPECT_EQ(transpose(circuit_to_matrix(worked_example())), pt);
}

// swap(A,B), Row(B) += Row(C), Row(C) += Row(D), leaving A and B exchanged.
TEST(ReferenceDecomposition, CircuitVerifiesWithExchangedOutput) {
  RoutedResult r{Circuit(4), Mapping::identity(4), Mapping({1, 0, 2, 3}), {}};
  r.circuit.swap(0, 1).cnot(1, 2).cnot(2, 3);
  EXPECT_TRUE(verify_equivalence(worked_example(), r, path4()));
  EXPECT_TRUE(oracle_equivalent(worked_example(), r));
  r.output_mapping = Mapping::identity(4);
  EXPECT_FALSE(verify_equivalence(worked_example(), r, path4()));
}

TEST(RouteCnotBlock, WorkedExample) {
  const RoutedResult r = route_cnot_block(worked_example(), path4(), Mapping::identity(4));
  EXPECT_EQ(r.stats.input_cnots, 2u);
  EXPECT_EQ(r.stats.routed_cnots, 10u);
  EXPECT_TRUE(verify_equivalence(worked_example(), r, path4()));
  EXPECT_TRUE(oracle_equivalent(worked_example(), r));
  const RoutedResult post = postprocess(r);
  ASSERT_TRUE(post.stats.postprocessed_cnots.has_value());
  EXPECT_LE(*post.stats.postprocessed_cnots, 7u);
  EXPECT_EQ(post.circuit.cnot_count(), *post.stats.postprocessed_cnots);
  EXPECT_TRUE(verify_equivalence(worked_example(), post, path4()));
  EXPECT_TRUE(oracle_equivalent(worked_example(), post));
}

TEST(RouteCnotBlock, FittingCircuitPassesThrough) {
  Circuit c(4);
  c.cnot(1, 2);
  const RoutedResult r = route_cnot_block(c, path4(), Mapping::identity(4));
  EXPECT_EQ(r.circuit, c);
  EXPECT_EQ(r.output_mapping, Mapping::identity(4));
  EXPECT_TRUE(verify_equivalence(c, r, path4()));

  // Same gate through a non-trivial placement that keeps it on an edge.
  const Mapping m0({3, 2, 1, 0});
  const RoutedResult moved = route_cnot_block(c, path4(), m0);
  Circuit expected(4);
  expected.cnot(2, 1);
  EXPECT_EQ(moved.circuit, expected);
  EXPECT_EQ(moved.output_mapping, m0);
}

TEST(RouteCnotBlock, Rejections) {
  Circuit wrong(3);
  EXPECT_THROW(route_cnot_block(wrong, path4(), Mapping::identity(3)), std::invalid_argument);
  Circuit mixed(4);
  mixed.one_qubit("h", 0);
  EXPECT_THROW(route_cnot_block(mixed, path4(), Mapping::identity(4)), std::invalid_argument);
}

TEST(RouteCnotBlock, RandomCircuitsOnGrid) {
  std::mt19937_64 rng(51);
  const ArchGraph g = make_grid(3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const Circuit c = random_cnots(9, 16, rng);
    std::vector<Node> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const RoutedResult r = route_cnot_block(c, g, Mapping(perm));
    ASSERT_TRUE(check_compliance(r.circuit, g));
    ASSERT_TRUE(verify_equivalence(c, r, g)) << format_circuit(c);
    ASSERT_TRUE(oracle_equivalent(c, r)) << format_circuit(c);
    ASSERT_LE(r.stats.routed_cnots, reduction_bound(9));
    const RoutedResult post = postprocess(r);
    ASSERT_TRUE(verify_equivalence(c, post, g));
    ASSERT_TRUE(oracle_equivalent(c, post));
    ASSERT_LE(post.circuit.cnot_count(), r.circuit.cnot_count());
  }
}

TEST(Verify, IdenticalCircuitIsEquivalent) {
  Circuit c(4);
  c.cnot(0, 1).cnot(2, 1).cnot(3, 2);
  const RoutedResult r{c, Mapping::identity(4), Mapping::identity(4), {}};
  EXPECT_TRUE(verify_equivalence(c, r, path4()));
}

TEST(Verify, DetectsDeletedGate) {
  const RoutedResult r = route_cnot_block(worked_example(), path4(), Mapping::identity(4));
  for (std::size_t drop = 0; drop < r.circuit.gates().size(); ++drop) {
    RoutedResult broken = r;
    broken.circuit = Circuit(4);
    for (std::size_t k = 0; k < r.circuit.gates().size(); ++k) {
      if (k != drop) broken.circuit.add(r.circuit.gates()[k]);
    }
    const Verification v = verify_equivalence(worked_example(), broken, path4());
    EXPECT_FALSE(v);
    EXPECT_FALSE(v.diagnostic.empty());
    EXPECT_EQ(bool(v), oracle_equivalent(worked_example(), broken));
  }
}

TEST(Verify, DetectsOffEdgeGate) {
  RoutedResult r{worked_example(), Mapping::identity(4), Mapping::identity(4), {}};
  const Verification v = verify_equivalence(worked_example(), r, path4());
  EXPECT_FALSE(v);
  EXPECT_EQ(v.diagnostic, "gate 0 acts on A and C, which are not adjacent");
  EXPECT_FALSE(check_compliance(r.circuit, path4()));
}

TEST(Verify, DetectsWrongOneQubitPlacement) {
  Circuit c(2);
  c.one_qubit("h", 0).cnot(0, 1);
  const ArchGraph g = make_line(2);
  RoutedResult r{Circuit(2), Mapping::identity(2), Mapping::identity(2), {}};
  r.circuit.one_qubit("h", 1).cnot(0, 1);
  EXPECT_FALSE(verify_equivalence(c, r, g));
  r.circuit = c;
  EXPECT_TRUE(verify_equivalence(c, r, g));
}

TEST(RouteGeneral, CnotOnlyMatchesBlockRouter) {
  std::mt19937_64 rng(53);
  const ArchGraph g = make_grid(3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = random_cnots(9, 20, rng);
    const RoutedResult a = route_general(c, g, Mapping::identity(9));
    const RoutedResult b = route_cnot_block(c, g, Mapping::identity(9));
    ASSERT_EQ(a.circuit, b.circuit);
    ASSERT_EQ(a.output_mapping, b.output_mapping);
    ASSERT_EQ(a.stats.routed_cnots, b.stats.routed_cnots);
    ASSERT_EQ(a.stats.blocks, 1u);
  }
}

TEST(RouteGeneral, HadamardSandwich) {
  Circuit c(2);
  c.one_qubit("h", 0).cnot(0, 1).one_qubit("h", 0);
  const ArchGraph g = make_line(2);
  const RoutedResult r = route_general(c, g, Mapping::identity(2));
  EXPECT_EQ(r.circuit, c);
  EXPECT_EQ(r.stats.blocks, 1u);
  EXPECT_TRUE(verify_equivalence(c, r, g));
}

TEST(RouteGeneral, InterleavedOneQubitGates) {
  std::mt19937_64 rng(54);
  const ArchGraph g = make_grid(3, 3);
  const char* names[] = {"h", "t", "s"};
  for (int trial = 0; trial < 50; ++trial) {
    Circuit c(9);
    for (int k = 0; k < 40; ++k) {
      const Wire a = rng() % 9;
      const int kind = rng() % 8;
      if (kind == 0) {
        c.one_qubit(names[rng() % 3], a);
      } else if (kind == 1) {
        c.swap(a, (a + 1 + rng() % 8) % 9);
      } else {
        c.cnot(a, (a + 1 + rng() % 8) % 9);
      }
    }
    const RoutedResult r = route_general(c, g, Mapping::identity(9));
    ASSERT_TRUE(verify_equivalence(c, r, g)) << format_circuit(c);
    ASSERT_TRUE(oracle_equivalent(c, r)) << format_circuit(c);
    ASSERT_LE(r.stats.max_block_cnots, reduction_bound(9));
    const RoutedResult post = postprocess(r);
    ASSERT_TRUE(verify_equivalence(c, post, g));
    ASSERT_TRUE(oracle_equivalent(c, post));
  }
}

TEST(OpsToCircuit, EmissionConvention) {
  const std::vector<RowOp> ops = {RowOp::add(1, 2), RowOp::swap(0, 1)};
  Circuit expected(3);
  expected.cnot(1, 2).swap(0, 1);
  EXPECT_EQ(ops_to_circuit(3, ops), expected);
}

}  // namespace
}  // namespace tokred
