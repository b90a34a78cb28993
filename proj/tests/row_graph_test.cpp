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
#include <stdexcept>

#include "oracles.hpp"
#include "tokred/heuristic.hpp"
#include "tokred/row_graph.hpp"

namespace tokred {
namespace {

// Path A - B - C - D.
const ArchGraph& path4() {
  static const ArchGraph g({"A", "B", "C", "D"}, {{0, 1}, {1, 2}, {2, 3}});
  return g;
}

const BitMatrix kPt = BitMatrix::from_rows({{1, 0, 1, 1}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});

TEST(RowGraph, NodeAddition) {
  RowGraph rg(path4(), kPt);
  rg.node_add(0, 1);
  rg.node_add(0, 1);
  EXPECT_EQ(rg.assignment(), kPt);
  // Row(B) <- Row(B) + Row(C) on rows B = 1011, C = 0011.
  RowGraph rg2(path4(), BitMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}}));
  rg2.node_add(1, 2);
  EXPECT_EQ(rg2.row(1), BitVec::from_bits({1, 0, 0, 0}));
  EXPECT_EQ(rg2.op_log(), (std::vector<RowOp>{RowOp::add(1, 2)}));
}

TEST(RowGraph, NodeAdditionNeedsAnEdge) {
  RowGraph rg(path4(), kPt);
  EXPECT_THROW(rg.node_add(0, 2), std::invalid_argument);
  EXPECT_THROW(rg.swap_nodes(0, 3), std::invalid_argument);
  EXPECT_EQ(rg.assignment(), kPt);
  EXPECT_TRUE(rg.op_log().empty());
}

TEST(RowGraph, Swap) {
  RowGraph rg(path4(), kPt);
  rg.swap_nodes(0, 1);
  EXPECT_EQ(rg.row(0), BitVec::from_bits({0, 1, 0, 0}));
  EXPECT_EQ(rg.row(1), BitVec::from_bits({1, 0, 1, 1}));
  EXPECT_EQ(addition_count(rg.op_log()), 3u);
  rg.swap_nodes(1, 0);
  EXPECT_EQ(rg.assignment(), kPt);
}

TEST(RowGraph, TransientZeroRowIsSingular) {
  const ArchGraph g = make_line(2);
  RowGraph rg(g, BitMatrix::from_rows({{0, 1}, {0, 1}}));
  EXPECT_FALSE(rg.is_reversible());
  rg.node_add(0, 1);
  EXPECT_EQ(rg.row(0), BitVec(2));
}

TEST(RowGraph, Forms) {
  RowGraph rg(path4(), kPt);
  EXPECT_TRUE(rg.is_reversible());
  EXPECT_FALSE(rg.is_basic());
  EXPECT_EQ(rg.non_unit_count(), 2u);
  RowGraph basic(path4(), BitMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  EXPECT_TRUE(basic.is_basic());
}

TEST(RowGraph, RandomOperationsKeepReversibilityAndRollBack) {
  std::mt19937_64 rng(21);
  const ArchGraph g = make_grid(3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const BitMatrix start = oracle::random_invertible(9, rng);
    RowGraph rg(g, start);
    std::uniform_int_distribution<std::size_t> pick_edge(0, g.edges().size() - 1);
    std::bernoulli_distribution coin(0.5);
    for (int k = 0; k < 40; ++k) {
      auto [a, b] = g.edges()[pick_edge(rng)];
      if (coin(rng)) std::swap(a, b);
      if (coin(rng)) {
        rg.node_add(a, b);
      } else {
        rg.swap_nodes(a, b);
      }
      ASSERT_EQ(oracle::rank(oracle::masks(rg.assignment())), 9u);
    }
    EXPECT_EQ(oracle::replay(start, rg.op_log()), rg.assignment());
    rg.rollback(0);
    EXPECT_EQ(rg.assignment(), start);
  }
}

TEST(TreeReduce, TwoNodeTree) {
  const ArchGraph g = make_line(2);
  RowGraph rg(g, BitMatrix::from_rows({{1, 1}, {0, 1}}));
  const std::vector<Node> terms = {0, 1};
  tree_reduce(rg, gen_steiner(g, terms, 0));
  EXPECT_EQ(rg.row(0), BitVec::unit(2, 0));
  EXPECT_EQ(rg.op_log(), (std::vector<RowOp>{RowOp::add(0, 1)}));
}

// R - S - T with S a Steiner point.
TEST(TreeReduce, SteinerPointIsSwappedThrough) {
  const ArchGraph g = make_line(3);
  RowGraph rg(g, BitMatrix::from_rows({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
  const std::vector<Node> terms = {0, 2};
  const ReductionTree t = gen_steiner(g, terms, 0);
  EXPECT_EQ(t.steiner_points(), (std::vector<Node>{1}));
  tree_reduce(rg, t);
  EXPECT_EQ(rg.row(0), BitVec::unit(3, 0));
  EXPECT_EQ(rg.row(1), BitVec::unit(3, 2));
  EXPECT_EQ(rg.row(2), BitVec::unit(3, 1));
  EXPECT_EQ(rg.op_log(), (std::vector<RowOp>{RowOp::swap(2, 1), RowOp::add(0, 1)}));
}

TEST(TreeReduce, RootOnlyTreeDoesNothing) {
  const ArchGraph g = make_line(3);
  RowGraph rg(g, BitMatrix::identity(3));
  const std::vector<Node> terms = {1};
  tree_reduce(rg, gen_steiner(g, terms, 1));
  EXPECT_TRUE(rg.op_log().empty());
}

TEST(TreeReduce, RejectsNonUnitTerminalSumBeforeMutating) {
  RowGraph rg(path4(), kPt);
  const std::vector<Node> terms = {0, 1};
  EXPECT_THROW(tree_reduce(rg, gen_steiner(path4(), terms, 0)), std::invalid_argument);
  EXPECT_EQ(rg.assignment(), kPt);
  EXPECT_TRUE(rg.op_log().empty());
}

TEST(TreeReduceTracked, SteinerSwapDisturbsNothing) {
  const ArchGraph g = make_line(3);
  RowGraph rg(g, BitMatrix::from_rows({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
  const std::vector<Node> terms = {0, 2};
  const TrackedReduction tr = tree_reduce_tracked(rg, gen_steiner(g, terms, 0));
  EXPECT_TRUE(tr.disturbed.empty());
  EXPECT_EQ(tr.operations, rg.op_log());
}

TEST(TreeReduceTracked, UnitParentIsDisturbed) {
  // Root 0 holds e0+e1+e3; 1 holds e3 and sits between the root and 2.
  const ArchGraph g = make_line(4);
  const auto m = BitMatrix::from_rows({{1, 1, 0, 1}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  RowGraph rg(g, m);
  const std::vector<Node> terms = {0, 1, 2};
  const TrackedReduction tr = tree_reduce_tracked(rg, gen_steiner(g, terms, 0));
  EXPECT_EQ(rg.row(0), BitVec::unit(4, 0));
  EXPECT_EQ(tr.disturbed, (std::vector<Node>{1}));
  EXPECT_EQ(oracle::replay(m, tr.operations), rg.assignment());

  const auto recovered = reduction_recovery(rg, tr.operations, tr.disturbed, gen_steiner(g, terms, 0));
  EXPECT_EQ(recovered, (std::vector<RowOp>{RowOp::add(1, 2)}));
  EXPECT_TRUE(rg.is_unit(1));
  EXPECT_EQ(rg.row(0), BitVec::unit(4, 0));
}

TEST(ReductionRecovery, NothingDisturbed) {
  const ArchGraph g = make_line(3);
  RowGraph rg(g, BitMatrix::identity(3));
  const std::vector<Node> terms = {0};
  EXPECT_TRUE(reduction_recovery(rg, {}, {}, gen_steiner(g, terms, 0)).empty());
}

TEST(ReductionRecovery, SingleAdditionIsUndone) {
  const ArchGraph g = make_line(2);
  RowGraph rg(g, BitMatrix::from_rows({{0, 1}, {1, 0}}));
  // A tree rooted at 1 whose root is not involved in the op.
  const ReductionTree t(1, {1, kNoNode}, {0, 1});
  rg.node_add(0, 1);
  const std::vector<RowOp> ops = {RowOp::add(0, 1)};
  EXPECT_EQ(reduction_recovery(rg, ops, {0}, t), ops);
  EXPECT_EQ(rg.row(0), BitVec::unit(2, 1));
}

TEST(ReductionRecovery, RejectsRootAndBadOps) {
  const ArchGraph g = make_line(2);
  RowGraph rg(g, BitMatrix::identity(2));
  const ReductionTree t(1, {1, kNoNode}, {0, 1});
  EXPECT_THROW(reduction_recovery(rg, {}, {1}, t), std::invalid_argument);
  const std::vector<RowOp> bad = {RowOp::add(0, 7)};
  EXPECT_THROW(reduction_recovery(rg, bad, {0}, t), std::invalid_argument);
}

// Every reduction the solver can ask for, on random states: the tracked
// reduction fixes the root, recovery leaves fewer non-unit nodes (a unit
// vector may end up on a different node after Steiner swaps), and undoing
// every op restores the start exactly.
TEST(ReductionRecovery, RandomReductions) {
  std::mt19937_64 rng(22);
  const ArchGraph g = make_grid(3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const BitMatrix start = oracle::random_invertible(9, rng);
    const auto inv = *invert(start);
    for (Node u = 0; u < 9; ++u) {
      if (start.row_weight(u) == 1) continue;
      for (std::size_t e = 0; e < 9; ++e) {
        if (!inv.get(e, u)) continue;
        RowGraph rg(g, start);
        const ReductionTree t = gen_steiner(g, inv.row(e).support(), u);
        const std::size_t before = rg.non_unit_count();
        const TrackedReduction tr = tree_reduce_tracked(rg, t);
        ASSERT_EQ(rg.row(u), BitVec::unit(9, e));
        ASSERT_EQ(oracle::replay(start, tr.operations), rg.assignment());
        reduction_recovery(rg, tr.operations, tr.disturbed, t);
        ASSERT_EQ(rg.row(u), BitVec::unit(9, e));
        ASSERT_LE(rg.non_unit_count(), before - 1);
        rg.rollback(0);
        ASSERT_EQ(rg.assignment(), start);
      }
    }
  }
}

// Adding a child into a non-Steiner parent can leave the parent holding a unit
// vector too, so one reduction may fix two nodes at once.
TEST(ReductionRecovery, CanReduceMoreThanOneNode) {
  // Root 0 = e0+e1, its child 1 = e1+e2, leaf 2 = e2.
  const ArchGraph g = make_line(3);
  const auto m = BitMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  RowGraph rg(g, m);
  const std::vector<Node> terms = {0, 1, 2};
  const ReductionTree t = gen_steiner(g, terms, 0);
  const TrackedReduction tr = tree_reduce_tracked(rg, t);
  reduction_recovery(rg, tr.operations, tr.disturbed, t);
  EXPECT_EQ(rg.row(0), BitVec::unit(3, 0));
  EXPECT_EQ(rg.row(1), BitVec::unit(3, 1));
  EXPECT_EQ(rg.non_unit_count(), 0u);
}

TEST(SimpleTokenReduction, AlreadyBasic) {
  RowGraph rg(path4(), BitMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
  EXPECT_TRUE(simple_token_reduction(rg).empty());
}

TEST(SimpleTokenReduction, TwoNodes) {
  const ArchGraph g = make_line(2);
  RowGraph rg(g, BitMatrix::from_rows({{1, 1}, {0, 1}}));
  EXPECT_EQ(simple_token_reduction(rg), (std::vector<RowOp>{RowOp::add(0, 1)}));
}

TEST(SimpleTokenReduction, SingleNode) {
  const ArchGraph g(1, {});
  RowGraph rg(g, BitMatrix::identity(1));
  EXPECT_TRUE(simple_token_reduction(rg).empty());
}

TEST(SimpleTokenReduction, RejectsSingular) {
  const ArchGraph g = make_line(2);
  RowGraph rg(g, BitMatrix::from_rows({{1, 1}, {1, 1}}));
  EXPECT_THROW(simple_token_reduction(rg), std::invalid_argument);
}

TEST(SimpleTokenReduction, RandomGridsStayWithinBound) {
  std::mt19937_64 rng(23);
  const ArchGraph g = make_grid(3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const BitMatrix start = oracle::random_invertible(9, rng);
    RowGraph rg(g, start);
    const auto ops = simple_token_reduction(rg);
    EXPECT_TRUE(rg.is_basic());
    EXPECT_TRUE(rg.assignment().is_permutation());
    EXPECT_LE(addition_count(ops), 9u * (6 * 7 + 1));
    EXPECT_EQ(oracle::replay(start, ops), rg.assignment());
  }
}

TEST(SimpleTokenReduction, RandomGraphsStayWithinBound) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> size(2, 16);
    const std::size_t n = size(rng);
    const ArchGraph g(n, oracle::random_connected_edges(n, n / 2, rng));
    RowGraph rg(g, oracle::random_invertible(n, rng));
    const auto ops = simple_token_reduction(rg);
    EXPECT_TRUE(rg.is_basic());
    EXPECT_LE(addition_count(ops), reduction_bound(n));
  }
}

}  // namespace
}  // namespace tokred
