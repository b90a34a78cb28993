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
#include <span>
#include <vector>

#include "tokred/arch.hpp"
#include "tokred/f2.hpp"

namespace tokred {

enum class RowOpKind { kAdd, kSwap };

/// A logged row-graph operation on an architecture edge (a, b).
///   kAdd:  f(a) <- f(a) + f(b)
///   kSwap: f(a) <-> f(b), worth three additions
struct RowOp {
  RowOpKind kind;
  Node a;
  Node b;

  static RowOp add(Node target, Node source) { return {RowOpKind::kAdd, target, source}; }
  static RowOp swap(Node a, Node b) { return {RowOpKind::kSwap, a, b}; }
  bool operator==(const RowOp&) const = default;
};

/// Node additions an op sequence costs, counting a swap as three.
std::size_t addition_count(std::span<const RowOp> ops);

/// An architecture graph with one GF(2) row assigned to each node, plus the
/// log of every operation applied so far. The graph is not owned and must
/// outlive the row graph.
class RowGraph {
 public:
  /// Node u starts with row u of `assignment`. Throws std::invalid_argument
  /// on a size mismatch.
  RowGraph(const ArchGraph& graph, BitMatrix assignment);

  const ArchGraph& graph() const { return *graph_; }
  std::size_t size() const { return assign_.size(); }
  const BitMatrix& assignment() const { return assign_; }
  BitVec row(Node u) const { return assign_.row(u); }
  std::size_t row_weight(Node u) const { return assign_.row_weight(u); }
  bool is_unit(Node u) const { return assign_.row_weight(u) == 1; }

  bool is_basic() const;
  bool is_reversible() const;
  std::size_t non_unit_count() const;

  /// f(u) <- f(u) + f(v). Throws std::invalid_argument unless (u, v) is an edge.
  void node_add(Node u, Node v);
  /// Exchanges f(u) and f(v). Throws std::invalid_argument unless (u, v) is
  /// an edge.
  void swap_nodes(Node u, Node v);
  void apply(const RowOp& op);

  const std::vector<RowOp>& op_log() const { return log_; }
  /// Position in the log to later roll back to.
  std::size_t log_mark() const { return log_.size(); }
  /// Undoes, newest first, every operation logged after `mark`.
  void rollback(std::size_t mark);

 private:
  const ArchGraph* graph_;
  BitMatrix assign_;
  std::vector<RowOp> log_;
};

/// Reduces the root of `tree` to the unit vector that the terminal rows sum
/// to. Nodes are visited in post-order; a node whose parent is a Steiner point
/// swaps with it (and takes over the Steiner status), any other node is added
/// into its parent. Throws std::invalid_argument, before mutating anything, if
/// the terminal rows do not sum to a unit vector.
void tree_reduce(RowGraph& rg, const ReductionTree& tree);

struct TrackedReduction {
  std::vector<RowOp> operations;
  /// Nodes that held a unit vector before an addition disturbed it, sorted.
  std::vector<Node> disturbed;
};

/// tree_reduce that also reports which unit vectors it disturbed. The root is
/// never recorded as disturbed.
TrackedReduction tree_reduce_tracked(RowGraph& rg, const ReductionTree& tree);

/// Walks `operations` backwards, re-applying the additions into disturbed
/// nodes (and the swaps that carried a disturbed row) until every disturbed
/// node holds a unit vector again. Returns the operations performed.
std::vector<RowOp> reduction_recovery(RowGraph& rg, std::span<const RowOp> operations,
                                      std::vector<Node> disturbed,
                                      const ReductionTree& tree);

/// Reduces a reversible row graph to basic form one node at a time, fully
/// restoring the non-root nodes after each tree reduction. Uses at most
/// n(6(n-2)+1) additions. Throws std::invalid_argument if rg is not
/// reversible.
std::vector<RowOp> simple_token_reduction(RowGraph& rg);

}  // namespace tokred
