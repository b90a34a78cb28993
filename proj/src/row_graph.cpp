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

#include "tokred/row_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tokred {

std::size_t addition_count(std::span<const RowOp> ops) {
  std::size_t count = 0;
  for (const RowOp& op : ops) count += op.kind == RowOpKind::kSwap ? 3 : 1;
  return count;
}

RowGraph::RowGraph(const ArchGraph& graph, BitMatrix assignment)
    : graph_(&graph), assign_(std::move(assignment)) {
  if (assign_.size() != graph.size()) {
    throw std::invalid_argument("row graph: matrix size " + std::to_string(assign_.size()) +
                                " does not match " + std::to_string(graph.size()) +
                                " nodes");
  }
}

bool RowGraph::is_basic() const {
  for (Node u = 0; u < size(); ++u) {
    if (!is_unit(u)) return false;
  }
  return true;
}

bool RowGraph::is_reversible() const { return invert(assign_).has_value(); }

std::size_t RowGraph::non_unit_count() const {
  std::size_t count = 0;
  for (Node u = 0; u < size(); ++u) count += is_unit(u) ? 0 : 1;
  return count;
}

void RowGraph::node_add(Node u, Node v) {
  if (u >= size() || v >= size() || !graph_->adjacent(u, v)) {
    throw std::invalid_argument("node_add(" + std::to_string(u) + ", " + std::to_string(v) +
                                "): nodes are not adjacent");
  }
  assign_.row_add(u, v);
  log_.push_back(RowOp::add(u, v));
}

void RowGraph::swap_nodes(Node u, Node v) {
  if (u >= size() || v >= size() || !graph_->adjacent(u, v)) {
    throw std::invalid_argument("swap_nodes(" + std::to_string(u) + ", " +
                                std::to_string(v) + "): nodes are not adjacent");
  }
  assign_.swap_rows(u, v);
  log_.push_back(RowOp::swap(u, v));
}

void RowGraph::apply(const RowOp& op) {
  if (op.kind == RowOpKind::kAdd) {
    node_add(op.a, op.b);
  } else {
    swap_nodes(op.a, op.b);
  }
}

void RowGraph::rollback(std::size_t mark) {
  if (mark > log_.size()) throw std::invalid_argument("rollback mark is ahead of the log");
  while (log_.size() > mark) {
    const RowOp op = log_.back();
    log_.pop_back();
    // Both operations are involutions.
    if (op.kind == RowOpKind::kAdd) {
      assign_.row_add(op.a, op.b);
    } else {
      assign_.swap_rows(op.a, op.b);
    }
  }
}

namespace {

void require_unit_terminal_sum(const RowGraph& rg, const ReductionTree& tree) {
  if (tree.vertices().empty() || tree.root() >= rg.size()) {
    throw std::invalid_argument("reduction tree does not fit the row graph");
  }
  BitVec sum(rg.size());
  for (Node t : tree.terminals()) {
    if (t >= rg.size()) throw std::invalid_argument("reduction tree does not fit the row graph");
    sum ^= rg.row(t);
  }
  if (!sum.is_unit()) {
    throw std::invalid_argument("terminal rows of the reduction tree sum to " +
                                sum.to_string() + ", not a unit vector");
  }
}

template <typename OnSwap, typename OnAdd>
void reduce_along_tree(RowGraph& rg, const ReductionTree& tree, OnSwap on_swap,
                       OnAdd on_add) {
  require_unit_terminal_sum(rg, tree);
  std::vector<bool> steiner(rg.size(), false);
  for (Node k : tree.steiner_points()) steiner[k] = true;
  for (Node u : tree.post_order()) {
    if (u == tree.root()) break;
    const Node p = tree.parent(u);
    if (steiner[p]) {
      on_swap(u, p);
      rg.swap_nodes(u, p);
      steiner[u] = true;
      steiner[p] = false;
    } else {
      on_add(p, u);
      rg.node_add(p, u);
    }
  }
}

}  // namespace

void tree_reduce(RowGraph& rg, const ReductionTree& tree) {
  reduce_along_tree(rg, tree, [](Node, Node) {}, [](Node, Node) {});
}

TrackedReduction tree_reduce_tracked(RowGraph& rg, const ReductionTree& tree) {
  TrackedReduction out;
  std::vector<bool> disturbed(rg.size(), false);
  reduce_along_tree(
      rg, tree,
      [&](Node u, Node p) {
        if (disturbed[u]) {
          disturbed[p] = true;
          disturbed[u] = false;
        }
        out.operations.push_back(RowOp::swap(u, p));
      },
      [&](Node p, Node u) {
        if (p != tree.root() && rg.is_unit(p)) disturbed[p] = true;
        out.operations.push_back(RowOp::add(p, u));
      });
  for (Node v = 0; v < rg.size(); ++v) {
    if (disturbed[v]) out.disturbed.push_back(v);
  }
  return out;
}

std::vector<RowOp> reduction_recovery(RowGraph& rg, std::span<const RowOp> operations,
                                      std::vector<Node> disturbed,
                                      const ReductionTree& tree) {
  std::vector<bool> pending(rg.size(), false);
  for (Node v : disturbed) {
    if (v >= rg.size()) throw std::invalid_argument("disturbed node out of range");
    if (v == tree.root()) throw std::invalid_argument("the root cannot be recovered");
    pending[v] = true;
  }
  std::vector<RowOp> recovered;
  for (auto it = operations.rbegin(); it != operations.rend(); ++it) {
    const RowOp& op = *it;
    if (op.a >= rg.size() || op.b >= rg.size()) {
      throw std::invalid_argument("recovery operation outside the row graph");
    }
    if (op.kind == RowOpKind::kAdd && pending[op.a]) {
      rg.node_add(op.a, op.b);
      recovered.push_back(op);
      if (rg.is_unit(op.a)) pending[op.a] = false;
    } else if (op.kind == RowOpKind::kSwap && pending[op.b]) {
      rg.swap_nodes(op.a, op.b);
      pending[op.a] = true;
      pending[op.b] = false;
      recovered.push_back(op);
    }
  }
  return recovered;
}

std::vector<RowOp> simple_token_reduction(RowGraph& rg) {
  if (!rg.is_reversible()) {
    throw std::invalid_argument("simple_token_reduction: row graph is not reversible");
  }
  const std::size_t start = rg.log_mark();
  for (Node u = 0; u < rg.size(); ++u) {
    if (rg.is_unit(u)) continue;
    // Solutions come back in ascending basis order, each containing u.
    const auto solutions = solve_unit_combinations(rg.assignment(), u);
    const auto& first = solutions.front();
    const ReductionTree tree = gen_steiner(rg.graph(), first.rows, u);
    const std::size_t mark = rg.log_mark();
    tree_reduce(rg, tree);
    // Undo every operation that does not write the root, newest first.
    std::vector<RowOp> undo;
    for (std::size_t i = rg.op_log().size(); i-- > mark;) {
      const RowOp op = rg.op_log()[i];
      if (op.a != u && op.b != u) undo.push_back(op);
    }
    for (const RowOp& op : undo) rg.apply(op);
  }
  return {rg.op_log().begin() + static_cast<std::ptrdiff_t>(start), rg.op_log().end()};
}

}  // namespace tokred
