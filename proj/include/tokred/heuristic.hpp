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
#include <limits>
#include <vector>

#include "tokred/row_graph.hpp"

namespace tokred {

inline constexpr std::size_t kInfiniteCost = std::numeric_limits<std::size_t>::max();

/// Worst-case additions to reduce one node and recover what it disturbed on an
/// n-node graph: 3(n-2)+1 for the reduction, 3(n-2) for recovery.
std::size_t max_reduction_cost(std::size_t n);

/// Additions needed by the whole simple reducer, n(6(n-2)+1).
std::size_t reduction_bound(std::size_t n);

/// cost(u, e) for every node u and basis index e; kInfiniteCost where u
/// cannot be reduced to e_e.
class CostTable {
 public:
  explicit CostTable(std::size_t n) : n_(n), cells_(n * n, kInfiniteCost) {}
  CostTable(std::size_t n, std::vector<std::size_t> cells);

  std::size_t size() const { return n_; }
  std::size_t at(Node u, std::size_t e) const { return cells_[u * n_ + e]; }
  void set(Node u, std::size_t e, std::size_t cost) { cells_[u * n_ + e] = cost; }
  bool finite(Node u, std::size_t e) const { return at(u, e) != kInfiniteCost; }

  bool operator==(const CostTable&) const = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> cells_;
};

/// A bijection node -> basis index and its total cost.
struct Assignment {
  std::vector<std::size_t> basis_of;  // basis_of[u] = h(u)
  std::size_t total = 0;
};

/// Additions to reduce u to e_e along the heuristic Steiner tree, plus the
/// additions that restore the unit vectors the reduction disturbed (a swap
/// counts three). kInfiniteCost when no row combination containing u yields
/// e_e. rg must be reversible; it is not modified.
std::size_t cost(const RowGraph& rg, Node u, std::size_t e);

CostTable build_cost_table(const RowGraph& rg);

/// Minimum-total perfect assignment (Hungarian method). Infinite cells are
/// priced above any finite completion. Throws std::runtime_error if every
/// perfect assignment uses an infinite cell.
Assignment hungarian_assign(const CostTable& table);

/// Minimum-total assignment cost over the cost table of rg.
std::size_t loss(const RowGraph& rg);

/// Reduces a reversible row graph to basic form. Each round reduces one of the
/// cheapest (node, basis) pairs, choosing among ties by the smallest loss of
/// the resulting graph, then restores disturbed unit vectors. Returns the
/// committed operations (also appended to rg's log). If `non_unit_trace` is
/// given, the non-unit node count after each round is appended to it. Throws
/// std::invalid_argument if rg is not reversible.
std::vector<RowOp> heuristic_token_reduction(RowGraph& rg,
                                             std::vector<std::size_t>* non_unit_trace = nullptr);

}  // namespace tokred
