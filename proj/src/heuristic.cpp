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

#include "tokred/heuristic.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

namespace tokred {

std::size_t max_reduction_cost(std::size_t n) { return n < 3 ? 1 : 6 * (n - 2) + 1; }

std::size_t reduction_bound(std::size_t n) { return n * max_reduction_cost(n); }

CostTable::CostTable(std::size_t n, std::vector<std::size_t> cells)
    : n_(n), cells_(std::move(cells)) {
  if (cells_.size() != n * n) throw std::invalid_argument("cost table must be n x n");
}

namespace {

/// Evaluates reductions of one fixed row-graph state. Owns a scratch copy of
/// the state, so callers are never mutated; every tentative reduction is
/// rolled back before the next one.
class Reducer {
 public:
  explicit Reducer(const RowGraph& rg)
      : scratch_(rg.graph(), rg.assignment()), skeletons_(rg.size()) {
    auto inv = invert(rg.assignment());
    if (!inv) throw std::invalid_argument("row graph is not reversible");
    inverse_ = std::move(*inv);
  }

  std::size_t size() const { return scratch_.size(); }

  bool reducible(Node u, std::size_t e) const { return inverse_.get(e, u); }

  ReductionTree tree(Node u, std::size_t e) {
    auto& sk = skeletons_[e];
    if (!sk) sk = grow_steiner_skeleton(scratch_.graph(), inverse_.row(e).support());
    return treefy(scratch_.graph(), *sk, u);
  }

  /// Reduces u to e on `rg` (which must be in the evaluated state), then
  /// recovers disturbed unit vectors. Returns the additions spent.
  std::size_t reduce(RowGraph& rg, Node u, std::size_t e) {
    const ReductionTree t = tree(u, e);
    TrackedReduction tracked = tree_reduce_tracked(rg, t);
    auto recovered = reduction_recovery(rg, tracked.operations, tracked.disturbed, t);
    return addition_count(tracked.operations) + addition_count(recovered);
  }

  std::size_t cost(Node u, std::size_t e) {
    if (!reducible(u, e)) return kInfiniteCost;
    if (scratch_.assignment().row_unit_index(u) == e) return 0;
#ifndef NDEBUG
    const BitMatrix snapshot = scratch_.assignment();
#endif
    const std::size_t mark = scratch_.log_mark();
    const std::size_t c = reduce(scratch_, u, e);
    scratch_.rollback(mark);
    assert(scratch_.assignment() == snapshot);
    return c;
  }

  CostTable table() {
    const std::size_t n = size();
    CostTable t(n);
    for (Node u = 0; u < n; ++u) {
      for (std::size_t e = 0; e < n; ++e) t.set(u, e, cost(u, e));
    }
    return t;
  }

 private:
  RowGraph scratch_;
  BitMatrix inverse_;
  std::vector<std::optional<SteinerSkeleton>> skeletons_;
};

}  // namespace

std::size_t cost(const RowGraph& rg, Node u, std::size_t e) {
  if (u >= rg.size() || e >= rg.size()) throw std::invalid_argument("cost: index out of range");
  return Reducer(rg).cost(u, e);
}

CostTable build_cost_table(const RowGraph& rg) { return Reducer(rg).table(); }

Assignment hungarian_assign(const CostTable& table) {
  const std::size_t n = table.size();
  Assignment out;
  if (n == 0) return out;

  // Any finite perfect assignment totals at most n * max_reduction_cost(n)
  // per row, so this sentinel is only chosen when unavoidable.
  std::int64_t max_finite = static_cast<std::int64_t>(max_reduction_cost(n));
  for (Node u = 0; u < n; ++u) {
    for (std::size_t e = 0; e < n; ++e) {
      if (table.finite(u, e)) {
        max_finite = std::max(max_finite, static_cast<std::int64_t>(table.at(u, e)));
      }
    }
  }
  const std::int64_t sentinel = static_cast<std::int64_t>(n) *
                                    (static_cast<std::int64_t>(n) * max_finite) + 1;
  auto price = [&](std::size_t u, std::size_t e) {
    return table.finite(u, e) ? static_cast<std::int64_t>(table.at(u, e)) : sentinel;
  };

  // Shortest augmenting path with potentials; rows and columns 1-based,
  // column 0 is the virtual start.
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> row_pot(n + 1, 0), col_pot(n + 1, 0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      std::int64_t delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = price(i0 - 1, j - 1) - row_pot[i0] - col_pot[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          row_pot[match[j]] += delta;
          col_pot[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  out.basis_of.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) out.basis_of[match[j] - 1] = j - 1;
  for (Node u = 0; u < n; ++u) {
    if (!table.finite(u, out.basis_of[u])) {
      throw std::runtime_error("no finite perfect assignment exists (row graph not reversible)");
    }
    out.total += table.at(u, out.basis_of[u]);
  }
  return out;
}

std::size_t loss(const RowGraph& rg) { return hungarian_assign(build_cost_table(rg)).total; }

std::vector<RowOp> heuristic_token_reduction(RowGraph& rg,
                                             std::vector<std::size_t>* non_unit_trace) {
  if (!rg.is_reversible()) {
    throw std::invalid_argument("heuristic_token_reduction: row graph is not reversible");
  }
  const std::size_t start = rg.log_mark();
  while (!rg.is_basic()) {
    Reducer reducer(rg);
    const CostTable table = reducer.table();

    // Cheapest pairs among nodes that still need reducing.
    std::size_t best = kInfiniteCost;
    std::vector<std::pair<Node, std::size_t>> candidates;
    for (Node u = 0; u < rg.size(); ++u) {
      if (rg.is_unit(u)) continue;
      for (std::size_t e = 0; e < rg.size(); ++e) {
        const std::size_t c = table.at(u, e);
        if (c == kInfiniteCost || c > best) continue;
        if (c < best) {
          best = c;
          candidates.clear();
        }
        candidates.emplace_back(u, e);
      }
    }
    if (candidates.empty()) throw std::logic_error("reversible row graph has no reducible node");

    auto chosen = candidates.front();
    if (candidates.size() > 1) {
      std::size_t best_loss = kInfiniteCost;
      for (auto [u, e] : candidates) {
        const std::size_t mark = rg.log_mark();
        reducer.reduce(rg, u, e);
        const std::size_t l = loss(rg);
        rg.rollback(mark);
        if (l < best_loss) {
          best_loss = l;
          chosen = {u, e};
        }
      }
    }
    reducer.reduce(rg, chosen.first, chosen.second);
    if (non_unit_trace != nullptr) non_unit_trace->push_back(rg.non_unit_count());
  }
  return {rg.op_log().begin() + static_cast<std::ptrdiff_t>(start), rg.op_log().end()};
}

}  // namespace tokred
