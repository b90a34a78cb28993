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

#include "tokred/circuit.hpp"
#include "tokred/synthesis.hpp"

namespace tokred {

inline constexpr std::size_t kMaxCancellationPasses = 10;

/// Conservative commutation test: gates on disjoint wires, and CNOTs that
/// share only their control or only their target.
bool gates_commute(const Gate& a, const Gate& b);

/// Expands every SWAP(a, b) into three CNOTs, alternating either from (a, b)
/// or from (b, a). The orientation whose outer CNOTs can meet an identical
/// CNOT (through commuting gates) on either side is preferred; ties keep the
/// (a, b)-first form.
Circuit synthesize_swaps(const Circuit& c);

/// Removes pairs of identical CNOTs separated only by gates that commute with
/// them. Repeats until nothing changes or `max_passes` passes have run.
Circuit cancel_cnots(const Circuit& c, std::size_t max_passes = kMaxCancellationPasses);

/// synthesize_swaps followed by cancel_cnots; mappings are kept and
/// stats.postprocessed_cnots is filled in.
RoutedResult postprocess(const RoutedResult& rc);

}  // namespace tokred
