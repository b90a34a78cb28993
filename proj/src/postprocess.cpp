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

#include "tokred/postprocess.hpp"

#include <array>
#include <vector>

namespace tokred {

bool gates_commute(const Gate& a, const Gate& b) {
  const auto wa = gate_wires(a);
  const auto wb = gate_wires(b);
  bool shared = false;
  for (Wire x : wa) {
    for (Wire y : wb) shared = shared || x == y;
  }
  if (!shared) return true;
  const auto* ca = std::get_if<Cnot>(&a);
  const auto* cb = std::get_if<Cnot>(&b);
  if (ca == nullptr || cb == nullptr) return false;
  if (ca->control == cb->control && ca->target != cb->target) return true;
  if (ca->target == cb->target && ca->control != cb->control) return true;
  return false;
}

namespace {

/// True if `g` can slide over `path` (in the given order) onto a copy of itself.
template <typename It>
bool meets_copy(const Cnot& g, It begin, It end) {
  const Gate probe = g;
  for (It it = begin; it != end; ++it) {
    if (*it == probe) return true;
    if (!gates_commute(*it, probe)) return false;
  }
  return false;
}

}  // namespace

Circuit synthesize_swaps(const Circuit& c) {
  std::vector<Gate> out;
  const auto& gates = c.gates();
  out.reserve(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto* s = std::get_if<Swap>(&gates[i]);
    if (s == nullptr) {
      out.push_back(gates[i]);
      continue;
    }
    const std::array<Cnot, 2> forms = {Cnot{s->a, s->b}, Cnot{s->b, s->a}};
    int best = 0;
    int best_score = -1;
    for (int k = 0; k < 2; ++k) {
      // The outer CNOTs of a three-CNOT swap are the same gate.
      const Cnot& outer = forms[k];
      const int score = (meets_copy(outer, out.rbegin(), out.rend()) ? 1 : 0) +
                        (meets_copy(outer, gates.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                    gates.end())
                             ? 1
                             : 0);
      if (score > best_score) {
        best_score = score;
        best = k;
      }
    }
    const Cnot& outer = forms[best];
    const Cnot& inner = forms[1 - best];
    out.push_back(outer);
    out.push_back(inner);
    out.push_back(outer);
  }
  Circuit result(c.wires());
  for (Gate& g : out) result.add(std::move(g));
  return result;
}

Circuit cancel_cnots(const Circuit& c, std::size_t max_passes) {
  std::vector<Gate> gates = c.gates();
  for (std::size_t pass = 0; pass < max_passes; ++pass) {
    std::vector<bool> alive(gates.size(), true);
    bool changed = false;
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (!alive[i] || !std::holds_alternative<Cnot>(gates[i])) continue;
      for (std::size_t j = i + 1; j < gates.size(); ++j) {
        if (!alive[j]) continue;
        if (gates[j] == gates[i]) {
          alive[i] = alive[j] = false;
          changed = true;
          break;
        }
        if (!gates_commute(gates[i], gates[j])) break;
      }
    }
    if (!changed) break;
    std::vector<Gate> kept;
    kept.reserve(gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (alive[i]) kept.push_back(std::move(gates[i]));
    }
    gates = std::move(kept);
  }
  Circuit result(c.wires());
  for (Gate& g : gates) result.add(std::move(g));
  return result;
}

RoutedResult postprocess(const RoutedResult& rc) {
  RoutedResult out = rc;
  out.circuit = cancel_cnots(synthesize_swaps(rc.circuit));
  out.stats.postprocessed_cnots = out.circuit.cnot_count();
  return out;
}

}  // namespace tokred
