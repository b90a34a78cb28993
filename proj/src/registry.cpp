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

#include "tokred/registry.hpp"

#include <algorithm>
#include <filesystem>
#include <stdexcept>
#include <utility>

namespace tokred {

namespace {

struct Embedded {
  std::string_view stem;
  std::string_view json;
};

constexpr Embedded kEmbedded[] = {
#include "builtin_architectures.inc"
};

}  // namespace

std::vector<std::string> builtin_architecture_names() {
  std::vector<std::string> names;
  for (const Embedded& e : kEmbedded) names.emplace_back(parse_architecture(e.json).name);
  std::sort(names.begin(), names.end());
  return names;
}

std::optional<Architecture> find_architecture(std::string_view name) {
  for (const Embedded& e : kEmbedded) {
    Architecture arch = parse_architecture(e.json);
    if (arch.name == name || e.stem == name) return arch;
  }
  return std::nullopt;
}

Architecture resolve_architecture(const std::string& name_or_path) {
  if (auto arch = find_architecture(name_or_path)) return *std::move(arch);
  if (std::filesystem::is_regular_file(name_or_path)) return load_architecture_file(name_or_path);
  std::string known;
  for (const auto& n : builtin_architecture_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::runtime_error("unknown architecture '" + name_or_path + "' (built-in: " + known +
                           "; or pass a JSON file)");
}

}  // namespace tokred
