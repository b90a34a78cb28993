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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tokred/arch.hpp"

namespace tokred {

/// A named device: coupling graph plus the default wire -> node placement.
struct Architecture {
  std::string name;
  ArchGraph graph;
  /// initial_mapping[w] is the node that wire w starts on.
  std::vector<Node> initial_mapping;
};

/// Parses the JSON architecture format:
///
///   {
///     "name": "9-square",
///     "nodes": ["Q1", "Q2", ...],
///     "edges": [["Q1", "Q2"], ...],
///     "initial_mapping": [[0, "Q1"], [1, "Q2"], ...]
///   }
///
/// Wires in `initial_mapping` are 0-based and must cover 0..n-1 exactly once.
/// When the key is absent the identity placement is used. Throws
/// std::runtime_error with a description on malformed or disconnected input.
Architecture parse_architecture(std::string_view json_text);
Architecture load_architecture_file(const std::filesystem::path& path);

std::string architecture_to_json(const Architecture& arch);

}  // namespace tokred
