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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tokred/architecture_file.hpp"

namespace tokred {

/// Names of the architectures compiled into the library, sorted.
std::vector<std::string> builtin_architecture_names();

/// A compiled-in architecture, or nullopt for an unknown name.
std::optional<Architecture> find_architecture(std::string_view name);

/// Treats `name_or_path` as a built-in name first, then as a path to a JSON file.
/// Throws std::runtime_error if neither works.
Architecture resolve_architecture(const std::string& name_or_path);

}  // namespace tokred
