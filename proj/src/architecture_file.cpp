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

#include "tokred/architecture_file.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tokred {

namespace {

Node lookup(const std::vector<std::string>& names, const std::string& name) {
  for (Node i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw std::runtime_error("architecture references unknown node '" + name + "'");
}

}  // namespace

Architecture parse_architecture(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("invalid architecture JSON: ") + e.what());
  }
  try {
    auto name = doc.at("name").get<std::string>();
    auto nodes = doc.at("nodes").get<std::vector<std::string>>();
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      auto pair = e.get<std::vector<std::string>>();
      if (pair.size() != 2) throw std::runtime_error("edge must name exactly two nodes");
      edges.emplace_back(lookup(nodes, pair[0]), lookup(nodes, pair[1]));
    }

    std::vector<Node> mapping(nodes.size(), kNoNode);
    if (doc.contains("initial_mapping")) {
      std::vector<bool> used(nodes.size(), false);
      for (const auto& entry : doc.at("initial_mapping")) {
        auto wire = entry.at(0).get<std::size_t>();
        Node node = lookup(nodes, entry.at(1).get<std::string>());
        if (wire >= nodes.size()) {
          throw std::runtime_error("initial_mapping wire " + std::to_string(wire) +
                                   " out of range");
        }
        if (mapping[wire] != kNoNode || used[node]) {
          throw std::runtime_error("initial_mapping is not a bijection");
        }
        mapping[wire] = node;
        used[node] = true;
      }
      for (Node m : mapping) {
        if (m == kNoNode) throw std::runtime_error("initial_mapping does not cover every wire");
      }
    } else {
      for (Node i = 0; i < nodes.size(); ++i) mapping[i] = i;
    }

    try {
      return Architecture{std::move(name), ArchGraph(std::move(nodes), std::move(edges)),
                          std::move(mapping)};
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(e.what());
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed architecture description: ") + e.what());
  }
}

Architecture load_architecture_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open architecture file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_architecture(buf.str());
}

std::string architecture_to_json(const Architecture& arch) {
  nlohmann::ordered_json doc;
  doc["name"] = arch.name;
  doc["nodes"] = arch.graph.names();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : arch.graph.edges()) {
    edges.push_back({arch.graph.name(u), arch.graph.name(v)});
  }
  doc["edges"] = edges;
  auto mapping = nlohmann::ordered_json::array();
  for (std::size_t w = 0; w < arch.initial_mapping.size(); ++w) {
    mapping.push_back({w, arch.graph.name(arch.initial_mapping[w])});
  }
  doc["initial_mapping"] = mapping;
  return doc.dump(2);
}

}  // namespace tokred
