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

#include "tokred/arch.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace tokred {

namespace {

Edge normalise(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("Q" + std::to_string(i));
  return names;
}

}  // namespace

ShortestPaths floyd_warshall_with_path(std::size_t n, std::span<const Edge> edges) {
  ShortestPaths sp;
  sp.dist.assign(n, std::vector<std::size_t>(n, kUnreachable));
  sp.succ.assign(n, std::vector<Node>(n, kNoNode));
  for (Node i = 0; i < n; ++i) {
    sp.dist[i][i] = 0;
    sp.succ[i][i] = i;
  }
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge references an unknown node");
    if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
    sp.dist[u][v] = sp.dist[v][u] = 1;
    sp.succ[u][v] = v;
    sp.succ[v][u] = u;
  }
  for (Node k = 0; k < n; ++k) {
    for (Node i = 0; i < n; ++i) {
      if (sp.dist[i][k] == kUnreachable) continue;
      for (Node j = 0; j < n; ++j) {
        if (sp.dist[k][j] == kUnreachable) continue;
        if (sp.dist[i][j] > sp.dist[i][k] + sp.dist[k][j]) {
          sp.dist[i][j] = sp.dist[i][k] + sp.dist[k][j];
          sp.succ[i][j] = sp.succ[i][k];
        }
      }
    }
  }
  for (Node i = 0; i < n; ++i) {
    for (Node j = 0; j < n; ++j) {
      if (sp.dist[i][j] == kUnreachable) {
        throw std::runtime_error("graph is disconnected: no path from node " +
                                 std::to_string(i) + " to node " + std::to_string(j));
      }
    }
  }
  return sp;
}

std::vector<Node> path_from_successors(const std::vector<std::vector<Node>>& succ,
                                       Node u, Node v) {
  if (succ[u][v] == kNoNode) return {};
  std::vector<Node> path{u};
  Node x = u;
  while (x != v) {
    x = succ[x][v];
    if (x == kNoNode || path.size() > succ.size()) return {};
    path.push_back(x);
  }
  return path;
}

ArchGraph::ArchGraph(std::size_t n, std::vector<Edge> edges)
    : ArchGraph(default_names(n), std::move(edges)) {}

ArchGraph::ArchGraph(std::vector<std::string> names, std::vector<Edge> edges)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("architecture graph has no nodes");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (names_[i] == names_[j]) {
        throw std::invalid_argument("duplicate node name '" + names_[i] + "'");
      }
    }
  }
  for (auto& e : edges) {
    if (e.first >= n || e.second >= n) {
      throw std::invalid_argument("edge references an unknown node");
    }
    if (e.first == e.second) {
      throw std::invalid_argument("self-loop on node " + names_[e.first]);
    }
    e = normalise(e);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw std::invalid_argument("duplicate edge " + names_[dup->first] + "-" +
                                names_[dup->second]);
  }
  edges_ = std::move(edges);

  adjacency_.assign(n * n, false);
  neighbours_.assign(n, {});
  for (auto [u, v] : edges_) {
    adjacency_[u * n + v] = adjacency_[v * n + u] = true;
    neighbours_[u].push_back(v);
    neighbours_[v].push_back(u);
  }
  for (auto& nb : neighbours_) std::sort(nb.begin(), nb.end());

  try {
    paths_ = floyd_warshall_with_path(n, edges_);
  } catch (const std::runtime_error&) {
    // Re-report with display names.
    for (Node j = 1; j < n; ++j) {
      std::vector<bool> seen(n, false);
      std::deque<Node> queue{0};
      seen[0] = true;
      while (!queue.empty()) {
        Node x = queue.front();
        queue.pop_front();
        for (Node y : neighbours_[x]) {
          if (!seen[y]) {
            seen[y] = true;
            queue.push_back(y);
          }
        }
      }
      if (!seen[j]) {
        throw std::runtime_error("architecture graph is disconnected: " + names_[0] +
                                 " cannot reach " + names_[j]);
      }
    }
    throw;
  }
}

std::optional<Node> ArchGraph::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Node>(it - names_.begin());
}

ArchGraph make_line(std::size_t n) {
  std::vector<Edge> edges;
  for (Node i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return ArchGraph(n, std::move(edges));
}

ArchGraph make_cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Node i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return ArchGraph(n, std::move(edges));
}

ArchGraph make_grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      Node u = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(u, u + 1);
      if (r + 1 < rows) edges.emplace_back(u, u + cols);
    }
  }
  return ArchGraph(rows * cols, std::move(edges));
}

ReductionTree::ReductionTree(Node root, std::vector<Node> parent,
                             std::vector<Node> terminals)
    : root_(root), parent_(std::move(parent)), terminals_(std::move(terminals)) {
  const std::size_t n = parent_.size();
  if (root_ >= n) throw std::invalid_argument("tree root out of range");
  if (parent_[root_] != kNoNode) throw std::invalid_argument("tree root has a parent");
  std::sort(terminals_.begin(), terminals_.end());
  terminals_.erase(std::unique(terminals_.begin(), terminals_.end()), terminals_.end());

  std::vector<std::vector<Node>> children(n);
  for (Node v = 0; v < n; ++v) {
    if (v == root_ || parent_[v] == kNoNode) continue;
    if (parent_[v] >= n) throw std::invalid_argument("tree parent out of range");
    children[parent_[v]].push_back(v);
  }
  // Iterative post-order, children ascending (they were pushed in order).
  std::vector<std::pair<Node, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < children[v].size()) {
      Node child = children[v][next++];
      stack.emplace_back(child, 0);
    } else {
      post_order_.push_back(v);
      stack.pop_back();
    }
    if (post_order_.size() > n) throw std::invalid_argument("parent table has a cycle");
  }
  vertices_ = post_order_;
  std::sort(vertices_.begin(), vertices_.end());
  for (Node v = 0; v < n; ++v) {
    if (v != root_ && parent_[v] != kNoNode &&
        !std::binary_search(vertices_.begin(), vertices_.end(), v)) {
      throw std::invalid_argument("parent table is not connected to the root");
    }
  }
  std::set_difference(vertices_.begin(), vertices_.end(), terminals_.begin(),
                      terminals_.end(), std::back_inserter(steiner_));
}

bool ReductionTree::is_terminal(Node v) const {
  return std::binary_search(terminals_.begin(), terminals_.end(), v);
}

std::optional<std::string> ReductionTree::check(const ArchGraph& graph) const {
  if (parent_.size() != graph.size()) return "parent table size differs from graph";
  if (!is_terminal(root_)) return "root is not a terminal";
  for (Node t : terminals_) {
    if (!contains(t)) return "terminal " + std::to_string(t) + " is not spanned";
  }
  for (Node v : vertices_) {
    if (v == root_) continue;
    if (!graph.adjacent(v, parent_[v])) {
      return "tree edge " + std::to_string(v) + "-" + std::to_string(parent_[v]) +
             " is not an architecture edge";
    }
  }
  for (Node s : steiner_) {
    if (is_terminal(s)) return "terminal listed as Steiner point";
  }
  if (terminals_.size() + steiner_.size() != vertices_.size()) {
    return "terminals and Steiner points do not partition the vertices";
  }
  if (post_order_.empty() || post_order_.back() != root_) return "root not last in post-order";
  return std::nullopt;
}

SteinerSkeleton grow_steiner_skeleton(const ArchGraph& graph,
                                      std::span<const Node> terminals) {
  SteinerSkeleton sk;
  sk.terminals.assign(terminals.begin(), terminals.end());
  std::sort(sk.terminals.begin(), sk.terminals.end());
  sk.terminals.erase(std::unique(sk.terminals.begin(), sk.terminals.end()),
                     sk.terminals.end());
  for (Node t : sk.terminals) {
    if (t >= graph.size()) throw std::invalid_argument("terminal out of range");
  }
  if (sk.terminals.empty()) return sk;
  if (sk.terminals.size() == 1) {
    sk.vertices = sk.terminals;
    return sk;
  }

  const std::size_t n = graph.size();
  std::vector<bool> in_tree(n, false);
  std::vector<bool> pending(n, false);
  for (Node t : sk.terminals) pending[t] = true;

  auto add_path = [&](Node u, Node v) {
    std::vector<Node> path = graph.path(u, v);
    for (std::size_t i = 0; i < path.size(); ++i) {
      Node x = path[i];
      if (!in_tree[x]) {
        in_tree[x] = true;
        sk.vertices.push_back(x);
      }
      pending[x] = false;
      if (i > 0) sk.edges.push_back(normalise({path[i - 1], x}));
    }
  };

  // Closest terminal pair.
  Node best_u = kNoNode, best_v = kNoNode;
  std::size_t best = kUnreachable;
  for (std::size_t i = 0; i < sk.terminals.size(); ++i) {
    for (std::size_t j = 0; j < sk.terminals.size(); ++j) {
      if (i == j) continue;
      Node u = sk.terminals[i], v = sk.terminals[j];
      if (graph.distance(u, v) < best) {
        best = graph.distance(u, v);
        best_u = u;
        best_v = v;
      }
    }
  }
  add_path(best_u, best_v);

  // Attach remaining terminals one at a time, nearest first. The nearest
  // tree vertex is never interior to the attaching path, so no cycle forms.
  for (;;) {
    best = kUnreachable;
    for (Node u : sk.terminals) {
      if (!pending[u]) continue;
      for (Node v = 0; v < n; ++v) {
        if (in_tree[v] && graph.distance(u, v) < best) {
          best = graph.distance(u, v);
          best_u = u;
          best_v = v;
        }
      }
    }
    if (best == kUnreachable) break;
    add_path(best_u, best_v);
  }

  std::sort(sk.vertices.begin(), sk.vertices.end());
  std::sort(sk.edges.begin(), sk.edges.end());
  sk.edges.erase(std::unique(sk.edges.begin(), sk.edges.end()), sk.edges.end());
  return sk;
}

ReductionTree treefy(const ArchGraph& graph, const SteinerSkeleton& skeleton, Node root) {
  const std::size_t n = graph.size();
  if (!std::binary_search(skeleton.vertices.begin(), skeleton.vertices.end(), root)) {
    throw std::invalid_argument("root is not a vertex of the Steiner skeleton");
  }
  std::vector<std::vector<Node>> adj(n);
  for (auto [u, v] : skeleton.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<Node> parent(n, kNoNode);
  std::vector<bool> seen(n, false);
  std::deque<Node> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    Node x = queue.front();
    queue.pop_front();
    for (Node y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  return ReductionTree(root, std::move(parent), skeleton.terminals);
}

ReductionTree gen_steiner(const ArchGraph& graph, std::span<const Node> terminals,
                          Node root) {
  if (std::find(terminals.begin(), terminals.end(), root) == terminals.end()) {
    throw std::invalid_argument("gen_steiner: root must be one of the terminals");
  }
  return treefy(graph, grow_steiner_skeleton(graph, terminals), root);
}

}  // namespace tokred
