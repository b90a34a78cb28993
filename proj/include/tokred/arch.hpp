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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tokred {

/// Physical qubit index, 0..n-1.
using Node = std::size_t;
using Edge = std::pair<Node, Node>;

inline constexpr Node kNoNode = std::numeric_limits<Node>::max();
inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Hop-count distances and next-hop table. succ[u][v] is the node after u on
/// one shortest u -> v path, succ[u][u] == u, kNoNode when v is unreachable.
struct ShortestPaths {
  std::vector<std::vector<std::size_t>> dist;
  std::vector<std::vector<Node>> succ;
};

/// All-pairs shortest paths over an undirected unit-weight graph. Every edge
/// is added in both directions first. Throws std::invalid_argument on a
/// self-loop or out-of-range node, and std::runtime_error naming the first
/// unreachable pair when the graph is disconnected.
ShortestPaths floyd_warshall_with_path(std::size_t n, std::span<const Edge> edges);

/// Follows successors from u to v. Returns an empty list if succ[u][v] is null.
std::vector<Node> path_from_successors(const std::vector<std::vector<Node>>& succ,
                                       Node u, Node v);

/// Undirected connected coupling graph of a device, with cached all-pairs
/// shortest paths. Immutable after construction.
class ArchGraph {
 public:
  /// Throws on self-loops, duplicate edges, unknown nodes or a disconnected
  /// graph.
  ArchGraph(std::vector<std::string> names, std::vector<Edge> edges);
  /// Nodes named Q0..Q{n-1}.
  ArchGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Node u) const { return names_.at(u); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Node> index_of(const std::string& name) const;

  /// Edges normalised to (min, max), sorted ascending.
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(Node u, Node v) const { return adjacency_[u * size() + v]; }
  /// Neighbours in ascending order.
  const std::vector<Node>& neighbours(Node u) const { return neighbours_.at(u); }

  std::size_t distance(Node u, Node v) const { return paths_.dist[u][v]; }
  Node successor(Node u, Node v) const { return paths_.succ[u][v]; }
  const ShortestPaths& shortest_paths() const { return paths_; }
  std::vector<Node> path(Node u, Node v) const {
    return path_from_successors(paths_.succ, u, v);
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<bool> adjacency_;
  std::vector<std::vector<Node>> neighbours_;
  ShortestPaths paths_;
};

ArchGraph make_line(std::size_t n);
ArchGraph make_cycle(std::size_t n);
/// rows x cols grid, nodes numbered row-major.
ArchGraph make_grid(std::size_t rows, std::size_t cols);

/// Rooted Steiner tree inside an ArchGraph. Terminals and Steiner points are
/// disjoint and together are exactly the tree's vertices; the root is a
/// terminal.
class ReductionTree {
 public:
  /// Builds a tree from a parent table (kNoNode for the root and for nodes
  /// outside the tree). Children are ordered ascending.
  ReductionTree(Node root, std::vector<Node> parent, std::vector<Node> terminals);

  Node root() const { return root_; }
  Node parent(Node v) const { return parent_[v]; }
  bool contains(Node v) const { return v == root_ || parent_[v] != kNoNode; }
  bool is_terminal(Node v) const;
  const std::vector<Node>& vertices() const { return vertices_; }
  const std::vector<Node>& terminals() const { return terminals_; }
  const std::vector<Node>& steiner_points() const { return steiner_; }
  /// Post-order with children in ascending node order; the root is last.
  const std::vector<Node>& post_order() const { return post_order_; }
  std::size_t edge_count() const { return vertices_.size() - 1; }

  /// Describes the first violated tree invariant against `graph`, if any.
  std::optional<std::string> check(const ArchGraph& graph) const;

 private:
  Node root_;
  std::vector<Node> parent_;
  std::vector<Node> vertices_;
  std::vector<Node> terminals_;
  std::vector<Node> steiner_;
  std::vector<Node> post_order_;
};

/// The tree-like graph grown by the Steiner heuristic before a root is
/// chosen. It does not depend on the root, so one skeleton serves every
/// terminal as a root.
struct SteinerSkeleton {
  std::vector<Node> terminals;  // sorted
  std::vector<Node> vertices;   // sorted
  std::vector<Edge> edges;      // (min, max), sorted
};

/// Grows the tree-like graph: join the closest terminal pair, then repeatedly
/// attach the terminal closest to the current graph along a shortest path.
/// Ties go to the lexicographically smallest (u, v) pair.
SteinerSkeleton grow_steiner_skeleton(const ArchGraph& graph,
                                      std::span<const Node> terminals);

/// Roots the skeleton at `root` by breadth-first search over its edges,
/// neighbours ascending. An edge closing a cycle is dropped.
ReductionTree treefy(const ArchGraph& graph, const SteinerSkeleton& skeleton,
                     Node root);

/// Heuristic rooted Steiner tree spanning `terminals`. Throws
/// std::invalid_argument when `root` is not a terminal.
ReductionTree gen_steiner(const ArchGraph& graph, std::span<const Node> terminals,
                          Node root);

}  // namespace tokred
