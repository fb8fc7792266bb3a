// Copyright 2026 The hamcircle Authors
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

#ifndef HAMCIRCLE_CAYLEY_HPP_
#define HAMCIRCLE_CAYLEY_HPP_

// Finite windows of a Cayley graph Γ(G,S): the ball of radius r around the
// identity, plus cut and component primitives on its collapsed simple graph.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hamcircle/group.hpp"

namespace hamcircle {

// Undirected simple graph with a BFS depth per vertex. Vertices of depth
// < radius are interior; depth == radius is the boundary.
struct SimpleGraph {
  int radius = 0;
  std::vector<int> depth;
  std::vector<std::vector<int>> adjacency;  // sorted neighbours
  std::vector<std::vector<int>> incident;   // edge ids, aligned with adjacency
  std::vector<std::pair<int, int>> edges;   // (u, v) with u < v

  int size() const { return static_cast<int>(depth.size()); }
  bool interior(int v) const { return depth[v] < radius; }
  bool boundary(int v) const { return depth[v] >= radius; }
  std::optional<int> EdgeId(int u, int v) const;

  // Builds adjacency/incident lists from an edge list. Loops are dropped.
  // Parallel edges are merged unless `keep_parallel`, in which case edge ids
  // follow the input order.
  static SimpleGraph FromEdges(int radius, std::vector<int> depth,
                               const std::vector<std::pair<int, int>>& edges,
                               bool keep_parallel = false);
};

struct CayleyBall {
  GroupSpec spec;
  int radius = 0;
  std::vector<GroupElement> vertices;
  std::vector<std::string> names;  // FormatElement of each vertex
  std::vector<int> depth;
  // (generator label, neighbour) for every generator whose neighbour lies in
  // the ball; parallel edges keep all labels.
  std::vector<std::vector<std::pair<std::size_t, int>>> adjacency;
  std::unordered_map<std::string, int> index;
  SimpleGraph graph;

  int size() const { return static_cast<int>(vertices.size()); }
  std::optional<int> Find(const GroupElement& g) const;
  std::vector<int> Interior() const;
};

constexpr std::size_t kDefaultVertexBudget = 1'000'000;

// BFS ball; within a layer vertices are ordered by their canonical name.
CayleyBall BuildBall(const GroupSpec& spec, int radius,
                     std::size_t vertex_budget = kDefaultVertexBudget);

struct Component {
  std::vector<int> vertices;
  bool touches_boundary = false;
  int boundary_vertices = 0;
  bool has_interior = false;
};

std::vector<Component> ComponentsAfterRemoval(const SimpleGraph& graph,
                                              std::span<const int> removed);
std::vector<Component> ComponentsAfterRemoval(const CayleyBall& ball,
                                              std::span<const int> removed);

struct EdgeCut {
  std::vector<int> side;   // sorted vertex ids
  std::vector<int> edges;  // sorted edge ids of the collapsed graph
};

constexpr std::size_t kDefaultCutBudget = 20'000'000;

// All cuts δ(S), |δ(S)| <= max_size, with S connected (and interior when
// `interior_only`), where S and its complement both hold an interior vertex.
// Sorted by (size, edges). Search nodes beyond `node_budget` raise
// kBudgetExceeded.
std::vector<EdgeCut> EnumerateSmallEdgeCuts(const SimpleGraph& graph, int max_size,
                                            bool interior_only = true,
                                            std::size_t node_budget = kDefaultCutBudget);

// Undirected DOT; edges in `highlight` (collapsed-graph ids) get color=red.
std::string ExportDot(const CayleyBall& ball,
                      std::span<const int> highlight = {});

nlohmann::json BallToJson(const CayleyBall& ball);

}  // namespace hamcircle

#endif  // HAMCIRCLE_CAYLEY_HPP_
