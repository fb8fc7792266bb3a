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

#ifndef HAMCIRCLE_COUNTEREXAMPLE_HPP_
#define HAMCIRCLE_COUNTEREXAMPLE_HPP_

// Bounded evidence about Γ((ℤ3×ℤ2) *_{ℤ2} (ℤ3×ℤ2)): an exhaustive search
// for the trace of a Hamilton circle on a ball, and a toughness count.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamcircle/cayley.hpp"

namespace hamcircle {

GroupSpec BuildCounterexampleSpec();

// The ball with every component of (graph minus the interior) collapsed to a
// single node. Connectivity outside the ball is read off ball(r + margin).
// Interior vertices keep their ball ids; outside nodes follow them. Parallel
// edges are kept, so edge cuts here are finite cuts of the whole graph.
struct ContractedBall {
  SimpleGraph graph;
  int interior_count = 0;
  int margin = 0;
  std::vector<int> ball_edge;              // contracted edge -> ball edge
  std::vector<std::vector<int>> outside;   // outside node -> its boundary vertices
  std::vector<std::string> names;

  int OutsideNode(int k) const { return interior_count + k; }
};

constexpr int kDefaultOutsideMargin = 4;

ContractedBall ContractOutside(const CayleyBall& ball, int margin = kDefaultOutsideMargin);

enum class ObstructionStatus : std::uint8_t { kUnsat, kSatFound };

// Outcome of one top-level branch (a choice of two edges at the identity).
struct BranchTrace {
  std::vector<int> identity_edges;
  bool satisfiable = false;
  std::optional<EdgeCut> smallest_violated_cut;
  std::size_t degree_conflicts = 0;
  std::size_t cycle_conflicts = 0;
  std::size_t cut_conflicts = 0;
  std::size_t nodes = 0;
};

struct ObstructionResult {
  int radius = 0;
  int cut_size_max = 0;
  ObstructionStatus status = ObstructionStatus::kUnsat;
  std::vector<int> edges;  // the satisfying D when found, as ball edges
  std::size_t nodes_explored = 0;
  std::size_t cuts_checked = 0;
  std::vector<BranchTrace> branches;

  std::size_t outside_nodes = 0;
  // Filled by ObstructionSearch to name cut sides and edges.
  std::vector<std::string> node_names;
  std::vector<int> ball_edge;

  nlohmann::json ToJson(const CayleyBall& ball) const;
};

constexpr std::size_t kDefaultObstructionBudget = 200'000'000;

// Searches edge sets D of the contracted ball with degree 2 at interior
// vertices, no cycle inside the interior, and |D ∩ δ| even and >= 2 for every
// cut δ of size <= cut_size_max separating interior vertices. Outside nodes
// carry no degree constraint. Branches run on `jobs` threads.
ObstructionResult ObstructionSearch(const CayleyBall& ball, int cut_size_max,
                                    unsigned jobs = 1,
                                    std::size_t node_budget = kDefaultObstructionBudget,
                                    int margin = kDefaultOutsideMargin);

struct ToughnessReport {
  int max_w = 0;
  // max over interior W, 1 <= |W| <= max_w, of components(graph - W) - |W|,
  // counting components with an interior vertex or >= 2 boundary vertices,
  // or every component when `count_all` is set.
  int worst = 0;
  std::vector<int> worst_set;
  std::vector<int> worst_by_size;  // index k: best value with |W| = k
  std::size_t sets_examined = 0;

  nlohmann::json ToJson(const SimpleGraph& graph,
                        const std::vector<std::string>* names = nullptr) const;
};

constexpr std::size_t kDefaultToughnessBudget = 2'000'000'000;

ToughnessReport ToughnessCheck(const SimpleGraph& graph, int max_w, unsigned jobs = 1,
                               std::size_t set_budget = kDefaultToughnessBudget,
                               bool count_all = false);

// Same enumeration on the contracted ball, where every component of the
// remainder is a component of the whole graph minus W and is counted.
// Vertex ids in the report are ball ids.
ToughnessReport ToughnessCheck(const CayleyBall& ball, int max_w, unsigned jobs = 1,
                               std::size_t set_budget = kDefaultToughnessBudget,
                               int margin = kDefaultOutsideMargin);

// Components counted by ToughnessCheck after removing W.
int CountedComponents(const SimpleGraph& graph, const std::vector<int>& removed,
                      bool count_all = false);

}  // namespace hamcircle

#endif  // HAMCIRCLE_COUNTEREXAMPLE_HPP_
