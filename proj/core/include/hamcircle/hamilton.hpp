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

#ifndef HAMCIRCLE_HAMILTON_HPP_
#define HAMCIRCLE_HAMILTON_HPP_

// Constructions of Hamilton cycles, Hamilton double rays and Hamilton
// circles (as pairs of disjoint spanning double rays).

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hamcircle/group.hpp"
#include "hamcircle/ray.hpp"

namespace hamcircle {

// Cycle in a finite table: base * word[0] * ... visits every element once.
// Word entries are generator elements of the table.
struct HamiltonCycle {
  int base = 0;
  std::vector<int> word;

  // Vertices in visiting order.
  std::vector<int> Vertices(const FiniteGroupTable& table) const;
};

// True iff `c` walks through all elements using generators and closes up.
bool IsHamiltonCycle(const FiniteGroupTable& table, const HamiltonCycle& c);

constexpr std::size_t kDefaultSearchBudget = 50'000'000;

// Throws kTooSmall for order < 3, kNoHamiltonCycleFound when the search
// space is exhausted and kBudgetExceeded when the node budget runs out.
HamiltonCycle FiniteHamiltonCycle(const FiniteGroupTable& table,
                                  std::size_t node_budget = kDefaultSearchBudget);

template <class T>
struct Periodic {
  std::vector<T> prefix;
  std::vector<T> period;

  std::size_t phases() const { return prefix.size() + period.size(); }
  std::size_t phase(std::size_t i) const {
    return i < prefix.size() ? i
                             : prefix.size() + (i - prefix.size()) % period.size();
  }
  const T& at(std::size_t i) const {
    const std::size_t p = phase(i);
    return p < prefix.size() ? prefix[p] : period[p - prefix.size()];
  }
};

// Step between two consecutive levels. Right link i: origin(i+1) =
// origin(i) * word, and matching[j] labels the edge from position j of level
// i into level i+1. Left link k: origin(-k-1) = origin(-k) * word, and
// matching[j] labels the edge from position j of level -k into level -k-1.
struct CylinderLink {
  std::vector<std::size_t> word;
  std::vector<std::optional<std::size_t>> matching;
};

enum class CylinderVariant : std::uint8_t { kPlain, kAlternating };

// Level i is origin(i) * level. In the alternating variant odd template
// positions form X+ (matched forward) and even positions X- (matched
// backward).
struct CylinderStructure {
  CylinderVariant variant = CylinderVariant::kPlain;
  GroupElement origin;
  std::vector<GroupElement> level;  // template X_0 in cycle order
  std::vector<std::size_t> cycle;   // level[j] * cycle[j] = level[j+1 mod m]
  Periodic<CylinderLink> right;
  Periodic<CylinderLink> left;
  int locality_bound = 1;
};

std::pair<DoubleRay, DoubleRay> CylinderRays(const GroupSpec& spec,
                                             const CylinderStructure& c);
std::pair<DoubleRay, DoubleRay> AlternatingCylinderRays(const GroupSpec& spec,
                                                        const CylinderStructure& c);
DoubleRay CylinderDoubleRay(const GroupSpec& spec, const CylinderStructure& c);

enum class Construction : std::uint8_t {
  kTheoremZ,
  kCylinder,
  kAlternCylinder,
  kZigZag,
  kDedekindAmalgam,
  kSemidirectI,
  kSemidirectII,
  kManual,
};
std::string_view ConstructionName(Construction c);
std::optional<Construction> ParseConstruction(std::string_view name);

// Two disjoint spanning double rays, or a single spanning double ray when
// one_ended is set.
struct CircleCertificate {
  GroupSpec spec;
  Construction construction = Construction::kManual;
  std::vector<DoubleRay> rays;
  bool one_ended = false;
};

constexpr int kSelfCheckRadius = 20;

CircleCertificate AbelianCircle(const GroupSpec& spec);
CircleCertificate ZigZagCircle(const GroupSpec& spec, const HamiltonCycle& c0);
DoubleRay ZigZagDoubleRay(const GroupSpec& spec, const HamiltonCycle& c0);
CircleCertificate DedekindAmalgamCircle(const GroupSpec& spec);
CircleCertificate SemidirectCircle(const GroupSpec& spec);

// The cylinder behind ZigZagCircle, exposed for inspection.
CylinderStructure ZigZagCylinder(const GroupSpec& spec, const HamiltonCycle& c0);

}  // namespace hamcircle

#endif  // HAMCIRCLE_HAMILTON_HPP_
