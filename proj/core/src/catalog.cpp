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

#include "hamcircle/catalog.hpp"

#include <algorithm>

namespace hamcircle::catalog {

FiniteGroupTable AbelianTable(const std::vector<int>& orders,
                              const std::vector<std::vector<int>>& generators) {
  FiniteGroupTable t = CyclicProductTable(orders);
  std::vector<int> gens;
  for (const auto& g : generators) gens.push_back(CyclicProductIndex(orders, g));
  t.generators = SymmetrizeGenerators(t, gens);
  return t;
}

FiniteGroupTable Quaternion() {
  // Regular representation on {1,i,j,k,-1,-i,-j,-k} = {0..7}; right
  // multiplication by i and by j.
  const std::vector<int> right_i = {1, 4, 7, 2, 5, 0, 3, 6};
  const std::vector<int> right_j = {2, 3, 4, 5, 6, 7, 0, 1};
  return PermutationGroupTable({right_i, right_j});
}

FiniteGroupTable Symmetric3() {
  return PermutationGroupTable({{1, 0, 2}, {1, 2, 0}});
}

GroupSpec Integers(const std::vector<std::int64_t>& generators) {
  AbelianSpec a;
  a.rank = 1;
  for (auto g : generators) {
    a.generators.push_back({g});
    a.generators.push_back({-g});
  }
  return MakeAbelianSpec(std::move(a));
}

GroupSpec Abelian(int rank, const std::vector<std::int64_t>& torsion,
                  const std::vector<AbelianVec>& generators) {
  AbelianSpec a;
  a.rank = rank;
  a.torsion = torsion;
  for (const auto& g : generators) {
    a.generators.push_back(g);
    AbelianVec neg = g;
    for (auto& x : neg) x = -x;
    a.generators.push_back(neg);
  }
  return MakeAbelianSpec(std::move(a));
}

namespace {

AmalgamSpec IdentityIsoAmalgam(FiniteGroupTable left, FiniteGroupTable right,
                               std::vector<int> h_left, std::vector<int> h_right) {
  AmalgamSpec a;
  a.iso.assign(left.order, -1);
  for (std::size_t i = 0; i < h_left.size(); ++i) a.iso[h_left[i]] = h_right[i];
  std::sort(h_left.begin(), h_left.end());
  std::sort(h_right.begin(), h_right.end());
  a.left = std::move(left);
  a.right = std::move(right);
  a.h_left = SubgroupHandle{std::move(h_left)};
  a.h_right = SubgroupHandle{std::move(h_right)};
  return a;
}

}  // namespace

GroupSpec CounterexampleAmalgam() {
  // Coordinates (x mod 3, y mod 2); a = (0,1), b = (1,0) resp. c = (1,0).
  const std::vector<int> orders = {3, 2};
  auto g1 = AbelianTable(orders, {{0, 1}, {1, 0}});
  auto g2 = AbelianTable(orders, {{0, 1}, {1, 0}});
  const int e = CyclicProductIndex(orders, {0, 0});
  const int a = CyclicProductIndex(orders, {0, 1});
  return MakeAmalgamSpec(IdentityIsoAmalgam(std::move(g1), std::move(g2), {e, a}, {e, a}));
}

GroupSpec ZigZagAmalgam() {
  auto g1 = AbelianTable({4}, {{1}});
  auto g2 = AbelianTable({2, 2}, {{1, 0}, {0, 1}});
  const int h2 = CyclicProductIndex({2, 2}, {1, 0});
  return MakeAmalgamSpec(IdentityIsoAmalgam(std::move(g1), std::move(g2), {0, 2}, {0, h2}));
}

GroupSpec DedekindAmalgam() {
  const std::vector<int> orders = {4, 2};
  auto g1 = AbelianTable(orders, {{1, 0}, {0, 1}});
  auto g2 = AbelianTable(orders, {{1, 0}, {0, 1}});
  std::vector<int> h;
  for (auto c : std::vector<std::vector<int>>{{0, 0}, {0, 1}, {2, 0}, {2, 1}}) {
    h.push_back(CyclicProductIndex(orders, c));
  }
  return MakeAmalgamSpec(IdentityIsoAmalgam(std::move(g1), std::move(g2), h, h));
}

GroupSpec InversionSemidirect(const std::vector<std::int64_t>& z_generators) {
  SemidirectSpec s;
  s.base = AbelianTable({3}, {{1}});
  s.automorphism = {0, 2, 1};
  for (auto y : z_generators) {
    s.z_generators.push_back(y);
    s.z_generators.push_back(-y);
  }
  return MakeSemidirectSpec(std::move(s));
}

GroupSpec InfiniteDihedralLadder() {
  SemidirectSpec s;
  s.base = AbelianTable({2}, {{1}});
  s.automorphism = {0, 1};
  s.z_generators = {1, -1};
  return MakeSemidirectSpec(std::move(s));
}

}  // namespace hamcircle::catalog
