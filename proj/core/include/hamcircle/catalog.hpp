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

#ifndef HAMCIRCLE_CATALOG_HPP_
#define HAMCIRCLE_CATALOG_HPP_

// Ready-made group specs used by the CLI examples, tests and benchmarks.

#include <cstdint>
#include <vector>

#include "hamcircle/group.hpp"

namespace hamcircle::catalog {

// ℤ_{d1} × ... × ℤ_{dk} as a table; `generators` are coordinate vectors,
// symmetrized.
FiniteGroupTable AbelianTable(const std::vector<int>& orders,
                              const std::vector<std::vector<int>>& generators);

FiniteGroupTable Quaternion();        // Q8, generators ±i, ±j
FiniteGroupTable Symmetric3();        // S3, generators (01), (012)^{±1}

// ℤ with the given (symmetrized) generators.
GroupSpec Integers(const std::vector<std::int64_t>& generators);
// ℤ^rank ⊕ torsion with generators as given (symmetrized).
GroupSpec Abelian(int rank, const std::vector<std::int64_t>& torsion,
                  const std::vector<AbelianVec>& generators);

// (ℤ3×ℤ2) *_{ℤ2} (ℤ3×ℤ2) with generators a, b^{±1} and c^{±1}.
GroupSpec CounterexampleAmalgam();
// ℤ4 *_{ℤ2} (ℤ2×ℤ2), G1 generated by ±1, G2 by both factors.
GroupSpec ZigZagAmalgam();
// (ℤ4×ℤ2) *_{⟨2⟩×ℤ2} (ℤ4×ℤ2) with ±(1,0), (0,1) on both sides.
GroupSpec DedekindAmalgam();
// ℤ3 ⋊ ℤ with φ = inversion.
GroupSpec InversionSemidirect(const std::vector<std::int64_t>& z_generators);
// ℤ2 ⋊ ℤ with generators a and ±1; its Cayley graph is the double ladder,
// the same graph as D∞ = ⟨a, b | a², abab⟩.
GroupSpec InfiniteDihedralLadder();

}  // namespace hamcircle::catalog

#endif  // HAMCIRCLE_CATALOG_HPP_
