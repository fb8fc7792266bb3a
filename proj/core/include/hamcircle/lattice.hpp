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

#ifndef HAMCIRCLE_LATTICE_HPP_
#define HAMCIRCLE_LATTICE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "hamcircle/group.hpp"

namespace hamcircle {

// Subgroup of ℤ^dim spanned by integer rows, kept in row echelon form.
class IntegerLattice {
 public:
  IntegerLattice(std::size_t dim, std::vector<std::vector<std::int64_t>> rows);

  bool Contains(std::vector<std::int64_t> v) const;
  int Rank() const { return static_cast<int>(basis_.size()); }

 private:
  std::size_t dim_;
  std::vector<std::vector<std::int64_t>> basis_;
  std::vector<std::size_t> pivots_;
};

// The subgroup of an abelian group generated by `gens`, lifted to ℤ^dim by
// adding the torsion relation rows.
IntegerLattice AbelianSpan(const AbelianSpec& spec,
                           const std::vector<AbelianVec>& gens);

// Rank of the free part of ⟨gens⟩.
int FreeRank(const AbelianSpec& spec, const std::vector<AbelianVec>& gens);

// Least m >= 1 such that m*s lies in ⟨gens⟩, or nullopt if none up to `cap`.
std::optional<std::int64_t> MinimalMultipleInSpan(
    const AbelianSpec& spec, const std::vector<AbelianVec>& gens,
    const AbelianVec& s, std::int64_t cap = 1 << 20);

// Reduces torsion coordinates into [0, d).
AbelianVec NormalizeAbelian(const AbelianSpec& spec, AbelianVec v);

}  // namespace hamcircle

#endif  // HAMCIRCLE_LATTICE_HPP_
