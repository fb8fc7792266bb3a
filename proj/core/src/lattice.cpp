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

#include "hamcircle/lattice.hpp"

#include <cstdlib>
#include <utility>

namespace hamcircle {
namespace {

void AxpyRow(std::vector<std::int64_t>& target, std::int64_t factor,
             const std::vector<std::int64_t>& source) {
  for (std::size_t i = 0; i < target.size(); ++i) {
    target[i] -= factor * source[i];
  }
}

}  // namespace

IntegerLattice::IntegerLattice(std::size_t dim,
                               std::vector<std::vector<std::int64_t>> rows)
    : dim_(dim) {
  std::size_t next = 0;
  for (std::size_t col = 0; col < dim_ && next < rows.size(); ++col) {
    // Euclid down the column until a single nonzero entry remains at `next`.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = next; r < rows.size(); ++r) {
        if (rows[r][col] != 0 &&
            (best == rows.size() ||
             std::llabs(rows[r][col]) < std::llabs(rows[best][col]))) {
          best = r;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[next], rows[best]);
      bool reduced = true;
      for (std::size_t r = next + 1; r < rows.size(); ++r) {
        if (rows[r][col] != 0) {
          AxpyRow(rows[r], rows[r][col] / rows[next][col], rows[next]);
          if (rows[r][col] != 0) reduced = false;
        }
      }
      if (reduced) {
        if (rows[next][col] < 0) {
          for (auto& x : rows[next]) x = -x;
        }
        pivots_.push_back(col);
        basis_.push_back(rows[next]);
        ++next;
        break;
      }
    }
  }
}

bool IntegerLattice::Contains(std::vector<std::int64_t> v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t col = pivots_[i];
    for (std::size_t c = (i == 0 ? 0 : pivots_[i - 1] + 1); c < col; ++c) {
      if (v[c] != 0) return false;
    }
    if (v[col] % basis_[i][col] != 0) return false;
    AxpyRow(v, v[col] / basis_[i][col], basis_[i]);
  }
  for (std::int64_t x : v) {
    if (x != 0) return false;
  }
  return true;
}

IntegerLattice AbelianSpan(const AbelianSpec& spec,
                           const std::vector<AbelianVec>& gens) {
  const std::size_t dim = spec.dimension();
  std::vector<std::vector<std::int64_t>> rows(gens.begin(), gens.end());
  for (std::size_t t = 0; t < spec.torsion.size(); ++t) {
    std::vector<std::int64_t> relation(dim, 0);
    relation[spec.rank + t] = spec.torsion[t];
    rows.push_back(std::move(relation));
  }
  return IntegerLattice(dim, std::move(rows));
}

int FreeRank(const AbelianSpec& spec, const std::vector<AbelianVec>& gens) {
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) {
    rows.emplace_back(g.begin(), g.begin() + spec.rank);
  }
  return IntegerLattice(static_cast<std::size_t>(spec.rank), std::move(rows))
      .Rank();
}

std::optional<std::int64_t> MinimalMultipleInSpan(
    const AbelianSpec& spec, const std::vector<AbelianVec>& gens,
    const AbelianVec& s, std::int64_t cap) {
  std::vector<AbelianVec> extended = gens;
  extended.push_back(s);
  if (FreeRank(spec, extended) > FreeRank(spec, gens)) return std::nullopt;
  const IntegerLattice span = AbelianSpan(spec, gens);
  AbelianVec multiple = s;
  for (std::int64_t m = 1; m <= cap; ++m) {
    if (span.Contains(multiple)) return m;
    for (std::size_t i = 0; i < multiple.size(); ++i) multiple[i] += s[i];
  }
  return std::nullopt;
}

AbelianVec NormalizeAbelian(const AbelianSpec& spec, AbelianVec v) {
  for (std::size_t t = 0; t < spec.torsion.size(); ++t) {
    auto& x = v[spec.rank + t];
    x %= spec.torsion[t];
    if (x < 0) x += spec.torsion[t];
  }
  return v;
}

}  // namespace hamcircle
