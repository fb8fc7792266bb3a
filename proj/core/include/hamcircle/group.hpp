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

#ifndef HAMCIRCLE_GROUP_HPP_
#define HAMCIRCLE_GROUP_HPP_

// Group families used by the Hamilton-circle constructions: finite groups
// given by multiplication tables, finitely generated abelian groups, free
// products of two finite groups amalgamated over a common subgroup, and
// semidirect products of a finite group with the infinite cyclic group.
//
// Every element has a canonical representation, so structural equality of
// GroupElement values is group equality.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hamcircle/error.hpp"

namespace hamcircle {

// A finite group given by its full multiplication table. Row g, column h of
// `table` holds g*h.
struct FiniteGroupTable {
  int order = 0;
  std::vector<int> table;
  int identity = 0;
  std::vector<int> inverses;
  std::vector<int> generators;

  int mul(int a, int b) const {
    return table[static_cast<std::size_t>(a) * order + b];
  }
  int inv(int a) const { return inverses[static_cast<std::size_t>(a)]; }

  // Builds a table from rows; identity and inverses are derived. Throws
  // kInvalidArgument when the rows do not describe a group with identity.
  static FiniteGroupTable FromRows(const std::vector<std::vector<int>>& rows,
                                   std::vector<int> generators);
};

// ℤ_{d1} × ... × ℤ_{dk}. Element index is mixed radix with the last
// coordinate varying fastest. No generators are attached.
FiniteGroupTable CyclicProductTable(const std::vector<int>& orders);
int CyclicProductIndex(const std::vector<int>& orders,
                       const std::vector<int>& coords);

// Group generated by permutations of {0..n-1}; index 0 is the identity and
// the generator list holds the given permutations and their inverses.
FiniteGroupTable PermutationGroupTable(
    const std::vector<std::vector<int>>& permutations);

// Adds missing inverses to `generators`, preserving order, dropping identity
// and duplicates.
std::vector<int> SymmetrizeGenerators(const FiniteGroupTable& table,
                                      std::vector<int> generators);

bool IsAbelian(const FiniteGroupTable& table);

// Sorted member list of a subgroup of some ambient FiniteGroupTable.
struct SubgroupHandle {
  std::vector<int> members;

  bool contains(int g) const;
  int size() const { return static_cast<int>(members.size()); }
  auto operator<=>(const SubgroupHandle&) const = default;
};

SubgroupHandle SubgroupClosure(const FiniteGroupTable& table,
                               std::span<const int> seed);
bool IsNormal(const FiniteGroupTable& table, const SubgroupHandle& sub);

// Every subgroup of `table` (order <= 64), sorted by (size, members).
std::vector<SubgroupHandle> EnumerateSubgroups(const FiniteGroupTable& table);

// True iff every subgroup is normal. Tables above 64 elements are rejected
// with kUnsupported.
bool IsDedekind(const FiniteGroupTable& table);

struct QuotientResult {
  FiniteGroupTable table;
  std::vector<int> projection;  // ambient index -> coset index
};

// G/L with cosets numbered by their smallest member. Generators are images of
// the ambient generators with the identity image dropped.
QuotientResult QuotientByNormal(const FiniteGroupTable& table,
                                const SubgroupHandle& normal);

// ℤ^rank ⊕ ℤ_{t1} ⊕ ... ⊕ ℤ_{tm}; element vectors have rank + m entries.
struct AbelianSpec {
  int rank = 0;
  std::vector<std::int64_t> torsion;
  std::vector<std::vector<std::int64_t>> generators;

  std::size_t dimension() const { return rank + torsion.size(); }
};

enum class Side : std::uint8_t { kLeft, kRight };

struct Syllable {
  Side side = Side::kLeft;
  int rep = 0;  // transversal representative, index in that side's table
  auto operator<=>(const Syllable&) const = default;
};

// head * rep_1 * ... * rep_n with head in the amalgamated subgroup (left
// table index) and consecutive representatives on alternating sides.
struct AmalgamElement {
  int head = 0;
  std::vector<Syllable> syllables;
  auto operator<=>(const AmalgamElement&) const = default;
};

// G1 *_H G2. `iso` maps each left member of H to its right image; other
// entries are -1. Transversals pick, per right coset Hg, the smallest index,
// except that H itself is represented by the identity.
struct AmalgamSpec {
  FiniteGroupTable left;
  FiniteGroupTable right;
  SubgroupHandle h_left;
  SubgroupHandle h_right;
  std::vector<int> iso;
  std::vector<int> iso_inverse;
  std::vector<int> transversal_left;
  std::vector<int> transversal_right;
  std::vector<int> coset_left;   // element -> coset number
  std::vector<int> coset_right;

  const FiniteGroupTable& table(Side s) const {
    return s == Side::kLeft ? left : right;
  }
  const SubgroupHandle& subgroup(Side s) const {
    return s == Side::kLeft ? h_left : h_right;
  }
  int index(Side s) const {
    return table(s).order / subgroup(s).size();
  }

  // Fills iso_inverse, transversals and coset maps. Throws on a
  // non-bijective iso or a non-subgroup.
  void Finalize();
};

// H ⋊ ℤ with (h1,k1)(h2,k2) = (h1 φ^{k1}(h2), k1 + k2).
struct SemidirectSpec {
  FiniteGroupTable base;
  std::vector<int> automorphism;
  std::vector<std::int64_t> z_generators;
  // automorphism_powers[k] is φ^k for 0 <= k < automorphism_order.
  std::vector<std::vector<int>> automorphism_powers;

  void Finalize();
  int Apply(std::int64_t power, int h) const;
};

struct TableIndex {
  int index = 0;
  auto operator<=>(const TableIndex&) const = default;
};

struct SemidirectPair {
  int h = 0;
  std::int64_t k = 0;
  auto operator<=>(const SemidirectPair&) const = default;
};

using AbelianVec = std::vector<std::int64_t>;
using GroupElement =
    std::variant<AbelianVec, TableIndex, AmalgamElement, SemidirectPair>;

struct Generator {
  std::string name;
  GroupElement value;
};

enum class Family : std::uint8_t { kFiniteTable, kAbelian, kAmalgam, kSemidirect };

struct GroupSpec {
  std::variant<FiniteGroupTable, AbelianSpec, AmalgamSpec, SemidirectSpec>
      family;
  std::vector<Generator> generators;

  Family kind() const { return static_cast<Family>(family.index()); }
  const FiniteGroupTable& finite() const;
  const AbelianSpec& abelian() const;
  const AmalgamSpec& amalgam() const;
  const SemidirectSpec& semidirect() const;

  // Generator whose value equals g, if any.
  std::optional<std::size_t> FindGenerator(const GroupElement& g) const;
  std::size_t GeneratorIndex(const GroupElement& g) const;  // throws
  std::optional<std::size_t> FindLabel(std::string_view name) const;
  std::size_t InverseLabel(std::size_t label) const;  // throws
};

// Specs with labels "s0", "s1", ... derived from the family's generators.
GroupSpec MakeFiniteSpec(FiniteGroupTable table);
GroupSpec MakeAbelianSpec(AbelianSpec spec);
// Labels S1 (left generators) followed by S2, identical elements merged.
GroupSpec MakeAmalgamSpec(AmalgamSpec spec);
// Labels X (as (x,0)) followed by Y (as (1,y)).
GroupSpec MakeSemidirectSpec(SemidirectSpec spec);

GroupElement Identity(const GroupSpec& spec);
bool IsIdentity(const GroupSpec& spec, const GroupElement& g);
GroupElement Multiply(const GroupSpec& spec, const GroupElement& a,
                      const GroupElement& b);
GroupElement Inverse(const GroupSpec& spec, const GroupElement& g);
GroupElement Power(const GroupSpec& spec, const GroupElement& g,
                   std::int64_t exponent);

// Canonical text for an element; the identity prints as "1". Equal strings
// mean equal elements.
std::string FormatElement(const GroupSpec& spec, const GroupElement& g);

// Amalgam helpers.
AmalgamElement AmalgamFromFactor(const AmalgamSpec& spec, Side side, int g);
// The factor element represented by `x` when x lies in G1 (preferred) or G2.
std::optional<std::pair<Side, int>> AmalgamFactorElement(
    const AmalgamSpec& spec, const AmalgamElement& x);
AmalgamElement AmalgamMultiply(const AmalgamSpec& spec, const AmalgamElement& a,
                               const AmalgamElement& b);
AmalgamElement AmalgamInverse(const AmalgamSpec& spec, const AmalgamElement& a);

// Normal form of the product of the named generators. Unknown names raise
// kUnknownGenerator.
AmalgamElement BrittonNormalForm(const GroupSpec& spec,
                                 std::span<const std::string> word);

// Least k >= 1 with g^k = 1, or nullopt when g has infinite order.
std::optional<std::int64_t> ElementOrder(const GroupSpec& spec,
                                         const GroupElement& g);

enum class Ends : std::uint8_t { kZero, kOne, kTwo, kInfinite };
std::string_view EndsName(Ends ends);
Ends EndsCount(const GroupSpec& spec);

enum class Severity : std::uint8_t { kError, kWarning };

struct SpecIssue {
  std::string code;
  Severity severity = Severity::kError;
  std::string detail;
};

// Every violated invariant of `spec`; empty when valid. Never throws.
std::vector<SpecIssue> CheckSpec(const GroupSpec& spec);
bool HasErrors(const std::vector<SpecIssue>& issues);

}  // namespace hamcircle

#endif  // HAMCIRCLE_GROUP_HPP_
