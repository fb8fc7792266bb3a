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

#include "hamcircle/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "hamcircle/lattice.hpp"

namespace hamcircle {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSpecMismatch: return "SpecMismatch";
    case ErrorCode::kUnknownGenerator: return "UnknownGenerator";
    case ErrorCode::kNotNormal: return "NotNormal";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kNoHamiltonCycleFound: return "NoHamiltonCycleFound";
    case ErrorCode::kNoHamiltonCircle: return "NoHamiltonCircle";
    case ErrorCode::kMalformedCylinder: return "MalformedCylinder";
    case ErrorCode::kAlternationViolated: return "AlternationViolated";
    case ErrorCode::kGeneratorInsideSubgroup: return "GeneratorInsideSubgroup";
    case ErrorCode::kWrongIndex: return "WrongIndex";
    case ErrorCode::kNotDedekind: return "NotDedekind";
    case ErrorCode::kNoSeparation: return "NoSeparation";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Finite tables

FiniteGroupTable FiniteGroupTable::FromRows(
    const std::vector<std::vector<int>>& rows, std::vector<int> generators) {
  FiniteGroupTable t;
  t.order = static_cast<int>(rows.size());
  if (t.order == 0) {
    throw Error(ErrorCode::kInvalidArgument, "empty multiplication table");
  }
  t.table.reserve(static_cast<std::size_t>(t.order) * t.order);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != t.order) {
      throw Error(ErrorCode::kInvalidArgument, "table is not square");
    }
    for (int x : row) {
      if (x < 0 || x >= t.order) {
        throw Error(ErrorCode::kInvalidArgument, "table entry out of range");
      }
      t.table.push_back(x);
    }
  }
  t.identity = -1;
  for (int e = 0; e < t.order && t.identity < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < t.order && ok; ++g) {
      ok = t.mul(e, g) == g && t.mul(g, e) == g;
    }
    if (ok) t.identity = e;
  }
  if (t.identity < 0) {
    throw Error(ErrorCode::kInvalidArgument, "table has no identity");
  }
  t.inverses.assign(t.order, -1);
  for (int g = 0; g < t.order; ++g) {
    for (int h = 0; h < t.order; ++h) {
      if (t.mul(g, h) == t.identity && t.mul(h, g) == t.identity) {
        t.inverses[g] = h;
        break;
      }
    }
    if (t.inverses[g] < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "element " + std::to_string(g) + " has no inverse");
    }
  }
  for (int g : generators) {
    if (g < 0 || g >= t.order) {
      throw Error(ErrorCode::kInvalidArgument, "generator out of range");
    }
  }
  t.generators = std::move(generators);
  return t;
}

int CyclicProductIndex(const std::vector<int>& orders,
                       const std::vector<int>& coords) {
  int index = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    index = index * orders[i] + ((coords[i] % orders[i]) + orders[i]) % orders[i];
  }
  return index;
}

FiniteGroupTable CyclicProductTable(const std::vector<int>& orders) {
  const int n = std::accumulate(orders.begin(), orders.end(), 1,
                                std::multiplies<>());
  auto coords_of = [&](int index) {
    std::vector<int> c(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      c[i] = index % orders[i];
      index /= orders[i];
    }
    return c;
  };
  FiniteGroupTable t;
  t.order = n;
  t.identity = 0;
  t.table.resize(static_cast<std::size_t>(n) * n);
  t.inverses.resize(n);
  for (int a = 0; a < n; ++a) {
    const auto ca = coords_of(a);
    for (int b = 0; b < n; ++b) {
      auto cb = coords_of(b);
      for (std::size_t i = 0; i < cb.size(); ++i) cb[i] += ca[i];
      t.table[static_cast<std::size_t>(a) * n + b] = CyclicProductIndex(orders, cb);
    }
    auto neg = ca;
    for (auto& x : neg) x = -x;
    t.inverses[a] = CyclicProductIndex(orders, neg);
  }
  return t;
}

FiniteGroupTable PermutationGroupTable(
    const std::vector<std::vector<int>>& permutations) {
  if (permutations.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no permutations given");
  }
  const std::size_t degree = permutations.front().size();
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
    // (p*q)(x) = q(p(x)): apply p first, matching right multiplication.
    std::vector<int> r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
    return r;
  };
  std::vector<std::vector<int>> elements{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& p : permutations) {
      auto next = compose(elements[i], p);
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(next));
      }
    }
  }
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      rows[a][b] = index.at(compose(elements[a], elements[b]));
    }
  }
  std::vector<int> gens;
  for (const auto& p : permutations) gens.push_back(index.at(p));
  auto t = FiniteGroupTable::FromRows(rows, {});
  t.generators = SymmetrizeGenerators(t, gens);
  return t;
}

std::vector<int> SymmetrizeGenerators(const FiniteGroupTable& table,
                                      std::vector<int> generators) {
  std::vector<int> out;
  auto push = [&](int g) {
    if (g != table.identity && std::find(out.begin(), out.end(), g) == out.end()) {
      out.push_back(g);
    }
  };
  for (int g : generators) {
    push(g);
    push(table.inv(g));
  }
  return out;
}

bool IsAbelian(const FiniteGroupTable& table) {
  for (int a = 0; a < table.order; ++a) {
    for (int b = a + 1; b < table.order; ++b) {
      if (table.mul(a, b) != table.mul(b, a)) return false;
    }
  }
  return true;
}

bool SubgroupHandle::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

SubgroupHandle SubgroupClosure(const FiniteGroupTable& table,
                               std::span<const int> seed) {
  std::vector<char> in(table.order, 0);
  std::vector<int> members{table.identity};
  in[table.identity] = 1;
  std::vector<int> gens(seed.begin(), seed.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int s : gens) {
      const int next = table.mul(members[i], s);
      if (!in[next]) {
        in[next] = 1;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return SubgroupHandle{std::move(members)};
}

bool IsNormal(const FiniteGroupTable& table, const SubgroupHandle& sub) {
  for (int g = 0; g < table.order; ++g) {
    for (int h : sub.members) {
      if (!sub.contains(table.mul(table.mul(g, h), table.inv(g)))) return false;
    }
  }
  return true;
}

std::vector<SubgroupHandle> EnumerateSubgroups(const FiniteGroupTable& table) {
  if (table.order > 64) {
    throw Error(ErrorCode::kUnsupported,
                "subgroup enumeration limited to order <= 64");
  }
  std::set<SubgroupHandle> found;
  std::vector<SubgroupHandle> cyclic;
  for (int g = 0; g < table.order; ++g) {
    const int seed[] = {g};
    auto c = SubgroupClosure(table, seed);
    if (found.insert(c).second) cyclic.push_back(std::move(c));
  }
  // Every subgroup is a join of cyclic subgroups; close under joins.
  std::vector<SubgroupHandle> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<SubgroupHandle> next;
    for (const auto& sub : frontier) {
      for (const auto& c : cyclic) {
        if (std::includes(sub.members.begin(), sub.members.end(),
                          c.members.begin(), c.members.end())) {
          continue;
        }
        std::vector<int> seed = sub.members;
        seed.insert(seed.end(), c.members.begin(), c.members.end());
        auto joined = SubgroupClosure(table, seed);
        if (found.insert(joined).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  std::vector<SubgroupHandle> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

bool IsDedekind(const FiniteGroupTable& table) {
  if (table.order > 64) {
    throw Error(ErrorCode::kUnsupported, "Dedekind check limited to order <= 64");
  }
  for (const auto& sub : EnumerateSubgroups(table)) {
    if (!IsNormal(table, sub)) return false;
  }
  return true;
}

QuotientResult QuotientByNormal(const FiniteGroupTable& table,
                                const SubgroupHandle& normal) {
  if (!IsNormal(table, normal)) {
    throw Error(ErrorCode::kNotNormal, "subgroup is not normal");
  }
  QuotientResult result;
  result.projection.assign(table.order, -1);
  std::vector<int> rep;
  for (int g = 0; g < table.order; ++g) {
    if (result.projection[g] >= 0) continue;
    const int id = static_cast<int>(rep.size());
    rep.push_back(g);
    for (int l : normal.members) result.projection[table.mul(g, l)] = id;
  }
  const int n = static_cast<int>(rep.size());
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      rows[a][b] = result.projection[table.mul(rep[a], rep[b])];
    }
  }
  std::vector<int> gens;
  for (int g : table.generators) {
    const int image = result.projection[g];
    if (image != result.projection[table.identity] &&
        std::find(gens.begin(), gens.end(), image) == gens.end()) {
      gens.push_back(image);
    }
  }
  result.table = FiniteGroupTable::FromRows(rows, std::move(gens));
  return result;
}

// ---------------------------------------------------------------------------
// Amalgams

void AmalgamSpec::Finalize() {
  for (Side s : {Side::kLeft, Side::kRight}) {
    const auto& t = table(s);
    const auto& h = subgroup(s);
    for (int m : h.members) {
      if (m < 0 || m >= t.order) {
        throw Error(ErrorCode::kInvalidArgument, "subgroup member out of range");
      }
    }
    if (!h.contains(t.identity) || SubgroupClosure(t, h.members) != h) {
      throw Error(ErrorCode::kInvalidArgument,
                  "amalgamated subgroup is not a subgroup");
    }
    auto& coset = s == Side::kLeft ? coset_left : coset_right;
    auto& transversal = s == Side::kLeft ? transversal_left : transversal_right;
    coset.assign(t.order, -1);
    transversal.clear();
    // H itself first, represented by the identity.
    for (int g = -1; g < t.order; ++g) {
      const int start = g < 0 ? t.identity : g;
      if (coset[start] >= 0) continue;
      const int id = static_cast<int>(transversal.size());
      transversal.push_back(start);
      for (int m : h.members) coset[t.mul(m, start)] = id;
    }
  }
  if (h_left.size() != h_right.size()) {
    throw Error(ErrorCode::kInvalidArgument, "amalgamated subgroups differ in order");
  }
  if (static_cast<int>(iso.size()) != left.order) {
    throw Error(ErrorCode::kInvalidArgument, "iso must have one entry per left element");
  }
  iso_inverse.assign(right.order, -1);
  for (int m : h_left.members) {
    const int image = iso[m];
    if (image < 0 || !h_right.contains(image) || iso_inverse[image] >= 0) {
      throw Error(ErrorCode::kInvalidArgument, "iso is not a bijection H1 -> H2");
    }
    iso_inverse[image] = m;
  }
}

namespace {

int ToSide(const AmalgamSpec& spec, int h, Side from, Side to) {
  if (from == to) return h;
  return from == Side::kLeft ? spec.iso[h] : spec.iso_inverse[h];
}

// Writes p = h * t with t the transversal representative of the right coset
// Hp; returns {h, t}.
std::pair<int, int> SplitCoset(const AmalgamSpec& spec, Side side, int p) {
  const auto& t = spec.table(side);
  const auto& coset = side == Side::kLeft ? spec.coset_left : spec.coset_right;
  const auto& transversal =
      side == Side::kLeft ? spec.transversal_left : spec.transversal_right;
  const int rep = transversal[coset[p]];
  return {t.mul(p, t.inv(rep)), rep};
}

// x = head * t_1 ... t_k * h with h in H (given in `side` coordinates);
// absorbs h leftwards into the first k syllables and the head.
void PushLeft(const AmalgamSpec& spec, AmalgamElement& x, std::size_t k, Side side,
              int h) {
  for (std::size_t j = k; j-- > 0;) {
    Syllable& syl = x.syllables[j];
    const int local = ToSide(spec, h, side, syl.side);
    const int p = spec.table(syl.side).mul(syl.rep, local);
    auto [head, rep] = SplitCoset(spec, syl.side, p);
    syl.rep = rep;
    h = head;
    side = syl.side;
  }
  x.head = spec.left.mul(x.head, ToSide(spec, h, side, Side::kLeft));
}

void RightMultiplyFactor(const AmalgamSpec& spec, AmalgamElement& x, Side side,
                         int g) {
  const auto& t = spec.table(side);
  const auto& h = spec.subgroup(side);
  if (!x.syllables.empty() && x.syllables.back().side == side) {
    const int p = t.mul(x.syllables.back().rep, g);
    if (h.contains(p)) {
      x.syllables.pop_back();
      PushLeft(spec, x, x.syllables.size(), side, p);
    } else {
      auto [head, rep] = SplitCoset(spec, side, p);
      x.syllables.back().rep = rep;
      PushLeft(spec, x, x.syllables.size() - 1, side, head);
    }
    return;
  }
  if (h.contains(g)) {
    PushLeft(spec, x, x.syllables.size(), side, g);
    return;
  }
  auto [head, rep] = SplitCoset(spec, side, g);
  x.syllables.push_back(Syllable{side, rep});
  PushLeft(spec, x, x.syllables.size() - 1, side, head);
}

}  // namespace

AmalgamElement AmalgamFromFactor(const AmalgamSpec& spec, Side side, int g) {
  AmalgamElement x{spec.left.identity, {}};
  RightMultiplyFactor(spec, x, side, g);
  return x;
}

std::optional<std::pair<Side, int>> AmalgamFactorElement(
    const AmalgamSpec& spec, const AmalgamElement& x) {
  if (x.syllables.empty()) return std::make_pair(Side::kLeft, x.head);
  if (x.syllables.size() != 1) return std::nullopt;
  const Syllable& s = x.syllables.front();
  const int head = ToSide(spec, x.head, Side::kLeft, s.side);
  return std::make_pair(s.side, spec.table(s.side).mul(head, s.rep));
}

AmalgamElement AmalgamMultiply(const AmalgamSpec& spec, const AmalgamElement& a,
                               const AmalgamElement& b) {
  AmalgamElement x = a;
  RightMultiplyFactor(spec, x, Side::kLeft, b.head);
  for (const Syllable& s : b.syllables) RightMultiplyFactor(spec, x, s.side, s.rep);
  return x;
}

AmalgamElement AmalgamInverse(const AmalgamSpec& spec, const AmalgamElement& a) {
  AmalgamElement x{spec.left.identity, {}};
  for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it) {
    RightMultiplyFactor(spec, x, it->side, spec.table(it->side).inv(it->rep));
  }
  RightMultiplyFactor(spec, x, Side::kLeft, spec.left.inv(a.head));
  return x;
}

AmalgamElement BrittonNormalForm(const GroupSpec& spec,
                                 std::span<const std::string> word) {
  const AmalgamSpec& a = spec.amalgam();
  AmalgamElement x{a.left.identity, {}};
  for (const auto& label : word) {
    auto index = spec.FindLabel(label);
    if (!index) throw Error(ErrorCode::kUnknownGenerator, label);
    x = AmalgamMultiply(a, x, std::get<AmalgamElement>(spec.generators[*index].value));
  }
  return x;
}

// ---------------------------------------------------------------------------
// Semidirect products

void SemidirectSpec::Finalize() {
  const int n = base.order;
  if (static_cast<int>(automorphism.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "automorphism has wrong length");
  }
  std::vector<char> seen(n, 0);
  for (int x : automorphism) {
    if (x < 0 || x >= n || seen[x]) {
      throw Error(ErrorCode::kInvalidArgument, "automorphism is not a permutation");
    }
    seen[x] = 1;
  }
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  automorphism_powers = {id};
  while (true) {
    std::vector<int> next(n);
    for (int h = 0; h < n; ++h) next[h] = automorphism[automorphism_powers.back()[h]];
    if (next == id) break;
    automorphism_powers.push_back(std::move(next));
  }
}

int SemidirectSpec::Apply(std::int64_t power, int h) const {
  const auto period = static_cast<std::int64_t>(automorphism_powers.size());
  std::int64_t p = power % period;
  if (p < 0) p += period;
  return automorphism_powers[static_cast<std::size_t>(p)][h];
}

// ---------------------------------------------------------------------------
// GroupSpec

const FiniteGroupTable& GroupSpec::finite() const {
  if (auto* p = std::get_if<FiniteGroupTable>(&family)) return *p;
  throw Error(ErrorCode::kSpecMismatch, "expected finite_table family");
}
const AbelianSpec& GroupSpec::abelian() const {
  if (auto* p = std::get_if<AbelianSpec>(&family)) return *p;
  throw Error(ErrorCode::kSpecMismatch, "expected abelian family");
}
const AmalgamSpec& GroupSpec::amalgam() const {
  if (auto* p = std::get_if<AmalgamSpec>(&family)) return *p;
  throw Error(ErrorCode::kSpecMismatch, "expected amalgam family");
}
const SemidirectSpec& GroupSpec::semidirect() const {
  if (auto* p = std::get_if<SemidirectSpec>(&family)) return *p;
  throw Error(ErrorCode::kSpecMismatch, "expected semidirect family");
}

std::optional<std::size_t> GroupSpec::FindGenerator(const GroupElement& g) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].value == g) return i;
  }
  return std::nullopt;
}

std::size_t GroupSpec::GeneratorIndex(const GroupElement& g) const {
  if (auto i = FindGenerator(g)) return *i;
  throw Error(ErrorCode::kUnknownGenerator,
              "element " + FormatElement(*this, g) + " is not a generator");
}

std::optional<std::size_t> GroupSpec::FindLabel(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t GroupSpec::InverseLabel(std::size_t label) const {
  return GeneratorIndex(Inverse(*this, generators.at(label).value));
}

namespace {

std::string Label(std::size_t i) { return "s" + std::to_string(i); }

void AddGenerator(GroupSpec& spec, GroupElement value) {
  if (IsIdentity(spec, value) || spec.FindGenerator(value)) return;
  spec.generators.push_back(Generator{Label(spec.generators.size()), std::move(value)});
}

}  // namespace

GroupSpec MakeFiniteSpec(FiniteGroupTable table) {
  GroupSpec spec;
  spec.family = std::move(table);
  for (int g : spec.finite().generators) AddGenerator(spec, TableIndex{g});
  return spec;
}

GroupSpec MakeAbelianSpec(AbelianSpec a) {
  for (auto& g : a.generators) {
    if (g.size() != a.dimension()) {
      throw Error(ErrorCode::kInvalidArgument, "generator has wrong dimension");
    }
    g = NormalizeAbelian(a, g);
  }
  GroupSpec spec;
  spec.family = std::move(a);
  for (const auto& g : spec.abelian().generators) AddGenerator(spec, g);
  return spec;
}

GroupSpec MakeAmalgamSpec(AmalgamSpec a) {
  a.Finalize();
  GroupSpec spec;
  spec.family = std::move(a);
  const AmalgamSpec& am = spec.amalgam();
  for (int g : am.left.generators) AddGenerator(spec, AmalgamFromFactor(am, Side::kLeft, g));
  for (int g : am.right.generators) AddGenerator(spec, AmalgamFromFactor(am, Side::kRight, g));
  return spec;
}

GroupSpec MakeSemidirectSpec(SemidirectSpec s) {
  s.Finalize();
  GroupSpec spec;
  spec.family = std::move(s);
  const SemidirectSpec& sd = spec.semidirect();
  for (int x : sd.base.generators) AddGenerator(spec, SemidirectPair{x, 0});
  for (std::int64_t y : sd.z_generators) {
    AddGenerator(spec, SemidirectPair{sd.base.identity, y});
  }
  return spec;
}

GroupElement Identity(const GroupSpec& spec) {
  switch (spec.kind()) {
    case Family::kFiniteTable: return TableIndex{spec.finite().identity};
    case Family::kAbelian: return AbelianVec(spec.abelian().dimension(), 0);
    case Family::kAmalgam: return AmalgamElement{spec.amalgam().left.identity, {}};
    case Family::kSemidirect: return SemidirectPair{spec.semidirect().base.identity, 0};
  }
  throw Error(ErrorCode::kSpecMismatch, "unknown family");
}

bool IsIdentity(const GroupSpec& spec, const GroupElement& g) {
  return g == Identity(spec);
}

namespace {

template <typename T>
const T& As(const GroupElement& g) {
  if (auto* p = std::get_if<T>(&g)) return *p;
  throw Error(ErrorCode::kSpecMismatch, "element tag does not match spec family");
}

}  // namespace

GroupElement Multiply(const GroupSpec& spec, const GroupElement& a,
                      const GroupElement& b) {
  switch (spec.kind()) {
    case Family::kFiniteTable:
      return TableIndex{spec.finite().mul(As<TableIndex>(a).index, As<TableIndex>(b).index)};
    case Family::kAbelian: {
      const auto& x = As<AbelianVec>(a);
      const auto& y = As<AbelianVec>(b);
      if (x.size() != y.size() || x.size() != spec.abelian().dimension()) {
        throw Error(ErrorCode::kSpecMismatch, "abelian vector has wrong dimension");
      }
      AbelianVec z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
      return NormalizeAbelian(spec.abelian(), std::move(z));
    }
    case Family::kAmalgam:
      return AmalgamMultiply(spec.amalgam(), As<AmalgamElement>(a), As<AmalgamElement>(b));
    case Family::kSemidirect: {
      const auto& sd = spec.semidirect();
      const auto& x = As<SemidirectPair>(a);
      const auto& y = As<SemidirectPair>(b);
      return SemidirectPair{sd.base.mul(x.h, sd.Apply(x.k, y.h)), x.k + y.k};
    }
  }
  throw Error(ErrorCode::kSpecMismatch, "unknown family");
}

GroupElement Inverse(const GroupSpec& spec, const GroupElement& g) {
  switch (spec.kind()) {
    case Family::kFiniteTable:
      return TableIndex{spec.finite().inv(As<TableIndex>(g).index)};
    case Family::kAbelian: {
      AbelianVec z = As<AbelianVec>(g);
      for (auto& x : z) x = -x;
      return NormalizeAbelian(spec.abelian(), std::move(z));
    }
    case Family::kAmalgam:
      return AmalgamInverse(spec.amalgam(), As<AmalgamElement>(g));
    case Family::kSemidirect: {
      // (h,k)^{-1} = (φ^{-k}(h^{-1}), -k)
      const auto& sd = spec.semidirect();
      const auto& x = As<SemidirectPair>(g);
      return SemidirectPair{sd.Apply(-x.k, sd.base.inv(x.h)), -x.k};
    }
  }
  throw Error(ErrorCode::kSpecMismatch, "unknown family");
}

GroupElement Power(const GroupSpec& spec, const GroupElement& g,
                   std::int64_t exponent) {
  GroupElement base = exponent < 0 ? Inverse(spec, g) : g;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                 : static_cast<std::uint64_t>(exponent);
  GroupElement result = Identity(spec);
  while (e > 0) {
    if (e & 1U) result = Multiply(spec, result, base);
    e >>= 1U;
    if (e > 0) base = Multiply(spec, base, base);
  }
  return result;
}

std::string FormatElement(const GroupSpec& spec, const GroupElement& g) {
  if (IsIdentity(spec, g)) return "1";
  std::ostringstream out;
  switch (spec.kind()) {
    case Family::kFiniteTable:
      out << 'g' << As<TableIndex>(g).index;
      break;
    case Family::kAbelian: {
      out << '(';
      const auto& v = As<AbelianVec>(g);
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
      out << ')';
      break;
    }
    case Family::kAmalgam: {
      const auto& x = As<AmalgamElement>(g);
      bool first = true;
      if (x.head != spec.amalgam().left.identity) {
        out << 'h' << x.head;
        first = false;
      }
      for (const auto& s : x.syllables) {
        out << (first ? "" : ".") << (s.side == Side::kLeft ? 'L' : 'R') << s.rep;
        first = false;
      }
      break;
    }
    case Family::kSemidirect: {
      const auto& x = As<SemidirectPair>(g);
      out << '(' << x.h << ',' << x.k << ')';
      break;
    }
  }
  return out.str();
}

std::optional<std::int64_t> ElementOrder(const GroupSpec& spec,
                                         const GroupElement& g) {
  switch (spec.kind()) {
    case Family::kFiniteTable: {
      const auto& t = spec.finite();
      int x = As<TableIndex>(g).index;
      for (std::int64_t k = 1;; ++k) {
        if (x == t.identity) return k;
        x = t.mul(x, As<TableIndex>(g).index);
      }
    }
    case Family::kAbelian: {
      const auto& a = spec.abelian();
      const auto& v = As<AbelianVec>(g);
      for (int i = 0; i < a.rank; ++i) {
        if (v[i] != 0) return std::nullopt;
      }
      std::int64_t order = 1;
      for (std::size_t t = 0; t < a.torsion.size(); ++t) {
        const std::int64_t d = a.torsion[t];
        const std::int64_t coord_order = d / std::gcd(d, v[a.rank + t]);
        order = std::lcm(order, coord_order);
      }
      return order;
    }
    case Family::kAmalgam: {
      // Finite-order elements are conjugate into a factor, so their order is
      // at most max(|G1|,|G2|); iterating to |G1|*|G2| is ample.
      const auto& a = spec.amalgam();
      const std::int64_t bound = static_cast<std::int64_t>(a.left.order) * a.right.order;
      GroupElement x = g;
      for (std::int64_t k = 1; k <= bound; ++k) {
        if (IsIdentity(spec, x)) return k;
        x = Multiply(spec, x, g);
      }
      return std::nullopt;
    }
    case Family::kSemidirect: {
      const auto& x = As<SemidirectPair>(g);
      if (x.k != 0) return std::nullopt;
      const auto& base = spec.semidirect().base;
      int y = x.h;
      for (std::int64_t k = 1;; ++k) {
        if (y == base.identity) return k;
        y = base.mul(y, x.h);
      }
    }
  }
  return std::nullopt;
}

std::string_view EndsName(Ends ends) {
  switch (ends) {
    case Ends::kZero: return "0";
    case Ends::kOne: return "1";
    case Ends::kTwo: return "2";
    case Ends::kInfinite: return "infinite";
  }
  return "?";
}

Ends EndsCount(const GroupSpec& spec) {
  switch (spec.kind()) {
    case Family::kFiniteTable:
      return Ends::kZero;
    case Family::kAbelian: {
      const int n = spec.abelian().rank;
      return n == 0 ? Ends::kZero : (n == 1 ? Ends::kTwo : Ends::kOne);
    }
    case Family::kAmalgam: {
      const auto& a = spec.amalgam();
      const int i1 = a.index(Side::kLeft);
      const int i2 = a.index(Side::kRight);
      if (i1 == 1 || i2 == 1) return Ends::kZero;
      if (i1 == 2 && i2 == 2) return Ends::kTwo;
      return Ends::kInfinite;
    }
    case Family::kSemidirect:
      return Ends::kTwo;
  }
  return Ends::kZero;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

void Issue(std::vector<SpecIssue>& out, std::string code, std::string detail,
           Severity severity = Severity::kError) {
  out.push_back(SpecIssue{std::move(code), severity, std::move(detail)});
}

void CheckTable(const FiniteGroupTable& t, const std::string& where,
                std::vector<SpecIssue>& out) {
  if (t.order <= 0 || t.table.size() != static_cast<std::size_t>(t.order) * t.order) {
    Issue(out, "MalformedTable", where + ": table size does not match order");
    return;
  }
  for (int g = 0; g < t.order; ++g) {
    if (t.mul(t.identity, g) != g || t.mul(g, t.identity) != g) {
      Issue(out, "IdentityInvalid", where + ": identity is not two-sided");
      break;
    }
  }
  for (int g = 0; g < t.order; ++g) {
    if (t.mul(g, t.inv(g)) != t.identity || t.mul(t.inv(g), g) != t.identity) {
      Issue(out, "InverseInvalid", where + ": inverse of " + std::to_string(g));
      break;
    }
  }
  // Exhaustive up to 64 elements, otherwise a deterministic sample.
  const int n = t.order;
  const long long triples = static_cast<long long>(n) * n * n;
  const long long stride = n <= 64 ? 1 : std::max<long long>(1, triples / 200000);
  for (long long i = 0; i < triples; i += stride) {
    const int a = static_cast<int>(i / (static_cast<long long>(n) * n));
    const int b = static_cast<int>((i / n) % n);
    const int c = static_cast<int>(i % n);
    if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c))) {
      Issue(out, "NotAssociative",
            where + ": (" + std::to_string(a) + "," + std::to_string(b) + "," +
                std::to_string(c) + ")");
      break;
    }
  }
  if (SubgroupClosure(t, t.generators).size() != t.order) {
    Issue(out, "GeneratorsDoNotGenerate", where);
  }
  for (int g : t.generators) {
    if (std::find(t.generators.begin(), t.generators.end(), t.inv(g)) ==
        t.generators.end()) {
      Issue(out, "GeneratorsNotSymmetric", where + ": inverse of " + std::to_string(g));
      break;
    }
  }
}

void CheckMinimality(const FiniteGroupTable& t, const std::string& where,
                     std::vector<SpecIssue>& out) {
  for (int g : t.generators) {
    std::vector<int> rest;
    for (int x : t.generators) {
      if (x != g && x != t.inv(g)) rest.push_back(x);
    }
    if (SubgroupClosure(t, rest).contains(g)) {
      Issue(out, "GeneratorNotMinimal",
            where + ": generator " + std::to_string(g) + " is generated by the others",
            Severity::kWarning);
    }
  }
}

}  // namespace

std::vector<SpecIssue> CheckSpec(const GroupSpec& spec) {
  std::vector<SpecIssue> out;
  try {
    for (const auto& gen : spec.generators) {
      if (!spec.FindGenerator(Inverse(spec, gen.value))) {
        Issue(out, "GeneratorsNotSymmetric", "inverse of " + gen.name + " missing");
      }
      if (IsIdentity(spec, gen.value)) {
        Issue(out, "IdentityGenerator", gen.name);
      }
    }
    switch (spec.kind()) {
      case Family::kFiniteTable: {
        CheckTable(spec.finite(), "table", out);
        if (HasErrors(out)) break;
        CheckMinimality(spec.finite(), "table", out);
        break;
      }
      case Family::kAbelian: {
        const auto& a = spec.abelian();
        for (auto d : a.torsion) {
          if (d < 2) Issue(out, "InvalidTorsion", std::to_string(d));
        }
        std::vector<AbelianVec> gens;
        for (const auto& g : spec.generators) gens.push_back(std::get<AbelianVec>(g.value));
        const auto span = AbelianSpan(a, gens);
        for (std::size_t i = 0; i < a.dimension(); ++i) {
          AbelianVec unit(a.dimension(), 0);
          unit[i] = 1;
          if (!span.Contains(unit)) {
            Issue(out, "GeneratorsDoNotGenerate", "coordinate " + std::to_string(i));
            break;
          }
        }
        break;
      }
      case Family::kAmalgam: {
        const auto& a = spec.amalgam();
        std::vector<SpecIssue> tables;
        CheckTable(a.left, "left", tables);
        CheckTable(a.right, "right", tables);
        out.insert(out.end(), tables.begin(), tables.end());
        if (HasErrors(tables)) break;
        for (int x : a.h_left.members) {
          for (int y : a.h_left.members) {
            if (a.iso[a.left.mul(x, y)] != a.right.mul(a.iso[x], a.iso[y])) {
              Issue(out, "IsoNotHomomorphism",
                    "iso(" + std::to_string(x) + "*" + std::to_string(y) + ")");
              goto iso_done;
            }
          }
        }
      iso_done:
        break;
      }
      case Family::kSemidirect: {
        const auto& s = spec.semidirect();
        CheckTable(s.base, "base", out);
        if (HasErrors(out)) break;
        if (s.automorphism[s.base.identity] != s.base.identity) {
          Issue(out, "AutomorphismNotHomomorphism", "identity not fixed");
        }
        for (int x = 0; x < s.base.order; ++x) {
          for (int y = 0; y < s.base.order; ++y) {
            if (s.automorphism[s.base.mul(x, y)] !=
                s.base.mul(s.automorphism[x], s.automorphism[y])) {
              Issue(out, "AutomorphismNotHomomorphism",
                    std::to_string(x) + "*" + std::to_string(y));
              goto aut_done;
            }
          }
        }
      aut_done: {
        std::int64_t g = 0;
        for (auto y : s.z_generators) {
          if (y == 0) Issue(out, "InvalidZGenerator", "0");
          g = std::gcd(g, y);
        }
        if (g != 1) Issue(out, "ZGeneratorsDoNotGenerate", "gcd " + std::to_string(g));
      }
        break;
      }
    }
  } catch (const Error& e) {
    Issue(out, std::string(ErrorCodeName(e.code())), e.what());
  }
  return out;
}

bool HasErrors(const std::vector<SpecIssue>& issues) {
  return std::any_of(issues.begin(), issues.end(),
                     [](const SpecIssue& i) { return i.severity == Severity::kError; });
}

}  // namespace hamcircle
