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

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_map>

#include "hamcircle/hamilton.hpp"
#include "hamcircle/lattice.hpp"
#include "hamcircle/verify.hpp"

namespace hamcircle {

namespace {

constexpr std::string_view kConstructionNames[] = {
    "TheoremZ", "Cylinder", "AlternCylinder", "ZigZag",
    "DedekindAmalgam", "SemidirectI", "SemidirectII", "Manual"};

}  // namespace

std::string_view ConstructionName(Construction c) {
  return kConstructionNames[static_cast<int>(c)];
}

std::optional<Construction> ParseConstruction(std::string_view name) {
  for (int i = 0; i < 8; ++i) {
    if (kConstructionNames[i] == name) return static_cast<Construction>(i);
  }
  return std::nullopt;
}

namespace {

CircleCertificate SelfChecked(CircleCertificate cert) {
  const VerificationReport report = VerifyCertificate(cert, kSelfCheckRadius);
  if (!report.consistent()) {
    throw Error(ErrorCode::kUnsupported,
                std::string(ConstructionName(cert.construction)) +
                    " certificate failed its self-check (" + report.failed_check + ")");
  }
  return cert;
}

CircleCertificate Certificate(const GroupSpec& spec, Construction tag,
                              std::vector<DoubleRay> rays, bool one_ended = false) {
  return CircleCertificate{spec, tag, std::move(rays), one_ended};
}

// One label per {s, s^-1} pair, in label order.
std::vector<std::size_t> Representatives(const GroupSpec& spec) {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    const std::size_t inv = spec.InverseLabel(i);
    if (std::find(reps.begin(), reps.end(), inv) == reps.end()) reps.push_back(i);
  }
  return reps;
}

std::vector<AbelianVec> Values(const GroupSpec& spec, const std::vector<std::size_t>& labels) {
  std::vector<AbelianVec> out;
  for (std::size_t l : labels) out.push_back(std::get<AbelianVec>(spec.generators[l].value));
  return out;
}

bool GeneratesAll(const GroupSpec& spec, const std::vector<std::size_t>& labels) {
  const AbelianSpec& a = spec.abelian();
  const IntegerLattice span = AbelianSpan(a, Values(spec, labels));
  for (std::size_t k = 0; k < a.dimension(); ++k) {
    AbelianVec e(a.dimension(), 0);
    e[k] = 1;
    if (!span.Contains(e)) return false;
  }
  return true;
}

// Column heights turning a ray through <chain[0]> into one through
// <chain>: each later generator s gets height i with s^{i+1} in the span
// of its predecessors.
std::optional<std::vector<ColumnLift>> ColumnChain(const GroupSpec& spec,
                                                   const std::vector<std::size_t>& chain,
                                                   std::size_t first) {
  std::vector<ColumnLift> lifts;
  std::vector<std::size_t> prev(chain.begin(), chain.begin() + first);
  for (std::size_t k = first; k < chain.size(); ++k) {
    const auto& s = std::get<AbelianVec>(spec.generators[chain[k]].value);
    auto m = MinimalMultipleInSpan(spec.abelian(), Values(spec, prev), s);
    if (!m) return std::nullopt;
    if (*m > 1) {
      lifts.push_back({chain[k], spec.InverseLabel(chain[k]), static_cast<int>(*m - 1)});
    }
    prev.push_back(chain[k]);
  }
  return lifts;
}

DoubleRay LiftRay(const DoubleRay& ray, const ColumnLift& lift) {
  return DoubleRay{ray.base, LiftPeriodic(ray.right, lift, Direction::kRight),
                   LiftPeriodic(ray.left, lift, Direction::kLeft)};
}

std::optional<CircleCertificate> RankOneCircle(const GroupSpec& spec) {
  const std::vector<std::size_t> reps = Representatives(spec);
  const int n = static_cast<int>(reps.size());
  for (int last = 0; last < n; ++last) {
    std::vector<std::size_t> others;
    for (int i = 0; i < n; ++i) {
      if (i != last) others.push_back(reps[i]);
    }
    // Subsets of the remaining generators, largest first.
    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask < (1u << others.size()); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
      return std::popcount(a) > std::popcount(b);
    });
    const std::size_t s_last = reps[last];
    const auto& last_value = std::get<AbelianVec>(spec.generators[s_last].value);
    for (unsigned mask : masks) {
      std::vector<std::size_t> chain;
      for (std::size_t i = 0; i < others.size(); ++i) {
        if (mask & (1u << i)) chain.push_back(others[i]);
      }
      if (FreeRank(spec.abelian(), Values(spec, chain)) != 1) continue;
      if (AbelianSpan(spec.abelian(), Values(spec, chain)).Contains(last_value)) continue;
      std::vector<std::size_t> all = chain;
      all.push_back(s_last);
      if (!GeneratesAll(spec, all)) continue;
      auto first = std::find_if(chain.begin(), chain.end(), [&](std::size_t l) {
        return !ElementOrder(spec, spec.generators[l].value).has_value();
      });
      std::rotate(chain.begin(), first, first + 1);
      const auto lifts = ColumnChain(spec, chain, 1);
      if (!lifts) continue;
      DoubleRay base_ray{Identity(spec), Enumerator::Periodic({}, {chain[0]}),
                         Enumerator::Periodic({}, {spec.InverseLabel(chain[0])})};
      for (const auto& lift : *lifts) base_ray = LiftRay(base_ray, lift);
      const auto m = MinimalMultipleInSpan(spec.abelian(), Values(spec, chain), last_value);
      if (!m) continue;
      const int u = static_cast<int>(*m - 1);
      // Candidate (height of the first ray's columns, translation exponent
      // of the second ray).
      for (auto [height, shift] : {std::pair{u - 1, u}, std::pair{u, u + 1}}) {
        DoubleRay p1 = base_ray;
        if (height > 0) p1 = LiftRay(base_ray, {s_last, spec.InverseLabel(s_last), height});
        DoubleRay p2 = base_ray;
        p2.base = Power(spec, spec.generators[s_last].value, shift);
        CircleCertificate cert = Certificate(spec, Construction::kTheoremZ, {p1, p2});
        if (VerifyCertificate(cert, kSelfCheckRadius).consistent()) return cert;
      }
    }
  }
  return std::nullopt;
}

CircleCertificate RankTwoRay(const GroupSpec& spec) {
  const std::vector<std::size_t> reps = Representatives(spec);
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      if (FreeRank(spec.abelian(), Values(spec, {reps[a], reps[b]})) != 2) continue;
      std::vector<std::size_t> chain{reps[a], reps[b]};
      for (std::size_t r : reps) {
        if (r != reps[a] && r != reps[b]) chain.push_back(r);
      }
      const auto lifts = ColumnChain(spec, chain, 2);
      if (!lifts) continue;
      SpiralProgram program{false, chain[0], spec.InverseLabel(chain[0]), chain[1],
                            spec.InverseLabel(chain[1]), *lifts};
      DoubleRay ray;
      ray.base = Identity(spec);
      ray.right.spiral = program;
      program.left_lane = true;
      ray.left.spiral = program;
      return SelfChecked(Certificate(spec, Construction::kTheoremZ, {ray}, true));
    }
  }
  throw Error(ErrorCode::kUnsupported,
              "no generator pair spans a finite-index sublattice");
}

}  // namespace

CircleCertificate AbelianCircle(const GroupSpec& spec) {
  const AbelianSpec& a = spec.abelian();
  if (a.rank < 1) {
    throw Error(ErrorCode::kInvalidArgument, "finite abelian group; use a Hamilton cycle");
  }
  if (a.rank >= 3) {
    throw Error(ErrorCode::kUnsupported, "free rank >= 3 is not reduced to a spiral");
  }
  if (a.rank == 2) return RankTwoRay(spec);
  if (Representatives(spec).size() == 1) {
    throw Error(ErrorCode::kNoHamiltonCircle,
                "the Cayley graph is a single double ray");
  }
  if (auto cert = RankOneCircle(spec)) return *cert;
  throw Error(ErrorCode::kUnsupported, "no generator ordering yields a verified circle");
}

// ---------------------------------------------------------------------------

namespace {

std::size_t FactorLabel(const GroupSpec& spec, Side side, int g) {
  return spec.GeneratorIndex(AmalgamFromFactor(spec.amalgam(), side, g));
}

void RequireIndexTwo(const AmalgamSpec& am) {
  if (am.index(Side::kLeft) != 2 || am.index(Side::kRight) != 2) {
    throw Error(ErrorCode::kWrongIndex,
                "amalgamated subgroup must have index 2 in both factors (got " +
                    std::to_string(am.index(Side::kLeft)) + ", " +
                    std::to_string(am.index(Side::kRight)) + ")");
  }
}

std::vector<CylinderLink> UniformLinks(int m, std::vector<std::size_t> steps) {
  std::vector<CylinderLink> out;
  for (std::size_t s : steps) {
    out.push_back(CylinderLink{{s}, std::vector<std::optional<std::size_t>>(m, s)});
  }
  return out;
}

// Subgroup `members` of `t` as a table of its own; local index i stands for
// members[i].
FiniteGroupTable SubTable(const FiniteGroupTable& t, const std::vector<int>& members,
                          const std::vector<int>& gens) {
  std::unordered_map<int, int> local;
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> rows(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int b : members) rows[i].push_back(local.at(t.mul(members[i], b)));
  }
  std::vector<int> local_gens;
  for (int g : gens) local_gens.push_back(local.at(g));
  FiniteGroupTable sub = FiniteGroupTable::FromRows(rows, {});
  sub.generators = SymmetrizeGenerators(sub, local_gens);
  return sub;
}

// Template level for the subgroup `members` of the left factor: a Hamilton
// cycle on `gens`, or a single edge when the subgroup has order 2.
void SubgroupTemplate(const GroupSpec& spec, const std::vector<int>& members,
                      const std::vector<int>& gens, CylinderStructure& c) {
  const AmalgamSpec& am = spec.amalgam();
  if (members.size() == 2) {
    const int t = members[0] == am.left.identity ? members[1] : members[0];
    c.level = {AmalgamFromFactor(am, Side::kLeft, am.left.identity),
               AmalgamFromFactor(am, Side::kLeft, t)};
    const std::size_t l = FactorLabel(spec, Side::kLeft, t);
    c.cycle = {l, l};
    return;
  }
  const FiniteGroupTable sub = SubTable(am.left, members, gens);
  const HamiltonCycle hc = FiniteHamiltonCycle(sub);
  c.level.clear();
  c.cycle.clear();
  for (int v : hc.Vertices(sub)) c.level.push_back(AmalgamFromFactor(am, Side::kLeft, members[v]));
  for (int s : hc.word) c.cycle.push_back(FactorLabel(spec, Side::kLeft, members[s]));
}

}  // namespace

CylinderStructure ZigZagCylinder(const GroupSpec& spec, const HamiltonCycle& c0) {
  const AmalgamSpec& am = spec.amalgam();
  RequireIndexTwo(am);
  for (int g : am.left.generators) {
    if (am.h_left.contains(g)) {
      throw Error(ErrorCode::kGeneratorInsideSubgroup,
                  "generator " + FormatElement(spec, AmalgamFromFactor(am, Side::kLeft, g)) +
                      " lies in the amalgamated subgroup");
    }
  }
  const auto t_out = std::find_if(am.right.generators.begin(), am.right.generators.end(),
                                  [&](int g) { return !am.h_right.contains(g); });
  if (t_out == am.right.generators.end()) {
    throw Error(ErrorCode::kInvalidArgument, "right factor has no generator outside the subgroup");
  }
  if (!IsHamiltonCycle(am.left, c0)) {
    throw Error(ErrorCode::kMalformedCylinder, "c0 is not a Hamilton cycle of the left factor");
  }
  std::vector<int> verts = c0.Vertices(am.left);
  std::vector<int> word = c0.word;
  // Start the template inside H so that even positions form X-.
  const auto start = std::find_if(verts.begin(), verts.end(),
                                  [&](int v) { return am.h_left.contains(v); });
  const auto shift = start - verts.begin();
  std::rotate(verts.begin(), start, verts.end());
  std::rotate(word.begin(), word.begin() + shift, word.end());

  CylinderStructure c;
  c.variant = CylinderVariant::kAlternating;
  c.origin = Identity(spec);
  for (int v : verts) c.level.push_back(AmalgamFromFactor(am, Side::kLeft, v));
  for (int s : word) c.cycle.push_back(FactorLabel(spec, Side::kLeft, s));
  const std::size_t s = FactorLabel(spec, Side::kLeft, am.left.generators.at(0));
  const std::size_t t = FactorLabel(spec, Side::kRight, *t_out);
  const std::size_t t_inv = spec.InverseLabel(t);
  const int m = static_cast<int>(verts.size());
  CylinderLink right{{s, t}, std::vector<std::optional<std::size_t>>(m)};
  CylinderLink left{{t, s}, std::vector<std::optional<std::size_t>>(m)};
  for (int j = 0; j < m; ++j) {
    if (j % 2 == 1) {
      right.matching[j] = t;
    } else {
      left.matching[j] = t_inv;
    }
  }
  c.right.period = {right};
  c.left.period = {left};
  c.locality_bound = 2;
  return c;
}

CircleCertificate ZigZagCircle(const GroupSpec& spec, const HamiltonCycle& c0) {
  auto [r1, r2] = AlternatingCylinderRays(spec, ZigZagCylinder(spec, c0));
  return SelfChecked(Certificate(spec, Construction::kZigZag, {r1, r2}));
}

DoubleRay ZigZagDoubleRay(const GroupSpec& spec, const HamiltonCycle& c0) {
  DoubleRay ray = CylinderDoubleRay(spec, ZigZagCylinder(spec, c0));
  SelfChecked(Certificate(spec, Construction::kZigZag, {ray}, true));
  return ray;
}

CircleCertificate DedekindAmalgamCircle(const GroupSpec& spec) {
  const AmalgamSpec& am = spec.amalgam();
  RequireIndexTwo(am);
  if (!IsDedekind(am.left)) throw Error(ErrorCode::kNotDedekind, "left factor is not Dedekind");
  if (am.h_left.size() < 2) throw Error(ErrorCode::kInvalidArgument, "trivial amalgamated subgroup");

  std::vector<int> inside;
  int s_out = -1;
  for (int g : am.left.generators) {
    if (am.h_left.contains(g)) {
      inside.push_back(g);
    } else if (s_out < 0) {
      s_out = g;
    }
  }
  if (inside.empty()) {
    CircleCertificate cert = ZigZagCircle(spec, FiniteHamiltonCycle(am.left));
    return cert;
  }
  int t_out = -1;
  for (int g : am.right.generators) {
    if (!am.h_right.contains(g)) {
      t_out = g;
      break;
    }
  }
  if (s_out < 0 || t_out < 0) {
    throw Error(ErrorCode::kInvalidArgument, "a factor has no generator outside the subgroup");
  }
  const SubgroupHandle l = SubgroupClosure(am.left, inside);

  if (l == am.h_left) {
    // Cosets of H follow the double ray ..., t^-1 s^-1, t^-1, 1, s, st, ...
    CylinderStructure c;
    c.origin = Identity(spec);
    SubgroupTemplate(spec, l.members, inside, c);
    const int m = static_cast<int>(c.level.size());
    const std::size_t s = FactorLabel(spec, Side::kLeft, s_out);
    const std::size_t t = FactorLabel(spec, Side::kRight, t_out);
    c.right.period = UniformLinks(m, {s, t});
    c.left.period = UniformLinks(m, {spec.InverseLabel(t), spec.InverseLabel(s)});
    c.locality_bound = 2;
    auto [r1, r2] = CylinderRays(spec, c);
    return SelfChecked(Certificate(spec, Construction::kDedekindAmalgam, {r1, r2}));
  }

  // L is a proper subgroup of H: solve the quotient by L and lift.
  std::vector<int> l_right;
  for (int x : l.members) l_right.push_back(am.iso[x]);
  const SubgroupHandle lr = SubgroupClosure(am.right, l_right);
  if (!IsNormal(am.right, lr)) {
    throw Error(ErrorCode::kNotNormal, "image of L is not normal in the right factor");
  }
  const QuotientResult ql = QuotientByNormal(am.left, l);
  const QuotientResult qr = QuotientByNormal(am.right, lr);
  AmalgamSpec qam;
  qam.left = ql.table;
  qam.right = qr.table;
  std::set<int> hl, hr;
  qam.iso.assign(ql.table.order, -1);
  for (int h : am.h_left.members) {
    hl.insert(ql.projection[h]);
    hr.insert(qr.projection[am.iso[h]]);
    qam.iso[ql.projection[h]] = qr.projection[am.iso[h]];
  }
  qam.h_left.members.assign(hl.begin(), hl.end());
  qam.h_right.members.assign(hr.begin(), hr.end());
  const GroupSpec qspec = MakeAmalgamSpec(qam);
  const DoubleRay route = ZigZagDoubleRay(qspec, FiniteHamiltonCycle(qspec.amalgam().left));

  // Quotient label -> first original label with the same image.
  std::map<std::string, std::size_t> lift;
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    auto factor = AmalgamFactorElement(am, std::get<AmalgamElement>(spec.generators[i].value));
    const auto& proj = factor->first == Side::kLeft ? ql.projection : qr.projection;
    lift.emplace(FormatElement(qspec, AmalgamFromFactor(qspec.amalgam(), factor->first,
                                                        proj[factor->second])),
                 i);
  }
  auto lifted = [&](const std::vector<std::size_t>& labels) {
    std::vector<std::size_t> out;
    for (std::size_t q : labels) {
      out.push_back(lift.at(FormatElement(qspec, qspec.generators[q].value)));
    }
    return out;
  };

  CylinderStructure c;
  c.origin = Identity(spec);
  SubgroupTemplate(spec, l.members, inside, c);
  const int m = static_cast<int>(c.level.size());
  c.right.prefix = UniformLinks(m, lifted(route.right.prefix));
  c.right.period = UniformLinks(m, lifted(route.right.period));
  c.left.prefix = UniformLinks(m, lifted(route.left.prefix));
  c.left.period = UniformLinks(m, lifted(route.left.period));
  c.locality_bound = 2;
  auto [r1, r2] = CylinderRays(spec, c);
  return SelfChecked(Certificate(spec, Construction::kDedekindAmalgam, {r1, r2}));
}

CircleCertificate SemidirectCircle(const GroupSpec& spec) {
  const SemidirectSpec& sd = spec.semidirect();
  if (sd.base.order < 3) {
    throw Error(ErrorCode::kTooSmall, "base group needs at least 3 elements");
  }
  const HamiltonCycle hc = FiniteHamiltonCycle(sd.base);
  const std::vector<int> verts = hc.Vertices(sd.base);
  auto x_label = [&](int x) { return spec.GeneratorIndex(SemidirectPair{x, 0}); };
  auto y_label = [&](std::int64_t y) {
    return spec.GeneratorIndex(SemidirectPair{sd.base.identity, y});
  };
  std::set<std::int64_t> ys;
  for (std::int64_t y : sd.z_generators) {
    if (y != 0) ys.insert(y < 0 ? -y : y);
  }
  if (ys.empty()) throw Error(ErrorCode::kInvalidArgument, "no generator of the infinite part");

  if (ys.size() == 1) {
    const std::int64_t y = *ys.begin();
    CylinderStructure c;
    c.origin = Identity(spec);
    for (int v : verts) c.level.push_back(SemidirectPair{v, 0});
    for (int x : hc.word) c.cycle.push_back(x_label(x));
    const int m = static_cast<int>(verts.size());
    c.right.period = UniformLinks(m, {y_label(y)});
    c.left.period = UniformLinks(m, {y_label(-y)});
    c.locality_bound = static_cast<int>(y) + 1;
    auto [r1, r2] = CylinderRays(spec, c);
    return SelfChecked(Certificate(spec, Construction::kSemidirectI, {r1, r2}));
  }

  AbelianSpec z;
  z.rank = 1;
  for (std::int64_t y : ys) {
    z.generators.push_back({y});
    z.generators.push_back({-y});
  }
  const GroupSpec zspec = MakeAbelianSpec(z);
  const CircleCertificate zc = AbelianCircle(zspec);
  // A Hamilton path through one coset of the base, from its entry vertex.
  std::vector<std::size_t> a;
  for (std::size_t i = 0; i + 1 < hc.word.size(); ++i) a.push_back(x_label(hc.word[i]));
  auto step = [&](std::size_t l) {
    return y_label(std::get<AbelianVec>(zspec.generators[l].value)[0]);
  };
  auto blocks = [&](const std::vector<std::size_t>& labels, bool rightward) {
    std::vector<std::size_t> out;
    for (std::size_t l : labels) {
      if (!rightward) out.push_back(step(l));
      out.insert(out.end(), a.begin(), a.end());
      if (rightward) out.push_back(step(l));
    }
    return out;
  };
  std::vector<DoubleRay> rays;
  for (const DoubleRay& r : zc.rays) {
    DoubleRay p;
    p.base = SemidirectPair{sd.base.identity, std::get<AbelianVec>(r.base)[0]};
    p.right = Enumerator::Periodic(blocks(r.right.prefix, true), blocks(r.right.period, true));
    p.left = Enumerator::Periodic(blocks(r.left.prefix, false), blocks(r.left.period, false));
    rays.push_back(std::move(p));
  }
  return SelfChecked(Certificate(spec, Construction::kSemidirectII, std::move(rays)));
}

}  // namespace hamcircle
