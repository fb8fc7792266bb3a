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

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>

#include "hamcircle/hamilton.hpp"

namespace hamcircle {

namespace {

struct LinkTable {
  std::size_t prefix = 0;
  std::size_t period = 0;
  std::vector<std::vector<int>> target;  // per phase, per position; -1 if unmatched
  std::vector<std::vector<std::size_t>> label;

  std::size_t phase(std::size_t i) const {
    return i < prefix ? i : prefix + (i - prefix) % period;
  }
};

struct Prepared {
  int m = 0;
  LinkTable right;
  LinkTable left;
};

GroupElement WordValue(const GroupSpec& spec, const std::vector<std::size_t>& word) {
  GroupElement g = Identity(spec);
  for (std::size_t s : word) {
    if (s >= spec.generators.size()) {
      throw Error(ErrorCode::kMalformedCylinder, "label out of range");
    }
    g = Multiply(spec, g, spec.generators[s].value);
  }
  return g;
}

LinkTable BuildLinks(const GroupSpec& spec, const CylinderStructure& c,
                     const Periodic<CylinderLink>& links, bool forward,
                     const std::unordered_map<std::string, int>& position) {
  if (links.period.empty()) {
    throw Error(ErrorCode::kMalformedCylinder, "cylinder links need a nonempty period");
  }
  const bool alternating = c.variant == CylinderVariant::kAlternating;
  const int m = static_cast<int>(c.level.size());
  LinkTable out;
  out.prefix = links.prefix.size();
  out.period = links.period.size();
  for (std::size_t ph = 0; ph < links.phases(); ++ph) {
    const CylinderLink& link = links.at(ph);
    if (static_cast<int>(link.matching.size()) != m) {
      throw Error(ErrorCode::kMalformedCylinder, "matching size differs from level size");
    }
    const GroupElement winv = Inverse(spec, WordValue(spec, link.word));
    std::vector<int> target(m, -1);
    std::vector<std::size_t> label(m, 0);
    std::set<int> hit;
    for (int j = 0; j < m; ++j) {
      // Forward edges leave X+ (odd), backward edges leave X- (even).
      const bool expected = !alternating || ((j % 2 == 1) == forward);
      if (link.matching[j].has_value() != expected) {
        throw Error(alternating ? ErrorCode::kAlternationViolated
                                : ErrorCode::kMalformedCylinder,
                    "matching undefined or misplaced at position " + std::to_string(j));
      }
      if (!expected) continue;
      const std::size_t f = *link.matching[j];
      if (f >= spec.generators.size()) {
        throw Error(ErrorCode::kMalformedCylinder, "matching label out of range");
      }
      const GroupElement t =
          Multiply(spec, winv, Multiply(spec, c.level[j], spec.generators[f].value));
      auto it = position.find(FormatElement(spec, t));
      if (it == position.end()) {
        throw Error(ErrorCode::kMalformedCylinder,
                    "matching edge leaves the neighbouring level");
      }
      if (alternating && (it->second % 2 == 1) == forward) {
        throw Error(ErrorCode::kAlternationViolated, "matching lands on the wrong half");
      }
      if (!hit.insert(it->second).second) {
        throw Error(ErrorCode::kMalformedCylinder, "matching is not injective");
      }
      target[j] = it->second;
      label[j] = f;
    }
    out.target.push_back(std::move(target));
    out.label.push_back(std::move(label));
  }
  return out;
}

Prepared Prepare(const GroupSpec& spec, const CylinderStructure& c) {
  Prepared p;
  p.m = static_cast<int>(c.level.size());
  if (p.m < 2) throw Error(ErrorCode::kMalformedCylinder, "level has fewer than 2 vertices");
  if (c.cycle.size() != c.level.size()) {
    throw Error(ErrorCode::kMalformedCylinder, "cycle length differs from level size");
  }
  if (c.variant == CylinderVariant::kAlternating) {
    if (p.m < 4) throw Error(ErrorCode::kMalformedCylinder, "alternating levels need 4 vertices");
    if (p.m % 2 != 0) throw Error(ErrorCode::kAlternationViolated, "odd level size");
  }
  std::unordered_map<std::string, int> position;
  for (int j = 0; j < p.m; ++j) {
    if (!position.emplace(FormatElement(spec, c.level[j]), j).second) {
      throw Error(ErrorCode::kMalformedCylinder, "template repeats a vertex");
    }
  }
  for (int j = 0; j < p.m; ++j) {
    if (c.cycle[j] >= spec.generators.size()) {
      throw Error(ErrorCode::kMalformedCylinder, "cycle label out of range");
    }
    const GroupElement next = Multiply(spec, c.level[j], spec.generators[c.cycle[j]].value);
    if (FormatElement(spec, next) != FormatElement(spec, c.level[(j + 1) % p.m])) {
      throw Error(ErrorCode::kMalformedCylinder, "template cycle does not close up");
    }
  }
  p.right = BuildLinks(spec, c, c.right, true, position);
  p.left = BuildLinks(spec, c, c.left, false, position);

  // Spot check that nearby levels are pairwise disjoint.
  const int window = std::max(1, c.locality_bound) + 2;
  std::set<std::string> seen;
  auto add_level = [&](const GroupElement& origin) {
    for (const auto& t : c.level) {
      if (!seen.insert(FormatElement(spec, Multiply(spec, origin, t))).second) {
        throw Error(ErrorCode::kMalformedCylinder, "levels overlap");
      }
    }
  };
  GroupElement g = c.origin;
  add_level(g);
  for (int i = 0; i < window; ++i) {
    g = Multiply(spec, g, WordValue(spec, c.right.at(i).word));
    add_level(g);
  }
  g = c.origin;
  for (int k = 0; k < window; ++k) {
    g = Multiply(spec, g, WordValue(spec, c.left.at(k).word));
    add_level(g);
  }
  return p;
}

int Mod(int a, int m) { return ((a % m) + m) % m; }

// Walks a ray through consecutive levels. On entering a level at p with the
// partner at q, the ray covers p, p+1, ..., q-1 (all m vertices when
// `whole`) and leaves through the matching at its last vertex; the partner's
// next entry comes from p-1. The state (phase, p, q) determines the future,
// so the first repeated state closes the period.
Enumerator Trace(const CylinderStructure& c, const Prepared& prep, const LinkTable& links,
                 std::size_t first_link, int p, int q, bool whole,
                 std::vector<std::size_t> out) {
  const int m = prep.m;
  std::map<std::tuple<std::size_t, int, int>, std::size_t> seen;
  for (std::size_t i = first_link;; ++i) {
    const std::size_t ph = links.phase(i);
    auto key = std::make_tuple(ph, p, whole ? 0 : q);
    if (i >= links.prefix) {
      auto [it, fresh] = seen.emplace(key, out.size());
      if (!fresh) {
        std::vector<std::size_t> prefix(out.begin(), out.begin() + it->second);
        std::vector<std::size_t> period(out.begin() + it->second, out.end());
        return Enumerator::Periodic(std::move(prefix), std::move(period));
      }
    }
    int seg = whole ? m : Mod(q - p, m);
    if (seg == 0) throw Error(ErrorCode::kMalformedCylinder, "rays collide on a level");
    for (int s = 0; s + 1 < seg; ++s) out.push_back(c.cycle[Mod(p + s, m)]);
    const int exit = Mod(p + seg - 1, m);
    const int partner_exit = Mod(p - 1, m);
    if (links.target[ph][exit] < 0 || (!whole && links.target[ph][partner_exit] < 0)) {
      throw Error(ErrorCode::kMalformedCylinder, "ray leaves an unmatched vertex");
    }
    out.push_back(links.label[ph][exit]);
    const int np = links.target[ph][exit];
    q = whole ? 0 : links.target[ph][partner_exit];
    p = np;
  }
}

DoubleRay BuildRay(const GroupSpec& spec, const CylinderStructure& c, const Prepared& prep,
                   int p, int q, bool whole) {
  DoubleRay ray;
  ray.base = Multiply(spec, c.origin, c.level[p]);
  ray.right = Trace(c, prep, prep.right, 0, p, q, whole, {});
  // Leftwards the level-0 vertices belong to the rightward halves, so the ray
  // drops straight to level -1.
  const LinkTable& l = prep.left;
  if (l.target[0][p] < 0 || (!whole && l.target[0][q] < 0)) {
    throw Error(ErrorCode::kMalformedCylinder, "base vertex has no backward matching");
  }
  ray.left = Trace(c, prep, l, 1, l.target[0][p], whole ? 0 : l.target[0][q], whole,
                   {l.label[0][p]});
  return ray;
}

}  // namespace

std::pair<DoubleRay, DoubleRay> CylinderRays(const GroupSpec& spec,
                                             const CylinderStructure& c) {
  if (c.variant == CylinderVariant::kAlternating) return AlternatingCylinderRays(spec, c);
  const Prepared prep = Prepare(spec, c);
  // Smallest pair of positions that is non-adjacent along the cycle.
  const int q = prep.m >= 4 ? 2 : 1;
  return {BuildRay(spec, c, prep, 0, q, false), BuildRay(spec, c, prep, q, 0, false)};
}

std::pair<DoubleRay, DoubleRay> AlternatingCylinderRays(const GroupSpec& spec,
                                                        const CylinderStructure& c) {
  if (c.variant != CylinderVariant::kAlternating) {
    throw Error(ErrorCode::kAlternationViolated, "cylinder is not alternating");
  }
  const Prepared prep = Prepare(spec, c);
  return {BuildRay(spec, c, prep, 0, 2, false), BuildRay(spec, c, prep, 2, 0, false)};
}

DoubleRay CylinderDoubleRay(const GroupSpec& spec, const CylinderStructure& c) {
  const Prepared prep = Prepare(spec, c);
  return BuildRay(spec, c, prep, 0, 0, true);
}

}  // namespace hamcircle
