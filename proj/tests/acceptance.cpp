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
// Acceptance run: one PASS/FAIL line per criterion with wall-clock limits.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "hamcircle/catalog.hpp"
#include "hamcircle/counterexample.hpp"
#include "hamcircle/error.hpp"
#include "hamcircle/hamilton.hpp"
#include "hamcircle/spec_io.hpp"
#include "hamcircle/verify.hpp"
#include "mutation.hpp"
#include "oracles.hpp"

namespace {

using namespace hamcircle;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
  std::string info;

  void Require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

bool Consistent(const CircleCertificate& cert, int r) {
  return VerifyCertificate(cert, r).consistent();
}

template <class F>
std::optional<ErrorCode> CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

Outcome TheoremZ(std::map<std::string, double>& timings) {
  Outcome o;
  auto timed = [&](const std::string& name, const std::function<bool()>& f) {
    const auto t0 = Clock::now();
    const bool ok = f();
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    timings[name] = s;
    o.Require(ok, name + " failed");
    o.Require(s < 2.0, name + " over 2 s");
  };
  timed("Z{1,2}@100", [] { return Consistent(AbelianCircle(catalog::Integers({1, 2})), 100); });
  timed("ZxZ2@30", [] {
    return Consistent(AbelianCircle(catalog::Abelian(1, {2}, {{1, 0}, {0, 1}})), 30);
  });
  timed("Z{1}", [] {
    return CodeOf([] { AbelianCircle(catalog::Integers({1})); }) == ErrorCode::kNoHamiltonCircle;
  });
  return o;
}

Outcome ZigZag() {
  Outcome o;
  const GroupSpec g = catalog::ZigZagAmalgam();
  const HamiltonCycle c0 = FiniteHamiltonCycle(g.amalgam().left);
  const CircleCertificate circle = ZigZagCircle(g, c0);
  o.Require(circle.construction == Construction::kZigZag, "wrong construction");
  o.Require(Consistent(circle, 30), "circle refuted");
  const CircleCertificate ray{g, Construction::kZigZag, {ZigZagDoubleRay(g, c0)}, true};
  o.Require(Consistent(ray, 30), "double ray refuted");
  const GroupSpec bad = SpecFromJson(
      ReadJsonFile(std::string(HAMCIRCLE_TEST_DATA) + "/zigzag_generator_in_subgroup.json"));
  o.Require(CodeOf([&] { ZigZagCircle(bad, FiniteHamiltonCycle(bad.amalgam().left)); }) ==
                ErrorCode::kGeneratorInsideSubgroup,
            "guard did not fire");
  return o;
}

Outcome Dedekind() {
  Outcome o;
  const GroupSpec g = catalog::DedekindAmalgam();
  const AmalgamSpec& a = g.amalgam();
  bool meets = false;
  for (int s : a.left.generators) meets |= a.h_left.contains(s);
  o.Require(meets, "left generators avoid H");
  const CircleCertificate cert = DedekindAmalgamCircle(g);
  o.Require(cert.construction == Construction::kDedekindAmalgam, "wrong construction");
  o.Require(Consistent(cert, 30), "refuted");
  return o;
}

Outcome Semidirect() {
  Outcome o;
  const CircleCertificate one = SemidirectCircle(catalog::InversionSemidirect({1}));
  const CircleCertificate two = SemidirectCircle(catalog::InversionSemidirect({1, 2}));
  o.Require(one.construction == Construction::kSemidirectI, "Y={1} not case I");
  o.Require(two.construction == Construction::kSemidirectII, "Y={1,2} not case II");
  o.Require(Consistent(one, 50), "case I refuted");
  o.Require(Consistent(two, 50), "case II refuted");
  return o;
}

Outcome Counterexample() {
  Outcome o;
  const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  const CayleyBall ball3 = BuildBall(BuildCounterexampleSpec(), 3);
  const ObstructionResult obs = ObstructionSearch(ball3, 6, jobs);
  o.Require(obs.status == ObstructionStatus::kUnsat, "obstruction search found a trace");
  const ToughnessReport t = ToughnessCheck(BuildBall(BuildCounterexampleSpec(), 5), 4, jobs);
  o.Require(t.worst <= 0, "toughness excess " + std::to_string(t.worst));
  const ObstructionResult control =
      ObstructionSearch(BuildBall(catalog::Integers({1, 2}), 6), 6, jobs);
  o.Require(control.status == ObstructionStatus::kSatFound, "control returned Unsat");
  return o;
}

// Invariant factor lists d1 | d2 | ... with product n.
void InvariantFactors(int n, int min_factor, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (n == 1) {
    out.push_back(cur);
    return;
  }
  for (int d = min_factor; d <= n; ++d) {
    if (n % d != 0 || (!cur.empty() && d % cur.back() != 0)) continue;
    cur.push_back(d);
    InvariantFactors(n / d, d, cur, out);
    cur.pop_back();
  }
}

bool ClosesOverAll(const FiniteGroupTable& t, const HamiltonCycle& c) {
  if (static_cast<int>(c.word.size()) != t.order) return false;
  std::set<int> seen;
  int v = c.base;
  for (int s : c.word) {
    if (std::find(t.generators.begin(), t.generators.end(), s) == t.generators.end()) return false;
    if (!seen.insert(v).second) return false;
    v = t.mul(v, s);
  }
  return v == c.base;
}

Outcome FiniteOracle() {
  Outcome o;
  std::vector<std::vector<int>> groups;
  for (int n = 1; n <= 16; ++n) {
    std::vector<int> cur;
    InvariantFactors(n, 2, cur, groups);
  }
  std::mt19937 rng(16);
  for (const auto& orders : groups) {
    FiniteGroupTable t = CyclicProductTable(orders.empty() ? std::vector<int>{1} : orders);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> gens;
      if (t.order > 1) {
        std::uniform_int_distribution<int> pick(1, t.order - 1);
        while (SubgroupClosure(t, gens.empty() ? std::vector<int>{t.identity} : gens).size() <
               t.order) {
          gens.push_back(pick(rng));
        }
      }
      t.generators = SymmetrizeGenerators(t, gens);
      const bool expected = oracle::HasHamiltonCycle(t);
      bool found = false;
      try {
        found = ClosesOverAll(t, FiniteHamiltonCycle(t));
      } catch (const Error&) {
      }
      std::string name;
      for (int d : orders) name += "Z" + std::to_string(d);
      o.Require(found == expected, "disagreement on " + name);
    }
  }
  o.info = std::to_string(groups.size()) + " groups, " + std::to_string(groups.size() * 50) +
           " generating sets";
  const FiniteGroupTable q8 = catalog::Quaternion();
  o.Require(ClosesOverAll(q8, FiniteHamiltonCycle(q8)), "no cycle on Q8");
  return o;
}

std::string OracleKey(int which, const oracle::Word& w) {
  if (which == 0) {
    const auto f = oracle::ReduceCounterexample(w);
    std::string s = std::to_string(f.a) + ":";
    for (auto [c, e] : f.syllables) s += std::string(1, c) + std::to_string(e);
    return s;
  }
  const auto f = oracle::ReduceZigZag(w);
  std::string s = std::to_string(f.h) + ":";
  s += f.word;
  return s;
}

Outcome NormalForms() {
  Outcome o;
  for (int which : {0, 1}) {
    const GroupSpec g = which == 0 ? catalog::CounterexampleAmalgam() : catalog::ZigZagAmalgam();
    std::mt19937 rng(7 + which);
    for (int i = 0; i < 1000; ++i) {
      auto w = oracle::RandomWord(g, rng, 16);
      const auto inv = oracle::InverseWord(g, w);
      w.insert(w.end(), inv.begin(), inv.end());
      o.Require(BrittonNormalForm(g, w) == AmalgamElement{}, "w w^-1 not trivial");
    }
    std::map<std::string, std::string> nf_to_oracle, oracle_to_nf;
    std::vector<std::set<std::string>> within(6);
    std::vector<oracle::Word> frontier{{}};
    for (int len = 0; len <= 5; ++len) {
      std::vector<oracle::Word> next;
      for (const auto& w : frontier) {
        const std::string nf = FormatElement(g, oracle::Evaluate(g, w));
        const std::string key = OracleKey(which, w);
        o.Require(nf_to_oracle.emplace(nf, key).first->second == key, "normal form merges");
        o.Require(oracle_to_nf.emplace(key, nf).first->second == nf, "normal form splits");
        for (int r = len; r <= 5; ++r) within[r].insert(key);
        if (len == 5) continue;
        for (const auto& gen : g.generators) {
          auto x = w;
          x.push_back(gen.name);
          next.push_back(std::move(x));
        }
      }
      frontier = std::move(next);
    }
    for (int r = 1; r <= 5; ++r) {
      o.Require(static_cast<std::size_t>(BuildBall(g, r).size()) == within[r].size(),
                "ball size differs at r=" + std::to_string(r));
    }
  }
  return o;
}

Outcome Mutations() {
  Outcome o;
  std::mt19937 rng(8);
  int index = 0;
  std::size_t equivalent = 0;
  for (const CircleCertificate& cert : testing_support::ReferenceCertificates()) {
    for (int i = 0; i < 100; ++i) {
      const CircleCertificate bad = testing_support::Corrupt(cert, rng, &equivalent);
      o.Require(!Consistent(bad, 20),
                "mutation " + std::to_string(i) + " of certificate " + std::to_string(index) +
                    " survived");
    }
    ++index;
  }
  o.info = std::to_string(equivalent) + " equivalent mutants redrawn";
  return o;
}

Outcome HandCertificate() {
  Outcome o;
  const GroupSpec g = catalog::InfiniteDihedralLadder();
  const std::size_t a = *g.FindLabel("s0"), up = *g.FindLabel("s1"), down = *g.FindLabel("s2");
  auto rail = [&](int h) {
    return DoubleRay{SemidirectPair{h, 0}, Enumerator::Periodic({}, {up}),
                     Enumerator::Periodic({}, {down})};
  };
  const int flip = std::get<SemidirectPair>(g.generators[a].value).h;
  const CircleCertificate cert{g, Construction::kManual, {rail(0), rail(flip)}, false};
  o.Require(Consistent(cert, 20), "rails refuted");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  std::map<std::string, double> z_timings;
  const std::vector<Criterion> criteria = {
      {1, "abelian free rank 1 circles", 6.0, [&] { return TheoremZ(z_timings); }},
      {2, "zigzag amalgam", 5.0, ZigZag},
      {3, "dedekind amalgam", 10.0, Dedekind},
      {4, "semidirect products", 5.0, Semidirect},
      {5, "counterexample obstruction and toughness", 120.0, Counterexample},
      {6, "finite cycles against exhaustive search", 60.0, FiniteOracle},
      {7, "amalgam normal forms", 10.0, NormalForms},
      {8, "mutation soundness", 30.0, Mutations},
      {9, "infinite dihedral hand certificate", 1.0, HandCertificate},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (o.ok && s >= c.limit) {
      o.ok = false;
      o.note = "over time limit";
    }
    failures += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ") "
              << s << " s / " << c.limit << " s";
    if (!o.ok) std::cout << ": " << o.note;
    if (!o.info.empty()) std::cout << " [" << o.info << "]";
    std::cout << "\n";
    if (c.id == 1) {
      for (const auto& [k, v] : z_timings) std::cout << "    " << k << " " << v << " s\n";
    }
  }
  return failures == 0 ? 0 : 1;
}
