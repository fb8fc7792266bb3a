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
// Reference certificates and single-label corruptions shared by the
// verification tests and the acceptance run.

#ifndef HAMCIRCLE_TESTS_MUTATION_HPP_
#define HAMCIRCLE_TESTS_MUTATION_HPP_

#include <map>
#include <random>
#include <string>
#include <vector>

#include "hamcircle/catalog.hpp"
#include "hamcircle/hamilton.hpp"

namespace hamcircle::testing_support {

// Certificates of the Theorem Z, ZigZag, Dedekind and semidirect examples.
inline std::vector<CircleCertificate> ReferenceCertificates() {
  std::vector<CircleCertificate> out;
  out.push_back(AbelianCircle(catalog::Integers({1, 2})));
  out.push_back(AbelianCircle(catalog::Abelian(1, {2}, {{1, 0}, {0, 1}})));
  const GroupSpec zz = catalog::ZigZagAmalgam();
  const HamiltonCycle c0 = FiniteHamiltonCycle(zz.amalgam().left);
  out.push_back(ZigZagCircle(zz, c0));
  out.push_back(CircleCertificate{zz, Construction::kZigZag, {ZigZagDoubleRay(zz, c0)}, true});
  out.push_back(DedekindAmalgamCircle(catalog::DedekindAmalgam()));
  out.push_back(SemidirectCircle(catalog::InversionSemidirect({1})));
  out.push_back(SemidirectCircle(catalog::InversionSemidirect({1, 2})));
  return out;
}

// Replaces one label of one periodic stream by a different generator.
inline CircleCertificate Mutate(CircleCertificate cert, std::mt19937& rng) {
  const std::size_t labels = cert.spec.generators.size();
  while (true) {
    DoubleRay& ray = cert.rays[std::uniform_int_distribution<std::size_t>(0, cert.rays.size() - 1)(rng)];
    Enumerator& e = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? ray.right : ray.left;
    if (!e.periodic()) continue;
    const std::size_t n = e.prefix.size() + e.period.size();
    const std::size_t at = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    std::size_t& slot = at < e.prefix.size() ? e.prefix[at] : e.period[at - e.prefix.size()];
    const std::size_t shift = std::uniform_int_distribution<std::size_t>(1, labels - 1)(rng);
    slot = (slot + shift) % labels;
    return cert;
  }
}

// True when, for every direction of every ray and each of the first `blocks`
// periods, some prefix ending inside that period visits the same vertex set
// in `b` as in `a`. Sets agreeing at arbitrarily late cut-offs mean the same
// vertices are spanned, without repeats, with the same tails, so such a
// mutant is another valid certificate rather than a corruption. Example:
// swapping two labels that differ by a central element of a coset cycle only
// changes where later cycles are entered.
inline bool SameBlockTraces(const CircleCertificate& a, const CircleCertificate& b,
                            std::size_t blocks = 64) {
  for (std::size_t i = 0; i < a.rays.size(); ++i) {
    for (Direction d : {Direction::kRight, Direction::kLeft}) {
      const Enumerator& e = a.rays[i].stream(d);
      if (!e.periodic()) continue;
      const std::size_t p = e.period.size();
      const std::size_t n = e.prefix.size() + blocks * p;
      const auto va = a.rays[i].Walk(a.spec, d, n);
      const auto vb = b.rays[i].Walk(b.spec, d, n);
      std::map<std::string, int> balance;
      std::size_t unbalanced = 0;
      auto bump = [&](const std::string& key, int delta) {
        int& c = balance[key];
        unbalanced -= c != 0;
        c += delta;
        unbalanced += c != 0;
      };
      bool matched = false;
      for (std::size_t k = 0; k <= n; ++k) {
        bump(FormatElement(a.spec, va[k]), 1);
        bump(FormatElement(b.spec, vb[k]), -1);
        matched |= unbalanced == 0;
        const bool period_end = k >= e.prefix.size() && (k - e.prefix.size()) % p == p - 1;
        if (period_end) {
          if (!matched) return false;
          matched = false;
        }
      }
    }
  }
  return true;
}

// Draws mutants until one is not block-equivalent to `cert`; counts the
// equivalent ones in `skipped`.
inline CircleCertificate Corrupt(const CircleCertificate& cert, std::mt19937& rng,
                                 std::size_t* skipped = nullptr) {
  while (true) {
    CircleCertificate m = Mutate(cert, rng);
    if (!SameBlockTraces(cert, m)) return m;
    if (skipped != nullptr) ++*skipped;
  }
}

}  // namespace hamcircle::testing_support

#endif  // HAMCIRCLE_TESTS_MUTATION_HPP_
