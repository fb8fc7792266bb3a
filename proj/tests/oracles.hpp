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
// Independent reference implementations used by the tests. None of these
// call into the library's normal forms or constructions.

#ifndef HAMCIRCLE_TESTS_ORACLES_HPP_
#define HAMCIRCLE_TESTS_ORACLES_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hamcircle/group.hpp"

namespace oracle {

using Word = std::vector<std::string>;

// The two-factor amalgam (Z3 x Z2) *_{Z2} (Z3 x Z2) is Z2 x (Z3 * Z3), with
// a central. Canonical form: parity of a, then the freely reduced word in
// b and c with exponents in {1, 2}.
struct CounterexampleForm {
  int a = 0;
  std::vector<std::pair<char, int>> syllables;
  bool operator==(const CounterexampleForm&) const = default;
};

inline CounterexampleForm ReduceCounterexample(const Word& w) {
  // Labels as ordered by the catalog: s0 = a, s1/s2 = b^{+-1}, s3/s4 = c^{+-1}.
  static const std::map<std::string, std::pair<char, int>> letters = {
      {"s0", {'a', 1}}, {"s1", {'b', 1}}, {"s2", {'b', 2}}, {"s3", {'c', 1}}, {"s4", {'c', 2}}};
  CounterexampleForm f;
  for (const auto& label : w) {
    auto [x, e] = letters.at(label);
    if (x == 'a') {
      f.a ^= 1;
      continue;
    }
    if (!f.syllables.empty() && f.syllables.back().first == x) {
      f.syllables.back().second = (f.syllables.back().second + e) % 3;
      if (f.syllables.back().second == 0) f.syllables.pop_back();
    } else {
      f.syllables.emplace_back(x, e);
    }
  }
  return f;
}

// Z4 *_{Z2} (Z2 x Z2): x^2 = h is central and the quotient by it is
// Z2 * Z2 = <x, y>. Canonical form: power of h, then an alternating word in
// x and y.
struct ZigZagForm {
  int h = 0;
  std::string word;
  bool operator==(const ZigZagForm&) const = default;
};

inline ZigZagForm ReduceZigZag(const Word& w) {
  // s0 = x, s1 = x^-1 = x h, s2 = h, s3 = y.
  ZigZagForm f;
  auto push = [&](char c) {
    if (!f.word.empty() && f.word.back() == c) {
      f.word.pop_back();
      if (c == 'x') f.h ^= 1;  // x x = h; y y = 1
    } else {
      f.word.push_back(c);
    }
  };
  for (const auto& label : w) {
    if (label == "s0") {
      push('x');
    } else if (label == "s1") {
      push('x');
      f.h ^= 1;
    } else if (label == "s2") {
      f.h ^= 1;
    } else {
      push('y');
    }
  }
  return f;
}

// Z_n ⋊ Z acting on Z_n by x -> h + phi^k(x); compare as permutations plus k.
struct AffineForm {
  std::vector<int> perm;
  std::int64_t k = 0;
  bool operator==(const AffineForm&) const = default;
};

inline AffineForm AffineOf(const hamcircle::SemidirectSpec& s, const hamcircle::SemidirectPair& p) {
  AffineForm f;
  f.k = p.k;
  for (int x = 0; x < s.base.order; ++x) f.perm.push_back(s.base.mul(p.h, s.Apply(p.k, x)));
  return f;
}

inline AffineForm Compose(const AffineForm& f, const AffineForm& g) {
  AffineForm out;
  out.k = f.k + g.k;
  for (int x : g.perm) out.perm.push_back(f.perm[x]);
  return out;
}

// Exhaustive Hamilton cycle search by plain DFS over all paths from 0.
inline bool HasHamiltonCycle(const hamcircle::FiniteGroupTable& t) {
  const int n = t.order;
  if (n < 3) return false;
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) {
    for (int s : t.generators) {
      const int w = t.mul(v, s);
      if (w != v) adj[v].push_back(w);
    }
  }
  std::vector<char> used(n, 0);
  std::function<bool(int, int)> dfs = [&](int v, int depth) {
    if (depth == n) {
      for (int w : adj[v]) {
        if (w == 0) return true;
      }
      return false;
    }
    for (int w : adj[v]) {
      if (used[w]) continue;
      used[w] = 1;
      if (dfs(w, depth + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  used[0] = 1;
  return dfs(0, 1);
}

// Breadth-first distances in the Cayley graph of a finite table.
inline std::vector<int> TableDistances(const hamcircle::FiniteGroupTable& t) {
  std::vector<int> dist(t.order, -1);
  std::queue<int> q;
  dist[t.identity] = 0;
  q.push(t.identity);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int s : t.generators) {
      const int w = t.mul(v, s);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

inline Word RandomWord(const hamcircle::GroupSpec& spec, std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, spec.generators.size() - 1);
  Word w;
  for (int i = len(rng); i > 0; --i) w.push_back(spec.generators[pick(rng)].name);
  return w;
}

inline hamcircle::GroupElement Evaluate(const hamcircle::GroupSpec& spec, const Word& w) {
  hamcircle::GroupElement g = hamcircle::Identity(spec);
  for (const auto& label : w) {
    g = hamcircle::Multiply(spec, g, spec.generators.at(*spec.FindLabel(label)).value);
  }
  return g;
}

inline Word InverseWord(const hamcircle::GroupSpec& spec, const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(spec.generators[spec.InverseLabel(*spec.FindLabel(*it))].name);
  }
  return out;
}

}  // namespace oracle

#endif  // HAMCIRCLE_TESTS_ORACLES_HPP_
