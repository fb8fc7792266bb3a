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

#include "hamcircle/hamilton.hpp"

namespace hamcircle {

std::vector<int> HamiltonCycle::Vertices(const FiniteGroupTable& table) const {
  std::vector<int> out;
  out.reserve(word.size());
  int v = base;
  for (int s : word) {
    out.push_back(v);
    v = table.mul(v, s);
  }
  return out;
}

bool IsHamiltonCycle(const FiniteGroupTable& table, const HamiltonCycle& c) {
  if (static_cast<int>(c.word.size()) != table.order || table.order < 3) return false;
  if (c.base < 0 || c.base >= table.order) return false;
  const std::vector<int> gens = SymmetrizeGenerators(table, table.generators);
  std::vector<char> seen(table.order, 0);
  int v = c.base;
  for (int s : c.word) {
    if (s < 0 || s >= table.order) return false;
    if (std::find(gens.begin(), gens.end(), s) == gens.end()) return false;
    if (seen[v]) return false;
    seen[v] = 1;
    v = table.mul(v, s);
  }
  return v == c.base;
}

namespace {

// Inductive snake over the chain <s1> <= <s1,s2> <= ...: given a cycle
// x_0..x_{n-1} on K and m = [<K,s> : K], row r holds x_c s^r; rows are
// swept over columns 1..n-1 and column 0 is the way back.
HamiltonCycle AbelianCycle(const FiniteGroupTable& t, const std::vector<int>& gens) {
  std::vector<int> reps;
  for (int g : gens) {
    if (std::find(reps.begin(), reps.end(), t.inv(g)) == reps.end()) reps.push_back(g);
  }
  std::vector<int> xs{t.identity};
  std::vector<int> labels;
  std::vector<char> in_k(t.order, 0);
  in_k[t.identity] = 1;
  for (int s : reps) {
    int m = 1;
    for (int p = s; !in_k[p]; p = t.mul(p, s)) ++m;
    if (m == 1) continue;
    const int n = static_cast<int>(xs.size());
    std::vector<int> next;
    if (n == 1) {
      next.assign(m, s);
    } else {
      if (n == 2 && labels.empty()) labels = {t.mul(t.inv(xs[0]), xs[1]), t.mul(t.inv(xs[1]), xs[0])};
      next.push_back(labels[0]);
      for (int c = 1; c + 1 < n; ++c) next.push_back(labels[c]);
      for (int r = 1; r < m; ++r) {
        next.push_back(s);
        if (r % 2 == 1) {
          for (int c = n - 1; c >= 2; --c) next.push_back(t.inv(labels[c - 1]));
        } else {
          for (int c = 1; c + 1 < n; ++c) next.push_back(labels[c]);
        }
      }
      next.push_back((m - 1) % 2 == 1 ? t.inv(labels[0]) : labels[n - 1]);
      for (int r = 1; r < m; ++r) next.push_back(t.inv(s));
    }
    labels = std::move(next);
    xs = HamiltonCycle{t.identity, labels}.Vertices(t);
    if (xs.size() == 2) labels.clear();  // K2 keeps no cycle word
    std::fill(in_k.begin(), in_k.end(), 0);
    for (int x : xs) in_k[x] = 1;
  }
  if (static_cast<int>(xs.size()) != t.order) {
    throw Error(ErrorCode::kNoHamiltonCycleFound,
                "generators do not generate the group; the graph is disconnected");
  }
  return HamiltonCycle{t.identity, labels};
}

class CycleSearch {
 public:
  CycleSearch(const FiniteGroupTable& t, const std::vector<int>& gens, std::size_t budget)
      : t_(t), budget_(budget), visited_(t.order, 0), nbrs_(t.order) {
    for (int v = 0; v < t.order; ++v) {
      for (int s : gens) {
        const int w = t.mul(v, s);
        bool dup = w == v;
        for (auto [x, _] : nbrs_[v]) dup = dup || x == w;
        if (!dup) nbrs_[v].emplace_back(w, s);
      }
    }
  }

  std::optional<HamiltonCycle> Run() {
    visited_[t_.identity] = 1;
    path_.push_back(t_.identity);
    if (Extend()) return HamiltonCycle{t_.identity, word_};
    return std::nullopt;
  }

 private:
  bool Extend() {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::kBudgetExceeded, "Hamilton cycle search budget exhausted");
    }
    const int v = path_.back();
    if (static_cast<int>(path_.size()) == t_.order) {
      for (auto [w, s] : nbrs_[v]) {
        if (w == t_.identity) {
          word_.push_back(s);
          return true;
        }
      }
      return false;
    }
    for (auto [w, s] : nbrs_[v]) {
      if (visited_[w]) continue;
      visited_[w] = 1;
      path_.push_back(w);
      word_.push_back(s);
      if (Feasible() && Extend()) return true;
      word_.pop_back();
      path_.pop_back();
      visited_[w] = 0;
    }
    return false;
  }

  // Unvisited vertices need two usable neighbours and must stay connected
  // to the current end.
  bool Feasible() const {
    const int end = path_.back();
    int unvisited = 0;
    for (int v = 0; v < t_.order; ++v) {
      if (visited_[v]) continue;
      ++unvisited;
      int usable = 0;
      for (auto [w, _] : nbrs_[v]) {
        usable += !visited_[w] || w == end || w == t_.identity;
      }
      if (usable < 2) return false;
    }
    if (unvisited == 0) return true;
    std::vector<char> seen(t_.order, 0);
    std::vector<int> stack{end};
    seen[end] = 1;
    int reached = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (auto [w, _] : nbrs_[v]) {
        if (visited_[w] || seen[w]) continue;
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
    return reached == unvisited;
  }

  const FiniteGroupTable& t_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<char> visited_;
  std::vector<std::vector<std::pair<int, int>>> nbrs_;
  std::vector<int> path_;
  std::vector<int> word_;
};

}  // namespace

HamiltonCycle FiniteHamiltonCycle(const FiniteGroupTable& table, std::size_t node_budget) {
  if (table.order < 3) {
    throw Error(ErrorCode::kTooSmall, "group of order " + std::to_string(table.order) +
                                          " has no Hamilton cycle");
  }
  const std::vector<int> gens = SymmetrizeGenerators(table, table.generators);
  if (IsAbelian(table)) return AbelianCycle(table, gens);
  if (auto c = CycleSearch(table, gens, node_budget).Run()) return *c;
  throw Error(ErrorCode::kNoHamiltonCycleFound, "search space exhausted");
}

}  // namespace hamcircle
