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
#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "hamcircle/catalog.hpp"
#include "hamcircle/cayley.hpp"
#include "hamcircle/hamilton.hpp"
#include "hamcircle/verify.hpp"

namespace hamcircle {
namespace {

TEST(Ball, IntegerPath) {
  const CayleyBall b = BuildBall(catalog::Integers({1}), 3);
  EXPECT_EQ(b.size(), 7);
  EXPECT_EQ(b.graph.edges.size(), 6u);
  for (int r = 0; r <= 20; ++r) EXPECT_EQ(BuildBall(catalog::Integers({1}), r).size(), 2 * r + 1);
}

TEST(Ball, CounterexampleRadiusOne) {
  EXPECT_EQ(BuildBall(catalog::CounterexampleAmalgam(), 1).size(), 6);
}

TEST(Ball, FiniteSaturates) {
  const GroupSpec z4 = MakeFiniteSpec(catalog::AbelianTable({4}, {{1}}));
  std::vector<int> sizes;
  for (int r = 0; r <= 10; ++r) sizes.push_back(BuildBall(z4, r).size());
  EXPECT_EQ(sizes, (std::vector<int>{1, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4}));
}

TEST(Ball, SizesGrowWhileGroupIsLarger) {
  for (const GroupSpec& g : {catalog::CounterexampleAmalgam(), catalog::InversionSemidirect({1, 2}),
                             catalog::Abelian(2, {}, {{1, 0}, {0, 1}})}) {
    int prev = 0;
    for (int r = 0; r <= 5; ++r) {
      const int n = BuildBall(g, r).size();
      EXPECT_GT(n, prev);
      prev = n;
    }
  }
}

TEST(Ball, BudgetIsEnforced) {
  try {
    BuildBall(catalog::CounterexampleAmalgam(), 12, 1000);
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(Ball, AdjacencyIsSymmetricAndLocallyUniform) {
  for (const GroupSpec& g : {catalog::CounterexampleAmalgam(), catalog::DedekindAmalgam(),
                             catalog::InversionSemidirect({1, 2})}) {
    const CayleyBall b = BuildBall(g, 4);
    for (int u = 0; u < b.size(); ++u) {
      for (auto [label, v] : b.adjacency[u]) {
        const std::size_t back = g.InverseLabel(label);
        const auto& adj = b.adjacency[v];
        EXPECT_NE(std::find(adj.begin(), adj.end(), std::make_pair(back, u)), adj.end());
      }
    }
    std::mt19937 rng(3);
    const auto interior = b.Interior();
    std::uniform_int_distribution<std::size_t> pick(0, interior.size() - 1);
    for (int i = 0; i < 20; ++i) {
      const int v = interior[pick(rng)];
      std::multiset<std::size_t> labels;
      for (auto [label, w] : b.adjacency[v]) labels.insert(label);
      std::multiset<std::size_t> at_root;
      for (auto [label, w] : b.adjacency[0]) at_root.insert(label);
      EXPECT_EQ(labels, at_root);
    }
  }
}

TEST(Components, Examples) {
  const CayleyBall z = BuildBall(catalog::Integers({1}), 5);
  EXPECT_EQ(ComponentsAfterRemoval(z, std::vector<int>{}).size(), 1u);
  const std::vector<int> id{0};
  EXPECT_EQ(ComponentsAfterRemoval(z, id).size(), 2u);

  const GroupSpec ce = catalog::CounterexampleAmalgam();
  const CayleyBall b = BuildBall(ce, 4);
  const std::vector<int> pair{0, *b.Find(ce.generators[*ce.FindLabel("s0")].value)};
  EXPECT_EQ(ComponentsAfterRemoval(b, pair).size(), 2u);
}

// All cuts by enumerating every vertex subset.
std::set<std::vector<int>> BruteForceCuts(const SimpleGraph& g, int max_size, bool interior_only) {
  const int n = g.size();
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    auto in = [&](int v) { return (mask >> v) & 1u; };
    bool has_interior = false, complement_interior = false, ok = true;
    for (int v = 0; v < n; ++v) {
      if (in(v)) {
        has_interior |= g.interior(v);
        if (interior_only && !g.interior(v)) ok = false;
      } else {
        complement_interior |= g.interior(v);
      }
    }
    if (!ok || !has_interior || !complement_interior) continue;
    std::vector<int> cut;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (in(g.edges[e].first) != in(g.edges[e].second)) cut.push_back(static_cast<int>(e));
    }
    if (static_cast<int>(cut.size()) > max_size) continue;
    // S must be connected.
    int start = 0;
    while (!in(start)) ++start;
    std::uint32_t seen = 1u << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.adjacency[v]) {
        if (in(w) && !((seen >> w) & 1u)) {
          seen |= 1u << w;
          stack.push_back(w);
        }
      }
    }
    if (seen != mask) continue;
    out.insert(cut);
  }
  return out;
}

TEST(Cuts, MatchBruteForce) {
  const std::vector<std::pair<GroupSpec, int>> cases = {
      {catalog::Integers({1, 2}), 3},
      {catalog::Abelian(2, {}, {{1, 0}, {0, 1}}), 2},
      {catalog::CounterexampleAmalgam(), 2},
      {catalog::InversionSemidirect({1}), 2}};
  for (const auto& [spec, r] : cases) {
    const CayleyBall b = BuildBall(spec, r);
    ASSERT_LE(b.size(), 20);
    for (bool interior_only : {true, false}) {
      for (int k : {1, 3, 6}) {
        std::set<std::vector<int>> got;
        for (const auto& c : EnumerateSmallEdgeCuts(b.graph, k, interior_only)) {
          EXPECT_TRUE(got.insert(c.edges).second) << "duplicate cut";
        }
        EXPECT_EQ(got, BruteForceCuts(b.graph, k, interior_only))
            << "r=" << r << " k=" << k << " interior_only=" << interior_only;
      }
    }
  }
}

TEST(Cuts, PathSingleEdgeCuts) {
  const CayleyBall b = BuildBall(catalog::Integers({1}), 3);
  EXPECT_TRUE(EnumerateSmallEdgeCuts(b.graph, 1, true).empty());
  const auto cuts = EnumerateSmallEdgeCuts(b.graph, 1, false);
  // Every edge with an interior vertex on both sides.
  EXPECT_EQ(cuts.size(), 4u);
  for (const auto& c : cuts) EXPECT_EQ(c.edges.size(), 1u);
  EXPECT_TRUE(EnumerateSmallEdgeCuts(b.graph, 0).empty());
}

TEST(Cuts, SideDeterminesEdges) {
  const CayleyBall b = BuildBall(catalog::CounterexampleAmalgam(), 3);
  for (const auto& c : EnumerateSmallEdgeCuts(b.graph, 6)) {
    std::vector<char> in(b.size(), 0);
    for (int v : c.side) in[v] = 1;
    std::vector<int> edges;
    for (std::size_t e = 0; e < b.graph.edges.size(); ++e) {
      if (in[b.graph.edges[e].first] != in[b.graph.edges[e].second]) edges.push_back(static_cast<int>(e));
    }
    EXPECT_EQ(edges, c.edges);
  }
}

TEST(SimpleGraphTest, ParallelEdges) {
  const std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  EXPECT_EQ(SimpleGraph::FromEdges(1, {0, 1, 1}, edges).edges.size(), 2u);
  const SimpleGraph multi = SimpleGraph::FromEdges(1, {0, 1, 1}, edges, true);
  EXPECT_EQ(multi.edges.size(), 3u);
  EXPECT_EQ(multi.adjacency[1].size(), 3u);
}

TEST(Dot, Shapes) {
  const GroupSpec z4 = MakeFiniteSpec(catalog::AbelianTable({4}, {{1}}));
  const std::string one = ExportDot(BuildBall(z4, 0));
  EXPECT_EQ(one.rfind("graph {", 0), 0u);
  EXPECT_NE(one.find("\"1\""), std::string::npos);
  EXPECT_EQ(one.find("--"), std::string::npos);
  const std::string full = ExportDot(BuildBall(z4, 2));
  std::size_t edges = 0;
  for (std::size_t p = full.find("--"); p != std::string::npos; p = full.find("--", p + 2)) ++edges;
  EXPECT_EQ(edges, 4u);
}

TEST(Dot, CertificateOverlay) {
  const GroupSpec g = catalog::Integers({1, 2});
  const CircleCertificate cert = AbelianCircle(g);
  const CayleyBall b = BuildBall(g, 5);
  const auto d = InducedEdges(cert, b);
  const std::string dot = ExportDot(b, d);
  std::size_t red = 0;
  for (std::size_t p = dot.find("color=red"); p != std::string::npos; p = dot.find("color=red", p + 1)) {
    ++red;
  }
  EXPECT_EQ(red, d.size());
  EXPECT_FALSE(d.empty());
}

TEST(BallJson, Fields) {
  const auto j = BallToJson(BuildBall(catalog::Integers({1}), 2));
  EXPECT_EQ(j.at("vertices").size(), 5u);
  EXPECT_EQ(j.at("depth").size(), 5u);
  // Labelled arcs: each undirected edge appears once per direction.
  EXPECT_EQ(j.at("edges").size(), 8u);
}

}  // namespace
}  // namespace hamcircle
