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

#include "hamcircle/cayley.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hamcircle/spec_io.hpp"

namespace hamcircle {

std::optional<int> SimpleGraph::EdgeId(int u, int v) const {
  const auto& adj = adjacency[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v);
  if (it == adj.end() || *it != v) return std::nullopt;
  return incident[u][static_cast<std::size_t>(it - adj.begin())];
}

SimpleGraph SimpleGraph::FromEdges(int radius, std::vector<int> depth,
                                   const std::vector<std::pair<int, int>>& edges,
                                   bool keep_parallel) {
  SimpleGraph g;
  g.radius = radius;
  g.depth = std::move(depth);
  if (keep_parallel) {
    for (auto [u, v] : edges) {
      if (u != v) g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  } else {
    std::set<std::pair<int, int>> unique;
    for (auto [u, v] : edges) {
      if (u != v) unique.emplace(std::min(u, v), std::max(u, v));
    }
    g.edges.assign(unique.begin(), unique.end());
  }
  std::vector<std::vector<std::pair<int, int>>> adj(g.depth.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    adj[u].emplace_back(v, static_cast<int>(e));
    adj[v].emplace_back(u, static_cast<int>(e));
  }
  g.adjacency.resize(adj.size());
  g.incident.resize(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    for (auto [w, e] : adj[v]) {
      g.adjacency[v].push_back(w);
      g.incident[v].push_back(e);
    }
  }
  return g;
}

std::optional<int> CayleyBall::Find(const GroupElement& g) const {
  auto it = index.find(FormatElement(spec, g));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<int> CayleyBall::Interior() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (depth[v] < radius) out.push_back(v);
  }
  return out;
}

CayleyBall BuildBall(const GroupSpec& spec, int radius, std::size_t vertex_budget) {
  if (radius < 0) throw Error(ErrorCode::kInvalidArgument, "radius must be >= 0");
  CayleyBall ball;
  ball.spec = spec;
  ball.radius = radius;
  auto add = [&](GroupElement g, std::string name, int d) {
    if (ball.vertices.size() >= vertex_budget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "ball exceeds " + std::to_string(vertex_budget) + " vertices");
    }
    ball.index.emplace(name, static_cast<int>(ball.vertices.size()));
    ball.vertices.push_back(std::move(g));
    ball.names.push_back(std::move(name));
    ball.depth.push_back(d);
  };
  add(Identity(spec), "1", 0);
  std::size_t layer_begin = 0;
  for (int d = 1; d <= radius; ++d) {
    const std::size_t layer_end = ball.vertices.size();
    std::vector<std::pair<std::string, GroupElement>> next;
    std::set<std::string> seen;
    for (std::size_t v = layer_begin; v < layer_end; ++v) {
      for (const auto& gen : spec.generators) {
        GroupElement w = Multiply(spec, ball.vertices[v], gen.value);
        std::string name = FormatElement(spec, w);
        if (ball.index.count(name) || !seen.insert(name).second) continue;
        next.emplace_back(std::move(name), std::move(w));
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [name, g] : next) add(std::move(g), std::move(name), d);
    layer_begin = layer_end;
  }
  ball.adjacency.resize(ball.vertices.size());
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < ball.size(); ++v) {
    for (std::size_t s = 0; s < spec.generators.size(); ++s) {
      auto it = ball.index.find(
          FormatElement(spec, Multiply(spec, ball.vertices[v], spec.generators[s].value)));
      if (it == ball.index.end()) continue;
      ball.adjacency[v].emplace_back(s, it->second);
      edges.emplace_back(v, it->second);
    }
  }
  ball.graph = SimpleGraph::FromEdges(radius, ball.depth, edges);
  return ball;
}

std::vector<Component> ComponentsAfterRemoval(const SimpleGraph& graph,
                                              std::span<const int> removed) {
  std::vector<char> blocked(graph.size(), 0);
  for (int v : removed) blocked[v] = 1;
  std::vector<Component> out;
  std::vector<int> stack;
  for (int start = 0; start < graph.size(); ++start) {
    if (blocked[start]) continue;
    Component c;
    blocked[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      if (graph.boundary(v)) {
        c.touches_boundary = true;
        ++c.boundary_vertices;
      } else {
        c.has_interior = true;
      }
      for (int w : graph.adjacency[v]) {
        if (!blocked[w]) {
          blocked[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Component> ComponentsAfterRemoval(const CayleyBall& ball,
                                              std::span<const int> removed) {
  return ComponentsAfterRemoval(ball.graph, removed);
}

namespace {

// Include/exclude enumeration of connected sets whose smallest vertex is the
// root. Edges from the set to excluded vertices are cut edges for good, so
// their count is a valid lower bound on |δ(S)|.
class CutEnumerator {
 public:
  CutEnumerator(const SimpleGraph& g, int max_size, bool interior_only,
                std::size_t budget)
      : g_(g), max_size_(max_size), budget_(budget),
        state_(g.size(), kFree), candidate_(g.size(), 0) {
    for (int v = 0; v < g.size(); ++v) {
      candidate_[v] = !interior_only || g.interior(v);
      if (g.interior(v)) ++interior_total_;
    }
  }

  void Run() {
    for (int root = 0; root < g_.size(); ++root) {
      if (!candidate_[root]) continue;
      std::fill(state_.begin(), state_.end(), kFree);
      for (int v = 0; v < root; ++v) state_[v] = kExcluded;
      for (int v = 0; v < g_.size(); ++v) {
        if (!candidate_[v]) state_[v] = kExcluded;
      }
      members_.clear();
      permanent_ = 0;
      interior_in_set_ = 0;
      Include(root);
      if (permanent_ <= max_size_) Recurse();
    }
  }

  std::vector<EdgeCut> Take() {
    std::vector<EdgeCut> out;
    out.reserve(found_.size());
    for (auto& [edges, side] : found_) out.push_back(EdgeCut{side, edges});
    std::stable_sort(out.begin(), out.end(), [](const EdgeCut& a, const EdgeCut& b) {
      return a.edges.size() < b.edges.size();
    });
    return out;
  }

 private:
  enum State : char { kFree, kInSet, kExcluded };

  void Include(int v) {
    state_[v] = kInSet;
    members_.push_back(v);
    if (g_.interior(v)) ++interior_in_set_;
    for (int w : g_.adjacency[v]) {
      if (state_[w] == kExcluded) ++permanent_;
    }
  }
  void Uninclude(int v) {
    for (int w : g_.adjacency[v]) {
      if (state_[w] == kExcluded) --permanent_;
    }
    if (g_.interior(v)) --interior_in_set_;
    members_.pop_back();
    state_[v] = kFree;
  }
  int InSetNeighbours(int v) const {
    int n = 0;
    for (int w : g_.adjacency[v]) n += state_[w] == kInSet;
    return n;
  }

  int NextFrontier() const {
    int best = -1;
    for (int v : members_) {
      for (int w : g_.adjacency[v]) {
        if (state_[w] == kFree && (best < 0 || w < best)) best = w;
      }
    }
    return best;
  }

  void Recurse() {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "cut enumeration exceeded " + std::to_string(budget_) + " nodes");
    }
    const int w = NextFrontier();
    if (w < 0) {
      Emit();
      return;
    }
    Include(w);
    if (permanent_ <= max_size_) Recurse();
    Uninclude(w);
    state_[w] = kExcluded;
    const int added = InSetNeighbours(w);
    permanent_ += added;
    if (permanent_ <= max_size_) Recurse();
    permanent_ -= added;
    state_[w] = kFree;
  }

  void Emit() {
    if (interior_in_set_ == 0 || interior_in_set_ >= interior_total_) return;
    std::vector<int> edges;
    for (int v : members_) {
      for (std::size_t i = 0; i < g_.adjacency[v].size(); ++i) {
        if (state_[g_.adjacency[v][i]] != kInSet) edges.push_back(g_.incident[v][i]);
      }
    }
    if (edges.empty()) return;
    std::sort(edges.begin(), edges.end());
    if (found_.count(edges)) return;
    std::vector<int> side = members_;
    std::sort(side.begin(), side.end());
    found_.emplace(std::move(edges), std::move(side));
  }

  const SimpleGraph& g_;
  int max_size_;
  std::size_t budget_;
  std::vector<char> state_;
  std::vector<char> candidate_;
  std::vector<int> members_;
  int permanent_ = 0;
  int interior_total_ = 0;
  int interior_in_set_ = 0;
  std::size_t nodes_ = 0;
  std::map<std::vector<int>, std::vector<int>> found_;
};

}  // namespace

std::vector<EdgeCut> EnumerateSmallEdgeCuts(const SimpleGraph& graph, int max_size,
                                            bool interior_only, std::size_t node_budget) {
  if (max_size < 1) return {};
  CutEnumerator e(graph, max_size, interior_only, node_budget);
  e.Run();
  return e.Take();
}

namespace {

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string ExportDot(const CayleyBall& ball, std::span<const int> highlight) {
  std::set<int> red(highlight.begin(), highlight.end());
  std::vector<std::vector<std::string>> labels(ball.graph.edges.size());
  for (int v = 0; v < ball.size(); ++v) {
    for (auto [s, w] : ball.adjacency[v]) {
      if (v > w) continue;
      if (auto e = ball.graph.EdgeId(v, w)) {
        auto& l = labels[*e];
        const auto& name = ball.spec.generators[s].name;
        if (std::find(l.begin(), l.end(), name) == l.end()) l.push_back(name);
      }
    }
  }
  std::ostringstream out;
  out << "graph {\n";
  for (const auto& name : ball.names) out << "  " << Quote(name) << ";\n";
  for (std::size_t e = 0; e < ball.graph.edges.size(); ++e) {
    auto [u, v] = ball.graph.edges[e];
    std::string label;
    for (const auto& l : labels[e]) label += (label.empty() ? "" : ",") + l;
    out << "  " << Quote(ball.names[u]) << " -- " << Quote(ball.names[v])
        << " [label=" << Quote(label);
    if (red.count(static_cast<int>(e))) out << ", color=red";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json BallToJson(const CayleyBall& ball) {
  nlohmann::json edges = nlohmann::json::array();
  for (int v = 0; v < ball.size(); ++v) {
    for (auto [s, w] : ball.adjacency[v]) {
      edges.push_back({v, w, ball.spec.generators[s].name});
    }
  }
  return {{"radius", ball.radius},
          {"vertices", ball.names},
          {"depth", ball.depth},
          {"edges", std::move(edges)}};
}

}  // namespace hamcircle
