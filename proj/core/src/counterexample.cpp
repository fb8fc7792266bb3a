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

#include "hamcircle/counterexample.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "hamcircle/catalog.hpp"

namespace hamcircle {

GroupSpec BuildCounterexampleSpec() { return catalog::CounterexampleAmalgam(); }

ContractedBall ContractOutside(const CayleyBall& ball, int margin) {
  if (margin < 1) throw Error(ErrorCode::kInvalidArgument, "outside margin must be >= 1");
  const int r = ball.radius;
  const CayleyBall big = BuildBall(ball.spec, r + margin);
  std::vector<int> parent(big.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (auto [u, v] : big.graph.edges) {
    if (big.depth[u] >= r && big.depth[v] >= r) parent[find(u)] = find(v);
  }

  ContractedBall out;
  out.margin = margin;
  std::vector<int> node(ball.size(), -1);
  std::vector<int> depth;
  for (int v = 0; v < ball.size(); ++v) {
    if (ball.depth[v] < r) {
      node[v] = out.interior_count++;
      depth.push_back(ball.depth[v]);
      out.names.push_back(ball.names[v]);
    }
  }
  std::unordered_map<int, int> group;
  for (int v = 0; v < ball.size(); ++v) {
    if (ball.depth[v] < r) continue;
    const int root = find(big.index.at(ball.names[v]));
    auto [it, fresh] = group.emplace(root, static_cast<int>(out.outside.size()));
    if (fresh) {
      out.outside.emplace_back();
      depth.push_back(r);
      out.names.push_back("outside" + std::to_string(it->second));
    }
    out.outside[it->second].push_back(v);
    node[v] = out.OutsideNode(it->second);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t e = 0; e < ball.graph.edges.size(); ++e) {
    auto [u, v] = ball.graph.edges[e];
    if (node[u] == node[v]) continue;
    edges.emplace_back(node[u], node[v]);
    out.ball_edge.push_back(static_cast<int>(e));
  }
  out.graph = SimpleGraph::FromEdges(r, std::move(depth), edges, true);
  return out;
}

namespace {

enum : char { kUnknown, kIn, kOut };

class Solver {
 public:
  Solver(const SimpleGraph& g, const std::vector<EdgeCut>& cuts, std::atomic<std::size_t>& nodes,
         std::size_t budget)
      : g_(g), cuts_(cuts), nodes_(nodes), budget_(budget),
        state_(g.edges.size(), kUnknown), in_v_(g.size(), 0), unk_v_(g.size(), 0),
        in_c_(cuts.size(), 0), unk_c_(cuts.size(), 0), edge_cuts_(g.edges.size()),
        parent_(g.size()), rank_(g.size(), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
    for (int v = 0; v < g.size(); ++v) unk_v_[v] = static_cast<int>(g.adjacency[v].size());
    for (std::size_t c = 0; c < cuts.size(); ++c) {
      unk_c_[c] = static_cast<int>(cuts[c].edges.size());
      for (int e : cuts[c].edges) edge_cuts_[e].push_back(static_cast<int>(c));
    }
    order_.resize(g.edges.size());
    std::iota(order_.begin(), order_.end(), 0);
    auto key = [&](int e) {
      auto [u, v] = g.edges[e];
      return std::make_pair(std::min(g.depth[u], g.depth[v]), std::max(g.depth[u], g.depth[v]));
    };
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return key(a) < key(b); });
  }

  // Runs one top-level branch: `chosen` edges at `root` are in, the others
  // at root are out.
  BranchTrace RunBranch(int root, const std::vector<int>& chosen) {
    BranchTrace trace;
    trace.identity_edges = chosen;
    bool ok = true;
    for (int e : g_.incident[root]) {
      if (!ok) break;
      const bool in = std::find(chosen.begin(), chosen.end(), e) != chosen.end();
      if (state_[e] == kUnknown) ok = Assign(e, in ? kIn : kOut);
      else if (state_[e] != (in ? kIn : kOut)) ok = Fail(kDegreeConflict, -1);
    }
    for (int v = 0; v < g_.size() && ok; ++v) ok = CheckVertex(v);
    for (std::size_t c = 0; c < cuts_.size() && ok; ++c) ok = CheckCut(static_cast<int>(c));
    ok = ok && Propagate();
    if (ok) {
      local_nodes_ = 0;
      trace.satisfiable = Search();
    }
    trace.nodes = local_nodes_;
    trace.degree_conflicts = conflicts_[kDegreeConflict];
    trace.cycle_conflicts = conflicts_[kCycleConflict];
    trace.cut_conflicts = conflicts_[kCutConflict];
    if (best_cut_ >= 0) trace.smallest_violated_cut = cuts_[best_cut_];
    return trace;
  }

  std::vector<int> Solution() const {
    std::vector<int> out;
    for (std::size_t e = 0; e < state_.size(); ++e) {
      if (state_[e] == kIn) out.push_back(static_cast<int>(e));
    }
    return out;
  }

 private:
  enum Conflict { kDegreeConflict, kCycleConflict, kCutConflict };

  bool Fail(Conflict kind, int cut) {
    ++conflicts_[kind];
    if (kind == kCutConflict && (best_cut_ < 0 || cut < best_cut_)) best_cut_ = cut;
    return false;
  }

  int Find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  bool Assign(int e, char value) {
    auto [u, v] = g_.edges[e];
    if (value == kIn && g_.interior(u) && g_.interior(v)) {
      int a = Find(u), b = Find(v);
      if (a == b) return Fail(kCycleConflict, -1);
      if (rank_[a] < rank_[b]) std::swap(a, b);
      parent_[b] = a;
      const bool bumped = rank_[a] == rank_[b];
      if (bumped) ++rank_[a];
      unions_.push_back({b, bumped ? a : -1});
    }
    state_[e] = value;
    trail_.push_back(e);
    for (int x : {u, v}) {
      --unk_v_[x];
      if (value == kIn) ++in_v_[x];
      vertex_queue_.push_back(x);
    }
    for (int c : edge_cuts_[e]) {
      --unk_c_[c];
      if (value == kIn) ++in_c_[c];
      cut_queue_.push_back(c);
    }
    return true;
  }

  void Undo(std::size_t mark, std::size_t union_mark) {
    while (trail_.size() > mark) {
      const int e = trail_.back();
      trail_.pop_back();
      const bool in = state_[e] == kIn;
      auto [u, v] = g_.edges[e];
      for (int x : {u, v}) {
        ++unk_v_[x];
        if (in) --in_v_[x];
      }
      for (int c : edge_cuts_[e]) {
        ++unk_c_[c];
        if (in) --in_c_[c];
      }
      state_[e] = kUnknown;
    }
    while (unions_.size() > union_mark) {
      auto [child, bumped] = unions_.back();
      unions_.pop_back();
      const int root = parent_[child];
      parent_[child] = child;
      if (bumped >= 0) --rank_[root];
    }
    vertex_queue_.clear();
    cut_queue_.clear();
  }

  bool ForceUnknown(const std::vector<int>& edges, char value) {
    for (int e : edges) {
      if (state_[e] == kUnknown && !Assign(e, value)) return false;
    }
    return true;
  }

  bool CheckVertex(int v) {
    if (!g_.interior(v)) return true;
    const int in = in_v_[v], unk = unk_v_[v];
    if (in > 2 || in + unk < 2) return Fail(kDegreeConflict, -1);
    if (unk > 0 && in + unk == 2) return ForceUnknown(g_.incident[v], kIn);
    if (unk > 0 && in == 2) return ForceUnknown(g_.incident[v], kOut);
    return true;
  }

  bool CheckCut(int c) {
    const int in = in_c_[c], unk = unk_c_[c];
    if (in + unk < 2 || (unk == 0 && in % 2 == 1)) return Fail(kCutConflict, c);
    if (unk == 1) return ForceUnknown(cuts_[c].edges, in % 2 == 1 ? kIn : kOut);
    if (unk > 0 && in + unk == 2) return ForceUnknown(cuts_[c].edges, kIn);
    return true;
  }

  bool Propagate() {
    while (!vertex_queue_.empty() || !cut_queue_.empty()) {
      if (!vertex_queue_.empty()) {
        const int v = vertex_queue_.back();
        vertex_queue_.pop_back();
        if (!CheckVertex(v)) return false;
      } else {
        const int c = cut_queue_.back();
        cut_queue_.pop_back();
        if (!CheckCut(c)) return false;
      }
    }
    return true;
  }

  bool Search() {
    ++local_nodes_;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
      throw Error(ErrorCode::kBudgetExceeded, "obstruction search exceeded its node budget");
    }
    int e = -1;
    for (int x : order_) {
      if (state_[x] == kUnknown) {
        e = x;
        break;
      }
    }
    if (e < 0) return true;
    for (char value : {kIn, kOut}) {
      const std::size_t mark = trail_.size(), union_mark = unions_.size();
      if (Assign(e, value) && Propagate() && Search()) return true;
      Undo(mark, union_mark);
    }
    return false;
  }

  const SimpleGraph& g_;
  const std::vector<EdgeCut>& cuts_;
  std::atomic<std::size_t>& nodes_;
  std::size_t budget_;
  std::size_t local_nodes_ = 0;
  std::vector<char> state_;
  std::vector<int> in_v_, unk_v_, in_c_, unk_c_;
  std::vector<std::vector<int>> edge_cuts_;
  std::vector<int> parent_, rank_;
  std::vector<std::pair<int, int>> unions_;
  std::vector<int> trail_;
  std::vector<int> vertex_queue_, cut_queue_;
  std::vector<int> order_;
  std::size_t conflicts_[3] = {0, 0, 0};
  int best_cut_ = -1;
};

nlohmann::json EdgeNames(const CayleyBall& ball, const std::vector<int>& edges,
                         const std::vector<int>* ball_edge = nullptr) {
  nlohmann::json out = nlohmann::json::array();
  for (int e : edges) {
    auto [u, v] = ball.graph.edges[ball_edge ? (*ball_edge)[e] : e];
    out.push_back({ball.names[u], ball.names[v]});
  }
  return out;
}

void RunParallel(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, count))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

nlohmann::json ObstructionResult::ToJson(const CayleyBall& ball) const {
  nlohmann::json trace = nlohmann::json::array();
  for (std::size_t b = 0; b < branches.size(); ++b) {
    const BranchTrace& t = branches[b];
    nlohmann::json cut = nullptr;
    if (t.smallest_violated_cut) {
      nlohmann::json side = nlohmann::json::array();
      for (int v : t.smallest_violated_cut->side) side.push_back(node_names[v]);
      cut = {{"edges", EdgeNames(ball, t.smallest_violated_cut->edges, &ball_edge)},
             {"side", std::move(side)}};
    }
    trace.push_back({{"branch", b},
                     {"identity_edges", EdgeNames(ball, t.identity_edges, &ball_edge)},
                     {"satisfiable", t.satisfiable},
                     {"smallest_violated_cut", std::move(cut)},
                     {"conflicts",
                      {{"degree", t.degree_conflicts},
                       {"cycle", t.cycle_conflicts},
                       {"cut", t.cut_conflicts}}},
                     {"nodes", t.nodes}});
  }
  nlohmann::json out = {{"radius", radius},
                        {"cut_size_max", cut_size_max},
                        {"status", status == ObstructionStatus::kUnsat ? "Unsat" : "SatFound"},
                        {"nodes_explored", nodes_explored},
                        {"cuts_checked", cuts_checked},
                        {"outside_nodes", outside_nodes},
                        {"violated_cut_trace", std::move(trace)}};
  if (status == ObstructionStatus::kSatFound) out["edges"] = EdgeNames(ball, edges);
  return out;
}

ObstructionResult ObstructionSearch(const CayleyBall& ball, int cut_size_max, unsigned jobs,
                                    std::size_t node_budget, int margin) {
  if (cut_size_max < 2) throw Error(ErrorCode::kInvalidArgument, "cut size must be >= 2");
  if (ball.radius < 1) throw Error(ErrorCode::kInvalidArgument, "radius must be >= 1");
  ContractedBall contracted = ContractOutside(ball, margin);
  const SimpleGraph& g = contracted.graph;
  const std::vector<EdgeCut> cuts = EnumerateSmallEdgeCuts(g, cut_size_max, false);
  ObstructionResult result;
  result.radius = ball.radius;
  result.cut_size_max = cut_size_max;
  result.cuts_checked = cuts.size();
  result.outside_nodes = contracted.outside.size();
  result.node_names = std::move(contracted.names);
  result.ball_edge = contracted.ball_edge;

  const int root = 0;
  std::vector<std::vector<int>> choices;
  const auto& inc = g.incident[root];
  for (std::size_t i = 0; i < inc.size(); ++i) {
    for (std::size_t j = i + 1; j < inc.size(); ++j) choices.push_back({inc[i], inc[j]});
  }
  std::atomic<std::size_t> nodes{0};
  std::vector<BranchTrace> traces(choices.size());
  std::vector<std::vector<int>> solutions(choices.size());
  try {
    RunParallel(choices.size(), jobs, [&](std::size_t b) {
      Solver solver(g, cuts, nodes, node_budget);
      traces[b] = solver.RunBranch(root, choices[b]);
      if (traces[b].satisfiable) solutions[b] = solver.Solution();
    });
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    throw Error(ErrorCode::kBudgetExceeded,
                std::string(e.what()) + " after " + std::to_string(nodes.load()) + " nodes over " +
                    std::to_string(cuts.size()) + " cuts");
  }
  result.branches = std::move(traces);
  result.nodes_explored = nodes.load();
  for (std::size_t b = 0; b < choices.size(); ++b) {
    if (result.branches[b].satisfiable) {
      result.status = ObstructionStatus::kSatFound;
      for (int e : solutions[b]) result.edges.push_back(contracted.ball_edge[e]);
      break;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

class ComponentCounter {
 public:
  ComponentCounter(const SimpleGraph& g, bool count_all)
      : g_(g), count_all_(count_all), removed_(g.size(), 0), seen_(g.size(), 0) {}

  int Count(const std::vector<int>& w) {
    ++stamp_;
    for (int v : w) removed_[v] = stamp_;
    int counted = 0;
    for (int start = 0; start < g_.size(); ++start) {
      if (removed_[start] == stamp_ || seen_[start] == stamp_) continue;
      bool interior = false;
      int boundary = 0;
      stack_.clear();
      stack_.push_back(start);
      seen_[start] = stamp_;
      while (!stack_.empty()) {
        const int v = stack_.back();
        stack_.pop_back();
        if (g_.interior(v)) interior = true;
        else ++boundary;
        for (int x : g_.adjacency[v]) {
          if (removed_[x] != stamp_ && seen_[x] != stamp_) {
            seen_[x] = stamp_;
            stack_.push_back(x);
          }
        }
      }
      counted += count_all_ || interior || boundary >= 2;
    }
    return counted;
  }

 private:
  const SimpleGraph& g_;
  bool count_all_;
  std::vector<unsigned> removed_, seen_;
  unsigned stamp_ = 0;
  std::vector<int> stack_;
};

}  // namespace

int CountedComponents(const SimpleGraph& graph, const std::vector<int>& removed,
                      bool count_all) {
  return ComponentCounter(graph, count_all).Count(removed);
}

nlohmann::json ToughnessReport::ToJson(const SimpleGraph&,
                                       const std::vector<std::string>* names) const {
  nlohmann::json set = nlohmann::json::array();
  for (int v : worst_set) {
    if (names) set.push_back((*names)[v]);
    else set.push_back(v);
  }
  return {{"max_w", max_w},
          {"worst", worst},
          {"worst_set", std::move(set)},
          {"worst_by_size", worst_by_size},
          {"sets_examined", sets_examined},
          {"tough_at_this_scale", worst <= 0}};
}

ToughnessReport ToughnessCheck(const SimpleGraph& graph, int max_w, unsigned jobs,
                               std::size_t set_budget, bool count_all) {
  if (max_w < 1) throw Error(ErrorCode::kInvalidArgument, "max_w must be >= 1");
  std::vector<int> interior;
  for (int v = 0; v < graph.size(); ++v) {
    if (graph.interior(v)) interior.push_back(v);
  }
  const int n = static_cast<int>(interior.size());
  max_w = std::min(max_w, n);
  ToughnessReport report;
  report.max_w = max_w;
  report.worst_by_size.assign(max_w + 1, std::numeric_limits<int>::min());
  report.worst = std::numeric_limits<int>::min();
  if (n == 0) return report;

  struct Best {
    int value = std::numeric_limits<int>::min();
    std::vector<int> set;
    std::vector<int> by_size;
    std::size_t examined = 0;
  };
  std::vector<Best> per_first(n);
  std::atomic<std::size_t> examined{0};
  // Sets are enumerated by their smallest member so the work splits cleanly.
  RunParallel(static_cast<std::size_t>(n), jobs, [&](std::size_t first) {
    ComponentCounter counter(graph, count_all);
    Best best;
    best.by_size.assign(max_w + 1, std::numeric_limits<int>::min());
    std::vector<int> w{interior[first]};
    std::vector<int> idx{static_cast<int>(first)};
    auto visit = [&]() {
      if (examined.fetch_add(1, std::memory_order_relaxed) >= set_budget) {
        throw Error(ErrorCode::kBudgetExceeded, "toughness enumeration exceeded its budget");
      }
      ++best.examined;
      const int k = static_cast<int>(w.size());
      const int value = counter.Count(w) - k;
      best.by_size[k] = std::max(best.by_size[k], value);
      if (value > best.value) {
        best.value = value;
        best.set = w;
      }
    };
    visit();
    // Iterative combination walk over indices > first.
    while (true) {
      if (static_cast<int>(w.size()) < max_w && idx.back() + 1 < n) {
        idx.push_back(idx.back() + 1);
        w.push_back(interior[idx.back()]);
        visit();
        continue;
      }
      while (idx.size() > 1 && idx.back() + 1 >= n) {
        idx.pop_back();
        w.pop_back();
      }
      if (idx.size() == 1) break;
      ++idx.back();
      w.back() = interior[idx.back()];
      visit();
    }
    per_first[first] = std::move(best);
  });
  for (const Best& b : per_first) {
    report.sets_examined += b.examined;
    if (b.value > report.worst) {
      report.worst = b.value;
      report.worst_set = b.set;
    }
    for (int k = 1; k <= max_w; ++k) {
      report.worst_by_size[k] = std::max(report.worst_by_size[k], b.by_size[k]);
    }
  }
  report.worst_by_size[0] = 0;
  return report;
}

ToughnessReport ToughnessCheck(const CayleyBall& ball, int max_w, unsigned jobs,
                               std::size_t set_budget, int margin) {
  if (ball.radius < 1) throw Error(ErrorCode::kInvalidArgument, "radius must be >= 1");
  const ContractedBall contracted = ContractOutside(ball, margin);
  return ToughnessCheck(contracted.graph, max_w, jobs, set_budget, true);
}

}  // namespace hamcircle
