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

#include "hamcircle/verify.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace hamcircle {

nlohmann::json VerificationReport::ToJson() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  nlohmann::json verdict_json =
      consistent() ? nlohmann::json("ConsistentUpToRadius")
                   : nlohmann::json({{"Refuted", failed_check}});
  return {{"radius", radius}, {"checks", std::move(checks_json)}, {"verdict", verdict_json}};
}

namespace {

struct Walked {
  std::size_t ray = 0;
  Direction direction = Direction::kRight;
  std::vector<std::string> names;  // base first
};

std::vector<Walked> WalkAll(const CircleCertificate& cert, std::size_t steps) {
  std::vector<Walked> out;
  for (std::size_t r = 0; r < cert.rays.size(); ++r) {
    for (Direction d : {Direction::kRight, Direction::kLeft}) {
      Walked w{r, d, {}};
      for (const auto& g : cert.rays[r].Walk(cert.spec, d, steps)) {
        w.names.push_back(FormatElement(cert.spec, g));
      }
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::string Where(const Walked& w, std::size_t i) {
  return "ray " + std::to_string(w.ray) +
         (w.direction == Direction::kRight ? " right" : " left") + " step " +
         std::to_string(i);
}

std::size_t Steps(const CayleyBall& ball) { return 4 * static_cast<std::size_t>(ball.size()); }

}  // namespace

CheckResult CheckPathWindow(const DoubleRay& ray, const GroupSpec& spec, std::size_t steps) {
  CheckResult res{"path_window", false, ""};
  std::unordered_set<std::string> seen;
  for (Direction d : {Direction::kRight, Direction::kLeft}) {
    std::vector<GroupElement> walk;
    try {
      walk = ray.Walk(spec, d, steps);
    } catch (const Error& e) {
      res.detail = e.what();
      return res;
    }
    for (std::size_t i = d == Direction::kRight ? 0 : 1; i < walk.size(); ++i) {
      const std::string name = FormatElement(spec, walk[i]);
      if (!seen.insert(name).second) {
        res.detail = "vertex " + name + " repeats at step " + std::to_string(i);
        return res;
      }
    }
  }
  res.pass = true;
  res.detail = std::to_string(seen.size()) + " distinct vertices";
  return res;
}

CheckResult CheckCoverDisjoint(const CircleCertificate& cert, const CayleyBall& ball) {
  CheckResult res{"cover_disjoint", false, ""};
  std::vector<Walked> walks;
  try {
    walks = WalkAll(cert, Steps(ball));
  } catch (const Error& e) {
    res.detail = e.what();
    return res;
  }
  std::unordered_set<std::string> seen;
  for (const auto& w : walks) {
    // The base vertex is shared by the two directions of a ray.
    for (std::size_t i = w.direction == Direction::kLeft ? 1 : 0; i < w.names.size(); ++i) {
      if (!seen.insert(w.names[i]).second) {
        res.detail = "vertex " + w.names[i] + " visited twice (" + Where(w, i) + ")";
        return res;
      }
    }
  }
  for (int v = 0; v < ball.size(); ++v) {
    if (ball.depth[v] < ball.radius && !seen.count(ball.names[v])) {
      res.detail = "vertex " + ball.names[v] + " is never visited";
      return res;
    }
  }
  res.pass = true;
  res.detail = "every vertex of depth < " + std::to_string(ball.radius) +
               " visited exactly once";
  return res;
}

CheckResult CheckTails(const CircleCertificate& cert, const CayleyBall& ball,
                       std::span<const int> slab) {
  CheckResult res{"tails", false, ""};
  std::vector<Walked> walks;
  try {
    walks = WalkAll(cert, Steps(ball));
  } catch (const Error& e) {
    res.detail = e.what();
    return res;
  }
  if (cert.one_ended || cert.rays.size() == 1) {
    for (const auto& w : walks) {
      const bool exits = std::any_of(w.names.begin(), w.names.end(), [&](const auto& n) {
        return !ball.index.count(n);
      });
      if (!exits) {
        res.detail = Where(w, 0) + " never leaves the ball";
        return res;
      }
    }
    res.pass = true;
    res.detail = "all tails leave the ball";
    return res;
  }
  const std::vector<Component> comps = ComponentsAfterRemoval(ball, slab);
  std::vector<int> comp_of(ball.size(), -1);
  int boundary_components = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (comps[c].touches_boundary) ++boundary_components;
    for (int v : comps[c].vertices) comp_of[v] = static_cast<int>(c);
  }
  if (boundary_components < 2) {
    throw Error(ErrorCode::kNoSeparation,
                "slab leaves " + std::to_string(boundary_components) +
                    " boundary-touching component(s)");
  }
  std::vector<int> tail_component(walks.size(), -1);
  for (std::size_t k = 0; k < walks.size(); ++k) {
    const Walked& w = walks[k];
    std::vector<int> trail;
    for (const auto& n : w.names) {
      auto it = ball.index.find(n);
      if (it != ball.index.end() && comp_of[it->second] >= 0) trail.push_back(comp_of[it->second]);
    }
    if (trail.empty()) {
      res.detail = Where(w, 0) + " never leaves the slab inside the ball";
      return res;
    }
    const std::size_t tail = std::max<std::size_t>(1, (trail.size() + 3) / 4);
    const int c = trail.back();
    for (std::size_t i = trail.size() - tail; i < trail.size(); ++i) {
      if (trail[i] != c) {
        res.detail = Where(w, 0) + " tail wanders between components";
        return res;
      }
    }
    if (!comps[c].touches_boundary) {
      res.detail = Where(w, 0) + " tail ends in a bounded component";
      return res;
    }
    tail_component[k] = c;
  }
  for (std::size_t k = 0; k + 1 < walks.size(); k += 2) {
    if (tail_component[k] == tail_component[k + 1]) {
      res.detail = "both tails of ray " + std::to_string(walks[k].ray) +
                   " lie in the same component";
      return res;
    }
  }
  res.pass = true;
  res.detail = "each ray has its two tails in different components";
  return res;
}

std::vector<EdgeCut> CheckCutParity(std::span<const int> d, const SimpleGraph& graph,
                                    std::span<const EdgeCut> cuts, unsigned jobs) {
  std::vector<char> in_d(graph.edges.size(), 0);
  std::vector<char> touched(graph.size(), 0);
  for (int e : d) {
    in_d[e] = 1;
    touched[graph.edges[e].first] = touched[graph.edges[e].second] = 1;
  }
  const int touched_total = static_cast<int>(std::count(touched.begin(), touched.end(), 1));
  std::vector<char> bad(cuts.size(), 0);
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < cuts.size(); i += step) {
      const EdgeCut& cut = cuts[i];
      int meet = 0;
      for (int e : cut.edges) meet += in_d[e];
      int inside = 0;
      for (int v : cut.side) inside += touched[v];
      const bool both_sides = inside > 0 && inside < touched_total;
      bad[i] = meet % 2 != 0 || (both_sides && meet < 2);
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j, jobs);
    for (auto& t : pool) t.join();
  }
  std::vector<EdgeCut> out;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (bad[i]) out.push_back(cuts[i]);
  }
  return out;
}

std::vector<int> InducedEdges(const CircleCertificate& cert, const CayleyBall& ball) {
  std::set<int> edges;
  for (const auto& w : WalkAll(cert, Steps(ball))) {
    for (std::size_t i = 0; i + 1 < w.names.size(); ++i) {
      auto a = ball.index.find(w.names[i]);
      auto b = ball.index.find(w.names[i + 1]);
      if (a == ball.index.end() || b == ball.index.end()) continue;
      if (auto e = ball.graph.EdgeId(a->second, b->second)) edges.insert(*e);
    }
  }
  return {edges.begin(), edges.end()};
}

VerificationReport VerifyCertificate(const CircleCertificate& cert, int radius,
                                     const VerifyOptions& options) {
  if (radius < 4) throw Error(ErrorCode::kInvalidArgument, "verification radius must be >= 4");
  VerificationReport report;
  report.radius = radius;
  const CayleyBall ball = BuildBall(cert.spec, radius);

  const std::size_t expected = cert.one_ended ? 1 : 2;
  CheckResult shape{"shape", cert.rays.size() == expected,
                    std::to_string(cert.rays.size()) + " ray(s), expected " +
                        std::to_string(expected)};
  report.checks.push_back(shape);
  if (shape.pass) {
    for (std::size_t r = 0; r < cert.rays.size(); ++r) {
      CheckResult c = CheckPathWindow(cert.rays[r], cert.spec, Steps(ball));
      c.name += "[" + std::to_string(r) + "]";
      report.checks.push_back(std::move(c));
    }
    report.checks.push_back(CheckCoverDisjoint(cert, ball));

    std::vector<int> slab;
    const int half = (radius + 1) / 2;
    for (int v = 0; v < ball.size(); ++v) {
      if (ball.depth[v] <= half) slab.push_back(v);
    }
    try {
      report.checks.push_back(CheckTails(cert, ball, slab));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoSeparation) throw;
      report.checks.push_back({"tails", false, std::string("NoSeparation: ") + e.what()});
    }

    const int cut_radius = std::min(radius, options.cut_radius);
    const CayleyBall small = cut_radius == radius ? ball : BuildBall(cert.spec, cut_radius);
    const std::vector<int> d = InducedEdges(cert, small);
    const std::vector<EdgeCut> cuts = EnumerateSmallEdgeCuts(small.graph, options.cut_size);
    const std::vector<EdgeCut> bad = CheckCutParity(d, small.graph, cuts, options.jobs);
    report.checks.push_back(
        {"cut_parity", bad.empty(),
         std::to_string(bad.size()) + " of " + std::to_string(cuts.size()) +
             " cuts of size <= " + std::to_string(options.cut_size) + " violated on ball(" +
             std::to_string(cut_radius) + ")"});
  }
  report.verdict = Verdict::kConsistentUpToRadius;
  for (const auto& c : report.checks) {
    if (!c.pass) {
      report.verdict = Verdict::kRefuted;
      report.failed_check = c.name;
      break;
    }
  }
  return report;
}

}  // namespace hamcircle
