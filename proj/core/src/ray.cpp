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

#include "hamcircle/ray.hpp"

#include <array>

namespace hamcircle {

Enumerator Enumerator::Periodic(std::vector<std::size_t> prefix,
                                std::vector<std::size_t> period) {
  if (period.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "enumerator period must be nonempty");
  }
  Enumerator e;
  e.prefix = std::move(prefix);
  e.period = std::move(period);
  return e;
}

std::vector<std::size_t> LiftLabels(std::span<const std::size_t> labels,
                                    const ColumnLift& lift, Direction d) {
  std::vector<std::size_t> out;
  out.reserve(labels.size() * (lift.height + 1));
  for (std::size_t n = 0; n < labels.size(); ++n) {
    const std::size_t column = n % 2 == 0 ? lift.up : lift.down;
    if (d == Direction::kLeft) out.push_back(labels[n]);
    out.insert(out.end(), lift.height, column);
    if (d == Direction::kRight) out.push_back(labels[n]);
  }
  return out;
}

Enumerator LiftPeriodic(const Enumerator& e, const ColumnLift& lift, Direction d) {
  if (!e.periodic()) throw Error(ErrorCode::kInvalidArgument, "stream is not periodic");
  const std::size_t a = e.prefix.size();
  const std::size_t len = e.period.size() % 2 == 0 ? e.period.size() : 2 * e.period.size();
  std::vector<std::size_t> unrolled = e.prefix;
  for (std::size_t i = 0; i < len; ++i) unrolled.push_back(e.period[i % e.period.size()]);
  std::vector<std::size_t> lifted = LiftLabels(unrolled, lift, d);
  // Each label became a block of height + 1 labels; prefix parity is kept
  // because the period is unrolled to even length.
  const std::size_t cut = a * (lift.height + 1);
  return Enumerator::Periodic(
      std::vector<std::size_t>(lifted.begin(), lifted.begin() + cut),
      std::vector<std::size_t>(lifted.begin() + cut, lifted.end()));
}

namespace {

using Cell = std::pair<int, int>;

// Fine cell (f, l) of coarse cell (cx, cy) for heading (hx, hy); f = 1 is
// the front row, l = 1 the left column.
Cell Local(int cx, int cy, int hx, int hy, int f, int l) {
  const int x = 4 * cx + 1 + (2 * f - 1) * hx - (2 * l - 1) * hy;
  const int y = 4 * cy + 1 + (2 * f - 1) * hy + (2 * l - 1) * hx;
  return {x / 2, y / 2};
}

std::vector<Cell> SpiralLaneCells(bool left_lane, std::size_t count) {
  std::vector<Cell> cells;
  if (left_lane) {
    cells = {{0, 0}, {0, 1}, {1, 1}};
  } else {
    cells = {{0, 0}, {1, 0}};
  }
  static constexpr std::array<Cell, 4> kHeadings{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  // Coarse square spiral from (0,0): runs 1,1,2,2,3,3,... turning left.
  int cx = 0, cy = 0;
  int dir = 0, run = 1, taken = 0, runs_done = 0;
  auto advance = [&]() {
    if (taken == run) {
      taken = 0;
      dir = (dir + 1) % 4;
      if (++runs_done % 2 == 0) ++run;
    }
    ++taken;
    return dir;
  };
  int heading = advance();
  cx += kHeadings[heading].first;
  cy += kHeadings[heading].second;
  while (cells.size() < count) {
    const int next = advance();
    const auto [hx, hy] = kHeadings[heading];
    if (next == heading) {
      const int l = left_lane ? 1 : 0;
      cells.push_back(Local(cx, cy, hx, hy, 0, l));
      cells.push_back(Local(cx, cy, hx, hy, 1, l));
    } else if (left_lane) {
      cells.push_back(Local(cx, cy, hx, hy, 0, 1));
    } else {
      cells.push_back(Local(cx, cy, hx, hy, 0, 0));
      cells.push_back(Local(cx, cy, hx, hy, 1, 0));
      cells.push_back(Local(cx, cy, hx, hy, 1, 1));
    }
    heading = next;
    cx += kHeadings[heading].first;
    cy += kHeadings[heading].second;
  }
  return cells;
}

}  // namespace

std::vector<std::pair<int, int>> SpiralLaneSteps(bool left_lane, std::size_t n) {
  std::vector<Cell> cells = SpiralLaneCells(left_lane, n + 1);
  std::vector<std::pair<int, int>> steps;
  steps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    steps.emplace_back(cells[i + 1].first - cells[i].first,
                       cells[i + 1].second - cells[i].second);
  }
  return steps;
}

std::vector<std::size_t> Enumerator::Take(std::size_t n) const {
  std::vector<std::size_t> out;
  if (periodic()) {
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(i < prefix.size() ? prefix[i]
                                      : period[(i - prefix.size()) % period.size()]);
    }
    return out;
  }
  const SpiralProgram& p = *spiral;
  // Every lift multiplies the length by (height + 1), so the base lane can
  // be shortened accordingly.
  std::size_t base = n;
  for (const auto& lift : p.columns) base = base / (lift.height + 1) + 1;
  for (auto [dx, dy] : SpiralLaneSteps(p.left_lane, base)) {
    out.push_back(dx > 0 ? p.x_plus : dx < 0 ? p.x_minus : dy > 0 ? p.y_plus : p.y_minus);
  }
  const Direction d = p.left_lane ? Direction::kLeft : Direction::kRight;
  for (const auto& lift : p.columns) out = LiftLabels(out, lift, d);
  out.resize(n);
  return out;
}

std::vector<GroupElement> DoubleRay::Walk(const GroupSpec& spec, Direction d,
                                          std::size_t n) const {
  std::vector<GroupElement> out;
  out.reserve(n + 1);
  out.push_back(base);
  for (std::size_t label : stream(d).Take(n)) {
    if (label >= spec.generators.size()) {
      throw Error(ErrorCode::kUnknownGenerator, "label index out of range");
    }
    out.push_back(Multiply(spec, out.back(), spec.generators[label].value));
  }
  return out;
}

GroupElement DoubleRay::Evaluate(const GroupSpec& spec, Direction d,
                                 std::size_t n) const {
  return Walk(spec, d, n).back();
}

}  // namespace hamcircle
