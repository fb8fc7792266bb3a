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

#ifndef HAMCIRCLE_RAY_HPP_
#define HAMCIRCLE_RAY_HPP_

// Double rays in a Cayley graph, written as a base vertex plus one label
// stream per direction. Labels are indices into GroupSpec::generators.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hamcircle/group.hpp"

namespace hamcircle {

enum class Direction : std::uint8_t { kRight, kLeft };

// A column substitution over a ray: every vertex v of the underlying ray is
// replaced by v, v*up, ..., v*up^height. Rightward streams read
// [U, y1, D, y2, U, ...], leftward streams [l1, U, l2, D, ...] with
// U = up^height and D = down^height.
struct ColumnLift {
  std::size_t up = 0;
  std::size_t down = 0;
  int height = 0;
};

// Two interleaved square spirals on the lattice spanned by two independent
// generators. Each lane is one half of a spanning double ray of that lattice
// starting at the origin.
struct SpiralProgram {
  bool left_lane = false;
  std::size_t x_plus = 0, x_minus = 0, y_plus = 0, y_minus = 0;
  std::vector<ColumnLift> columns;
};

struct Enumerator {
  std::vector<std::size_t> prefix;
  std::vector<std::size_t> period;
  std::optional<SpiralProgram> spiral;  // overrides prefix/period when set

  bool periodic() const { return !spiral.has_value(); }
  // First n labels.
  std::vector<std::size_t> Take(std::size_t n) const;

  static Enumerator Periodic(std::vector<std::size_t> prefix,
                             std::vector<std::size_t> period);
};

struct DoubleRay {
  GroupElement base;
  Enumerator right;
  Enumerator left;

  const Enumerator& stream(Direction d) const {
    return d == Direction::kRight ? right : left;
  }
  // base and the next n vertices in direction d.
  std::vector<GroupElement> Walk(const GroupSpec& spec, Direction d,
                                 std::size_t n) const;
  GroupElement Evaluate(const GroupSpec& spec, Direction d, std::size_t n) const;
};

// Applies a column lift to a finite label sequence.
std::vector<std::size_t> LiftLabels(std::span<const std::size_t> labels,
                                    const ColumnLift& lift, Direction d);
// Applies a column lift to an eventually periodic stream.
Enumerator LiftPeriodic(const Enumerator& e, const ColumnLift& lift, Direction d);

// Unit lattice steps of one spiral lane: (dx, dy) per step, n steps.
std::vector<std::pair<int, int>> SpiralLaneSteps(bool left_lane, std::size_t n);

}  // namespace hamcircle

#endif  // HAMCIRCLE_RAY_HPP_
