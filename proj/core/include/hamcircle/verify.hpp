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

#ifndef HAMCIRCLE_VERIFY_HPP_
#define HAMCIRCLE_VERIFY_HPP_

// Finite-window checks of circle certificates.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamcircle/cayley.hpp"
#include "hamcircle/hamilton.hpp"

namespace hamcircle {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

enum class Verdict : std::uint8_t { kConsistentUpToRadius, kRefuted };

struct VerificationReport {
  int radius = 0;
  std::vector<CheckResult> checks;
  Verdict verdict = Verdict::kRefuted;
  std::string failed_check;  // first failing check when refuted

  bool consistent() const { return verdict == Verdict::kConsistentUpToRadius; }
  nlohmann::json ToJson() const;
};

// Both directions for `steps` labels: labels are generators and the 2n+1
// vertices are pairwise distinct.
CheckResult CheckPathWindow(const DoubleRay& ray, const GroupSpec& spec, std::size_t steps);

// Every vertex of depth < r is visited exactly once over all rays and no
// vertex is visited twice within 4|V| steps per direction.
CheckResult CheckCoverDisjoint(const CircleCertificate& cert, const CayleyBall& ball);

// Two rays: the late part of each direction stays in one boundary-touching
// component of ball minus slab, and the two directions of a ray use
// different components. One ray: both directions leave the ball. Throws
// kNoSeparation when the slab leaves fewer than two boundary components.
CheckResult CheckTails(const CircleCertificate& cert, const CayleyBall& ball,
                       std::span<const int> slab);

// Cuts that D meets an odd number of times, or fewer than twice while D
// touches both sides.
std::vector<EdgeCut> CheckCutParity(std::span<const int> d, const SimpleGraph& graph,
                                    std::span<const EdgeCut> cuts, unsigned jobs = 1);

// Collapsed-graph edges of `ball` traversed by the certificate's rays.
std::vector<int> InducedEdges(const CircleCertificate& cert, const CayleyBall& ball);

struct VerifyOptions {
  int cut_size = 6;
  int cut_radius = 8;  // cuts are enumerated on ball(min(r, cut_radius))
  unsigned jobs = 1;
};

// Requires r >= 4.
VerificationReport VerifyCertificate(const CircleCertificate& cert, int radius,
                                     const VerifyOptions& options = {});

}  // namespace hamcircle

#endif  // HAMCIRCLE_VERIFY_HPP_
