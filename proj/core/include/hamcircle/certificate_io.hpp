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

#ifndef HAMCIRCLE_CERTIFICATE_IO_HPP_
#define HAMCIRCLE_CERTIFICATE_IO_HPP_

// Certificate JSON:
//   {"construction": tag, "one_ended": bool,
//    "rays": [{"base": element, "right": stream, "left": stream}, ...]}
// where a stream is {"prefix": [labels], "period": [labels]} or
// {"program": "double_spiral", "params": {...}} and labels are generator
// names.

#include "hamcircle/hamilton.hpp"
#include "hamcircle/spec_io.hpp"

namespace hamcircle {

Json CertificateToJson(const CircleCertificate& cert);
// Throws kParse on malformed input and kUnknownGenerator on unknown labels.
CircleCertificate CertificateFromJson(const GroupSpec& spec, const Json& j);

Json DoubleRayToJson(const GroupSpec& spec, const DoubleRay& ray);
DoubleRay DoubleRayFromJson(const GroupSpec& spec, const Json& j);

Json HamiltonCycleToJson(const HamiltonCycle& c);

}  // namespace hamcircle

#endif  // HAMCIRCLE_CERTIFICATE_IO_HPP_
