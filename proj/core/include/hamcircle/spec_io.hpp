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

#ifndef HAMCIRCLE_SPEC_IO_HPP_
#define HAMCIRCLE_SPEC_IO_HPP_

// GroupSpec JSON. The top-level object carries "family" (one of
// "finite_table", "abelian", "amalgam", "semidirect"), the family fields,
// and an optional "labels" object mapping "s0", "s1", ... to elements.
//
// A table object is {"table": rows, "generators": [indices]} or
// {"cyclic_product": [d1,...], "generators": [[coords]...]} or
// {"named": "Q8" | "S3"}.
//
// Elements: abelian -> [ints]; finite_table -> int;
// amalgam -> {"head": int, "syllables": [["L"|"R", rep], ...]} or the factor
// shorthand {"side": "left"|"right", "index": int};
// semidirect -> {"h": int, "k": int}.

#include <string>

#include <json.hpp>

#include "hamcircle/group.hpp"

namespace hamcircle {

using Json = nlohmann::json;

GroupSpec SpecFromJson(const Json& j);
Json SpecToJson(const GroupSpec& spec);

GroupElement ElementFromJson(const GroupSpec& spec, const Json& j);
Json ElementToJson(const GroupSpec& spec, const GroupElement& g);

FiniteGroupTable TableFromJson(const Json& j);
Json TableToJson(const FiniteGroupTable& t);

Json IssuesToJson(const std::vector<SpecIssue>& issues);

// Reads a whole file; kParse on I/O or syntax failure.
Json ReadJsonFile(const std::string& path);

}  // namespace hamcircle

#endif  // HAMCIRCLE_SPEC_IO_HPP_
