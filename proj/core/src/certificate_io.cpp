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

#include "hamcircle/certificate_io.hpp"

namespace hamcircle {

namespace {

Json Labels(const GroupSpec& spec, const std::vector<std::size_t>& labels) {
  Json out = Json::array();
  for (std::size_t l : labels) out.push_back(spec.generators.at(l).name);
  return out;
}

std::size_t ParseLabel(const GroupSpec& spec, const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::kParse, "label must be a string");
  auto l = spec.FindLabel(j.get<std::string>());
  if (!l) throw Error(ErrorCode::kUnknownGenerator, j.get<std::string>());
  return *l;
}

std::vector<std::size_t> ParseLabels(const GroupSpec& spec, const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "label list must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(ParseLabel(spec, x));
  return out;
}

Json StreamToJson(const GroupSpec& spec, const Enumerator& e) {
  if (e.periodic()) {
    return {{"prefix", Labels(spec, e.prefix)}, {"period", Labels(spec, e.period)}};
  }
  const SpiralProgram& p = *e.spiral;
  Json columns = Json::array();
  for (const auto& c : p.columns) {
    columns.push_back({{"up", spec.generators.at(c.up).name},
                       {"down", spec.generators.at(c.down).name},
                       {"height", c.height}});
  }
  return {{"program", "double_spiral"},
          {"params",
           {{"lane", p.left_lane ? "left" : "right"},
            {"x", spec.generators.at(p.x_plus).name},
            {"x_inverse", spec.generators.at(p.x_minus).name},
            {"y", spec.generators.at(p.y_plus).name},
            {"y_inverse", spec.generators.at(p.y_minus).name},
            {"columns", std::move(columns)}}}};
}

Enumerator StreamFromJson(const GroupSpec& spec, const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "stream must be an object");
  if (j.contains("program")) {
    if (j.at("program") != "double_spiral") {
      throw Error(ErrorCode::kParse, "unknown program " + j.at("program").dump());
    }
    const Json& p = j.at("params");
    SpiralProgram prog;
    const std::string lane = p.at("lane").get<std::string>();
    if (lane != "left" && lane != "right") throw Error(ErrorCode::kParse, "bad lane " + lane);
    prog.left_lane = lane == "left";
    prog.x_plus = ParseLabel(spec, p.at("x"));
    prog.x_minus = ParseLabel(spec, p.at("x_inverse"));
    prog.y_plus = ParseLabel(spec, p.at("y"));
    prog.y_minus = ParseLabel(spec, p.at("y_inverse"));
    for (const auto& c : p.value("columns", Json::array())) {
      const int h = c.at("height").get<int>();
      if (h < 0) throw Error(ErrorCode::kParse, "negative column height");
      prog.columns.push_back({ParseLabel(spec, c.at("up")), ParseLabel(spec, c.at("down")), h});
    }
    Enumerator e;
    e.spiral = prog;
    return e;
  }
  auto period = ParseLabels(spec, j.at("period"));
  if (period.empty()) throw Error(ErrorCode::kParse, "period must be nonempty");
  return Enumerator::Periodic(ParseLabels(spec, j.value("prefix", Json::array())),
                              std::move(period));
}

}  // namespace

Json DoubleRayToJson(const GroupSpec& spec, const DoubleRay& ray) {
  return {{"base", ElementToJson(spec, ray.base)},
          {"right", StreamToJson(spec, ray.right)},
          {"left", StreamToJson(spec, ray.left)}};
}

DoubleRay DoubleRayFromJson(const GroupSpec& spec, const Json& j) {
  try {
    return DoubleRay{ElementFromJson(spec, j.at("base")), StreamFromJson(spec, j.at("right")),
                     StreamFromJson(spec, j.at("left"))};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

Json CertificateToJson(const CircleCertificate& cert) {
  Json rays = Json::array();
  for (const auto& r : cert.rays) rays.push_back(DoubleRayToJson(cert.spec, r));
  return {{"construction", ConstructionName(cert.construction)},
          {"rays", std::move(rays)},
          {"one_ended", cert.one_ended}};
}

CircleCertificate CertificateFromJson(const GroupSpec& spec, const Json& j) {
  try {
    CircleCertificate cert;
    cert.spec = spec;
    auto tag = ParseConstruction(j.at("construction").get<std::string>());
    if (!tag) throw Error(ErrorCode::kParse, "unknown construction " + j.at("construction").dump());
    cert.construction = *tag;
    cert.one_ended = j.value("one_ended", false);
    for (const auto& r : j.at("rays")) cert.rays.push_back(DoubleRayFromJson(spec, r));
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

Json HamiltonCycleToJson(const HamiltonCycle& c) {
  return {{"base", c.base}, {"word", c.word}};
}

}  // namespace hamcircle
