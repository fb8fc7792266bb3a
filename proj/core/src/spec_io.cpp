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

#include "hamcircle/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hamcircle/catalog.hpp"
#include "hamcircle/lattice.hpp"

namespace hamcircle {
namespace {

[[noreturn]] void ParseError(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

// Sorts "s2" before "s10".
bool LabelLess(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    long long n = i < s.size() ? std::stoll(s.substr(i)) : -1;
    return std::make_pair(s.substr(0, i), n);
  };
  return split(a) < split(b);
}

}  // namespace

FiniteGroupTable TableFromJson(const Json& j) {
  try {
    if (j.contains("named")) {
      const auto name = j.at("named").get<std::string>();
      if (name == "Q8") return catalog::Quaternion();
      if (name == "S3") return catalog::Symmetric3();
      ParseError("unknown named group " + name);
    }
    if (j.contains("cyclic_product")) {
      const auto orders = j.at("cyclic_product").get<std::vector<int>>();
      for (int d : orders) {
        if (d < 1) ParseError("cyclic order must be positive");
      }
      FiniteGroupTable t = CyclicProductTable(orders);
      if (j.contains("generators")) {
        for (const auto& g : j.at("generators")) {
          auto coords = g.is_array() ? g.get<std::vector<int>>() : std::vector<int>{g.get<int>()};
          if (coords.size() != orders.size()) ParseError("generator has wrong arity");
          t.generators.push_back(CyclicProductIndex(orders, coords));
        }
      }
      return t;
    }
    auto rows = Field(j, "table").get<std::vector<std::vector<int>>>();
    std::vector<int> gens;
    if (j.contains("generators")) gens = j.at("generators").get<std::vector<int>>();
    return FiniteGroupTable::FromRows(rows, std::move(gens));
  } catch (const Json::exception& e) {
    ParseError(e.what());
  }
}

Json TableToJson(const FiniteGroupTable& t) {
  Json rows = Json::array();
  for (int a = 0; a < t.order; ++a) {
    Json row = Json::array();
    for (int b = 0; b < t.order; ++b) row.push_back(t.mul(a, b));
    rows.push_back(std::move(row));
  }
  return Json{{"table", std::move(rows)}, {"generators", t.generators}};
}

GroupElement ElementFromJson(const GroupSpec& spec, const Json& j) {
  try {
    switch (spec.kind()) {
      case Family::kFiniteTable: {
        const int i = j.get<int>();
        if (i < 0 || i >= spec.finite().order) ParseError("element index out of range");
        return TableIndex{i};
      }
      case Family::kAbelian: {
        auto v = j.get<AbelianVec>();
        if (v.size() != spec.abelian().dimension()) ParseError("abelian element has wrong dimension");
        return NormalizeAbelian(spec.abelian(), std::move(v));
      }
      case Family::kAmalgam: {
        const auto& a = spec.amalgam();
        if (j.contains("side")) {
          const auto side_name = j.at("side").get<std::string>();
          const Side side = side_name == "left" ? Side::kLeft : Side::kRight;
          if (side_name != "left" && side_name != "right") ParseError("bad side " + side_name);
          const int index = j.at("index").get<int>();
          if (index < 0 || index >= a.table(side).order) ParseError("factor index out of range");
          return AmalgamFromFactor(a, side, index);
        }
        // Renormalize so that any valid (head, syllables) input is canonical.
        AmalgamElement x{Field(j, "head").get<int>(), {}};
        if (!a.h_left.contains(x.head)) ParseError("head must lie in the amalgamated subgroup");
        AmalgamElement result{a.left.identity, {}};
        result = AmalgamMultiply(a, result, AmalgamFromFactor(a, Side::kLeft, x.head));
        for (const auto& s : Field(j, "syllables")) {
          const auto side_name = s.at(0).get<std::string>();
          const Side side = side_name == "L" ? Side::kLeft : Side::kRight;
          if (side_name != "L" && side_name != "R") ParseError("bad syllable side " + side_name);
          const int rep = s.at(1).get<int>();
          if (rep < 0 || rep >= a.table(side).order) ParseError("syllable out of range");
          result = AmalgamMultiply(a, result, AmalgamFromFactor(a, side, rep));
        }
        return result;
      }
      case Family::kSemidirect: {
        const int h = Field(j, "h").get<int>();
        if (h < 0 || h >= spec.semidirect().base.order) ParseError("base index out of range");
        return SemidirectPair{h, Field(j, "k").get<std::int64_t>()};
      }
    }
  } catch (const Json::exception& e) {
    ParseError(e.what());
  }
  ParseError("unknown family");
}

Json ElementToJson(const GroupSpec& spec, const GroupElement& g) {
  switch (spec.kind()) {
    case Family::kFiniteTable: return std::get<TableIndex>(g).index;
    case Family::kAbelian: return std::get<AbelianVec>(g);
    case Family::kAmalgam: {
      const auto& x = std::get<AmalgamElement>(g);
      Json syl = Json::array();
      for (const auto& s : x.syllables) {
        syl.push_back(Json::array({s.side == Side::kLeft ? "L" : "R", s.rep}));
      }
      return Json{{"head", x.head}, {"syllables", std::move(syl)}};
    }
    case Family::kSemidirect: {
      const auto& x = std::get<SemidirectPair>(g);
      return Json{{"h", x.h}, {"k", x.k}};
    }
  }
  return nullptr;
}

GroupSpec SpecFromJson(const Json& j) {
  GroupSpec spec;
  try {
    const auto family = Field(j, "family").get<std::string>();
    if (family == "finite_table") {
      spec = MakeFiniteSpec(TableFromJson(j));
    } else if (family == "abelian") {
      AbelianSpec a;
      a.rank = Field(j, "rank").get<int>();
      if (a.rank < 0) ParseError("rank must be non-negative");
      if (j.contains("torsion")) a.torsion = j.at("torsion").get<std::vector<std::int64_t>>();
      for (auto d : a.torsion) {
        if (d < 1) ParseError("torsion orders must be positive");
      }
      a.generators = Field(j, "generators").get<std::vector<AbelianVec>>();
      spec = MakeAbelianSpec(std::move(a));
    } else if (family == "amalgam") {
      AmalgamSpec a;
      a.left = TableFromJson(Field(j, "left"));
      a.right = TableFromJson(Field(j, "right"));
      auto hl = Field(j, "h_left").get<std::vector<int>>();
      auto hr = Field(j, "h_right").get<std::vector<int>>();
      std::sort(hl.begin(), hl.end());
      std::sort(hr.begin(), hr.end());
      a.h_left = SubgroupHandle{hl};
      a.h_right = SubgroupHandle{hr};
      a.iso.assign(a.left.order, -1);
      for (const auto& pair : Field(j, "iso")) {
        const int l = pair.at(0).get<int>();
        const int r = pair.at(1).get<int>();
        if (l < 0 || l >= a.left.order || r < 0 || r >= a.right.order) {
          ParseError("iso entry out of range");
        }
        a.iso[l] = r;
      }
      spec = MakeAmalgamSpec(std::move(a));
    } else if (family == "semidirect") {
      SemidirectSpec s;
      s.base = TableFromJson(Field(j, "base"));
      s.automorphism = Field(j, "automorphism").get<std::vector<int>>();
      s.z_generators = Field(j, "z_generators").get<std::vector<std::int64_t>>();
      spec = MakeSemidirectSpec(std::move(s));
    } else {
      ParseError("unknown family \"" + family + "\"");
    }
    if (j.contains("labels")) {
      std::vector<std::string> names;
      for (const auto& [name, _] : j.at("labels").items()) names.push_back(name);
      std::sort(names.begin(), names.end(), LabelLess);
      std::vector<Generator> gens;
      for (const auto& name : names) {
        gens.push_back(Generator{name, ElementFromJson(spec, j.at("labels").at(name))});
      }
      spec.generators = std::move(gens);
    }
  } catch (const Json::exception& e) {
    ParseError(e.what());
  }
  return spec;
}

Json SpecToJson(const GroupSpec& spec) {
  Json j;
  switch (spec.kind()) {
    case Family::kFiniteTable:
      j = TableToJson(spec.finite());
      j["family"] = "finite_table";
      break;
    case Family::kAbelian: {
      const auto& a = spec.abelian();
      j = Json{{"family", "abelian"}, {"rank", a.rank}, {"torsion", a.torsion},
               {"generators", a.generators}};
      break;
    }
    case Family::kAmalgam: {
      const auto& a = spec.amalgam();
      Json iso = Json::array();
      for (int m : a.h_left.members) iso.push_back(Json::array({m, a.iso[m]}));
      j = Json{{"family", "amalgam"},
               {"left", TableToJson(a.left)},
               {"right", TableToJson(a.right)},
               {"h_left", a.h_left.members},
               {"h_right", a.h_right.members},
               {"iso", std::move(iso)}};
      break;
    }
    case Family::kSemidirect: {
      const auto& s = spec.semidirect();
      j = Json{{"family", "semidirect"},
               {"base", TableToJson(s.base)},
               {"automorphism", s.automorphism},
               {"z_generators", s.z_generators}};
      break;
    }
  }
  Json labels = Json::object();
  for (const auto& g : spec.generators) labels[g.name] = ElementToJson(spec, g.value);
  j["labels"] = std::move(labels);
  return j;
}

Json IssuesToJson(const std::vector<SpecIssue>& issues) {
  Json out = Json::array();
  for (const auto& i : issues) {
    out.push_back(Json{{"code", i.code},
                       {"severity", i.severity == Severity::kError ? "error" : "warning"},
                       {"detail", i.detail}});
  }
  return out;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    ParseError(path + ": " + e.what());
  }
}

}  // namespace hamcircle
