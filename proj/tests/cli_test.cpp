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
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hamcircle/catalog.hpp"
#include "hamcircle/certificate_io.hpp"
#include "hamcircle_cli/cli.hpp"

namespace hamcircle::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string& name) {
  return std::string(HAMCIRCLE_TEST_DATA) + "/" + name + ".json";
}

std::string Temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hamcircle_cli_test_" + name)).string();
}

std::string Slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

TEST(Cli, EndsOfPlane) {
  const Outcome o = RunCli({"ends", "--spec", Data("integers_squared")});
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(Json::parse(o.out), Json::parse(R"({"ends": 1})"));
  EXPECT_EQ(Json::parse(RunCli({"ends", "--spec", Data("counterexample")}).out).at("ends"), "infinite");
}

TEST(Cli, CheckSpec) {
  EXPECT_EQ(RunCli({"check-spec", "--spec", Data("zigzag_amalgam")}).code, kOk);
  const std::string bad = Temp("bad_spec.json");
  std::ofstream(bad) << R"({"family": "abelian", "rank": 1, "torsion": [], "generators": [[1]]})";
  const Outcome o = RunCli({"check-spec", "--spec", bad});
  EXPECT_EQ(o.code, kUsage);
  EXPECT_NE(o.out.find("GeneratorsNotSymmetric"), std::string::npos);
  EXPECT_EQ(RunCli({"hamilton", "--spec", bad}).code, kUsage);
}

TEST(Cli, PathHasNoCircle) {
  const Outcome o = RunCli({"hamilton", "--spec", Data("integers_1")});
  EXPECT_EQ(o.code, kRefuted);
  EXPECT_NE(o.out.find("NoHamiltonCircle"), std::string::npos);
  EXPECT_NE(o.err.find("NoHamiltonCircle"), std::string::npos);
}

TEST(Cli, HamiltonThenVerify) {
  for (const char* name : {"integers_1_2", "integers_x_z2", "zigzag_amalgam", "dedekind_amalgam",
                           "semidirect_case1", "semidirect_case2"}) {
    const std::string cert = Temp(std::string(name) + ".cert.json");
    const Outcome made = RunCli({"hamilton", "--spec", Data(name), "--cert", cert});
    ASSERT_EQ(made.code, kOk) << name << made.err;
    EXPECT_EQ(Slurp(cert), made.out);
    // Deterministic output.
    EXPECT_EQ(RunCli({"hamilton", "--spec", Data(name)}).out, made.out);
    // Byte-identical re-serialisation.
    const GroupSpec spec = SpecFromJson(ReadJsonFile(Data(name)));
    EXPECT_EQ(CertificateToJson(CertificateFromJson(spec, Json::parse(made.out))).dump() + "\n", made.out);
    const Outcome checked = RunCli({"verify", "--spec", Data(name), "--cert", cert, "--radius", "12"});
    EXPECT_EQ(checked.code, kOk) << name << checked.out;
    EXPECT_EQ(Json::parse(checked.out).at("verdict"), "ConsistentUpToRadius");
  }
}

TEST(Cli, VerifyRefutesBrokenCertificate) {
  const std::string cert = Temp("broken.cert.json");
  Json j = Json::parse(RunCli({"hamilton", "--spec", Data("integers_1_2")}).out);
  j["rays"][1] = j["rays"][0];
  std::ofstream(cert) << j.dump();
  const Outcome o = RunCli({"verify", "--spec", Data("integers_1_2"), "--cert", cert, "--radius", "10"});
  EXPECT_EQ(o.code, kRefuted);
  EXPECT_TRUE(Json::parse(o.out).at("verdict").contains("Refuted"));
}

TEST(Cli, FiniteGroups) {
  const Outcome o = RunCli({"hamilton", "--spec", Data("quaternion")});
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(Json::parse(o.out).at("word").size(), 8u);
  EXPECT_EQ(RunCli({"finite-cycle", "--spec", Data("quaternion")}).code, kOk);
  EXPECT_EQ(RunCli({"finite-cycle", "--spec", Data("integers_1_2")}).code, kUsage);
}

TEST(Cli, Unsupported) {
  const Outcome o = RunCli({"hamilton", "--spec", Data("counterexample")});
  EXPECT_EQ(o.code, kUnsupported);
  EXPECT_NE(o.out.find("Unsupported"), std::string::npos);
}

TEST(Cli, Counterexample) {
  const std::string dot = Temp("control.dot");
  const Outcome o = RunCli({"counterexample", "--radius", "3"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(Json::parse(o.out).at("status"), "Unsat");
  const Outcome control =
      RunCli({"counterexample", "--spec", Data("integers_1_2"), "--radius", "6", "--dot", dot});
  EXPECT_EQ(control.code, kRefuted);
  EXPECT_EQ(Json::parse(control.out).at("status"), "SatFound");
  EXPECT_NE(Slurp(dot).find("color=red"), std::string::npos);
}

TEST(Cli, Toughness) {
  const Outcome o = RunCli({"toughness", "--radius", "4", "--max-w", "2"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_LE(Json::parse(o.out).at("worst").get<int>(), 0);
  EXPECT_EQ(RunCli({"toughness", "--spec", Data("integers_1"), "--radius", "4", "--max-w", "1"}).code,
            kRefuted);
}

TEST(Cli, BallAndDot) {
  const std::string dot = Temp("ball.dot");
  const Outcome o = RunCli({"ball", "--spec", Data("integers_1"), "--radius", "3", "--dot", dot});
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(Json::parse(o.out).at("vertices").size(), 7u);
  EXPECT_EQ(Slurp(dot).rfind("graph {", 0), 0u);

  const std::string cert = Temp("dot.cert.json");
  RunCli({"hamilton", "--spec", Data("integers_1_2"), "--cert", cert});
  const Outcome e = RunCli({"export-dot", "--spec", Data("integers_1_2"), "--radius", "4", "--cert", cert});
  EXPECT_EQ(e.code, kOk);
  EXPECT_NE(e.out.find("color=red"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(RunCli({}).code, kUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(RunCli({"hamilton"}).code, kUsage);
  EXPECT_EQ(RunCli({"verify", "--spec", Data("integers_1_2")}).code, kUsage);
  EXPECT_EQ(RunCli({"ends", "--spec", Temp("missing.json")}).code, kUsage);
  EXPECT_EQ(RunCli({"counterexample", "--cut-size", "1"}).code, kUsage);
  EXPECT_EQ(RunCli({"ends", "--spec", Data("integers_1"), "--seed", "5"}).code, kOk);
  EXPECT_EQ(RunCli({"--help"}).code, kOk);
}

}  // namespace
}  // namespace hamcircle::cli
