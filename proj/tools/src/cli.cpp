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
#include "hamcircle_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hamcircle/catalog.hpp"
#include "hamcircle/cayley.hpp"
#include "hamcircle/certificate_io.hpp"
#include "hamcircle/counterexample.hpp"
#include "hamcircle/error.hpp"
#include "hamcircle/group.hpp"
#include "hamcircle/hamilton.hpp"
#include "hamcircle/spec_io.hpp"
#include "hamcircle/verify.hpp"

namespace hamcircle::cli {
namespace {

struct Options {
  std::string spec_path;
  std::string cert_path;
  std::string dot_path;
  std::optional<int> radius;
  int cut_size = 6;
  int max_w = 4;
  unsigned jobs = 1;
  std::uint64_t seed = 0;  // reserved
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int ExitFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoHamiltonCircle:
    case ErrorCode::kNoHamiltonCycleFound:
    case ErrorCode::kTooSmall:
      return kRefuted;
    case ErrorCode::kParse:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kSpecMismatch:
    case ErrorCode::kUnknownGenerator:
      return kUsage;
    default:
      return kUnsupported;
  }
}

GroupSpec LoadSpec(const Options& o, bool required = true) {
  if (o.spec_path.empty()) {
    if (required) throw UsageError("--spec is required");
    return BuildCounterexampleSpec();
  }
  GroupSpec spec = SpecFromJson(ReadJsonFile(o.spec_path));
  const auto issues = CheckSpec(spec);
  if (HasErrors(issues)) {
    std::ostringstream msg;
    msg << "invalid spec: " << IssuesToJson(issues).dump();
    throw UsageError(msg.str());
  }
  return spec;
}

int Radius(const Options& o, int fallback) {
  const int r = o.radius.value_or(fallback);
  if (r < 0) throw UsageError("--radius must be non-negative");
  return r;
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

Json EndsJson(Ends ends) {
  switch (ends) {
    case Ends::kZero: return 0;
    case Ends::kOne: return 1;
    case Ends::kTwo: return 2;
    case Ends::kInfinite: return "infinite";
  }
  return nullptr;
}

int CheckSpecCmd(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.spec_path.empty()) throw UsageError("--spec is required");
  const GroupSpec spec = SpecFromJson(ReadJsonFile(o.spec_path));
  const auto issues = CheckSpec(spec);
  out << IssuesToJson(issues).dump(2) << "\n";
  err << (HasErrors(issues) ? "spec has errors\n" : "spec ok\n");
  return HasErrors(issues) ? kUsage : kOk;
}

int EndsCmd(const Options& o, std::ostream& out, std::ostream& err) {
  const Ends ends = EndsCount(LoadSpec(o));
  out << Json{{"ends", EndsJson(ends)}}.dump() << "\n";
  err << "ends: " << EndsName(ends) << "\n";
  return kOk;
}

int BallCmd(const Options& o, std::ostream& out, std::ostream& err) {
  const CayleyBall ball = BuildBall(LoadSpec(o), Radius(o, 2));
  out << BallToJson(ball).dump() << "\n";
  if (!o.dot_path.empty()) WriteFile(o.dot_path, ExportDot(ball));
  err << "ball of radius " << ball.radius << ": " << ball.size() << " vertices, "
      << ball.graph.edges.size() << " edges\n";
  return kOk;
}

int FiniteCycleCmd(const Options& o, std::ostream& out, std::ostream& err) {
  const GroupSpec spec = LoadSpec(o);
  if (spec.kind() != Family::kFiniteTable) throw UsageError("finite-cycle needs a finite_table spec");
  const HamiltonCycle c = FiniteHamiltonCycle(spec.finite());
  out << HamiltonCycleToJson(c).dump() << "\n";
  err << "Hamilton cycle of length " << c.word.size() << "\n";
  return kOk;
}

CircleCertificate Construct(const GroupSpec& spec, Ends ends) {
  switch (spec.kind()) {
    case Family::kAbelian:
      return AbelianCircle(spec);
    case Family::kSemidirect:
      return SemidirectCircle(spec);
    case Family::kAmalgam:
      if (ends != Ends::kTwo) {
        throw Error(ErrorCode::kUnsupported, "no construction for amalgams with infinitely many ends");
      }
      try {
        return DedekindAmalgamCircle(spec);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNotDedekind) throw;
        return ZigZagCircle(spec, FiniteHamiltonCycle(spec.amalgam().left));
      }
    case Family::kFiniteTable:
      break;
  }
  throw Error(ErrorCode::kUnsupported, "unhandled family");
}

int HamiltonCmd(const Options& o, std::ostream& out, std::ostream& err) {
  const GroupSpec spec = LoadSpec(o);
  const Ends ends = EndsCount(spec);
  if (ends == Ends::kZero) {
    if (spec.kind() != Family::kFiniteTable) {
      throw Error(ErrorCode::kUnsupported, "finite groups must be given as a table");
    }
    const HamiltonCycle c = FiniteHamiltonCycle(spec.finite());
    out << HamiltonCycleToJson(c).dump() << "\n";
    err << "finite group: Hamilton cycle of length " << c.word.size() << "\n";
    return kOk;
  }
  const CircleCertificate cert = Construct(spec, ends);
  const std::string text = CertificateToJson(cert).dump();
  out << text << "\n";
  if (!o.cert_path.empty()) WriteFile(o.cert_path, text + "\n");
  err << ConstructionName(cert.construction) << " certificate with " << cert.rays.size()
      << (cert.rays.size() == 1 ? " ray" : " rays") << "\n";
  return kOk;
}

int VerifyCmd(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.cert_path.empty()) throw UsageError("--cert is required");
  const GroupSpec spec = LoadSpec(o);
  const CircleCertificate cert = CertificateFromJson(spec, ReadJsonFile(o.cert_path));
  VerifyOptions vo;
  vo.cut_size = o.cut_size;
  vo.jobs = o.jobs;
  const VerificationReport report = VerifyCertificate(cert, Radius(o, 20), vo);
  out << report.ToJson().dump(2) << "\n";
  if (report.consistent()) {
    err << "consistent up to radius " << report.radius << "\n";
    return kOk;
  }
  err << "refuted by " << report.failed_check << "\n";
  return kRefuted;
}

int CounterexampleCmd(const Options& o, std::ostream& out, std::ostream& err) {
  const GroupSpec spec = LoadSpec(o, false);
  const CayleyBall ball = BuildBall(spec, Radius(o, 3));
  const ObstructionResult result = ObstructionSearch(ball, o.cut_size, o.jobs);
  out << result.ToJson(ball).dump(2) << "\n";
  if (!o.dot_path.empty()) WriteFile(o.dot_path, ExportDot(ball, result.edges));
  const bool unsat = result.status == ObstructionStatus::kUnsat;
  err << (unsat ? "Unsat" : "SatFound") << " at radius " << ball.radius << " with "
      << result.cuts_checked << " cuts of size <= " << o.cut_size << ", "
      << result.nodes_explored << " nodes\n";
  return unsat ? kOk : kRefuted;
}

int ToughnessCmd(const Options& o, std::ostream& out, std::ostream& err) {
  const GroupSpec spec = LoadSpec(o, false);
  const CayleyBall ball = BuildBall(spec, Radius(o, 5));
  const ToughnessReport report = ToughnessCheck(ball, o.max_w, o.jobs);
  out << report.ToJson(ball.graph, &ball.names).dump(2) << "\n";
  err << "max(components - |W|) = " << report.worst << " over " << report.sets_examined
      << " sets\n";
  return report.worst <= 0 ? kOk : kRefuted;
}

int ExportDotCmd(const Options& o, std::ostream& out, std::ostream& err) {
  const GroupSpec spec = LoadSpec(o);
  const CayleyBall ball = BuildBall(spec, Radius(o, 3));
  std::vector<int> highlight;
  if (!o.cert_path.empty()) {
    highlight = InducedEdges(CertificateFromJson(spec, ReadJsonFile(o.cert_path)), ball);
  }
  const std::string dot = ExportDot(ball, highlight);
  if (o.dot_path.empty()) {
    out << dot;
  } else {
    WriteFile(o.dot_path, dot);
  }
  err << "exported " << ball.size() << " vertices, " << highlight.size() << " highlighted edges\n";
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamilton circles in Cayley graphs", "hamcircle"};
  app.require_subcommand(1);
  Options o;
  using Handler = std::function<int(const Options&, std::ostream&, std::ostream&)>;
  std::vector<std::pair<CLI::App*, Handler>> verbs;
  auto verb = [&](const char* name, const char* help, Handler fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--spec", o.spec_path, "GroupSpec JSON");
    sub->add_option("--radius", o.radius, "ball radius");
    sub->add_option("--cert", o.cert_path, "certificate JSON");
    sub->add_option("--cut-size", o.cut_size, "largest edge cut considered")->check(CLI::Range(2, 64));
    sub->add_option("--max-w", o.max_w, "largest removed vertex set")->check(CLI::Range(1, 64));
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--dot", o.dot_path, "DOT output path");
    sub->add_option("--seed", o.seed, "reserved; all commands are deterministic");
    verbs.emplace_back(sub, std::move(fn));
  };
  verb("check-spec", "validate a group spec", CheckSpecCmd);
  verb("ends", "number of ends of the group", EndsCmd);
  verb("ball", "ball of the Cayley graph", BallCmd);
  verb("finite-cycle", "Hamilton cycle of a finite Cayley graph", FiniteCycleCmd);
  verb("hamilton", "construct a Hamilton circle certificate", HamiltonCmd);
  verb("verify", "verify a certificate up to a radius", VerifyCmd);
  verb("counterexample", "bounded obstruction search for a Hamilton circle", CounterexampleCmd);
  verb("toughness", "exhaustive toughness check on a ball", ToughnessCmd);
  verb("export-dot", "DOT export of a ball, optionally with a certificate", ExportDotCmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    for (auto& [sub, fn] : verbs) {
      if (sub->parsed()) return fn(o, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    out << Json{{"error", ErrorCodeName(e.code())}, {"detail", e.what()}}.dump() << "\n";
    err << e.what() << "\n";
    return ExitFor(e.code());
  } catch (const Json::exception& e) {
    err << "usage error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace hamcircle::cli
