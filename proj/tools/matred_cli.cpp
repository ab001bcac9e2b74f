// Copyright 2026 The Authors.
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

// matred: reduce, verify, generate, chi, listcolor.
//
// Exit codes: 0 success, 1 input error, 2 verification failure, 3 resource
// cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matred/io.hpp"
#include "matred/matred.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerification = 2;
constexpr int kExitResource = 3;

struct Options {
  std::string input;
  std::string partition;
  std::string output;
  std::string algorithm = "auto";
  std::string family;
  std::vector<int> params;
  bool trace = false;
  int jobs = 1;
  std::optional<long long> cap;
  std::optional<long long> sampled;
};

void Emit(const matred::Json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw matred::Error(matred::ErrorCode::kParseError, "cannot write " + path);
  out << doc.dump(2) << "\n";
}

matred::WeakMapOptions VerifyOptions(const Options& o) {
  matred::WeakMapOptions w;
  w.jobs = o.jobs;
  if (o.sampled) {
    w.exhaustive_limit = 0;
    w.trials = *o.sampled;
  }
  return w;
}

std::string AutoAlgorithm(const matred::MatroidDocument& d) {
  if (d.kind == "graphic") return "graphic";
  if (d.kind == "transversal" || d.kind == "partition") return "transversal";
  if (d.kind == "gammoid") return "gammoid";
  if (d.kind == "paving" || d.kind == "projective_plane" || d.kind == "uniform") return "paving";
  return "cocircuit";
}

matred::HyperplaneFamily PavingOf(const matred::MatroidDocument& d) {
  if (d.paving) return *d.paving;
  if (d.kind == "uniform" && d.uniform_rank >= 2) {
    return matred::HyperplaneFamily{d.uniform_rank, d.n, {}};
  }
  throw matred::Error(matred::ErrorCode::kKindMismatch, d.kind + " is not a paving document");
}

matred::BipartiteGraph TransversalOf(const matred::MatroidDocument& d) {
  if (d.bipartite) return *d.bipartite;
  if (d.partition) {
    std::vector<std::pair<int, int>> edges;
    const auto& classes = d.partition->classes();
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
      classes[c].ForEach([&](int e) { edges.emplace_back(e, c); });
    }
    return matred::BipartiteGraph(d.n, static_cast<int>(classes.size()), edges);
  }
  throw matred::Error(matred::ErrorCode::kKindMismatch, d.kind + " is not transversal");
}

int RunReduce(const Options& o) {
  const matred::MatroidDocument d = matred::ParseMatroidDocument(matred::ReadJsonFile(o.input));
  const std::string algorithm = o.algorithm == "auto" ? AutoAlgorithm(d) : o.algorithm;
  matred::ReductionResult r;
  if (algorithm == "transversal") {
    r = matred::ReduceTransversal(TransversalOf(d));
  } else if (algorithm == "graphic") {
    if (!d.graph) throw matred::Error(matred::ErrorCode::kKindMismatch, "graphic needs a graph");
    r = matred::ReduceGraphic(*d.graph);
  } else if (algorithm == "paving") {
    r = matred::ReducePaving(PavingOf(d));
  } else if (algorithm == "paving2") {
    r = matred::ReducePavingRank2(d.matroid);
  } else if (algorithm == "paving3") {
    r = matred::ReducePavingRank3(PavingOf(d));
  } else if (algorithm == "gammoid") {
    if (!d.gammoid) throw matred::Error(matred::ErrorCode::kKindMismatch, "gammoid needs a digraph");
    matred::LocalSearchOptions ls;
    ls.cap = o.cap;
    if (o.trace) {
      ls.trace = [](const matred::TraceRecord& t) {
        std::cerr << matred::TraceJson(t).dump() << "\n";
      };
    }
    r = matred::ReduceGammoid(d.gammoid->digraph, d.gammoid->sources, d.gammoid->sinks, ls);
  } else if (algorithm == "cocircuit") {
    r = matred::ReduceByCocircuits(d.matroid);
  } else {
    throw matred::Error(matred::ErrorCode::kUnsupportedParameter, "unknown algorithm " + algorithm);
  }
  matred::WeakMapOptions w = VerifyOptions(o);
  w.chi_bound = r.claimed_chi_bound;
  const matred::VerificationReport report = matred::IsWeakMap(r.partition, d.matroid, w);
  matred::Json doc = matred::ReductionDocument(r, algorithm);
  doc["report"] = matred::ReportJson(report);
  Emit(doc, o.output);
  const bool ok = report.weak_map && report.certified() && report.bound_satisfied &&
                  (!r.rank_preserving_claimed || report.rank_preserving);
  return ok ? kExitOk : kExitVerification;
}

int RunVerify(const Options& o) {
  const matred::MatroidDocument d = matred::ParseMatroidDocument(matred::ReadJsonFile(o.input));
  const matred::PartitionIntoClasses p = matred::ParsePartition(matred::ReadJsonFile(o.partition));
  if (p.ground_size() != d.n) {
    throw matred::Error(matred::ErrorCode::kGroundSetMismatch,
                        "partition covers " + std::to_string(p.ground_size()) +
                            " elements, matroid has " + std::to_string(d.n));
  }
  const matred::VerificationReport report = matred::IsWeakMap(p, d.matroid, VerifyOptions(o));
  Emit(matred::ReportJson(report), o.output);
  return report.weak_map && report.certified() ? kExitOk : kExitVerification;
}

int Param(const Options& o, std::size_t i, const char* what) {
  if (o.params.size() <= i) {
    throw matred::Error(matred::ErrorCode::kUnsupportedParameter,
                        o.family + " needs parameter " + what);
  }
  return o.params[i];
}

int RunGenerate(const Options& o) {
  matred::Json doc;
  if (o.family == "fano") {
    doc = matred::ProjectivePlaneDocument(matred::MakeProjectivePlane(2));
  } else if (o.family == "pg") {
    doc = matred::ProjectivePlaneDocument(matred::MakeProjectivePlane(Param(o, 0, "q")));
  } else if (o.family == "k") {
    const int n = Param(o, 0, "n");
    if (n < 2) throw matred::Error(matred::ErrorCode::kUnsupportedParameter, "k needs n >= 2");
    doc = matred::GraphicDocument(matred::CompleteGraph(n));
  } else if (o.family == "kiraly") {
    doc = matred::KiralyDocument(matred::MakeKiralyTriple());
  } else if (o.family == "laminar-rank2") {
    doc = matred::LaminarDocument(matred::LaminarRankTwoTight(Param(o, 0, "k")));
  } else if (o.family == "gammoid-tight") {
    doc = matred::GammoidDocument(matred::GammoidTight(Param(o, 0, "k")));
  } else {
    throw matred::Error(matred::ErrorCode::kUnsupportedParameter, "unknown family " + o.family);
  }
  Emit(doc, o.output);
  return kExitOk;
}

int RunChi(const Options& o) {
  const matred::MatroidDocument d = matred::ParseMatroidDocument(matred::ReadJsonFile(o.input));
  const matred::ColoringResult c = matred::ColoringNumber(d.matroid);
  Emit({{"chi", c.k}, {"certificate", c.certificate.ToVectors()}}, o.output);
  return kExitOk;
}

// Accepts a bundle {"matroids": [...], "lists": {...}} or a single matroid
// document carrying "lists".
int RunListColor(const Options& o) {
  const matred::Json doc = matred::ReadJsonFile(o.input);
  std::vector<matred::Matroid> matroids;
  std::vector<std::string> names;
  if (doc.value("kind", "") == "bundle") {
    for (const auto& m : doc.at("matroids")) {
      matroids.push_back(matred::ParseMatroidDocument(m).matroid);
    }
  } else {
    matred::MatroidDocument d = matred::ParseMatroidDocument(doc);
    names = d.names;
    matroids.push_back(d.matroid);
  }
  if (matroids.empty()) throw matred::Error(matred::ErrorCode::kParseError, "no matroids");
  const auto lists = matred::ParseLists(doc, matroids[0].size(), names);
  const matred::ListColoringResult r = matred::ListColorable(matroids, lists);
  matred::Json out = {{"colorable", r.found}};
  out["coloring"] = r.found ? matred::Json(r.coloring) : matred::Json(nullptr);
  Emit(out, o.output);
  return kExitOk;
}

int ExitCodeFor(const matred::Error& e) {
  using matred::ErrorCode;
  if (matred::IsResourceError(e.code())) return kExitResource;
  switch (e.code()) {
    case ErrorCode::kBoundViolated:
    case ErrorCode::kPresentationMismatch:
    case ErrorCode::kNoReachableSmall:
    case ErrorCode::kInvariantBreach:
      return kExitVerification;
    default:
      return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid reductions to partition matroids"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
  };

  CLI::App* reduce = app.add_subcommand("reduce", "Reduce a matroid and verify the result");
  reduce->add_option("input", o.input, "Matroid document")->required();
  reduce->add_option("-a,--algorithm", o.algorithm)
      ->check(CLI::IsMember({"auto", "transversal", "graphic", "paving", "paving2", "paving3",
                             "gammoid", "cocircuit"}));
  reduce->add_flag("--trace", o.trace, "Stream local-search steps to stderr");
  reduce->add_option("--cap", o.cap, "Local-search step cap");
  reduce->add_option("--jobs", o.jobs, "Verifier threads")->check(CLI::PositiveNumber);
  reduce->add_option("--sampled", o.sampled, "Verify by sampling this many transversals");
  add_common(reduce);

  CLI::App* verify = app.add_subcommand("verify", "Check a partition against a matroid");
  verify->add_option("matroid", o.input)->required();
  verify->add_option("partition", o.partition)->required();
  verify->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--sampled", o.sampled);
  add_common(verify);

  CLI::App* generate = app.add_subcommand("generate", "Write an extremal fixture");
  generate->add_option("family", o.family)
      ->required()
      ->check(CLI::IsMember({"fano", "pg", "k", "kiraly", "laminar-rank2", "gammoid-tight"}));
  generate->add_option("params", o.params);
  add_common(generate);

  CLI::App* chi = app.add_subcommand("chi", "Coloring number with certificate");
  chi->add_option("input", o.input)->required();
  add_common(chi);

  CLI::App* listcolor = app.add_subcommand("listcolor", "Decide list colorability");
  listcolor->add_option("input", o.input)->required();
  add_common(listcolor);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*reduce) return RunReduce(o);
    if (*verify) return RunVerify(o);
    if (*generate) return RunGenerate(o);
    if (*chi) return RunChi(o);
    if (*listcolor) return RunListColor(o);
  } catch (const matred::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: cli.ParseError: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
