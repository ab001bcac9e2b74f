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

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "matred/io.hpp"
#include "matred/matred.hpp"

namespace matred {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("matred_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const Json& doc) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << doc.dump();
    return path;
  }

  std::string WriteText(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  // Runs the CLI; returns the exit code and leaves stdout in out_.
  int Run(const std::string& args) {
    const std::string out = (dir_ / "stdout.json").string();
    const std::string err = (dir_ / "stderr.txt").string();
    const std::string command =
        std::string(MATRED_CLI_PATH) + " " + args + " > " + out + " 2> " + err;
    const int status = std::system(command.c_str());
    std::stringstream o, e;
    o << std::ifstream(out).rdbuf();
    e << std::ifstream(err).rdbuf();
    out_ = o.str();
    err_ = e.str();
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  Json Output() const { return Json::parse(out_); }

  fs::path dir_;
  std::string out_;
  std::string err_;
};

TEST(DocumentTest, RoundTripEveryKind) {
  const std::vector<Json> docs = {
      GraphicDocument(CompleteGraph(4)),
      UniformDocument(2, 5),
      PartitionDocument(PartitionIntoClasses::FromClasses(4, {{0, 1}, {2, 3}})),
      TransversalDocument(BipartiteGraph(3, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 1}})),
      GammoidDocument(GammoidTight(3)),
      PavingDocument(FanoFamily()),
      LaminarDocument(LaminarRankTwoTight(3)),
      ProjectivePlaneDocument(MakeProjectivePlane(2)),
  };
  for (const Json& doc : docs) {
    const MatroidDocument parsed = ParseMatroidDocument(doc);
    const MatroidDocument again = ParseMatroidDocument(ToDocument(parsed));
    EXPECT_EQ(parsed.kind, doc["kind"]);
    EXPECT_TRUE(OracleEqual(parsed.matroid, again.matroid)) << parsed.kind;
  }
  EXPECT_TRUE(OracleEqual(ParseMatroidDocument(PavingDocument(FanoFamily())).matroid,
                          PavingMatroid(FanoFamily())));
  EXPECT_TRUE(OracleEqual(ParseMatroidDocument(ProjectivePlaneDocument(MakeProjectivePlane(2))).matroid,
                          PavingMatroid(FanoFamily())));
}

TEST(DocumentTest, ParseErrors) {
  const std::vector<Json> bad = {
      Json::object(),
      {{"kind", "nope"}, {"n", 3}},
      {{"kind", "uniform"}, {"n", 3}},
      {{"kind", "graphic"}, {"vertices", 2}, {"edges", {{0, 5}}}},
      {{"kind", "partition"}, {"n", 3}, {"classes", {{0, 1}}}},
      {{"kind", "uniform"}, {"n", 2}, {"rank", 1}, {"names", {"a", "a"}}},
  };
  for (const Json& doc : bad) EXPECT_THROW(ParseMatroidDocument(doc), Error) << doc.dump();
}

TEST(DocumentTest, ListsByNameOrId) {
  Json doc = UniformDocument(1, 2);
  doc["names"] = {"a", "b"};
  doc["lists"] = {{"a", {1}}, {"1", {1, 2}}};
  const MatroidDocument d = ParseMatroidDocument(doc);
  EXPECT_EQ(ParseLists(doc, 2, d.names), (std::vector<std::vector<int>>{{1}, {1, 2}}));
  doc["lists"] = {{"a", {1}}};
  EXPECT_THROW(ParseLists(doc, 2, d.names), Error);
}

TEST_F(CliTest, GenerateThenParse) {
  ASSERT_EQ(Run("generate fano"), 0);
  EXPECT_TRUE(OracleEqual(ParseMatroidDocument(Output()).matroid, PavingMatroid(FanoFamily())));
  ASSERT_EQ(Run("generate pg 4"), 0);
  const Json pg4 = Output();
  EXPECT_EQ(pg4["n"], 21);
  EXPECT_EQ(pg4["lines"].size(), 21u);
  ASSERT_EQ(Run("generate gammoid-tight 3"), 0);
  const GammoidInstance g = GammoidTight(3);
  EXPECT_TRUE(OracleEqual(ParseMatroidDocument(Output()).matroid,
                          GammoidMatroid(g.digraph, g.sources, g.sinks)));
  ASSERT_EQ(Run("generate laminar-rank2 3"), 0);
  EXPECT_TRUE(OracleEqual(ParseMatroidDocument(Output()).matroid,
                          LaminarMatroid(LaminarRankTwoTight(3))));
  EXPECT_EQ(Run("generate pg 6"), 1);
  EXPECT_EQ(Run("generate nosuch"), 1);
}

TEST_F(CliTest, ReduceGraphicK4) {
  const std::string k4 = Write("k4.json", GraphicDocument(CompleteGraph(4)));
  ASSERT_EQ(Run("reduce " + k4), 0) << err_;
  const Json doc = Output();
  EXPECT_EQ(doc["kind"], "reduction");
  EXPECT_EQ(doc["algorithm"], "graphic");
  EXPECT_EQ(doc["classes"].size(), 3u);
  EXPECT_EQ(doc["report"]["weak_map"], true);
  EXPECT_EQ(doc["report"]["certified"], true);
  EXPECT_EQ(doc["report"]["rank_preserving"], true);
  EXPECT_LE(doc["report"]["chi_reduction"].get<int>(), 3);
}

TEST_F(CliTest, ReduceGammoidWithTrace) {
  ASSERT_EQ(Run("generate gammoid-tight 3 -o " + (dir_ / "g.json").string()), 0);
  ASSERT_EQ(Run("reduce " + (dir_ / "g.json").string() + " --trace"), 0) << err_;
  const Json doc = Output();
  EXPECT_EQ(doc["algorithm"], "gammoid");
  EXPECT_LE(doc["report"]["chi_reduction"].get<int>(), 4);
  EXPECT_EQ(doc["report"]["rank_preserving"], true);
  std::istringstream lines(err_);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const Json t = Json::parse(line);
    EXPECT_TRUE(t.contains("case"));
    EXPECT_TRUE(t.contains("potential"));
  }
}

TEST_F(CliTest, ReducePavingFano) {
  ASSERT_EQ(Run("generate fano -o " + (dir_ / "fano.json").string()), 0);
  ASSERT_EQ(Run("reduce " + (dir_ / "fano.json").string()), 0) << err_;
  const Json doc = Output();
  EXPECT_EQ(doc["report"]["chi_source"], 3);
  EXPECT_EQ(doc["report"]["chi_reduction"], 4);
  EXPECT_EQ(doc["report"]["method"], "exhaustive");
}

TEST_F(CliTest, Verify) {
  const std::string tri = Write("tri.json", GraphicDocument(CompleteGraph(3)));
  const std::string good =
      Write("good.json", PartitionDocument(PartitionIntoClasses::FromClasses(3, {{0, 1}, {2}})));
  const std::string bad =
      Write("bad.json", PartitionDocument(PartitionIntoClasses::FromClasses(3, {{0}, {1}, {2}})));
  ASSERT_EQ(Run("verify " + tri + " " + good), 0);
  EXPECT_EQ(Output()["certified"], true);
  ASSERT_EQ(Run("verify " + tri + " " + bad), 2);
  EXPECT_EQ(Output()["witness"], Json({0, 1, 2}));
  // A clean sampled sweep is not a certificate.
  ASSERT_EQ(Run("verify " + tri + " " + good + " --sampled 20"), 2);
  EXPECT_EQ(Output()["weak_map"], true);
  EXPECT_EQ(Output()["certified"], false);
  EXPECT_EQ(Output()["method"], "sampled(20)");
  const std::string wrong =
      Write("wrong.json", PartitionDocument(PartitionIntoClasses::FromClasses(2, {{0, 1}})));
  EXPECT_EQ(Run("verify " + tri + " " + wrong), 1);
}

TEST_F(CliTest, Chi) {
  ASSERT_EQ(Run("generate fano -o " + (dir_ / "fano.json").string()), 0);
  ASSERT_EQ(Run("chi " + (dir_ / "fano.json").string()), 0);
  EXPECT_EQ(Output()["chi"], 3);
  EXPECT_EQ(Output()["certificate"].size(), 3u);
  ASSERT_EQ(Run("generate k 6 -o " + (dir_ / "k6.json").string()), 0);
  ASSERT_EQ(Run("chi " + (dir_ / "k6.json").string()), 0);
  EXPECT_EQ(Output()["chi"], 3);
}

TEST_F(CliTest, ListColor) {
  ASSERT_EQ(Run("generate kiraly -o " + (dir_ / "kiraly.json").string()), 0);
  ASSERT_EQ(Run("listcolor " + (dir_ / "kiraly.json").string()), 0);
  EXPECT_EQ(Output()["colorable"], false);
  EXPECT_TRUE(Output()["coloring"].is_null());

  Json single = UniformDocument(2, 4);
  single["lists"] = {{"0", {1, 2}}, {"1", {2, 3}}, {"2", {1, 3}}, {"3", {1, 2}}};
  ASSERT_EQ(Run("listcolor " + Write("single.json", single)), 0);
  EXPECT_EQ(Output()["colorable"], true);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Run("reduce " + WriteText("broken.json", "{not json")), 1);
  EXPECT_NE(err_.find("ParseError"), std::string::npos);
  EXPECT_EQ(Run("reduce " + (dir_ / "missing.json").string()), 1);
  EXPECT_EQ(Run("nosuchcommand"), 1);
  const std::string k4 = Write("k4.json", GraphicDocument(CompleteGraph(4)));
  EXPECT_EQ(Run("reduce " + k4 + " -a paving"), 1);
  EXPECT_NE(err_.find("KindMismatch"), std::string::npos);

  Json big = UniformDocument(1, 12);
  Json lists = Json::object();
  for (int e = 0; e < 12; ++e) lists[std::to_string(e)] = {0, 1, 2, 3, 4, 5, 6, 7};
  big["lists"] = lists;
  EXPECT_EQ(Run("listcolor " + Write("big.json", big)), 3);
  EXPECT_NE(err_.find("SearchSpaceTooLarge"), std::string::npos);
}

}  // namespace
}  // namespace matred
