// Copyright 2026 The Peirce Authors
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

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "peirce/io.h"
#include "testing.h"

namespace peirce {
namespace {

using testing::FixturePath;

struct CliRun {
  int code;
  std::string out;
};

// Runs the CLI with stderr discarded and returns its exit code and stdout.
CliRun Cli(const std::string& args) {
  const std::string cmd = std::string(PEIRCE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Json Parse(const CliRun& r) { return Json::parse(r.out); }

std::string F(const std::string& name) { return FixturePath(name); }

TEST(CliTest, TriangulateZ6) {
  const CliRun r = Cli("triangulate " + F("z6"));
  ASSERT_EQ(r.code, 0);
  const Json j = Parse(r);
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["sequence"], Json::parse("[[3],[4]]"));
}

TEST(CliTest, IsoSearchZ6) {
  const Json j = Parse(Cli("iso-search " + F("z6") + " " + F("z2xz3")));
  EXPECT_TRUE(j["found"].get<bool>());
  EXPECT_EQ(j["map"]["images"], Json::parse("[[1,1]]"));
  const CliRun none = Cli("iso-search " + F("z4") + " " + F("f4"));
  EXPECT_EQ(none.code, 0);
  EXPECT_FALSE(Parse(none)["found"].get<bool>());
}

TEST(CliTest, IsoDecomposeAndSynthesize) {
  const CliRun d = Cli("iso-decompose " + F("t2f2") + " " + F("t2f2") + " " + F("inner_u"));
  ASSERT_EQ(d.code, 0);
  const Json j = Parse(d);
  EXPECT_EQ(j["sigma"], Json::parse("[1,2]"));
  EXPECT_EQ(j["layers"][0]["m"], Json::parse("[0,1,0]"));

  const std::string path = ::testing::TempDir() + "/peirce_decomposition.json";
  std::ofstream(path) << d.out;
  const CliRun s = Cli("iso-synth " + F("t2f2") + " " + F("t2f2") + " " + path);
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(Parse(s)["images"], ReadJsonFile(F("inner_u"))["images"]);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Cli("validate " + F("t3f2")).code, 0);
  EXPECT_EQ(Cli("iso-decompose " + F("t2z4") + " " + F("t2z4") + " " + F("inner_u")).code,
            1);
  EXPECT_EQ(Cli("validate " + F("missing")).code, 2);
  EXPECT_EQ(Cli("frobnicate " + F("z6")).code, 2);
  EXPECT_EQ(Cli("").code, 2);
  EXPECT_EQ(Cli("aut " + F("t3f2") + " --cap 4").code, 3);
}

TEST(CliTest, FlagsAfterSubcommand) {
  const Json j = Parse(Cli("aut --all " + F("t2z4")));
  EXPECT_EQ(j["order"], 8);
  EXPECT_EQ(Parse(Cli("--all aut " + F("t2z4"))), j);
}

TEST(CliTest, TextFormat) {
  const CliRun r = Cli("--format text triangulate " + F("z6"));
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(r.out.empty());
  EXPECT_NE(r.out.front(), '{');
  EXPECT_EQ(Cli("--format yaml triangulate " + F("z6")).code, 2);
}

TEST(CliTest, ReportIsDeterministic) {
  for (const char* name : {"t3f2", "three_block"}) {
    Json a = Parse(Cli("report " + F(name)));
    Json b = Parse(Cli("report " + F(name)));
    EXPECT_EQ(a["report"], b["report"]) << name;
    EXPECT_TRUE(a.contains("timings"));
  }
  const Json r = Parse(Cli("report " + F("z6")))["report"];
  for (const char* key : {"admissible_orders", "aut_order", "corner_orders", "hash",
                          "idempotent_count", "m", "name", "semicentral", "sequence",
                          "size", "splits"}) {
    EXPECT_TRUE(r.contains(key)) << key;
  }
}

TEST(CliTest, OracleAgreesOnEveryFixture) {
  for (const std::string& name : FixtureNames()) {
    for (const char* cmd : {"idempotents", "triangulate", "aut", "report"}) {
      const CliRun r = Cli(std::string("--oracle ") + cmd + " " + F(name));
      ASSERT_EQ(r.code, 0) << cmd << " " << name;
      const std::string verdict = Parse(r)["oracle"];
      EXPECT_TRUE(verdict == "agree" || verdict == "skipped") << cmd << " " << name;
      if (Fixture(name).size() <= 16) EXPECT_EQ(verdict, "agree") << cmd << " " << name;
    }
  }
}

}  // namespace
}  // namespace peirce
