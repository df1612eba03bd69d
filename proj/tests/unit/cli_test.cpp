// Copyright 2026 The gapcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "gapcount/search.hpp"
#include "support/certificate.hpp"
#include "support/golden.hpp"

namespace gapcount {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "gapcount");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gapcount_cli_test_" + name);
}

TEST(Cli, EnumerateLengthTwo) {
  const auto r = run({"enumerate", "-n", "2", "--model", "canonical"});
  EXPECT_EQ(r.code, cli::kPass);
  testing::expect_golden("enumerate_n2.txt", r.out);
}

TEST(Cli, EnumerateLengthThree) {
  const auto r = run({"enumerate", "-n", "3", "--model", "canonical"});
  EXPECT_EQ(r.code, cli::kPass);
  testing::expect_golden("enumerate_n3.txt", r.out);
}

TEST(Cli, EnumerateRejectsBadLength) {
  for (const char* n : {"0", "31", "x"}) {
    const auto r = run({"enumerate", "-n", n});
    EXPECT_EQ(r.code, cli::kUsage) << n;
    EXPECT_TRUE(r.out.empty()) << n;
    EXPECT_FALSE(r.err.empty()) << n;
  }
  EXPECT_EQ(run({"--cap", "8", "enumerate", "-n", "9"}).code, cli::kUsage);
  EXPECT_EQ(run({"--cap", "31", "enumerate", "-n", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"enumerate"}).code, cli::kUsage);
  EXPECT_EQ(run({}).code, cli::kUsage);
}

TEST(Cli, Stats) {
  const auto r = run({"stats", "-n", "4"});
  EXPECT_EQ(r.code, cli::kPass);
  testing::expect_golden("stats_n4.txt", r.out);
}

TEST(Cli, VerifyFirstThreeRowsPasses) {
  const auto r = run({"verify", "--model", "canonical", "--triangle", "embedded", "--rows", "1..3"});
  EXPECT_EQ(r.code, cli::kPass) << r.err;
}

TEST(Cli, VerifyRowFourFails) {
  const auto report = temp_path("verify_1-4.txt");
  const auto r = run({"verify", "--rows", "1..4", "--report", report.string()});
  EXPECT_EQ(r.code, cli::kMismatch);
  EXPECT_NE(r.out.find("k=2: 4 vs 12; k=3: absent vs 4"), std::string::npos) << r.out;
  EXPECT_EQ(slurp(report),
            "row=1 match=true predicted=1:1 target=1\n"
            "row=2 match=true predicted=1:1,2:2 target=1,2\n"
            "row=3 match=true predicted=1:3,2:2 target=3,2\n"
            "row=4 match=false predicted=1:3,2:4 target=3,12,4\n");
  std::filesystem::remove(report);
}

TEST(Cli, VerifyAllRows) {
  const auto table = run({"verify", "--rows", "1..9"});
  EXPECT_EQ(table.code, cli::kMismatch);
  testing::expect_golden("verify_rows1-9.txt", table.out);
  const auto records = run({"verify", "--rows", "1..9", "--format", "records"});
  testing::expect_golden("verify_rows1-9.records", records.out);
}

TEST(Cli, ObstructRowsFourToNine) {
  const auto r = run({"obstruct", "--rows", "4..9", "--format", "records"});
  EXPECT_EQ(r.code, cli::kPass);
  EXPECT_EQ(r.out,
            "row=4 provided=2 required=3 obstructed=true\n"
            "row=5 provided=2 required=3 obstructed=true\n"
            "row=6 provided=2 required=4 obstructed=true\n"
            "row=7 provided=2 required=4 obstructed=true\n"
            "row=8 provided=2 required=5 obstructed=true\n"
            "row=9 provided=2 required=5 obstructed=true\n");
  testing::expect_golden("obstruct_rows4-9.txt", run({"obstruct", "--rows", "4..9"}).out);
}

TEST(Cli, SearchTop20) {
  const auto r = run({"search", "--family", "default", "--triangle", "embedded", "--rows", "1..4", "--top", "20"});
  EXPECT_EQ(r.code, cli::kPass) << r.err;
  testing::expect_golden("search_rows1-4_top20.txt", r.out);
  EXPECT_EQ(run({"search", "--family", "other"}).code, cli::kUsage);
}

TEST(Cli, BfileTriangleAndIngest) {
  const std::string bfile = GAPCOUNT_TEST_DATA_DIR "/b223168_rows1-9.txt";
  const auto via_bfile = run({"verify", "--bfile", bfile, "--row-rule", "floor(n/2)+1", "--rows", "1..3"});
  EXPECT_EQ(via_bfile.code, cli::kPass) << via_bfile.err;

  const auto native = temp_path("native.txt");
  const auto ingest = run({"ingest", "--bfile", bfile, "--label", "1/2", "--out", native.string()});
  ASSERT_EQ(ingest.code, cli::kPass) << ingest.err;
  EXPECT_EQ(slurp(native), slurp(GAPCOUNT_TEST_DATA_DIR "/half_rows1-9.txt"));

  const auto reread = run({"ingest", "--triangle", native.string()});
  EXPECT_EQ(reread.out, slurp(native));
  const auto verify_native = run({"verify", "--triangle", native.string(), "--rows", "1..3"});
  EXPECT_EQ(verify_native.code, cli::kPass);
  std::filesystem::remove(native);
}

TEST(Cli, OperationalErrorsExitTwo) {
  EXPECT_EQ(run({"verify", "--triangle", "/nonexistent/triangle.txt"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--model", "gap<=banana"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--rows", "1..10"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--rows", "3..1"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--triangle", "embedded", "--bfile", "x"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--row-rule", "floor(n/2)+1"}).code, cli::kUsage);
  EXPECT_EQ(run({"obstruct", "--rows", "4..12"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--format", "json"}).code, cli::kUsage);

  const auto truncated = temp_path("truncated.b");
  std::ofstream(truncated) << "1 1\n2 1\n3 2\n4 3\n";
  const auto r = run({"verify", "--bfile", truncated.string()});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("row 3"), std::string::npos) << r.err;
  std::filesystem::remove(truncated);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"enumerate", "-n", "5", "--model", "gap<=2; type=affine(1,1); bcount=*"},
      {"stats", "-n", "9", "--format", "tsv"},
      {"verify", "--rows", "1..9"},
      {"obstruct"},
      {"search", "--rows", "1..5", "--top", "0", "--format", "tsv"},
      {"ingest", "--bfile", GAPCOUNT_TEST_DATA_DIR "/b223168_rows1-9.txt"},
  };
  for (const auto& c : commands) {
    const auto a = run(c);
    const auto b = run(c);
    EXPECT_EQ(a.code, b.code) << c[0];
    EXPECT_EQ(a.out, b.out) << c[0];
    EXPECT_FALSE(a.out.empty()) << c[0];
  }
}

// Certificate for the default family on rows 1..4. Nothing may match row 4.
TEST(SearchCertificate, DefaultFamilyRowsOneToFour) {
  const RowRange rows{1, 4};
  const auto results = run_search(default_family(), embedded_half_triangle(), rows);
  testing::expect_golden("search_rows1-4_certificate.txt", testing::search_certificate(results, rows, 4));
  for (const auto& r : results)
    EXPECT_EQ(std::count(r.matched_rows.begin(), r.matched_rows.end(), 4), 0) << r.model_text;
}

}  // namespace
}  // namespace gapcount
