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
#include "gapcount/verify.hpp"

#include <gtest/gtest.h>

#include "gapcount/errors.hpp"
#include "gapcount/search.hpp"

namespace gapcount {
namespace {

const CoefficientTriangle& embedded() {
  static const CoefficientTriangle t = embedded_half_triangle();
  return t;
}

std::vector<bool> pattern(const std::vector<RowVerdict>& verdicts) {
  std::vector<bool> out;
  for (const auto& v : verdicts) out.push_back(v.matches);
  return out;
}

TEST(RowRange, Parse) {
  EXPECT_EQ(parse_row_range("1..9"), (RowRange{1, 9}));
  EXPECT_EQ(parse_row_range("4"), (RowRange{4, 4}));
  EXPECT_EQ(parse_row_range("4..9").size(), 6);
  EXPECT_THROW(parse_row_range("0..3"), Error);
  EXPECT_THROW(parse_row_range("5..3"), Error);
  EXPECT_THROW(parse_row_range("a..b"), Error);
  EXPECT_THROW(parse_row_range("1..."), Error);
}

TEST(VerifyRow, RowTwoMatches) {
  const auto v = verify_row(canonical_model(), embedded(), 2);
  EXPECT_TRUE(v.matches);
  EXPECT_EQ(v.predicted.counts, (std::map<int, std::uint64_t>{{1, 1}, {2, 2}}));
  EXPECT_TRUE(v.mismatches.empty());
}

TEST(VerifyRow, RowOneMatches) { EXPECT_TRUE(verify_row(canonical_model(), embedded(), 1).matches); }

TEST(VerifyRow, RowFourFails) {
  const auto v = verify_row(canonical_model(), embedded(), 4);
  EXPECT_FALSE(v.matches);
  EXPECT_EQ(v.predicted.counts, (std::map<int, std::uint64_t>{{1, 3}, {2, 4}}));
  EXPECT_EQ(v.target, (Row{3, 12, 4}));
  EXPECT_EQ(v.mismatches, (std::vector<EntryMismatch>{{2, 4, 12}, {3, std::nullopt, 4}}));
}

TEST(VerifyRow, Errors) {
  EXPECT_THROW(verify_row(canonical_model(), embedded(), 10), MissingRow);
  EXPECT_THROW(verify_row(canonical_model(), embedded(), 0), MissingRow);
  EXPECT_THROW(verify_row(canonical_model(), embedded(), 9, 8), InvalidLength);
}

TEST(CompareRow, ExtraPredictedColumnMismatchesEvenWhenSharedColumnsAgree) {
  const TypeHistogram h{3, {{1, 3}, {2, 2}, {3, 2}}};
  const Row target{3, 2};
  const auto v = compare_row(h, target);
  EXPECT_FALSE(v.matches);
  EXPECT_EQ(v.mismatches, (std::vector<EntryMismatch>{{3, 2, std::nullopt}}));
}

TEST(CompareRow, NonPositiveTypesNeverMatch) {
  const TypeHistogram h{2, {{0, 1}, {1, 1}, {2, 2}}};
  const Row target{1, 2};
  EXPECT_EQ(compare_row(h, target).mismatches, (std::vector<EntryMismatch>{{0, 1, std::nullopt}}));
}

TEST(BoundaryCheck, CanonicalPattern) {
  EXPECT_EQ(pattern(boundary_check(canonical_model(), embedded(), 9)),
            (std::vector<bool>{true, true, true, false, false, false, false, false, false}));
  EXPECT_EQ(pattern(boundary_check(canonical_model(), embedded(), 3)), (std::vector<bool>{true, true, true}));
  EXPECT_THROW(boundary_check(canonical_model(), embedded(), 10), MissingRow);
}

TEST(BoundaryCheck, UnboundedThresholdFailsRowThree) {
  const ModelSpec m{UnboundedGap{}, ParityPaperRule{}, std::nullopt};
  const auto verdicts = boundary_check(m, embedded(), 3);
  ASSERT_EQ(verdicts.size(), 3u);
  EXPECT_FALSE(verdicts[2].matches);
  EXPECT_EQ(verdicts[2].predicted.counts, (std::map<int, std::uint64_t>{{1, 3}, {2, 2}, {3, 2}}));
  EXPECT_EQ(verdicts[2].mismatches, (std::vector<EntryMismatch>{{3, 2, std::nullopt}}));
}

TEST(BoundaryCheck, Deterministic) {
  const auto a = boundary_check(canonical_model(), embedded(), 9);
  const auto b = boundary_check(canonical_model(), embedded(), 9);
  EXPECT_EQ(a, b);
}

TEST(TypeCountBound, Examples) {
  EXPECT_EQ(check_type_count_bound(canonical_model(), 20), 2);
  EXPECT_EQ(check_type_count_bound(canonical_model(), 1), 1);
  EXPECT_EQ(check_type_count_bound(ModelSpec{ConstantGap{2}, ParityPaperRule{}, std::nullopt}, 5), 3);
  EXPECT_THROW(check_type_count_bound(canonical_model(), 0), InvalidLength);
}

TEST(ObstructionReport, Examples) {
  EXPECT_EQ(obstruction_report(canonical_model(), embedded(), 4), (ObstructionReport{4, 2, 3, true}));
  EXPECT_EQ(obstruction_report(canonical_model(), embedded(), 6), (ObstructionReport{6, 2, 4, true}));
  EXPECT_EQ(obstruction_report(canonical_model(), embedded(), 3), (ObstructionReport{3, 2, 2, false}));
  for (int n = 1; n <= 9; ++n)
    EXPECT_EQ(obstruction_report(canonical_model(), embedded(), n).obstructed, n >= 4) << n;
}

// A model realizing fewer types than a row has entries can never match it.
TEST(ObstructionReport, ObstructedImpliesMismatchAcrossFamily) {
  for (const auto& m : default_family().candidates()) {
    for (int n = 1; n <= 9; ++n) {
      const auto report = obstruction_report(m, embedded(), n);
      EXPECT_EQ(report.obstructed, report.provided_types < report.required_types);
      if (report.obstructed) EXPECT_FALSE(verify_row(m, embedded(), n).matches) << to_string(m) << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace gapcount
