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
#include "gapcount/search.hpp"

#include <algorithm>
#include <sstream>

#include "gapcount/errors.hpp"
#include "parallel.hpp"

namespace gapcount {

std::vector<ModelSpec> SearchFamily::candidates() const {
  std::vector<ModelSpec> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (const auto& threshold : thresholds)
    for (const auto& rule : type_rules)
      for (const auto& b_count : b_count_options) out.push_back(ModelSpec{threshold, rule, b_count});
  return out;
}

SearchFamily default_family() {
  SearchFamily family;
  family.thresholds = {ConstantGap{0}, ConstantGap{1}, ConstantGap{2},
                       ConstantGap{3}, HalfFloorGap{}, UnboundedGap{}};
  family.type_rules = {ParityPaperRule{}, AffineRule{1, 1}, AffineRule{-1, 2}};
  std::vector<AffineRule> affine;
  for (const int slope : {-1, 0, 1, 2})
    for (const int offset : {0, 1, 2, 3}) affine.push_back({slope, offset});
  for (const auto& even : affine)
    for (const auto& odd : affine) family.type_rules.push_back(EvenOddRule{even, odd});
  family.b_count_options = {std::nullopt, BCountRange{1, 1}, BCountRange{1, 2}, BCountRange{2, 2}};
  return family;
}

std::vector<SearchResult> run_search(const SearchFamily& family, const CoefficientTriangle& triangle,
                                     RowRange rows, int cap) {
  for (int n = rows.first; n <= rows.last; ++n) {
    if (!triangle.has_row(n)) throw MissingRow(n);
    check_length(n, cap);
  }
  std::vector<RowProfile> profiles;
  for (int n = rows.first; n <= rows.last; ++n) profiles.push_back(RowProfile::build(n, cap));

  const std::vector<ModelSpec> candidates = family.candidates();
  std::vector<SearchResult> results(candidates.size());
  detail::parallel_for(candidates.size(), [&](std::uint64_t i) {
    SearchResult& r = results[i];
    r.model = candidates[i];
    r.model_text = to_string(r.model);
    for (const RowProfile& profile : profiles) {
      RowVerdict verdict = compare_row(type_histogram(r.model, profile), triangle.row(profile.length()));
      r.ill_typed = r.ill_typed || verdict.predicted.has_non_positive_type();
      if (verdict.matches) r.matched_rows.push_back(verdict.n);
      r.verdicts.push_back(std::move(verdict));
    }
    r.score = static_cast<int>(r.matched_rows.size());
  });

  std::sort(results.begin(), results.end(), [](const SearchResult& a, const SearchResult& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.model_text < b.model_text;
  });
  return results;
}

std::string witness(const RowVerdict& verdict) {
  if (verdict.matches) throw NotAFailure(verdict.n);
  const int provided = static_cast<int>(verdict.predicted.counts.size());
  const int required = static_cast<int>(verdict.target.size());
  std::ostringstream out;
  out << "row " << verdict.n << ": ";
  if (provided < required) {
    out << "type-count deficit: model realizes " << provided << " type" << (provided == 1 ? "" : "s")
        << " {";
    bool first = true;
    for (const auto& [k, c] : verdict.predicted.counts) {
      out << (first ? "" : ",") << k;
      first = false;
    }
    out << "}; row has " << required << " nonzero entries; provided " << provided << " < required "
        << required;
    return out.str();
  }
  out << "entry mismatch";
  for (std::size_t i = 0; i < verdict.mismatches.size(); ++i) {
    const auto& m = verdict.mismatches[i];
    out << (i ? "; " : " ") << "at k=" << m.k << ": predicted ";
    if (m.predicted) out << *m.predicted; else out << "absent";
    out << " vs target ";
    if (m.target) out << *m.target; else out << "absent";
  }
  return out.str();
}

std::string witness(const ModelSpec& model, const CoefficientTriangle& triangle, int n, int cap) {
  return witness(verify_row(model, triangle, n, cap));
}

}  // namespace gapcount
