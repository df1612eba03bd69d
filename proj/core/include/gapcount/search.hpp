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
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gapcount/model.hpp"
#include "gapcount/triangle.hpp"
#include "gapcount/verify.hpp"

namespace gapcount {

// Candidate set = thresholds x type_rules x b_count_options.
struct SearchFamily {
  std::vector<GapThreshold> thresholds;
  std::vector<TypeRule> type_rules;
  std::vector<std::optional<BCountRange>> b_count_options;

  std::uint64_t size() const noexcept {
    return static_cast<std::uint64_t>(thresholds.size()) * type_rules.size() * b_count_options.size();
  }
  // Product order: threshold outermost, b-count innermost.
  std::vector<ModelSpec> candidates() const;
};

// Thresholds {0, 1, 2, 3, n/2, inf}; type rules {parity-paper, affine(1,1),
// affine(-1,2)} plus every even/odd pair of affine rules with slope in
// {-1,0,1,2} and offset in {0,1,2,3}; b-count {*, 1..1, 1..2, 2..2}.
SearchFamily default_family();

struct SearchResult {
  ModelSpec model;
  std::string model_text;  // to_string(model)
  std::vector<RowVerdict> verdicts;
  std::vector<int> matched_rows;
  int score = 0;           // matched_rows.size()
  bool ill_typed = false;  // some requested row produced a type k < 1
};

// Evaluates every candidate on every requested row. Sorted by score
// descending, then by model_text ascending; the order does not depend on
// how the work was scheduled. Throws MissingRow, InvalidLength.
std::vector<SearchResult> run_search(const SearchFamily& family, const CoefficientTriangle& triangle,
                                     RowRange rows, int cap = kMaxLength);

// Why a row fails: a type-count deficit when the model realizes fewer types
// than the row has entries, otherwise the list of disagreeing columns.
// Throws NotAFailure when the verdict matches.
std::string witness(const RowVerdict& verdict);
std::string witness(const ModelSpec& model, const CoefficientTriangle& triangle, int n,
                    int cap = kMaxLength);

}  // namespace gapcount
