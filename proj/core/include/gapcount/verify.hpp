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
#include <span>
#include <string_view>
#include <vector>

#include "gapcount/model.hpp"
#include "gapcount/triangle.hpp"

namespace gapcount {

// Inclusive range of row indices, written "a..b" (or a single "n").
struct RowRange {
  int first = 1;
  int last = 1;

  int size() const noexcept { return last >= first ? last - first + 1 : 0; }
  friend bool operator==(const RowRange&, const RowRange&) = default;
};

// Throws Error on malformed text, first < 1 or last < first.
RowRange parse_row_range(std::string_view text);

// One column where prediction and target disagree. An empty side means the
// column does not exist there.
struct EntryMismatch {
  int k;
  std::optional<std::uint64_t> predicted;
  std::optional<std::uint64_t> target;

  friend bool operator==(const EntryMismatch&, const EntryMismatch&) = default;
};

struct RowVerdict {
  int n = 0;
  TypeHistogram predicted;
  Row target;
  bool matches = false;
  std::vector<EntryMismatch> mismatches;  // ascending k; empty iff matches

  friend bool operator==(const RowVerdict&, const RowVerdict&) = default;
};

struct ObstructionReport {
  int n = 0;
  int provided_types = 0;
  int required_types = 0;
  bool obstructed = false;  // provided_types < required_types

  friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

// Compares a histogram against a target row column by column. A predicted
// type with no target column is a mismatch, and so is a target column the
// model never produces.
RowVerdict compare_row(const TypeHistogram& predicted, std::span<const std::uint64_t> target);

RowVerdict verify_row(const ModelSpec& model, const CoefficientTriangle& triangle, int n,
                      int cap = kMaxLength);

// verify_row for every n in [1, n_max], ordered by n. Rows are evaluated
// concurrently.
std::vector<RowVerdict> boundary_check(const ModelSpec& model, const CoefficientTriangle& triangle,
                                       int n_max, int cap = kMaxLength);
std::vector<RowVerdict> verify_rows(const ModelSpec& model, const CoefficientTriangle& triangle,
                                    RowRange rows, int cap = kMaxLength);

// max over n in [1, n_max] of max_type_count(model, n).
int check_type_count_bound(const ModelSpec& model, int n_max, int cap = kMaxLength);

ObstructionReport obstruction_report(const ModelSpec& model, const CoefficientTriangle& triangle,
                                     int n, int cap = kMaxLength);

}  // namespace gapcount
