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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gapcount/sequence.hpp"

namespace gapcount {

// Gap thresholds. A sequence is admitted when its gap is <= the threshold
// resolved for its length.
struct ConstantGap {
  int limit = 1;
  friend bool operator==(const ConstantGap&, const ConstantGap&) = default;
};
struct HalfFloorGap {  // floor(n/2)
  friend bool operator==(const HalfFloorGap&, const HalfFloorGap&) = default;
};
struct UnboundedGap {
  friend bool operator==(const UnboundedGap&, const UnboundedGap&) = default;
};
using GapThreshold = std::variant<ConstantGap, HalfFloorGap, UnboundedGap>;

// k = slope * gap + offset
struct AffineRule {
  int slope = 0;
  int offset = 0;
  friend bool operator==(const AffineRule&, const AffineRule&) = default;
};
// Even n: k = 2 - gap. Odd n: k = gap + 1.
struct ParityPaperRule {
  friend bool operator==(const ParityPaperRule&, const ParityPaperRule&) = default;
};
struct EvenOddRule {
  AffineRule even;
  AffineRule odd;
  friend bool operator==(const EvenOddRule&, const EvenOddRule&) = default;
};
using TypeRule = std::variant<ParityPaperRule, AffineRule, EvenOddRule>;

// Inclusive bounds on the total number of B symbols.
struct BCountRange {
  int min_b = 1;
  int max_b = 1;
  friend bool operator==(const BCountRange&, const BCountRange&) = default;
};

// A candidate interpretation: which sequences count, and which column each
// one lands in. Every sequence must also contain at least one B.
struct ModelSpec {
  GapThreshold gap_threshold = ConstantGap{1};
  TypeRule type_rule = ParityPaperRule{};
  std::optional<BCountRange> b_count;

  // Throws InvalidModel on a negative constant or a bad b-count range.
  void validate() const;

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

// gap<=1, parity-dependent type map, no b-count constraint.
ModelSpec canonical_model();

// Threshold for length n; empty means unbounded.
std::optional<int> resolve_threshold(const GapThreshold& threshold, int n);

// Type the rule assigns to gap `gap` at length n, whether or not a sequence
// with that gap is admitted. May be < 1 for non-canonical rules.
int type_for_gap(const TypeRule& rule, int n, int gap);

bool is_valid(const ModelSpec& model, const BinarySequence& seq);

// Throws InvalidSequence if !is_valid(model, seq).
int type_of(const ModelSpec& model, const BinarySequence& seq);

// Valid sequences of length n in lexicographic order. Throws InvalidLength.
std::vector<BinarySequence> valid_set(const ModelSpec& model, int n, int cap = kMaxLength);

struct TypeHistogram {
  int n = 0;
  std::map<int, std::uint64_t> counts;  // zero counts are never stored

  std::uint64_t total() const;
  bool has_non_positive_type() const { return !counts.empty() && counts.begin()->first < 1; }

  friend bool operator==(const TypeHistogram&, const TypeHistogram&) = default;
};

// Exhaustive count of valid sequences per type over all 2^n sequences.
TypeHistogram type_histogram(const ModelSpec& model, int n, int cap = kMaxLength);

// Joint distribution of (gap, number of B) over the sequences of length n
// that contain a B. Validity and type are functions of these two numbers and
// n only, so one profile serves every model at that length.
class RowProfile {
 public:
  static RowProfile build(int n, int cap = kMaxLength);

  int length() const noexcept { return n_; }
  // cell(gap, b) for gap in [0, n), b in [1, n].
  std::uint64_t cell(int gap, int b) const {
    return cells_[static_cast<std::size_t>(gap * n_ + (b - 1))];
  }

 private:
  explicit RowProfile(int n)
      : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}
  int n_;
  std::vector<std::uint64_t> cells_;
};

// Same result as type_histogram(model, profile.length()), read off a profile.
TypeHistogram type_histogram(const ModelSpec& model, const RowProfile& profile);

std::set<int> realized_types(const ModelSpec& model, int n, int cap = kMaxLength);
int max_type_count(const ModelSpec& model, int n, int cap = kMaxLength);

// Single-line text form:
//   gap<=<c|n/2|inf>; type=<parity-paper|affine(a,b)|even(a,b)/odd(a,b)>; bcount=<min..max|*>
std::string to_string(const ModelSpec& model);

// Inverse of to_string. Also accepts the alias "canonical". Whitespace around
// separators is ignored. Throws InvalidModel.
ModelSpec parse_model(std::string_view text);

}  // namespace gapcount
