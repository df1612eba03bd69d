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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gapcount {

using Row = std::vector<std::uint64_t>;

// Ragged triangle of positive integers, rows n = 1.. and columns k = 1..
// Cells past the end of a row are missing, not zero.
class CoefficientTriangle {
 public:
  CoefficientTriangle() = default;
  // Throws MalformedTriangle if an entry is 0, a row is empty, or row lengths
  // decrease.
  CoefficientTriangle(std::string order_label, std::vector<Row> rows);

  const std::string& order_label() const noexcept { return order_label_; }
  int row_count() const noexcept { return static_cast<int>(rows_.size()); }
  bool has_row(int n) const noexcept { return n >= 1 && n <= row_count(); }
  // Throws MissingRow.
  std::span<const std::uint64_t> row(int n) const;
  // Empty when k is outside row n. Throws MissingRow.
  std::optional<std::uint64_t> entry(int n, int k) const;
  const std::vector<Row>& rows() const noexcept { return rows_; }

  friend bool operator==(const CoefficientTriangle&, const CoefficientTriangle&) = default;

 private:
  std::string order_label_;
  std::vector<Row> rows_;
};

// Rows n = 1..9 of the r = 1/2 coefficients (OEIS A223168).
CoefficientTriangle embedded_half_triangle();

// Number of entries in row n. Returning 0 means the rule has no row n.
using RowLengthRule = std::function<std::size_t(int n)>;

// n -> floor(n/2) + 1, the shape of A223168.
RowLengthRule half_floor_plus_one_rule();
// Row n has lengths[n-1] entries; rows past the list are undefined.
RowLengthRule explicit_rule(std::vector<std::size_t> lengths);
// "floor(n/2)+1" or "explicit:l1,l2,...". Throws Error.
RowLengthRule parse_row_rule(std::string_view text);

// Reads an OEIS b-file (`<index> <value>` per line, '#' comments, indices
// 1-based and contiguous) and cuts the term list into rows with `rule`.
// Throws ParseError, IndexGap, TruncatedRow, MalformedTriangle.
CoefficientTriangle ingest_bfile(std::istream& in, const RowLengthRule& rule,
                                 std::string order_label = {});

// Native format: one row per line, single-space separated, '#' comments.
// A leading "# order <label>" comment carries the order label.
CoefficientTriangle read_triangle(std::istream& in);
void write_triangle(std::ostream& out, const CoefficientTriangle& triangle);
// Linearized b-file of the triangle's terms.
void write_bfile(std::ostream& out, const CoefficientTriangle& triangle);

// Number of nonzero entries in row n, i.e. how many types a model must
// realize to reproduce it. Throws MissingRow.
int required_type_count(const CoefficientTriangle& triangle, int n);
std::uint64_t row_sum(const CoefficientTriangle& triangle, int n);

}  // namespace gapcount
