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

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gapcount/model.hpp"
#include "gapcount/search.hpp"
#include "gapcount/triangle.hpp"
#include "gapcount/verify.hpp"

namespace gapcount {

enum class TableFormat { kAligned, kTsv };

// Plain text table. Aligned output pads every column to its widest cell and
// separates columns with two spaces; TSV output is tab separated.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> headers) : headers_(std::move(headers)) {}

  void add_row(std::vector<std::string> cells);
  std::size_t row_count() const noexcept { return rows_.size(); }
  void render(std::ostream& out, TableFormat format) const;
  std::string render(TableFormat format) const;

 private:
  std::vector<std::string> headers_;
  std::vector<std::vector<std::string>> rows_;
};

// "1:3,2:4"
std::string format_histogram(const TypeHistogram& histogram);
// "3,12,4"
std::string format_row(const Row& row);

// row=<n> match=<true|false> predicted=<k1:c1,...> target=<c1,...>
std::string verdict_record(const RowVerdict& verdict);
// row=<n> provided=<p> required=<r> obstructed=<true|false>
std::string obstruction_record(const ObstructionReport& report);

// Columns: sequence, has-B, first_B, last_B, gap; with a model also
// gap<=c?, k, valid?. Positions are 1-based; "--" marks undefined cells.
TextTable enumeration_table(int n, const std::optional<ModelSpec>& model, bool valid_only = false,
                            int cap = kMaxLength);
TextTable gap_distribution_table(const std::map<int, std::uint64_t>& counts);
TextTable verdict_table(const std::vector<RowVerdict>& verdicts);
TextTable obstruction_table(const std::vector<ObstructionReport>& reports);
// Columns: rank, model, score, matched rows, first failure witness. top = 0
// keeps every result.
TextTable search_table(const std::vector<SearchResult>& results, std::size_t top);

}  // namespace gapcount
