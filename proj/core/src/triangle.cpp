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
#include "gapcount/triangle.hpp"

#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "gapcount/errors.hpp"

namespace gapcount {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

template <typename Int>
std::optional<Int> to_int(std::string_view s) {
  Int value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

CoefficientTriangle::CoefficientTriangle(std::string order_label, std::vector<Row> rows)
    : order_label_(std::move(order_label)), rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (rows_[i].empty()) throw MalformedTriangle("row " + std::to_string(n) + " is empty");
    for (const auto v : rows_[i])
      if (v == 0) throw MalformedTriangle("row " + std::to_string(n) + " has a zero entry");
    if (i > 0 && rows_[i].size() < rows_[i - 1].size())
      throw MalformedTriangle("row " + std::to_string(n) + " is shorter than row " + std::to_string(n - 1));
  }
}

std::span<const std::uint64_t> CoefficientTriangle::row(int n) const {
  if (!has_row(n)) throw MissingRow(n);
  return rows_[static_cast<std::size_t>(n - 1)];
}

std::optional<std::uint64_t> CoefficientTriangle::entry(int n, int k) const {
  const auto r = row(n);
  if (k < 1 || static_cast<std::size_t>(k) > r.size()) return std::nullopt;
  return r[static_cast<std::size_t>(k - 1)];
}

CoefficientTriangle embedded_half_triangle() {
  return CoefficientTriangle("1/2", {
                                        {1},
                                        {1, 2},
                                        {3, 2},
                                        {3, 12, 4},
                                        {15, 20, 4},
                                        {15, 90, 60, 8},
                                        {105, 210, 84, 8},
                                        {105, 840, 840, 224, 16},
                                        {945, 2520, 1512, 288, 16},
                                    });
}

RowLengthRule half_floor_plus_one_rule() {
  return [](int n) { return static_cast<std::size_t>(n / 2 + 1); };
}

RowLengthRule explicit_rule(std::vector<std::size_t> lengths) {
  return [lengths = std::move(lengths)](int n) -> std::size_t {
    if (n < 1 || static_cast<std::size_t>(n) > lengths.size()) return 0;
    return lengths[static_cast<std::size_t>(n - 1)];
  };
}

RowLengthRule parse_row_rule(std::string_view text) {
  text = trim(text);
  if (text == "floor(n/2)+1") return half_floor_plus_one_rule();
  constexpr std::string_view kExplicit = "explicit:";
  if (text.substr(0, kExplicit.size()) == kExplicit) {
    text.remove_prefix(kExplicit.size());
    std::vector<std::size_t> lengths;
    while (!text.empty()) {
      const auto comma = text.find(',');
      const auto item = trim(text.substr(0, comma));
      const auto value = to_int<std::size_t>(item);
      if (!value || *value == 0) throw Error("bad row length '" + std::string(item) + "' in row rule");
      lengths.push_back(*value);
      text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    }
    if (lengths.empty()) throw Error("explicit row rule lists no lengths");
    return explicit_rule(std::move(lengths));
  }
  throw Error("unknown row rule '" + std::string(text) + "'");
}

CoefficientTriangle ingest_bfile(std::istream& in, const RowLengthRule& rule, std::string order_label) {
  std::vector<std::uint64_t> terms;
  std::string line;
  std::size_t line_no = 0;
  long long expected = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto fields = split_ws(text);
    if (fields.size() != 2) throw ParseError(line_no, "expected '<index> <value>'");
    const auto index = to_int<long long>(fields[0]);
    const auto value = to_int<std::uint64_t>(fields[1]);
    if (!index) throw ParseError(line_no, "bad index '" + std::string(fields[0]) + "'");
    if (!value) throw ParseError(line_no, "bad value '" + std::string(fields[1]) + "'");
    if (*index != expected) throw IndexGap(expected, *index);
    ++expected;
    terms.push_back(*value);
  }

  std::vector<Row> rows;
  std::size_t pos = 0;
  for (int n = 1; pos < terms.size(); ++n) {
    const std::size_t len = rule(n);
    if (len == 0) throw Error("row rule defines no row " + std::to_string(n) + " but terms remain");
    if (pos + len > terms.size()) throw TruncatedRow(n);
    rows.emplace_back(terms.begin() + static_cast<std::ptrdiff_t>(pos),
                      terms.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  }
  return CoefficientTriangle(std::move(order_label), std::move(rows));
}

CoefficientTriangle read_triangle(std::istream& in) {
  constexpr std::string_view kOrder = "# order ";
  std::string label;
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = line;
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (!text.empty() && text.front() == '#') {
      if (rows.empty() && label.empty() && text.substr(0, kOrder.size()) == kOrder)
        label = std::string(trim(text.substr(kOrder.size())));
      continue;
    }
    const auto fields = split_ws(text);
    if (fields.empty()) throw ParseError(line_no, "empty row");
    Row row;
    for (const auto f : fields) {
      const auto value = to_int<std::uint64_t>(f);
      if (!value) throw ParseError(line_no, "bad entry '" + std::string(f) + "'");
      row.push_back(*value);
    }
    rows.push_back(std::move(row));
  }
  return CoefficientTriangle(std::move(label), std::move(rows));
}

void write_triangle(std::ostream& out, const CoefficientTriangle& triangle) {
  if (!triangle.order_label().empty()) out << "# order " << triangle.order_label() << '\n';
  for (const auto& row : triangle.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
    out << '\n';
  }
}

void write_bfile(std::ostream& out, const CoefficientTriangle& triangle) {
  std::size_t index = 1;
  for (const auto& row : triangle.rows())
    for (const auto v : row) out << index++ << ' ' << v << '\n';
}

int required_type_count(const CoefficientTriangle& triangle, int n) {
  return static_cast<int>(triangle.row(n).size());
}

std::uint64_t row_sum(const CoefficientTriangle& triangle, int n) {
  const auto r = triangle.row(n);
  return std::accumulate(r.begin(), r.end(), std::uint64_t{0});
}

}  // namespace gapcount
