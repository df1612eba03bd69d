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

#include <algorithm>
#include <charconv>

#include "gapcount/errors.hpp"
#include "parallel.hpp"

namespace gapcount {

namespace {

std::optional<int> to_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Throws MissingRow before any enumeration starts.
void require_rows(const CoefficientTriangle& triangle, RowRange rows, int cap) {
  for (int n = rows.first; n <= rows.last; ++n) {
    if (!triangle.has_row(n)) throw MissingRow(n);
    check_length(n, cap);
  }
}

}  // namespace

RowRange parse_row_range(std::string_view text) {
  const auto dots = text.find("..");
  const auto first = to_int(text.substr(0, dots));
  const auto last = dots == std::string_view::npos ? first : to_int(text.substr(dots + 2));
  if (!first || !last) throw Error("bad row range '" + std::string(text) + "', expected a..b");
  if (*first < 1 || *last < *first) throw Error("empty or non-positive row range '" + std::string(text) + "'");
  return {*first, *last};
}

RowVerdict compare_row(const TypeHistogram& predicted, std::span<const std::uint64_t> target) {
  RowVerdict verdict{predicted.n, predicted, Row(target.begin(), target.end()), true, {}};
  const auto target_at = [&](int k) -> std::optional<std::uint64_t> {
    if (k < 1 || static_cast<std::size_t>(k) > target.size()) return std::nullopt;
    return target[static_cast<std::size_t>(k - 1)];
  };
  const auto predicted_at = [&](int k) -> std::optional<std::uint64_t> {
    const auto it = predicted.counts.find(k);
    if (it == predicted.counts.end()) return std::nullopt;
    return it->second;
  };

  std::vector<int> keys;
  for (const auto& [k, c] : predicted.counts) keys.push_back(k);
  for (int k = 1; k <= static_cast<int>(target.size()); ++k) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  for (const int k : keys) {
    const auto p = predicted_at(k);
    const auto t = target_at(k);
    if (p != t) verdict.mismatches.push_back({k, p, t});
  }
  verdict.matches = verdict.mismatches.empty();
  return verdict;
}

RowVerdict verify_row(const ModelSpec& model, const CoefficientTriangle& triangle, int n, int cap) {
  const auto target = triangle.row(n);
  return compare_row(type_histogram(model, n, cap), target);
}

std::vector<RowVerdict> verify_rows(const ModelSpec& model, const CoefficientTriangle& triangle,
                                    RowRange rows, int cap) {
  require_rows(triangle, rows, cap);
  std::vector<RowVerdict> verdicts(static_cast<std::size_t>(rows.size()));
  detail::parallel_for(verdicts.size(), [&](std::uint64_t i) {
    verdicts[i] = verify_row(model, triangle, rows.first + static_cast<int>(i), cap);
  });
  return verdicts;
}

std::vector<RowVerdict> boundary_check(const ModelSpec& model, const CoefficientTriangle& triangle,
                                       int n_max, int cap) {
  return verify_rows(model, triangle, RowRange{1, n_max}, cap);
}

int check_type_count_bound(const ModelSpec& model, int n_max, int cap) {
  check_length(n_max, cap);
  int best = 0;
  for (int n = 1; n <= n_max; ++n) best = std::max(best, max_type_count(model, n, cap));
  return best;
}

ObstructionReport obstruction_report(const ModelSpec& model, const CoefficientTriangle& triangle,
                                     int n, int cap) {
  const int required = required_type_count(triangle, n);
  const int provided = max_type_count(model, n, cap);
  return {n, provided, required, provided < required};
}

}  // namespace gapcount
