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
#include "gapcount/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "gapcount/errors.hpp"

namespace gapcount {

namespace {

std::string gap_header(const std::optional<ModelSpec>& model, int n) {
  const auto limit = resolve_threshold(model->gap_threshold, n);
  return limit ? "gap<=" + std::to_string(*limit) + "?" : "gap<=inf?";
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out.empty() ? "-" : out;
}

}  // namespace

void TextTable::add_row(std::vector<std::string> cells) {
  cells.resize(headers_.size());
  rows_.push_back(std::move(cells));
}

void TextTable::render(std::ostream& out, TableFormat format) const {
  const auto emit = [&](const std::vector<std::string>& cells, const std::vector<std::size_t>& widths) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (format == TableFormat::kTsv) {
        out << (c ? "\t" : "") << cells[c];
      } else if (c + 1 == cells.size()) {
        out << cells[c];
      } else {
        out << cells[c] << std::string(widths[c] - cells[c].size() + 2, ' ');
      }
    }
    out << '\n';
  };
  std::vector<std::size_t> widths(headers_.size());
  for (std::size_t c = 0; c < headers_.size(); ++c) {
    widths[c] = headers_[c].size();
    for (const auto& row : rows_) widths[c] = std::max(widths[c], row[c].size());
  }
  emit(headers_, widths);
  for (const auto& row : rows_) emit(row, widths);
}

std::string TextTable::render(TableFormat format) const {
  std::ostringstream out;
  render(out, format);
  return out.str();
}

std::string format_histogram(const TypeHistogram& histogram) {
  std::string out;
  for (const auto& [k, c] : histogram.counts)
    out += (out.empty() ? "" : ",") + std::to_string(k) + ":" + std::to_string(c);
  return out;
}

std::string format_row(const Row& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + std::to_string(row[i]);
  return out;
}

std::string verdict_record(const RowVerdict& verdict) {
  return "row=" + std::to_string(verdict.n) + " match=" + (verdict.matches ? "true" : "false") +
         " predicted=" + format_histogram(verdict.predicted) + " target=" + format_row(verdict.target);
}

std::string obstruction_record(const ObstructionReport& report) {
  return "row=" + std::to_string(report.n) + " provided=" + std::to_string(report.provided_types) +
         " required=" + std::to_string(report.required_types) +
         " obstructed=" + (report.obstructed ? "true" : "false");
}

TextTable enumeration_table(int n, const std::optional<ModelSpec>& model, bool valid_only, int cap) {
  std::vector<std::string> headers = {"sequence", "has-B", "first_B", "last_B", "gap"};
  if (model) {
    model->validate();
    headers.insert(headers.end(), {gap_header(model, n), "k", "valid?"});
  }
  TextTable table(std::move(headers));
  for (const BinarySequence seq : enumerate_all(n, cap)) {
    const auto stats = gap_statistics(seq);
    const bool valid = model && is_valid(*model, seq);
    if (valid_only && model && !valid) continue;
    std::vector<std::string> row = {seq.to_string(), stats ? "Yes" : "No"};
    if (stats) {
      row.insert(row.end(), {std::to_string(stats->first_b), std::to_string(stats->last_b),
                             std::to_string(stats->gap)});
    } else {
      row.insert(row.end(), {"--", "--", "--"});
    }
    if (model) {
      if (stats) {
        const auto limit = resolve_threshold(model->gap_threshold, n);
        row.push_back(!limit || stats->gap <= *limit ? "Yes" : "No");
        row.push_back(std::to_string(type_for_gap(model->type_rule, n, stats->gap)));
      } else {
        row.insert(row.end(), {"--", "--"});
      }
      row.push_back(valid ? "Yes" : "No");
    }
    table.add_row(std::move(row));
  }
  return table;
}

TextTable gap_distribution_table(const std::map<int, std::uint64_t>& counts) {
  TextTable table({"gap", "count"});
  for (const auto& [g, c] : counts) table.add_row({std::to_string(g), std::to_string(c)});
  return table;
}

TextTable verdict_table(const std::vector<RowVerdict>& verdicts) {
  TextTable table({"n", "predicted", "target", "match", "detail"});
  for (const auto& v : verdicts) {
    std::string detail;
    for (const auto& m : v.mismatches) {
      if (!detail.empty()) detail += "; ";
      detail += "k=" + std::to_string(m.k) + ": " + (m.predicted ? std::to_string(*m.predicted) : "absent") +
                " vs " + (m.target ? std::to_string(*m.target) : "absent");
    }
    table.add_row({std::to_string(v.n), format_histogram(v.predicted).empty() ? "-" : format_histogram(v.predicted),
                   format_row(v.target), v.matches ? "yes" : "no", detail.empty() ? "-" : detail});
  }
  return table;
}

TextTable obstruction_table(const std::vector<ObstructionReport>& reports) {
  TextTable table({"n", "provided", "required", "obstructed"});
  for (const auto& r : reports)
    table.add_row({std::to_string(r.n), std::to_string(r.provided_types), std::to_string(r.required_types),
                   r.obstructed ? "yes" : "no"});
  return table;
}

TextTable search_table(const std::vector<SearchResult>& results, std::size_t top) {
  TextTable table({"rank", "model", "score", "matched", "first failure"});
  const std::size_t limit = top == 0 ? results.size() : std::min(top, results.size());
  for (std::size_t i = 0; i < limit; ++i) {
    const auto& r = results[i];
    std::string failure = "-";
    const auto it = std::find_if(r.verdicts.begin(), r.verdicts.end(),
                                 [](const RowVerdict& v) { return !v.matches; });
    if (it != r.verdicts.end()) failure = witness(*it);
    std::string model = r.model_text;
    if (r.ill_typed) model += " [ill-typed]";
    table.add_row({std::to_string(i + 1), std::move(model), std::to_string(r.score), join_ints(r.matched_rows),
                   std::move(failure)});
  }
  return table;
}

}  // namespace gapcount
