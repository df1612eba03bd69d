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
#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gapcount/errors.hpp"
#include "gapcount/model.hpp"
#include "gapcount/report.hpp"
#include "gapcount/search.hpp"
#include "gapcount/sequence.hpp"
#include "gapcount/triangle.hpp"
#include "gapcount/verify.hpp"

namespace gapcount::cli {

namespace {

struct TriangleFlags {
  std::string triangle = "embedded";
  std::string bfile;
  std::string row_rule = "floor(n/2)+1";
  std::string label;
};

struct Options {
  int cap = kMaxLength;
  int n = 0;
  std::string model = "canonical";
  bool model_given = false;
  bool valid_only = false;
  std::string format = "table";
  std::string rows;
  std::string report;
  std::string family = "default";
  std::size_t top = 20;
  std::string out_path;
  TriangleFlags triangle;
};

void add_triangle_flags(CLI::App* cmd, TriangleFlags& flags) {
  auto* tri = cmd->add_option("--triangle", flags.triangle, "Native triangle file, or 'embedded'");
  auto* bfile = cmd->add_option("--bfile", flags.bfile, "OEIS b-file to ingest");
  cmd->add_option("--row-rule", flags.row_rule, "Row length rule: floor(n/2)+1 | explicit:l1,l2,...")
      ->needs(bfile);
  cmd->add_option("--label", flags.label, "Order label for an ingested b-file")->needs(bfile);
  tri->excludes(bfile);
}

void add_format_flag(CLI::App* cmd, std::string& format, std::vector<std::string> choices) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(choices)));
}

CoefficientTriangle load_triangle(const TriangleFlags& flags) {
  if (!flags.bfile.empty()) {
    std::ifstream in(flags.bfile);
    if (!in) throw Error("cannot open b-file '" + flags.bfile + "'");
    return ingest_bfile(in, parse_row_rule(flags.row_rule), flags.label);
  }
  if (flags.triangle == "embedded") return embedded_half_triangle();
  std::ifstream in(flags.triangle);
  if (!in) throw Error("cannot open triangle file '" + flags.triangle + "'");
  return read_triangle(in);
}

TableFormat table_format(const std::string& format) {
  return format == "tsv" ? TableFormat::kTsv : TableFormat::kAligned;
}

void write_report(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write report '" + path + "'");
  file << text;
  if (!file.flush()) throw Error("cannot write report '" + path + "'");
}

RowRange rows_or(const Options& o, RowRange fallback) {
  return o.rows.empty() ? fallback : parse_row_range(o.rows);
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  std::optional<ModelSpec> model;
  if (o.model_given) model = parse_model(o.model);
  enumeration_table(o.n, model, o.valid_only, o.cap).render(out, table_format(o.format));
  return kPass;
}

int cmd_stats(const Options& o, std::ostream& out) {
  const ModelSpec model = parse_model(o.model);
  const auto counts = count_by_gap(o.n, o.cap);
  const TypeHistogram hist = type_histogram(model, o.n, o.cap);
  const auto format = table_format(o.format);
  if (format == TableFormat::kAligned) {
    out << "n=" << o.n << " sequences=" << (std::uint64_t{1} << o.n)
        << " with-B=" << ((std::uint64_t{1} << o.n) - 1) << '\n';
  }
  gap_distribution_table(counts).render(out, format);
  if (format == TableFormat::kAligned) {
    out << "model: " << to_string(model) << '\n'
        << "valid=" << hist.total() << " types=" << format_histogram(hist) << '\n';
  }
  return kPass;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const ModelSpec model = parse_model(o.model);
  const CoefficientTriangle triangle = load_triangle(o.triangle);
  const RowRange rows = rows_or(o, RowRange{1, triangle.row_count()});
  const auto verdicts = verify_rows(model, triangle, rows, o.cap);

  std::string records;
  for (const auto& v : verdicts) records += verdict_record(v) + "\n";
  if (!o.report.empty()) write_report(o.report, records);
  if (o.format == "records")
    out << records;
  else
    verdict_table(verdicts).render(out, table_format(o.format));

  for (const auto& v : verdicts)
    if (!v.matches) return kMismatch;
  return kPass;
}

int cmd_obstruct(const Options& o, std::ostream& out) {
  const ModelSpec model = parse_model(o.model);
  const CoefficientTriangle triangle = load_triangle(o.triangle);
  const RowRange rows = rows_or(o, RowRange{1, triangle.row_count()});
  for (int n = rows.first; n <= rows.last; ++n) {
    if (!triangle.has_row(n)) throw MissingRow(n);
    check_length(n, o.cap);
  }
  std::vector<ObstructionReport> reports;
  for (int n = rows.first; n <= rows.last; ++n) reports.push_back(obstruction_report(model, triangle, n, o.cap));

  std::string records;
  for (const auto& r : reports) records += obstruction_record(r) + "\n";
  if (!o.report.empty()) write_report(o.report, records);
  if (o.format == "records")
    out << records;
  else
    obstruction_table(reports).render(out, table_format(o.format));
  return kPass;
}

int cmd_search(const Options& o, std::ostream& out) {
  if (o.family != "default") throw Error("unknown family '" + o.family + "' (only 'default')");
  const SearchFamily family = default_family();
  const CoefficientTriangle triangle = load_triangle(o.triangle);
  const RowRange rows = rows_or(o, RowRange{1, triangle.row_count()});
  const auto results = run_search(family, triangle, rows, o.cap);
  if (table_format(o.format) == TableFormat::kAligned)
    out << "family=" << o.family << " candidates=" << family.size() << " rows=" << rows.first << ".."
        << rows.last << '\n';
  search_table(results, o.top).render(out, table_format(o.format));
  return kPass;
}

int cmd_ingest(const Options& o, std::ostream& out) {
  const CoefficientTriangle triangle = load_triangle(o.triangle);
  std::ostringstream text;
  write_triangle(text, triangle);
  if (o.out_path.empty())
    out << text.str();
  else
    write_report(o.out_path, text.str());
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gap-constrained binary sequence models for fractional-operator coefficient triangles"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--cap", o.cap, "Largest sequence length any command may enumerate")
      ->check(CLI::Range(1, kMaxLength));

  auto* enumerate = app.add_subcommand("enumerate", "List every sequence of length n with its gap statistics");
  enumerate->add_option("-n", o.n, "Sequence length")->required();
  enumerate->add_option("--model", o.model, "Model spec or 'canonical'; adds validity and type columns");
  enumerate->add_flag("--valid-only", o.valid_only, "With --model, list valid sequences only");
  add_format_flag(enumerate, o.format, {"table", "tsv"});

  auto* stats = app.add_subcommand("stats", "Gap distribution and model histogram for length n");
  stats->add_option("-n", o.n, "Sequence length")->required();
  stats->add_option("--model", o.model, "Model spec or 'canonical'");
  add_format_flag(stats, o.format, {"table", "tsv"});

  auto* verify = app.add_subcommand("verify", "Compare model histograms against triangle rows");
  verify->add_option("--model", o.model, "Model spec or 'canonical'");
  verify->add_option("--rows", o.rows, "Row range a..b (default: every row)");
  verify->add_option("--report", o.report, "Also write one record per row to this file");
  add_triangle_flags(verify, o.triangle);
  add_format_flag(verify, o.format, {"table", "tsv", "records"});

  auto* obstruct = app.add_subcommand("obstruct", "Compare realized type counts with required type counts");
  obstruct->add_option("--model", o.model, "Model spec or 'canonical'");
  obstruct->add_option("--rows", o.rows, "Row range a..b (default: every row)");
  obstruct->add_option("--report", o.report, "Also write one record per row to this file");
  add_triangle_flags(obstruct, o.triangle);
  add_format_flag(obstruct, o.format, {"table", "tsv", "records"});

  auto* search = app.add_subcommand("search", "Evaluate a finite family of models against triangle rows");
  search->add_option("--family", o.family, "Candidate family (only 'default')");
  search->add_option("--rows", o.rows, "Row range a..b (default: every row)");
  search->add_option("--top", o.top, "Rows of the ranking to print; 0 prints all");
  add_triangle_flags(search, o.triangle);
  add_format_flag(search, o.format, {"table", "tsv"});

  auto* ingest = app.add_subcommand("ingest", "Convert a b-file or triangle file to the native triangle format");
  add_triangle_flags(ingest, o.triangle);
  ingest->add_option("--out", o.out_path, "Output path (default: stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  o.model_given = enumerate->count("--model") > 0;

  std::ostringstream buffer;
  try {
    int status = kPass;
    if (*enumerate)
      status = cmd_enumerate(o, buffer);
    else if (*stats)
      status = cmd_stats(o, buffer);
    else if (*verify)
      status = cmd_verify(o, buffer);
    else if (*obstruct)
      status = cmd_obstruct(o, buffer);
    else if (*search)
      status = cmd_search(o, buffer);
    else if (*ingest)
      status = cmd_ingest(o, buffer);
    out << buffer.str();
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace gapcount::cli
