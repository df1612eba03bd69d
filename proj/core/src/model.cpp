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
#include "gapcount/model.hpp"

#include <charconv>
#include <sstream>

#include "gapcount/errors.hpp"
#include "parallel.hpp"

namespace gapcount {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

int apply(const AffineRule& rule, int gap) { return rule.slope * gap + rule.offset; }

bool b_count_ok(const std::optional<BCountRange>& range, int b) {
  return !range || (b >= range->min_b && b <= range->max_b);
}

bool admits(const ModelSpec& model, int n, int gap, int b) {
  if (b < 1) return false;
  const auto limit = resolve_threshold(model.gap_threshold, n);
  if (limit && gap > *limit) return false;
  return b_count_ok(model.b_count, b);
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last)
    throw InvalidModel("expected integer in " + std::string(context) + ", got '" + std::string(s) + "'");
  return value;
}

// "(a,b)" -> AffineRule
AffineRule parse_pair(std::string_view s, std::string_view context) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw InvalidModel("expected (a,b) in " + std::string(context));
  s = s.substr(1, s.size() - 2);
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) throw InvalidModel("expected (a,b) in " + std::string(context));
  return {parse_int(s.substr(0, comma), context), parse_int(s.substr(comma + 1), context)};
}

bool consume_prefix(std::string_view& s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix) return false;
  s.remove_prefix(prefix.size());
  return true;
}

GapThreshold parse_threshold(std::string_view s) {
  s = trim(s);
  if (s == "inf") return UnboundedGap{};
  if (s == "n/2") return HalfFloorGap{};
  return ConstantGap{parse_int(s, "gap threshold")};
}

TypeRule parse_type(std::string_view s) {
  s = trim(s);
  if (s == "parity-paper") return ParityPaperRule{};
  if (consume_prefix(s, "affine")) return parse_pair(s, "affine rule");
  if (consume_prefix(s, "even")) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) throw InvalidModel("even rule needs /odd(a,b)");
    const AffineRule even = parse_pair(s.substr(0, slash), "even rule");
    std::string_view rest = trim(s.substr(slash + 1));
    if (!consume_prefix(rest, "odd")) throw InvalidModel("even rule needs /odd(a,b)");
    return EvenOddRule{even, parse_pair(rest, "odd rule")};
  }
  throw InvalidModel("unknown type rule '" + std::string(s) + "'");
}

std::optional<BCountRange> parse_b_count(std::string_view s) {
  s = trim(s);
  if (s == "*") return std::nullopt;
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) throw InvalidModel("expected bcount=min..max or *");
  return BCountRange{parse_int(s.substr(0, dots), "bcount"), parse_int(s.substr(dots + 2), "bcount")};
}

}  // namespace

void ModelSpec::validate() const {
  if (const auto* c = std::get_if<ConstantGap>(&gap_threshold); c && c->limit < 0)
    throw InvalidModel("gap threshold must be >= 0");
  if (b_count) {
    if (b_count->min_b < 1) throw InvalidModel("bcount minimum must be >= 1");
    if (b_count->min_b > b_count->max_b) throw InvalidModel("bcount minimum exceeds maximum");
  }
}

ModelSpec canonical_model() { return ModelSpec{ConstantGap{1}, ParityPaperRule{}, std::nullopt}; }

std::optional<int> resolve_threshold(const GapThreshold& threshold, int n) {
  return std::visit(Overloaded{
                        [](const ConstantGap& c) -> std::optional<int> { return c.limit; },
                        [n](const HalfFloorGap&) -> std::optional<int> { return n / 2; },
                        [](const UnboundedGap&) -> std::optional<int> { return std::nullopt; },
                    },
                    threshold);
}

int type_for_gap(const TypeRule& rule, int n, int gap) {
  const bool even = n % 2 == 0;
  return std::visit(Overloaded{
                        [&](const ParityPaperRule&) { return even ? 2 - gap : gap + 1; },
                        [&](const AffineRule& r) { return apply(r, gap); },
                        [&](const EvenOddRule& r) { return apply(even ? r.even : r.odd, gap); },
                    },
                    rule);
}

bool is_valid(const ModelSpec& model, const BinarySequence& seq) {
  const auto stats = gap_statistics(seq);
  return stats && admits(model, seq.length(), stats->gap, seq.b_count());
}

int type_of(const ModelSpec& model, const BinarySequence& seq) {
  if (!is_valid(model, seq)) throw InvalidSequence(seq.to_string() + " under " + to_string(model));
  return type_for_gap(model.type_rule, seq.length(), gap_statistics(seq)->gap);
}

std::vector<BinarySequence> valid_set(const ModelSpec& model, int n, int cap) {
  model.validate();
  const SequenceSpace space = enumerate_all(n, cap);
  using List = std::vector<BinarySequence>;
  return detail::parallel_reduce(
      space.size(), std::uint64_t{1} << 16, List{},
      [&](std::uint64_t first, std::uint64_t last) {
        List local;
        for (const BinarySequence seq : space.slice(first, last))
          if (is_valid(model, seq)) local.push_back(seq);
        return local;
      },
      [](List acc, List part) {
        acc.insert(acc.end(), part.begin(), part.end());
        return acc;
      });
}

std::uint64_t TypeHistogram::total() const {
  std::uint64_t sum = 0;
  for (const auto& [k, c] : counts) sum += c;
  return sum;
}

TypeHistogram type_histogram(const ModelSpec& model, int n, int cap) {
  model.validate();
  const SequenceSpace space = enumerate_all(n, cap);
  using Counts = std::map<int, std::uint64_t>;
  TypeHistogram hist{n, {}};
  hist.counts = detail::parallel_reduce(
      space.size(), std::uint64_t{1} << 16, Counts{},
      [&](std::uint64_t first, std::uint64_t last) {
        Counts local;
        for (const BinarySequence seq : space.slice(first, last))
          if (is_valid(model, seq)) ++local[type_of(model, seq)];
        return local;
      },
      [](Counts acc, const Counts& part) {
        for (const auto& [k, c] : part) acc[k] += c;
        return acc;
      });
  return hist;
}

RowProfile RowProfile::build(int n, int cap) {
  const SequenceSpace space = enumerate_all(n, cap);
  const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  using Cells = std::vector<std::uint64_t>;
  RowProfile profile(n);
  profile.cells_ = detail::parallel_reduce(
      space.size(), std::uint64_t{1} << 16, Cells(cells, 0),
      [&](std::uint64_t first, std::uint64_t last) {
        Cells local(cells, 0);
        for (const BinarySequence seq : space.slice(first, last))
          if (const auto stats = gap_statistics(seq))
            ++local[static_cast<std::size_t>(stats->gap * n + seq.b_count() - 1)];
        return local;
      },
      [](Cells acc, const Cells& part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
        return acc;
      });
  return profile;
}

TypeHistogram type_histogram(const ModelSpec& model, const RowProfile& profile) {
  model.validate();
  const int n = profile.length();
  TypeHistogram hist{n, {}};
  for (int gap = 0; gap < n; ++gap)
    for (int b = 1; b <= n; ++b)
      if (const auto c = profile.cell(gap, b); c != 0 && admits(model, n, gap, b))
        hist.counts[type_for_gap(model.type_rule, n, gap)] += c;
  return hist;
}

std::set<int> realized_types(const ModelSpec& model, int n, int cap) {
  std::set<int> types;
  for (const auto& [k, c] : type_histogram(model, n, cap).counts) types.insert(k);
  return types;
}

int max_type_count(const ModelSpec& model, int n, int cap) {
  return static_cast<int>(realized_types(model, n, cap).size());
}

std::string to_string(const ModelSpec& model) {
  std::ostringstream out;
  out << "gap<=";
  std::visit(Overloaded{
                 [&](const ConstantGap& c) { out << c.limit; },
                 [&](const HalfFloorGap&) { out << "n/2"; },
                 [&](const UnboundedGap&) { out << "inf"; },
             },
             model.gap_threshold);
  out << "; type=";
  std::visit(Overloaded{
                 [&](const ParityPaperRule&) { out << "parity-paper"; },
                 [&](const AffineRule& r) { out << "affine(" << r.slope << ',' << r.offset << ')'; },
                 [&](const EvenOddRule& r) {
                   out << "even(" << r.even.slope << ',' << r.even.offset << ")/odd(" << r.odd.slope
                       << ',' << r.odd.offset << ')';
                 },
             },
             model.type_rule);
  out << "; bcount=";
  if (model.b_count)
    out << model.b_count->min_b << ".." << model.b_count->max_b;
  else
    out << '*';
  return out.str();
}

ModelSpec parse_model(std::string_view text) {
  text = trim(text);
  if (text == "canonical") return canonical_model();

  std::optional<GapThreshold> threshold;
  std::optional<TypeRule> rule;
  std::optional<std::optional<BCountRange>> b_count;
  while (!text.empty()) {
    const auto semi = text.find(';');
    std::string_view field = trim(text.substr(0, semi));
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    if (field.empty()) continue;
    if (consume_prefix(field, "gap<=")) {
      if (threshold) throw InvalidModel("duplicate gap field");
      threshold = parse_threshold(field);
    } else if (consume_prefix(field, "type=")) {
      if (rule) throw InvalidModel("duplicate type field");
      rule = parse_type(field);
    } else if (consume_prefix(field, "bcount=")) {
      if (b_count) throw InvalidModel("duplicate bcount field");
      b_count = parse_b_count(field);
    } else {
      throw InvalidModel("unknown field '" + std::string(field) + "'");
    }
  }
  if (!threshold) throw InvalidModel("missing gap<= field");
  if (!rule) throw InvalidModel("missing type= field");
  ModelSpec model{*threshold, *rule, b_count.value_or(std::nullopt)};
  model.validate();
  return model;
}

}  // namespace gapcount
