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
#include "gapcount/sequence.hpp"

#include <algorithm>
#include <bit>

#include "gapcount/errors.hpp"
#include "parallel.hpp"

namespace gapcount {

namespace {

constexpr std::uint32_t low_mask(int n) {
  return n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
}

}  // namespace

void check_length(int n, int cap) {
  const int limit = std::min(cap, kMaxLength);
  if (n < 1 || n > limit) throw InvalidLength(n, limit);
}

BinarySequence BinarySequence::from_bits(int n, std::uint32_t bits) {
  check_length(n);
  return BinarySequence(n, bits & low_mask(n));
}

Symbol BinarySequence::at(int position) const {
  if (position < 1 || position > length_)
    throw Error("position " + std::to_string(position) + " out of range");
  return ((bits_ >> (length_ - position)) & 1u) ? Symbol::B : Symbol::R;
}

int BinarySequence::b_count() const noexcept { return std::popcount(bits_); }

std::string BinarySequence::to_string() const {
  std::string out(static_cast<std::size_t>(length_), 'R');
  for (int i = 0; i < length_; ++i)
    if ((bits_ >> (length_ - 1 - i)) & 1u) out[static_cast<std::size_t>(i)] = 'B';
  return out;
}

BinarySequence parse_sequence(std::string_view text) {
  if (text.empty()) throw EmptySequence();
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != 'R' && c != 'B') throw InvalidSymbol(i + 1);
    if (i < static_cast<std::size_t>(kMaxLength)) bits = (bits << 1) | (c == 'B' ? 1u : 0u);
  }
  if (text.size() > static_cast<std::size_t>(kMaxLength))
    throw InvalidLength(static_cast<int>(std::min<std::size_t>(text.size(), 1 << 20)), kMaxLength);
  return BinarySequence::from_bits(static_cast<int>(text.size()), bits);
}

std::optional<GapStatistics> gap_statistics(const BinarySequence& seq) noexcept {
  const std::uint32_t bits = seq.bits();
  if (bits == 0) return std::nullopt;
  const int n = seq.length();
  const int high = std::bit_width(bits) - 1;  // bit index of the first B
  const int low = std::countr_zero(bits);     // bit index of the last B
  return GapStatistics{n - high, n - low, high - low};
}

SequenceSpace SequenceSpace::slice(std::uint64_t first, std::uint64_t last) const {
  const std::uint64_t size = this->size();
  first = std::min(first, size);
  last = std::clamp(last, first, size);
  return SequenceSpace(n_, first_ + first, first_ + last);
}

SequenceSpace enumerate_all(int n, int cap) {
  check_length(n, cap);
  return SequenceSpace(n, 0, std::uint64_t{1} << n);
}

std::map<int, std::uint64_t> count_by_gap(int n, int cap) {
  const SequenceSpace space = enumerate_all(n, cap);
  using Counts = std::vector<std::uint64_t>;
  Counts totals = detail::parallel_reduce(
      space.size(), std::uint64_t{1} << 16, Counts(static_cast<std::size_t>(n), 0),
      [&](std::uint64_t first, std::uint64_t last) {
        Counts local(static_cast<std::size_t>(n), 0);
        for (const BinarySequence seq : space.slice(first, last))
          if (auto stats = gap_statistics(seq)) ++local[static_cast<std::size_t>(stats->gap)];
        return local;
      },
      [](Counts acc, Counts part) {
        for (std::size_t g = 0; g < acc.size(); ++g) acc[g] += part[g];
        return acc;
      });
  std::map<int, std::uint64_t> out;
  for (std::size_t g = 0; g < totals.size(); ++g)
    if (totals[g] != 0) out.emplace(static_cast<int>(g), totals[g]);
  return out;
}

}  // namespace gapcount
