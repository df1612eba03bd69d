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

#include <compare>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace gapcount {

// Largest sequence length any enumeration accepts. Callers may impose a
// lower cap (the CLI's --cap) but never a higher one.
inline constexpr int kMaxLength = 30;

enum class Symbol : std::uint8_t { R = 0, B = 1 };

// Throws InvalidLength unless 1 <= n <= cap (cap itself clamped to kMaxLength).
void check_length(int n, int cap = kMaxLength);

// An ordered tuple over {R, B} of length 1..kMaxLength.
//
// Symbols are packed into an integer with B = 1 and position 1 in the most
// significant of the n used bits, so that the numeric order of the packed
// words is exactly the lexicographic order with R < B.
class BinarySequence {
 public:
  // Builds the sequence whose packed word is `bits` (only the low n bits are
  // kept). Throws InvalidLength.
  static BinarySequence from_bits(int n, std::uint32_t bits);

  int length() const noexcept { return length_; }
  std::uint32_t bits() const noexcept { return bits_; }

  // 1-based position.
  Symbol at(int position) const;
  int b_count() const noexcept;
  bool has_b() const noexcept { return bits_ != 0; }

  std::string to_string() const;

  friend bool operator==(const BinarySequence&, const BinarySequence&) = default;
  // Lexicographic with R < B for equal lengths; shorter sequences first.
  friend std::strong_ordering operator<=>(const BinarySequence& a,
                                          const BinarySequence& b) noexcept {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  friend class SequenceSpace;
  BinarySequence(int n, std::uint32_t bits) : length_(n), bits_(bits) {}

  int length_;
  std::uint32_t bits_;
};

// Parses the one-character-per-symbol text form, e.g. "RBB".
// Throws EmptySequence or InvalidSymbol (1-based position).
BinarySequence parse_sequence(std::string_view text);

struct GapStatistics {
  int first_b;  // 1-based
  int last_b;   // 1-based
  int gap;      // last_b - first_b

  friend bool operator==(const GapStatistics&, const GapStatistics&) = default;
};

// Empty when the sequence has no B.
std::optional<GapStatistics> gap_statistics(const BinarySequence& seq) noexcept;

// The whole space of length-n sequences in lexicographic order, addressed by
// rank in [0, 2^n). Cheap to copy; slices are disjoint and can be handed to
// independent workers.
class SequenceSpace {
 public:
  class iterator {
   public:
    using iterator_category = std::random_access_iterator_tag;
    using iterator_concept = std::random_access_iterator_tag;
    using value_type = BinarySequence;
    using difference_type = std::int64_t;
    using reference = BinarySequence;

    iterator() = default;
    iterator(int n, std::uint64_t rank) : n_(n), rank_(rank) {}

    BinarySequence operator*() const { return BinarySequence(n_, static_cast<std::uint32_t>(rank_)); }
    BinarySequence operator[](difference_type d) const { return *(*this + d); }

    iterator& operator++() { ++rank_; return *this; }
    iterator operator++(int) { auto t = *this; ++rank_; return t; }
    iterator& operator--() { --rank_; return *this; }
    iterator operator--(int) { auto t = *this; --rank_; return t; }
    iterator& operator+=(difference_type d) { rank_ += d; return *this; }
    iterator& operator-=(difference_type d) { rank_ -= d; return *this; }
    friend iterator operator+(iterator it, difference_type d) { return it += d; }
    friend iterator operator+(difference_type d, iterator it) { return it += d; }
    friend iterator operator-(iterator it, difference_type d) { return it -= d; }
    friend difference_type operator-(const iterator& a, const iterator& b) {
      return static_cast<difference_type>(a.rank_) -
             static_cast<difference_type>(b.rank_);
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.rank_ == b.rank_;
    }
    friend auto operator<=>(const iterator& a, const iterator& b) {
      return a.rank_ <=> b.rank_;
    }

   private:
    int n_ = 1;
    std::uint64_t rank_ = 0;
  };

  int length() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return last_ - first_; }
  iterator begin() const { return {n_, first_}; }
  iterator end() const { return {n_, last_}; }
  BinarySequence operator[](std::uint64_t i) const { return begin()[static_cast<std::int64_t>(i)]; }

  // Ranks [first, last) relative to this space, clamped to its size.
  SequenceSpace slice(std::uint64_t first, std::uint64_t last) const;

 private:
  friend SequenceSpace enumerate_all(int n, int cap);
  SequenceSpace(int n, std::uint64_t first, std::uint64_t last)
      : n_(n), first_(first), last_(last) {}

  int n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

// All 2^n sequences of length n, lexicographic with R < B.
SequenceSpace enumerate_all(int n, int cap = kMaxLength);

// Number of sequences of length n (with at least one B) per exact gap value.
// Only realized gaps appear as keys.
std::map<int, std::uint64_t> count_by_gap(int n, int cap = kMaxLength);

}  // namespace gapcount
