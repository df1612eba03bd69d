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
#include <stdexcept>
#include <string>

namespace gapcount {

// Base of every error raised by the library. Callers that only need a
// diagnostic can catch this; tests catch the concrete kinds.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptySequence : public Error {
 public:
  EmptySequence() : Error("empty sequence") {}
};

class InvalidSymbol : public Error {
 public:
  explicit InvalidSymbol(std::size_t position)
      : Error("invalid symbol at position " + std::to_string(position)),
        position_(position) {}
  // 1-based.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class InvalidLength : public Error {
 public:
  InvalidLength(int length, int cap)
      : Error("length " + std::to_string(length) + " outside [1, " +
              std::to_string(cap) + "]"),
        length_(length) {}
  int length() const noexcept { return length_; }

 private:
  int length_;
};

class InvalidSequence : public Error {
 public:
  explicit InvalidSequence(const std::string& what)
      : Error("sequence is not valid under the model: " + what) {}
};

// Unparseable model text or a model violating its own invariants.
class InvalidModel : public Error {
 public:
  explicit InvalidModel(const std::string& what)
      : Error("bad model spec: " + what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IndexGap : public Error {
 public:
  IndexGap(long long expected, long long found)
      : Error("b-file index gap: expected " + std::to_string(expected) +
              ", found " + std::to_string(found)),
        expected_(expected),
        found_(found) {}
  long long expected() const noexcept { return expected_; }
  long long found() const noexcept { return found_; }

 private:
  long long expected_;
  long long found_;
};

class TruncatedRow : public Error {
 public:
  explicit TruncatedRow(int row)
      : Error("terms exhausted in the middle of row " + std::to_string(row)),
        row_(row) {}
  int row() const noexcept { return row_; }

 private:
  int row_;
};

class MissingRow : public Error {
 public:
  explicit MissingRow(int row)
      : Error("triangle has no row " + std::to_string(row)), row_(row) {}
  int row() const noexcept { return row_; }

 private:
  int row_;
};

// Raised when a triangle would violate its shape invariants.
class MalformedTriangle : public Error {
 public:
  explicit MalformedTriangle(const std::string& what)
      : Error("malformed triangle: " + what) {}
};

class NotAFailure : public Error {
 public:
  explicit NotAFailure(int row)
      : Error("row " + std::to_string(row) + " matches; nothing to witness"),
        row_(row) {}
  int row() const noexcept { return row_; }

 private:
  int row_;
};

}  // namespace gapcount
