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
#include <string>
#include <vector>

namespace gapcount::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kMismatch = 1;  // a check ran and verifiably failed
inline constexpr int kUsage = 2;     // bad flags, unreadable input, parse errors

// Runs the command line `args` (args[0] is the program name). Normal output
// goes to `out` only when the command completes; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gapcount::cli
