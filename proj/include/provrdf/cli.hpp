// Copyright 2026 The provrdf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace provrdf::cli {

/// Exit codes shared by every command.
enum ExitStatus : int {
  kSuccess = 0,
  /// Dangling evidence keys, duplicate keys, unmapped evidence types.
  kDataError = 1,
  /// Bad flags, unreadable files, malformed XML / Turtle / SPARQL.
  kUsageError = 2,
};

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out` (or the -o file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace provrdf::cli
