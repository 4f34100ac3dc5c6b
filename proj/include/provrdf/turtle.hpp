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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "provrdf/prefix_table.hpp"
#include "provrdf/term.hpp"
#include "provrdf/triple_set.hpp"

namespace provrdf {

struct TurtleReport {
  /// Non-fatal findings, e.g. a missing final `.`.
  std::vector<std::string> warnings;
  /// Number of `rdf:Subject` / `rdf:Predicate` / `rdf:Object` occurrences
  /// rewritten to the lowercase reification predicates.
  std::size_t normalized = 0;
};

struct TurtleDocument {
  TripleSet triples;
  /// The caller's table plus any `@prefix` directives in the document.
  PrefixTable prefixes;
  TurtleReport report;
};

/// Parses the Turtle subset: `@prefix`/`PREFIX` directives, IRIs, prefixed
/// names, `_:label` blank nodes, quoted string literals, `a`, `;` and `,`
/// lists, comments. Blank labels are kept verbatim.
///
/// Throws SyntaxError (with line/column) on malformed input or unknown prefix.
TurtleDocument parse_turtle(std::string_view text, const PrefixTable& prefixes);

/// Writes `@prefix` directives for every table entry, then the triples
/// grouped by subject (first-appearance order) with `;` predicate lists.
std::string serialize_turtle(const TripleSet& store, const PrefixTable& prefixes);

/// Streaming writer; consecutive triples with the same subject share a
/// `;` list. Call finish() (or let the destructor do it) to close the last
/// statement.
class TurtleWriter {
 public:
  TurtleWriter(std::ostream& out, const PrefixTable& prefixes);
  ~TurtleWriter();
  TurtleWriter(const TurtleWriter&) = delete;
  TurtleWriter& operator=(const TurtleWriter&) = delete;

  void write(const Triple& triple);
  void finish();

 private:
  std::ostream& out_;
  PrefixTable prefixes_;
  std::optional<Term> subject_;
};

}  // namespace provrdf
