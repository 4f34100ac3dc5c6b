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

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "provrdf/term.hpp"

namespace provrdf {

namespace ns {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
}  // namespace ns

/// Prefix label -> namespace IRI. The empty label is the default `:` prefix.
///
/// compact() picks the longest matching namespace; expand/compact round-trip
/// as long as no namespace in the table is a prefix of another one.
class PrefixTable {
 public:
  PrefixTable() = default;

  /// `rdf:`, the default `:` (UniProt core), `protein:` and `hamap:`.
  /// The UniProt namespaces are placeholders; load a prefix file to override.
  static PrefixTable defaults();

  void set(std::string label, std::string namespace_iri);
  std::optional<std::string> namespace_of(std::string_view label) const;

  /// Absolute IRI for `label:local`, or nullopt if the label is unknown.
  std::optional<std::string> expand(std::string_view label, std::string_view local) const;

  /// `label:local` for an absolute IRI, or nullopt if no namespace fits.
  std::optional<std::string> compact(std::string_view iri) const;

  /// Turtle/SPARQL surface form: prefixed name or `<iri>`, `_:label`, `"literal"`.
  std::string format(const Term& term) const;

  /// Entries of `other` override entries here.
  void merge(const PrefixTable& other);

  const std::map<std::string, std::string>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::string, std::string> entries_;
};

bool is_valid_prefix_label(std::string_view label);
bool is_valid_local_name(std::string_view local);
bool is_valid_blank_label(std::string_view label);

}  // namespace provrdf
