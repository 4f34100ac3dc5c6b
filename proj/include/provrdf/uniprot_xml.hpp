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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "provrdf/date.hpp"
#include "provrdf/evidence.hpp"
#include "provrdf/prefix_table.hpp"
#include "provrdf/triple_set.hpp"
#include "provrdf/vocabulary.hpp"

namespace provrdf {

/// One `<evidence key=... category=... type=... attribute=... date=...>` element.
struct EvidenceDecl {
  std::string key;
  std::string category;
  std::string type;
  std::string attribute;
  Date date;
  std::size_t line = 0;

  friend bool operator==(const EvidenceDecl&, const EvidenceDecl&) = default;
};

/// An element with element children inside an entry, e.g. recommendedName.
struct Container {
  std::string name;
  std::optional<std::size_t> parent;
  /// Attributes other than `evidence`, kept opaque (e.g. `ref`).
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<std::string> evidence_keys;
};

/// A text-bearing leaf element, e.g. fullName.
struct AnnotatedValue {
  /// Slash-joined element names below the entry, e.g. "recommendedName/fullName".
  std::string path;
  std::string name;
  std::string text;
  /// Space-separated `evidence` attribute, split, order preserved.
  std::vector<std::string> evidence_keys;
  std::optional<std::size_t> container;
  std::vector<std::pair<std::string, std::string>> attributes;
};

struct EntryDocument {
  std::string accession;
  std::vector<Container> containers;
  std::vector<AnnotatedValue> values;
  std::map<std::string, EvidenceDecl> evidence;
};

/// Parses a document whose root is an `<entry>` or which holds exactly one
/// entry. The accession is read from an `accession` attribute or the first
/// `<accession>` child. No evidence resolution happens here.
///
/// Throws SyntaxError for malformed XML or evidence declarations without a
/// key or a valid date; DataError for duplicate evidence keys.
EntryDocument parse_entry_xml(std::string_view text);

/// Every entry in the document (root `<entry>` or entries below the root).
std::vector<EntryDocument> parse_entries_xml(std::string_view text);

struct EvidenceLink {
  std::string key;
  /// Index into EntryDocument::values, or into containers when on_container.
  std::size_t index = 0;
  bool on_container = false;

  friend bool operator==(const EvidenceLink&, const EvidenceLink&) = default;
  friend auto operator<=>(const EvidenceLink&, const EvidenceLink&) = default;
};

struct ResolutionReport {
  std::vector<EvidenceLink> resolved;
  std::vector<EvidenceLink> dangling;
  /// Declared but never referenced, sorted.
  std::vector<std::string> unused;

  bool ok() const { return dangling.empty(); }
};

ResolutionReport resolve_evidence(const EntryDocument& doc);

enum class NodeStyle { Blank, Iri };
enum class AttributionScope { Entry, Run };

struct ConversionPolicy {
  bool strict = true;
  /// Evidence type -> namespace IRI; source IRI = namespace + attribute.
  std::map<std::string, std::string> type_namespaces;
  /// Raw XML category -> SourceCategory. Unmapped categories stay unclassified.
  std::map<std::string, SourceCategory> categories;
  /// Fallback classification by source namespace.
  SourceRules source_rules;
  AttributionScope attribution_scope = AttributionScope::Entry;
  NodeStyle node_style = NodeStyle::Blank;
  std::string node_base;
  std::string entity_namespace;
  std::set<std::string> structured_names{"recommendedName", "alternativeName", "submittedName"};
  std::set<std::string> transparent{"protein"};

  /// HAMAP -> `hamap:`, entities under `protein:` (when the prefixes exist).
  static ConversionPolicy defaults(const PrefixTable& prefixes);

  /// `key = value` lines over defaults(); `#` starts a comment.
  /// Throws SyntaxError for unknown keys or bad values.
  static ConversionPolicy parse(std::string_view text, const PrefixTable& prefixes);
};

/// Converts entries into reified RDF. One Converter is one conversion run:
/// node labels are unique across every entry it sees.
class Converter {
 public:
  Converter(ConversionPolicy policy, Vocabulary vocab = Vocabulary::standard());

  /// Emits the base triples of every value and, per resolved evidence link,
  /// reify + encode_attribution + attach_entity_attribution triples.
  ///
  /// Throws DataError on dangling keys under a strict policy, on evidence
  /// types without a namespace mapping, or on a missing accession; nothing
  /// from the failing entry is emitted.
  ResolutionReport add(const EntryDocument& doc);

  const TripleSet& triples() const { return out_; }
  TripleSet take() { return std::move(out_); }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  Term fresh_node(const std::string& accession, const char* kind, std::size_t& entry_counter);

  ConversionPolicy policy_;
  Vocabulary vocab_;
  TripleSet out_;
  std::vector<std::string> warnings_;
  std::size_t blank_counter_ = 0;
  std::map<std::string, Term> run_attributions_;
};

TripleSet xml_to_rdf(const EntryDocument& doc, const ConversionPolicy& policy,
                     const Vocabulary& vocab = Vocabulary::standard());

}  // namespace provrdf
