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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "provrdf/date.hpp"
#include "provrdf/term.hpp"
#include "provrdf/triple_set.hpp"
#include "provrdf/vocabulary.hpp"

namespace provrdf {

/// The historical four-tier reliability marker.
enum class EvidenceTag { Experimental, Probable, BySimilarity, Potential };

inline constexpr std::array<EvidenceTag, 4> kEvidenceTags = {
    EvidenceTag::Experimental, EvidenceTag::Probable, EvidenceTag::BySimilarity, EvidenceTag::Potential};

/// "Experimental", "Probable", "By similarity", "Potential".
std::string_view to_string(EvidenceTag tag);
std::optional<EvidenceTag> parse_evidence_tag(std::string_view text);

/// Where a piece of information came from.
enum class SourceCategory { Literature, Program, Database };

inline constexpr std::array<SourceCategory, 3> kSourceCategories = {
    SourceCategory::Literature, SourceCategory::Program, SourceCategory::Database};

std::string_view to_string(SourceCategory category);
std::optional<SourceCategory> parse_source_category(std::string_view text);

/// Provenance record attached to reified statements: who said it and when.
struct Attribution {
  Term source;
  Date date;
  std::optional<EvidenceTag> evidence;
  std::optional<SourceCategory> category;

  friend bool operator==(const Attribution&, const Attribution&) = default;
};

/// The five statement-node triples: rdf:type rdf:Statement, rdf:subject,
/// rdf:predicate, rdf:object and :attribution. The base triple itself is
/// not included. Throws StructuralError if `predicate` is not an IRI or a
/// node is a literal.
std::array<Triple, 5> reify(const Term& subject, const Term& predicate, const Term& object, const Term& stmt_node,
                            const Term& attr_node, const Vocabulary& vocab = Vocabulary::standard());

/// `:source` and `:date`, plus `:evidence` / `:category` plain literals when set.
std::vector<Triple> encode_attribution(const Attribution& attribution, const Term& attr_node,
                                       const Vocabulary& vocab = Vocabulary::standard());

/// `entity :attribution attr_node`. Throws StructuralError for a literal entity.
Triple attach_entity_attribution(const Term& entity, const Term& attr_node,
                                 const Vocabulary& vocab = Vocabulary::standard());

struct AnnotatedStatement {
  Term entity;
  Term date;
  Term predicate;
  Term object;

  friend bool operator==(const AnnotatedStatement&, const AnnotatedStatement&) = default;
  friend auto operator<=>(const AnnotatedStatement&, const AnnotatedStatement&) = default;
};

struct AnnotatedStatements {
  std::vector<AnnotatedStatement> rows;
  /// Statement nodes linked to a matching attribution but missing one of
  /// rdf:subject / rdf:predicate / rdf:object.
  std::vector<Term> malformed;
};

/// Statements attributed to `source`, joined to the entities that carry the
/// same attribution node and to the attribution's dates.
///
/// A node counts as a statement node (and never as an entity) when it has
/// rdf:type rdf:Statement or any of the three reification predicates.
/// Multiplicities follow bag semantics over every joined value.
AnnotatedStatements annotated_statements(const TripleSet& store, const Term& source,
                                         const Vocabulary& vocab = Vocabulary::standard());

struct StaleReport {
  std::vector<std::pair<Term, Date>> stale;
  /// Attribution nodes whose `:date` object is not a `YYYY-MM-DD` literal.
  std::vector<std::pair<Term, Term>> unparseable;
};

/// Attribution nodes whose date is strictly before `cutoff`.
StaleReport stale_attributions(const TripleSet& store, Date cutoff,
                               const Vocabulary& vocab = Vocabulary::standard());

/// Namespace (absolute IRI prefix) -> category.
using SourceRules = std::vector<std::pair<std::string, SourceCategory>>;

/// Longest matching namespace wins; nullopt means unclassified.
std::optional<SourceCategory> classify_source(const Term& source, const SourceRules& rules);

}  // namespace provrdf
