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

#include <vector>

#include "provrdf/prefix_table.hpp"
#include "provrdf/term.hpp"

namespace provrdf {

/// Every IRI the provenance encoding uses, in one place.
///
/// The `rdf:` terms are fixed; the provenance predicates live in the core
/// namespace, which is whatever the default `:` prefix maps to.
struct Vocabulary {
  Term rdf_type;
  Term rdf_statement;
  Term rdf_subject;
  Term rdf_predicate;
  Term rdf_object;
  Term attribution;
  Term source;
  Term date;
  Term evidence;
  Term category;
  Term structured_name;

  static Vocabulary from(const PrefixTable& prefixes);
  /// Vocabulary over PrefixTable::defaults().
  static const Vocabulary& standard();

  /// Predicates whose triples count as provenance metadata.
  std::vector<Term> metadata_predicates() const;
  Term core(const std::string& local) const { return Term::iri(core_namespace + local); }

  std::string core_namespace;
};

}  // namespace provrdf
