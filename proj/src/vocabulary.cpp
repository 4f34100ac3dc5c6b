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

#include "provrdf/vocabulary.hpp"

namespace provrdf {

Vocabulary Vocabulary::from(const PrefixTable& prefixes) {
  Vocabulary v;
  v.core_namespace = prefixes.namespace_of("").value_or("http://purl.uniprot.org/core/");
  const std::string rdf(ns::rdf);
  v.rdf_type = Term::iri(rdf + "type");
  v.rdf_statement = Term::iri(rdf + "Statement");
  v.rdf_subject = Term::iri(rdf + "subject");
  v.rdf_predicate = Term::iri(rdf + "predicate");
  v.rdf_object = Term::iri(rdf + "object");
  v.attribution = v.core("attribution");
  v.source = v.core("source");
  v.date = v.core("date");
  v.evidence = v.core("evidence");
  v.category = v.core("category");
  v.structured_name = v.core("Structured_Name");
  return v;
}

const Vocabulary& Vocabulary::standard() {
  static const Vocabulary v = from(PrefixTable::defaults());
  return v;
}

std::vector<Term> Vocabulary::metadata_predicates() const {
  return {rdf_subject, rdf_predicate, rdf_object, attribution, source, date, evidence, category};
}

}  // namespace provrdf
