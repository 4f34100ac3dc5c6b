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

#include "provrdf/evidence.hpp"

#include <unordered_set>

#include "provrdf/errors.hpp"

namespace provrdf {

std::string_view to_string(EvidenceTag tag) {
  switch (tag) {
    case EvidenceTag::Experimental: return "Experimental";
    case EvidenceTag::Probable: return "Probable";
    case EvidenceTag::BySimilarity: return "By similarity";
    case EvidenceTag::Potential: return "Potential";
  }
  return {};
}

std::optional<EvidenceTag> parse_evidence_tag(std::string_view text) {
  for (EvidenceTag tag : kEvidenceTags) {
    if (to_string(tag) == text) return tag;
  }
  return std::nullopt;
}

std::string_view to_string(SourceCategory category) {
  switch (category) {
    case SourceCategory::Literature: return "Literature";
    case SourceCategory::Program: return "Program";
    case SourceCategory::Database: return "Database";
  }
  return {};
}

std::optional<SourceCategory> parse_source_category(std::string_view text) {
  for (SourceCategory c : kSourceCategories) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

namespace {

void require_node(const Term& node, const char* role) {
  if (node.is_literal()) throw StructuralError(std::string(role) + " must be an IRI or blank node");
}

}  // namespace

std::array<Triple, 5> reify(const Term& subject, const Term& predicate, const Term& object, const Term& stmt_node,
                            const Term& attr_node, const Vocabulary& vocab) {
  require_node(stmt_node, "statement node");
  require_node(attr_node, "attribution node");
  if (!predicate.is_iri()) throw StructuralError("reified predicate must be an IRI");
  return {Triple{stmt_node, vocab.rdf_type, vocab.rdf_statement},
          Triple{stmt_node, vocab.rdf_subject, subject},
          Triple{stmt_node, vocab.rdf_predicate, predicate},
          Triple{stmt_node, vocab.rdf_object, object},
          Triple{stmt_node, vocab.attribution, attr_node}};
}

std::vector<Triple> encode_attribution(const Attribution& a, const Term& attr_node, const Vocabulary& vocab) {
  require_node(attr_node, "attribution node");
  std::vector<Triple> out{{attr_node, vocab.source, a.source}, {attr_node, vocab.date, Term::literal(a.date.str())}};
  if (a.evidence) out.push_back({attr_node, vocab.evidence, Term::literal(std::string(to_string(*a.evidence)))});
  if (a.category) out.push_back({attr_node, vocab.category, Term::literal(std::string(to_string(*a.category)))});
  return out;
}

Triple attach_entity_attribution(const Term& entity, const Term& attr_node, const Vocabulary& vocab) {
  if (entity.is_literal()) throw StructuralError("entity must be an IRI or blank node");
  require_node(attr_node, "attribution node");
  return {entity, vocab.attribution, attr_node};
}

AnnotatedStatements annotated_statements(const TripleSet& store, const Term& source, const Vocabulary& vocab) {
  AnnotatedStatements result;
  auto reader = store.read();
  const auto src = reader.find(source);
  const auto p_source = reader.find(vocab.source);
  const auto p_attribution = reader.find(vocab.attribution);
  if (!src || !p_source || !p_attribution) return result;
  const auto p_date = reader.find(vocab.date);
  const auto p_type = reader.find(vocab.rdf_type);
  const auto o_statement = reader.find(vocab.rdf_statement);
  const auto p_subject = reader.find(vocab.rdf_subject);
  const auto p_predicate = reader.find(vocab.rdf_predicate);
  const auto p_object = reader.find(vocab.rdf_object);

  auto objects = [&](TermId s, std::optional<TermId> p) {
    std::vector<TermId> out;
    if (p) reader.for_each_match(s, p, std::nullopt, [&](const IdTriple& t) { out.push_back(t.o); });
    return out;
  };
  auto is_statement_node = [&](TermId n) {
    if (p_type && o_statement && reader.count(n, p_type, o_statement) > 0) return true;
    for (auto p : {p_subject, p_predicate, p_object}) {
      if (p && reader.count(n, p, std::nullopt) > 0) return true;
    }
    return false;
  };

  std::unordered_set<TermId> reported;
  reader.for_each_match(std::nullopt, p_source, src, [&](const IdTriple& source_triple) {
    const TermId attr = source_triple.s;
    const auto dates = objects(attr, p_date);
    struct Statement {
      std::vector<TermId> subjects, predicates, objects;
    };
    std::vector<Statement> statements;
    std::vector<TermId> entities;
    reader.for_each_match(std::nullopt, p_attribution, attr, [&](const IdTriple& link) {
      if (!is_statement_node(link.s)) {
        entities.push_back(link.s);
        return;
      }
      Statement st{objects(link.s, p_subject), objects(link.s, p_predicate), objects(link.s, p_object)};
      if (st.subjects.empty() || st.predicates.empty() || st.objects.empty()) {
        if (reported.insert(link.s).second) result.malformed.push_back(reader.term(link.s));
        return;
      }
      statements.push_back(std::move(st));
    });
    for (const Statement& st : statements) {
      for (TermId entity : entities) {
        for (TermId date : dates) {
          for (std::size_t k = 0; k < st.subjects.size(); ++k) {
            for (TermId p : st.predicates) {
              for (TermId o : st.objects) {
                result.rows.push_back({reader.term(entity), reader.term(date), reader.term(p), reader.term(o)});
              }
            }
          }
        }
      }
    }
  });
  return result;
}

StaleReport stale_attributions(const TripleSet& store, Date cutoff, const Vocabulary& vocab) {
  StaleReport report;
  for (const Triple& t : store.match(std::nullopt, vocab.date, std::nullopt)) {
    std::optional<Date> d;
    if (t.object.is_literal()) d = Date::parse(t.object.value());
    if (!d) {
      report.unparseable.emplace_back(t.subject, t.object);
    } else if (*d < cutoff) {
      report.stale.emplace_back(t.subject, *d);
    }
  }
  return report;
}

std::optional<SourceCategory> classify_source(const Term& source, const SourceRules& rules) {
  if (!source.is_iri()) return std::nullopt;
  const std::pair<std::string, SourceCategory>* best = nullptr;
  for (const auto& rule : rules) {
    if (!source.value().starts_with(rule.first)) continue;
    if (best == nullptr || rule.first.size() > best->first.size()) best = &rule;
  }
  if (best == nullptr) return std::nullopt;
  return best->second;
}

}  // namespace provrdf
