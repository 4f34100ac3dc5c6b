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

#include <set>

#include "provrdf/sparql.hpp"

namespace provrdf::sparql {

Query expand_reification(const Query& query, const RewriteOptions& options, const Vocabulary& vocab) {
  if (query.reification_count() == 0) return query;

  const auto user = query.variables();
  const std::set<std::string> taken(user.begin(), user.end());
  std::size_t counter = 0;
  auto fresh = [&] {
    std::string name;
    do {
      name = "_reif" + std::to_string(counter++);
    } while (taken.contains(name));
    return name;
  };

  Query out = query;
  out.where.clear();
  for (const auto& el : query.where) {
    if (const auto* tp = std::get_if<TriplePattern>(&el)) {
      out.where.emplace_back(*tp);
      continue;
    }
    const auto& rb = std::get<ReificationBlock>(el);
    const PatternTerm node = PatternTerm::var(fresh());
    out.where.emplace_back(TriplePattern{node, PatternTerm::ground(vocab.rdf_subject), rb.term.s});
    out.where.emplace_back(TriplePattern{node, PatternTerm::ground(vocab.rdf_predicate), rb.term.p});
    out.where.emplace_back(TriplePattern{node, PatternTerm::ground(vocab.rdf_object), rb.term.o});
    if (options.strict_statement_type) {
      out.where.emplace_back(
          TriplePattern{node, PatternTerm::ground(vocab.rdf_type), PatternTerm::ground(vocab.rdf_statement)});
    }
    for (const auto& [p, o] : rb.properties) out.where.emplace_back(TriplePattern{node, p, o});
  }
  return out;
}

}  // namespace provrdf::sparql
