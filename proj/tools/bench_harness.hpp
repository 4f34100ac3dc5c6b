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

// Desk-scale benchmark shared by provrdf_bench and the acceptance suite.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <vector>

#include "provrdf/corpus.hpp"
#include "provrdf/sparql.hpp"

namespace provrdf::bench {

inline constexpr char kProvenanceQuery[] = R"(select ?protein ?date ?predicate ?object
where {
?reif rdf:subject ?subject ;
  rdf:predicate ?predicate ;
  rdf:object ?object ;
  :attribution ?attribution .
?protein :attribution ?attribution .
?attribution :source hamap:MF_00000 ;
  :date ?date . }
)";

/// The same shape with the source left open: joins every attributed statement.
inline constexpr char kAllSourcesQuery[] = R"(select ?protein ?date ?predicate ?object
where {
?reif rdf:subject ?subject ;
  rdf:predicate ?predicate ;
  rdf:object ?object ;
  :attribution ?attribution .
?protein :attribution ?attribution .
?attribution :source ?source ;
  :date ?date . }
)";

struct Result {
  std::size_t triples = 0;
  double build_ms = 0;
  double match_ms = 0;  // median of the timed runs
  std::size_t match_rows = 0;
  double query_ms = 0;  // median of the timed runs
  std::size_t query_rows = 0;
  double all_sources_ms = 0;  // single run, informational
  std::size_t all_sources_rows = 0;
};

/// About `target` triples: 10 statements per entry, f = 1/45, entity links on,
/// 5000 sources so each attribution node serves a handful of statements.
inline GenConfig config_for(std::size_t target) {
  GenConfig cfg;
  cfg.statements_per_entry = 10;
  cfg.attribution_fraction = 1.0 / 45.0;
  cfg.entity_links = true;
  cfg.source_pool = 5000;
  cfg.seed = 20101102;
  const double per_base = 1.0 + 6.0 * cfg.attribution_fraction;
  cfg.entries = static_cast<std::size_t>(static_cast<double>(target) / per_base / 10.0) + 1;
  return cfg;
}

template <typename F>
double millis(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

inline Result run(std::size_t target, int repeats = 5) {
  Result r;
  TripleSet store;
  r.build_ms = millis([&] { store = generate_store(config_for(target)); });
  r.triples = store.size();

  const Term predicate = Vocabulary::standard().core("annotation0");
  std::vector<double> match_times, query_times;
  for (int i = 0; i < repeats; ++i) {
    match_times.push_back(millis([&] { r.match_rows = store.match(std::nullopt, predicate, std::nullopt).size(); }));
  }
  const auto query = sparql::parse_query(kProvenanceQuery);
  for (int i = 0; i < repeats; ++i) {
    query_times.push_back(millis([&] { r.query_rows = sparql::evaluate(query, store).rows.size(); }));
  }
  const auto all_sources = sparql::parse_query(kAllSourcesQuery);
  r.all_sources_ms = millis([&] { r.all_sources_rows = sparql::evaluate(all_sources, store).rows.size(); });
  r.match_ms = median(match_times);
  r.query_ms = median(query_times);
  return r;
}

}  // namespace provrdf::bench
