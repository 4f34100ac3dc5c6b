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
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "provrdf/date.hpp"
#include "provrdf/prefix_table.hpp"
#include "provrdf/triple_set.hpp"
#include "provrdf/vocabulary.hpp"

namespace provrdf {

/// Synthetic corpus parameters.
///
/// Each entry gets `statements_per_entry` base triples. Each base triple is
/// attributed with probability `attribution_fraction`; an attributed triple
/// gets its own statement node (5 triples) pointing at the attribution node
/// of a source drawn from a pool of `source_pool` sources. Every source has one
/// date drawn from [start, end], so attribution nodes are shared per
/// (source, date) and cost 2 triples each, once.
///
/// With `entity_links` off the metadata fraction is close to 5f/(1+5f);
/// turning them on adds about one `entity :attribution node` triple per
/// attributed statement.
struct GenConfig {
  std::size_t entries = 1000;
  std::size_t statements_per_entry = 10;
  double attribution_fraction = 1.0 / 45.0;
  std::size_t source_pool = 20;
  Date start = *Date::parse("2005-01-01");
  Date end = *Date::parse("2010-12-31");
  std::uint64_t seed = 1;
  bool entity_links = false;
  std::string entity_namespace = "http://purl.uniprot.org/uniprot/";
  std::string source_namespace = "http://purl.uniprot.org/hamap/";

  /// Throws Error unless 0 <= f <= 1, start <= end and the pool is non-empty
  /// whenever f > 0.
  void validate() const;

  /// `key = value` lines; keys match the field names. Throws SyntaxError.
  static GenConfig parse(std::string_view text);
  static GenConfig parse(std::string_view text, GenConfig base);
};

/// Decimal ("0.0222") or rational ("1/45").
std::optional<double> parse_fraction(std::string_view text);

struct GenCounts {
  std::size_t base = 0;
  std::size_t attributed_statements = 0;
  std::size_t reification = 0;
  std::size_t attribution_nodes = 0;
  std::size_t attribution = 0;
  std::size_t entity_links = 0;

  std::size_t metadata() const { return reification + attribution + entity_links; }
  std::size_t total() const { return base + metadata(); }
};

/// Emits the corpus triple by triple, entry by entry. Deterministic for a
/// given config: std::mt19937_64 plus fixed integer mappings, no standard
/// library distributions.
GenCounts generate(const GenConfig& config, const std::function<void(const Triple&)>& sink,
                   const Vocabulary& vocab = Vocabulary::standard());

TripleSet generate_store(const GenConfig& config, GenCounts* counts = nullptr,
                         const Vocabulary& vocab = Vocabulary::standard());

/// Streams the corpus as Turtle.
GenCounts write_corpus(const GenConfig& config, std::ostream& out, const PrefixTable& prefixes,
                       const Vocabulary& vocab = Vocabulary::standard());

struct CorpusStats {
  std::size_t total = 0;
  std::size_t metadata = 0;
  /// metadata / total; 0 for an empty store.
  double fraction = 0.0;
  bool empty = true;
  std::size_t attributed_statements = 0;
  std::size_t distinct_sources = 0;
  /// Year ("2010") -> count of `:date` values; unparseable ones under "invalid".
  std::map<std::string, std::size_t> date_histogram;
};

/// Metadata = triples whose predicate is in Vocabulary::metadata_predicates()
/// or whose object is rdf:Statement.
CorpusStats stats(const TripleSet& store, const Vocabulary& vocab = Vocabulary::standard());

/// Tab-separated `key value` lines.
std::string format_stats(const CorpusStats& stats);

}  // namespace provrdf
