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

#include "provrdf/corpus.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "provrdf/errors.hpp"
#include "provrdf/evidence.hpp"
#include "provrdf/turtle.hpp"
#include "key_value.hpp"

namespace provrdf {
namespace {

// Uniform in [0, 1) from the top 53 bits.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Multiply-high bounded integer in [0, n).
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

std::string padded(const char* prefix, std::size_t n, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%0*zu", prefix, width, n);
  return buf;
}

using detail::trim;

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<double> parse_fraction(std::string_view text) {
  const std::string s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return parse_number<double>(s);
  auto num = parse_number<double>(trim(s.substr(0, slash)));
  auto den = parse_number<double>(trim(s.substr(slash + 1)));
  if (!num || !den || *den == 0.0) return std::nullopt;
  return *num / *den;
}

void GenConfig::validate() const {
  if (!(attribution_fraction >= 0.0 && attribution_fraction <= 1.0)) {
    throw Error("attribution fraction must lie in [0, 1]");
  }
  if (end < start) throw Error("date range start must not be after end");
  if (attribution_fraction > 0.0 && source_pool == 0) throw Error("source pool must be non-empty when f > 0");
}

GenConfig GenConfig::parse(std::string_view text) { return parse(text, GenConfig{}); }

GenConfig GenConfig::parse(std::string_view text, GenConfig cfg) {
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const std::string line = trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw SyntaxError("expected 'key = value'", line_no, 1);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto bad = [&] { return SyntaxError("bad value for " + key + ": '" + value + "'", line_no, eq + 2); };
    auto count = [&] {
      auto n = parse_number<std::size_t>(value);
      if (!n) throw bad();
      return *n;
    };
    auto date = [&] {
      auto d = Date::parse(value);
      if (!d) throw bad();
      return *d;
    };
    if (key == "entries") cfg.entries = count();
    else if (key == "statements_per_entry") cfg.statements_per_entry = count();
    else if (key == "source_pool") cfg.source_pool = count();
    else if (key == "seed") {
      auto n = parse_number<std::uint64_t>(value);
      if (!n) throw bad();
      cfg.seed = *n;
    } else if (key == "attribution_fraction") {
      auto f = parse_fraction(value);
      if (!f) throw bad();
      cfg.attribution_fraction = *f;
    } else if (key == "start") cfg.start = date();
    else if (key == "end") cfg.end = date();
    else if (key == "entity_links") {
      if (value != "true" && value != "false") throw bad();
      cfg.entity_links = value == "true";
    } else if (key == "entity_namespace") cfg.entity_namespace = value;
    else if (key == "source_namespace") cfg.source_namespace = value;
    else throw SyntaxError("unknown generator key '" + key + "'", line_no, 1);
  }
  return cfg;
}

GenCounts generate(const GenConfig& cfg, const std::function<void(const Triple&)>& sink, const Vocabulary& vocab) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  GenCounts counts;

  const auto first_day = cfg.start.days().time_since_epoch().count();
  const auto span = static_cast<std::uint64_t>(cfg.end.days().time_since_epoch().count() - first_day) + 1;
  std::vector<Attribution> sources;
  for (std::size_t i = 0; i < cfg.source_pool; ++i) {
    const auto day = first_day + static_cast<long>(below(rng, span));
    sources.push_back({Term::iri(cfg.source_namespace + padded("MF_", i, 5)),
                       Date(std::chrono::sys_days(std::chrono::days(day))), std::nullopt, std::nullopt});
  }
  std::vector<bool> source_emitted(sources.size(), false);

  const int width = static_cast<int>(std::to_string(cfg.entries).size());
  std::size_t statement_counter = 0;
  for (std::size_t e = 0; e < cfg.entries; ++e) {
    const Term entity = Term::iri(cfg.entity_namespace + padded("GEN", e, width));
    std::unordered_set<std::size_t> linked;
    for (std::size_t k = 0; k < cfg.statements_per_entry; ++k) {
      const Triple base{entity, vocab.core("annotation" + std::to_string(k)),
                        Term::literal("annotation text " + std::to_string(below(rng, 10000)))};
      sink(base);
      ++counts.base;
      if (!(unit(rng) < cfg.attribution_fraction)) continue;

      const std::size_t src = below(rng, sources.size());
      const Term attr = Term::blank("a" + std::to_string(src));
      const Term stmt = Term::blank("s" + std::to_string(statement_counter++));
      for (const Triple& t : reify(base.subject, base.predicate, base.object, stmt, attr, vocab)) sink(t);
      ++counts.attributed_statements;
      counts.reification += 5;
      if (cfg.entity_links && linked.insert(src).second) {
        sink(attach_entity_attribution(entity, attr, vocab));
        ++counts.entity_links;
      }
      if (!source_emitted[src]) {
        source_emitted[src] = true;
        const auto triples = encode_attribution(sources[src], attr, vocab);
        for (const Triple& t : triples) sink(t);
        ++counts.attribution_nodes;
        counts.attribution += triples.size();
      }
    }
  }
  return counts;
}

TripleSet generate_store(const GenConfig& config, GenCounts* counts, const Vocabulary& vocab) {
  TripleSet store;
  GenCounts c = generate(config, [&](const Triple& t) { store.insert(t); }, vocab);
  if (counts) *counts = c;
  return store;
}

GenCounts write_corpus(const GenConfig& config, std::ostream& out, const PrefixTable& prefixes,
                       const Vocabulary& vocab) {
  TurtleWriter writer(out, prefixes);
  GenCounts counts = generate(config, [&](const Triple& t) { writer.write(t); }, vocab);
  writer.finish();
  return counts;
}

CorpusStats stats(const TripleSet& store, const Vocabulary& vocab) {
  CorpusStats s;
  auto reader = store.read();
  std::unordered_set<TermId> metadata_predicates;
  for (const Term& p : vocab.metadata_predicates()) {
    if (auto id = reader.find(p)) metadata_predicates.insert(*id);
  }
  const auto statement = reader.find(vocab.rdf_statement);
  const auto subject = reader.find(vocab.rdf_subject);
  const auto source = reader.find(vocab.source);
  const auto date = reader.find(vocab.date);

  std::unordered_set<TermId> attributed, sources;
  for (const IdTriple& t : reader.all()) {
    ++s.total;
    if (metadata_predicates.contains(t.p) || (statement && t.o == *statement)) ++s.metadata;
    if (subject && t.p == *subject) attributed.insert(t.s);
    if (source && t.p == *source) sources.insert(t.o);
    if (date && t.p == *date) {
      const Term& value = reader.term(t.o);
      auto d = value.is_literal() ? Date::parse(value.value()) : std::nullopt;
      ++s.date_histogram[d ? std::to_string(d->year()) : "invalid"];
    }
  }
  s.empty = s.total == 0;
  s.fraction = s.empty ? 0.0 : static_cast<double>(s.metadata) / static_cast<double>(s.total);
  s.attributed_statements = attributed.size();
  s.distinct_sources = sources.size();
  return s;
}

std::string format_stats(const CorpusStats& s) {
  std::ostringstream out;
  char fraction[32];
  std::snprintf(fraction, sizeof fraction, "%.6f", s.fraction);
  out << "triples\t" << s.total << '\n'
      << "metadata_triples\t" << s.metadata << '\n'
      << "metadata\t" << s.metadata << '/' << s.total << '\n'
      << "metadata_fraction\t" << fraction << '\n'
      << "empty\t" << (s.empty ? "true" : "false") << '\n'
      << "attributed_statements\t" << s.attributed_statements << '\n'
      << "distinct_sources\t" << s.distinct_sources << '\n';
  for (const auto& [year, n] : s.date_histogram) out << "dates." << year << '\t' << n << '\n';
  return out.str();
}

}  // namespace provrdf
