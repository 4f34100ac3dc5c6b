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

// Random queries and stores for the evaluator and rewrite properties.

#include <string>
#include <vector>

#include "support/testing.hpp"

namespace provrdf::testing {

/// A query using the reification shorthand together with a version expanded
/// by hand, written independently of the rewriter.
struct ShorthandCase {
  std::string extended;
  std::string hand_expanded;
};

/// Store mixing ordinary triples with statement nodes, attribution links and
/// sources, built from small pools so queries actually match.
inline std::vector<Triple> random_reified_store(Random& r, std::size_t max_size) {
  const std::vector<Term> entities = {Term::iri("http://example.org/e0"), Term::iri("http://example.org/e1"),
                                      Term::blank("e2")};
  const std::vector<Term> nodes = {Term::blank("n0"), Term::blank("n1"), Term::blank("n2"), Term::blank("n3")};
  const std::vector<Term> attrs = {Term::blank("a0"), Term::blank("a1")};
  const std::vector<Term> preds = {core("p0"), core("p1")};
  const std::vector<Term> values = {Term::literal("v0"), Term::literal("v1"), Term::iri("http://example.org/e0")};
  const std::vector<Term> sources = {Term::iri(kHamap + "S0"), Term::iri(kHamap + "S1")};
  const std::vector<Term> dates = {Term::literal("2009-01-01"), Term::literal("2010-06-30")};

  std::vector<Triple> out;
  std::set<Triple> seen;
  const std::size_t n = r.below(max_size + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Triple t;
    switch (r.below(10)) {
      case 0: t = {r.pick(nodes), rdf("subject"), r.pick(entities)}; break;
      case 1: t = {r.pick(nodes), rdf("predicate"), r.pick(preds)}; break;
      case 2: t = {r.pick(nodes), rdf("object"), r.pick(values)}; break;
      case 3: t = {r.pick(nodes), rdf("type"), rdf("Statement")}; break;
      case 4: t = {r.pick(nodes), core("attribution"), r.pick(attrs)}; break;
      case 5: t = {r.pick(entities), core("attribution"), r.pick(attrs)}; break;
      case 6: t = {r.pick(attrs), core("source"), r.pick(sources)}; break;
      case 7: t = {r.pick(attrs), core("date"), r.pick(dates)}; break;
      default: t = {r.pick(entities), r.pick(preds), r.pick(values)}; break;
    }
    if (seen.insert(t).second) out.push_back(t);
  }
  return out;
}

/// Up to `max_reifications` shorthand terms (with 0-2 attached properties
/// each) plus up to `max_extra` ordinary patterns over the same pools.
inline ShorthandCase random_shorthand_case(Random& r, std::size_t max_reifications = 2, std::size_t max_extra = 3) {
  const std::vector<std::string> vars = {"?x", "?y", "?z", "?w", "?a"};
  const std::vector<std::string> entity_terms = {"<http://example.org/e0>", "<http://example.org/e1>"};
  const std::vector<std::string> pred_terms = {":p0", ":p1"};
  const std::vector<std::string> value_terms = {"\"v0\"", "\"v1\"", "<http://example.org/e0>"};
  const std::vector<std::string> attr_preds = {":attribution", ":source", ":date", "rdf:type"};
  const std::vector<std::string> attr_objects = {"hamap:S0", "\"2009-01-01\"", "rdf:Statement"};

  auto slot = [&](const std::vector<std::string>& ground, double var_chance) {
    return r.chance(var_chance) ? r.pick(vars) : r.pick(ground);
  };
  std::string ext_body, hand_body;
  std::set<std::string> used;
  auto track = [&](const std::string& t) {
    if (t[0] == '?') used.insert(t);
    return t;
  };

  const std::size_t reifications = r.below(max_reifications + 1);
  for (std::size_t i = 0; i < reifications; ++i) {
    const std::string s = track(slot(entity_terms, 0.7));
    const std::string p = track(slot(pred_terms, 0.6));
    const std::string o = track(slot(value_terms, 0.7));
    const std::string node = "?hand" + std::to_string(i);
    ext_body += "  reification(" + s + " " + p + " " + o + ")";
    hand_body += "  " + node + " rdf:subject " + s + " .\n";
    hand_body += "  " + node + " rdf:predicate " + p + " .\n";
    hand_body += "  " + node + " rdf:object " + o + " .\n";
    const std::size_t props = r.below(3);
    for (std::size_t k = 0; k < props; ++k) {
      const std::string pp = r.chance(0.8) ? r.pick(attr_preds) : track(r.pick(vars));
      const std::string po = track(r.chance(0.7) ? r.pick(vars) : r.pick(attr_objects));
      ext_body += (k == 0 ? " " : " ; ") + pp + " " + po;
      hand_body += "  " + node + " " + pp + " " + po + " .\n";
    }
    ext_body += " .\n";
  }
  const std::size_t extra = r.below(max_extra + 1);
  for (std::size_t i = 0; i < extra; ++i) {
    std::string pattern;
    if (r.chance(0.5)) {
      pattern = track(slot(entity_terms, 0.7)) + " :attribution " + track(slot({"hamap:S0"}, 0.9));
    } else if (r.chance(0.5)) {
      pattern = track(r.pick(vars)) + " " + r.pick(std::vector<std::string>{":source", ":date"}) + " " +
                track(slot(attr_objects, 0.7));
    } else {
      pattern = track(slot(entity_terms, 0.7)) + " " + track(slot(pred_terms, 0.3)) + " " +
                track(slot(value_terms, 0.6));
    }
    ext_body += "  " + pattern + " .\n";
    hand_body += "  " + pattern + " .\n";
  }

  std::string select = "SELECT";
  for (const std::string& v : used) {
    if (r.chance(0.7)) select += " " + v;
  }
  if (select == "SELECT") select += used.empty() ? " ?x" : " " + *used.begin();
  return {select + " WHERE {\n" + ext_body + "}\n", select + " WHERE {\n" + hand_body + "}\n"};
}

/// A basic graph pattern of 1..4 patterns over at most four variables.
struct BgpCase {
  std::vector<sparql::TriplePattern> patterns;
  std::vector<std::string> projection;
};

inline BgpCase random_bgp(Random& r, const Pools& pools) {
  const std::vector<std::string> vars = {"x", "y", "z", "w"};
  auto slot = [&](const std::vector<Term>& ground) {
    if (r.chance(0.6)) return sparql::PatternTerm::var(r.pick(vars));
    // Occasionally a ground term the store has never seen.
    if (r.chance(0.05)) return sparql::PatternTerm::ground(Term::iri("http://example.org/absent"));
    return sparql::PatternTerm::ground(r.pick(ground));
  };
  BgpCase c;
  const std::size_t n = 1 + r.below(4);
  for (std::size_t i = 0; i < n; ++i) {
    c.patterns.push_back({slot(pools.subjects), slot(pools.predicates), slot(pools.objects)});
  }
  for (const std::string& v : vars) {
    if (r.chance(0.6)) c.projection.push_back(v);
  }
  if (c.projection.empty()) c.projection.push_back(r.pick(vars));
  return c;
}

}  // namespace provrdf::testing
