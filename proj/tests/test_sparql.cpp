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

#include <doctest.h>

#include "provrdf/errors.hpp"
#include "provrdf/sparql.hpp"
#include "support/random_queries.hpp"
#include "support/testing.hpp"

using namespace provrdf;
using namespace provrdf::testing;
namespace sq = provrdf::sparql;

namespace {

TripleSet example1_store() {
  TripleSet store;
  store.insert_all(example1_triples());
  return store;
}

std::size_t error_line(std::string_view text) {
  try {
    sq::parse_query(text);
  } catch (const SyntaxError& e) {
    return e.line();
  }
  return 0;
}

std::vector<Row> rows_of(const sq::SolutionTable& t) { return sorted_rows(t.rows); }

}  // namespace

TEST_SUITE("sparql") {

TEST_CASE("the provenance query parses to seven patterns") {
  auto q = sq::parse_query(read_data("example2.rq"));
  CHECK(q.projection == std::vector<std::string>{"protein", "date", "predicate", "object"});
  CHECK(q.reification_count() == 0);
  auto patterns = q.triple_patterns();
  REQUIRE(patterns.size() == 7);
  CHECK(patterns[0] == sq::TriplePattern{sq::PatternTerm::var("reif"), sq::PatternTerm::ground(rdf("subject")),
                                         sq::PatternTerm::var("subject")});
  CHECK(patterns[5].o == sq::PatternTerm::ground(Term::iri(kHamap + "MF_00536")));
  CHECK(q.warnings.empty());
}

TEST_CASE("the shorthand query parses to one reification block and three patterns") {
  auto q = sq::parse_query(read_data("example4.rq"));
  CHECK(q.reification_count() == 1);
  const auto& block = std::get<sq::ReificationBlock>(q.where.at(0));
  CHECK(block.term.p == sq::PatternTerm::var("predicate"));
  REQUIRE(block.properties.size() == 1);
  CHECK(block.properties[0].first == sq::PatternTerm::ground(core("attribution")));
  CHECK(q.triple_patterns().size() == 3);
}

TEST_CASE("the shorthand query as printed is rejected") {
  try {
    sq::parse_query(read_data("example4_verbatim.rq"));
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 7);
  }
}

TEST_CASE("syntax variations") {
  CHECK(sq::parse_query("SELECT ?x {}").where.empty());
  CHECK(sq::parse_query("select ?x where { ?x a :Thing }").triple_patterns().size() == 1);
  CHECK(sq::parse_query("SeLeCt ?x WhErE { ?x :p ?y , ?z ; :q ?w . }").triple_patterns().size() == 3);
  auto q = sq::parse_query("PREFIX ex: <http://example.org/>\nSELECT ?x { ?x ex:p \"lit\" }");
  CHECK(q.triple_patterns()[0].p == sq::PatternTerm::ground(Term::iri("http://example.org/p")));
  CHECK(sq::parse_query("SELECT ?x ?unused { ?x :p ?y }").warnings.size() == 1);
  CHECK(sq::parse_query("SELECT ?x { reification(?x :p ?y) }").reification_count() == 1);
}

TEST_CASE("syntax errors") {
  CHECK(error_line("SELECT ?x { ?x :p reification(?a ?b ?c) }") == 1);
  CHECK(error_line("SELECT ?x {\n ?x nope:p ?y }") == 2);
  CHECK(error_line("SELECT ?x { ?x \"lit\" ?y }") == 1);
  CHECK(error_line("SELECT ?x { ?x :p _:b }") == 1);
  CHECK(error_line("SELECT ?x { ?x :p ?y ") == 1);
  CHECK(error_line("SELECT { ?x :p ?y }") == 1);
  CHECK(error_line("SELECT ?x { reification(?x :p) }") == 1);
  CHECK(error_line("SELECT ?x { ?x :p 42 }") == 1);
}

TEST_CASE("expansion of the shorthand query") {
  auto q = sq::expand_reification(sq::parse_query(read_data("example4.rq")));
  CHECK(q.reification_count() == 0);
  auto p = q.triple_patterns();
  REQUIRE(p.size() == 7);
  const auto node = sq::PatternTerm::var("_reif0");
  CHECK(p[0] == sq::TriplePattern{node, sq::PatternTerm::ground(rdf("subject")), sq::PatternTerm::var("subject")});
  CHECK(p[1] == sq::TriplePattern{node, sq::PatternTerm::ground(rdf("predicate")), sq::PatternTerm::var("predicate")});
  CHECK(p[2] == sq::TriplePattern{node, sq::PatternTerm::ground(rdf("object")), sq::PatternTerm::var("object")});
  CHECK(p[3] == sq::TriplePattern{node, sq::PatternTerm::ground(core("attribution")),
                                  sq::PatternTerm::var("attribution")});
  // Up to renaming of the node variable it is the long-hand query.
  auto longhand = sq::parse_query(read_data("example2.rq")).triple_patterns();
  for (std::size_t i = 0; i < 4; ++i) longhand[i].s = node;
  CHECK(p == longhand);
}

TEST_CASE("expansion leaves plain queries alone and is idempotent") {
  auto plain = sq::parse_query(read_data("example2.rq"));
  CHECK(sq::expand_reification(plain).triple_patterns() == plain.triple_patterns());
  auto once = sq::expand_reification(sq::parse_query(read_data("example4.rq")));
  CHECK(sq::expand_reification(once).triple_patterns() == once.triple_patterns());
}

TEST_CASE("fresh variables are distinct and avoid user names") {
  auto q = sq::expand_reification(sq::parse_query(
      "SELECT ?_reif0 { reification(?_reif0 :p ?o) :q ?v . reification(?s :p2 ?_reif1) :q ?v }"));
  auto p = q.triple_patterns();
  REQUIRE(p.size() == 8);
  CHECK(p[0].s == sq::PatternTerm::var("_reif2"));
  CHECK(p[4].s == sq::PatternTerm::var("_reif3"));
  CHECK(p[0].o == sq::PatternTerm::var("_reif0"));
}

TEST_CASE("strict statement typing") {
  auto q = sq::expand_reification(sq::parse_query("SELECT ?o { reification(?s :p ?o) }"), {true});
  auto p = q.triple_patterns();
  REQUIRE(p.size() == 4);
  CHECK(p[3].o == sq::PatternTerm::ground(rdf("Statement")));

  TripleSet store;
  store.insert({Term::blank("n"), rdf("subject"), Term::iri("http://e/s")});
  store.insert({Term::blank("n"), rdf("predicate"), core("p")});
  store.insert({Term::blank("n"), rdf("object"), Term::literal("o")});
  auto loose = sq::expand_reification(sq::parse_query("SELECT ?o { reification(?s :p ?o) }"));
  CHECK(sq::evaluate(loose, store).rows.size() == 1);
  CHECK(sq::evaluate(q, store).rows.empty());
}

TEST_CASE("written queries parse back to the same query") {
  for (const char* file : {"example2.rq", "example4.rq"}) {
    auto q = sq::parse_query(read_data(file));
    auto again = sq::parse_query(sq::write_query(q));
    CHECK(again.projection == q.projection);
    CHECK(again.triple_patterns() == q.triple_patterns());
    CHECK(again.reification_count() == q.reification_count());
    auto expanded = sq::expand_reification(q);
    CHECK(sq::parse_query(sq::write_query(expanded)).triple_patterns() == expanded.triple_patterns());
  }
}

TEST_CASE("the provenance query over the annotated example") {
  // Both nodes carrying `:attribution _:2` bind ?protein: the entity and
  // the statement node itself.
  auto table = sq::evaluate(sq::parse_query(read_data("example2.rq")), example1_store());
  CHECK(table.variables == std::vector<std::string>{"protein", "date", "predicate", "object"});
  REQUIRE(table.rows.size() == 2);
  const Row protein_row = {Term::iri(kProtein + "Q65EJ5"), Term::literal("2010-08-04"), core("fullName"),
                           Term::literal(kProteinName)};
  const Row node_row = {Term::blank("1"), Term::literal("2010-08-04"), core("fullName"),
                        Term::literal(kProteinName)};
  CHECK(rows_of(table) == sorted_rows({protein_row, node_row}));
}

TEST_CASE("the shorthand query gives identical output") {
  const TripleSet store = example1_store();
  auto long_form = sq::evaluate(sq::parse_query(read_data("example2.rq")), store);
  auto short_form = sq::evaluate(sq::expand_reification(sq::parse_query(read_data("example4.rq"))), store);
  CHECK(sq::to_tsv(long_form, PrefixTable::defaults()) == sq::to_tsv(short_form, PrefixTable::defaults()));
  CHECK_THROWS_AS(sq::evaluate(sq::parse_query(read_data("example4.rq")), store), Error);
}

TEST_CASE("evaluation edge cases") {
  const TripleSet store = example1_store();
  CHECK(sq::evaluate(sq::parse_query("SELECT ?x { ?x :nothing ?y }"), store).rows.empty());
  CHECK(sq::evaluate(sq::parse_query(read_data("example2.rq")), TripleSet{}).rows.empty());
  // The empty pattern has exactly one (empty) solution.
  auto empty = sq::evaluate(sq::parse_query("SELECT ?x {}"), store);
  REQUIRE(empty.rows.size() == 1);
  CHECK_FALSE(empty.rows[0][0].has_value());
  // Bag semantics: projection keeps duplicates.
  auto dup = sq::evaluate(sq::parse_query("SELECT ?p { ?s ?p ?o }"), store);
  CHECK(dup.rows.size() == 11);
  // Repeated variable within one pattern.
  TripleSet loop;
  loop.insert({Term::iri("http://e/a"), core("p"), Term::iri("http://e/a")});
  loop.insert({Term::iri("http://e/a"), core("p"), Term::iri("http://e/b")});
  CHECK(sq::evaluate(sq::parse_query("SELECT ?x { ?x :p ?x }"), loop).rows.size() == 1);
}

TEST_CASE("evaluation agrees with brute-force enumeration") {
  Random r(61);
  const Pools pools = Pools::small();
  for (int round = 0; round < 300; ++round) {
    auto triples = random_triples(r, pools, 200);
    TripleSet store;
    store.insert_all(triples);
    auto c = random_bgp(r, pools);
    const auto expected = sorted_rows(brute_force_bgp(c.patterns, c.projection, triples));
    REQUIRE(rows_of(sq::evaluate(c.patterns, c.projection, store)) == expected);
    REQUIRE(rows_of(sq::evaluate(c.patterns, c.projection, store, {sq::JoinOrder::Textual})) == expected);
  }
}

TEST_CASE("results do not depend on pattern order") {
  Random r(67);
  const Pools pools = Pools::small();
  for (int round = 0; round < 200; ++round) {
    auto triples = random_triples(r, pools, 150);
    TripleSet store;
    store.insert_all(triples);
    auto c = random_bgp(r, pools);
    auto shuffled = c.patterns;
    std::shuffle(shuffled.begin(), shuffled.end(), r.engine());
    CHECK(rows_of(sq::evaluate(c.patterns, c.projection, store)) ==
          rows_of(sq::evaluate(shuffled, c.projection, store, {sq::JoinOrder::Textual})));
  }
}

TEST_CASE("shorthand expansion matches hand expansion") {
  Random r(71);
  for (int round = 0; round < 200; ++round) {
    auto triples = random_reified_store(r, 200);
    TripleSet store;
    store.insert_all(triples);
    auto c = random_shorthand_case(r);
    auto expanded = sq::expand_reification(sq::parse_query(c.extended));
    auto hand = sq::parse_query(c.hand_expanded);
    REQUIRE_MESSAGE(rows_of(sq::evaluate(expanded, store)) == rows_of(sq::evaluate(hand, store)), c.extended);
  }
}

TEST_CASE("TSV output") {
  sq::SolutionTable t{{"a", "b"},
                      {{Term::iri(kProtein + "Q65EJ5"), Term::literal("x\ty")}, {Term::blank("1"), std::nullopt}}};
  CHECK(sq::to_tsv(t, PrefixTable::defaults()) == "?a\t?b\nprotein:Q65EJ5\t\"x\\ty\"\n_:1\t\n");
  CHECK(sq::to_tsv({{"a"}, {}}, PrefixTable::defaults()) == "?a\n");
}

}  // TEST_SUITE
