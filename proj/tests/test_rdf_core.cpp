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

#include <atomic>
#include <set>
#include <thread>

#include "provrdf/errors.hpp"
#include "provrdf/isomorphism.hpp"
#include "provrdf/triple_set.hpp"
#include "support/testing.hpp"

using namespace provrdf;
using namespace provrdf::testing;

namespace {

TripleSet example1_store() {
  TripleSet store;
  store.insert_all(example1_triples());
  return store;
}

// Applies a blank relabelling to a triple list.
std::vector<Triple> relabel(const std::vector<Triple>& triples, const std::map<std::string, std::string>& names) {
  auto map = [&](const Term& t) { return t.is_blank() ? Term::blank(names.at(t.value())) : t; };
  std::vector<Triple> out;
  for (const Triple& t : triples) out.push_back({map(t.subject), t.predicate, map(t.object)});
  return out;
}

// Reference isomorphism check: tries every bijection between blank labels.
bool isomorphic_by_permutation(const std::vector<Triple>& a, const std::vector<Triple>& b) {
  auto blanks = [](const std::vector<Triple>& g) {
    std::set<std::string> out;
    for (const Triple& t : g) {
      if (t.subject.is_blank()) out.insert(t.subject.value());
      if (t.object.is_blank()) out.insert(t.object.value());
    }
    return std::vector<std::string>(out.begin(), out.end());
  };
  const std::set<Triple> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  if (sa.size() != sb.size()) return false;
  auto la = blanks(a), lb = blanks(b);
  if (la.size() != lb.size()) return false;
  std::vector<std::string> perm = lb;
  do {
    std::map<std::string, std::string> names;
    for (std::size_t i = 0; i < la.size(); ++i) names[la[i]] = perm[i];
    auto mapped = relabel(std::vector<Triple>(sa.begin(), sa.end()), names);
    if (std::set<Triple>(mapped.begin(), mapped.end()) == sb) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_SUITE("rdf_core") {

TEST_CASE("terms compare by kind and value") {
  CHECK(Term::iri("x") == Term::iri("x"));
  CHECK(Term::iri("x") != Term::literal("x"));
  CHECK(Term::blank("x") != Term::literal("x"));
  CHECK(to_ntriples(Term::iri("http://a/b")) == "<http://a/b>");
  CHECK(to_ntriples(Term::blank("0")) == "_:0");
  CHECK(to_ntriples(Term::literal("a\"b\\c\nd")) == "\"a\\\"b\\\\c\\nd\"");
}

TEST_CASE("insert is idempotent") {
  TripleSet store;
  const Triple t{Term::iri("http://e/s"), Term::iri("http://e/p"), Term::literal("o")};
  CHECK(store.insert(t));
  CHECK_FALSE(store.insert(t));
  CHECK(store.size() == 1);
  CHECK(store.contains(t));
}

TEST_CASE("structural validation") {
  TripleSet store;
  CHECK_THROWS_AS(store.insert({Term::literal("x"), Term::iri("http://e/p"), Term::iri("http://e/o")}),
                  StructuralError);
  CHECK_THROWS_AS(store.insert({Term::iri("http://e/s"), Term::blank("p"), Term::iri("http://e/o")}),
                  StructuralError);
  CHECK_THROWS_AS(store.insert({Term::iri("http://e/s"), Term::literal("p"), Term::iri("http://e/o")}),
                  StructuralError);
  CHECK(store.empty());
  CHECK(store.insert({Term::blank("s"), Term::iri("http://e/p"), Term::blank("o")}));
}

TEST_CASE("the annotated example loads as 11 distinct triples") {
  TripleSet store = example1_store();
  CHECK(store.size() == 11);
  CHECK(store.insert_all(example1_triples()) == 0);
  CHECK(store.triples() == example1_triples());
}

TEST_CASE("match on the annotated example") {
  TripleSet store = example1_store();
  auto attributions = store.match(std::nullopt, core("attribution"), std::nullopt);
  REQUIRE(attributions.size() == 2);
  CHECK(attributions[0].subject == Term::blank("1"));
  CHECK(attributions[1].subject == Term::iri(kProtein + "Q65EJ5"));

  auto node = store.match(Term::blank("1"), std::nullopt, std::nullopt);
  CHECK(node.size() == 5);
  CHECK(store.match(std::nullopt, std::nullopt, Term::blank("2")).size() == 2);
  CHECK(store.match(Term::iri("http://absent/"), std::nullopt, std::nullopt).empty());
  CHECK(store.match(std::nullopt, std::nullopt, std::nullopt).size() == 11);
}

TEST_CASE("match on an empty store") {
  TripleSet store;
  CHECK(store.match(std::nullopt, std::nullopt, std::nullopt).empty());
  CHECK(store.match(Term::iri("http://e/s"), std::nullopt, std::nullopt).empty());
}

TEST_CASE("match agrees with a linear scan on random stores") {
  Random r(7);
  const Pools pools = Pools::small();
  for (int round = 0; round < 300; ++round) {
    auto triples = random_triples(r, pools, 1000);
    TripleSet store;
    store.insert_all(triples);
    REQUIRE(store.size() == triples.size());
    CHECK(store.match(std::nullopt, std::nullopt, std::nullopt) == triples);
    for (int q = 0; q < 8; ++q) {
      std::optional<Term> s, p, o;
      if (r.chance(0.5)) s = r.pick(pools.subjects);
      if (r.chance(0.5)) p = r.pick(pools.predicates);
      if (r.chance(0.5)) o = r.pick(pools.objects);
      auto got = store.match(s, p, o);
      CHECK(got == scan(triples, s, p, o));
      // Binding one more position never adds results.
      if (!s) {
        auto narrower = store.match(r.pick(pools.subjects), p, o);
        for (const Triple& t : narrower) CHECK(std::find(got.begin(), got.end(), t) != got.end());
      }
    }
  }
}

TEST_CASE("reader counts agree with match") {
  TripleSet store = example1_store();
  auto reader = store.read();
  auto id = reader.find(core("attribution"));
  REQUIRE(id);
  CHECK(reader.count(std::nullopt, id, std::nullopt) == 2);
  CHECK(reader.count(std::nullopt, std::nullopt, std::nullopt) == 11);
  CHECK_FALSE(reader.find(Term::iri("http://absent/")));
}

TEST_CASE("merge_scoped keeps documents apart") {
  TripleSet a, b;
  const Term p = Term::iri("http://e/p");
  a.insert({Term::blank("x"), p, Term::literal("from a")});
  b.insert({Term::blank("x"), p, Term::literal("from b")});
  b.insert({Term::iri("http://e/s"), p, Term::blank("x")});

  TripleSet merged;
  CHECK(merged.merge_scoped(a) == 1);
  CHECK(merged.merge_scoped(b) == 2);
  CHECK(merged.size() == 3);
  auto from_a = merged.match(std::nullopt, p, Term::literal("from a"));
  auto from_b = merged.match(std::nullopt, p, Term::literal("from b"));
  REQUIRE(from_a.size() == 1);
  REQUIRE(from_b.size() == 1);
  CHECK(from_a[0].subject != from_b[0].subject);
  // Within one document the shared label still links both triples.
  CHECK(merged.match(Term::iri("http://e/s"), p, from_b[0].subject).size() == 1);
  CHECK_THROWS_AS(merged.merge_scoped(merged), Error);
}

TEST_CASE("copies are independent") {
  TripleSet a = example1_store();
  TripleSet b = a;
  b.insert({Term::iri("http://e/s"), Term::iri("http://e/p"), Term::literal("x")});
  CHECK(a.size() == 11);
  CHECK(b.size() == 12);
  TripleSet c = std::move(b);
  CHECK(c.size() == 12);
}

TEST_CASE("concurrent readers see whole inserts") {
  TripleSet store;
  const Term p = Term::iri("http://e/p");
  std::atomic<bool> done{false};
  std::atomic<int> bad{0};
  std::atomic<int> reads{0};
  std::vector<std::thread> readers;
  for (int i = 0; i < 4; ++i) {
    readers.emplace_back([&] {
      while (!done.load()) {
        {
          auto reader = store.read();
          const auto all = reader.all();
          std::size_t counted = 0;
          reader.for_each_match(std::nullopt, std::nullopt, std::nullopt, [&](const IdTriple&) { ++counted; });
          if (counted != all.size()) ++bad;
          auto pid = reader.find(p);
          if (pid && reader.count(std::nullopt, pid, std::nullopt) != all.size()) ++bad;
        }
        reads.fetch_add(1);
        // The lock prefers readers; back off so the writer makes progress.
        std::this_thread::yield();
      }
    });
  }
  for (int i = 0; i < 5000; ++i) {
    store.insert({Term::iri("http://e/s" + std::to_string(i)), p, Term::literal(std::to_string(i))});
    if (i % 500 == 0) std::this_thread::yield();
  }
  while (reads.load() == 0) std::this_thread::yield();
  done = true;
  for (auto& t : readers) t.join();
  CHECK(bad.load() == 0);
  CHECK(reads.load() > 0);
  CHECK(store.size() == 5000);
}

TEST_CASE("isomorphism basics") {
  auto g = example1_triples();
  auto renamed = relabel(g, {{"0", "n"}, {"1", "st"}, {"2", "attr"}});
  CHECK(isomorphic(g, renamed));
  // Exchanging two labels is just another relabelling.
  auto swapped = relabel(g, {{"0", "1"}, {"1", "0"}, {"2", "2"}});
  CHECK(isomorphic(g, swapped));
  auto broken = g;
  broken.back().object = Term::literal("2010-08-05");
  CHECK_FALSE(isomorphic(g, broken));
  CHECK(isomorphic(std::vector<Triple>{}, std::vector<Triple>{}));
  CHECK_FALSE(isomorphic(g, std::vector<Triple>{}));
}

TEST_CASE("isomorphism on symmetric graphs") {
  const Term p = Term::iri("http://e/p");
  // Two 3-cycles versus one 6-cycle: identical degree profiles.
  auto cycle = [&](std::vector<std::string> labels) {
    std::vector<Triple> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      out.push_back({Term::blank(labels[i]), p, Term::blank(labels[(i + 1) % labels.size()])});
    }
    return out;
  };
  auto two = cycle({"a", "b", "c"});
  auto more = cycle({"d", "e", "f"});
  two.insert(two.end(), more.begin(), more.end());
  auto six = cycle({"a", "b", "c", "d", "e", "f"});
  CHECK_FALSE(isomorphic(two, six));
  CHECK(isomorphic(six, cycle({"f", "e", "d", "c", "b", "a"})));
}

TEST_CASE("isomorphism agrees with permutation search on small random graphs") {
  Random r(11);
  const std::vector<Term> preds = {Term::iri("http://e/p"), Term::iri("http://e/q")};
  const std::vector<Term> iris = {Term::iri("http://e/a"), Term::literal("v")};
  for (int round = 0; round < 400; ++round) {
    auto random_graph = [&] {
      std::vector<Triple> g;
      std::set<Triple> seen;
      const std::size_t n = r.below(7);
      for (std::size_t i = 0; i < n; ++i) {
        Term s = Term::blank(std::to_string(r.below(4)));
        Term o = r.chance(0.7) ? Term::blank(std::to_string(r.below(4))) : r.pick(iris);
        Triple t{s, r.pick(preds), o};
        if (seen.insert(t).second) g.push_back(t);
      }
      return g;
    };
    auto a = random_graph();
    // Half the time compare against a relabelled copy, otherwise a fresh graph.
    std::vector<Triple> b;
    if (r.chance(0.5)) {
      std::vector<std::string> names = {"w", "x", "y", "z"};
      std::shuffle(names.begin(), names.end(), r.engine());
      b = relabel(a, {{"0", names[0]}, {"1", names[1]}, {"2", names[2]}, {"3", names[3]}});
      std::shuffle(b.begin(), b.end(), r.engine());
    } else {
      b = random_graph();
    }
    CHECK(isomorphic(a, b) == isomorphic_by_permutation(a, b));
  }
}

}  // TEST_SUITE
