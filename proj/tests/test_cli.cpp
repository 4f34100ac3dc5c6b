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

#include <filesystem>
#include <sstream>

#include "provrdf/cli.hpp"
#include "provrdf/isomorphism.hpp"
#include "provrdf/turtle.hpp"
#include "support/testing.hpp"

using namespace provrdf;
using namespace provrdf::testing;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "provrdf");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("provrdf_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents = {}) const {
    const auto p = path_ / name;
    if (!contents.empty()) {
      std::ofstream(p, std::ios::binary) << contents;
    }
    return p.string();
  }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string kExpectedRows = "?protein\t?date\t?predicate\t?object\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("convert the example entry") {
  auto r = run({"convert", data_path("example3.xml")});
  CHECK(r.code == 0);
  auto doc = parse_turtle(r.out, PrefixTable::defaults());
  CHECK(isomorphic(doc.triples.triples(), example1_triples()));
}

TEST_CASE("convert writes the output file atomically") {
  TempDir dir;
  const std::string out = dir.file("out.ttl");
  CHECK(run({"convert", data_path("example3.xml"), "-o", out}).code == 0);
  CHECK(parse_turtle(slurp(out), PrefixTable::defaults()).triples.size() == 11);

  const std::string failed = dir.file("failed.ttl");
  auto r = run({"convert", data_path("example3.xml"), data_path("dangling.xml"), "-o", failed});
  CHECK(r.code == 1);
  CHECK(r.err.find("EA9") != std::string::npos);
  CHECK_FALSE(fs::exists(failed));
}

TEST_CASE("validate") {
  auto clean = run({"validate", data_path("example3.xml")});
  CHECK(clean.code == 0);
  auto dangling = run({"validate", data_path("dangling.xml")});
  CHECK(dangling.code == 1);
  CHECK((dangling.out + dangling.err).find("EA9") != std::string::npos);
  auto unused = run({"validate", data_path("unused.xml")});
  CHECK(unused.code == 0);
  CHECK(unused.err.find("EA5") != std::string::npos);
}

TEST_CASE("query and rewrite") {
  auto longhand = run({"query", data_path("example1.ttl"), data_path("example2.rq")});
  CHECK(longhand.code == 0);
  CHECK(longhand.out.starts_with(kExpectedRows));
  auto shorthand = run({"query", data_path("example1.ttl"), data_path("example4.rq")});
  CHECK(shorthand.code == 0);
  CHECK(shorthand.out == longhand.out);

  auto rewritten = run({"rewrite", data_path("example4.rq")});
  CHECK(rewritten.code == 0);
  CHECK(rewritten.out.find("?_reif0 rdf:subject ?subject") != std::string::npos);
  CHECK(rewritten.out.find("reification") == std::string::npos);

  auto strict = run({"rewrite", "--strict-statement-type", data_path("example4.rq")});
  CHECK(strict.out.find("rdf:Statement") != std::string::npos);
}

TEST_CASE("syntax errors exit 2 with a location") {
  auto q = run({"query", data_path("example1.ttl"), data_path("example4_verbatim.rq")});
  CHECK(q.code == 2);
  CHECK(q.err.find("example4_verbatim.rq:7:") != std::string::npos);
  auto t = run({"stats", data_path("example1_verbatim.ttl")});
  CHECK(t.code == 2);
  CHECK(t.err.find(":10:") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"query", data_path("example1.ttl")}).code == 2);
  CHECK(run({"stats", "/nonexistent/file.ttl"}).code == 2);
  CHECK(run({"stale", data_path("example1.ttl"), "--before", "yesterday"}).code == 2);
  CHECK(run({"gen", "--fraction", "2"}).code == 2);
}

TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == 0); }

TEST_CASE("stale") {
  auto r = run({"stale", data_path("example1.ttl"), "--before", "2011-01-01"});
  CHECK(r.code == 0);
  CHECK(r.out == "?attribution\t?source\t?date\n_:2\thamap:MF_00536\t2010-08-04\n");
  auto none = run({"stale", data_path("example1.ttl"), "--before", "2010-08-04"});
  CHECK(none.out == "?attribution\t?source\t?date\n");
}

TEST_CASE("stats") {
  auto r = run({"stats", data_path("example1.ttl")});
  CHECK(r.code == 0);
  CHECK(r.out.find("metadata\t8/11\n") != std::string::npos);
  CHECK(run({"--quiet", "stats", data_path("example1.ttl")}).err.empty());
}

TEST_CASE("gen is deterministic and feeds stats") {
  TempDir dir;
  const std::string a = dir.file("a.ttl"), b = dir.file("b.ttl");
  CHECK(run({"gen", "--entries", "50", "--seed", "4", "--fraction", "1/10", "-o", a}).code == 0);
  CHECK(run({"gen", "--entries", "50", "--seed", "4", "--fraction", "1/10", "-o", b}).code == 0);
  CHECK(slurp(a) == slurp(b));
  auto s = run({"stats", a});
  CHECK(s.code == 0);
  CHECK(s.out.find("triples\t") != std::string::npos);

  const std::string cfg = dir.file("gen.conf", "entries = 5\nstatements_per_entry = 2\n");
  auto small = run({"gen", "--config", cfg});
  CHECK(small.code == 0);
  CHECK(parse_turtle(small.out, PrefixTable::defaults()).triples.size() >= 10);
}

TEST_CASE("custom prefixes and policy") {
  TempDir dir;
  const std::string prefixes = dir.file("p.ttl", "@prefix hamap: <http://example.org/hamap/> .\n");
  auto r = run({"--prefixes", prefixes, "convert", data_path("example3.xml")});
  CHECK(r.code == 0);
  auto doc = parse_turtle(r.out, PrefixTable{});
  CHECK(doc.triples.match(std::nullopt, core("source"), Term::iri("http://example.org/hamap/MF_00536")).size() == 1);

  const std::string policy = dir.file("policy.conf", "category.import = Program\n");
  auto c = run({"--policy", policy, "convert", data_path("example3.xml")});
  CHECK(c.code == 0);
  CHECK(c.out.find("\"Program\"") != std::string::npos);

  const std::string bad = dir.file("bad.conf", "what = ever\n");
  CHECK(run({"--policy", bad, "convert", data_path("example3.xml")}).code == 2);
}

}  // TEST_SUITE
