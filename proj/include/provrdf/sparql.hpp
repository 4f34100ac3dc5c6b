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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "provrdf/prefix_table.hpp"
#include "provrdf/term.hpp"
#include "provrdf/triple_set.hpp"
#include "provrdf/vocabulary.hpp"

namespace provrdf::sparql {

/// A slot in a triple pattern: a variable (name without `?`) or a ground term.
class PatternTerm {
 public:
  static PatternTerm var(std::string name) { return PatternTerm(Var{std::move(name)}); }
  static PatternTerm ground(Term term) { return PatternTerm(std::move(term)); }

  bool is_var() const { return std::holds_alternative<Var>(value_); }
  const std::string& var_name() const { return std::get<Var>(value_).name; }
  const Term& term() const { return std::get<Term>(value_); }

  friend bool operator==(const PatternTerm&, const PatternTerm&) = default;

 private:
  struct Var {
    std::string name;
    friend bool operator==(const Var&, const Var&) = default;
  };
  explicit PatternTerm(Var v) : value_(std::move(v)) {}
  explicit PatternTerm(Term t) : value_(std::move(t)) {}

  std::variant<Var, Term> value_;
};

struct TriplePattern {
  PatternTerm s;
  PatternTerm p;
  PatternTerm o;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

/// `reification(S P O)`: stands for a statement node whose rdf:subject,
/// rdf:predicate and rdf:object are S, P and O.
struct ReificationTerm {
  PatternTerm s;
  PatternTerm p;
  PatternTerm o;
};

/// A reification term in subject position plus the predicate-object pairs
/// attached to its statement node.
struct ReificationBlock {
  ReificationTerm term;
  std::vector<std::pair<PatternTerm, PatternTerm>> properties;
};

using PatternElement = std::variant<TriplePattern, ReificationBlock>;

struct Query {
  PrefixTable prefixes;
  std::vector<std::string> projection;
  /// Graph pattern in textual order.
  std::vector<PatternElement> where;
  /// E.g. projected variables that never occur in the pattern.
  std::vector<std::string> warnings;

  std::size_t reification_count() const;
  /// The ordinary triple patterns (reification blocks skipped).
  std::vector<TriplePattern> triple_patterns() const;
  /// Every variable name in projection and pattern, first-occurrence order.
  std::vector<std::string> variables() const;
};

/// Parses the subset: PREFIX, SELECT ?v..., optional WHERE, `{ }` with
/// triple patterns, `;`/`,` lists and `reification( t t t )` in subject
/// position. Keywords are case-insensitive. `defaults` supplies prefixes the
/// query does not declare. Throws SyntaxError.
Query parse_query(std::string_view text, const PrefixTable& defaults = PrefixTable::defaults());

struct RewriteOptions {
  /// Also require `?node rdf:type rdf:Statement`.
  bool strict_statement_type = false;
};

/// Replaces each reification block with rdf:subject/rdf:predicate/rdf:object
/// patterns on a fresh `?_reifN` variable (never one the query already
/// uses), followed by its attached patterns. Queries without reification
/// terms are returned unchanged.
Query expand_reification(const Query& query, const RewriteOptions& options = {},
                         const Vocabulary& vocab = Vocabulary::standard());

/// Pretty-printed query text, one pattern per line; re-parses to an equal query.
std::string write_query(const Query& query);

struct SolutionTable {
  std::vector<std::string> variables;
  /// Bag of rows; nullopt marks an unbound cell.
  std::vector<std::vector<std::optional<Term>>> rows;
};

enum class JoinOrder {
  /// Ascending exact match count per pattern, preferring patterns connected
  /// to already bound variables; ties by textual order.
  Greedy,
  /// Patterns as written.
  Textual,
};

struct EvalOptions {
  JoinOrder order = JoinOrder::Greedy;
};

/// Natural join of the pattern match sets projected onto the SELECT list,
/// bag semantics. Throws Error if reification terms remain.
SolutionTable evaluate(const Query& query, const TripleSet& store, const EvalOptions& options = {});

/// Same, over a bare basic graph pattern.
SolutionTable evaluate(const std::vector<TriplePattern>& patterns, const std::vector<std::string>& projection,
                       const TripleSet& store, const EvalOptions& options = {});

/// Header of `?var` names, then one row per solution, cells in Turtle term
/// syntax, unbound cells empty. Every line ends in '\n'.
std::string to_tsv(const SolutionTable& table, const PrefixTable& prefixes);

}  // namespace provrdf::sparql
