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

#include <cctype>
#include <set>
#include <sstream>

#include "lexer.hpp"
#include "provrdf/errors.hpp"
#include "provrdf/sparql.hpp"

namespace provrdf::sparql {
namespace {

using detail::keyword_equals;
using detail::Lexer;
using detail::Token;
using detail::TokenKind;

enum class Slot { Subject, Predicate, Object, Reified };

class QueryParser {
 public:
  QueryParser(std::string_view text, const PrefixTable& defaults) : lexer_(text) { query_.prefixes = defaults; }

  Query run() {
    while (peek_word("PREFIX")) prefix();
    select();
    if (peek_word("WHERE")) lexer_.take();
    expect('{', "expected '{'");
    group();
    Token end = lexer_.take();
    if (end.kind != TokenKind::End) fail(end, "unexpected content after '}'");
    check_projection();
    return std::move(query_);
  }

 private:
  [[noreturn]] static void fail(const Token& tok, const std::string& message) {
    throw SyntaxError(message, tok.line, tok.column);
  }

  bool peek_word(std::string_view kw) {
    const Token& t = lexer_.peek();
    return t.kind == TokenKind::Word && keyword_equals(t.text, kw);
  }

  void expect(char c, const char* message) {
    Token t = lexer_.take();
    if (!t.is_punct(c)) fail(t, message);
  }

  static std::string checked_var(const Token& tok) {
    if (std::isdigit(static_cast<unsigned char>(tok.text[0]))) fail(tok, "variable names must not start with a digit");
    return tok.text;
  }

  void prefix() {
    lexer_.take();
    Token name = lexer_.take();
    if (name.kind != TokenKind::PName || !name.local.empty()) fail(name, "expected prefix name like 'ex:'");
    Token iri = lexer_.take();
    if (iri.kind != TokenKind::IriRef) fail(iri, "expected <IRI> in PREFIX");
    query_.prefixes.set(name.text, iri.text);
  }

  void select() {
    Token kw = lexer_.take();
    if (kw.kind != TokenKind::Word || !keyword_equals(kw.text, "SELECT")) fail(kw, "expected SELECT");
    while (lexer_.peek().kind == TokenKind::Var) query_.projection.push_back(checked_var(lexer_.take()));
    if (query_.projection.empty()) fail(lexer_.peek(), "expected at least one projected variable");
  }

  PatternTerm term(Slot slot) {
    Token tok = lexer_.take();
    switch (tok.kind) {
      case TokenKind::Var: return PatternTerm::var(checked_var(tok));
      case TokenKind::IriRef: return PatternTerm::ground(Term::iri(tok.text));
      case TokenKind::PName: {
        auto iri = query_.prefixes.expand(tok.text, tok.local);
        if (!iri) fail(tok, "unknown prefix '" + tok.text + ":'");
        return PatternTerm::ground(Term::iri(*iri));
      }
      case TokenKind::String:
        if (slot == Slot::Predicate) fail(tok, "literal in predicate position");
        return PatternTerm::ground(Term::literal(std::move(tok.text)));
      case TokenKind::Blank: fail(tok, "blank nodes are not supported in queries");
      case TokenKind::Word:
        if (tok.text == "a" && slot == Slot::Predicate) {
          return PatternTerm::ground(Term::iri(std::string(ns::rdf) + "type"));
        }
        if (tok.text == "reification") fail(tok, "reification term is only allowed in subject position");
        fail(tok, "unexpected '" + tok.text + "'");
      default: fail(tok, "expected a term");
    }
  }

  bool at_reification() {
    return lexer_.peek().kind == TokenKind::Word && lexer_.peek().text == "reification";
  }

  // verb objectList ( ';' ( verb objectList )? )*
  std::vector<std::pair<PatternTerm, PatternTerm>> property_list() {
    std::vector<std::pair<PatternTerm, PatternTerm>> out;
    while (true) {
      PatternTerm p = term(Slot::Predicate);
      while (true) {
        out.emplace_back(p, term(Slot::Object));
        if (!lexer_.peek().is_punct(',')) break;
        lexer_.take();
      }
      if (!lexer_.peek().is_punct(';')) return out;
      while (lexer_.peek().is_punct(';')) lexer_.take();
      const Token& next = lexer_.peek();
      if (next.is_punct('.') || next.is_punct('}')) return out;
    }
  }

  bool starts_property_list() {
    const Token& t = lexer_.peek();
    return t.kind == TokenKind::Var || t.kind == TokenKind::IriRef || t.kind == TokenKind::PName ||
           (t.kind == TokenKind::Word && t.text == "a");
  }

  void reification_block() {
    lexer_.take();
    expect('(', "expected '(' after reification");
    ReificationBlock block{{term(Slot::Reified), term(Slot::Reified), term(Slot::Reified)}, {}};
    expect(')', "expected ')' closing reification(...)");
    if (lexer_.peek().is_punct(';')) {
      while (lexer_.peek().is_punct(';')) lexer_.take();
      if (starts_property_list()) block.properties = property_list();
    } else if (starts_property_list()) {
      block.properties = property_list();
    }
    query_.where.emplace_back(std::move(block));
  }

  void group() {
    while (true) {
      const Token& t = lexer_.peek();
      if (t.is_punct('}')) {
        lexer_.take();
        return;
      }
      if (t.kind == TokenKind::End) fail(t, "expected '}'");
      if (at_reification()) {
        reification_block();
      } else {
        PatternTerm s = term(Slot::Subject);
        for (auto& [p, o] : property_list()) query_.where.emplace_back(TriplePattern{s, p, o});
      }
      const Token& sep = lexer_.peek();
      if (sep.is_punct('.')) {
        lexer_.take();
      } else if (!sep.is_punct('}')) {
        fail(sep, "expected '.' or '}'");
      }
    }
  }

  void check_projection() {
    std::set<std::string> used;
    auto note = [&](const PatternTerm& t) {
      if (t.is_var()) used.insert(t.var_name());
    };
    for (const auto& el : query_.where) {
      if (const auto* tp = std::get_if<TriplePattern>(&el)) {
        note(tp->s), note(tp->p), note(tp->o);
      } else {
        const auto& rb = std::get<ReificationBlock>(el);
        note(rb.term.s), note(rb.term.p), note(rb.term.o);
        for (const auto& [p, o] : rb.properties) note(p), note(o);
      }
    }
    for (const auto& v : query_.projection) {
      if (!used.contains(v)) query_.warnings.push_back("projected variable ?" + v + " does not occur in the pattern");
    }
  }

  Lexer lexer_;
  Query query_;
};

}  // namespace

std::size_t Query::reification_count() const {
  std::size_t n = 0;
  for (const auto& el : where) n += std::holds_alternative<ReificationBlock>(el) ? 1 : 0;
  return n;
}

std::vector<TriplePattern> Query::triple_patterns() const {
  std::vector<TriplePattern> out;
  for (const auto& el : where) {
    if (const auto* tp = std::get_if<TriplePattern>(&el)) out.push_back(*tp);
  }
  return out;
}

std::vector<std::string> Query::variables() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto note = [&](const PatternTerm& t) {
    if (t.is_var() && seen.insert(t.var_name()).second) out.push_back(t.var_name());
  };
  for (const auto& v : projection) note(PatternTerm::var(v));
  for (const auto& el : where) {
    if (const auto* tp = std::get_if<TriplePattern>(&el)) {
      note(tp->s), note(tp->p), note(tp->o);
    } else {
      const auto& rb = std::get<ReificationBlock>(el);
      note(rb.term.s), note(rb.term.p), note(rb.term.o);
      for (const auto& [p, o] : rb.properties) note(p), note(o);
    }
  }
  return out;
}

Query parse_query(std::string_view text, const PrefixTable& defaults) { return QueryParser(text, defaults).run(); }

std::string write_query(const Query& query) {
  auto fmt = [&](const PatternTerm& t) { return t.is_var() ? "?" + t.var_name() : query.prefixes.format(t.term()); };
  std::ostringstream out;
  for (const auto& [label, ns] : query.prefixes.entries()) out << "PREFIX " << label << ": <" << ns << ">\n";
  out << "SELECT";
  for (const auto& v : query.projection) out << " ?" << v;
  out << "\nWHERE {\n";
  for (const auto& el : query.where) {
    if (const auto* tp = std::get_if<TriplePattern>(&el)) {
      out << "  " << fmt(tp->s) << ' ' << fmt(tp->p) << ' ' << fmt(tp->o) << " .\n";
      continue;
    }
    const auto& rb = std::get<ReificationBlock>(el);
    out << "  reification(" << fmt(rb.term.s) << ' ' << fmt(rb.term.p) << ' ' << fmt(rb.term.o) << ")";
    for (std::size_t i = 0; i < rb.properties.size(); ++i) {
      out << " ;\n    " << fmt(rb.properties[i].first) << ' ' << fmt(rb.properties[i].second);
    }
    out << " .\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace provrdf::sparql
