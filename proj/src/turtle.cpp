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

#include "provrdf/turtle.hpp"

#include <ostream>
#include <sstream>
#include <unordered_map>

#include "lexer.hpp"
#include "provrdf/errors.hpp"

namespace provrdf {
namespace {

using detail::Lexer;
using detail::Token;
using detail::TokenKind;

class TurtleParser {
 public:
  TurtleParser(std::string_view text, const PrefixTable& prefixes) : lexer_(text) {
    doc_.prefixes = prefixes;
  }

  TurtleDocument run() {
    while (lexer_.peek().kind != TokenKind::End) {
      const Token& tok = lexer_.peek();
      if (tok.kind == TokenKind::AtWord) {
        at_directive();
      } else if (tok.kind == TokenKind::Word && detail::keyword_equals(tok.text, "PREFIX")) {
        sparql_prefix();
      } else {
        statement();
      }
    }
    return std::move(doc_);
  }

 private:
  [[noreturn]] static void fail(const Token& tok, const std::string& message) {
    throw SyntaxError(message, tok.line, tok.column);
  }

  Token expect_prefix_name() {
    Token name = lexer_.take();
    if (name.kind != TokenKind::PName || !name.local.empty()) fail(name, "expected prefix name like 'ex:'");
    return name;
  }

  void at_directive() {
    Token at = lexer_.take();
    if (at.text != "prefix") fail(at, "unsupported directive @" + at.text);
    Token name = expect_prefix_name();
    Token iri = lexer_.take();
    if (iri.kind != TokenKind::IriRef) fail(iri, "expected <IRI> in @prefix");
    doc_.prefixes.set(name.text, iri.text);
    Token dot = lexer_.take();
    if (!dot.is_punct('.')) fail(dot, "expected '.' after @prefix");
  }

  void sparql_prefix() {
    lexer_.take();
    Token name = expect_prefix_name();
    Token iri = lexer_.take();
    if (iri.kind != TokenKind::IriRef) fail(iri, "expected <IRI> in PREFIX");
    doc_.prefixes.set(name.text, iri.text);
  }

  Term normalize(Term term) {
    if (!term.is_iri() || !term.value().starts_with(ns::rdf)) return term;
    static const std::unordered_map<std::string, std::string> capitalized = {
        {"Subject", "subject"}, {"Predicate", "predicate"}, {"Object", "object"}};
    auto it = capitalized.find(term.value().substr(ns::rdf.size()));
    if (it == capitalized.end()) return term;
    ++doc_.report.normalized;
    return Term::iri(std::string(ns::rdf) + it->second);
  }

  Term iri_term(const Token& tok) {
    if (tok.kind == TokenKind::IriRef) return normalize(Term::iri(tok.text));
    auto iri = doc_.prefixes.expand(tok.text, tok.local);
    if (!iri) fail(tok, "unknown prefix '" + tok.text + ":'");
    return normalize(Term::iri(*iri));
  }

  Term subject() {
    Token tok = lexer_.take();
    switch (tok.kind) {
      case TokenKind::IriRef:
      case TokenKind::PName: return iri_term(tok);
      case TokenKind::Blank: return Term::blank(tok.text);
      case TokenKind::String: fail(tok, "literal in subject position");
      default: fail(tok, "expected subject");
    }
  }

  Term verb() {
    Token tok = lexer_.take();
    if (tok.kind == TokenKind::IriRef || tok.kind == TokenKind::PName) return iri_term(tok);
    if (tok.kind == TokenKind::Word && tok.text == "a") return Term::iri(std::string(ns::rdf) + "type");
    fail(tok, "expected predicate");
  }

  Term object() {
    Token tok = lexer_.take();
    switch (tok.kind) {
      case TokenKind::IriRef:
      case TokenKind::PName: return iri_term(tok);
      case TokenKind::Blank: return Term::blank(tok.text);
      case TokenKind::String: return Term::literal(std::move(tok.text));
      default: fail(tok, "expected object");
    }
  }

  void statement() {
    const Term s = subject();
    while (true) {
      const Term p = verb();
      while (true) {
        doc_.triples.insert({s, p, object()});
        if (!lexer_.peek().is_punct(',')) break;
        lexer_.take();
      }
      const Token& sep = lexer_.peek();
      if (sep.is_punct(';')) {
        lexer_.take();
        // `;` may be repeated or directly precede the terminator.
        while (lexer_.peek().is_punct(';')) lexer_.take();
        if (lexer_.peek().is_punct('.')) break;
        if (lexer_.peek().kind == TokenKind::End) break;
        continue;
      }
      break;
    }
    Token end = lexer_.take();
    if (end.is_punct('.')) return;
    if (end.kind == TokenKind::End) {
      doc_.report.warnings.push_back(std::to_string(end.line) + ":" + std::to_string(end.column) +
                                     ": missing '.' at end of document");
      return;
    }
    fail(end, "expected '.', ';' or ','");
  }

  Lexer lexer_;
  TurtleDocument doc_;
};

}  // namespace

TurtleDocument parse_turtle(std::string_view text, const PrefixTable& prefixes) {
  return TurtleParser(text, prefixes).run();
}

TurtleWriter::TurtleWriter(std::ostream& out, const PrefixTable& prefixes) : out_(out), prefixes_(prefixes) {
  for (const auto& [label, ns] : prefixes_.entries()) {
    out_ << "@prefix " << label << ": <" << ns << "> .\n";
  }
  if (!prefixes_.empty()) out_ << '\n';
}

TurtleWriter::~TurtleWriter() { finish(); }

void TurtleWriter::write(const Triple& triple) {
  if (subject_ && *subject_ == triple.subject) {
    out_ << " ;\n    ";
  } else {
    if (subject_) out_ << " .\n";
    subject_ = triple.subject;
    out_ << prefixes_.format(triple.subject) << ' ';
  }
  out_ << prefixes_.format(triple.predicate) << ' ' << prefixes_.format(triple.object);
}

void TurtleWriter::finish() {
  if (subject_) out_ << " .\n";
  subject_.reset();
}

std::string serialize_turtle(const TripleSet& store, const PrefixTable& prefixes) {
  std::ostringstream out;
  {
    auto reader = store.read();
    std::vector<TermId> subjects;
    std::unordered_map<TermId, std::vector<const IdTriple*>> groups;
    for (const IdTriple& t : reader.all()) {
      auto& group = groups[t.s];
      if (group.empty()) subjects.push_back(t.s);
      group.push_back(&t);
    }
    TurtleWriter writer(out, prefixes);
    for (TermId s : subjects) {
      for (const IdTriple* t : groups[s]) writer.write(reader.to_triple(*t));
    }
  }
  return out.str();
}

}  // namespace provrdf
