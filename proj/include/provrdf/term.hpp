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

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace provrdf {

enum class TermKind : std::uint8_t { Iri, Blank, Literal };

/// An RDF value: IRI, blank node, or plain literal.
///
/// IRIs are stored absolute; prefixed names are expanded by the parsers and
/// compacted again on output. Literals carry only a lexical form. The text
/// lives in shared immutable storage, so copying a term is cheap.
class Term {
 public:
  Term() = default;

  static Term iri(std::string value) { return Term(TermKind::Iri, std::move(value)); }
  static Term blank(std::string label) { return Term(TermKind::Blank, std::move(label)); }
  static Term literal(std::string lexical) { return Term(TermKind::Literal, std::move(lexical)); }

  TermKind kind() const noexcept { return kind_; }
  const std::string& value() const noexcept { return value_ ? *value_ : empty_value(); }

  bool is_iri() const noexcept { return kind_ == TermKind::Iri; }
  bool is_blank() const noexcept { return kind_ == TermKind::Blank; }
  bool is_literal() const noexcept { return kind_ == TermKind::Literal; }

  friend bool operator==(const Term& a, const Term& b) noexcept {
    return a.kind_ == b.kind_ && (a.value_ == b.value_ || a.value() == b.value());
  }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    return a.value().compare(b.value()) <=> 0;
  }

 private:
  Term(TermKind kind, std::string value)
      : kind_(kind), value_(std::make_shared<const std::string>(std::move(value))) {}

  static const std::string& empty_value() noexcept {
    static const std::string empty;
    return empty;
  }

  TermKind kind_ = TermKind::Iri;
  std::shared_ptr<const std::string> value_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept {
    return std::hash<std::string_view>{}(t.value()) * 31u + static_cast<std::size_t>(t.kind());
  }
};

/// N-Triples style rendering: `<iri>`, `_:label`, `"escaped"`.
std::string to_ntriples(const Term& term);

/// Escapes a literal's lexical form for Turtle/SPARQL/TSV output (no surrounding quotes).
std::string escape_literal(std::string_view lexical);

/// IRI text for `<...>`: characters Turtle forbids there become `\u00XX`.
std::string escape_iri(std::string_view iri);

std::ostream& operator<<(std::ostream& os, const Term& term);

/// One RDF statement. Use validate() (or TripleSet::insert) to enforce the
/// position rules.
struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&, const Triple&) = default;
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const noexcept {
    TermHash h;
    return (h(t.subject) * 1000003u) ^ (h(t.predicate) * 8191u) ^ h(t.object);
  }
};

/// Throws StructuralError if the subject is a literal or the predicate is not an IRI.
void validate(const Triple& triple);

std::ostream& operator<<(std::ostream& os, const Triple& triple);

}  // namespace provrdf
