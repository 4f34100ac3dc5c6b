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

#include "provrdf/term.hpp"

#include <cstdio>
#include <ostream>

#include "provrdf/errors.hpp"

namespace provrdf {

std::string escape_literal(std::string_view lexical) {
  std::string out;
  out.reserve(lexical.size());
  for (char c : lexical) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string escape_iri(std::string_view iri) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(iri.size());
  for (const char c : iri) {
    const auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
        c == '`' || c == '\\') {
      out += "\\u00";
      out += kHex[u >> 4];
      out += kHex[u & 0xF];
    } else {
      out += c;
    }
  }
  return out;
}

std::string to_ntriples(const Term& term) {
  switch (term.kind()) {
    case TermKind::Iri: return "<" + escape_iri(term.value()) + ">";
    case TermKind::Blank: return "_:" + term.value();
    case TermKind::Literal: return "\"" + escape_literal(term.value()) + "\"";
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const Term& term) { return os << to_ntriples(term); }

void validate(const Triple& triple) {
  if (triple.subject.is_literal()) {
    throw StructuralError("literal in subject position: " + to_ntriples(triple.subject));
  }
  if (!triple.predicate.is_iri()) {
    throw StructuralError("predicate must be an IRI: " + to_ntriples(triple.predicate));
  }
}

std::ostream& operator<<(std::ostream& os, const Triple& t) {
  return os << t.subject << ' ' << t.predicate << ' ' << t.object << " .";
}

}  // namespace provrdf
