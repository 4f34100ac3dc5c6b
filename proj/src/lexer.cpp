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

#include "lexer.hpp"

#include <cctype>

#include "provrdf/errors.hpp"

namespace provrdf::detail {
namespace {

bool name_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-' || c == '.' || u >= 0x80;
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

}  // namespace

bool keyword_equals(std::string_view word, std::string_view keyword) {
  if (word.size() != keyword.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(word[i])) != std::tolower(static_cast<unsigned char>(keyword[i]))) {
      return false;
    }
  }
  return true;
}

void Lexer::advance(std::size_t n) {
  for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
}

void Lexer::fail(const std::string& message) const { throw SyntaxError(message, line_, column_); }

void Lexer::skip_space_and_comments() {
  while (!done()) {
    const char c = at();
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance();
    } else if (c == '#') {
      while (!done() && at() != '\n') advance();
    } else {
      break;
    }
  }
}

std::string Lexer::read_iri() {
  advance();  // '<'
  std::string iri;
  while (true) {
    if (done()) fail("unterminated IRI");
    const char c = at();
    if (c == '>') {
      advance();
      return iri;
    }
    if (c == '\\' && (at(1) == 'u' || at(1) == 'U')) {
      advance();
      read_uchar(iri, at());
      advance();
      continue;
    }
    if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' ||
        c == '^' || c == '`' || c == '\\') {
      fail(std::string("invalid character in IRI: '") + c + "'");
    }
    iri += c;
    advance();
  }
}

// Decodes the hex digits after `\u` or `\U`; leaves the cursor on the last digit.
void Lexer::read_uchar(std::string& out, char marker) {
  const std::size_t digits = marker == 'u' ? 4 : 8;
  unsigned long cp = 0;
  for (std::size_t i = 1; i <= digits; ++i) {
    const char h = at(i);
    if (!std::isxdigit(static_cast<unsigned char>(h))) fail("bad \\u escape");
    cp = cp * 16 + static_cast<unsigned long>(std::isdigit(static_cast<unsigned char>(h))
                                                  ? h - '0'
                                                  : std::tolower(static_cast<unsigned char>(h)) - 'a' + 10);
  }
  if (cp > 0x10FFFF) fail("escape out of range");
  append_utf8(out, cp);
  advance(digits);
}

std::string Lexer::read_string(char quote, std::size_t line, std::size_t column) {
  advance();  // opening quote
  std::string out;
  while (true) {
    if (done() || at() == '\n' || at() == '\r') throw SyntaxError("unterminated literal", line, column);
    const char c = at();
    if (c == quote) {
      advance();
      return out;
    }
    if (c != '\\') {
      out += c;
      advance();
      continue;
    }
    advance();
    const char e = at();
    switch (e) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case 'b': out += '\b'; break;
      case 'f': out += '\f'; break;
      case '"': out += '"'; break;
      case '\'': out += '\''; break;
      case '\\': out += '\\'; break;
      case 'u':
      case 'U':
        read_uchar(out, e);
        break;
      default:
        fail(std::string("unknown escape \\") + e);
    }
    advance();
  }
}

std::string Lexer::read_name_chars(bool allow_colon) {
  std::string out;
  while (!done() && (name_char(at()) || (allow_colon && at() == ':'))) {
    // A trailing '.' terminates the statement rather than the name.
    if (at() == '.' && !(name_char(at(1)) || (allow_colon && at(1) == ':'))) break;
    out += at();
    advance();
  }
  return out;
}

Token Lexer::next() {
  if (peeked_) {
    peeked_ = false;
    return std::move(lookahead_);
  }
  skip_space_and_comments();
  Token tok;
  tok.line = line_;
  tok.column = column_;
  if (done()) {
    tok.kind = TokenKind::End;
    return tok;
  }
  const char c = at();
  if (c == '<') {
    tok.kind = TokenKind::IriRef;
    tok.text = read_iri();
  } else if (c == '"' || c == '\'') {
    tok.kind = TokenKind::String;
    tok.text = read_string(c, tok.line, tok.column);
  } else if (c == '_' && at(1) == ':') {
    advance(2);
    tok.kind = TokenKind::Blank;
    tok.text = read_name_chars(false);
    if (tok.text.empty()) throw SyntaxError("empty blank node label", tok.line, tok.column);
  } else if (c == '?' || c == '$') {
    advance();
    tok.kind = TokenKind::Var;
    while (!done() && (std::isalnum(static_cast<unsigned char>(at())) || at() == '_')) {
      tok.text += at();
      advance();
    }
    if (tok.text.empty()) throw SyntaxError("empty variable name", tok.line, tok.column);
  } else if (c == '@') {
    advance();
    tok.kind = TokenKind::AtWord;
    while (!done() && std::isalpha(static_cast<unsigned char>(at()))) {
      tok.text += at();
      advance();
    }
  } else if (c == '{' || c == '}' || c == '(' || c == ')' || c == ';' || c == ',' || c == '.' || c == '*') {
    tok.kind = TokenKind::Punct;
    tok.text = std::string(1, c);
    advance();
  } else if (c == ':' || std::isalpha(static_cast<unsigned char>(c))) {
    std::string prefix = c == ':' ? std::string() : read_name_chars(false);
    if (at() == ':') {
      advance();
      tok.kind = TokenKind::PName;
      tok.text = std::move(prefix);
      tok.local = read_name_chars(true);
    } else {
      tok.kind = TokenKind::Word;
      tok.text = std::move(prefix);
    }
  } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') {
    fail("numeric literals are not supported");
  } else {
    fail(std::string("unexpected character '") + c + "'");
  }
  return tok;
}

const Token& Lexer::peek() {
  if (!peeked_) {
    lookahead_ = next();
    peeked_ = true;
  }
  return lookahead_;
}

Token Lexer::take() { return next(); }

}  // namespace provrdf::detail
