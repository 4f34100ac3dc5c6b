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
#include <string>
#include <string_view>

namespace provrdf::detail {

enum class TokenKind {
  IriRef,   // <...>            text = IRI
  PName,    // prefix:local     text = prefix, local = local part
  Blank,    // _:label          text = label
  Var,      // ?name / $name    text = name
  String,   // "..." / '...'    text = unescaped lexical form
  Punct,    // { } ( ) ; , . *  text = the character
  Word,     // bare identifier  text = identifier
  AtWord,   // @prefix          text = word without '@'
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::string local;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is_punct(char c) const { return kind == TokenKind::Punct && text.size() == 1 && text[0] == c; }
};

/// Tokenizer shared by the Turtle and SPARQL readers. Throws SyntaxError.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next();
  const Token& peek();
  Token take();

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  char at(std::size_t offset = 0) const { return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0'; }
  bool done() const { return pos_ >= text_.size(); }
  void advance(std::size_t n = 1);
  void skip_space_and_comments();
  [[noreturn]] void fail(const std::string& message) const;

  std::string read_iri();
  void read_uchar(std::string& out, char marker);
  std::string read_string(char quote, std::size_t line, std::size_t column);
  std::string read_name_chars(bool allow_colon);

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  bool peeked_ = false;
  Token lookahead_;
};

/// Keyword comparison, ASCII case-insensitive.
bool keyword_equals(std::string_view word, std::string_view keyword);

}  // namespace provrdf::detail
