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

#include "provrdf/xml.hpp"

#include <cctype>

#include "provrdf/errors.hpp"

namespace provrdf::xml {
namespace {

bool name_start(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || c == '_' || c == ':' || u >= 0x80;
}

bool name_char(char c) {
  return name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.';
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {
    if (text_.starts_with("\xEF\xBB\xBF")) advance(3);
  }

  Element document() {
    misc();
    if (starts_with("<!DOCTYPE")) {
      doctype();
      misc();
    }
    if (at() != '<') fail("expected root element");
    Element root = element();
    misc();
    if (!done()) fail("content after root element");
    return root;
  }

 private:
  char at(std::size_t k = 0) const { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; }
  bool done() const { return pos_ >= text_.size(); }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, line_, column_); }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(at()))) advance();
  }

  void skip_until(std::string_view terminator, const char* what) {
    while (!starts_with(terminator)) {
      if (done()) fail(std::string("unterminated ") + what);
      advance();
    }
    advance(terminator.size());
  }

  // Whitespace, comments and processing instructions.
  void misc() {
    while (true) {
      skip_space();
      if (starts_with("<!--")) {
        skip_until("-->", "comment");
      } else if (starts_with("<?")) {
        skip_until("?>", "processing instruction");
      } else {
        return;
      }
    }
  }

  void doctype() {
    int depth = 0;
    while (!done()) {
      const char c = at();
      advance();
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (c == '>' && depth == 0) return;
    }
    fail("unterminated DOCTYPE");
  }

  std::string name() {
    if (!name_start(at())) fail("expected name");
    std::string out;
    while (!done() && name_char(at())) {
      out += at();
      advance();
    }
    return out;
  }

  void entity(std::string& out) {
    advance();  // '&'
    std::string ref;
    while (at() != ';') {
      if (done() || ref.size() > 10) fail("malformed entity reference");
      ref += at();
      advance();
    }
    advance();
    if (ref == "lt") out += '<';
    else if (ref == "gt") out += '>';
    else if (ref == "amp") out += '&';
    else if (ref == "quot") out += '"';
    else if (ref == "apos") out += '\'';
    else if (ref.size() > 1 && ref[0] == '#') {
      unsigned long cp = 0;
      const bool hex = ref[1] == 'x';
      const std::string digits = ref.substr(hex ? 2 : 1);
      if (digits.empty()) fail("malformed character reference");
      for (char c : digits) {
        if (!(hex ? std::isxdigit(static_cast<unsigned char>(c)) : std::isdigit(static_cast<unsigned char>(c)))) {
          fail("malformed character reference");
        }
        cp = cp * (hex ? 16 : 10) +
             static_cast<unsigned long>(std::isdigit(static_cast<unsigned char>(c))
                                            ? c - '0'
                                            : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
        if (cp > 0x10FFFF) fail("character reference out of range");
      }
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
    } else {
      fail("unknown entity &" + ref + ";");
    }
  }

  static std::string local_name(const std::string& qname) {
    const auto colon = qname.rfind(':');
    return colon == std::string::npos ? qname : qname.substr(colon + 1);
  }

  Element element() {
    Element el;
    el.line = line_;
    el.column = column_;
    advance();  // '<'
    const std::string qname = name();
    el.name = local_name(qname);
    while (true) {
      const bool spaced = !done() && std::isspace(static_cast<unsigned char>(at()));
      skip_space();
      if (starts_with("/>")) {
        advance(2);
        return el;
      }
      if (at() == '>') {
        advance();
        break;
      }
      if (done()) fail("unterminated start tag <" + qname + ">");
      if (!spaced) fail("expected whitespace before attribute");
      std::string key = name();
      skip_space();
      if (at() != '=') fail("expected '=' after attribute " + key);
      advance();
      skip_space();
      const char quote = at();
      if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
      const std::size_t open_line = line_, open_column = column_;
      advance();
      std::string value;
      while (at() != quote) {
        if (done()) throw SyntaxError("unterminated attribute value", open_line, open_column);
        if (at() == '<') fail("'<' in attribute value");
        if (at() == '&') {
          entity(value);
        } else {
          value += at();
          advance();
        }
      }
      advance();
      if (el.attribute(key) != nullptr) fail("duplicate attribute " + key);
      el.attributes.emplace_back(std::move(key), std::move(value));
    }
    content(el, qname);
    return el;
  }

  void content(Element& el, const std::string& qname) {
    while (true) {
      if (done()) fail("unclosed element <" + qname + ">");
      if (starts_with("</")) {
        const std::size_t line = line_, column = column_;
        advance(2);
        const std::string closing = name();
        skip_space();
        if (at() != '>') fail("expected '>'");
        advance();
        if (closing != qname) {
          throw SyntaxError("mismatched closing tag </" + closing + ">, expected </" + qname + ">", line, column);
        }
        return;
      }
      if (starts_with("<!--")) {
        skip_until("-->", "comment");
      } else if (starts_with("<![CDATA[")) {
        advance(9);
        while (!starts_with("]]>")) {
          if (done()) fail("unterminated CDATA section");
          el.text += at();
          advance();
        }
        advance(3);
      } else if (starts_with("<?")) {
        skip_until("?>", "processing instruction");
      } else if (at() == '<') {
        el.children.push_back(element());
      } else if (at() == '&') {
        entity(el.text);
      } else {
        el.text += at();
        advance();
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

Element parse(std::string_view text) { return Reader(text).document(); }

}  // namespace provrdf::xml
