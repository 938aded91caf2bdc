/*  Copyright 2026 The rdfkit authors.

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License. */

/**
   @file cursor.hpp
   Character cursor and the token readers shared by the line-based and
   Turtle-family parsers.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "rdfkit/syntax/parse_error.hpp"
#include "rdfkit/term.hpp"

namespace rdfkit::detail {

inline void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Returns the byte offset of the first malformed sequence, or npos.
inline std::size_t find_invalid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > s.size()) return i;
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    const bool overlong = (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                          (len == 4 && cp < 0x10000);
    if (overlong || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
    i += len;
  }
  return std::string_view::npos;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {
    if (auto bad = find_invalid_utf8(text); bad != std::string_view::npos) {
      pos_ = bad;
      fail(ParseErrorKind::BadEncoding, "invalid UTF-8 sequence");
    }
  }

  bool at_end() const noexcept { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const noexcept {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const noexcept {
    return text_.substr(pos_, s.size()) == s;
  }
  char get() noexcept { return text_[pos_++]; }
  void advance(std::size_t n = 1) noexcept { pos_ += n; }
  std::size_t pos() const noexcept { return pos_; }
  void seek(std::size_t p) noexcept { pos_ = p; }
  std::string_view text() const noexcept { return text_; }

  std::pair<std::size_t, std::size_t> line_column(std::size_t at) const {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min(at, text_.size());
    for (std::size_t i = 0; i < end; ++i) {
      const char c = text_[i];
      if (c == '\n') {
        ++line;
        column = 1;
      } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
        ++column;
      }
    }
    return {line, column};
  }

  [[noreturn]] void fail_at(std::size_t at, ParseErrorKind kind, const std::string& detail) const {
    // Positions at end of input are reported on the last character so the
    // location stays inside the text.
    if (at >= text_.size() && !text_.empty()) at = text_.size() - 1;
    auto [line, column] = line_column(at);
    throw ParseError(line, column, kind, detail);
  }
  [[noreturn]] void fail(ParseErrorKind kind, const std::string& detail) const {
    fail_at(pos_, kind, detail);
  }

  void expect(char c) {
    if (at_end()) fail(ParseErrorKind::UnexpectedEnd, std::string("expected '") + c + "'");
    if (peek() != c) {
      fail(ParseErrorKind::UnexpectedCharacter, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  // Spaces and tabs only; line-based formats treat newlines as significant.
  void skip_blanks() noexcept {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  void skip_comment() noexcept {
    if (peek() != '#') return;
    while (!at_end() && peek() != '\n' && peek() != '\r') ++pos_;
  }

  // Whitespace including newlines, and comments.
  void skip_space() noexcept {
    for (;;) {
      while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r')) ++pos_;
      if (peek() == '#') {
        skip_comment();
        continue;
      }
      return;
    }
  }

  std::uint32_t read_hex(int digits) {
    std::uint32_t v = 0;
    for (int i = 0; i < digits; ++i) {
      const char c = peek();
      std::uint32_t d;
      if (c >= '0' && c <= '9') d = static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') d = static_cast<std::uint32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') d = static_cast<std::uint32_t>(c - 'A' + 10);
      else fail(ParseErrorKind::BadEscape, "expected hex digit");
      v = v * 16 + d;
      ++pos_;
    }
    return v;
  }

  // After a backslash: \uXXXX or \UXXXXXXXX.
  void read_unicode_escape(std::string& out) {
    const std::size_t start = pos_ - 1;
    const char kind = get();
    const std::uint32_t cp = read_hex(kind == 'u' ? 4 : 8);
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      fail_at(start, ParseErrorKind::BadEscape, "escape is not a Unicode scalar value");
    }
    append_utf8(out, cp);
  }

  // IRIREF: '<' ... '>' with only \u and \U escapes. Returns the raw
  // (possibly relative) reference.
  std::string read_iriref() {
    expect('<');
    std::string out;
    for (;;) {
      if (at_end()) fail(ParseErrorKind::BadIri, "unterminated IRI");
      const char c = peek();
      if (c == '>') {
        ++pos_;
        return out;
      }
      if (c == '\\') {
        ++pos_;
        if (peek() != 'u' && peek() != 'U') fail(ParseErrorKind::BadEscape, "only \\u and \\U escapes are allowed in IRIs");
        read_unicode_escape(out);
        continue;
      }
      const auto uc = static_cast<unsigned char>(c);
      if (uc <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
          c == '`') {
        fail(ParseErrorKind::BadIri, "character not allowed in IRI");
      }
      out.push_back(c);
      ++pos_;
    }
  }

  // After "_:". Trailing dots belong to the enclosing statement.
  std::string read_blank_label() {
    const std::size_t start = pos_;
    if (!is_alnum(peek())) fail(ParseErrorKind::BadBlankLabel, "blank node label must start with a letter or digit");
    while (!at_end() && (is_alnum(peek()) || peek() == '_' || peek() == '-' || peek() == '.')) ++pos_;
    while (pos_ > start && text_[pos_ - 1] == '.') --pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // At a quote character. Handles '…', "…", '''…''' and """…""".
  std::string read_string(bool allow_long, bool allow_single_quote) {
    const std::size_t start = pos_;
    const char q = peek();
    if (q != '"' && !(allow_single_quote && q == '\'')) {
      fail(ParseErrorKind::UnexpectedCharacter, "expected string literal");
    }
    const bool is_long = allow_long && peek(1) == q && peek(2) == q;
    pos_ += is_long ? 3 : 1;
    std::string out;
    for (;;) {
      if (at_end()) fail_at(start, ParseErrorKind::UnterminatedLiteral, "unterminated string literal");
      const char c = peek();
      if (c == q) {
        if (!is_long) {
          ++pos_;
          return out;
        }
        if (peek(1) == q && peek(2) == q) {
          // A long string may end with up to two extra quotes.
          while (peek(3) == q) {
            out.push_back(q);
            ++pos_;
          }
          pos_ += 3;
          return out;
        }
        out.push_back(c);
        ++pos_;
        continue;
      }
      if (!is_long && (c == '\n' || c == '\r')) {
        fail_at(start, ParseErrorKind::UnterminatedLiteral, "line break inside string literal");
      }
      if (c == '\\') {
        ++pos_;
        switch (peek()) {
          case 't': out.push_back('\t'); ++pos_; break;
          case 'b': out.push_back('\b'); ++pos_; break;
          case 'n': out.push_back('\n'); ++pos_; break;
          case 'r': out.push_back('\r'); ++pos_; break;
          case 'f': out.push_back('\f'); ++pos_; break;
          case '"': out.push_back('"'); ++pos_; break;
          case '\'': out.push_back('\''); ++pos_; break;
          case '\\': out.push_back('\\'); ++pos_; break;
          case 'u':
          case 'U': read_unicode_escape(out); break;
          default: fail_at(pos_ - 1, ParseErrorKind::BadEscape, "unknown escape sequence");
        }
        continue;
      }
      out.push_back(c);
      ++pos_;
    }
  }

  // After '@'.
  std::string read_language_tag() {
    const std::size_t start = pos_;
    while (!at_end() && (is_alnum(peek()) || peek() == '-')) ++pos_;
    std::string tag(text_.substr(start, pos_ - start));
    if (!is_language_tag(tag)) fail_at(start, ParseErrorKind::BadLanguageTag, "malformed language tag");
    return tag;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace rdfkit::detail
