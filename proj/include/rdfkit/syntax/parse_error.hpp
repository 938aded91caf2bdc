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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdfkit {

enum class ParseErrorKind {
  BadEncoding,
  UnexpectedCharacter,
  UnexpectedEnd,
  UnterminatedLiteral,
  BadEscape,
  BadIri,
  RelativeIri,
  UnknownPrefix,
  BadBlankLabel,
  BadLanguageTag,
  MissingDot,
  LiteralSubject,
  LiteralGraphLabel,
  TermCount,
  EmbeddedTriple,
  NestedGraph,
  UnsupportedSyntax,
};

constexpr std::string_view to_string(ParseErrorKind k) noexcept {
  switch (k) {
    case ParseErrorKind::BadEncoding: return "BadEncoding";
    case ParseErrorKind::UnexpectedCharacter: return "UnexpectedCharacter";
    case ParseErrorKind::UnexpectedEnd: return "UnexpectedEnd";
    case ParseErrorKind::UnterminatedLiteral: return "UnterminatedLiteral";
    case ParseErrorKind::BadEscape: return "BadEscape";
    case ParseErrorKind::BadIri: return "BadIri";
    case ParseErrorKind::RelativeIri: return "RelativeIri";
    case ParseErrorKind::UnknownPrefix: return "UnknownPrefix";
    case ParseErrorKind::BadBlankLabel: return "BadBlankLabel";
    case ParseErrorKind::BadLanguageTag: return "BadLanguageTag";
    case ParseErrorKind::MissingDot: return "MissingDot";
    case ParseErrorKind::LiteralSubject: return "LiteralSubject";
    case ParseErrorKind::LiteralGraphLabel: return "LiteralGraphLabel";
    case ParseErrorKind::TermCount: return "TermCount";
    case ParseErrorKind::EmbeddedTriple: return "EmbeddedTriple";
    case ParseErrorKind::NestedGraph: return "NestedGraph";
    case ParseErrorKind::UnsupportedSyntax: return "UnsupportedSyntax";
  }
  return "Unknown";
}

// Line and column are 1-based and count decoded characters, so a column
// past a multi-byte character advances by one.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, ParseErrorKind kind, std::string detail)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                           std::string(to_string(kind)) + ": " + detail),
        line_(line),
        column_(column),
        kind_(kind),
        detail_(std::move(detail)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  ParseErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  ParseErrorKind kind_;
  std::string detail_;
};

}  // namespace rdfkit
