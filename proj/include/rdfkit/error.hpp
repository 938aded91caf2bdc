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

enum class ErrorKind {
  EmptyIri,
  RelativeIri,
  InvalidBlankLabel,
  InvalidLanguageTag,
  LangWithoutLangString,
  LiteralSubject,
  NonIriPredicate,
  UnknownPrefix,
  MalformedName,
  UncoveredVocabulary,
  EmbeddedSyntaxDisabled,
  InvalidRule,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::EmptyIri: return "EmptyIri";
    case ErrorKind::RelativeIri: return "RelativeIri";
    case ErrorKind::InvalidBlankLabel: return "InvalidBlankLabel";
    case ErrorKind::InvalidLanguageTag: return "InvalidLanguageTag";
    case ErrorKind::LangWithoutLangString: return "LangWithoutLangString";
    case ErrorKind::LiteralSubject: return "LiteralSubject";
    case ErrorKind::NonIriPredicate: return "NonIriPredicate";
    case ErrorKind::UnknownPrefix: return "UnknownPrefix";
    case ErrorKind::MalformedName: return "MalformedName";
    case ErrorKind::UncoveredVocabulary: return "UncoveredVocabulary";
    case ErrorKind::EmbeddedSyntaxDisabled: return "EmbeddedSyntaxDisabled";
    case ErrorKind::InvalidRule: return "InvalidRule";
  }
  return "Unknown";
}

// Raised by constructors and operations that reject their input. Parsers
// raise ParseError instead (see syntax/parse_error.hpp).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rdfkit
