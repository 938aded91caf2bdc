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
   @file term.hpp
   RDF terms: IRIs, blank nodes and literals.

   Terms are plain values. Equality is codepoint equality of the stored
   strings; no IRI normalization is performed. The total order used across
   the library places every IRI before every blank node and every blank node
   before every literal, each group ordered by its string content.
*/

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "rdfkit/error.hpp"

namespace rdfkit {

namespace detail {

inline bool is_alpha(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }
inline bool is_alnum(char c) noexcept { return is_alpha(c) || is_digit(c); }

// scheme ":" with scheme = ALPHA *( ALPHA / DIGIT / "+" / "-" / "." )
inline bool has_scheme(std::string_view s) noexcept {
  if (s.empty() || !is_alpha(s[0])) return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const char c = s[i];
    if (c == ':') return true;
    if (!(is_alnum(c) || c == '+' || c == '-' || c == '.')) return false;
  }
  return false;
}

inline bool is_blank_label(std::string_view s) noexcept {
  if (s.empty() || !is_alnum(s[0]) || s.back() == '.') return false;
  for (char c : s) {
    if (!(is_alnum(c) || c == '_' || c == '.' || c == '-')) return false;
  }
  return true;
}

inline bool is_language_tag(std::string_view s) noexcept {
  std::size_t i = 0;
  while (i < s.size() && is_alpha(s[i])) ++i;
  if (i == 0) return false;
  while (i < s.size()) {
    if (s[i] != '-') return false;
    const std::size_t start = ++i;
    while (i < s.size() && is_alnum(s[i])) ++i;
    if (i == start) return false;
  }
  return true;
}

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace detail

class Iri {
 public:
  explicit Iri(std::string value) : value_(std::move(value)) {
    if (value_.empty()) throw Error(ErrorKind::EmptyIri, "empty IRI");
    if (!detail::has_scheme(value_)) {
      throw Error(ErrorKind::RelativeIri, "IRI has no scheme: " + value_);
    }
  }

  const std::string& value() const noexcept { return value_; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

class BlankNode {
 public:
  explicit BlankNode(std::string label) : label_(std::move(label)) {
    if (!detail::is_blank_label(label_)) {
      throw Error(ErrorKind::InvalidBlankLabel, "bad blank node label: " + label_);
    }
  }

  const std::string& label() const noexcept { return label_; }

  friend bool operator==(const BlankNode&, const BlankNode&) = default;
  friend auto operator<=>(const BlankNode&, const BlankNode&) = default;

 private:
  std::string label_;
};

namespace vocab {

inline constexpr std::string_view rdf_ns = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs_ns = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view xsd_ns = "http://www.w3.org/2001/XMLSchema#";

inline Iri rdf(std::string_view local) { return Iri(std::string(rdf_ns) + std::string(local)); }
inline Iri rdfs(std::string_view local) { return Iri(std::string(rdfs_ns) + std::string(local)); }
inline Iri xsd(std::string_view local) { return Iri(std::string(xsd_ns) + std::string(local)); }

inline const Iri& rdf_type() { static const Iri v = rdf("type"); return v; }
inline const Iri& rdf_property() { static const Iri v = rdf("Property"); return v; }
inline const Iri& rdf_lang_string() { static const Iri v = rdf("langString"); return v; }
inline const Iri& rdf_first() { static const Iri v = rdf("first"); return v; }
inline const Iri& rdf_rest() { static const Iri v = rdf("rest"); return v; }
inline const Iri& rdf_nil() { static const Iri v = rdf("nil"); return v; }
inline const Iri& xsd_string() { static const Iri v = xsd("string"); return v; }

}  // namespace vocab

class Literal {
 public:
  // Throws LangWithoutLangString when a language tag accompanies a datatype
  // other than rdf:langString. Tags are stored lowercased.
  Literal(std::string lexical, std::optional<Iri> datatype = std::nullopt,
          std::optional<std::string> language = std::nullopt)
      : lexical_(std::move(lexical)), datatype_(vocab::xsd_string()) {
    if (language) {
      if (datatype && *datatype != vocab::rdf_lang_string()) {
        throw Error(ErrorKind::LangWithoutLangString,
                    "language tag with datatype " + datatype->value());
      }
      if (!detail::is_language_tag(*language)) {
        throw Error(ErrorKind::InvalidLanguageTag, "bad language tag: " + *language);
      }
      language_ = detail::ascii_lower(*language);
      datatype_ = vocab::rdf_lang_string();
    } else if (datatype) {
      if (*datatype == vocab::rdf_lang_string()) {
        throw Error(ErrorKind::InvalidLanguageTag,
                    "rdf:langString literal requires a language tag");
      }
      datatype_ = std::move(*datatype);
    }
  }

  const std::string& lexical_form() const noexcept { return lexical_; }
  const Iri& datatype() const noexcept { return datatype_; }
  // Empty when the literal carries no language tag.
  const std::string& language() const noexcept { return language_; }
  bool has_language() const noexcept { return !language_.empty(); }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;

 private:
  std::string lexical_;
  Iri datatype_;
  std::string language_;
};

using Term = std::variant<Iri, BlankNode, Literal>;

inline Iri make_iri(std::string text) { return Iri(std::move(text)); }

inline Literal make_literal(std::string lexical, std::optional<Iri> datatype = std::nullopt,
                            std::optional<std::string> language = std::nullopt) {
  return Literal(std::move(lexical), std::move(datatype), std::move(language));
}

inline bool is_iri(const Term& t) noexcept { return std::holds_alternative<Iri>(t); }
inline bool is_blank(const Term& t) noexcept { return std::holds_alternative<BlankNode>(t); }
inline bool is_literal(const Term& t) noexcept { return std::holds_alternative<Literal>(t); }

// Human-oriented rendering in N-Triples style; used in diagnostics.
std::string to_display(const Term& t);

}  // namespace rdfkit

template <>
struct std::hash<rdfkit::Iri> {
  std::size_t operator()(const rdfkit::Iri& i) const noexcept {
    return std::hash<std::string>{}(i.value());
  }
};

template <>
struct std::hash<rdfkit::BlankNode> {
  std::size_t operator()(const rdfkit::BlankNode& b) const noexcept {
    return std::hash<std::string>{}(b.label()) * 31u + 1u;
  }
};

template <>
struct std::hash<rdfkit::Literal> {
  std::size_t operator()(const rdfkit::Literal& l) const noexcept {
    std::size_t h = std::hash<std::string>{}(l.lexical_form());
    h = h * 1000003u ^ std::hash<std::string>{}(l.datatype().value());
    h = h * 1000003u ^ std::hash<std::string>{}(l.language());
    return h;
  }
};

namespace rdfkit {

inline std::string to_display(const Term& t) {
  if (auto* i = std::get_if<Iri>(&t)) return "<" + i->value() + ">";
  if (auto* b = std::get_if<BlankNode>(&t)) return "_:" + b->label();
  const auto& l = std::get<Literal>(t);
  std::string out = "\"" + l.lexical_form() + "\"";
  if (l.has_language()) return out + "@" + l.language();
  if (l.datatype() == vocab::xsd_string()) return out;
  return out + "^^<" + l.datatype().value() + ">";
}

}  // namespace rdfkit
