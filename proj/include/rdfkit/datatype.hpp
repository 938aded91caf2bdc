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
   @file datatype.hpp
   Recognized datatypes and their lexical-to-value mappings.

   A datatype maps lexical forms to values. Forms outside the lexical space
   have no value and the literal is ill-typed. A literal whose datatype is not
   in the recognized set is unrecognized: it denotes only itself.
*/

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rdfkit/term.hpp"

namespace rdfkit {

struct StringValue {
  std::string text;
  friend auto operator<=>(const StringValue&, const StringValue&) = default;
};

struct LangStringValue {
  std::string text;
  std::string language;  // lowercase
  friend auto operator<=>(const LangStringValue&, const LangStringValue&) = default;
};

// Arbitrary-precision integer kept in canonical decimal form: no leading
// zeros, no '+', "-" only on non-zero values.
struct IntegerValue {
  std::string decimal;
  friend auto operator<=>(const IntegerValue&, const IntegerValue&) = default;
};

struct BooleanValue {
  bool value;
  friend auto operator<=>(const BooleanValue&, const BooleanValue&) = default;
};

using Value = std::variant<StringValue, LangStringValue, IntegerValue, BooleanValue>;

struct IllTyped {
  friend bool operator==(IllTyped, IllTyped) = default;
};
struct Unrecognized {
  friend bool operator==(Unrecognized, Unrecognized) = default;
};

using LiteralValue = std::variant<Value, IllTyped, Unrecognized>;

struct Datatype {
  Iri iri;
  // Deterministic; returns nullopt outside the lexical space.
  std::function<std::optional<Value>(const Literal&)> lexical_to_value;
  std::function<bool(const Value&)> value_space_member;
};

class DatatypeSet {
 public:
  DatatypeSet() = default;

  void add(Datatype dt) {
    Iri key = dt.iri;
    by_iri_.insert_or_assign(std::move(key), std::move(dt));
  }
  bool contains(const Iri& iri) const { return by_iri_.count(iri) > 0; }
  const Datatype* find(const Iri& iri) const {
    auto it = by_iri_.find(iri);
    return it == by_iri_.end() ? nullptr : &it->second;
  }
  std::vector<Iri> iris() const {
    std::vector<Iri> out;
    for (const auto& [iri, dt] : by_iri_) out.push_back(iri);
    return out;
  }
  std::size_t size() const noexcept { return by_iri_.size(); }

 private:
  std::map<Iri, Datatype> by_iri_;
};

namespace detail {

inline std::optional<IntegerValue> parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return std::nullopt;
  for (char c : s) {
    if (!is_digit(c)) return std::nullopt;
  }
  while (s.size() > 1 && s[0] == '0') s.remove_prefix(1);
  if (s == "0") negative = false;
  return IntegerValue{(negative ? "-" : "") + std::string(s)};
}

// Compares non-negative canonical decimals.
inline int compare_magnitude(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
}

inline bool is_unsigned_int(const Value& v) {
  auto* i = std::get_if<IntegerValue>(&v);
  return i && i->decimal[0] != '-' && compare_magnitude(i->decimal, "4294967295") <= 0;
}

}  // namespace detail

inline Datatype xsd_string_datatype() {
  return {vocab::xsd_string(),
          [](const Literal& l) -> std::optional<Value> { return StringValue{l.lexical_form()}; },
          [](const Value& v) { return std::holds_alternative<StringValue>(v); }};
}

inline Datatype rdf_lang_string_datatype() {
  return {vocab::rdf_lang_string(),
          [](const Literal& l) -> std::optional<Value> {
            if (!l.has_language()) return std::nullopt;
            return LangStringValue{l.lexical_form(), l.language()};
          },
          [](const Value& v) { return std::holds_alternative<LangStringValue>(v); }};
}

inline Datatype xsd_integer_datatype() {
  return {vocab::xsd("integer"),
          [](const Literal& l) -> std::optional<Value> {
            if (auto v = detail::parse_integer(l.lexical_form())) return Value(*v);
            return std::nullopt;
          },
          [](const Value& v) { return std::holds_alternative<IntegerValue>(v); }};
}

inline Datatype xsd_unsigned_int_datatype() {
  return {vocab::xsd("unsignedInt"),
          [](const Literal& l) -> std::optional<Value> {
            auto v = detail::parse_integer(l.lexical_form());
            if (!v || !detail::is_unsigned_int(*v)) return std::nullopt;
            return Value(*v);
          },
          [](const Value& v) { return detail::is_unsigned_int(v); }};
}

inline Datatype xsd_boolean_datatype() {
  return {vocab::xsd("boolean"),
          [](const Literal& l) -> std::optional<Value> {
            const auto& s = l.lexical_form();
            if (s == "true" || s == "1") return BooleanValue{true};
            if (s == "false" || s == "0") return BooleanValue{false};
            return std::nullopt;
          },
          [](const Value& v) { return std::holds_alternative<BooleanValue>(v); }};
}

// Datatypes this library knows how to interpret, keyed by IRI.
inline std::optional<Datatype> builtin_datatype(const Iri& iri) {
  for (auto make : {xsd_string_datatype, rdf_lang_string_datatype, xsd_integer_datatype,
                    xsd_unsigned_int_datatype, xsd_boolean_datatype}) {
    Datatype dt = make();
    if (dt.iri == iri) return dt;
  }
  return std::nullopt;
}

// {xsd:string, rdf:langString, xsd:integer, xsd:unsignedInt, xsd:boolean}
inline DatatypeSet default_datatypes() {
  DatatypeSet d;
  d.add(xsd_string_datatype());
  d.add(rdf_lang_string_datatype());
  d.add(xsd_integer_datatype());
  d.add(xsd_unsigned_int_datatype());
  d.add(xsd_boolean_datatype());
  return d;
}

// The smallest set an RDF interpretation may recognize.
inline DatatypeSet minimal_datatypes() {
  DatatypeSet d;
  d.add(xsd_string_datatype());
  d.add(rdf_lang_string_datatype());
  return d;
}

inline LiteralValue literal_value(const Literal& l, const DatatypeSet& recognized) {
  const Datatype* dt = recognized.find(l.datatype());
  if (!dt) return Unrecognized{};
  if (auto v = dt->lexical_to_value(l)) return *v;
  return IllTyped{};
}

}  // namespace rdfkit
