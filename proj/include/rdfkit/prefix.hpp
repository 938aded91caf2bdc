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

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "rdfkit/term.hpp"

namespace rdfkit {

// Prefix bindings used to abbreviate IRIs as prefixed names (CURIEs).
class PrefixMap {
 public:
  PrefixMap() = default;

  // Rebinding a prefix replaces the earlier namespace.
  void bind(std::string prefix, Iri ns) { bindings_.insert_or_assign(std::move(prefix), std::move(ns)); }

  const Iri* find(std::string_view prefix) const {
    auto it = bindings_.find(std::string(prefix));
    return it == bindings_.end() ? nullptr : &it->second;
  }

  const std::map<std::string, Iri>& bindings() const noexcept { return bindings_; }

  const std::optional<Iri>& base() const noexcept { return base_; }
  void set_base(std::optional<Iri> base) { base_ = std::move(base); }

  bool empty() const noexcept { return bindings_.empty(); }

 private:
  std::map<std::string, Iri> bindings_;
  std::optional<Iri> base_;
};

inline PrefixMap common_prefixes() {
  PrefixMap pm;
  pm.bind("rdf", Iri(std::string(vocab::rdf_ns)));
  pm.bind("rdfs", Iri(std::string(vocab::rdfs_ns)));
  pm.bind("xsd", Iri(std::string(vocab::xsd_ns)));
  return pm;
}

namespace detail {

// PN_PREFIX restricted to ASCII: letter first, then letters, digits, '_',
// '-', '.', with no trailing '.'. The empty prefix is allowed.
inline bool is_prefix_label(std::string_view p) noexcept {
  if (p.empty()) return true;
  if (!is_alpha(p[0]) || p.back() == '.') return false;
  for (char c : p) {
    if (!(is_alnum(c) || c == '_' || c == '-' || c == '.')) return false;
  }
  return true;
}

// Removes backslash escapes from a local name ("a\-b" -> "a-b").
inline std::string unescape_local(std::string_view local) {
  std::string out;
  out.reserve(local.size());
  for (std::size_t i = 0; i < local.size(); ++i) {
    if (local[i] == '\\' && i + 1 < local.size()) ++i;
    out.push_back(local[i]);
  }
  return out;
}

}  // namespace detail

// Expands "prefix:reference" against the map. The prefix ends at the first
// colon; the reference may contain further colons and backslash escapes.
inline Iri expand_prefixed_name(const PrefixMap& pm, std::string_view name) {
  const auto colon = name.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::MalformedName, "no colon in prefixed name: " + std::string(name));
  }
  const auto prefix = name.substr(0, colon);
  if (!detail::is_prefix_label(prefix)) {
    throw Error(ErrorKind::MalformedName, "bad prefix in: " + std::string(name));
  }
  const Iri* ns = pm.find(prefix);
  if (!ns) throw Error(ErrorKind::UnknownPrefix, "unbound prefix '" + std::string(prefix) + "'");
  return Iri(ns->value() + detail::unescape_local(name.substr(colon + 1)));
}

}  // namespace rdfkit
