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
   @file skolem.hpp
   Replacing blank nodes by fresh well-known IRIs and back.

   Generated IRIs have the form `{base}/.well-known/genid/{id}`. A trailing
   slash on the base is dropped so the path has exactly one separator.
*/

#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rdfkit/algebra/search.hpp"
#include "rdfkit/graph.hpp"

namespace rdfkit {

inline constexpr std::string_view kGenidPath = "/.well-known/genid/";

struct SkolemPolicy {
  Iri base;
  // b0, b1, ... in first-occurrence order when set; 128-bit random hex
  // otherwise.
  bool deterministic = false;
  // Seed for the random ids; a nondeterministic source is used when absent.
  std::optional<std::uint64_t> seed;
};

namespace detail {

inline std::string genid_prefix(const Iri& base) {
  std::string prefix = base.value();
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  prefix += kGenidPath;
  return prefix;
}

inline std::string random_id(std::mt19937_64& rng) {
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(rng()),
                static_cast<unsigned long long>(rng()));
  return buf;
}

// Blank nodes of `g` in order of first occurrence (subject before object,
// triples in graph order).
inline std::vector<BlankNode> blanks_in_order(const Graph& g) {
  std::vector<BlankNode> order;
  std::set<BlankNode> seen;
  auto visit = [&](const Term& t) {
    if (auto* b = std::get_if<BlankNode>(&t); b && seen.insert(*b).second) order.push_back(*b);
  };
  for (const auto& t : g) {
    visit(t.subject());
    visit(t.object());
  }
  return order;
}

}  // namespace detail

// The mapping ξ used by skolemize(g, policy): injective, and disjoint from
// every IRI already in g.
inline TermMapping skolem_mapping(const Graph& g, const SkolemPolicy& policy) {
  const std::string prefix = detail::genid_prefix(policy.base);
  const std::set<Iri> existing = iris(g);
  std::mt19937_64 rng(policy.seed ? *policy.seed : std::random_device{}() * 0x9E3779B97F4A7C15ULL ^
                                                       std::random_device{}());
  TermMapping m;
  std::set<Iri> issued;
  std::size_t counter = 0;
  for (const auto& b : detail::blanks_in_order(g)) {
    for (;;) {
      const std::string id =
          policy.deterministic ? "b" + std::to_string(counter++) : detail::random_id(rng);
      Iri iri(prefix + id);
      if (existing.count(iri) || !issued.insert(iri).second) continue;
      m.emplace(b, Term(iri));
      break;
    }
  }
  return m;
}

inline Graph skolemize(const Graph& g, const SkolemPolicy& policy) {
  return rdfkit::apply(skolem_mapping(g, policy), g);
}

inline bool is_skolem_iri(const Iri& iri, const Iri& base) {
  const std::string prefix = detail::genid_prefix(base);
  return iri.value().size() > prefix.size() && iri.value().compare(0, prefix.size(), prefix) == 0;
}

// Replaces each skolem IRI under `base` by a blank node labelled with its id
// where possible. Labels already used by blank nodes of g are avoided.
inline Graph deskolemize(const Graph& g, const Iri& base) {
  const std::string prefix = detail::genid_prefix(base);
  std::set<BlankNode> used = blank_nodes(g);
  std::map<Iri, BlankNode> assigned;
  auto back = [&](const Term& t) -> Term {
    auto* i = std::get_if<Iri>(&t);
    if (!i || !is_skolem_iri(*i, base)) return t;
    if (auto it = assigned.find(*i); it != assigned.end()) return it->second;
    std::string label = i->value().substr(prefix.size());
    if (!detail::is_blank_label(label)) {
      std::string cleaned = "g";
      for (char c : label) cleaned += detail::is_alnum(c) ? c : '_';
      label = cleaned;
    }
    std::string candidate = label;
    for (std::size_t k = 1; !used.insert(BlankNode(candidate)).second; ++k) {
      candidate = label + "_" + std::to_string(k);
    }
    return assigned.emplace(*i, BlankNode(candidate)).first->second;
  };
  Graph out;
  for (const auto& t : g) out.insert(make_triple(back(t.subject()), Term(t.predicate()), back(t.object())));
  return out;
}

}  // namespace rdfkit
