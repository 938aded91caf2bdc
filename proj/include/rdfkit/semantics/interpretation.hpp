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
   @file interpretation.hpp
   Finite interpretations and model checking.

   Resources are opaque strings. A structure is only ever checked against a
   finite vocabulary, so every universally quantified semantic condition is
   read over the resources, properties and interpreted names that the
   structure actually contains.
*/

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rdfkit/datatype.hpp"
#include "rdfkit/error.hpp"
#include "rdfkit/graph.hpp"

namespace rdfkit {

using Resource = std::string;
using ResourcePair = std::pair<Resource, Resource>;

struct FiniteInterpretation {
  std::set<Resource> resources;                          // R
  std::set<Resource> properties;                         // P
  std::map<Resource, std::set<ResourcePair>> ext;        // EXT
  std::map<Iri, Resource> names;                         // INT on IRIs
  std::map<Literal, Resource> literal_values;            // L
  std::optional<std::map<Resource, std::set<Resource>>> class_extension;  // CEXT; derived when absent
  std::optional<std::set<Resource>> classes;             // IC; CEXT(I(rdfs:Class)) when absent
  std::optional<std::set<Resource>> literal_resources;   // LV; CEXT(I(rdfs:Literal)) when absent

  std::optional<Resource> interpret(const Iri& iri) const {
    if (auto it = names.find(iri); it != names.end()) return it->second;
    return std::nullopt;
  }

  const std::set<ResourcePair>& extension(const Resource& p) const {
    static const std::set<ResourcePair> empty;
    auto it = ext.find(p);
    return it == ext.end() ? empty : it->second;
  }

  // {x : <x, y> in EXT(I(rdf:type))}, regardless of class_extension.
  std::set<Resource> derived_cext(const Resource& y) const {
    std::set<Resource> out;
    if (auto type = interpret(vocab::rdf_type())) {
      for (const auto& [x, c] : extension(*type)) {
        if (c == y) out.insert(x);
      }
    }
    return out;
  }

  std::set<Resource> cext(const Resource& y) const {
    if (class_extension) {
      auto it = class_extension->find(y);
      return it == class_extension->end() ? std::set<Resource>{} : it->second;
    }
    return derived_cext(y);
  }

  // Fills class_extension from EXT(I(rdf:type)) for every resource.
  void derive_cext() {
    std::map<Resource, std::set<Resource>> m;
    for (const auto& r : resources) m[r] = derived_cext(r);
    class_extension = std::move(m);
  }
};

using BlankAssignment = std::map<BlankNode, Resource>;

struct Satisfaction {
  bool satisfied = false;
  std::optional<BlankAssignment> assignment;  // α, when satisfied
};

namespace detail {

inline Resource denote_ground(const FiniteInterpretation& i, const Term& t) {
  if (auto* iri = std::get_if<Iri>(&t)) {
    if (auto r = i.interpret(*iri)) return *r;
    throw Error(ErrorKind::UncoveredVocabulary, "no interpretation for <" + iri->value() + ">");
  }
  const auto& l = std::get<Literal>(t);
  if (auto it = i.literal_values.find(l); it != i.literal_values.end()) return it->second;
  throw Error(ErrorKind::UncoveredVocabulary, "no value for literal " + to_display(t));
}

}  // namespace detail

// Searches for α from the blank nodes of g into R such that every triple
// holds under INT extended by α. Throws UncoveredVocabulary when an IRI or
// literal of g has no interpretation.
inline Satisfaction satisfies_simple(const FiniteInterpretation& i, const Graph& g) {
  struct Slot {
    std::optional<Resource> ground;
    std::optional<BlankNode> blank;
  };
  struct Row {
    Slot s;
    Resource p;
    Slot o;
  };
  auto slot = [&](const Term& t) -> Slot {
    if (auto* b = std::get_if<BlankNode>(&t)) return {std::nullopt, *b};
    return {detail::denote_ground(i, t), std::nullopt};
  };
  std::vector<Row> rows;
  for (const auto& t : g) {
    rows.push_back({slot(t.subject()), detail::denote_ground(i, Term(t.predicate())), slot(t.object())});
  }
  for (const auto& r : rows) {
    if (!i.properties.count(r.p)) return {};
  }

  const auto blank_set = blank_nodes(g);
  const std::vector<BlankNode> blanks(blank_set.begin(), blank_set.end());
  BlankAssignment alpha;
  auto value = [&](const Slot& s) -> const Resource* {
    if (s.ground) return &*s.ground;
    auto it = alpha.find(*s.blank);
    return it == alpha.end() ? nullptr : &it->second;
  };
  // A row is checked as soon as both of its ends have a value.
  auto consistent = [&]() {
    for (const auto& r : rows) {
      const Resource* s = value(r.s);
      const Resource* o = value(r.o);
      if (s && o && !i.extension(r.p).count({*s, *o})) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (!consistent()) return false;
    if (k == blanks.size()) return true;
    for (const auto& r : i.resources) {
      alpha[blanks[k]] = r;
      if (search(k + 1)) return true;
    }
    alpha.erase(blanks[k]);
    return false;
  };
  if (!search(0)) return {};
  return {true, alpha};
}

inline bool satisfies(const FiniteInterpretation& i, const Graph& g) {
  return satisfies_simple(i, g).satisfied;
}

struct ConditionAudit {
  std::vector<std::string> violated;
  std::vector<std::string> unchecked;  // vocabulary needed by the condition is uninterpreted
};

namespace detail {

// Values of the well-typed literals with datatype `d` that the structure
// knows about: the part of VS(I(d)) visible in R.
inline std::set<Resource> visible_value_space(const FiniteInterpretation& i, const Iri& d,
                                              const DatatypeSet& D) {
  std::set<Resource> out;
  for (const auto& [l, r] : i.literal_values) {
    if (l.datatype() != d) continue;
    if (std::holds_alternative<Value>(literal_value(l, D))) out.insert(r);
  }
  return out;
}

}  // namespace detail

// Audits the RDF conditions ("rdf-cond-1", "rdf-cond-2") and the RDFS
// conditions ("rdfs-cond-1" .. "rdfs-cond-16"). Conditions that quantify
// over all IRIs are restricted to the datatypes in D; condition 11 compares
// property extensions; condition 13 asks reflexivity of classes.
inline ConditionAudit audit_rdfs_conditions(const FiniteInterpretation& i, const DatatypeSet& D) {
  ConditionAudit audit;
  auto report = [&](const std::string& id, bool ok) {
    if (!ok) audit.violated.push_back(id);
  };
  auto skip = [&](const std::string& id) { audit.unchecked.push_back(id); };
  auto rdfs = [](const char* n) { return vocab::rdfs(n); };

  const auto a = i.interpret(vocab::rdf_type());
  const auto prop = i.interpret(vocab::rdf_property());
  const auto ls = i.interpret(vocab::rdf_lang_string());
  const auto cls = i.interpret(rdfs("Class"));
  const auto lit = i.interpret(rdfs("Literal"));
  const auto res = i.interpret(rdfs("Resource"));
  const auto dt = i.interpret(rdfs("Datatype"));
  const auto spo = i.interpret(rdfs("subPropertyOf"));
  const auto sco = i.interpret(rdfs("subClassOf"));
  const auto dom = i.interpret(rdfs("domain"));
  const auto rng = i.interpret(rdfs("range"));
  const auto cmp = i.interpret(rdfs("ContainerMembershipProperty"));
  const auto member = i.interpret(rdfs("member"));

  std::set<Resource> universe = i.resources;
  universe.insert(i.properties.begin(), i.properties.end());
  auto in_ext = [&](const std::optional<Resource>& p, const Resource& x, const Resource& y) {
    return p && i.extension(*p).count({x, y}) > 0;
  };
  auto subset = [](const auto& x, const auto& y) {
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
  };

  std::optional<std::set<Resource>> classes = i.classes;
  if (!classes && cls) classes = i.cext(*cls);

  if (a && prop) {
    bool ok = true;
    for (const auto& x : universe) ok = ok && (i.properties.count(x) > 0) == in_ext(a, x, *prop);
    report("rdf-cond-1", ok);
  } else {
    skip("rdf-cond-1");
  }

  if (a) {
    bool ok = D.contains(vocab::xsd_string()) && D.contains(vocab::rdf_lang_string());
    for (const auto& d : D.iris()) {
      const auto id = i.interpret(d);
      if (!id) continue;
      const auto vs = detail::visible_value_space(i, d, D);
      for (const auto& x : universe) ok = ok && in_ext(a, x, *id) == (vs.count(x) > 0);
    }
    report("rdf-cond-2", ok);
  } else {
    skip("rdf-cond-2");
  }

  if (a) {
    bool ok = true;
    if (i.class_extension) {
      for (const auto& y : universe) ok = ok && i.cext(y) == i.derived_cext(y);
    }
    report("rdfs-cond-1", ok);
  } else {
    skip("rdfs-cond-1");
  }

  if (cls && i.classes) {
    report("rdfs-cond-2", *i.classes == i.cext(*cls));
  } else if (cls) {
    report("rdfs-cond-2", true);
  } else {
    skip("rdfs-cond-2");
  }

  if (lit && i.literal_resources) {
    report("rdfs-cond-3", *i.literal_resources == i.cext(*lit));
  } else if (lit) {
    report("rdfs-cond-3", true);
  } else {
    skip("rdfs-cond-3");
  }

  if (res) {
    report("rdfs-cond-4", i.cext(*res) == i.resources);
  } else {
    skip("rdfs-cond-4");
  }

  if (ls) {
    std::set<Resource> tagged;
    for (const auto& [l, r] : i.literal_values) {
      if (l.has_language()) tagged.insert(r);
    }
    report("rdfs-cond-5", i.cext(*ls) == tagged);
  } else {
    skip("rdfs-cond-5");
  }

  {
    bool ok = true;
    for (const auto& d : D.iris()) {
      if (d == vocab::rdfs("Resource") || d == vocab::rdf_lang_string()) continue;
      if (auto id = i.interpret(d)) ok = ok && i.cext(*id) == detail::visible_value_space(i, d, D);
    }
    report("rdfs-cond-6", ok);
  }

  if (dt) {
    bool ok = true;
    const auto datatypes = i.cext(*dt);
    for (const auto& d : D.iris()) {
      if (auto id = i.interpret(d)) ok = ok && datatypes.count(*id) > 0;
    }
    report("rdfs-cond-7", ok);
  } else {
    skip("rdfs-cond-7");
  }

  auto typed_ends = [&](const std::optional<Resource>& rel, bool subject_end) {
    bool ok = true;
    for (const auto& [x, y] : i.extension(*rel)) {
      const auto members = i.cext(y);
      for (const auto& [u, v] : i.extension(x)) ok = ok && members.count(subject_end ? u : v) > 0;
    }
    return ok;
  };
  if (dom) {
    report("rdfs-cond-8", typed_ends(dom, true));
  } else {
    skip("rdfs-cond-8");
  }
  if (rng) {
    report("rdfs-cond-9", typed_ends(rng, false));
  } else {
    skip("rdfs-cond-9");
  }

  auto transitive = [&](const Resource& rel) {
    const auto& pairs = i.extension(rel);
    for (const auto& [x, y] : pairs) {
      for (const auto& [y2, z] : pairs) {
        if (y == y2 && !pairs.count({x, z})) return false;
      }
    }
    return true;
  };

  if (spo) {
    bool ok = transitive(*spo);
    for (const auto& x : i.properties) ok = ok && in_ext(spo, x, x);
    report("rdfs-cond-10", ok);
    bool ok11 = true;
    for (const auto& [x, y] : i.extension(*spo)) {
      ok11 = ok11 && i.properties.count(x) && i.properties.count(y) &&
             subset(i.extension(x), i.extension(y));
    }
    report("rdfs-cond-11", ok11);
  } else {
    skip("rdfs-cond-10");
    skip("rdfs-cond-11");
  }

  if (classes && res && sco) {
    bool ok = true;
    for (const auto& x : *classes) ok = ok && in_ext(sco, x, *res);
    report("rdfs-cond-12", ok);
  } else {
    skip("rdfs-cond-12");
  }

  if (sco) {
    bool ok = transitive(*sco);
    if (classes) {
      for (const auto& x : *classes) ok = ok && in_ext(sco, x, x);
    }
    report("rdfs-cond-13", ok);
    bool ok14 = true;
    for (const auto& [x, y] : i.extension(*sco)) {
      if (classes) ok14 = ok14 && classes->count(x) && classes->count(y);
      ok14 = ok14 && subset(i.cext(x), i.cext(y));
    }
    report("rdfs-cond-14", ok14);
  } else {
    skip("rdfs-cond-13");
    skip("rdfs-cond-14");
  }

  if (cmp && member && spo) {
    bool ok = true;
    for (const auto& x : i.cext(*cmp)) ok = ok && in_ext(spo, x, *member);
    report("rdfs-cond-15", ok);
  } else {
    skip("rdfs-cond-15");
  }

  if (dt && lit && sco) {
    bool ok = true;
    for (const auto& x : i.cext(*dt)) ok = ok && in_ext(sco, x, *lit);
    report("rdfs-cond-16", ok);
  } else {
    skip("rdfs-cond-16");
  }
  return audit;
}

// Ids of the violated conditions; empty when every checkable condition
// holds.
inline std::vector<std::string> check_rdfs_conditions(const FiniteInterpretation& i, const DatatypeSet& D) {
  return audit_rdfs_conditions(i, D).violated;
}

}  // namespace rdfkit
