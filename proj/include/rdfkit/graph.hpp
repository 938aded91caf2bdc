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
   @file graph.hpp
   Triples, graphs and datasets.
*/

#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "rdfkit/term.hpp"

namespace rdfkit {

class Triple {
 public:
  // The subject must be an IRI or a blank node.
  Triple(Term subject, Iri predicate, Term object)
      : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object)) {
    if (is_literal(subject_)) {
      throw Error(ErrorKind::LiteralSubject, "literal in subject position: " + to_display(subject_));
    }
  }

  const Term& subject() const noexcept { return subject_; }
  const Iri& predicate() const noexcept { return predicate_; }
  const Term& object() const noexcept { return object_; }

  bool has_blank() const noexcept { return is_blank(subject_) || is_blank(object_); }

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;

 private:
  Term subject_;
  Iri predicate_;
  Term object_;
};

inline Triple make_triple(Term s, Term p, Term o) {
  if (is_literal(s)) {
    throw Error(ErrorKind::LiteralSubject, "literal in subject position: " + to_display(s));
  }
  auto* pred = std::get_if<Iri>(&p);
  if (!pred) {
    throw Error(ErrorKind::NonIriPredicate, "predicate is not an IRI: " + to_display(p));
  }
  return Triple(std::move(s), std::move(*pred), std::move(o));
}

// A finite set of triples. Iteration follows the canonical (subject,
// predicate, object) order.
class Graph {
 public:
  using container = std::set<Triple>;
  using const_iterator = container::const_iterator;

  Graph() = default;
  Graph(std::initializer_list<Triple> triples) : triples_(triples) {}
  template <typename It>
  Graph(It first, It last) : triples_(first, last) {}

  // Returns true when the triple was not already present.
  bool insert(Triple t) { return triples_.insert(std::move(t)).second; }
  bool erase(const Triple& t) { return triples_.erase(t) > 0; }
  bool contains(const Triple& t) const { return triples_.count(t) > 0; }

  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  const_iterator begin() const noexcept { return triples_.begin(); }
  const_iterator end() const noexcept { return triples_.end(); }

  bool includes(const Graph& other) const {
    return std::includes(triples_.begin(), triples_.end(), other.begin(), other.end());
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  container triples_;
};

// Set union. Blank nodes with equal labels are the same node in the result;
// see merge() for the variant that keeps the operands apart.
inline Graph graph_union(const Graph& a, const Graph& b) {
  Graph out = a;
  for (const auto& t : b) out.insert(t);
  return out;
}

inline bool is_ground(const Graph& g) {
  for (const auto& t : g) {
    if (t.has_blank()) return false;
  }
  return true;
}

inline std::set<BlankNode> blank_nodes(const Graph& g) {
  std::set<BlankNode> out;
  for (const auto& t : g) {
    if (auto* b = std::get_if<BlankNode>(&t.subject())) out.insert(*b);
    if (auto* b = std::get_if<BlankNode>(&t.object())) out.insert(*b);
  }
  return out;
}

// Every term occurring in any position, predicates included.
inline std::set<Term> terms(const Graph& g) {
  std::set<Term> out;
  for (const auto& t : g) {
    out.insert(t.subject());
    out.insert(Term(t.predicate()));
    out.insert(t.object());
  }
  return out;
}

inline std::set<Iri> iris(const Graph& g) {
  std::set<Iri> out;
  for (const auto& t : g) {
    if (auto* i = std::get_if<Iri>(&t.subject())) out.insert(*i);
    out.insert(t.predicate());
    if (auto* i = std::get_if<Iri>(&t.object())) out.insert(*i);
    if (auto* l = std::get_if<Literal>(&t.object())) out.insert(l->datatype());
  }
  return out;
}

using GraphName = std::variant<Iri, BlankNode>;

inline Term to_term(const GraphName& n) {
  return std::visit([](const auto& v) { return Term(v); }, n);
}

inline std::optional<GraphName> to_graph_name(const Term& t) {
  if (auto* i = std::get_if<Iri>(&t)) return GraphName(*i);
  if (auto* b = std::get_if<BlankNode>(&t)) return GraphName(*b);
  return std::nullopt;
}

// A default graph plus zero or more named graphs with distinct names.
struct Dataset {
  Graph default_graph;
  std::map<GraphName, Graph> named_graphs;

  // Adds to the named graph, creating it on first use.
  void add(const GraphName& name, Triple t) { named_graphs[name].insert(std::move(t)); }

  bool empty() const noexcept {
    return default_graph.empty() && named_graphs.empty();
  }

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

inline std::set<BlankNode> blank_nodes(const Dataset& ds) {
  auto out = blank_nodes(ds.default_graph);
  for (const auto& [name, g] : ds.named_graphs) {
    if (auto* b = std::get_if<BlankNode>(&name)) out.insert(*b);
    auto inner = blank_nodes(g);
    out.insert(inner.begin(), inner.end());
  }
  return out;
}

}  // namespace rdfkit
