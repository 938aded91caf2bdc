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
   @file reification.hpp
   Statements about statements in five encodings.

   - sr:  a node typed rdf:Statement with rdf:subject, rdf:predicate and
          rdf:object; annotations hang off the node. The base triple is not
          asserted.
   - nr:  the base triple is asserted. One relation node per statement; each
          annotation (q, v) adds `s q _:r` and `_:r q-value v`.
   - rdr: `<< s p o >> q v`, kept in StarDocument::annotated.
   - sp:  a singleton predicate `{p}#{k}` linked to p by
          rdf:singletonPropertyOf, the rewritten triple `s {p}#{k} o`, and
          the annotations on the singleton.
   - ng:  one named graph per statement holding the base triple, and the
          annotations on the graph name in the default graph.

   decode() only recognizes complete patterns; anything else is returned
   untouched as residual. For nr a subject must carry exactly one triple
   besides its annotation links, otherwise the base is ambiguous.
*/

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rdfkit/annotated.hpp"
#include "rdfkit/error.hpp"
#include "rdfkit/graph.hpp"

namespace rdfkit {

enum class ReificationScheme { Sr, Nr, Rdr, Sp, Ng };

inline constexpr ReificationScheme kAllSchemes[] = {ReificationScheme::Sr, ReificationScheme::Nr,
                                                    ReificationScheme::Rdr, ReificationScheme::Sp,
                                                    ReificationScheme::Ng};

inline std::string_view to_string(ReificationScheme s) {
  switch (s) {
    case ReificationScheme::Sr: return "sr";
    case ReificationScheme::Nr: return "nr";
    case ReificationScheme::Rdr: return "rdr";
    case ReificationScheme::Sp: return "sp";
    case ReificationScheme::Ng: return "ng";
  }
  return "?";
}

inline std::optional<ReificationScheme> parse_scheme(std::string_view s) {
  for (auto scheme : kAllSchemes) {
    if (to_string(scheme) == s) return scheme;
  }
  return std::nullopt;
}

namespace vocab {
inline const Iri& rdf_statement() { static const Iri v = rdf("Statement"); return v; }
inline const Iri& rdf_subject() { static const Iri v = rdf("subject"); return v; }
inline const Iri& rdf_predicate() { static const Iri v = rdf("predicate"); return v; }
inline const Iri& rdf_object() { static const Iri v = rdf("object"); return v; }
inline const Iri& rdf_singleton_property_of() { static const Iri v = rdf("singletonPropertyOf"); return v; }
}  // namespace vocab

// Source of fresh statement nodes, relation nodes and graph names. In blank
// mode it yields _:{prefix}0, _:{prefix}1, ...; in IRI mode {prefix}0, ...
// Identifiers already used by the input are skipped.
struct FreshIds {
  enum class Mode { Blank, Iri };
  Mode mode = Mode::Blank;
  std::string prefix = "r";
  std::size_t next = 0;

  static FreshIds blank(std::string prefix = "r") { return {Mode::Blank, std::move(prefix), 0}; }
  static FreshIds iri(std::string prefix) { return {Mode::Iri, std::move(prefix), 0}; }

  Term make(const std::set<Term>& avoid) {
    for (;;) {
      const std::string id = prefix + std::to_string(next++);
      Term t = mode == Mode::Blank ? Term(BlankNode(id)) : Term(Iri(id));
      if (!avoid.count(t)) return t;
    }
  }
};

struct EncodeOptions {
  FreshIds fresh = FreshIds::blank();
  // rdr output needs embedded-triple syntax downstream.
  bool allow_embedded_triples = true;
};

namespace detail {

inline Iri value_predicate(const Iri& q) { return Iri(q.value() + "-value"); }

inline std::set<Term> statement_terms(const std::vector<AnnotatedStatement>& stmts) {
  std::set<Term> out;
  for (const auto& st : stmts) {
    out.insert(st.base.subject());
    out.insert(Term(st.base.predicate()));
    out.insert(st.base.object());
    for (const auto& [q, v] : st.annotations) {
      out.insert(Term(q));
      out.insert(v);
    }
  }
  return out;
}

}  // namespace detail

// Encodes the statements. The result's prefixes are empty.
inline StarDocument encode(const std::vector<AnnotatedStatement>& stmts, ReificationScheme scheme,
                           EncodeOptions options = {}) {
  StarDocument doc;
  auto& g = doc.dataset.default_graph;
  std::set<Term> avoid = detail::statement_terms(stmts);
  auto fresh = [&]() {
    Term t = options.fresh.make(avoid);
    avoid.insert(t);
    return t;
  };
  std::map<Iri, std::size_t> singleton_counter;

  for (const auto& st : stmts) {
    const Term& s = st.base.subject();
    const Iri& p = st.base.predicate();
    const Term& o = st.base.object();
    switch (scheme) {
      case ReificationScheme::Sr: {
        const Term x = fresh();
        g.insert(Triple(x, vocab::rdf_type(), Term(vocab::rdf_statement())));
        g.insert(Triple(x, vocab::rdf_subject(), s));
        g.insert(Triple(x, vocab::rdf_predicate(), Term(p)));
        g.insert(Triple(x, vocab::rdf_object(), o));
        for (const auto& [q, v] : st.annotations) g.insert(Triple(x, q, v));
        break;
      }
      case ReificationScheme::Nr: {
        const Term r = fresh();
        g.insert(st.base);
        for (const auto& [q, v] : st.annotations) {
          g.insert(Triple(s, q, r));
          g.insert(Triple(r, detail::value_predicate(q), v));
        }
        break;
      }
      case ReificationScheme::Rdr: {
        if (!options.allow_embedded_triples) {
          throw Error(ErrorKind::EmbeddedSyntaxDisabled, "rdr output needs embedded triples");
        }
        doc.annotated.push_back(st);
        break;
      }
      case ReificationScheme::Sp: {
        std::size_t& k = singleton_counter[p];
        Iri singleton = p;
        do {
          singleton = Iri(p.value() + "#" + std::to_string(++k));
        } while (avoid.count(Term(singleton)));
        avoid.insert(Term(singleton));
        g.insert(Triple(Term(singleton), vocab::rdf_singleton_property_of(), Term(p)));
        g.insert(Triple(s, singleton, o));
        for (const auto& [q, v] : st.annotations) g.insert(Triple(Term(singleton), q, v));
        break;
      }
      case ReificationScheme::Ng: {
        const Term name = fresh();
        doc.dataset.named_graphs[*to_graph_name(name)].insert(st.base);
        for (const auto& [q, v] : st.annotations) g.insert(Triple(name, q, v));
        break;
      }
    }
  }
  return doc;
}

struct Decoded {
  std::vector<AnnotatedStatement> statements;
  Dataset residual;                             // triples not part of a recognized pattern
  std::vector<EmbeddedReference> references;    // rdr only: passed through
};

namespace detail {

inline std::vector<Annotation> annotations_of(const Graph& g, const Term& node, const std::set<Iri>& skip) {
  std::vector<Annotation> out;
  for (const auto& t : g) {
    if (t.subject() == node && !skip.count(t.predicate())) out.emplace_back(t.predicate(), t.object());
  }
  return out;
}

inline std::vector<const Triple*> with_subject(const Graph& g, const Term& s) {
  std::vector<const Triple*> out;
  for (const auto& t : g) {
    if (t.subject() == s) out.push_back(&t);
  }
  return out;
}

inline Decoded decode_sr(const StarDocument& doc) {
  Decoded out;
  const Graph& g = doc.dataset.default_graph;
  std::set<Triple> used;
  const std::set<Iri> scaffold{vocab::rdf_subject(), vocab::rdf_predicate(), vocab::rdf_object()};
  for (const auto& t : g) {
    if (t.predicate() != vocab::rdf_type() || t.object() != Term(vocab::rdf_statement())) continue;
    const Term& x = t.subject();
    std::map<Iri, std::vector<Term>> parts;
    std::vector<Annotation> annotations;
    std::vector<const Triple*> mine;
    for (const Triple* u : with_subject(g, x)) {
      mine.push_back(u);
      if (scaffold.count(u->predicate())) {
        parts[u->predicate()].push_back(u->object());
      } else if (!(u->predicate() == vocab::rdf_type() && u->object() == Term(vocab::rdf_statement()))) {
        annotations.emplace_back(u->predicate(), u->object());
      }
    }
    auto one = [&](const Iri& p) -> const Term* {
      auto it = parts.find(p);
      return it != parts.end() && it->second.size() == 1 ? &it->second[0] : nullptr;
    };
    const Term* s = one(vocab::rdf_subject());
    const Term* p = one(vocab::rdf_predicate());
    const Term* o = one(vocab::rdf_object());
    if (!s || !p || !o || is_literal(*s) || !is_iri(*p) || annotations.empty()) continue;
    out.statements.push_back({Triple(*s, std::get<Iri>(*p), *o), std::move(annotations)});
    for (const Triple* u : mine) used.insert(*u);
  }
  for (const auto& t : g) {
    if (!used.count(t)) out.residual.default_graph.insert(t);
  }
  out.residual.named_graphs = doc.dataset.named_graphs;
  return out;
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

inline Decoded decode_nr(const StarDocument& doc) {
  Decoded out;
  const Graph& g = doc.dataset.default_graph;
  std::set<Triple> used;
  // Candidate relation nodes: subjects of "-value" triples only.
  std::map<Term, std::vector<const Triple*>> values;
  std::set<Term> disqualified;
  for (const auto& t : g) {
    if (ends_with(t.predicate().value(), "-value")) {
      values[t.subject()].push_back(&t);
    } else {
      disqualified.insert(t.subject());
    }
  }
  for (const auto& [r, vals] : values) {
    if (disqualified.count(r)) continue;
    // Links: every triple with object r.
    std::vector<const Triple*> links;
    for (const auto& t : g) {
      if (t.object() == r) links.push_back(&t);
    }
    if (links.empty()) continue;
    const Term s = links.front()->subject();
    std::set<Iri> link_predicates;
    bool ok = true;
    for (const Triple* l : links) {
      ok = ok && l->subject() == s;
      link_predicates.insert(l->predicate());
    }
    std::set<Iri> value_bases;
    std::vector<Annotation> annotations;
    for (const Triple* v : vals) {
      const std::string& name = v->predicate().value();
      const Iri q(name.substr(0, name.size() - std::string_view("-value").size()));
      value_bases.insert(q);
      annotations.emplace_back(q, v->object());
    }
    if (!ok || value_bases != link_predicates) continue;
    // The base: the only triple of s that is not a link to a relation node.
    std::vector<const Triple*> candidates;
    for (const Triple* t : with_subject(g, s)) {
      if (values.count(t->object()) && !disqualified.count(t->object())) continue;
      candidates.push_back(t);
    }
    if (candidates.size() != 1) continue;
    out.statements.push_back({*candidates[0], std::move(annotations)});
    used.insert(*candidates[0]);
    for (const Triple* l : links) used.insert(*l);
    for (const Triple* v : vals) used.insert(*v);
  }
  for (const auto& t : g) {
    if (!used.count(t)) out.residual.default_graph.insert(t);
  }
  out.residual.named_graphs = doc.dataset.named_graphs;
  return out;
}

// Groups that share a base triple merge into one statement.
inline Decoded decode_rdr(const StarDocument& doc) {
  Decoded out;
  std::map<Triple, std::size_t> index;
  for (const auto& st : doc.annotated) {
    auto [it, inserted] = index.emplace(st.base, out.statements.size());
    if (inserted) {
      out.statements.push_back(st);
    } else {
      auto& target = out.statements[it->second].annotations;
      target.insert(target.end(), st.annotations.begin(), st.annotations.end());
    }
  }
  out.residual = doc.dataset;
  out.references = doc.references;
  return out;
}

inline Decoded decode_sp(const StarDocument& doc) {
  Decoded out;
  const Graph& g = doc.dataset.default_graph;
  std::set<Triple> used;
  for (const auto& link : g) {
    if (link.predicate() != vocab::rdf_singleton_property_of()) continue;
    const auto* sp = std::get_if<Iri>(&link.subject());
    const auto* p = std::get_if<Iri>(&link.object());
    if (!sp || !p) continue;
    std::vector<const Triple*> uses;
    for (const auto& t : g) {
      if (t.predicate() == *sp) uses.push_back(&t);
    }
    std::vector<Annotation> annotations;
    std::vector<const Triple*> annotation_triples;
    std::size_t links = 0;
    for (const Triple* t : with_subject(g, link.subject())) {
      if (t->predicate() == vocab::rdf_singleton_property_of()) {
        ++links;
      } else {
        annotations.emplace_back(t->predicate(), t->object());
        annotation_triples.push_back(t);
      }
    }
    if (uses.size() != 1 || links != 1 || annotations.empty()) continue;
    const Triple& rewritten = *uses[0];
    out.statements.push_back({Triple(rewritten.subject(), *p, rewritten.object()), std::move(annotations)});
    used.insert(link);
    used.insert(rewritten);
    for (const Triple* t : annotation_triples) used.insert(*t);
  }
  for (const auto& t : g) {
    if (!used.count(t)) out.residual.default_graph.insert(t);
  }
  out.residual.named_graphs = doc.dataset.named_graphs;
  return out;
}

inline Decoded decode_ng(const StarDocument& doc) {
  Decoded out;
  const Graph& g = doc.dataset.default_graph;
  std::set<Triple> used;
  for (const auto& [name, graph] : doc.dataset.named_graphs) {
    auto annotations = annotations_of(g, to_term(name), {});
    if (graph.size() != 1 || annotations.empty()) {
      out.residual.named_graphs.emplace(name, graph);
      continue;
    }
    out.statements.push_back({*graph.begin(), annotations});
    for (const auto& t : g) {
      if (t.subject() == to_term(name)) used.insert(t);
    }
  }
  for (const auto& t : g) {
    if (!used.count(t)) out.residual.default_graph.insert(t);
  }
  return out;
}

}  // namespace detail

inline Decoded decode(const StarDocument& doc, ReificationScheme scheme) {
  switch (scheme) {
    case ReificationScheme::Sr: return detail::decode_sr(doc);
    case ReificationScheme::Nr: return detail::decode_nr(doc);
    case ReificationScheme::Rdr: return detail::decode_rdr(doc);
    case ReificationScheme::Sp: return detail::decode_sp(doc);
    case ReificationScheme::Ng: return detail::decode_ng(doc);
  }
  return {};
}

inline Decoded decode(const Dataset& ds, ReificationScheme scheme) {
  StarDocument doc;
  doc.dataset = ds;
  return decode(doc, scheme);
}

// Scaffolding statements needed for n base statements: 4n, 2n, n, 2n, n.
inline std::size_t extra_statement_count(ReificationScheme scheme, std::size_t n) {
  switch (scheme) {
    case ReificationScheme::Sr: return 4 * n;
    case ReificationScheme::Nr: return 2 * n;
    case ReificationScheme::Rdr: return n;
    case ReificationScheme::Sp: return 2 * n;
    case ReificationScheme::Ng: return n;
  }
  return 0;
}

/**
   Statement accounting for an encoding.

   emitted counts default-graph triples, named-graph quads and
   embedded-subject statements. The first annotation of each statement is
   carried by the scheme itself under nr (link plus value) and rdr (the
   embedded-subject statement), so only later annotations count as payload
   there; under sr, sp and ng every annotation triple is payload. Only nr
   asserts the base triple.
*/
struct StatementCensus {
  std::size_t emitted = 0;
  std::size_t asserted_base = 0;
  std::size_t payload = 0;

  std::size_t scaffolding() const { return emitted - asserted_base - payload; }
};

inline StatementCensus census(const std::vector<AnnotatedStatement>& stmts, ReificationScheme scheme,
                              const StarDocument& encoded) {
  StatementCensus c;
  c.emitted = encoded.dataset.default_graph.size();
  for (const auto& [name, g] : encoded.dataset.named_graphs) c.emitted += g.size();
  for (const auto& st : encoded.annotated) c.emitted += st.annotations.size();
  std::size_t annotations = 0;
  for (const auto& st : stmts) annotations += st.annotations.size();
  const std::size_t n = stmts.size();
  switch (scheme) {
    case ReificationScheme::Nr:
      c.asserted_base = n;
      c.payload = 2 * (annotations - n);
      break;
    case ReificationScheme::Rdr:
      c.payload = annotations - n;
      break;
    default:
      c.payload = annotations;
      break;
  }
  return c;
}

}  // namespace rdfkit
