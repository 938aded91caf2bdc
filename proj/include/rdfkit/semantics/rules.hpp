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
   @file rules.hpp
   Inference rules as data, and a semi-naive closure engine.

   A rule file holds one rule per line:

       id  body-item . body-item . ... => head-pattern . head-pattern .

   A body item is a triple pattern, `?v in D` (the IRI bound to ?v is a
   recognized datatype) or `any IRI ?v in D` (?v ranges over every
   recognized datatype). Pattern terms are `?var`, `<iri>`, a prefixed name
   over rdf:, rdfs: and xsd:, the keyword `a`, or `"?lex"^^?dt`, which
   matches any literal. In a head, `_:n` stands for the surrogate blank node
   of the literal matched by the body. `#` starts a comment.
*/

#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rdfkit/datatype.hpp"
#include "rdfkit/error.hpp"
#include "rdfkit/graph.hpp"
#include "rdfkit/prefix.hpp"
#include "rdfkit/syntax/ntriples.hpp"

namespace rdfkit {

struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
};

// "?lex"^^?dt
struct LiteralPattern {
  std::string lexical;
  std::string datatype;
  friend bool operator==(const LiteralPattern&, const LiteralPattern&) = default;
};

// _:n in a head: the surrogate of the literal matched by the body.
struct Surrogate {
  std::string label;
  friend bool operator==(const Surrogate&, const Surrogate&) = default;
};

using PatternTerm = std::variant<Term, Variable, LiteralPattern, Surrogate>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

struct Rule {
  std::string id;
  std::vector<TriplePattern> body;
  std::vector<std::string> in_datatypes;   // ?v in D
  std::vector<std::string> any_datatype;   // any IRI ?v in D
  std::vector<TriplePattern> head;
};

enum class Regime { Rdf, Rdfs };

struct RuleSet {
  std::vector<Rule> rules;
  Regime regime = Regime::Rdf;

  const Rule* find(std::string_view id) const {
    for (const auto& r : rules) {
      if (r.id == id) return &r;
    }
    return nullptr;
  }

  // The rules whose ids are listed, in this set's order.
  RuleSet only(const std::set<std::string>& ids) const {
    RuleSet out{{}, regime};
    for (const auto& r : rules) {
      if (ids.count(r.id)) out.rules.push_back(r);
    }
    return out;
  }
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline PatternTerm parse_pattern_term(const std::string& tok, const PrefixMap& pm, const std::string& rule) {
  auto fail = [&](const std::string& why) -> PatternTerm {
    throw Error(ErrorKind::InvalidRule, rule + ": " + why + " '" + tok + "'");
  };
  if (tok == "a") return Term(vocab::rdf_type());
  if (tok.size() > 1 && tok[0] == '?') return Variable{tok.substr(1)};
  if (tok.size() > 2 && tok.compare(0, 2, "_:") == 0) return Surrogate{tok.substr(2)};
  if (tok.size() > 2 && tok.front() == '<' && tok.back() == '>') {
    return Term(Iri(tok.substr(1, tok.size() - 2)));
  }
  if (tok.size() > 3 && tok[0] == '"' && tok[1] == '?') {
    const auto close = tok.find('"', 1);
    if (close == std::string::npos || tok.compare(close, 4, "\"^^?") != 0) return fail("bad literal pattern");
    return LiteralPattern{tok.substr(2, close - 2), tok.substr(close + 4)};
  }
  try {
    return Term(expand_prefixed_name(pm, tok));
  } catch (const Error&) {
    return fail("unknown term");
  }
}

inline PrefixMap rule_prefixes() { return common_prefixes(); }

}  // namespace detail

// Parses one rule line. Throws Error(InvalidRule).
inline Rule parse_rule(std::string_view line) {
  const auto toks = detail::split_ws(line);
  if (toks.empty()) throw Error(ErrorKind::InvalidRule, "empty rule");
  Rule rule;
  rule.id = toks[0];
  const PrefixMap pm = detail::rule_prefixes();
  std::vector<std::vector<std::string>> items{{}};
  bool in_head = false;
  std::vector<std::vector<std::string>> body_items;
  auto flush = [&]() {
    if (!items.back().empty()) items.push_back({});
  };
  for (std::size_t k = 1; k < toks.size(); ++k) {
    const auto& t = toks[k];
    if (t == ".") {
      flush();
    } else if (t == "=>") {
      if (in_head) throw Error(ErrorKind::InvalidRule, rule.id + ": second '=>'");
      flush();
      items.pop_back();
      body_items = std::move(items);
      items = {{}};
      in_head = true;
    } else {
      items.back().push_back(t);
    }
  }
  if (!in_head) throw Error(ErrorKind::InvalidRule, rule.id + ": missing '=>'");
  if (items.back().empty()) items.pop_back();

  bool has_literal_pattern = false;
  auto triple = [&](const std::vector<std::string>& it) {
    if (it.size() != 3) throw Error(ErrorKind::InvalidRule, rule.id + ": a pattern needs three terms");
    TriplePattern tp{detail::parse_pattern_term(it[0], pm, rule.id), detail::parse_pattern_term(it[1], pm, rule.id),
                     detail::parse_pattern_term(it[2], pm, rule.id)};
    return tp;
  };
  for (const auto& it : body_items) {
    if (it.size() == 3 && it[1] == "in" && it[2] == "D" && it[0][0] == '?') {
      rule.in_datatypes.push_back(it[0].substr(1));
    } else if (it.size() == 5 && it[0] == "any" && it[1] == "IRI" && it[3] == "in" && it[4] == "D" &&
               it[2][0] == '?') {
      rule.any_datatype.push_back(it[2].substr(1));
    } else {
      auto tp = triple(it);
      for (const auto* pt : {&tp.subject, &tp.predicate, &tp.object}) {
        if (std::holds_alternative<Surrogate>(*pt)) {
          throw Error(ErrorKind::InvalidRule, rule.id + ": blank node in body");
        }
        has_literal_pattern = has_literal_pattern || std::holds_alternative<LiteralPattern>(*pt);
      }
      rule.body.push_back(std::move(tp));
    }
  }
  std::set<std::string> bound;
  auto note = [&](const PatternTerm& pt) {
    if (auto* v = std::get_if<Variable>(&pt)) bound.insert(v->name);
    if (auto* l = std::get_if<LiteralPattern>(&pt)) {
      bound.insert(l->lexical);
      bound.insert(l->datatype);
    }
  };
  for (const auto& tp : rule.body) {
    note(tp.subject);
    note(tp.predicate);
    note(tp.object);
  }
  for (const auto& v : rule.any_datatype) bound.insert(v);
  for (const auto& v : rule.in_datatypes) {
    if (!bound.count(v)) throw Error(ErrorKind::InvalidRule, rule.id + ": unbound ?" + v);
  }
  for (const auto& it : items) {
    auto tp = triple(it);
    for (const auto* pt : {&tp.subject, &tp.predicate, &tp.object}) {
      if (auto* v = std::get_if<Variable>(pt); v && !bound.count(v->name)) {
        throw Error(ErrorKind::InvalidRule, rule.id + ": unbound ?" + v->name + " in head");
      }
      if (std::holds_alternative<Surrogate>(*pt) && !has_literal_pattern) {
        throw Error(ErrorKind::InvalidRule, rule.id + ": head blank node without a literal in the body");
      }
    }
    rule.head.push_back(std::move(tp));
  }
  if (rule.head.empty()) throw Error(ErrorKind::InvalidRule, rule.id + ": empty head");
  return rule;
}

inline std::vector<Rule> parse_rules(std::string_view text) {
  std::vector<Rule> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      // '#' inside an IRI is not a comment
      bool in_iri = false;
      std::size_t cut = std::string_view::npos;
      for (std::size_t k = 0; k < line.size(); ++k) {
        if (line[k] == '<') in_iri = true;
        if (line[k] == '>') in_iri = false;
        if (line[k] == '#' && !in_iri) {
          cut = k;
          break;
        }
      }
      if (cut != std::string_view::npos) line = line.substr(0, cut);
    }
    if (!detail::split_ws(line).empty()) out.push_back(parse_rule(line));
    start = end + 1;
  }
  return out;
}

inline constexpr std::string_view kRdfRules = R"(# RDF entailment rules
rdf1   ?s ?p "?l"^^?d . ?d in D            => ?s ?p _:n . _:n a ?d .
rdf2   ?s ?p ?o .                          => ?p a rdf:Property .
)";

inline constexpr std::string_view kRdfsRules = R"(# RDFS entailment rules
rdfs1  any IRI ?p in D                     => ?p a rdfs:Datatype .
rdfs2  ?p rdfs:domain ?x . ?y ?p ?z .      => ?y a ?x .
rdfs3  ?p rdfs:range ?x . ?y ?p ?z .       => ?z a ?x .
rdfs4a ?x ?p ?y .                          => ?x a rdfs:Resource .
rdfs4b ?x ?p ?y .                          => ?y a rdfs:Resource .
rdfs5  ?x rdfs:subPropertyOf ?y . ?y rdfs:subPropertyOf ?z . => ?x rdfs:subPropertyOf ?z .
rdfs6  ?x a rdf:Property .                 => ?x rdfs:subPropertyOf ?x .
rdfs7  ?p rdfs:subPropertyOf ?q . ?x ?p ?y . => ?x ?q ?y .
rdfs8  ?x a rdfs:Class .                   => ?x rdfs:subClassOf rdfs:Resource .
rdfs9  ?x rdfs:subClassOf ?y . ?z a ?x .   => ?z a ?y .
rdfs10 ?x a rdfs:Class .                   => ?x rdfs:subClassOf ?x .
rdfs11 ?x rdfs:subClassOf ?y . ?y rdfs:subClassOf ?z . => ?x rdfs:subClassOf ?z .
rdfs12 ?x a rdfs:ContainerMembershipProperty . => ?x rdfs:subPropertyOf rdfs:member .
rdfs13 ?x a rdfs:Datatype .                => ?x rdfs:subClassOf rdfs:Literal .
)";

inline RuleSet rdf_rules() { return {parse_rules(kRdfRules), Regime::Rdf}; }

inline RuleSet rdfs_rules() {
  RuleSet rs{parse_rules(kRdfRules), Regime::Rdfs};
  for (auto& r : parse_rules(kRdfsRules)) rs.rules.push_back(std::move(r));
  return rs;
}

namespace detail {

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

// One blank node per distinct literal of g whose datatype is recognized.
// Labels are derived from the literal itself, so closing a closure again
// reuses the same surrogates.
inline std::map<Literal, BlankNode> literal_surrogates(const Graph& g, const DatatypeSet& D) {
  std::map<Literal, BlankNode> out;
  for (const auto& t : g) {
    auto* l = std::get_if<Literal>(&t.object());
    if (!l || !D.contains(l->datatype()) || out.count(*l)) continue;
    std::string text;
    detail::write_term_nt(text, t.object());
    char buf[24];
    std::snprintf(buf, sizeof buf, "lit%016llx", static_cast<unsigned long long>(detail::fnv1a(text)));
    out.emplace(*l, BlankNode(buf));
  }
  return out;
}

namespace detail {

using Bindings = std::map<std::string, Term>;

class ClosureEngine {
 public:
  ClosureEngine(const Graph& g, const RuleSet& rs, const DatatypeSet& D)
      : rules_(rs), D_(D), surrogates_(literal_surrogates(g, D)), full_(g) {
    for (const auto& t : g) index(t);
  }

  Graph run() {
    Graph delta = full_;
    bool first = true;
    // Body-less rules fire in the first round even on an empty graph.
    while (first || !delta.empty()) {
      Graph fresh;
      for (const auto& rule : rules_.rules) {
        auto emit = [&](const Bindings& b) { instantiate(rule, b, fresh); };
        if (rule.body.empty()) {
          if (first) generate(rule, {}, 0, emit);
          continue;
        }
        // Semi-naive: at least one body pattern matches a triple new in the
        // previous round.
        for (std::size_t pivot = 0; pivot < rule.body.size(); ++pivot) {
          for (const auto& t : delta) {
            Bindings b;
            if (!match(rule.body[pivot], t, b)) continue;
            join(rule, pivot, 0, b, emit);
          }
        }
      }
      first = false;
      Graph added;
      for (const auto& t : fresh) {
        if (full_.insert(t)) {
          index(t);
          added.insert(t);
        }
      }
      delta = std::move(added);
    }
    return full_;
  }

 private:
  const RuleSet& rules_;
  const DatatypeSet& D_;
  std::map<Literal, BlankNode> surrogates_;
  Graph full_;
  std::map<Iri, std::vector<Triple>> by_predicate_;
  std::vector<Triple> all_;

  void index(const Triple& t) {
    by_predicate_[t.predicate()].push_back(t);
    all_.push_back(t);
  }

  static bool bind(const std::string& var, const Term& value, Bindings& b) {
    auto [it, inserted] = b.emplace(var, value);
    return inserted || it->second == value;
  }

  static bool match_term(const PatternTerm& p, const Term& v, Bindings& b) {
    if (auto* c = std::get_if<Term>(&p)) return *c == v;
    if (auto* var = std::get_if<Variable>(&p)) return bind(var->name, v, b);
    if (auto* lp = std::get_if<LiteralPattern>(&p)) {
      auto* l = std::get_if<Literal>(&v);
      return l && bind(lp->lexical, v, b) && bind(lp->datatype, Term(l->datatype()), b);
    }
    return false;
  }

  static bool match(const TriplePattern& p, const Triple& t, Bindings& b) {
    return match_term(p.subject, t.subject(), b) && match_term(p.predicate, Term(t.predicate()), b) &&
           match_term(p.object, t.object(), b);
  }

  const std::vector<Triple>& candidates(const TriplePattern& p, const Bindings& b) const {
    static const std::vector<Triple> none;
    std::optional<Term> pred;
    if (auto* c = std::get_if<Term>(&p.predicate)) pred = *c;
    if (auto* v = std::get_if<Variable>(&p.predicate)) {
      if (auto it = b.find(v->name); it != b.end()) pred = it->second;
    }
    if (!pred) return all_;
    auto* iri = std::get_if<Iri>(&*pred);
    if (!iri) return none;
    auto it = by_predicate_.find(*iri);
    return it == by_predicate_.end() ? none : it->second;
  }

  template <typename Emit>
  void join(const Rule& rule, std::size_t pivot, std::size_t k, const Bindings& b, Emit& emit) {
    if (k == rule.body.size()) {
      generate(rule, b, 0, emit);
      return;
    }
    if (k == pivot) {
      join(rule, pivot, k + 1, b, emit);
      return;
    }
    const auto& pattern = rule.body[k];
    for (const auto& t : candidates(pattern, b)) {
      Bindings next = b;
      if (match(pattern, t, next)) join(rule, pivot, k + 1, next, emit);
    }
  }

  // Expands `any IRI ?v in D` generators, then checks `?v in D`.
  template <typename Emit>
  void generate(const Rule& rule, const Bindings& b, std::size_t k, Emit& emit) {
    if (k < rule.any_datatype.size()) {
      for (const auto& d : D_.iris()) {
        Bindings next = b;
        if (bind(rule.any_datatype[k], Term(d), next)) generate(rule, next, k + 1, emit);
      }
      return;
    }
    for (const auto& v : rule.in_datatypes) {
      auto* iri = std::get_if<Iri>(&b.at(v));
      if (!iri || !D_.contains(*iri)) return;
    }
    emit(b);
  }

  std::optional<Term> resolve(const PatternTerm& p, const Rule& rule, const Bindings& b) const {
    if (auto* c = std::get_if<Term>(&p)) return *c;
    if (auto* v = std::get_if<Variable>(&p)) return b.at(v->name);
    if (auto* lp = std::get_if<LiteralPattern>(&p)) return b.at(lp->lexical);
    for (const auto& tp : rule.body) {
      for (const auto* pt : {&tp.subject, &tp.predicate, &tp.object}) {
        if (auto* lp = std::get_if<LiteralPattern>(pt)) {
          const auto& l = std::get<Literal>(b.at(lp->lexical));
          if (auto it = surrogates_.find(l); it != surrogates_.end()) return Term(it->second);
          return std::nullopt;
        }
      }
    }
    return std::nullopt;
  }

  void instantiate(const Rule& rule, const Bindings& b, Graph& out) const {
    for (const auto& h : rule.head) {
      auto s = resolve(h.subject, rule, b);
      auto p = resolve(h.predicate, rule, b);
      auto o = resolve(h.object, rule, b);
      if (!s || !p || !o) continue;
      // Instantiations outside the triple positions (a literal subject, a
      // non-IRI predicate) are dropped.
      if (is_literal(*s) || !is_iri(*p)) continue;
      out.insert(Triple(*s, std::get<Iri>(*p), *o));
    }
  }
};

}  // namespace detail

// Least fixpoint of g under the rules. Surrogate blank nodes for rdf1 come
// from literal_surrogates(g, D).
inline Graph apply_rules(const Graph& g, const RuleSet& rs, const DatatypeSet& D) {
  return detail::ClosureEngine(g, rs, D).run();
}

}  // namespace rdfkit
