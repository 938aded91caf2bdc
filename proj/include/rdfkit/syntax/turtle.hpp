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
   @file turtle.hpp
   Turtle and TriG.

   Supported: @prefix/@base and PREFIX/BASE directives (the keyword forms are
   case-insensitive and may be followed by an optional '.'), IRIs, prefixed
   names, 'a', ';' and ',' lists, [ ] blank nodes, ( ) collections, quoted
   literals in all four quoting styles with language tags or datatypes, and
   TriG graph blocks. Bare numeric and boolean literals are rejected unless
   ParseOptions::strict is false. Embedded triples << s p o >> are accepted
   in subject or object position of default-graph statements when
   ParseOptions::allow_embedded_triples is set.

   Parser-allocated blank nodes are labelled b0, b1, ... per document; a
   document label that collides with an allocated one is renamed.
*/

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rdfkit/algebra/well_behaved.hpp"
#include "rdfkit/annotated.hpp"
#include "rdfkit/graph.hpp"
#include "rdfkit/prefix.hpp"
#include "rdfkit/syntax/cursor.hpp"
#include "rdfkit/syntax/iri_resolve.hpp"
#include "rdfkit/syntax/ntriples.hpp"

namespace rdfkit {

struct ParseOptions {
  std::optional<Iri> base;
  bool allow_embedded_triples = false;
  // When false, bare numbers and true/false are read as typed literals.
  bool strict = true;
};

namespace detail {

inline bool is_name_char(char c) noexcept {
  return is_alnum(c) || c == '_' || c == '-' || static_cast<unsigned char>(c) >= 0x80;
}

inline bool iequals(std::string_view a, std::string_view b) noexcept {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    char x = a[i], y = b[i];
    if (x >= 'A' && x <= 'Z') x = static_cast<char>(x - 'A' + 'a');
    if (y >= 'A' && y <= 'Z') y = static_cast<char>(y - 'A' + 'a');
    if (x != y) return false;
  }
  return true;
}

class TurtleReader {
 public:
  TurtleReader(std::string_view text, const ParseOptions& opts, bool trig)
      : in_(text), opts_(opts), trig_(trig), base_(opts.base) {
    target_ = &doc_.dataset.default_graph;
  }

  StarDocument run() {
    for (;;) {
      in_.skip_space();
      if (in_.at_end()) break;
      statement();
    }
    doc_.prefixes = pm_;
    doc_.prefixes.set_base(base_);
    return std::move(doc_);
  }

 private:
  // A parsed node: a term, or an embedded triple.
  struct Node {
    std::optional<Term> term;
    std::optional<Triple> embedded;
    std::size_t offset = 0;
  };

  Cursor in_;
  ParseOptions opts_;
  bool trig_;
  std::optional<Iri> base_;
  PrefixMap pm_;
  StarDocument doc_;
  Graph* target_ = nullptr;
  bool in_block_ = false;
  std::map<std::string, BlankNode> labels_;
  std::set<std::string> used_labels_;
  std::size_t counter_ = 0;
  AnnotatedStatement* open_annotation_ = nullptr;

  [[noreturn]] void fail(ParseErrorKind k, const std::string& d) const { in_.fail(k, d); }
  [[noreturn]] void fail_at(std::size_t at, ParseErrorKind k, const std::string& d) const {
    in_.fail_at(at, k, d);
  }

  BlankNode fresh() {
    std::string label;
    do {
      label = "b" + std::to_string(counter_++);
    } while (used_labels_.count(label));
    used_labels_.insert(label);
    return BlankNode(label);
  }

  BlankNode labelled(const std::string& label) {
    if (auto it = labels_.find(label); it != labels_.end()) return it->second;
    BlankNode b = used_labels_.count(label) ? fresh() : BlankNode(label);
    used_labels_.insert(label);
    labels_.emplace(label, b);
    return b;
  }

  std::string peek_word() const {
    std::size_t i = 0;
    std::string w;
    while (is_alpha(in_.peek(i))) w.push_back(in_.peek(i++));
    return w;
  }

  // Word keyword followed by something that cannot continue a name.
  bool at_keyword(std::string_view kw, bool case_insensitive) const {
    const std::string w = peek_word();
    const bool match = case_insensitive ? iequals(w, kw) : w == kw;
    if (!match) return false;
    const char next = in_.peek(w.size());
    return !is_name_char(next) && next != ':' && next != '.';
  }

  Iri to_iri(std::string raw, std::size_t at) {
    if (has_scheme(raw)) return Iri(std::move(raw));
    if (!base_) fail_at(at, ParseErrorKind::RelativeIri, "relative IRI '" + raw + "' with no base");
    return Iri(resolve_iri(*base_, raw));
  }

  Iri iriref() {
    const std::size_t at = in_.pos();
    return to_iri(in_.read_iriref(), at);
  }

  // PN_PREFIX? ':' PN_LOCAL?
  Iri prefixed_name() {
    const std::size_t start = in_.pos();
    std::string prefix;
    while (is_alnum(in_.peek()) || in_.peek() == '_' || in_.peek() == '-' ||
           (in_.peek() == '.' && (is_name_char(in_.peek(1)) || in_.peek(1) == '.'))) {
      prefix.push_back(in_.get());
    }
    if (in_.peek() != ':') fail(ParseErrorKind::UnexpectedCharacter, "expected ':' in prefixed name");
    in_.advance();
    std::string local;
    for (;;) {
      const char c = in_.peek();
      if (is_name_char(c) || c == ':') {
        local.push_back(in_.get());
      } else if (c == '.' && (is_name_char(in_.peek(1)) || in_.peek(1) == ':' || in_.peek(1) == '%' ||
                              in_.peek(1) == '\\' || in_.peek(1) == '.')) {
        local.push_back(in_.get());
      } else if (c == '%') {
        local.push_back(in_.get());
        for (int i = 0; i < 2; ++i) {
          const char h = in_.peek();
          if (!(is_digit(h) || (h >= 'a' && h <= 'f') || (h >= 'A' && h <= 'F'))) {
            fail(ParseErrorKind::BadEscape, "bad percent escape in local name");
          }
          local.push_back(in_.get());
        }
      } else if (c == '\\') {
        in_.advance();
        const char e = in_.peek();
        if (std::string_view("_~.-!$&'()*+,;=/?#@%").find(e) == std::string_view::npos || e == '\0') {
          fail(ParseErrorKind::BadEscape, "bad escape in local name");
        }
        local.push_back(in_.get());
      } else {
        break;
      }
    }
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      in_.seek(in_.pos() - 1);
    }
    const Iri* ns = pm_.find(prefix);
    if (!ns) fail_at(start, ParseErrorKind::UnknownPrefix, "unbound prefix '" + prefix + "'");
    return Iri(ns->value() + local);
  }

  Iri iri() {
    if (in_.peek() == '<') return iriref();
    return prefixed_name();
  }

  void end_directive(bool sparql_style) {
    in_.skip_space();
    if (in_.peek() == '.') {
      in_.advance();
    } else if (!sparql_style) {
      fail(ParseErrorKind::MissingDot, "directive not terminated by '.'");
    }
  }

  void prefix_directive(bool sparql_style) {
    in_.skip_space();
    std::string prefix;
    while (is_alnum(in_.peek()) || in_.peek() == '_' || in_.peek() == '-' || in_.peek() == '.') {
      prefix.push_back(in_.get());
    }
    if (!is_prefix_label(prefix)) fail(ParseErrorKind::UnexpectedCharacter, "bad prefix label");
    in_.expect(':');
    in_.skip_space();
    if (in_.peek() != '<') fail(ParseErrorKind::UnexpectedCharacter, "expected namespace IRI");
    pm_.bind(prefix, iriref());
    end_directive(sparql_style);
  }

  void base_directive(bool sparql_style) {
    in_.skip_space();
    if (in_.peek() != '<') fail(ParseErrorKind::UnexpectedCharacter, "expected base IRI");
    base_ = iriref();
    end_directive(sparql_style);
  }

  void statement() {
    if (in_.peek() == '@') {
      if (in_block_) fail(ParseErrorKind::UnexpectedCharacter, "directives are not allowed inside graph blocks");
      in_.advance();
      if (in_.starts_with("prefix")) {
        in_.advance(6);
        prefix_directive(false);
      } else if (in_.starts_with("base")) {
        in_.advance(4);
        base_directive(false);
      } else {
        fail(ParseErrorKind::UnexpectedCharacter, "unknown directive");
      }
      return;
    }
    if (!in_block_ && at_keyword("prefix", true)) {
      in_.advance(6);
      prefix_directive(true);
      return;
    }
    if (!in_block_ && at_keyword("base", true)) {
      in_.advance(4);
      base_directive(true);
      return;
    }
    if (trig_ && at_keyword("graph", true)) {
      if (in_block_) fail(ParseErrorKind::NestedGraph, "graph blocks cannot be nested");
      in_.advance(5);
      in_.skip_space();
      const Node label = subject_node(true);
      in_.skip_space();
      if (in_.peek() != '{') fail(ParseErrorKind::UnexpectedCharacter, "expected '{' after graph label");
      graph_block(label);
      return;
    }
    if (in_.peek() == '{') {
      if (!trig_) fail(ParseErrorKind::UnsupportedSyntax, "graph blocks require TriG");
      if (in_block_) fail(ParseErrorKind::NestedGraph, "graph blocks cannot be nested");
      graph_block(std::nullopt);
      return;
    }
    const bool property_list_subject = in_.peek() == '[' && !is_empty_brackets();
    const Node subject = subject_node(false);
    in_.skip_space();
    if (in_.peek() == '{') {
      if (!trig_) fail(ParseErrorKind::UnsupportedSyntax, "graph blocks require TriG");
      if (in_block_) fail(ParseErrorKind::NestedGraph, "graph blocks cannot be nested");
      graph_block(subject);
      return;
    }
    if (subject.embedded) {
      doc_.annotated.push_back(AnnotatedStatement{*subject.embedded, {}});
      open_annotation_ = &doc_.annotated.back();
    }
    if (!(property_list_subject && (in_.peek() == '.' || in_.peek() == '}'))) {
      predicate_object_list(subject);
    }
    open_annotation_ = nullptr;
    in_.skip_space();
    if (in_block_ && in_.peek() == '}') return;
    if (in_.at_end()) {
      if (in_block_) fail(ParseErrorKind::UnexpectedEnd, "unterminated graph block");
      fail(ParseErrorKind::MissingDot, "statement not terminated by '.'");
    }
    if (in_.peek() != '.') fail(ParseErrorKind::MissingDot, "expected '.'");
    in_.advance();
  }

  bool is_empty_brackets() const {
    std::size_t i = 1;
    while (in_.peek(i) == ' ' || in_.peek(i) == '\t' || in_.peek(i) == '\n' || in_.peek(i) == '\r') ++i;
    return in_.peek(i) == ']';
  }

  void graph_block(const std::optional<Node>& label) {
    Graph* saved = target_;
    if (label) {
      if (!label->term) fail_at(label->offset, ParseErrorKind::UnexpectedCharacter, "bad graph label");
      const auto name = to_graph_name(*label->term);
      if (!name) fail_at(label->offset, ParseErrorKind::LiteralGraphLabel, "literal as graph label");
      target_ = &doc_.dataset.named_graphs[*name];
    }
    in_.expect('{');
    in_block_ = true;
    for (;;) {
      in_.skip_space();
      if (in_.at_end()) fail(ParseErrorKind::UnexpectedEnd, "unterminated graph block");
      if (in_.peek() == '}') break;
      if (in_.peek() == '.') {
        in_.advance();
        continue;
      }
      statement();
    }
    in_.advance();
    in_block_ = false;
    target_ = saved;
  }

  // Subject position, or a TriG graph label when `label_only`.
  Node subject_node(bool label_only) {
    Node n;
    n.offset = in_.pos();
    const char c = in_.peek();
    if (c == '<' && in_.peek(1) == '<') {
      if (label_only) fail(ParseErrorKind::UnexpectedCharacter, "embedded triple as graph label");
      n.embedded = embedded_triple();
      return n;
    }
    if (c == '<') {
      n.term = iriref();
    } else if (c == '_' && in_.peek(1) == ':') {
      in_.advance(2);
      n.term = labelled(in_.read_blank_label());
    } else if (c == '[') {
      if (label_only && !is_empty_brackets()) fail(ParseErrorKind::UnexpectedCharacter, "expected graph label");
      n.term = blank_property_list();
    } else if (c == '(') {
      if (label_only) fail(ParseErrorKind::UnexpectedCharacter, "collection as graph label");
      n.term = collection();
    } else if (c == '"' || c == '\'') {
      literal();
      in_.skip_space();
      if (trig_ && in_.peek() == '{') fail_at(n.offset, ParseErrorKind::LiteralGraphLabel, "literal as graph label");
      fail_at(n.offset, ParseErrorKind::LiteralSubject, "literal in subject position");
    } else if (in_.at_end()) {
      fail(ParseErrorKind::UnexpectedEnd, "expected a subject");
    } else if (is_alpha(c) || c == ':' || c == '_') {
      n.term = prefixed_name();
    } else {
      fail(ParseErrorKind::UnexpectedCharacter, "expected a subject");
    }
    return n;
  }

  Triple embedded_triple() {
    const std::size_t start = in_.pos();
    if (!opts_.allow_embedded_triples) {
      fail(ParseErrorKind::EmbeddedTriple, "embedded triples are disabled");
    }
    if (in_block_) fail(ParseErrorKind::EmbeddedTriple, "embedded triples are only supported in the default graph");
    in_.advance(2);
    in_.skip_space();
    const std::size_t s_at = in_.pos();
    Term s = plain_term();
    if (is_literal(s)) fail_at(s_at, ParseErrorKind::LiteralSubject, "literal subject in embedded triple");
    in_.skip_space();
    Iri p = verb();
    in_.skip_space();
    Term o = plain_term();
    in_.skip_space();
    if (!(in_.peek() == '>' && in_.peek(1) == '>')) fail(ParseErrorKind::UnexpectedCharacter, "expected '>>'");
    in_.advance(2);
    (void)start;
    return Triple(std::move(s), std::move(p), std::move(o));
  }

  // IRI, labelled blank node, [] or literal; used inside << >>.
  Term plain_term() {
    const char c = in_.peek();
    if (c == '<' && in_.peek(1) == '<') fail(ParseErrorKind::EmbeddedTriple, "nested embedded triples are not supported");
    if (c == '_' && in_.peek(1) == ':') {
      in_.advance(2);
      return labelled(in_.read_blank_label());
    }
    if (c == '[' && is_empty_brackets()) return blank_property_list();
    if (c == '"' || c == '\'') return literal();
    if (c == '<' || is_alpha(c) || c == ':') return iri();
    fail(ParseErrorKind::UnexpectedCharacter, "expected an IRI, blank node or literal");
  }

  Iri verb() {
    if (in_.peek() == 'a' && !is_name_char(in_.peek(1)) && in_.peek(1) != ':' && in_.peek(1) != '.') {
      in_.advance();
      return vocab::rdf_type();
    }
    const char c = in_.peek();
    if (c == '<' || is_alpha(c) || c == ':' || c == '_') {
      if (c == '_' && in_.peek(1) == ':') fail(ParseErrorKind::UnexpectedCharacter, "blank node as predicate");
      return iri();
    }
    if (in_.at_end()) fail(ParseErrorKind::UnexpectedEnd, "expected a predicate");
    if (c == '"' || c == '\'') fail(ParseErrorKind::UnexpectedCharacter, "literal as predicate");
    fail(ParseErrorKind::UnexpectedCharacter, "expected a predicate");
  }

  void emit(const Node& subject, const Iri& predicate, const Node& object) {
    if (subject.embedded && object.embedded) {
      fail_at(object.offset, ParseErrorKind::UnsupportedSyntax, "embedded triples on both sides");
    }
    if (subject.embedded) {
      open_annotation_->annotations.emplace_back(predicate, *object.term);
    } else if (object.embedded) {
      doc_.references.push_back(EmbeddedReference{*subject.term, predicate, *object.embedded});
    } else {
      target_->insert(Triple(*subject.term, predicate, *object.term));
    }
  }

  void predicate_object_list(const Node& subject) {
    for (;;) {
      in_.skip_space();
      const Iri p = verb();
      for (;;) {
        in_.skip_space();
        const Node o = object_node();
        emit(subject, p, o);
        in_.skip_space();
        if (in_.peek() != ',') break;
        in_.advance();
      }
      in_.skip_space();
      if (in_.peek() != ';') return;
      while (in_.peek() == ';') {
        in_.advance();
        in_.skip_space();
      }
      const char c = in_.peek();
      if (c == '.' || c == ']' || c == '}' || in_.at_end()) return;
    }
  }

  Node object_node() {
    Node n;
    n.offset = in_.pos();
    const char c = in_.peek();
    if (c == '<' && in_.peek(1) == '<') {
      n.embedded = embedded_triple();
    } else if (c == '<') {
      n.term = iriref();
    } else if (c == '_' && in_.peek(1) == ':') {
      in_.advance(2);
      n.term = labelled(in_.read_blank_label());
    } else if (c == '[') {
      n.term = blank_property_list();
    } else if (c == '(') {
      n.term = collection();
    } else if (c == '"' || c == '\'') {
      n.term = literal();
    } else if (is_digit(c) || c == '+' || c == '-' || (c == '.' && is_digit(in_.peek(1)))) {
      n.term = numeric_literal();
    } else if (at_keyword("true", false) || at_keyword("false", false)) {
      if (opts_.strict) fail(ParseErrorKind::UnsupportedSyntax, "bare boolean literals are not supported");
      const bool v = in_.peek() == 't';
      in_.advance(v ? 4 : 5);
      n.term = Literal(v ? "true" : "false", vocab::xsd("boolean"));
    } else if (is_alpha(c) || c == ':') {
      n.term = prefixed_name();
    } else if (in_.at_end()) {
      fail(ParseErrorKind::UnexpectedEnd, "expected an object");
    } else {
      fail(ParseErrorKind::UnexpectedCharacter, "expected an object");
    }
    return n;
  }

  Term numeric_literal() {
    if (opts_.strict) fail(ParseErrorKind::UnsupportedSyntax, "bare numeric literals are not supported");
    const std::size_t start = in_.pos();
    if (in_.peek() == '+' || in_.peek() == '-') in_.advance();
    bool digits = false;
    while (is_digit(in_.peek())) {
      in_.advance();
      digits = true;
    }
    std::string_view type = "integer";
    if (in_.peek() == '.' && is_digit(in_.peek(1))) {
      in_.advance();
      while (is_digit(in_.peek())) in_.advance();
      type = "decimal";
      digits = true;
    }
    if (digits && (in_.peek() == 'e' || in_.peek() == 'E')) {
      in_.advance();
      if (in_.peek() == '+' || in_.peek() == '-') in_.advance();
      if (!is_digit(in_.peek())) fail(ParseErrorKind::UnexpectedCharacter, "bad exponent");
      while (is_digit(in_.peek())) in_.advance();
      type = "double";
    }
    if (!digits) fail_at(start, ParseErrorKind::UnexpectedCharacter, "bad numeric literal");
    return Literal(std::string(in_.text().substr(start, in_.pos() - start)), vocab::xsd(type));
  }

  Literal literal() {
    std::string lexical = in_.read_string(true, true);
    if (in_.peek() == '@') {
      in_.advance();
      return Literal(std::move(lexical), std::nullopt, in_.read_language_tag());
    }
    if (in_.peek() == '^' && in_.peek(1) == '^') {
      in_.advance(2);
      const std::size_t at = in_.pos();
      Iri dt = iri();
      try {
        return Literal(std::move(lexical), std::move(dt));
      } catch (const Error& e) {
        fail_at(at, ParseErrorKind::BadLanguageTag, e.what());
      }
    }
    return Literal(std::move(lexical));
  }

  BlankNode blank_property_list() {
    in_.expect('[');
    const BlankNode b = fresh();
    in_.skip_space();
    if (in_.peek() == ']') {
      in_.advance();
      return b;
    }
    Node subject;
    subject.term = b;
    AnnotatedStatement* saved = open_annotation_;
    open_annotation_ = nullptr;
    predicate_object_list(subject);
    open_annotation_ = saved;
    in_.skip_space();
    in_.expect(']');
    return b;
  }

  Term collection() {
    in_.expect('(');
    std::vector<Node> items;
    for (;;) {
      in_.skip_space();
      if (in_.at_end()) fail(ParseErrorKind::UnexpectedEnd, "unterminated collection");
      if (in_.peek() == ')') break;
      Node item = object_node();
      if (item.embedded) fail_at(item.offset, ParseErrorKind::EmbeddedTriple, "embedded triple in a collection");
      items.push_back(std::move(item));
    }
    in_.advance();
    if (items.empty()) return vocab::rdf_nil();
    std::vector<BlankNode> cells;
    for (std::size_t i = 0; i < items.size(); ++i) cells.push_back(fresh());
    for (std::size_t i = 0; i < items.size(); ++i) {
      target_->insert(Triple(cells[i], vocab::rdf_first(), *items[i].term));
      const Term rest = i + 1 < cells.size() ? Term(cells[i + 1]) : Term(vocab::rdf_nil());
      target_->insert(Triple(cells[i], vocab::rdf_rest(), rest));
    }
    return cells.front();
  }
};

}  // namespace detail

inline StarDocument parse_turtle_document(std::string_view text, const ParseOptions& opts = {}) {
  return detail::TurtleReader(text, opts, false).run();
}

// Plain triples only. Statements about embedded triples (when enabled) are
// available through parse_turtle_document.
inline Graph parse_turtle(std::string_view text, const ParseOptions& opts = {}) {
  return parse_turtle_document(text, opts).dataset.default_graph;
}

inline StarDocument parse_trig_document(std::string_view text, const ParseOptions& opts = {}) {
  return detail::TurtleReader(text, opts, true).run();
}

inline Dataset parse_trig(std::string_view text, const ParseOptions& opts = {}) {
  return parse_trig_document(text, opts).dataset;
}

namespace detail {

inline bool is_safe_local(std::string_view s) noexcept {
  if (s.empty()) return true;
  if (!(is_alnum(s[0]) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(is_alnum(c) || c == '_' || c == '-')) return false;
  }
  return true;
}

class TurtleWriter {
 public:
  TurtleWriter(const PrefixMap& pm, std::string& out) : pm_(pm), out_(out) {}

  void prefixes() {
    for (const auto& [prefix, ns] : pm_.bindings()) {
      out_ += "@prefix " + prefix + ": ";
      write_iri(out_, ns.value());
      out_ += " .\n";
    }
  }

  void iri(const Iri& i) {
    const std::string& v = i.value();
    const std::string* best_prefix = nullptr;
    std::size_t best_len = 0;
    for (const auto& [prefix, ns] : pm_.bindings()) {
      const std::string& n = ns.value();
      if (n.size() > best_len && v.size() >= n.size() && v.compare(0, n.size(), n) == 0 &&
          is_safe_local(std::string_view(v).substr(n.size()))) {
        best_prefix = &prefix;
        best_len = n.size();
      }
    }
    if (best_prefix) {
      out_ += *best_prefix + ":" + v.substr(best_len);
    } else {
      write_iri(out_, v);
    }
  }

  void predicate(const Iri& p) {
    if (p == vocab::rdf_type()) {
      out_ += "a";
    } else {
      iri(p);
    }
  }

  // Writes `g`, inlining the blank nodes in `nestable` as [ ] blocks. A
  // nestable blank node must be the object of at most one triple and must
  // not lie on a blank cycle.
  void graph(const Graph& g, const std::set<BlankNode>& nestable, const std::string& indent) {
    nestable_ = &nestable;
    by_subject_.clear();
    for (const auto& t : g) {
      if (auto* b = std::get_if<BlankNode>(&t.subject()); b && nestable.count(*b)) {
        by_subject_[*b].push_back(&t);
      }
    }
    const auto object_counts = blank_object_counts(g);
    auto it = g.begin();
    while (it != g.end()) {
      const Term& subject = it->subject();
      auto end = it;
      while (end != g.end() && end->subject() == subject) ++end;
      const auto* b = std::get_if<BlankNode>(&subject);
      const bool nested = b && nestable.count(*b);
      if (nested) {
        auto c = object_counts.find(*b);
        if (c == object_counts.end() || c->second == 0) {
          out_ += indent;
          write_nested(*b, indent);
          out_ += " .\n";
        }
      } else {
        out_ += indent;
        term(subject, indent);
        out_ += " ";
        std::vector<const Triple*> triples;
        for (auto i = it; i != end; ++i) triples.push_back(&*i);
        predicate_objects(triples, indent + "    ", " ;\n" + indent + "    ");
        out_ += " .\n";
      }
      it = end;
    }
    nestable_ = nullptr;
  }

  void term(const Term& t, const std::string& indent) {
    if (auto* i = std::get_if<Iri>(&t)) {
      iri(*i);
    } else if (auto* b = std::get_if<BlankNode>(&t)) {
      if (nestable_ && nestable_->count(*b)) {
        write_nested(*b, indent);
      } else {
        out_ += "_:" + b->label();
      }
    } else {
      write_literal(out_, std::get<Literal>(t), [this](std::string&, const Iri& dt) { iri(dt); });
    }
  }

  // A term without any nesting; used inside << >>.
  void flat_term(const Term& t) {
    const std::set<BlankNode>* saved = nestable_;
    nestable_ = nullptr;
    term(t, "");
    nestable_ = saved;
  }

 private:
  const PrefixMap& pm_;
  std::string& out_;
  const std::set<BlankNode>* nestable_ = nullptr;
  std::map<BlankNode, std::vector<const Triple*>> by_subject_;

  void predicate_objects(const std::vector<const Triple*>& triples, const std::string& indent,
                         const std::string& separator) {
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const Iri& p = triples[i]->predicate();
      if (i > 0) {
        if (triples[i - 1]->predicate() == p) {
          out_ += ", ";
        } else {
          out_ += separator;
          predicate(p);
          out_ += " ";
        }
      } else {
        predicate(p);
        out_ += " ";
      }
      term(triples[i]->object(), indent);
    }
  }

  void write_nested(const BlankNode& b, const std::string& indent) {
    auto it = by_subject_.find(b);
    if (it == by_subject_.end()) {
      out_ += "[]";
      return;
    }
    out_ += "[ ";
    predicate_objects(it->second, indent, " ; ");
    out_ += " ]";
  }
};

inline std::set<BlankNode> all_if_well_behaved(const Graph& g) {
  return is_well_behaved(g) ? blank_nodes(g) : std::set<BlankNode>{};
}

}  // namespace detail

// Prefix directives, then triples grouped by subject. Blank nodes are written
// as nested [ ] blocks exactly when the graph is well-behaved; otherwise every
// blank node keeps an explicit _: label.
inline std::string serialize_turtle(const Graph& g, const PrefixMap& pm = {}) {
  std::string out;
  detail::TurtleWriter w(pm, out);
  w.prefixes();
  if (!pm.empty() && !g.empty()) out += "\n";
  w.graph(g, detail::all_if_well_behaved(g), "");
  return out;
}

// Turtle with embedded triples. Blank nodes mentioned inside << >> force
// labelled output for the whole document.
inline std::string serialize_turtle(const StarDocument& doc, const PrefixMap& pm) {
  const Graph& g = doc.dataset.default_graph;
  bool embedded_blanks = false;
  for (const auto& a : doc.annotated) {
    embedded_blanks |= a.base.has_blank() || std::any_of(a.annotations.begin(), a.annotations.end(),
                                                         [](const Annotation& x) { return is_blank(x.second); });
  }
  for (const auto& r : doc.references) {
    embedded_blanks |= r.embedded.has_blank() || is_blank(r.subject);
  }
  std::string out;
  detail::TurtleWriter w(pm, out);
  w.prefixes();
  if (!pm.empty()) out += "\n";
  const std::set<BlankNode> nestable =
      embedded_blanks ? std::set<BlankNode>{} : detail::all_if_well_behaved(g);
  w.graph(g, nestable, "");
  auto embedded = [&](const Triple& t) {
    out += "<< ";
    w.flat_term(t.subject());
    out += " ";
    w.predicate(t.predicate());
    out += " ";
    w.flat_term(t.object());
    out += " >>";
  };
  for (const auto& a : doc.annotated) {
    if (a.annotations.empty()) continue;
    embedded(a.base);
    for (std::size_t i = 0; i < a.annotations.size(); ++i) {
      out += i == 0 ? " " : " ;\n    ";
      w.predicate(a.annotations[i].first);
      out += " ";
      w.flat_term(a.annotations[i].second);
    }
    out += " .\n";
  }
  for (const auto& r : doc.references) {
    w.flat_term(r.subject);
    out += " ";
    w.predicate(r.predicate);
    out += " ";
    embedded(r.embedded);
    out += " .\n";
  }
  return out;
}

// Bare default-graph triples followed by one block per named graph. A blank
// node is nested only when its graph is well-behaved and the node occurs in
// no other graph and names no graph.
inline std::string serialize_trig(const Dataset& ds, const PrefixMap& pm = {}) {
  std::map<BlankNode, int> graphs_using;
  auto count = [&](const Graph& g) {
    for (const auto& b : blank_nodes(g)) ++graphs_using[b];
  };
  count(ds.default_graph);
  for (const auto& [name, g] : ds.named_graphs) {
    count(g);
    if (auto* b = std::get_if<BlankNode>(&name)) graphs_using[*b] += 2;
  }
  auto nestable_in = [&](const Graph& g) {
    std::set<BlankNode> out;
    if (!is_well_behaved(g)) return out;
    for (const auto& b : blank_nodes(g)) {
      if (graphs_using[b] == 1) out.insert(b);
    }
    return out;
  };

  std::string out;
  detail::TurtleWriter w(pm, out);
  w.prefixes();
  if (!pm.empty() && !ds.empty()) out += "\n";
  w.graph(ds.default_graph, nestable_in(ds.default_graph), "");
  for (const auto& [name, g] : ds.named_graphs) {
    w.flat_term(to_term(name));
    out += " {\n";
    w.graph(g, nestable_in(g), "  ");
    out += "}\n";
  }
  return out;
}

}  // namespace rdfkit
