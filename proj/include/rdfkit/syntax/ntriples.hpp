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
   @file ntriples.hpp
   N-Triples and N-Quads: one statement per line, absolute IRIs only, each
   statement terminated by a dot. LF and CRLF line ends are accepted; LF is
   written.
*/

#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "rdfkit/graph.hpp"
#include "rdfkit/syntax/cursor.hpp"

namespace rdfkit {

namespace detail {

inline void append_hex_escape(std::string& out, unsigned cp) {
  char buf[12];
  std::snprintf(buf, sizeof buf, "\\u%04X", cp);
  out += buf;
}

inline void write_iri(std::string& out, const std::string& iri) {
  out.push_back('<');
  for (char c : iri) {
    const auto uc = static_cast<unsigned char>(c);
    if (uc <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
        c == '^' || c == '`' || c == '\\') {
      append_hex_escape(out, uc);
    } else {
      out.push_back(c);
    }
  }
  out.push_back('>');
}

inline void write_string(std::string& out, const std::string& s) {
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20 || c == 0x7F) {
          append_hex_escape(out, static_cast<unsigned char>(c));
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

// Literal with its datatype or language suffix. `datatype_writer` renders
// the datatype IRI so Turtle can abbreviate it.
template <typename IriWriter>
void write_literal(std::string& out, const Literal& l, IriWriter&& datatype_writer) {
  write_string(out, l.lexical_form());
  if (l.has_language()) {
    out += "@" + l.language();
  } else if (l.datatype() != vocab::xsd_string()) {
    out += "^^";
    datatype_writer(out, l.datatype());
  }
}

inline void write_term_nt(std::string& out, const Term& t) {
  if (auto* i = std::get_if<Iri>(&t)) {
    write_iri(out, i->value());
  } else if (auto* b = std::get_if<BlankNode>(&t)) {
    out += "_:" + b->label();
  } else {
    write_literal(out, std::get<Literal>(t),
                  [](std::string& o, const Iri& dt) { write_iri(o, dt.value()); });
  }
}

// Reads one N-Triples term at the cursor.
inline Term read_nt_term(Cursor& in) {
  const std::size_t start = in.pos();
  const char c = in.peek();
  if (c == '<') {
    if (in.peek(1) == '<') in.fail(ParseErrorKind::EmbeddedTriple, "embedded triples are not part of this format");
    std::string iri = in.read_iriref();
    if (!has_scheme(iri)) in.fail_at(start, ParseErrorKind::RelativeIri, "relative IRI '" + iri + "'");
    return Iri(std::move(iri));
  }
  if (c == '_') {
    if (in.peek(1) != ':') in.fail(ParseErrorKind::UnexpectedCharacter, "expected '_:'");
    in.advance(2);
    return BlankNode(in.read_blank_label());
  }
  if (c == '"') {
    std::string lexical = in.read_string(false, false);
    if (in.peek() == '@') {
      in.advance();
      return Literal(std::move(lexical), std::nullopt, in.read_language_tag());
    }
    if (in.peek() == '^' && in.peek(1) == '^') {
      in.advance(2);
      const std::size_t dt_start = in.pos();
      if (in.peek() != '<') in.fail(ParseErrorKind::UnexpectedCharacter, "expected datatype IRI");
      std::string dt = in.read_iriref();
      if (!has_scheme(dt)) in.fail_at(dt_start, ParseErrorKind::RelativeIri, "relative datatype IRI");
      try {
        return Literal(std::move(lexical), Iri(std::move(dt)));
      } catch (const Error& e) {
        in.fail_at(dt_start, ParseErrorKind::BadLanguageTag, e.what());
      }
    }
    return Literal(std::move(lexical));
  }
  if (in.at_end() || c == '\n' || c == '\r') in.fail(ParseErrorKind::UnexpectedEnd, "expected a term");
  in.fail(ParseErrorKind::UnexpectedCharacter, "expected a term");
}

inline bool at_line_end(const Cursor& in) {
  return in.at_end() || in.peek() == '\n' || in.peek() == '\r';
}

inline void skip_line_end(Cursor& in) {
  if (in.peek() == '\r') in.advance();
  if (in.peek() == '\n') in.advance();
}

// Parses line-oriented statements; `max_terms` is 3 for N-Triples and 4 for
// N-Quads. `sink(terms, count, first_term_offsets)` receives each statement.
template <typename Sink>
void parse_lines(std::string_view text, int max_terms, Sink&& sink) {
  Cursor in(text);
  while (!in.at_end()) {
    in.skip_blanks();
    in.skip_comment();
    if (at_line_end(in)) {
      skip_line_end(in);
      continue;
    }
    std::optional<Term> terms[4];
    std::size_t offsets[4] = {0, 0, 0, 0};
    int count = 0;
    for (;;) {
      in.skip_blanks();
      if (in.peek() == '.') break;
      if (at_line_end(in) || in.peek() == '#') {
        in.fail(ParseErrorKind::MissingDot, "statement not terminated by '.'");
      }
      if (count == max_terms) {
        in.fail(max_terms == 3 ? ParseErrorKind::MissingDot : ParseErrorKind::TermCount,
                max_terms == 3 ? "expected '.' after object" : "too many terms in statement");
      }
      offsets[count] = in.pos();
      terms[count] = read_nt_term(in);
      ++count;
    }
    const std::size_t dot = in.pos();
    in.advance();
    if (count < 3) in.fail_at(dot, ParseErrorKind::TermCount, "statement needs at least three terms");
    in.skip_blanks();
    in.skip_comment();
    if (!at_line_end(in)) in.fail(ParseErrorKind::UnexpectedCharacter, "trailing content after '.'");
    skip_line_end(in);

    if (is_literal(*terms[0])) in.fail_at(offsets[0], ParseErrorKind::LiteralSubject, "literal subject");
    if (!is_iri(*terms[1])) in.fail_at(offsets[1], ParseErrorKind::UnexpectedCharacter, "predicate must be an IRI");
    std::optional<GraphName> graph;
    if (count == 4) {
      graph = to_graph_name(*terms[3]);
      if (!graph) in.fail_at(offsets[3], ParseErrorKind::LiteralGraphLabel, "literal as graph label");
    }
    sink(Triple(std::move(*terms[0]), std::get<Iri>(std::move(*terms[1])), std::move(*terms[2])),
         graph);
  }
}

}  // namespace detail

inline Graph parse_ntriples(std::string_view text) {
  Graph g;
  detail::parse_lines(text, 3, [&](Triple t, const std::optional<GraphName>&) { g.insert(std::move(t)); });
  return g;
}

inline Dataset parse_nquads(std::string_view text) {
  Dataset ds;
  detail::parse_lines(text, 4, [&](Triple t, const std::optional<GraphName>& name) {
    if (name) {
      ds.add(*name, std::move(t));
    } else {
      ds.default_graph.insert(std::move(t));
    }
  });
  return ds;
}

inline std::string serialize_ntriples(const Graph& g) {
  std::string out;
  for (const auto& t : g) {
    detail::write_term_nt(out, t.subject());
    out.push_back(' ');
    detail::write_iri(out, t.predicate().value());
    out.push_back(' ');
    detail::write_term_nt(out, t.object());
    out += " .\n";
  }
  return out;
}

// Named graphs without triples have no N-Quads representation and are
// dropped.
inline std::string serialize_nquads(const Dataset& ds) {
  std::string out = serialize_ntriples(ds.default_graph);
  for (const auto& [name, g] : ds.named_graphs) {
    std::string label;
    detail::write_term_nt(label, to_term(name));
    for (const auto& t : g) {
      detail::write_term_nt(out, t.subject());
      out.push_back(' ');
      detail::write_iri(out, t.predicate().value());
      out.push_back(' ');
      detail::write_term_nt(out, t.object());
      out += " " + label + " .\n";
    }
  }
  return out;
}

}  // namespace rdfkit
