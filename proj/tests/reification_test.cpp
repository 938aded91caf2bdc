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

#include <gtest/gtest.h>

#include <algorithm>

#include "reification_support.hpp"
#include "support.hpp"

namespace rdfkit {
namespace {

using namespace testing;
using S = ReificationScheme;

const Iri kJs("http://example.com/p#js");

std::vector<AnnotatedStatement> profile_statement() {
  return {{Triple(kJs, foaf("name"), lit("John Smith")), {{meta("certainty"), certainty()}}}};
}

// Every occurrence of `from` (as subject, object or graph name) becomes `to`.
Dataset substitute(const Dataset& ds, const Term& from, const Term& to) {
  auto swap = [&](const Term& t) { return t == from ? to : t; };
  auto graph = [&](const Graph& g) {
    Graph out;
    for (const auto& t : g) out.insert(Triple(swap(t.subject()), t.predicate(), swap(t.object())));
    return out;
  };
  Dataset out;
  out.default_graph = graph(ds.default_graph);
  for (const auto& [name, g] : ds.named_graphs) out.named_graphs.emplace(*to_graph_name(swap(to_term(name))), graph(g));
  return out;
}

TEST(Encoding, StandardReificationShape) {
  const auto doc = encode(profile_statement(), S::Sr, {FreshIds::iri("http://example.org/t")});
  const Graph expected = parse_turtle(data("reified_sr.ttl"));
  EXPECT_EQ(substitute(doc.dataset, Term(Iri("http://example.org/t0")), Term(ex("t"))).default_graph, expected);
  EXPECT_TRUE(isomorphic(encode(profile_statement(), S::Sr).dataset.default_graph,
                         substitute(Dataset{expected, {}}, Term(ex("t")), Term(bn("t"))).default_graph));
}

TEST(Encoding, NaryRelationShape) {
  const auto doc = encode(profile_statement(), S::Nr);
  EXPECT_TRUE(isomorphic(doc.dataset.default_graph, parse_turtle(data("reified_nr.ttl"))));
}

TEST(Encoding, EmbeddedTripleShape) {
  ParseOptions opts;
  opts.allow_embedded_triples = true;
  const StarDocument parsed = parse_turtle_document(data("reified_rdr.ttl"), opts);
  const auto doc = encode(profile_statement(), S::Rdr);
  EXPECT_EQ(doc.annotated, parsed.annotated);
  EXPECT_TRUE(doc.dataset.default_graph.empty());
}

TEST(Encoding, SingletonPropertyShape) {
  const auto doc = encode(profile_statement(), S::Sp);
  EXPECT_EQ(doc.dataset.default_graph, parse_turtle(data("reified_sp.ttl")));
}

TEST(Encoding, NamedGraphShape) {
  const auto doc = encode(profile_statement(), S::Ng, {FreshIds::iri("http://example.com/g")});
  const Dataset expected = parse_trig(data("reified_ng.trig"));
  EXPECT_EQ(substitute(doc.dataset, Term(Iri("http://example.com/g0")), Term(Iri("http://example.com/g1"))).named_graphs,
            expected.named_graphs);
  EXPECT_TRUE(dataset_isomorphic(encode(profile_statement(), S::Ng).dataset,
                                 substitute(expected, Term(Iri("http://example.com/g1")), Term(bn("g")))));
}

TEST(Encoding, SingletonCounterIsPerPredicate) {
  std::vector<AnnotatedStatement> stmts{
      {Triple(ex("a"), ex("p"), ex("b")), {{meta("m"), lit("1")}}},
      {Triple(ex("a"), ex("q"), ex("b")), {{meta("m"), lit("2")}}},
      {Triple(ex("c"), ex("p"), ex("d")), {{meta("m"), lit("3")}}},
  };
  const Graph g = encode(stmts, S::Sp).dataset.default_graph;
  EXPECT_TRUE(g.contains(Triple(ex("a"), Iri("http://example.org/p#1"), ex("b"))));
  EXPECT_TRUE(g.contains(Triple(ex("a"), Iri("http://example.org/q#1"), ex("b"))));
  EXPECT_TRUE(g.contains(Triple(ex("c"), Iri("http://example.org/p#2"), ex("d"))));
}

TEST(Encoding, FreshIdsAvoidInputTerms) {
  std::vector<AnnotatedStatement> stmts{{Triple(bn("r0"), ex("p"), ex("o")), {{meta("m"), bn("r1")}}}};
  const Graph g = encode(stmts, S::Sr).dataset.default_graph;
  EXPECT_TRUE(g.contains(Triple(bn("r2"), vocab::rdf_type(), vocab::rdf_statement())));
}

TEST(Encoding, EmbeddedOutputCanBeRefused) {
  EncodeOptions opts;
  opts.allow_embedded_triples = false;
  try {
    encode(profile_statement(), S::Rdr, opts);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmbeddedSyntaxDisabled);
  }
  EXPECT_NO_THROW(encode(profile_statement(), S::Sr, opts));
}

TEST(Counting, ExtraStatementsPerScheme) {
  for (std::size_t n : {0u, 1u, 2u, 3u, 5u}) {
    EXPECT_EQ(extra_statement_count(S::Sr, n), 4 * n);
    EXPECT_EQ(extra_statement_count(S::Nr, n), 2 * n);
    EXPECT_EQ(extra_statement_count(S::Rdr, n), n);
    EXPECT_EQ(extra_statement_count(S::Sp, n), 2 * n);
    EXPECT_EQ(extra_statement_count(S::Ng, n), n);
  }
}

TEST(Counting, CensusMatchesTable) {
  Generator gen(51);
  for (std::size_t n : {0u, 1u, 2u, 3u, 5u}) {
    const auto stmts = annotated_statements(gen, n, 1);
    for (auto scheme : kAllSchemes) {
      SCOPED_TRACE(std::string(to_string(scheme)) + " n=" + std::to_string(n));
      const auto doc = encode(stmts, scheme);
      const auto c = census(stmts, scheme, doc);
      EXPECT_EQ(c.scaffolding(), extra_statement_count(scheme, n));
      EXPECT_EQ(c.emitted, brute_emitted(doc));
    }
  }
}

TEST(Counting, CensusWithSeveralAnnotations) {
  Generator gen(52);
  const auto stmts = annotated_statements(gen, 4, 3);
  for (auto scheme : kAllSchemes) {
    SCOPED_TRACE(std::string(to_string(scheme)));
    const auto doc = encode(stmts, scheme);
    const auto c = census(stmts, scheme, doc);
    EXPECT_EQ(c.emitted, brute_emitted(doc));
    EXPECT_EQ(c.scaffolding(), extra_statement_count(scheme, 4));
  }
}

TEST(Decoding, FixturesDecodeToTheStatement) {
  const auto want = normalize(profile_statement());
  EXPECT_EQ(normalize(decode(parse_turtle_document(data("reified_sr.ttl")), S::Sr).statements), want);
  EXPECT_EQ(normalize(decode(parse_turtle_document(data("reified_nr.ttl")), S::Nr).statements), want);
  EXPECT_EQ(normalize(decode(parse_turtle_document(data("reified_sp.ttl")), S::Sp).statements), want);
  EXPECT_EQ(normalize(decode(parse_trig(data("reified_ng.trig")), S::Ng).statements), want);
  ParseOptions opts;
  opts.allow_embedded_triples = true;
  EXPECT_EQ(normalize(decode(parse_turtle_document(data("reified_rdr.ttl"), opts), S::Rdr).statements), want);
}

TEST(Decoding, RoundTripAllSchemes) {
  Generator gen(53);
  for (int i = 0; i < 40; ++i) {
    const auto stmts = annotated_statements(gen, 1 + gen.below(5), 1 + gen.below(3));
    for (auto scheme : kAllSchemes) {
      SCOPED_TRACE(std::string(to_string(scheme)));
      const auto decoded = decode(encode(stmts, scheme), scheme);
      EXPECT_EQ(normalize(decoded.statements), normalize(stmts));
      EXPECT_TRUE(decoded.residual.default_graph.empty());
      EXPECT_TRUE(decoded.residual.named_graphs.empty());
    }
  }
}

TEST(Decoding, RoundTripThroughText) {
  Generator gen(54);
  ParseOptions opts;
  opts.allow_embedded_triples = true;
  for (int i = 0; i < 20; ++i) {
    const auto stmts = annotated_statements(gen, 1 + gen.below(4), 1 + gen.below(2));
    for (auto scheme : kAllSchemes) {
      SCOPED_TRACE(std::string(to_string(scheme)));
      const auto doc = encode(stmts, scheme);
      StarDocument back;
      if (scheme == S::Ng) {
        back.dataset = parse_trig(serialize_trig(doc.dataset));
      } else if (scheme == S::Rdr) {
        back = parse_turtle_document(serialize_turtle(doc, PrefixMap{}), opts);
      } else {
        // Plain Turtle, no embedded-triple syntax needed.
        back.dataset.default_graph = parse_turtle(serialize_turtle(doc.dataset.default_graph));
      }
      EXPECT_EQ(normalize(decode(back, scheme).statements), normalize(stmts));
    }
  }
}

TEST(Decoding, EmbeddedGroupsSharingBaseMerge) {
  ParseOptions opts;
  opts.allow_embedded_triples = true;
  const auto doc = parse_turtle_document(
      "@prefix ex: <http://example.org/> .\n"
      "<< ex:a ex:p ex:b >> ex:q1 \"1\" .\n"
      "<< ex:c ex:p ex:d >> ex:q1 \"3\" .\n"
      "<< ex:a ex:p ex:b >> ex:q2 \"2\" .\n",
      opts);
  const auto decoded = decode(doc, S::Rdr);
  ASSERT_EQ(decoded.statements.size(), 2u);
  const auto norm = normalize(decoded.statements);
  std::vector<AnnotatedStatement> want{
      {Triple(ex("a"), ex("p"), ex("b")), {{ex("q1"), lit("1")}, {ex("q2"), lit("2")}}},
      {Triple(ex("c"), ex("p"), ex("d")), {{ex("q1"), lit("3")}}},
  };
  EXPECT_EQ(norm, normalize(want));
}

TEST(Decoding, IncompleteStandardPatternIsResidual) {
  Graph g = parse_turtle(data("reified_sr.ttl"));
  g.erase(Triple(ex("t"), vocab::rdf_object(), lit("John Smith")));
  StarDocument doc;
  doc.dataset.default_graph = g;
  const auto decoded = decode(doc, S::Sr);
  EXPECT_TRUE(decoded.statements.empty());
  EXPECT_EQ(decoded.residual.default_graph, g);
}

TEST(Decoding, UnrelatedTriplesAreResidual) {
  auto doc = encode(profile_statement(), S::Sp);
  const Triple extra(ex("x"), ex("y"), ex("z"));
  doc.dataset.default_graph.insert(extra);
  const auto decoded = decode(doc, S::Sp);
  EXPECT_EQ(decoded.statements.size(), 1u);
  EXPECT_EQ(decoded.residual.default_graph, Graph{extra});
}

TEST(Schemes, NamesRoundTrip) {
  for (auto s : kAllSchemes) EXPECT_EQ(parse_scheme(to_string(s)), s);
  EXPECT_FALSE(parse_scheme("bogus").has_value());
}

}  // namespace
}  // namespace rdfkit
