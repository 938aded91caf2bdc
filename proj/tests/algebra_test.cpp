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

#include "support.hpp"

namespace rdfkit {
namespace {

using namespace testing;

const Iri p = ex("p");
const Iri q = ex("q");
const Iri s = ex("s");
const Iri o = ex("o");

BlankBijection invert(const BlankBijection& m) {
  BlankBijection out;
  for (const auto& [a, b] : m) out.emplace(b, a);
  return out;
}

BlankBijection compose(const BlankBijection& first, const BlankBijection& second) {
  BlankBijection out;
  for (const auto& [a, b] : first) out.emplace(a, second.at(b));
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

TEST(Isomorphism, Examples) {
  const Graph g = foaf_profile();
  auto id = isomorphic(g, g);
  ASSERT_TRUE(id);
  EXPECT_TRUE(id->empty());

  auto w = isomorphic(Graph{tr(bn("a"), p, o)}, Graph{tr(bn("b"), p, o)});
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (BlankBijection{{bn("a"), bn("b")}}));

  EXPECT_FALSE(isomorphic(Graph{tr(bn("a"), p, bn("a"))}, Graph{tr(bn("a"), p, bn("b"))}));
  EXPECT_FALSE(brute_isomorphism(Graph{tr(bn("a"), p, bn("a"))}, Graph{tr(bn("a"), p, bn("b"))}));
}

TEST(Isomorphism, QuickRejects) {
  EXPECT_FALSE(isomorphic(Graph{tr(s, p, o)}, Graph{tr(s, p, o), tr(s, q, o)}));
  EXPECT_FALSE(isomorphic(Graph{tr(s, p, o)}, Graph{tr(s, q, o)}));
  EXPECT_FALSE(isomorphic(Graph{tr(bn("a"), p, o)}, Graph{tr(s, p, o)}));
}

TEST(Isomorphism, RegularStructures) {
  // A 6-cycle and two 3-cycles agree on every local count.
  Graph six, two_threes;
  for (int i = 0; i < 6; ++i) {
    six.insert(tr(bn("c" + std::to_string(i)), p, bn("c" + std::to_string((i + 1) % 6))));
  }
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 3; ++i) {
      two_threes.insert(tr(bn("t" + std::to_string(k * 3 + i)), p, bn("t" + std::to_string(k * 3 + (i + 1) % 3))));
    }
  }
  EXPECT_FALSE(isomorphic(six, two_threes));
  EXPECT_FALSE(brute_isomorphism(six, two_threes));
  Generator gen(1);
  EXPECT_TRUE(isomorphic(six, gen.relabel(six)));
}

TEST(Isomorphism, WitnessIsValid) {
  Generator gen(7);
  GraphShape shape;
  for (int i = 0; i < 100; ++i) {
    Graph g = gen.graph(shape);
    Graph h = gen.relabel(g);
    auto w = isomorphic(g, h);
    ASSERT_TRUE(w);
    EXPECT_EQ(rdfkit::apply(*w, g), h);
    EXPECT_EQ(w->size(), blank_nodes(g).size());
  }
}

TEST(Isomorphism, AgreesWithBruteForce) {
  Generator gen(8);
  GraphShape shape;
  shape.iris = 2;
  shape.predicates = 2;
  int positives = 0, negatives = 0;
  for (int i = 0; i < 300; ++i) {
    Graph g = i % 5 == 0 ? gen.blank_cycles(1 + gen.below(6)) : gen.graph(shape);
    Graph h = i % 2 ? gen.relabel(g) : gen.relabel(gen.mutate(g));
    const bool expected = brute_isomorphism(g, h).has_value();
    EXPECT_EQ(isomorphic(g, h).has_value(), expected) << serialize_ntriples(g) << "--\n" << serialize_ntriples(h);
    (expected ? positives : negatives)++;
  }
  EXPECT_GT(positives, 100);
  EXPECT_GT(negatives, 50);
}

TEST(Isomorphism, EquivalenceRelation) {
  Generator gen(9);
  GraphShape shape;
  for (int i = 0; i < 60; ++i) {
    Graph a = gen.graph(shape);
    Graph b = gen.relabel(a);
    Graph c = gen.relabel(b);
    auto ab = isomorphic(a, b);
    auto bc = isomorphic(b, c);
    ASSERT_TRUE(ab && bc);
    auto ba = isomorphic(b, a);
    ASSERT_TRUE(ba);
    EXPECT_EQ(rdfkit::apply(invert(*ab), b), a);
    EXPECT_EQ(rdfkit::apply(compose(*ab, *bc), a), c);
    EXPECT_TRUE(isomorphic(a, c));
  }
}

TEST(Isomorphism, BudgetExhaustion) {
  Generator gen(10);
  Graph g = gen.blank_cycles(12);
  Graph h = gen.relabel(g);
  SearchBudget tiny{1};
  auto r = isomorphism(g, h, tiny);
  EXPECT_NE(r.status, SearchStatus::Absent);  // never a wrong "no"
  EXPECT_TRUE(isomorphism(g, h).found());
}

TEST(DatasetIsomorphism, Examples) {
  Dataset ds = parse_trig(data("two_graphs.trig"));
  EXPECT_TRUE(dataset_isomorphic(ds, ds));

  Dataset swapped = ds;
  std::swap(swapped.named_graphs.at(GraphName(ex("g1"))), swapped.named_graphs.at(GraphName(ex("g2"))));
  EXPECT_FALSE(dataset_isomorphic(ds, swapped));

  Dataset a, b;
  a.add(GraphName(bn("g")), tr(s, p, o));
  b.add(GraphName(bn("h")), tr(s, p, o));
  EXPECT_TRUE(dataset_isomorphic(a, b));
}

TEST(DatasetIsomorphism, SharedBlankNodesAcrossGraphs) {
  Dataset a = parse_trig("_:x <a:p> <a:o> . <a:g> { _:x <a:q> <a:o> }");
  Dataset b = parse_trig("_:y <a:p> <a:o> . <a:g> { _:y <a:q> <a:o> }");
  Dataset c = parse_trig("_:y <a:p> <a:o> . <a:g> { _:z <a:q> <a:o> }");
  EXPECT_TRUE(dataset_isomorphic(a, b));
  EXPECT_FALSE(dataset_isomorphic(a, c));
  // A blank graph name is not interchangeable with a blank node in a triple.
  Dataset d = parse_trig("_:g <a:p> <a:o> . _:g { <a:s> <a:p> <a:o> }");
  Dataset e = parse_trig("_:g <a:p> <a:o> . _:h { <a:s> <a:p> <a:o> }");
  EXPECT_FALSE(dataset_isomorphic(d, e));
}

TEST(DatasetIsomorphism, GeneratedRelabelings) {
  Generator gen(12);
  GraphShape shape;
  shape.max_triples = 6;
  for (int i = 0; i < 50; ++i) {
    Dataset ds = gen.dataset(shape);
    auto blanks = blank_nodes(ds);
    BlankBijection m;
    std::size_t k = 0;
    for (const auto& b : blanks) m.emplace(b, bn("z" + std::to_string(k++)));
    Dataset copy;
    copy.default_graph = rdfkit::apply(m, ds.default_graph);
    for (const auto& [name, g] : ds.named_graphs) {
      GraphName n = name;
      if (auto* b = std::get_if<BlankNode>(&name)) n = m.at(*b);
      copy.named_graphs[n] = rdfkit::apply(m, g);
    }
    EXPECT_TRUE(dataset_isomorphic(ds, copy));
  }
}

// ---------------------------------------------------------------------------
// Homomorphism

TEST(Homomorphism, Examples) {
  const Graph g = foaf_profile();
  auto id = find_homomorphism(g, g);
  ASSERT_TRUE(id);
  EXPECT_TRUE(id->empty());

  auto w = find_homomorphism(Graph{tr(bn("x"), vocab::rdf_type(), foaf("Person"))}, g);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (TermMapping{{bn("x"), Term(Iri("http://example.com/p#js"))}}));

  EXPECT_FALSE(find_homomorphism(Graph{tr(bn("x"), p, bn("x"))}, Graph{tr(ex("a"), p, ex("b"))}));
}

TEST(Homomorphism, LiteralsNeverBecomeSubjects) {
  Graph h{tr(s, p, bn("x")), tr(bn("x"), q, o)};
  Graph g{tr(s, p, lit("v")), tr(s, q, o)};
  EXPECT_FALSE(find_homomorphism(h, g));
}

TEST(Homomorphism, AgreesWithBruteForce) {
  Generator gen(13);
  GraphShape small;
  small.max_triples = 4;
  small.max_blanks = 3;
  small.iris = 3;
  small.predicates = 2;
  GraphShape big = small;
  big.max_triples = 12;
  for (int i = 0; i < 300; ++i) {
    Graph h = gen.graph(small);
    Graph g = gen.graph(big);
    auto w = find_homomorphism(h, g);
    EXPECT_EQ(w.has_value(), brute_homomorphism(h, g).has_value());
    if (w) {
      EXPECT_TRUE(g.includes(rdfkit::apply(*w, h)));
    }
  }
}

TEST(Homomorphism, GroundFastPathExpandsNothing) {
  Graph g;
  for (int i = 0; i < 2000; ++i) g.insert(tr(ex("s" + std::to_string(i)), p, ex("o" + std::to_string(i % 7))));
  Graph h{tr(ex("s1"), p, ex("o1")), tr(ex("s8"), p, ex("o1"))};
  auto r = homomorphism_search(h, g);
  EXPECT_TRUE(r.found());
  EXPECT_EQ(r.steps, 0u);
  h.insert(tr(ex("s9"), p, ex("o1")));  // absent: s9 -> o2
  r = homomorphism_search(h, g);
  EXPECT_EQ(r.status, SearchStatus::Absent);
  EXPECT_EQ(r.steps, 0u);
}

// ---------------------------------------------------------------------------
// Leanness

TEST(Lean, Examples) {
  EXPECT_TRUE(is_lean(foaf_profile()));
  EXPECT_TRUE(is_lean(Graph{}));

  LeanResult r = lean_check(parse_turtle(data("lean_pair.ttl")));
  EXPECT_FALSE(r.lean());
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->at(bn("b")), Term(s));

  EXPECT_TRUE(is_lean(Graph{tr(bn("b"), p, o)}));
}

TEST(Lean, RedundantChains) {
  // _:x p _:y is subsumed by s p o.
  EXPECT_FALSE(is_lean(Graph{tr(s, p, o), tr(bn("x"), p, bn("y"))}));
  // A blank self-loop absorbs a blank path into it.
  EXPECT_FALSE(is_lean(Graph{tr(bn("a"), p, bn("a")), tr(bn("b"), p, bn("c"))}));
  // Two blank nodes with different predicates cannot fold.
  EXPECT_TRUE(is_lean(Graph{tr(bn("a"), p, o), tr(bn("b"), q, o)}));
}

TEST(Lean, AgreesWithBruteForce) {
  Generator gen(14);
  GraphShape shape;
  shape.max_triples = 10;
  shape.max_blanks = 5;
  shape.iris = 3;
  shape.predicates = 2;
  int non_lean = 0;
  for (int i = 0; i < 150; ++i) {
    Graph g = gen.graph(shape);
    LeanResult r = lean_check(g);
    auto oracle = brute_lean_witness(g);
    ASSERT_FALSE(r.exhausted());
    EXPECT_EQ(r.lean(), !oracle.has_value()) << serialize_ntriples(g);
    if (!r.lean()) {
      ++non_lean;
      ASSERT_TRUE(r.witness);
      EXPECT_TRUE(verifies_non_lean(g, *r.witness));
    }
  }
  EXPECT_GT(non_lean, 20);
}

TEST(Lean, BudgetExhaustionIsNotAnAnswer) {
  Generator gen(15);
  Graph g = gen.blank_cycles(10);
  g.insert(tr(ex("a"), p, ex("a")));
  LeanResult r = lean_check(g, SearchBudget{2});
  EXPECT_TRUE(r.exhausted() || !r.lean());
  EXPECT_FALSE(r.lean() && r.exhausted());
}

// ---------------------------------------------------------------------------
// Merge

TEST(Merge, Examples) {
  Graph a{tr(bn("a"), p, o)};
  Graph m = merge(a, a);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_EQ(blank_nodes(m).size(), 2u);
  EXPECT_TRUE(m.contains(tr(bn("a"), p, o)));

  Graph g1 = foaf_profile();
  Graph g2{tr(s, p, o)};
  EXPECT_EQ(merge(g1, g2), graph_union(g1, g2));
  EXPECT_EQ(merge(g1, Graph{}), g1);
}

TEST(Merge, CopiesAreDisjointAndIsomorphic) {
  Generator gen(16);
  GraphShape shape;
  for (int i = 0; i < 80; ++i) {
    Graph g1 = gen.graph(shape);
    Graph g2 = gen.graph(shape);
    BlankBijection rename = rename_apart(g2, blank_nodes(g1));
    Graph g2c = rdfkit::apply(rename, g2);
    std::set<BlankNode> b1 = blank_nodes(g1), b2 = blank_nodes(g2c);
    for (const auto& b : b2) EXPECT_EQ(b1.count(b), 0u);
    EXPECT_TRUE(isomorphic(g2c, g2));
    Graph m = merge(g1, g2);
    EXPECT_EQ(m, graph_union(g1, g2c));
    EXPECT_EQ(blank_nodes(m).size(), b1.size() + blank_nodes(g2).size());
  }
}

// ---------------------------------------------------------------------------
// Skolemization

TEST(Skolem, Examples) {
  SkolemPolicy det{Iri("http://ex.org"), true, std::nullopt};
  EXPECT_EQ(skolemize(foaf_profile(), det), foaf_profile());
  EXPECT_EQ(skolemize(Graph{tr(bn("a"), p, o)}, det),
            (Graph{tr(Iri("http://ex.org/.well-known/genid/b0"), p, o)}));
  Graph two = skolemize(Graph{tr(bn("a"), p, bn("b"))}, det);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_NE(two.begin()->subject(), two.begin()->object());
  EXPECT_TRUE(is_ground(two));
}

TEST(Skolem, TrailingSlashAndCollisions) {
  SkolemPolicy det{Iri("http://ex.org/"), true, std::nullopt};
  Graph g{tr(bn("a"), p, Iri("http://ex.org/.well-known/genid/b0"))};
  Graph k = skolemize(g, det);
  EXPECT_TRUE(k.contains(tr(Iri("http://ex.org/.well-known/genid/b1"), p, Iri("http://ex.org/.well-known/genid/b0"))));
}

TEST(Skolem, RandomIdsAreDistinct) {
  SkolemPolicy seeded{Iri("http://ex.org"), false, 42};
  Graph g;
  for (int i = 0; i < 50; ++i) g.insert(tr(bn("b" + std::to_string(i)), p, o));
  Graph k = skolemize(g, seeded);
  EXPECT_EQ(k.size(), 50u);
  EXPECT_TRUE(is_ground(k));
  EXPECT_EQ(skolemize(g, seeded), k);  // same seed, same ids
  for (const auto& t : k) EXPECT_TRUE(is_skolem_iri(std::get<Iri>(t.subject()), Iri("http://ex.org")));
}

TEST(Skolem, ReverseSubstitution) {
  Generator gen(17);
  GraphShape shape;
  shape.exotic = true;
  const Iri base("http://ex.org/base");
  for (int i = 0; i < 80; ++i) {
    Graph g = gen.graph(shape);
    SkolemPolicy policy{base, i % 2 == 0, static_cast<std::uint64_t>(i)};
    Graph k = skolemize(g, policy);
    EXPECT_TRUE(is_ground(k));
    EXPECT_EQ(k.size(), g.size());
    EXPECT_TRUE(isomorphic(reverse_skolem(k, base), g));
    EXPECT_TRUE(isomorphic(deskolemize(k, base), g));
  }
}

// ---------------------------------------------------------------------------
// Well-behaved graphs

TEST(WellBehaved, Examples) {
  EXPECT_TRUE(is_well_behaved(foaf_profile()));
  EXPECT_FALSE(is_well_behaved(Graph{tr(s, p, bn("b")), tr(ex("s2"), p, bn("b"))}));
  EXPECT_FALSE(is_well_behaved(Graph{tr(bn("a"), p, bn("a"))}));
  EXPECT_FALSE(is_well_behaved(Graph{tr(bn("a"), p, bn("b")), tr(bn("b"), p, bn("a"))}));
  EXPECT_TRUE(is_well_behaved(parse_ntriples(data("collection.nt"))));
}

TEST(WellBehaved, DeprecatedTerms) {
  WellBehavedOptions opts;
  opts.deprecated_terms.insert(q);
  EXPECT_TRUE(is_well_behaved(Graph{tr(s, p, o)}, opts));
  EXPECT_FALSE(is_well_behaved(Graph{tr(s, q, o)}, opts));
}

TEST(WellBehaved, MatchesLabelFreeTurtle) {
  Generator gen(18);
  GraphShape shape;
  shape.exotic = true;
  int wb = 0;
  for (int i = 0; i < 200; ++i) {
    Graph g = i % 2 ? gen.tree(shape) : gen.graph(shape);
    const std::string ttl = serialize_turtle(g);
    const bool label_free = count_blank_labels(ttl) == 0;
    if (blank_nodes(g).empty()) continue;
    EXPECT_EQ(label_free, is_well_behaved(g)) << ttl;
    wb += is_well_behaved(g);
    EXPECT_TRUE(isomorphic(parse_turtle(ttl), g));
  }
  EXPECT_GT(wb, 50);
}

}  // namespace
}  // namespace rdfkit
