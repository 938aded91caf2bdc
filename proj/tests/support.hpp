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

// Shared by the unit tests and the acceptance binary: random graph and
// dataset generators, brute-force oracles, and fixture loading. The oracles
// are deliberately naive and share no code with the library searches.

#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rdfkit/rdfkit.hpp"

namespace rdfkit::testing {

inline std::filesystem::path source_dir() { return RDFKIT_SOURCE_DIR; }
inline std::filesystem::path data_dir() { return source_dir() / "tests" / "data"; }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string data(const std::string& name) { return read_file(data_dir() / name); }

// Every file under tests/data with the given extension.
inline std::vector<std::filesystem::path> corpus(const std::string& ext) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(data_dir())) {
    if (e.path().extension() == ext) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Iri ex(std::string_view local) { return Iri("http://example.org/" + std::string(local)); }
inline BlankNode bn(std::string label) { return BlankNode(std::move(label)); }
inline Literal lit(std::string s) { return Literal(std::move(s)); }
inline Triple tr(Term s, Iri p, Term o) { return Triple(std::move(s), std::move(p), std::move(o)); }

inline const Iri& foaf(std::string_view local) {
  static std::map<std::string, Iri, std::less<>> cache;
  auto it = cache.find(local);
  if (it == cache.end()) {
    it = cache.emplace(std::string(local), Iri("http://xmlns.com/foaf/0.1/" + std::string(local))).first;
  }
  return it->second;
}

// The four-triple FOAF profile used throughout the tests.
inline Graph foaf_profile() {
  const Iri js("http://example.com/p#js");
  const Iri univ("http://univ.com/");
  return Graph{
      tr(js, vocab::rdf_type(), foaf("Person")),
      tr(js, foaf("name"), lit("John Smith")),
      tr(js, foaf("workplaceHomepage"), univ),
      tr(univ, vocab::rdfs("label"), lit("University")),
  };
}

// ---------------------------------------------------------------------------
// Generators

struct GraphShape {
  std::size_t max_triples = 20;
  std::size_t max_blanks = 6;
  std::size_t iris = 4;        // subject/object IRIs
  std::size_t predicates = 3;
  bool literals = true;
  bool exotic = false;         // escapes, language tags, unicode, odd labels
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return n == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& rng() { return rng_; }

  Iri iri(const GraphShape& s) {
    const std::size_t k = below(s.iris);
    if (s.exotic && k % 3 == 2) return Iri("http://example.org/\xc3\xa9t\xc3\xa9/r" + std::to_string(k) + "#frag");
    if (s.exotic && k % 3 == 1) return Iri("urn:x-test:" + std::to_string(k));
    return ex("r" + std::to_string(k));
  }

  Iri predicate(const GraphShape& s) {
    const std::size_t k = below(s.predicates);
    if (s.exotic && k == 0) return vocab::rdf_type();
    return ex("p" + std::to_string(k));
  }

  BlankNode blank(std::size_t k, const GraphShape& s) {
    if (!s.exotic) return BlankNode("b" + std::to_string(k));
    static const char* const kLabels[] = {"x", "1st", "a.b", "n-1", "q_2", "U_8", "z9", "m.n.o"};
    return BlankNode(std::string(kLabels[k % 8]) + (k >= 8 ? std::to_string(k) : ""));
  }

  Literal literal(const GraphShape& s) {
    if (!s.exotic) return Literal("v" + std::to_string(below(3)));
    switch (below(8)) {
      case 0: return Literal("plain");
      case 1: return Literal("tab\there \"quoted\" back\\slash");
      case 2: return Literal("line1\nline2\r\n", std::nullopt);
      case 3: return Literal("chat", std::nullopt, std::string(chance(0.5) ? "en" : "fr-BE"));
      case 4: return Literal(std::to_string(below(100)), vocab::xsd("integer"));
      case 5: return Literal("\xe2\x82\xac \xf0\x9f\x98\x80 caf\xc3\xa9");
      case 6: return Literal("", std::nullopt);
      default: return Literal("x", Iri("http://example.org/dt#custom"));
    }
  }

  // A random graph. Blank node k is b{k} (or an exotic label); subjects are
  // blank about half the time so blank structure is common.
  Graph graph(const GraphShape& s) {
    const std::size_t nb = below(s.max_blanks + 1);
    const std::size_t nt = 1 + below(s.max_triples);
    Graph g;
    for (std::size_t i = 0; i < nt; ++i) {
      Term subj = (nb && chance(0.55)) ? Term(blank(below(nb), s)) : Term(iri(s));
      const std::size_t pick = below(10);
      Term obj = (nb && pick < 4)               ? Term(blank(below(nb), s))
                 : (s.literals && pick < 6) ? Term(literal(s))
                                            : Term(iri(s));
      g.insert(Triple(std::move(subj), predicate(s), std::move(obj)));
    }
    return g;
  }

  // A tree of blank nodes hanging off IRIs: always well-behaved.
  Graph tree(const GraphShape& s) {
    Graph g;
    std::vector<Term> nodes{Term(iri(s))};
    const std::size_t n = 1 + below(s.max_triples);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Term parent = nodes[below(nodes.size())];
      if (chance(0.5) && next < s.max_blanks) {
        BlankNode b = blank(next++, s);
        g.insert(Triple(parent, predicate(s), Term(b)));
        nodes.push_back(Term(b));
      } else if (chance(0.5)) {
        g.insert(Triple(parent, predicate(s), Term(literal(s))));
      } else {
        g.insert(Triple(parent, predicate(s), Term(iri(s))));
      }
    }
    return g;
  }

  // Blank nodes only, one predicate: regular structures that defeat naive
  // degree-based pruning.
  Graph blank_cycles(std::size_t blanks) {
    Graph g;
    std::vector<std::size_t> order(blanks);
    for (std::size_t i = 0; i < blanks; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng_);
    std::size_t start = 0;
    while (start < blanks) {
      std::size_t len = std::min(blanks - start, 2 + below(blanks));
      for (std::size_t i = 0; i < len; ++i) {
        g.insert(Triple(BlankNode("c" + std::to_string(order[start + i])), ex("e"),
                        BlankNode("c" + std::to_string(order[start + (i + 1) % len]))));
      }
      start += len;
    }
    return g;
  }

  Dataset dataset(const GraphShape& s) {
    Dataset ds;
    ds.default_graph = chance(0.8) ? graph(s) : Graph{};
    const std::size_t ng = below(4);
    for (std::size_t i = 0; i < ng; ++i) {
      GraphName name = chance(0.5) ? GraphName(ex("g" + std::to_string(below(5))))
                                   : GraphName(blank(below(s.max_blanks + 2), s));
      Graph g = chance(0.5) ? graph(s) : tree(s);
      for (const auto& t : g) ds.named_graphs[name].insert(t);
    }
    return ds;
  }

  // g with its blank nodes renamed by a random bijection onto fresh labels.
  Graph relabel(const Graph& g, BlankBijection* used = nullptr) {
    auto blanks = blank_nodes(g);
    std::vector<std::size_t> ids(blanks.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::shuffle(ids.begin(), ids.end(), rng_);
    BlankBijection m;
    std::size_t i = 0;
    for (const auto& b : blanks) m.emplace(b, BlankNode("r" + std::to_string(ids[i++])));
    if (used) *used = m;
    return rdfkit::apply(m, g);
  }

  // One small edit that usually (not always) breaks isomorphism while
  // keeping the triple count.
  Graph mutate(const Graph& g) {
    std::vector<Triple> ts(g.begin(), g.end());
    if (ts.empty()) return g;
    auto blanks = blank_nodes(g);
    std::vector<BlankNode> bs(blanks.begin(), blanks.end());
    Triple& t = ts[below(ts.size())];
    switch (below(4)) {
      case 0:
        if (!bs.empty()) {
          t = Triple(t.subject(), t.predicate(), Term(bs[below(bs.size())]));
          break;
        }
        [[fallthrough]];
      case 1:
        t = Triple(t.subject(), ex("p" + std::to_string(below(4))), t.object());
        break;
      case 2:
        if (!bs.empty()) {
          t = Triple(Term(bs[below(bs.size())]), t.predicate(), t.object());
          break;
        }
        [[fallthrough]];
      default:
        t = Triple(t.subject(), t.predicate(), Term(ex("r" + std::to_string(below(5)))));
        break;
    }
    return Graph(ts.begin(), ts.end());
  }

 private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Oracles

// Tries every bijection between the blank nodes of a and b.
inline std::optional<BlankBijection> brute_isomorphism(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto sa = blank_nodes(a);
  auto sb = blank_nodes(b);
  if (sa.size() != sb.size()) return std::nullopt;
  std::vector<BlankNode> from(sa.begin(), sa.end());
  std::vector<BlankNode> to(sb.begin(), sb.end());
  do {
    BlankBijection m;
    for (std::size_t i = 0; i < from.size(); ++i) m.emplace(from[i], to[i]);
    if (rdfkit::apply(m, a) == b) return m;
  } while (std::next_permutation(to.begin(), to.end()));
  return std::nullopt;
}

// Image of one term under a partial mapping.
inline Term image(const TermMapping& m, const Term& t) {
  if (auto* b = std::get_if<BlankNode>(&t)) {
    if (auto it = m.find(*b); it != m.end()) return it->second;
  }
  return t;
}

// Enumerates blank -> term assignments in a fixed order, rejecting a partial
// assignment as soon as a fully assigned triple of `from` leaves `into`.
// `accept` sees each complete assignment and stops the search by returning
// true.
inline bool enumerate_mappings(const Graph& from, const Graph& into, const std::vector<Term>& candidates,
                               const std::function<bool(const TermMapping&)>& accept) {
  auto blanks_set = blank_nodes(from);
  std::vector<BlankNode> blanks(blanks_set.begin(), blanks_set.end());
  std::vector<Triple> ts(from.begin(), from.end());
  TermMapping m;
  auto assigned = [&](const Term& t) { return !is_blank(t) || m.count(std::get<BlankNode>(t)); };
  std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
    for (const auto& t : ts) {
      if (!assigned(t.subject()) || !assigned(t.object())) continue;
      Term s = image(m, t.subject());
      if (is_literal(s)) return false;
      if (!into.contains(Triple(s, t.predicate(), image(m, t.object())))) return false;
    }
    if (k == blanks.size()) return accept(m);
    for (const auto& c : candidates) {
      m.insert_or_assign(blanks[k], c);
      if (go(k + 1)) return true;
    }
    m.erase(blanks[k]);
    return false;
  };
  return go(0);
}

inline std::vector<Term> term_list(const Graph& g) {
  auto ts = terms(g);
  return {ts.begin(), ts.end()};
}

// ν with ν(h) ⊆ g, if any.
inline std::optional<TermMapping> brute_homomorphism(const Graph& h, const Graph& g) {
  std::optional<TermMapping> found;
  enumerate_mappings(h, g, term_list(g), [&](const TermMapping& m) {
    found = m;
    return true;
  });
  return found;
}

// ν with ν(g) a proper subset of g, if any.
inline std::optional<TermMapping> brute_lean_witness(const Graph& g) {
  std::optional<TermMapping> found;
  enumerate_mappings(g, g, term_list(g), [&](const TermMapping& m) {
    std::set<Triple> img;
    for (const auto& t : g) img.insert(Triple(image(m, t.subject()), t.predicate(), image(m, t.object())));
    if (img.size() < g.size()) {
      found = m;
      return true;
    }
    return false;
  });
  return found;
}

// Independent check of a non-leanness witness.
inline bool verifies_non_lean(const Graph& g, const TermMapping& m) {
  std::set<Triple> img;
  for (const auto& t : g) {
    Term s = image(m, t.subject());
    if (is_literal(s)) return false;
    Triple u(s, t.predicate(), image(m, t.object()));
    if (!g.contains(u)) return false;
    img.insert(u);
  }
  return img.size() < g.size();
}

// Number of `_:` tokens outside IRIs, strings and comments.
inline std::size_t count_blank_labels(std::string_view text) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '"') {
      for (++i; i < text.size() && text[i] != '"'; ++i) {
        if (text[i] == '\\') ++i;
      }
    } else if (c == '<') {
      while (i < text.size() && text[i] != '>') ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '_' && i + 1 < text.size() && text[i + 1] == ':') {
      ++n;
    }
  }
  return n;
}

// Replaces every IRI under the skolem prefix of `base` by a blank node.
inline Graph reverse_skolem(const Graph& g, const Iri& base) {
  auto back = [&](const Term& t) -> Term {
    if (auto* i = std::get_if<Iri>(&t); i && is_skolem_iri(*i, base)) {
      std::string label;
      for (char c : i->value()) label += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
      return BlankNode("s" + label);
    }
    return t;
  };
  Graph out;
  for (const auto& t : g) out.insert(Triple(back(t.subject()), t.predicate(), back(t.object())));
  return out;
}

}  // namespace rdfkit::testing
