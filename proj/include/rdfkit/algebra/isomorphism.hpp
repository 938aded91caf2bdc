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
   @file isomorphism.hpp
   Graph and dataset isomorphism up to blank node relabelling.

   Both sides are flattened to statements over integer ids: ground terms
   share one dictionary, blank nodes are numbered per side. After cheap
   rejections (statement counts, blank counts, ground statement sets) blank
   nodes are coloured by iterated neighbourhood hashing. Colours only prune
   the backtracking search over bijections; they never decide the answer on
   their own.
*/

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "rdfkit/algebra/search.hpp"
#include "rdfkit/graph.hpp"

namespace rdfkit {

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) noexcept {
  // splitmix64 finalizer over the running hash
  std::uint64_t x = h ^ (v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2));
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Statement slots hold a ground id (>= 0), kNone, or a blank encoded as
// -(index + 2). A named graph contributes {name, kNone, kNone, kNone} so that
// empty graphs and blank graph names take part in the matching.
constexpr int kNone = -1;
inline bool is_blank_id(int id) noexcept { return id <= -2; }
inline int blank_index(int id) noexcept { return -id - 2; }
inline int blank_id(int index) noexcept { return -index - 2; }

using Statement = std::array<int, 4>;

struct Flattened {
  std::vector<Statement> statements;
  std::vector<BlankNode> blanks;
};

class Flattener {
 public:
  Flattened flatten(const Dataset& ds) {
    Flattened f;
    std::map<BlankNode, int> blank_ids;
    auto id = [&](const Term& t) -> int {
      if (auto* b = std::get_if<BlankNode>(&t)) {
        auto [it, inserted] = blank_ids.emplace(*b, static_cast<int>(f.blanks.size()));
        if (inserted) f.blanks.push_back(*b);
        return blank_id(it->second);
      }
      auto [it, inserted] = ground_.emplace(t, static_cast<int>(ground_.size()));
      return it->second;
    };
    auto add_graph = [&](const Graph& g, int graph) {
      for (const auto& t : g) {
        f.statements.push_back({id(t.subject()), id(Term(t.predicate())), id(t.object()), graph});
      }
    };
    add_graph(ds.default_graph, kNone);
    for (const auto& [name, g] : ds.named_graphs) {
      const int n = id(to_term(name));
      f.statements.push_back({n, kNone, kNone, kNone});
      add_graph(g, n);
    }
    return f;
  }

 private:
  std::map<Term, int> ground_;
};

inline bool has_blank(const Statement& s) noexcept {
  return std::any_of(s.begin(), s.end(), is_blank_id);
}

// One round of colour refinement for every blank node of `f`.
inline std::vector<std::uint64_t> refine(const Flattened& f, const std::vector<std::uint64_t>& colors) {
  std::vector<std::vector<std::uint64_t>> signatures(f.blanks.size());
  for (const auto& st : f.statements) {
    for (int pos = 0; pos < 4; ++pos) {
      if (!is_blank_id(st[pos])) continue;
      std::uint64_t h = mix(0, static_cast<std::uint64_t>(pos));
      for (int k = 0; k < 4; ++k) {
        const int v = st[k];
        if (k == pos || v == st[pos]) {
          h = mix(h, 0xA5A5u + static_cast<std::uint64_t>(k == pos ? 1 : 2));  // self
        } else if (is_blank_id(v)) {
          h = mix(h, colors[blank_index(v)] ^ 0x5555u);
        } else {
          h = mix(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(v)) + 0x1000u);
        }
      }
      signatures[blank_index(st[pos])].push_back(h);
    }
  }
  std::vector<std::uint64_t> next(f.blanks.size());
  for (std::size_t i = 0; i < signatures.size(); ++i) {
    auto& sig = signatures[i];
    std::sort(sig.begin(), sig.end());
    std::uint64_t h = mix(colors[i], sig.size());
    for (auto s : sig) h = mix(h, s);
    next[i] = h;
  }
  return next;
}

inline std::size_t distinct(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::set<std::uint64_t> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  return s.size();
}

class IsoSearch {
 public:
  IsoSearch(const Flattened& a, const Flattened& b, StepCounter& counter)
      : a_(a), b_(b), counter_(counter) {}

  // Returns the mapping from a's blank indices to b's, or nullopt.
  std::optional<std::vector<int>> run() {
    if (a_.statements.size() != b_.statements.size() || a_.blanks.size() != b_.blanks.size()) {
      return std::nullopt;
    }
    std::set<Statement> ground_a;
    for (const auto& st : a_.statements) {
      if (has_blank(st)) continue;
      ground_a.insert(st);
    }
    for (const auto& st : b_.statements) {
      b_set_.insert(st);
      if (!has_blank(st) && !ground_a.count(st)) return std::nullopt;
    }
    std::size_t ground_b = 0;
    for (const auto& st : b_set_) ground_b += has_blank(st) ? 0 : 1;
    if (ground_a.size() != ground_b) return std::nullopt;

    const std::size_t n = a_.blanks.size();
    std::vector<std::uint64_t> ca(n, 1), cb(n, 1);
    std::size_t classes = n ? 1 : 0;
    for (std::size_t round = 0; round <= n; ++round) {
      auto na = refine(a_, ca);
      auto nb = refine(b_, cb);
      const std::size_t c = distinct(na, nb);
      ca = std::move(na);
      cb = std::move(nb);
      if (c == classes && round > 0) break;
      classes = c;
    }
    std::map<std::uint64_t, int> hist;
    for (auto c : ca) ++hist[c];
    for (auto c : cb) --hist[c];
    for (const auto& [c, k] : hist) {
      if (k != 0) return std::nullopt;
    }
    colors_a_ = std::move(ca);
    colors_b_ = std::move(cb);

    // Statements of a, indexed by the blank that completes them under the
    // chosen assignment order.
    order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) order_[i] = static_cast<int>(i);
    std::map<std::uint64_t, int> class_size;
    for (auto c : colors_a_) ++class_size[c];
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      const int sx = class_size[colors_a_[x]], sy = class_size[colors_a_[y]];
      if (sx != sy) return sx < sy;
      return colors_a_[x] < colors_a_[y];
    });
    std::vector<int> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[order_[i]] = static_cast<int>(i);
    checks_.assign(n, {});
    for (const auto& st : a_.statements) {
      int last = -1;
      for (int v : st) {
        if (is_blank_id(v)) last = std::max(last, rank[blank_index(v)]);
      }
      if (last >= 0) checks_[last].push_back(st);
    }
    map_.assign(n, -1);
    used_.assign(n, false);
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  const Flattened& a_;
  const Flattened& b_;
  StepCounter& counter_;
  std::set<Statement> b_set_;
  std::vector<std::uint64_t> colors_a_, colors_b_;
  std::vector<int> order_;
  std::vector<std::vector<Statement>> checks_;
  std::vector<int> map_;
  std::vector<bool> used_;

  bool consistent(std::size_t depth) const {
    for (const auto& st : checks_[depth]) {
      Statement image = st;
      for (int& v : image) {
        if (is_blank_id(v)) v = blank_id(map_[blank_index(v)]);
      }
      if (!b_set_.count(image)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int x = order_[depth];
    for (std::size_t y = 0; y < b_.blanks.size(); ++y) {
      if (used_[y] || colors_b_[y] != colors_a_[x]) continue;
      counter_.step();
      map_[x] = static_cast<int>(y);
      used_[y] = true;
      if (consistent(depth) && extend(depth + 1)) return true;
      used_[y] = false;
      map_[x] = -1;
    }
    return false;
  }
};

inline SearchResult<BlankBijection> isomorphism_search(const Dataset& a, const Dataset& b,
                                                       const SearchBudget& budget) {
  Flattener dict;
  const Flattened fa = dict.flatten(a);
  const Flattened fb = dict.flatten(b);
  StepCounter counter(budget);
  SearchResult<BlankBijection> result;
  try {
    IsoSearch search(fa, fb, counter);
    if (auto m = search.run()) {
      BlankBijection bij;
      for (std::size_t i = 0; i < m->size(); ++i) bij.emplace(fa.blanks[i], fb.blanks[(*m)[i]]);
      result.status = SearchStatus::Found;
      result.witness = std::move(bij);
    } else {
      result.status = SearchStatus::Absent;
    }
  } catch (const BudgetExhausted&) {
    result.status = SearchStatus::Exhausted;
  }
  result.steps = counter.steps();
  return result;
}

inline Dataset as_dataset(const Graph& g) {
  Dataset ds;
  ds.default_graph = g;
  return ds;
}

}  // namespace detail

inline SearchResult<BlankBijection> isomorphism(const Graph& a, const Graph& b,
                                                const SearchBudget& budget = {}) {
  return detail::isomorphism_search(detail::as_dataset(a), detail::as_dataset(b), budget);
}

// A witness M with <s,p,o> in a iff <M(s),p,M(o)> in b, or nullopt.
inline std::optional<BlankBijection> isomorphic(const Graph& a, const Graph& b) {
  return isomorphism(a, b).witness;
}

// One bijection must carry the default graph onto the default graph and the
// set of <name, graph> pairs onto the other dataset's pairs, blank graph
// names included.
inline SearchResult<BlankBijection> dataset_isomorphism(const Dataset& a, const Dataset& b,
                                                        const SearchBudget& budget = {}) {
  return detail::isomorphism_search(a, b, budget);
}

inline bool dataset_isomorphic(const Dataset& a, const Dataset& b) {
  return dataset_isomorphism(a, b).found();
}

}  // namespace rdfkit
