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
   @file homomorphism.hpp
   Blank node mappings from one graph into another, and leanness.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rdfkit/algebra/search.hpp"
#include "rdfkit/graph.hpp"

namespace rdfkit {

namespace detail {

class HomSearch {
 public:
  HomSearch(const Graph& h, const Graph& g, const Triple* excluded, StepCounter& counter)
      : g_(g), excluded_(excluded), counter_(counter) {
    for (const auto& t : g) {
      if (excluded_ && t == *excluded_) continue;
      by_p_[t.predicate()].push_back(&t);
      by_ps_[{t.predicate(), t.subject()}].push_back(&t);
      by_po_[{t.predicate(), t.object()}].push_back(&t);
    }
    for (const auto& t : h) {
      if (t.has_blank()) {
        pending_.push_back(&t);
      } else {
        ground_.push_back(&t);
      }
    }
  }

  std::optional<TermMapping> run() {
    for (const Triple* t : ground_) {
      if (!present(*t)) return std::nullopt;
    }
    if (!extend()) return std::nullopt;
    return binding_;
  }

 private:
  using Candidates = std::vector<const Triple*>;
  static inline const Candidates kEmpty{};

  const Graph& g_;
  const Triple* excluded_;
  StepCounter& counter_;
  std::map<Iri, Candidates> by_p_;
  std::map<std::pair<Iri, Term>, Candidates> by_ps_;
  std::map<std::pair<Iri, Term>, Candidates> by_po_;
  std::vector<const Triple*> ground_;
  std::vector<const Triple*> pending_;
  TermMapping binding_;

  bool present(const Triple& t) const {
    return g_.contains(t) && !(excluded_ && t == *excluded_);
  }

  // The bound image of `t`, or nullopt for an unbound blank node.
  std::optional<Term> image(const Term& t) const {
    if (auto* b = std::get_if<BlankNode>(&t)) {
      if (auto it = binding_.find(*b); it != binding_.end()) return it->second;
      return std::nullopt;
    }
    return t;
  }

  template <typename Map, typename Key>
  static const Candidates& lookup(const Map& m, const Key& k) {
    auto it = m.find(k);
    return it == m.end() ? kEmpty : it->second;
  }

  const Candidates& candidates(const Triple& t) const {
    const auto s = image(t.subject());
    const auto o = image(t.object());
    if (s) return lookup(by_ps_, std::make_pair(t.predicate(), *s));
    if (o) return lookup(by_po_, std::make_pair(t.predicate(), *o));
    return lookup(by_p_, t.predicate());
  }

  // Binds the blank nodes of `pattern` so that it equals `target`. Returns
  // the newly bound nodes, or nullopt on conflict (nothing left bound).
  std::optional<std::vector<BlankNode>> unify(const Triple& pattern, const Triple& target) {
    std::vector<BlankNode> bound;
    auto match = [&](const Term& p, const Term& v) {
      if (auto* b = std::get_if<BlankNode>(&p)) {
        auto [it, inserted] = binding_.emplace(*b, v);
        if (inserted) {
          bound.push_back(*b);
          return true;
        }
        return it->second == v;
      }
      return p == v;
    };
    if (match(pattern.subject(), target.subject()) && match(pattern.object(), target.object())) {
      return bound;
    }
    for (const auto& b : bound) binding_.erase(b);
    return std::nullopt;
  }

  bool extend() {
    if (pending_.empty()) return true;
    // Most constrained pending triple first.
    std::size_t best = 0;
    std::size_t best_size = SIZE_MAX;
    for (std::size_t i = 0; i < pending_.size(); ++i) {
      const std::size_t n = candidates(*pending_[i]).size();
      if (n < best_size) {
        best = i;
        best_size = n;
        if (n == 0) return false;
      }
    }
    const Triple* t = pending_[best];
    std::swap(pending_[best], pending_.back());
    pending_.pop_back();
    for (const Triple* c : candidates(*t)) {
      counter_.step();
      if (auto bound = unify(*t, *c)) {
        if (extend()) return true;
        for (const auto& b : *bound) binding_.erase(b);
      }
    }
    pending_.push_back(t);
    std::swap(pending_[best], pending_.back());
    return false;
  }
};

}  // namespace detail

// Searches for ν with ν(h) ⊆ g, or ν(h) ⊆ g \ {*excluded} when `excluded`
// is given. Ground triples of h are checked by lookup before any search
// node is expanded, so a ground h costs zero steps.
inline SearchResult<TermMapping> homomorphism_search(const Graph& h, const Graph& g,
                                                     const SearchBudget& budget = {},
                                                     const Triple* excluded = nullptr) {
  detail::StepCounter counter(budget);
  SearchResult<TermMapping> result;
  try {
    detail::HomSearch search(h, g, excluded, counter);
    if (auto m = search.run()) {
      result.status = SearchStatus::Found;
      result.witness = std::move(m);
    }
  } catch (const BudgetExhausted&) {
    result.status = SearchStatus::Exhausted;
  }
  result.steps = counter.steps();
  return result;
}

inline std::optional<TermMapping> find_homomorphism(const Graph& h, const Graph& g) {
  return homomorphism_search(h, g).witness;
}

struct LeanResult {
  SearchStatus status = SearchStatus::Absent;  // Found: a witness of non-leanness
  std::optional<TermMapping> witness;          // ν with ν(g) a proper subgraph of g
  std::uint64_t steps = 0;

  bool lean() const noexcept { return status == SearchStatus::Absent; }
  bool exhausted() const noexcept { return status == SearchStatus::Exhausted; }
};

// g is not lean iff for some triple t with a blank node there is ν with
// ν(g) ⊆ g \ {t}. Ground triples are fixed by every ν so they never go
// missing from the image. The budget is shared by all the searches.
inline LeanResult lean_check(const Graph& g, const SearchBudget& budget = {}) {
  LeanResult result;
  SearchBudget remaining = budget;
  for (const auto& t : g) {
    if (!t.has_blank()) continue;
    auto r = homomorphism_search(g, g, remaining, &t);
    result.steps += r.steps;
    remaining.max_steps -= std::min(remaining.max_steps, r.steps);
    if (r.status != SearchStatus::Absent) {
      result.status = r.status;
      result.witness = std::move(r.witness);
      return result;
    }
  }
  return result;
}

inline bool is_lean(const Graph& g) { return lean_check(g).lean(); }

}  // namespace rdfkit
