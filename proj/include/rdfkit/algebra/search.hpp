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

#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>

#include "rdfkit/graph.hpp"

namespace rdfkit {

// Bijection between the blank nodes of two graphs; IRIs and literals map to
// themselves implicitly.
using BlankBijection = std::map<BlankNode, BlankNode>;

// Blank nodes to arbitrary terms; IRIs and literals are fixed pointwise.
using TermMapping = std::map<BlankNode, Term>;

// Caps the number of search nodes a backtracking procedure may expand.
struct SearchBudget {
  std::uint64_t max_steps = std::numeric_limits<std::uint64_t>::max();

  static SearchBudget unlimited() { return {}; }
};

enum class SearchStatus {
  Found,      // a witness exists and is returned
  Absent,     // the search space was exhausted without a witness
  Exhausted,  // the budget ran out; the answer is unknown
};

template <typename Witness>
struct SearchResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<Witness> witness;
  std::uint64_t steps = 0;  // search nodes expanded

  bool found() const noexcept { return status == SearchStatus::Found; }
  bool exhausted() const noexcept { return status == SearchStatus::Exhausted; }
};

class BudgetExhausted {};

namespace detail {

class StepCounter {
 public:
  explicit StepCounter(const SearchBudget& b) : max_(b.max_steps) {}

  void step() {
    if (++steps_ > max_) throw BudgetExhausted{};
  }
  std::uint64_t steps() const noexcept { return steps_; }

 private:
  std::uint64_t max_;
  std::uint64_t steps_ = 0;
};

inline Term apply_mapping(const TermMapping& m, const Term& t) {
  if (auto* b = std::get_if<BlankNode>(&t)) {
    if (auto it = m.find(*b); it != m.end()) return it->second;
  }
  return t;
}

}  // namespace detail

// ν(g): the image of every triple under the mapping. Throws LiteralSubject
// when a blank subject is mapped to a literal.
inline Graph apply(const TermMapping& m, const Graph& g) {
  Graph out;
  for (const auto& t : g) {
    out.insert(Triple(detail::apply_mapping(m, t.subject()), t.predicate(),
                      detail::apply_mapping(m, t.object())));
  }
  return out;
}

inline Graph apply(const BlankBijection& m, const Graph& g) {
  TermMapping tm;
  for (const auto& [from, to] : m) tm.emplace(from, Term(to));
  return rdfkit::apply(tm, g);
}

}  // namespace rdfkit
