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

#include <map>
#include <set>
#include <vector>

#include "rdfkit/graph.hpp"

namespace rdfkit {

struct WellBehavedOptions {
  // IRIs whose use disqualifies a graph. Empty by default.
  std::set<Iri> deprecated_terms;
};

namespace detail {

inline std::map<BlankNode, std::size_t> blank_object_counts(const Graph& g) {
  std::map<BlankNode, std::size_t> counts;
  for (const auto& t : g) {
    if (auto* b = std::get_if<BlankNode>(&t.object())) ++counts[*b];
  }
  return counts;
}

// True when the subject-to-object edges between blank nodes form a cycle.
inline bool has_blank_cycle(const Graph& g) {
  std::map<BlankNode, std::vector<BlankNode>> edges;
  for (const auto& t : g) {
    auto* s = std::get_if<BlankNode>(&t.subject());
    auto* o = std::get_if<BlankNode>(&t.object());
    if (s && o) edges[*s].push_back(*o);
  }
  enum class Mark { Unvisited, Active, Done };
  std::map<BlankNode, Mark> mark;
  // Iterative DFS: (node, next child index).
  for (const auto& [root, unused] : edges) {
    if (mark[root] != Mark::Unvisited) continue;
    std::vector<std::pair<BlankNode, std::size_t>> stack{{root, 0}};
    mark[root] = Mark::Active;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      auto it = edges.find(node);
      if (it == edges.end() || next >= it->second.size()) {
        mark[node] = Mark::Done;
        stack.pop_back();
        continue;
      }
      const BlankNode child = it->second[next++];
      Mark& m = mark[child];
      if (m == Mark::Active) return true;
      if (m == Mark::Unvisited) {
        m = Mark::Active;
        stack.emplace_back(child, 0);
      }
    }
  }
  return false;
}

}  // namespace detail

// A graph is well-behaved when Turtle can write it with nested [ ] blocks and
// no blank node labels: every blank node is the object of at most one triple
// and blank nodes never reach themselves through subject-to-object edges.
inline bool is_well_behaved(const Graph& g, const WellBehavedOptions& options = {}) {
  if (!options.deprecated_terms.empty()) {
    for (const auto& iri : iris(g)) {
      if (options.deprecated_terms.count(iri)) return false;
    }
  }
  for (const auto& [b, n] : detail::blank_object_counts(g)) {
    if (n > 1) return false;
  }
  return !detail::has_blank_cycle(g);
}

}  // namespace rdfkit
