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

#include <set>
#include <string>

#include "rdfkit/algebra/search.hpp"
#include "rdfkit/graph.hpp"

namespace rdfkit {

// Renames every blank node of `g` that appears in `taken` to a label absent
// from both `taken` and `g`. The other blank nodes keep their labels.
inline BlankBijection rename_apart(const Graph& g, const std::set<BlankNode>& taken) {
  const auto own = blank_nodes(g);
  BlankBijection m;
  std::set<BlankNode> used = taken;
  used.insert(own.begin(), own.end());
  for (const auto& b : own) {
    if (!taken.count(b)) {
      m.emplace(b, b);
      continue;
    }
    for (std::size_t k = 1;; ++k) {
      BlankNode candidate(b.label() + "_" + std::to_string(k));
      if (used.insert(candidate).second) {
        m.emplace(b, candidate);
        break;
      }
    }
  }
  return m;
}

// Union of g1 and a copy of g2 sharing no blank nodes with g1. g1 keeps its
// labels; colliding g2 labels get a numeric suffix.
inline Graph merge(const Graph& g1, const Graph& g2) {
  const Graph renamed = rdfkit::apply(rename_apart(g2, blank_nodes(g1)), g2);
  return graph_union(g1, renamed);
}

}  // namespace rdfkit
