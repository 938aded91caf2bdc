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
   @file entailment.hpp
   Simple, RDF and RDFS entailment.

   g simply entails h iff h maps into g by a blank node homomorphism. The
   stronger regimes close g under their rule set first and then ask the same
   question. No axiomatic triples are added.
*/

#pragma once

#include "rdfkit/algebra/homomorphism.hpp"
#include "rdfkit/datatype.hpp"
#include "rdfkit/semantics/rules.hpp"

namespace rdfkit {

enum class EntailmentRegime { Simple, Rdf, Rdfs };

using Entailment = SearchResult<TermMapping>;

inline Entailment simple_entailment(const Graph& g, const Graph& h, const SearchBudget& budget = {}) {
  return homomorphism_search(h, g, budget);
}

inline bool simple_entails(const Graph& g, const Graph& h) { return simple_entailment(g, h).found(); }

// The graph whose homomorphic images decide entailment under `regime`.
inline Graph regime_closure(const Graph& g, EntailmentRegime regime, const DatatypeSet& D) {
  switch (regime) {
    case EntailmentRegime::Simple:
      return g;
    case EntailmentRegime::Rdf:
      return apply_rules(g, rdf_rules(), D);
    case EntailmentRegime::Rdfs:
      return apply_rules(g, rdfs_rules(), D);
  }
  return g;
}

inline Entailment entailment(const Graph& g, const Graph& h, EntailmentRegime regime, const DatatypeSet& D,
                             const SearchBudget& budget = {}) {
  return homomorphism_search(h, regime_closure(g, regime, D), budget);
}

inline bool rdf_entails(const Graph& g, const Graph& h, const DatatypeSet& D = default_datatypes()) {
  return entailment(g, h, EntailmentRegime::Rdf, D).found();
}

inline bool rdfs_entails(const Graph& g, const Graph& h, const DatatypeSet& D = default_datatypes()) {
  return entailment(g, h, EntailmentRegime::Rdfs, D).found();
}

}  // namespace rdfkit
