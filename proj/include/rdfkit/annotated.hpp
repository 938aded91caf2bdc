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

#include <utility>
#include <vector>

#include "rdfkit/graph.hpp"
#include "rdfkit/prefix.hpp"

namespace rdfkit {

using Annotation = std::pair<Iri, Term>;

// A statement plus metadata about it. Annotation order is preserved.
struct AnnotatedStatement {
  Triple base;
  std::vector<Annotation> annotations;

  friend bool operator==(const AnnotatedStatement&, const AnnotatedStatement&) = default;
};

// `s p << a b c >>`: an embedded triple in object position.
struct EmbeddedReference {
  Term subject;
  Iri predicate;
  Triple embedded;

  friend bool operator==(const EmbeddedReference&, const EmbeddedReference&) = default;
};

// Result of parsing a document with embedded triples enabled. `dataset`
// holds the ordinary triples; statements about embedded triples are kept
// apart and never appear in it. Embedded triples are only accepted in the
// default graph.
struct StarDocument {
  Dataset dataset;
  std::vector<AnnotatedStatement> annotated;
  std::vector<EmbeddedReference> references;
  PrefixMap prefixes;
};

}  // namespace rdfkit
