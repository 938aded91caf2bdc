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

#include "rdfkit/annotated.hpp"
#include "rdfkit/datatype.hpp"
#include "rdfkit/error.hpp"
#include "rdfkit/graph.hpp"
#include "rdfkit/prefix.hpp"
#include "rdfkit/term.hpp"

#include "rdfkit/syntax/ntriples.hpp"
#include "rdfkit/syntax/parse_error.hpp"
#include "rdfkit/syntax/turtle.hpp"

#include "rdfkit/algebra/homomorphism.hpp"
#include "rdfkit/algebra/isomorphism.hpp"
#include "rdfkit/algebra/merge.hpp"
#include "rdfkit/algebra/search.hpp"
#include "rdfkit/algebra/skolem.hpp"
#include "rdfkit/algebra/well_behaved.hpp"

#include "rdfkit/semantics/entailment.hpp"
#include "rdfkit/semantics/interpretation.hpp"
#include "rdfkit/semantics/rules.hpp"

#include "rdfkit/reification.hpp"
