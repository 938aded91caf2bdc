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

#include "support.hpp"

namespace rdfkit::testing {

// The profile structure with resources named after their roles. `verbatim`
// keeps the extension table exactly as first drafted: it swaps the name and
// homepage pairs and hangs the label on the name value.
inline FiniteInterpretation profile_structure(bool verbatim) {
  FiniteInterpretation i;
  i.resources = {"type", "name", "homepage", "label", "js", "Person", "jsName", "univ", "univLabel"};
  i.properties = {"type", "name", "homepage", "label"};
  i.ext["type"] = {{"js", "Person"}};
  if (verbatim) {
    i.ext["name"] = {{"js", "univ"}};
    i.ext["homepage"] = {{"js", "jsName"}};
    i.ext["label"] = {{"jsName", "univLabel"}};
  } else {
    i.ext["name"] = {{"js", "jsName"}};
    i.ext["homepage"] = {{"js", "univ"}};
    i.ext["label"] = {{"univ", "univLabel"}};
  }
  i.names.insert_or_assign(vocab::rdf_type(), "type");
  i.names.insert_or_assign(foaf("name"), "name");
  i.names.insert_or_assign(foaf("workplaceHomepage"), "homepage");
  i.names.insert_or_assign(vocab::rdfs("label"), "label");
  i.names.insert_or_assign(Iri("http://example.com/p#js"), "js");
  i.names.insert_or_assign(foaf("Person"), "Person");
  i.names.insert_or_assign(Iri("http://univ.com/"), "univ");
  i.literal_values.insert_or_assign(lit("John Smith"), "jsName");
  i.literal_values.insert_or_assign(lit("University"), "univLabel");
  return i;
}

// Adds rdf:Property and types every property with it, which is what the RDF
// conditions need before the structure can be audited.
inline FiniteInterpretation extended_profile_structure() {
  auto i = profile_structure(false);
  i.resources.insert("Property");
  i.names.insert_or_assign(vocab::rdf_property(), "Property");
  for (const auto& p : i.properties) i.ext["type"].insert({p, "Property"});
  return i;
}

}  // namespace rdfkit::testing
