// Copyright 2026 The Cardex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CARDEX_EXPORTER_HPP_
#define CARDEX_EXPORTER_HPP_

#include <string>

#include "kg.hpp"

namespace cardex {

// Directed DOT with the color contract: model nodes blue, licence and
// application nodes red, every edge green with label=relation. Unknown-kind
// nodes (include-unknown graphs) come out gray. Deterministic lexicographic
// emission order; empty graph is exactly "digraph {\n}".
std::string export_dot(const KnowledgeGraph& g);

// GraphML with node key "kind" and edge key "label", deterministic order.
std::string export_graphml(const KnowledgeGraph& g);

// Canonical JSON {nodes:[{id,kind}], edges:[{from,to,label,provenance}]},
// sorted; export -> import -> export is byte-identical.
std::string export_json(const KnowledgeGraph& g);

// Validates all graph invariants on the way in.
KnowledgeGraph import_json(const std::string& text);

}  // namespace cardex

#endif  // CARDEX_EXPORTER_HPP_
