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

#ifndef CARDEX_KG_HPP_
#define CARDEX_KG_HPP_

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "extractor.hpp"

namespace cardex {

enum class NodeKind { model, licence, application, unknown };

const char* node_kind_name(NodeKind k);

// (from, to, label) — the unique key of an edge; duplicates merge provenance.
using EdgeKey = std::tuple<std::string, std::string, std::string>;

// Typed nodes with labeled directed edges. Model nodes only ever appear as
// edge sources. Immutable once built; queries are read-only.
class KnowledgeGraph {
 public:
  // InvariantViolation if the id already exists with a different kind.
  void add_node(const std::string& id, NodeKind kind);
  // Endpoints must exist; duplicate (from, to, label) merges provenance.
  void add_edge(const std::string& from, const std::string& to,
                const std::string& label, const Provenance& provenance);

  bool has_node(const std::string& id) const { return nodes_.count(id) != 0; }
  NodeKind kind(const std::string& id) const;  // UnknownNode if absent
  std::size_t in_degree(const std::string& id) const;

  const std::map<std::string, NodeKind>& nodes() const { return nodes_; }
  const std::map<EdgeKey, std::vector<Provenance>>& edges() const { return edges_; }

  bool operator==(const KnowledgeGraph&) const = default;

 private:
  std::map<std::string, NodeKind> nodes_;
  std::map<EdgeKey, std::vector<Provenance>> edges_;  // provenance kept sorted
};

enum class Direction { out, undirected };

struct Traversal {
  std::string start;
  int max_depth = 0;
  // First-encounter preorder; each node once, depths <= max_depth.
  std::vector<std::pair<std::string, int>> visited;
  // (from, label, to) in traversal orientation, discovery edges only.
  std::vector<std::tuple<std::string, std::string, std::string>> edges_taken;
};

struct PathStep {
  std::string label;
  std::string node;     // the node this step arrives at
  bool forward = true;  // false when an edge is walked target-to-source
};

struct Path {
  std::string start;
  std::vector<PathStep> steps;
};

// One node per canonical subject/object, one merged edge per distinct
// (subject, object, relation). Unknown-category triples are skipped unless
// include_unknown is set.
KnowledgeGraph build_graph(const std::vector<Triple>& triples,
                           bool include_unknown = false);

// Depth-capped depth-first traversal with lexicographic child order. A node
// re-encountered at a strictly shallower depth is expanded again (though
// listed once), so the visited set equals everything reachable within
// max_depth.
Traversal dfs_query(const KnowledgeGraph& g, const std::string& start,
                    int max_depth, Direction direction);

// All simple paths from -> to of length <= max_depth, lexicographic order.
std::vector<Path> find_paths(const KnowledgeGraph& g, const std::string& from,
                             const std::string& to, int max_depth,
                             Direction direction);

}  // namespace cardex

#endif  // CARDEX_KG_HPP_
