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

#include "kg.hpp"

#include <algorithm>

#include "errors.hpp"

namespace cardex {

namespace {

NodeKind kind_of_category(TripleCategory c) {
  switch (c) {
    case TripleCategory::licence: return NodeKind::licence;
    case TripleCategory::application: return NodeKind::application;
    case TripleCategory::unknown: return NodeKind::unknown;
  }
  return NodeKind::unknown;
}

// (neighbor, label, forward) triples in lexicographic order.
std::vector<std::tuple<std::string, std::string, bool>> neighbors(
    const KnowledgeGraph& g, const std::string& u, Direction dir) {
  std::vector<std::tuple<std::string, std::string, bool>> out;
  for (const auto& [key, prov] : g.edges()) {
    (void)prov;
    const auto& [from, to, label] = key;
    if (from == u) out.emplace_back(to, label, true);
    if (dir == Direction::undirected && to == u) out.emplace_back(from, label, false);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) {
              if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
              if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
              return std::get<2>(a) > std::get<2>(b);  // forward before reverse
            });
  return out;
}

}  // namespace

const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::model: return "model";
    case NodeKind::licence: return "licence";
    case NodeKind::application: return "application";
    case NodeKind::unknown: return "unknown";
  }
  return "unknown";
}

void KnowledgeGraph::add_node(const std::string& id, NodeKind kind) {
  auto [it, inserted] = nodes_.emplace(id, kind);
  if (!inserted && it->second != kind)
    throw InvariantViolation("node \"" + id + "\" used as both " +
                             node_kind_name(it->second) + " and " +
                             node_kind_name(kind));
}

void KnowledgeGraph::add_edge(const std::string& from, const std::string& to,
                              const std::string& label, const Provenance& provenance) {
  if (!has_node(from)) throw UnknownNode(from);
  if (!has_node(to)) throw UnknownNode(to);
  if (nodes_.at(to) == NodeKind::model)
    throw InvariantViolation("model node \"" + to + "\" may not be an edge target");
  std::vector<Provenance>& prov = edges_[EdgeKey{from, to, label}];
  prov.push_back(provenance);
  std::sort(prov.begin(), prov.end());
}

NodeKind KnowledgeGraph::kind(const std::string& id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw UnknownNode(id);
  return it->second;
}

std::size_t KnowledgeGraph::in_degree(const std::string& id) const {
  std::size_t n = 0;
  for (const auto& [key, prov] : edges_) {
    (void)prov;
    if (std::get<1>(key) == id) ++n;
  }
  return n;
}

KnowledgeGraph build_graph(const std::vector<Triple>& triples, bool include_unknown) {
  KnowledgeGraph g;
  for (const Triple& t : triples) {
    if (t.category == TripleCategory::unknown && !include_unknown) continue;
    g.add_node(t.subject, NodeKind::model);
    g.add_node(t.object, kind_of_category(t.category));
    g.add_edge(t.subject, t.object, t.relation, t.provenance);
  }
  return g;
}

Traversal dfs_query(const KnowledgeGraph& g, const std::string& start,
                    int max_depth, Direction direction) {
  if (!g.has_node(start)) throw UnknownNode(start);
  Traversal tr;
  tr.start = start;
  tr.max_depth = max_depth;
  std::map<std::string, int> best;  // shallowest depth a node was expanded at

  // Recursive DFS. A node found again at a strictly smaller depth is expanded
  // once more so its children are reached within the cap; it is not listed
  // again.
  auto walk = [&](auto&& self, const std::string& u, int depth) -> void {
    const bool first = best.find(u) == best.end();
    if (first) tr.visited.emplace_back(u, depth);
    best[u] = depth;
    if (depth == max_depth) return;
    for (const auto& [v, label, forward] : neighbors(g, u, direction)) {
      (void)forward;
      auto it = best.find(v);
      if (it == best.end()) {
        tr.edges_taken.emplace_back(u, label, v);
        self(self, v, depth + 1);
      } else if (depth + 1 < it->second) {
        self(self, v, depth + 1);
      }
    }
  };
  walk(walk, start, 0);
  return tr;
}

std::vector<Path> find_paths(const KnowledgeGraph& g, const std::string& from,
                             const std::string& to, int max_depth,
                             Direction direction) {
  if (!g.has_node(from)) throw UnknownNode(from);
  if (!g.has_node(to)) throw UnknownNode(to);
  std::vector<Path> out;
  Path current;
  current.start = from;
  std::map<std::string, bool> on_path;

  auto walk = [&](auto&& self, const std::string& u, int depth) -> void {
    if (u == to) {
      out.push_back(current);
      return;  // simple paths end at the target
    }
    if (depth == max_depth) return;
    on_path[u] = true;
    for (const auto& [v, label, forward] : neighbors(g, u, direction)) {
      if (on_path.count(v) && on_path.at(v)) continue;
      current.steps.push_back({label, v, forward});
      self(self, v, depth + 1);
      current.steps.pop_back();
    }
    on_path[u] = false;
  };
  walk(walk, from, 0);
  return out;
}

}  // namespace cardex
