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

#ifndef CARDEX_DEPTREE_HPP_
#define CARDEX_DEPTREE_HPP_

#include <string>
#include <vector>

#include "corpus.hpp"

namespace cardex {

struct DepNode {
  int id = 0;  // 1..n, surface order
  std::string form;
  std::string upos;
  int head = 0;  // 0 for the root
  std::string deprel;
};

// Validated dependency tree: exactly one root, contiguous ids, acyclic.
// Immutable after construction.
class DepTree {
 public:
  DepTree(std::vector<DepNode> nodes, int root_id,
          std::vector<std::vector<int>> children)
      : nodes_(std::move(nodes)), root_id_(root_id), children_(std::move(children)) {}

  int size() const { return static_cast<int>(nodes_.size()); }
  int root_id() const { return root_id_; }
  const DepNode& node(int id) const { return nodes_[static_cast<std::size_t>(id - 1)]; }
  // Child ids in surface order.
  const std::vector<int>& children(int id) const {
    return children_[static_cast<std::size_t>(id)];
  }

 private:
  std::vector<DepNode> nodes_;
  int root_id_;
  std::vector<std::vector<int>> children_;  // indexed by id; [0] = root list
};

// The rules are written against the classic (CLEAR-style) label set:
// nsubjpass / auxpass / dobj / prep+pobj. `ud` adapts Universal Dependencies
// trees onto that set; `classic` is the identity.
enum class LabelScheme { classic, ud };

// Validates and indexes a parsed sentence. Throws InvalidTree on a missing
// or duplicated root, a head cycle, or non-contiguous ids.
DepTree build_tree(const ParsedSentence& ps);

// With LabelScheme::ud rewrites nsubj:pass -> nsubjpass, aux:pass -> auxpass,
// obj -> dobj, and turns obl-with-case into prep+pobj (the case child becomes
// the prep node). Labels outside the rule paths are preserved verbatim.
// Idempotent per scheme.
DepTree adapt_labels(const DepTree& tree, LabelScheme scheme);

// Subtree token ids of a node (including the node), ascending.
std::vector<int> subtree_ids(const DepTree& tree, int node_id);

// FORMs of the given ids in surface order, single-space joined, excluding
// tokens whose case-folded form is "the" and punctuation tokens. Brackets
// count as symbols and are kept even when tagged PUNCT.
std::string phrase_of(const DepTree& tree, std::vector<int> ids);

// phrase_of over the full subtree of a node.
std::string subtree_phrase(const DepTree& tree, int node_id);

}  // namespace cardex

#endif  // CARDEX_DEPTREE_HPP_
