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

#include "deptree.hpp"

#include <algorithm>

#include "errors.hpp"
#include "textutil.hpp"

namespace cardex {

namespace {

DepTree index_nodes(std::vector<DepNode> nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 0) throw InvalidTree("empty sentence");
  int root_id = 0;
  for (const DepNode& nd : nodes) {
    if (nd.head < 0 || nd.head > n) throw InvalidTree("head id out of range");
    if (nd.head == 0) {
      if (root_id != 0) throw InvalidTree("multiple roots");
      root_id = nd.id;
    }
  }
  if (root_id == 0) throw InvalidTree("no root");

  // Walk head chains with tricolor marking to reject cycles.
  std::vector<int> state(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    std::vector<int> path;
    int u = v;
    while (u != 0 && state[static_cast<std::size_t>(u)] == 0) {
      state[static_cast<std::size_t>(u)] = 1;
      path.push_back(u);
      u = nodes[static_cast<std::size_t>(u - 1)].head;
      if (u != 0 && state[static_cast<std::size_t>(u)] == 1)
        throw InvalidTree("head cycle through token " + std::to_string(u));
    }
    for (int p : path) state[static_cast<std::size_t>(p)] = 2;
  }

  std::vector<std::vector<int>> children(static_cast<std::size_t>(n) + 1);
  for (const DepNode& nd : nodes)
    children[static_cast<std::size_t>(nd.head)].push_back(nd.id);
  return DepTree(std::move(nodes), root_id, std::move(children));
}

bool is_bracket(const std::string& form) {
  return form == "(" || form == ")" || form == "[" || form == "]" ||
         form == "{" || form == "}";
}

}  // namespace

DepTree build_tree(const ParsedSentence& ps) {
  std::vector<DepNode> nodes;
  nodes.reserve(ps.rows.size());
  int expect = 1;
  for (const ConlluRow& r : ps.rows) {
    if (r.id != expect++) throw InvalidTree("token ids not contiguous from 1");
    nodes.push_back({r.id, r.form, r.upos, r.head, r.deprel});
  }
  return index_nodes(std::move(nodes));
}

DepTree adapt_labels(const DepTree& tree, LabelScheme scheme) {
  std::vector<DepNode> nodes;
  nodes.reserve(static_cast<std::size_t>(tree.size()));
  for (int id = 1; id <= tree.size(); ++id) nodes.push_back(tree.node(id));
  if (scheme == LabelScheme::classic) return index_nodes(std::move(nodes));

  for (DepNode& nd : nodes) {
    if (nd.deprel == "nsubj:pass") nd.deprel = "nsubjpass";
    else if (nd.deprel == "aux:pass") nd.deprel = "auxpass";
    else if (nd.deprel == "obj") nd.deprel = "dobj";
  }
  // obl-with-case becomes prep+pobj: the case child moves up to the obl's
  // head and the obl noun reattaches beneath it. An obl without a case child
  // stays as is; no rule consumes it.
  struct Rewire { int obl; int case_child; int obl_head; };
  std::vector<Rewire> rewires;
  for (const DepNode& nd : nodes) {
    if (nd.deprel != "obl" && nd.deprel.rfind("obl:", 0) != 0) continue;
    for (int c : tree.children(nd.id)) {
      if (nodes[static_cast<std::size_t>(c - 1)].deprel == "case") {
        rewires.push_back({nd.id, c, nd.head});
        break;  // leftmost case child
      }
    }
  }
  for (const Rewire& rw : rewires) {
    DepNode& prep = nodes[static_cast<std::size_t>(rw.case_child - 1)];
    DepNode& obl = nodes[static_cast<std::size_t>(rw.obl - 1)];
    prep.head = rw.obl_head;
    prep.deprel = "prep";
    obl.head = rw.case_child;
    obl.deprel = "pobj";
  }
  return index_nodes(std::move(nodes));
}

std::vector<int> subtree_ids(const DepTree& tree, int node_id) {
  std::vector<int> out;
  std::vector<int> stack{node_id};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (int c : tree.children(u)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string phrase_of(const DepTree& tree, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  std::string out;
  for (int id : ids) {
    const DepNode& nd = tree.node(id);
    if (text::fold_case(nd.form) == "the") continue;
    if (nd.upos == "PUNCT" && !is_bracket(nd.form)) continue;
    if (!out.empty()) out.push_back(' ');
    out += nd.form;
  }
  return out;
}

std::string subtree_phrase(const DepTree& tree, int node_id) {
  return phrase_of(tree, subtree_ids(tree, node_id));
}

}  // namespace cardex
