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

#include "extractor.hpp"

#include <algorithm>

#include "errors.hpp"

namespace cardex {

namespace {

bool is_verbish(const std::string& upos) { return upos == "VERB" || upos == "AUX"; }

// Predicate core of the sentence. `verb` is the node the relation phrase is
// anchored on; `adj` is set when the root is an adjectival predicate whose
// copula was promoted to verb (copular normalization).
struct Core {
  int verb = 0;
  int adj = 0;
};

std::optional<Core> resolve_core(const DepTree& t) {
  const DepNode& root = t.node(t.root_id());
  if (is_verbish(root.upos)) return Core{root.id, 0};
  if (root.upos == "ADJ") {
    for (int c : t.children(root.id)) {
      const std::string& d = t.node(c).deprel;
      if (d == "aux" || d == "auxpass" || d == "cop") return Core{c, root.id};
    }
  }
  return std::nullopt;
}

// Functional children live on the root in copular parses and on the verb
// otherwise; the rules search both, in surface order.
std::vector<int> core_children(const DepTree& t, const Core& core) {
  std::vector<int> out = t.children(core.verb);
  if (core.adj != 0) {
    for (int c : t.children(core.adj))
      if (c != core.verb) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int first_with_deprel(const DepTree& t, const std::vector<int>& ids,
                      const std::string& deprel) {
  for (int id : ids)
    if (t.node(id).deprel == deprel) return id;
  return 0;
}

std::vector<int> aux_nodes(const DepTree& t, const Core& core) {
  std::vector<int> out;
  for (int id : core_children(t, core)) {
    const std::string& d = t.node(id).deprel;
    if ((d == "aux" || d == "auxpass") && id != core.verb) out.push_back(id);
  }
  return out;
}

int first_pobj(const DepTree& t, int prep) {
  return first_with_deprel(t, t.children(prep), "pobj");
}

Core require_core(const DepTree& t) {
  auto core = resolve_core(t);
  if (!core) throw NoPredicate();
  return *core;
}

ExtractionState make_state(int subject, int obj, std::vector<int> relation,
                           bool passive) {
  std::sort(relation.begin(), relation.end());
  return ExtractionState{subject, obj, std::move(relation), passive};
}

// Phrase under `node_id`, minus coordination at the top level: cc/conj
// children of the head are pruned so each coordinated triple carries only
// its own object.
std::string head_phrase(const DepTree& t, int node_id) {
  std::vector<int> pruned;
  for (int c : t.children(node_id)) {
    const std::string& d = t.node(c).deprel;
    if (d == "cc" || d == "conj") {
      for (int id : subtree_ids(t, c)) pruned.push_back(id);
    }
  }
  if (pruned.empty()) return subtree_phrase(t, node_id);
  std::sort(pruned.begin(), pruned.end());
  std::vector<int> kept;
  for (int id : subtree_ids(t, node_id))
    if (!std::binary_search(pruned.begin(), pruned.end(), id)) kept.push_back(id);
  return phrase_of(t, kept);
}

}  // namespace

const char* triple_category_name(TripleCategory c) {
  switch (c) {
    case TripleCategory::licence: return "licence";
    case TripleCategory::application: return "application";
    case TripleCategory::unknown: return "unknown";
  }
  return "unknown";
}

std::optional<TripleCategory> triple_category_from_name(const std::string& name) {
  if (name == "licence") return TripleCategory::licence;
  if (name == "application") return TripleCategory::application;
  if (name == "unknown") return TripleCategory::unknown;
  return std::nullopt;
}

bool detect_voice(const DepTree& tree) {
  const Core core = require_core(tree);
  const std::vector<int> kids = core_children(tree, core);
  return first_with_deprel(tree, kids, "nsubjpass") != 0 &&
         first_with_deprel(tree, kids, "auxpass") != 0;
}

std::optional<ExtractionState> extract_passive(const DepTree& tree) {
  const auto core = resolve_core(tree);
  if (!core) return std::nullopt;
  const std::vector<int> kids = core_children(tree, *core);
  const int subject = first_with_deprel(tree, kids, "nsubjpass");
  if (subject == 0) return std::nullopt;
  const int prep = first_with_deprel(tree, kids, "prep");
  if (prep == 0) return std::nullopt;
  const int obj = first_pobj(tree, prep);
  if (obj == 0) return std::nullopt;
  std::vector<int> relation = aux_nodes(tree, *core);
  relation.push_back(core->verb);
  relation.push_back(prep);
  return make_state(subject, obj, std::move(relation), true);
}

std::optional<ExtractionState> extract_active(const DepTree& tree) {
  const auto core = resolve_core(tree);
  if (!core) return std::nullopt;
  const std::vector<int> kids = core_children(tree, *core);
  const int subject = first_with_deprel(tree, kids, "nsubj");
  if (subject == 0) return std::nullopt;

  // Branch 1: direct object.
  if (const int dobj = first_with_deprel(tree, kids, "dobj"); dobj != 0) {
    std::vector<int> relation = aux_nodes(tree, *core);
    relation.push_back(core->verb);
    return make_state(subject, dobj, std::move(relation), false);
  }

  // Branch 2: adjectival complement with a prep phrase on the adjective or
  // the verb.
  const int acomp = core->adj != 0 ? core->adj
                                   : first_with_deprel(tree, kids, "acomp");
  if (acomp != 0) {
    int prep = first_with_deprel(tree, tree.children(acomp), "prep");
    if (prep == 0) prep = first_with_deprel(tree, kids, "prep");
    if (prep != 0) {
      if (const int obj = first_pobj(tree, prep); obj != 0) {
        std::vector<int> relation = aux_nodes(tree, *core);
        relation.push_back(core->verb);
        relation.push_back(acomp);
        relation.push_back(prep);
        return make_state(subject, obj, std::move(relation), false);
      }
    }
  }

  // Branch 3: prep phrase directly on the verb.
  if (const int prep = first_with_deprel(tree, kids, "prep"); prep != 0) {
    if (const int obj = first_pobj(tree, prep); obj != 0) {
      std::vector<int> relation = aux_nodes(tree, *core);
      relation.push_back(core->verb);
      relation.push_back(prep);
      return make_state(subject, obj, std::move(relation), false);
    }
  }
  return std::nullopt;
}

std::string assemble_relation(const DepTree& tree, const ExtractionState& state) {
  std::vector<int> ids = state.relation;
  std::sort(ids.begin(), ids.end());
  std::string out;
  for (int id : ids) {
    if (!out.empty()) out.push_back(' ');
    out += tree.node(id).form;
  }
  return out;
}

Triple validate_triple(const ExtractionState& state, const DepTree& tree,
                       const GazetteerSet& gazetteers, const Provenance& provenance) {
  const std::string subject_phrase = head_phrase(tree, state.subject);
  const auto canonical = normalize_mention(subject_phrase, gazetteers.models);
  if (!canonical) throw RejectedSubject(subject_phrase);

  std::string object_phrase = head_phrase(tree, state.obj);
  if (object_phrase.empty()) object_phrase = tree.node(state.obj).form;

  const std::vector<std::string> object_tokens = tokenize(object_phrase);
  TripleCategory category = TripleCategory::unknown;
  if (!find_mentions(object_tokens, gazetteers.licences).empty())
    category = TripleCategory::licence;
  else if (!find_mentions(object_tokens, gazetteers.applications).empty())
    category = TripleCategory::application;

  return Triple{*canonical, assemble_relation(tree, state), object_phrase,
                category, provenance};
}

std::vector<Triple> extract_sentence(const DepTree& tree,
                                     const GazetteerSet& gazetteers,
                                     const Provenance& provenance) {
  std::optional<ExtractionState> state;
  try {
    state = detect_voice(tree) ? extract_passive(tree) : extract_active(tree);
  } catch (const NoPredicate&) {
    return {};
  }
  if (!state) return {};

  // One triple for the object head plus one per conjunct, sharing subject
  // and relation.
  std::vector<int> objects{state->obj};
  for (int c : tree.children(state->obj))
    if (tree.node(c).deprel == "conj") objects.push_back(c);

  std::vector<Triple> out;
  for (int obj : objects) {
    ExtractionState variant = *state;
    variant.obj = obj;
    try {
      out.push_back(validate_triple(variant, tree, gazetteers, provenance));
    } catch (const RejectedSubject&) {
      return {};  // same subject for every variant; nothing to keep
    }
  }
  return out;
}

}  // namespace cardex
