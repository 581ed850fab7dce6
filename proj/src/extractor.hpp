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

#ifndef CARDEX_EXTRACTOR_HPP_
#define CARDEX_EXTRACTOR_HPP_

#include <optional>
#include <string>
#include <vector>

#include "deptree.hpp"
#include "gazetteer.hpp"

namespace cardex {

// Where a triple came from.
struct Provenance {
  std::string doc_id;
  int sentence_index = 0;
  std::string sentence_text;

  auto operator<=>(const Provenance&) const = default;
};

// The four rule parameters tracked while a rule walks the tree: grammatical
// subject, object, the node ids forming the relation phrase (auxiliaries +
// verb core + preposition), and the voice flag.
struct ExtractionState {
  int subject = 0;
  int obj = 0;
  std::vector<int> relation;
  bool is_passive = false;
};

enum class TripleCategory { licence, application, unknown };

const char* triple_category_name(TripleCategory c);
std::optional<TripleCategory> triple_category_from_name(const std::string& name);

struct Triple {
  std::string subject;   // canonical model name
  std::string relation;  // surface phrase, original casing
  std::string object;    // phrase under the object head
  TripleCategory category = TripleCategory::unknown;
  Provenance provenance;

  auto operator<=>(const Triple&) const = default;
};

// True iff the main verb has both an nsubjpass and an auxpass child. The
// main verb is the root when the root is verbal; an ADJ root with an aux/cop
// child is normalized by treating that copula as the verb node. Throws
// NoPredicate when no verb/adjective core exists.
bool detect_voice(const DepTree& tree);

// Passive construction: nsubjpass subject, aux/auxpass chain + verb + first
// prep as the relation, that prep's pobj as the object. Returns nothing when
// any part is missing.
std::optional<ExtractionState> extract_passive(const DepTree& tree);

// Active construction: nsubj subject, then the first matching branch in
// priority order: (1) direct object, (2) adjectival complement with a prep
// phrase, (3) prep phrase on the verb.
std::optional<ExtractionState> extract_active(const DepTree& tree);

// FORMs of the relation node ids in surface order, single-space joined.
std::string assemble_relation(const DepTree& tree, const ExtractionState& state);

// Resolves the state into a Triple: the subject phrase must normalize to a
// canonical model name (RejectedSubject otherwise); the object category is
// licence/application when a gazetteer alias matches the object phrase or a
// sub-span of it, else unknown (kept but flagged).
Triple validate_triple(const ExtractionState& state, const DepTree& tree,
                       const GazetteerSet& gazetteers, const Provenance& provenance);

// Full per-sentence pipeline: voice detection, the matching branch,
// validation, and one extra triple per conjunct of the object head. Rule
// misses yield an empty list, never an error.
std::vector<Triple> extract_sentence(const DepTree& tree,
                                     const GazetteerSet& gazetteers,
                                     const Provenance& provenance);

}  // namespace cardex

#endif  // CARDEX_EXTRACTOR_HPP_
