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

#ifndef CARDEX_GAZETTEER_HPP_
#define CARDEX_GAZETTEER_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace cardex {

enum class Category { model, licence, application };

const char* category_name(Category c);

// Curated dictionary of canonical names plus aliases for one entity category.
// Matching is case-insensitive; a standalone hyphen between alias parts is
// transparent, so "Turing - NLG" and "Turing-NLG" are the same alias.
struct Gazetteer {
  Category category = Category::model;
  // canonical name -> aliases; the canonical is always its own alias.
  std::map<std::string, std::set<std::string>> entries;

  // Matching index: normalized alias key -> canonical name.
  std::unordered_map<std::string, std::string> index;
  std::size_t max_alias_tokens = 0;
};

struct Mention {
  Category category = Category::model;
  std::string canonical;
  std::string surface;  // joined tokens of the span
  int begin = 0;        // token span [begin, end)
  int end = 0;
};

struct CandidateVerdict {
  bool is_candidate = false;
  std::vector<Mention> model_mentions;
  std::vector<Mention> licence_mentions;
  std::vector<Mention> application_mentions;
};

struct GazetteerSet {
  Gazetteer models;
  Gazetteer licences;
  Gazetteer applications;
};

// Lookup tokenization: split on whitespace, then peel leading/trailing
// punctuation into their own tokens; '.' and '-' survive inside alphanumeric
// tokens so "2.0" and "GPT-4" stay intact.
std::vector<std::string> tokenize(const std::string& text);

// File format: one entry per line, `canonical` or `canonical<TAB>a1|a2|...`;
// '#' starts a comment line. Duplicate alias across canonicals is an error.
Gazetteer parse_gazetteer(const std::string& content, Category category);
Gazetteer load_gazetteer(const std::string& path, Category category);

// Greedy left-to-right longest match over case-folded tokens; matched spans
// do not overlap within one category.
std::vector<Mention> find_mentions(const std::vector<std::string>& tokens,
                                   const Gazetteer& gaz);

// Case-fold, collapse whitespace, see through standalone hyphens, then alias
// lookup. The whole surface must be a single alias.
std::optional<std::string> normalize_mention(const std::string& surface,
                                             const Gazetteer& gaz);

// Candidate rule: a model mention plus a licence-or-application mention in
// the same sentence.
CandidateVerdict select_candidates(const std::string& sentence_text,
                                   const GazetteerSet& gazetteers);

}  // namespace cardex

#endif  // CARDEX_GAZETTEER_HPP_
