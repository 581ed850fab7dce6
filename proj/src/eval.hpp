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

#ifndef CARDEX_EVAL_HPP_
#define CARDEX_EVAL_HPP_

#include <string>
#include <vector>

#include "extractor.hpp"

namespace cardex {

struct GoldTriple {
  std::string subject;
  std::string relation;
  std::string object;
  std::string category;  // informational; not part of slot matching
};

// One annotated sentence; an empty triple list is an explicit negative.
struct GoldRecord {
  std::string doc_id;
  int sentence_index = 0;
  std::string sentence_text;
  std::vector<GoldTriple> triples;
};

enum class MatchPolicy { strict, loose };

struct MatchResult {
  MatchPolicy policy = MatchPolicy::strict;
  long tp = 0;
  long fp = 0;
  long fn = 0;
  long sentences = 0;        // gold keys union prediction keys
  long exact_sentences = 0;  // predicted set exactly equals gold set
};

struct Metrics {
  long tp = 0, fp = 0, fn = 0;
  double precision = 0, recall = 0, f1 = 0, accuracy = 0;
  long sentences = 0, exact_sentences = 0;
};

// Gold JSONL: one record per line with doc_id, sentence_index, optional
// sentence_text and a triples array. (doc_id, sentence_index) must be unique.
std::vector<GoldRecord> parse_gold(const std::string& jsonl);
std::vector<GoldRecord> load_gold(const std::string& path);

// The relation's content token: the first token that is neither an auxiliary
// nor a preposition ("was released under" -> "released"). Falls back to the
// first token.
std::string main_verb(const std::string& relation);

// Per-sentence set comparison at triple level. Strict: all three slots equal
// after normalization (case fold, "the" removal, whitespace collapse, and
// gazetteer canonicalization of subject/object when gazetteers are given).
// Loose: subject+object as strict, relations match when they share a main
// verb token.
MatchResult match_triples(const std::vector<Triple>& pred,
                          const std::vector<GoldRecord>& gold,
                          MatchPolicy policy,
                          const GazetteerSet* gazetteers = nullptr);

// Ratios with the 0-when-undefined convention; accuracy is the share of
// sentences whose predicted set exactly equals gold (both-empty counts).
Metrics score(const MatchResult& mr);

std::string metrics_json(const Metrics& m, MatchPolicy policy);

// Aligned two-column text table (Metric / Value rows).
std::string metrics_table(const Metrics& m);

}  // namespace cardex

#endif  // CARDEX_EVAL_HPP_
