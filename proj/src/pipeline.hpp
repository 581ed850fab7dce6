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

#ifndef CARDEX_PIPELINE_HPP_
#define CARDEX_PIPELINE_HPP_

#include <string>
#include <vector>

#include "corpus.hpp"
#include "eval.hpp"
#include "extractor.hpp"
#include "gazetteer.hpp"

namespace cardex {

std::string read_file(const std::string& path);

GazetteerSet load_gazetteers(const std::string& models_path,
                             const std::string& licences_path,
                             const std::string& applications_path);

// Parse, optionally adapt labels, extract every sentence; output is sorted
// by (doc_id, sentence_index) with in-sentence emission order preserved.
std::vector<Triple> extract_from_conllu(const std::string& conllu_text,
                                        const std::string& doc_id,
                                        LabelScheme scheme,
                                        const GazetteerSet& gazetteers);

// Candidate-review export: one JSON line per candidate sentence with its
// mentions, for the manual screening step.
std::string candidates_jsonl(const Document& doc, const GazetteerSet& gazetteers);

std::string triples_to_jsonl(const std::vector<Triple>& triples);
std::vector<Triple> triples_from_jsonl(const std::string& jsonl);

}  // namespace cardex

#endif  // CARDEX_PIPELINE_HPP_
