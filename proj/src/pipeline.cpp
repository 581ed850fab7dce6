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

#include "pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "deptree.hpp"
#include "errors.hpp"
#include "textutil.hpp"

namespace cardex {

namespace {

using nlohmann::json;

json mention_to_json(const Mention& m) {
  return {{"category", category_name(m.category)},
          {"canonical", m.canonical},
          {"surface", m.surface},
          {"span", {m.begin, m.end}}};
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GazetteerSet load_gazetteers(const std::string& models_path,
                             const std::string& licences_path,
                             const std::string& applications_path) {
  GazetteerSet set;
  set.models = load_gazetteer(models_path, Category::model);
  set.licences = load_gazetteer(licences_path, Category::licence);
  set.applications = load_gazetteer(applications_path, Category::application);
  return set;
}

std::vector<Triple> extract_from_conllu(const std::string& conllu_text,
                                        const std::string& doc_id,
                                        LabelScheme scheme,
                                        const GazetteerSet& gazetteers) {
  std::vector<Triple> out;
  for (const ParsedSentence& ps : parse_conllu(conllu_text, doc_id)) {
    DepTree tree = build_tree(ps);
    if (scheme == LabelScheme::ud) tree = adapt_labels(tree, LabelScheme::ud);
    Provenance prov{ps.doc_id, ps.index, reconstruct_text(ps)};
    for (Triple& t : extract_sentence(tree, gazetteers, prov))
      out.push_back(std::move(t));
  }
  std::stable_sort(out.begin(), out.end(), [](const Triple& a, const Triple& b) {
    if (a.provenance.doc_id != b.provenance.doc_id)
      return a.provenance.doc_id < b.provenance.doc_id;
    return a.provenance.sentence_index < b.provenance.sentence_index;
  });
  return out;
}

std::string candidates_jsonl(const Document& doc, const GazetteerSet& gazetteers) {
  std::string out;
  for (const Sentence& s : segment_sentences(doc)) {
    const CandidateVerdict v = select_candidates(s.text, gazetteers);
    if (!v.is_candidate) continue;
    json mentions = json::array();
    for (const Mention& m : v.model_mentions) mentions.push_back(mention_to_json(m));
    for (const Mention& m : v.licence_mentions) mentions.push_back(mention_to_json(m));
    for (const Mention& m : v.application_mentions)
      mentions.push_back(mention_to_json(m));
    json j;
    j["doc_id"] = s.doc_id;
    j["sentence_index"] = s.index;
    j["text"] = s.text;
    j["mentions"] = std::move(mentions);
    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

std::string triples_to_jsonl(const std::vector<Triple>& triples) {
  std::string out;
  for (const Triple& t : triples) {
    json j;
    j["subject"] = t.subject;
    j["relation"] = t.relation;
    j["object"] = t.object;
    j["category"] = triple_category_name(t.category);
    j["doc_id"] = t.provenance.doc_id;
    j["sentence_index"] = t.provenance.sentence_index;
    j["sentence_text"] = t.provenance.sentence_text;
    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

std::vector<Triple> triples_from_jsonl(const std::string& jsonl) {
  std::vector<Triple> out;
  std::size_t line_no = 0;
  for (std::string line : text::split(jsonl, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw FormatError(line_no, e.what());
    }
    try {
      Triple t;
      t.subject = j.at("subject").get<std::string>();
      t.relation = j.at("relation").get<std::string>();
      t.object = j.at("object").get<std::string>();
      const std::string cat = j.at("category").get<std::string>();
      const auto category = triple_category_from_name(cat);
      if (!category) throw FormatError(line_no, "unknown category \"" + cat + "\"");
      t.category = *category;
      t.provenance.doc_id = j.at("doc_id").get<std::string>();
      t.provenance.sentence_index = j.at("sentence_index").get<int>();
      t.provenance.sentence_text = j.value("sentence_text", std::string());
      if (t.subject.empty() || t.relation.empty() || t.object.empty())
        throw FormatError(line_no, "triple slots must be non-empty");
      out.push_back(std::move(t));
    } catch (const json::exception& e) {
      throw FormatError(line_no, e.what());
    }
  }
  return out;
}

}  // namespace cardex
