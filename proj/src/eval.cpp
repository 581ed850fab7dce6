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

#include "eval.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "errors.hpp"
#include "textutil.hpp"

namespace cardex {

namespace {

using nlohmann::json;

const std::set<std::string>& auxiliary_words() {
  static const std::set<std::string> kAux = {
      "am",   "is",    "are",   "was",  "were", "be",   "been", "being",
      "has",  "have",  "had",   "do",   "does", "did",  "will", "would",
      "shall", "should", "can", "could", "may", "might", "must"};
  return kAux;
}

const std::set<std::string>& preposition_words() {
  static const std::set<std::string> kPrep = {
      "in",   "on",   "at",   "by",    "for",  "with", "under", "over",
      "to",   "from", "of",   "about", "into", "as",   "through", "via",
      "within", "across", "between"};
  return kPrep;
}

// Normalized slot text: case fold, drop "the" tokens, collapse whitespace.
std::string norm_slot(const std::string& s) {
  std::vector<std::string> kept;
  for (const std::string& tok : tokenize(s)) {
    const std::string folded = text::fold_case(tok);
    if (folded == "the") continue;
    kept.push_back(folded);
  }
  return text::join(kept, " ");
}

std::string norm_subject(const std::string& s, const GazetteerSet* gaz) {
  if (gaz) {
    if (auto canon = normalize_mention(s, gaz->models)) return norm_slot(*canon);
  }
  return norm_slot(s);
}

std::string norm_object(const std::string& s, const GazetteerSet* gaz) {
  if (gaz) {
    if (auto canon = normalize_mention(s, gaz->licences)) return norm_slot(*canon);
    if (auto canon = normalize_mention(s, gaz->applications)) return norm_slot(*canon);
  }
  return norm_slot(s);
}

struct NormTriple {
  std::string subject;
  std::string relation;
  std::string object;

  auto operator<=>(const NormTriple&) const = default;
};

bool relation_matches_loose(const std::string& a, const std::string& b) {
  const std::vector<std::string> ta = text::split_ws(a);
  const std::vector<std::string> tb = text::split_ws(b);
  const std::string mva = main_verb(a);
  const std::string mvb = main_verb(b);
  return std::find(tb.begin(), tb.end(), mva) != tb.end() ||
         std::find(ta.begin(), ta.end(), mvb) != ta.end();
}

json require_field(const json& j, const char* name, std::size_t line_no) {
  if (!j.contains(name))
    throw FormatError(line_no, std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

std::vector<GoldRecord> parse_gold(const std::string& jsonl) {
  std::vector<GoldRecord> out;
  std::set<std::pair<std::string, int>> seen;
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
      GoldRecord rec;
      rec.doc_id = require_field(j, "doc_id", line_no).get<std::string>();
      rec.sentence_index = require_field(j, "sentence_index", line_no).get<int>();
      rec.sentence_text = j.value("sentence_text", std::string());
      for (const json& t : require_field(j, "triples", line_no)) {
        GoldTriple gt;
        gt.subject = require_field(t, "subject", line_no).get<std::string>();
        gt.relation = require_field(t, "relation", line_no).get<std::string>();
        gt.object = require_field(t, "object", line_no).get<std::string>();
        gt.category = t.value("category", std::string());
        rec.triples.push_back(std::move(gt));
      }
      if (!seen.insert({rec.doc_id, rec.sentence_index}).second)
        throw DuplicateKey(rec.doc_id, rec.sentence_index);
      out.push_back(std::move(rec));
    } catch (const json::exception& e) {
      throw FormatError(line_no, e.what());
    }
  }
  return out;
}

std::vector<GoldRecord> load_gold(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open gold file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_gold(buf.str());
}

std::string main_verb(const std::string& relation) {
  const std::vector<std::string> tokens = text::split_ws(text::fold_case(relation));
  for (const std::string& t : tokens) {
    if (auxiliary_words().count(t) || preposition_words().count(t)) continue;
    return t;
  }
  return tokens.empty() ? std::string() : tokens.front();
}

MatchResult match_triples(const std::vector<Triple>& pred,
                          const std::vector<GoldRecord>& gold,
                          MatchPolicy policy, const GazetteerSet* gazetteers) {
  using Key = std::pair<std::string, int>;
  std::map<Key, std::set<NormTriple>> gold_by_key;
  std::map<Key, std::set<NormTriple>> pred_by_key;

  for (const GoldRecord& rec : gold) {
    std::set<NormTriple>& dst = gold_by_key[{rec.doc_id, rec.sentence_index}];
    for (const GoldTriple& t : rec.triples)
      dst.insert({norm_subject(t.subject, gazetteers), norm_slot(t.relation),
                  norm_object(t.object, gazetteers)});
  }
  for (const Triple& t : pred) {
    pred_by_key[{t.provenance.doc_id, t.provenance.sentence_index}].insert(
        {norm_subject(t.subject, gazetteers), norm_slot(t.relation),
         norm_object(t.object, gazetteers)});
  }

  std::set<Key> keys;
  for (const auto& [k, v] : gold_by_key) { (void)v; keys.insert(k); }
  for (const auto& [k, v] : pred_by_key) { (void)v; keys.insert(k); }

  MatchResult mr;
  mr.policy = policy;
  for (const Key& key : keys) {
    const std::set<NormTriple> empty;
    const std::set<NormTriple>& g =
        gold_by_key.count(key) ? gold_by_key.at(key) : empty;
    const std::set<NormTriple>& p =
        pred_by_key.count(key) ? pred_by_key.at(key) : empty;

    long tp = 0, fp = 0, fn = 0;
    if (policy == MatchPolicy::strict) {
      for (const NormTriple& t : p) (g.count(t) ? tp : fp) += 1;
      for (const NormTriple& t : g)
        if (!p.count(t)) ++fn;
    } else {
      // Greedy bipartite matching over the sorted sets; deterministic.
      std::vector<NormTriple> unmatched(g.begin(), g.end());
      for (const NormTriple& t : p) {
        auto it = std::find_if(unmatched.begin(), unmatched.end(),
                               [&](const NormTriple& gt) {
                                 return gt.subject == t.subject &&
                                        gt.object == t.object &&
                                        relation_matches_loose(gt.relation, t.relation);
                               });
        if (it != unmatched.end()) {
          ++tp;
          unmatched.erase(it);
        } else {
          ++fp;
        }
      }
      fn = static_cast<long>(unmatched.size());
    }
    mr.tp += tp;
    mr.fp += fp;
    mr.fn += fn;
    mr.sentences += 1;
    if (fp == 0 && fn == 0) mr.exact_sentences += 1;
  }
  return mr;
}

Metrics score(const MatchResult& mr) {
  Metrics m;
  m.tp = mr.tp;
  m.fp = mr.fp;
  m.fn = mr.fn;
  m.sentences = mr.sentences;
  m.exact_sentences = mr.exact_sentences;
  const double tp = static_cast<double>(mr.tp);
  m.precision = (mr.tp + mr.fp) > 0 ? tp / static_cast<double>(mr.tp + mr.fp) : 0.0;
  m.recall = (mr.tp + mr.fn) > 0 ? tp / static_cast<double>(mr.tp + mr.fn) : 0.0;
  m.f1 = (m.precision + m.recall) > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  m.accuracy = mr.sentences > 0
                   ? static_cast<double>(mr.exact_sentences) /
                         static_cast<double>(mr.sentences)
                   : 0.0;
  return m;
}

std::string metrics_json(const Metrics& m, MatchPolicy policy) {
  json j;
  j["policy"] = policy == MatchPolicy::strict ? "strict" : "loose";
  j["tp"] = m.tp;
  j["fp"] = m.fp;
  j["fn"] = m.fn;
  j["precision"] = m.precision;
  j["recall"] = m.recall;
  j["f1"] = m.f1;
  j["accuracy"] = m.accuracy;
  j["sentences"] = m.sentences;
  j["exact_sentences"] = m.exact_sentences;
  j["zero_division"] = "ratios are 0 when their denominator is 0";
  return j.dump();
}

std::string metrics_table(const Metrics& m) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  const auto row = [&](const std::string& name, double value) {
    os << std::left << std::setw(20) << name << ' ' << value << '\n';
  };
  os << std::left << std::setw(20) << "Metric" << ' ' << "Value" << '\n';
  row("Accuracy", m.accuracy);
  row("Recall", m.recall);
  row("Precision", m.precision);
  row("F1 value (F1-Score)", m.f1);
  return os.str();
}

}  // namespace cardex
