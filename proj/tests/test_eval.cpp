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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "errors.hpp"
#include "eval.hpp"
#include "testutil.hpp"

using namespace cardex;
using testutil::make_triple;

namespace {

GoldRecord gold_record(const std::string& doc, int index,
                       std::vector<GoldTriple> triples) {
  GoldRecord r;
  r.doc_id = doc;
  r.sentence_index = index;
  r.triples = std::move(triples);
  return r;
}

MatchResult from_counts(long tp, long fp, long fn) {
  MatchResult mr;
  mr.tp = tp;
  mr.fp = fp;
  mr.fn = fn;
  return mr;
}

}  // namespace

TEST_CASE("load_gold: records parse, negatives allowed") {
  const std::string jsonl =
      R"({"doc_id":"d","sentence_index":0,"sentence_text":"BERT was released under the Apache licence 2.0 .","triples":[{"subject":"BERT","relation":"was released under","object":"Apache licence 2.0","category":"licence"}]})"
      "\n"
      R"({"doc_id":"d","sentence_index":1,"triples":[]})"
      "\n";
  const auto gold = parse_gold(jsonl);
  REQUIRE(gold.size() == 2);
  CHECK(gold[0].triples.size() == 1);
  CHECK(gold[0].triples[0].subject == "BERT");
  CHECK(gold[1].triples.empty());
}

TEST_CASE("load_gold: duplicate keys rejected") {
  const std::string jsonl =
      R"({"doc_id":"d","sentence_index":0,"triples":[]})" "\n"
      R"({"doc_id":"d","sentence_index":0,"triples":[]})" "\n";
  CHECK_THROWS_AS(parse_gold(jsonl), DuplicateKey);
}

TEST_CASE("load_gold: malformed lines carry the line number") {
  try {
    parse_gold("{\"doc_id\":\"d\",\"sentence_index\":0,\"triples\":[]}\nnot json\n");
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_gold(R"({"doc_id":"d"})" "\n"), FormatError);
}

TEST_CASE("main_verb: auxiliaries and prepositions are skipped") {
  CHECK(main_verb("was released under") == "released");
  CHECK(main_verb("is effective in") == "effective");
  CHECK(main_verb("enhances") == "enhances");
  CHECK(main_verb("released under") == "released");
  CHECK(main_verb("is") == "is");  // fallback: nothing but auxiliaries
}

TEST_CASE("match: identical triple is a TP") {
  const auto pred = make_triple("BERT", "was released under", "Apache licence 2.0",
                                TripleCategory::licence, "d", 0);
  const auto gold = gold_record(
      "d", 0, {{"BERT", "was released under", "Apache licence 2.0", "licence"}});
  const MatchResult mr = match_triples({pred}, {gold}, MatchPolicy::strict);
  CHECK(mr.tp == 1);
  CHECK(mr.fp == 0);
  CHECK(mr.fn == 0);
  CHECK(mr.exact_sentences == 1);
}

TEST_CASE("match: clipped relation passes loose, fails strict") {
  const auto pred = make_triple("BERT", "released under", "Apache licence 2.0",
                                TripleCategory::licence, "d", 0);
  const auto gold = gold_record(
      "d", 0, {{"BERT", "was released under", "Apache licence 2.0", "licence"}});

  const MatchResult strict = match_triples({pred}, {gold}, MatchPolicy::strict);
  CHECK(strict.tp == 0);
  CHECK(strict.fp == 1);
  CHECK(strict.fn == 1);

  const MatchResult loose = match_triples({pred}, {gold}, MatchPolicy::loose);
  CHECK(loose.tp == 1);
  CHECK(loose.fp == 0);
  CHECK(loose.fn == 0);
}

TEST_CASE("match: prediction on a gold-empty sentence is an FP") {
  const auto pred = make_triple("BERT", "was released under", "Apache licence 2.0",
                                TripleCategory::licence, "d", 0);
  const MatchResult mr = match_triples({pred}, {gold_record("d", 0, {})},
                                       MatchPolicy::strict);
  CHECK(mr.tp == 0);
  CHECK(mr.fp == 1);
  CHECK(mr.exact_sentences == 0);
}

TEST_CASE("match: missed gold triple is an FN") {
  const auto gold = gold_record(
      "d", 0, {{"BERT", "was released under", "Apache licence 2.0", "licence"}});
  const MatchResult mr = match_triples({}, {gold}, MatchPolicy::strict);
  CHECK(mr.fn == 1);
  CHECK(mr.sentences == 1);
}

TEST_CASE("match: normalization folds case and drops the") {
  const auto pred = make_triple("BERT", "was released under", "the Apache Licence 2.0",
                                TripleCategory::licence, "d", 0);
  const auto gold = gold_record(
      "d", 0, {{"BERT", "was released under", "apache licence 2.0", "licence"}});
  const MatchResult mr = match_triples({pred}, {gold}, MatchPolicy::strict);
  CHECK(mr.tp == 1);
}

TEST_CASE("match: gazetteer canonicalization unifies alias spellings") {
  const auto gaz = testutil::bundled_gazetteers();
  const auto pred = make_triple("BERT", "was released under", "Apache-2.0",
                                TripleCategory::licence, "d", 0);
  const auto gold = gold_record(
      "d", 0, {{"BERT", "was released under", "Apache licence 2.0", "licence"}});
  CHECK(match_triples({pred}, {gold}, MatchPolicy::strict).tp == 0);
  CHECK(match_triples({pred}, {gold}, MatchPolicy::strict, &gaz).tp == 1);
}

TEST_CASE("score: the reference arithmetic") {
  const Metrics m = score(from_counts(198, 22, 27));
  CHECK(std::abs(m.precision - 0.900) <= 0.0005);
  CHECK(std::abs(m.recall - 0.880) <= 0.0005);
  CHECK(std::abs(m.f1 - 0.890) <= 0.0005);
}

TEST_CASE("score: perfect and degenerate counts") {
  const Metrics one = score(from_counts(1, 0, 0));
  CHECK(one.precision == 1.0);
  CHECK(one.recall == 1.0);
  CHECK(one.f1 == 1.0);

  const Metrics zero = score(from_counts(0, 0, 0));
  CHECK(zero.precision == 0.0);
  CHECK(zero.recall == 0.0);
  CHECK(zero.f1 == 0.0);
}

TEST_CASE("score: accuracy counts correctly-empty sentences") {
  const MatchResult mr = match_triples({}, {gold_record("d", 0, {})},
                                       MatchPolicy::strict);
  const Metrics m = score(mr);
  CHECK(m.accuracy == 1.0);
  CHECK(m.precision == 0.0);  // zero-division convention
}

TEST_CASE("property: f1 lies between precision and recall when tp > 0") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const long tp = std::uniform_int_distribution<long>(1, 50)(rng);
    const long fp = std::uniform_int_distribution<long>(0, 50)(rng);
    const long fn = std::uniform_int_distribution<long>(0, 50)(rng);
    const Metrics m = score(from_counts(tp, fp, fn));
    CHECK(m.f1 >= std::min(m.precision, m.recall) - 1e-12);
    CHECK(m.f1 <= std::max(m.precision, m.recall) + 1e-12);
  }
}

TEST_CASE("property: permutation-invariant over sentences and triples") {
  const auto gaz = testutil::bundled_gazetteers();
  auto pred = extract_from_conllu(testutil::read_data("fixtures/fixtures.conllu"),
                                  "fixtures", LabelScheme::classic, gaz);
  auto gold = load_gold(testutil::data_path("fixtures/gold.jsonl"));
  const MatchResult reference = match_triples(pred, gold, MatchPolicy::strict);
  std::mt19937 rng(17);
  for (int round = 0; round < 5; ++round) {
    std::shuffle(pred.begin(), pred.end(), rng);
    std::shuffle(gold.begin(), gold.end(), rng);
    const MatchResult mr = match_triples(pred, gold, MatchPolicy::strict);
    CHECK(mr.tp == reference.tp);
    CHECK(mr.fp == reference.fp);
    CHECK(mr.fn == reference.fn);
    CHECK(mr.exact_sentences == reference.exact_sentences);
  }
}

TEST_CASE("property: strict TPs never exceed loose TPs") {
  const auto gaz = testutil::bundled_gazetteers();
  auto pred = extract_from_conllu(testutil::read_data("fixtures/fixtures.conllu"),
                                  "fixtures", LabelScheme::classic, gaz);
  const auto gold = load_gold(testutil::data_path("fixtures/gold.jsonl"));
  std::mt19937 rng(23);
  for (int round = 0; round < 20; ++round) {
    auto mutated = pred;
    // clip leading auxiliaries off some relations; loose should tolerate it
    for (Triple& t : mutated) {
      if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) continue;
      const auto space = t.relation.find(' ');
      if (space != std::string::npos) t.relation = t.relation.substr(space + 1);
    }
    const long strict_tp =
        match_triples(mutated, gold, MatchPolicy::strict).tp;
    const long loose_tp = match_triples(mutated, gold, MatchPolicy::loose).tp;
    CHECK(strict_tp <= loose_tp);
  }
}

TEST_CASE("full fixture corpus scores perfectly under strict policy") {
  const auto gaz = testutil::bundled_gazetteers();
  const auto pred = extract_from_conllu(testutil::read_data("fixtures/fixtures.conllu"),
                                        "fixtures", LabelScheme::classic, gaz);
  const auto gold = load_gold(testutil::data_path("fixtures/gold.jsonl"));
  const Metrics m = score(match_triples(pred, gold, MatchPolicy::strict, &gaz));
  CHECK(m.tp == 17);
  CHECK(m.precision == 1.0);
  CHECK(m.recall == 1.0);
  CHECK(m.f1 == 1.0);
  CHECK(m.accuracy == 1.0);
  CHECK(m.sentences == 20);
}

TEST_CASE("reports: json fields and table rows") {
  const Metrics m = score(from_counts(198, 22, 27));
  const std::string js = metrics_json(m, MatchPolicy::strict);
  CHECK(js.find("\"policy\":\"strict\"") != std::string::npos);
  CHECK(js.find("\"tp\":198") != std::string::npos);
  const std::string table = metrics_table(m);
  CHECK(table.find("Accuracy") != std::string::npos);
  CHECK(table.find("Recall") != std::string::npos);
  CHECK(table.find("Precision") != std::string::npos);
  CHECK(table.find("F1 value (F1-Score)") != std::string::npos);
  CHECK(table.find("0.89") != std::string::npos);
}
