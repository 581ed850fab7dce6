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

// Exercises the shared-library surface the way an external binding would:
// through cardex/cardex.h only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "cardex/cardex.h"

namespace {

std::string data_path(const std::string& rel) {
  return std::string(CARDEX_DATA_DIR) + "/" + rel;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GazFixture {
  cardex_gazetteers* gaz = nullptr;
  GazFixture() {
    const auto status = cardex_gazetteers_load(
        data_path("gazetteers/models.txt").c_str(),
        data_path("gazetteers/licences.txt").c_str(),
        data_path("gazetteers/applications.txt").c_str(), &gaz);
    REQUIRE(status == CARDEX_OK);
  }
  ~GazFixture() { cardex_gazetteers_free(gaz); }
};

}  // namespace

TEST_CASE("version string") {
  CHECK(std::strcmp(cardex_version(), "0.1.0") == 0);
}

TEST_CASE("null arguments are usage errors with a message") {
  CHECK(cardex_gazetteers_load(nullptr, "a", "b", nullptr) == CARDEX_ERROR_USAGE);
  CHECK(std::strlen(cardex_last_error()) > 0);
  cardex_triples* t = nullptr;
  CHECK(cardex_extract(nullptr, "d", "", "classic", &t) == CARDEX_ERROR_USAGE);
}

TEST_CASE("missing gazetteer file is an io error") {
  cardex_gazetteers* gaz = nullptr;
  CHECK(cardex_gazetteers_load("/no/such/file", "/no", "/no", &gaz) ==
        CARDEX_ERROR_IO);
}

TEST_CASE("extract on the fixture corpus") {
  GazFixture fx;
  const std::string conllu = slurp(data_path("fixtures/fixtures.conllu"));
  cardex_triples* triples = nullptr;
  REQUIRE(cardex_extract(fx.gaz, "fixtures", conllu.c_str(), "classic", &triples) ==
          CARDEX_OK);
  CHECK(cardex_triples_count(triples) == 17);

  char* jsonl = nullptr;
  REQUIRE(cardex_triples_to_jsonl(triples, &jsonl) == CARDEX_OK);
  const std::string text = jsonl;
  cardex_string_free(jsonl);
  CHECK(text.find("\"subject\":\"BERT\"") != std::string::npos);

  // round trip through JSONL keeps the count
  cardex_triples* again = nullptr;
  REQUIRE(cardex_triples_from_jsonl(text.c_str(), &again) == CARDEX_OK);
  CHECK(cardex_triples_count(again) == 17);
  cardex_triples_free(again);
  cardex_triples_free(triples);
}

TEST_CASE("extract with the ud scheme adapts labels") {
  GazFixture fx;
  const std::string conllu = slurp(data_path("fixtures/bert_ud.conllu"));
  cardex_triples* triples = nullptr;
  REQUIRE(cardex_extract(fx.gaz, "d", conllu.c_str(), "ud", &triples) == CARDEX_OK);
  CHECK(cardex_triples_count(triples) == 1);
  cardex_triples_free(triples);

  CHECK(cardex_extract(fx.gaz, "d", conllu.c_str(), "martian", &triples) ==
        CARDEX_ERROR_USAGE);
}

TEST_CASE("malformed conllu is a format error") {
  GazFixture fx;
  cardex_triples* triples = nullptr;
  CHECK(cardex_extract(fx.gaz, "d", "garbage line\n", "classic", &triples) ==
        CARDEX_ERROR_FORMAT);
  CHECK(std::strlen(cardex_last_error()) > 0);
}

TEST_CASE("candidates jsonl") {
  GazFixture fx;
  const std::string text = slurp(data_path("fixtures/sample_doc.txt"));
  char* jsonl = nullptr;
  REQUIRE(cardex_candidates_jsonl(fx.gaz, "sample", text.c_str(), &jsonl) == CARDEX_OK);
  const std::string out = jsonl;
  cardex_string_free(jsonl);
  CHECK(out.find("\"doc_id\":\"sample\"") != std::string::npos);
  // two candidate sentences in the sample document
  CHECK(std::count(out.begin(), out.end(), '\n') == 2);
}

TEST_CASE("graph build, export, query, paths") {
  const std::string tables = slurp(data_path("fixtures/tables.jsonl"));
  cardex_triples* triples = nullptr;
  REQUIRE(cardex_triples_from_jsonl(tables.c_str(), &triples) == CARDEX_OK);
  cardex_graph* graph = nullptr;
  REQUIRE(cardex_graph_build(triples, 0, &graph) == CARDEX_OK);
  cardex_triples_free(triples);

  char* dot = nullptr;
  REQUIRE(cardex_graph_export(graph, "dot", &dot) == CARDEX_OK);
  CHECK(std::string(dot).find("\"GPT-3\" [color=blue];") != std::string::npos);
  cardex_string_free(dot);

  char* bad = nullptr;
  CHECK(cardex_graph_export(graph, "pdf", &bad) == CARDEX_ERROR_USAGE);

  char* json_text = nullptr;
  REQUIRE(cardex_graph_export(graph, "json", &json_text) == CARDEX_OK);
  cardex_graph* imported = nullptr;
  REQUIRE(cardex_graph_from_json(json_text, &imported) == CARDEX_OK);
  cardex_string_free(json_text);

  char* traversal = nullptr;
  REQUIRE(cardex_graph_query(imported, "GPT-3", 1, 0, &traversal) == CARDEX_OK);
  CHECK(std::string(traversal) ==
        "GPT-3\t0\nConversational Agents\t1\nText Generation\t1\n");
  cardex_string_free(traversal);

  char* missing = nullptr;
  CHECK(cardex_graph_query(imported, "NotThere", 1, 0, &missing) ==
        CARDEX_ERROR_INVARIANT);

  char* paths = nullptr;
  REQUIRE(cardex_graph_paths(imported, "GPT-3", "GPT-4", 2, 1, &paths) == CARDEX_OK);
  CHECK(std::string(paths) ==
        "GPT-3 --is used for--> Text Generation <--enhances-- GPT-4\n");
  cardex_string_free(paths);

  cardex_graph_free(imported);
  cardex_graph_free(graph);
}

TEST_CASE("evaluate end to end") {
  GazFixture fx;
  const std::string gold = slurp(data_path("fixtures/gold.jsonl"));
  const std::string conllu = slurp(data_path("fixtures/fixtures.conllu"));
  cardex_triples* triples = nullptr;
  REQUIRE(cardex_extract(fx.gaz, "fixtures", conllu.c_str(), "classic", &triples) ==
          CARDEX_OK);
  char* pred = nullptr;
  REQUIRE(cardex_triples_to_jsonl(triples, &pred) == CARDEX_OK);
  cardex_triples_free(triples);

  char* report = nullptr;
  REQUIRE(cardex_evaluate(fx.gaz, gold.c_str(), pred, "strict", "json", &report) ==
          CARDEX_OK);
  const std::string out = report;
  cardex_string_free(report);
  CHECK(out.find("\"f1\":1.0") != std::string::npos);
  CHECK(out.find("\"accuracy\":1.0") != std::string::npos);

  char* table = nullptr;
  REQUIRE(cardex_evaluate(fx.gaz, gold.c_str(), pred, "loose", "table", &table) ==
          CARDEX_OK);
  CHECK(std::string(table).find("F1 value (F1-Score)") != std::string::npos);
  cardex_string_free(table);

  char* bad = nullptr;
  CHECK(cardex_evaluate(fx.gaz, gold.c_str(), pred, "fuzzy", "json", &bad) ==
        CARDEX_ERROR_USAGE);
  cardex_string_free(pred);
}
