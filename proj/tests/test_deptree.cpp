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
#include <set>

#include "deptree.hpp"
#include "errors.hpp"
#include "testutil.hpp"
#include "textutil.hpp"

using namespace cardex;

namespace {

ParsedSentence make_ps(std::vector<ConlluRow> rows) {
  ParsedSentence ps;
  ps.doc_id = "t";
  ps.rows = std::move(rows);
  return ps;
}

ConlluRow row(int id, const std::string& form, const std::string& upos, int head,
              const std::string& deprel) {
  ConlluRow r;
  r.id = id;
  r.form = form;
  r.upos = upos;
  r.head = head;
  r.deprel = deprel;
  return r;
}

std::vector<ParsedSentence> fixture_corpus() {
  return parse_conllu(testutil::read_data("fixtures/fixtures.conllu"), "fixtures");
}

int node_by_form(const DepTree& t, const std::string& form) {
  for (int id = 1; id <= t.size(); ++id)
    if (t.node(id).form == form) return id;
  return 0;
}

}  // namespace

TEST_CASE("build_tree: BERT fixture validates with root released") {
  const auto corpus = fixture_corpus();
  const DepTree t = build_tree(corpus[4]);
  CHECK(t.node(t.root_id()).form == "released");
  CHECK(t.size() == 9);
  CHECK(t.node(1).head == 3);   // BERT -> released
  CHECK(t.node(7).head == 4);   // licence -> under
}

TEST_CASE("build_tree: head cycle rejected") {
  const auto ps = make_ps({row(1, "a", "X", 2, "dep"), row(2, "b", "X", 1, "dep"),
                           row(3, "c", "X", 0, "root")});
  CHECK_THROWS_AS(build_tree(ps), InvalidTree);
}

TEST_CASE("build_tree: multiple or missing roots rejected") {
  CHECK_THROWS_AS(build_tree(make_ps({row(1, "a", "X", 0, "root"),
                                      row(2, "b", "X", 0, "root")})),
                  InvalidTree);
  CHECK_THROWS_AS(build_tree(make_ps({row(1, "a", "X", 2, "dep"),
                                      row(2, "b", "X", 1, "dep")})),
                  InvalidTree);
}

TEST_CASE("build_tree: single-node root-only tree is valid") {
  const DepTree t = build_tree(make_ps({row(1, "Hi", "INTJ", 0, "root")}));
  CHECK(t.size() == 1);
  CHECK(t.root_id() == 1);
}

TEST_CASE("build_tree: head out of range rejected") {
  CHECK_THROWS_AS(build_tree(make_ps({row(1, "a", "X", 5, "dep")})), InvalidTree);
}

TEST_CASE("adapt_labels: UD BERT tree becomes the classic-scheme structure") {
  const auto ud = parse_conllu(testutil::read_data("fixtures/bert_ud.conllu"), "d");
  REQUIRE(ud.size() == 1);
  const DepTree adapted = adapt_labels(build_tree(ud[0]), LabelScheme::ud);

  const auto classic = fixture_corpus();
  const DepTree expected = build_tree(classic[4]);
  REQUIRE(adapted.size() == expected.size());
  for (int id = 1; id <= adapted.size(); ++id) {
    CHECK(adapted.node(id).head == expected.node(id).head);
    CHECK(adapted.node(id).deprel == expected.node(id).deprel);
  }
}

TEST_CASE("adapt_labels: classic scheme is the identity") {
  const auto corpus = fixture_corpus();
  for (const auto& ps : corpus) {
    const DepTree t = build_tree(ps);
    const DepTree same = adapt_labels(t, LabelScheme::classic);
    for (int id = 1; id <= t.size(); ++id) {
      CHECK(same.node(id).head == t.node(id).head);
      CHECK(same.node(id).deprel == t.node(id).deprel);
    }
  }
}

TEST_CASE("adapt_labels: labels off the rule paths survive verbatim") {
  const auto ps = make_ps({row(1, "there", "PRON", 2, "expl"),
                           row(2, "is", "VERB", 0, "root"),
                           row(3, "hope", "NOUN", 2, "obj")});
  const DepTree t = adapt_labels(build_tree(ps), LabelScheme::ud);
  CHECK(t.node(1).deprel == "expl");
  CHECK(t.node(3).deprel == "dobj");  // obj mapped
}

TEST_CASE("adapt_labels: obl without case child stays put") {
  const auto ps = make_ps({row(1, "left", "VERB", 0, "root"),
                           row(2, "yesterday", "NOUN", 1, "obl")});
  const DepTree t = adapt_labels(build_tree(ps), LabelScheme::ud);
  CHECK(t.node(2).deprel == "obl");
}

TEST_CASE("adapt_labels: idempotent per scheme") {
  const auto ud = parse_conllu(testutil::read_data("fixtures/bert_ud.conllu"), "d");
  const DepTree once = adapt_labels(build_tree(ud[0]), LabelScheme::ud);
  const DepTree twice = adapt_labels(once, LabelScheme::ud);
  for (int id = 1; id <= once.size(); ++id) {
    CHECK(twice.node(id).head == once.node(id).head);
    CHECK(twice.node(id).deprel == once.node(id).deprel);
  }
}

TEST_CASE("subtree_phrase: drops the determiner and final punctuation") {
  const auto corpus = fixture_corpus();
  const DepTree bert = build_tree(corpus[4]);
  CHECK(subtree_phrase(bert, node_by_form(bert, "licence")) == "Apache licence 2.0");

  const DepTree gpt4 = build_tree(corpus[0]);
  CHECK(subtree_phrase(gpt4, node_by_form(gpt4, "Generation")) == "Text Generation");
  CHECK(subtree_phrase(gpt4, node_by_form(gpt4, "GPT-4")) == "GPT-4");
}

TEST_CASE("subtree_phrase: brackets are kept as symbols") {
  const auto corpus = fixture_corpus();
  const DepTree ernie = build_tree(corpus[2]);
  CHECK(subtree_phrase(ernie, node_by_form(ernie, "Recognition")) ==
        "Named Entity Recognition ( NER )");
}

TEST_CASE("property: phrases are the-free and in surface order") {
  for (const auto& ps : fixture_corpus()) {
    const DepTree t = build_tree(ps);
    for (int id = 1; id <= t.size(); ++id) {
      const std::string phrase = subtree_phrase(t, id);
      for (const std::string& tok : text::split_ws(phrase))
        CHECK(text::fold_case(tok) != "the");
      // tokens appear in surface (id) order: recover positions greedily
      const auto ids = subtree_ids(t, id);
      CHECK(std::is_sorted(ids.begin(), ids.end()));
    }
  }
}

TEST_CASE("property: children subtrees partition the subtree") {
  for (const auto& ps : fixture_corpus()) {
    const DepTree t = build_tree(ps);
    for (int id = 1; id <= t.size(); ++id) {
      std::set<int> whole;
      for (int x : subtree_ids(t, id)) whole.insert(x);
      std::set<int> merged{id};
      for (int c : t.children(id)) {
        for (int x : subtree_ids(t, c)) {
          CHECK(merged.insert(x).second);  // disjoint across children
        }
      }
      CHECK(merged == whole);
    }
  }
}
