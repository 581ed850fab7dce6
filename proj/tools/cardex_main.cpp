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

// Command-line front end for the cardex pipeline. All functionality comes
// from the shared library through the C API; this tool only shuffles files
// and flags. Exit codes: 0 ok, 1 usage, 2 input format / IO, 3 invariant.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cardex/cardex.h"

namespace {

int exit_code_of(cardex_status status) {
  switch (status) {
    case CARDEX_OK: return 0;
    case CARDEX_ERROR_USAGE: return 1;
    case CARDEX_ERROR_FORMAT: return 2;
    case CARDEX_ERROR_IO: return 2;
    case CARDEX_ERROR_INVARIANT: return 3;
    case CARDEX_ERROR_INTERNAL: return 3;
  }
  return 3;
}

[[noreturn]] void die(cardex_status status) {
  std::cerr << "cardex: " << cardex_last_error() << "\n";
  std::exit(exit_code_of(status));
}

void check(cardex_status status) {
  if (status != CARDEX_OK) die(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cardex: cannot open file: " << path << "\n";
    std::exit(2);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& out_path, const char* content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << content;
  out.flush();
  if (!out) {
    std::cerr << "cardex: cannot write file: " << out_path << "\n";
    std::exit(2);
  }
}

std::string stem_of(const std::string& path) {
  const std::string stem = std::filesystem::path(path).stem().string();
  return stem.empty() ? path : stem;
}

struct GazetteerPaths {
  std::string models;
  std::string licences;
  std::string applications;
};

using GazetteerHandle = std::unique_ptr<cardex_gazetteers, decltype(&cardex_gazetteers_free)>;
using TriplesHandle = std::unique_ptr<cardex_triples, decltype(&cardex_triples_free)>;
using GraphHandle = std::unique_ptr<cardex_graph, decltype(&cardex_graph_free)>;
using StringHandle = std::unique_ptr<char, decltype(&cardex_string_free)>;

GazetteerHandle open_gazetteers(const GazetteerPaths& paths) {
  cardex_gazetteers* gaz = nullptr;
  check(cardex_gazetteers_load(paths.models.c_str(), paths.licences.c_str(),
                               paths.applications.c_str(), &gaz));
  return GazetteerHandle(gaz, &cardex_gazetteers_free);
}

GraphHandle open_graph(const std::string& path) {
  cardex_graph* graph = nullptr;
  check(cardex_graph_from_json(slurp(path).c_str(), &graph));
  return GraphHandle(graph, &cardex_graph_free);
}

void add_gazetteer_options(CLI::App* cmd, GazetteerPaths* paths, bool required) {
  auto* m = cmd->add_option("--models", paths->models, "model-name dictionary file");
  auto* l = cmd->add_option("--licences", paths->licences, "licence dictionary file");
  auto* a = cmd->add_option("--apps", paths->applications, "application dictionary file");
  if (required) {
    m->required();
    l->required();
    a->required();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cardex — extracts (model, relation, licence/application) triples "
               "from dependency-parsed text and builds a queryable graph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("cardex ") + cardex_version());
  app.set_config("--config", "", "read options from an INI/TOML file");

  // candidates
  auto* cand = app.add_subcommand(
      "candidates", "select candidate sentences from raw text (review JSONL)");
  std::string cand_text, cand_doc_id, cand_out;
  GazetteerPaths cand_gaz;
  cand->add_option("--text", cand_text, "plain-text document (UTF-8)")->required();
  cand->add_option("--doc-id", cand_doc_id, "document id (default: file stem)");
  add_gazetteer_options(cand, &cand_gaz, true);
  cand->add_option("--out", cand_out, "output file (default: stdout)");

  // extract
  auto* ext = app.add_subcommand("extract", "run the rule engine over CoNLL-U input");
  std::string ext_conllu, ext_doc_id, ext_labels = "classic", ext_out;
  GazetteerPaths ext_gaz;
  ext->add_option("--conllu", ext_conllu, "CoNLL-U file")->required();
  ext->add_option("--doc-id", ext_doc_id, "document id (default: file stem)");
  ext->add_option("--labels", ext_labels, "label scheme of the input: classic|ud")
      ->check(CLI::IsMember({"classic", "ud"}));
  add_gazetteer_options(ext, &ext_gaz, true);
  ext->add_option("--out", ext_out, "triples JSONL output (default: stdout)");

  // graph build|query|paths
  auto* graph = app.add_subcommand("graph", "build and query the knowledge graph");
  graph->require_subcommand(1);

  auto* gb = graph->add_subcommand("build", "build a graph from triples JSONL");
  std::string gb_triples, gb_out;
  bool gb_unknown = false;
  gb->add_option("--triples", gb_triples, "triples JSONL file")->required();
  gb->add_flag("--include-unknown", gb_unknown,
               "keep triples whose object matched no dictionary");
  gb->add_option("--out", gb_out, "graph JSON output (default: stdout)");

  auto* gq = graph->add_subcommand("query", "depth-first traversal from a node");
  std::string gq_graph, gq_node, gq_out;
  int gq_depth = 1;
  bool gq_undirected = false;
  gq->add_option("--graph", gq_graph, "graph JSON file")->required();
  gq->add_option("--node", gq_node, "start node")->required();
  gq->add_option("--depth", gq_depth, "maximum depth (default 1)");
  gq->add_flag("--undirected", gq_undirected, "walk edges in both directions");
  gq->add_option("--out", gq_out, "output file (default: stdout)");

  auto* gp = graph->add_subcommand("paths", "enumerate simple paths between nodes");
  std::string gp_graph, gp_from, gp_to, gp_out;
  int gp_depth = 3;
  bool gp_undirected = false;
  gp->add_option("--graph", gp_graph, "graph JSON file")->required();
  gp->add_option("--from", gp_from, "source node")->required();
  gp->add_option("--to", gp_to, "target node")->required();
  gp->add_option("--depth", gp_depth, "maximum path length (default 3)");
  gp->add_flag("--undirected", gp_undirected, "walk edges in both directions");
  gp->add_option("--out", gp_out, "output file (default: stdout)");

  // eval
  auto* ev = app.add_subcommand("eval", "score predictions against gold JSONL");
  std::string ev_gold, ev_pred, ev_policy = "strict", ev_format = "json", ev_out;
  GazetteerPaths ev_gaz;
  ev->add_option("--gold", ev_gold, "gold JSONL file")->required();
  ev->add_option("--pred", ev_pred, "predicted triples JSONL file")->required();
  ev->add_option("--policy", ev_policy, "matching policy: strict|loose")
      ->check(CLI::IsMember({"strict", "loose"}));
  ev->add_option("--format", ev_format, "report format: json|table")
      ->check(CLI::IsMember({"json", "table"}));
  add_gazetteer_options(ev, &ev_gaz, false);
  ev->add_option("--out", ev_out, "output file (default: stdout)");

  // export
  auto* ex = app.add_subcommand("export", "serialize a graph to dot|graphml|json");
  std::string ex_graph, ex_format, ex_out;
  ex->add_option("--graph", ex_graph, "graph JSON file")->required();
  ex->add_option("--format", ex_format, "dot|graphml|json")
      ->required()
      ->check(CLI::IsMember({"dot", "graphml", "json"}));
  ex->add_option("--out", ex_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (cand->parsed()) {
    const auto gaz = open_gazetteers(cand_gaz);
    const std::string doc_id = cand_doc_id.empty() ? stem_of(cand_text) : cand_doc_id;
    const std::string text = slurp(cand_text);
    char* jsonl = nullptr;
    check(cardex_candidates_jsonl(gaz.get(), doc_id.c_str(), text.c_str(), &jsonl));
    StringHandle owned(jsonl, &cardex_string_free);
    emit(cand_out, jsonl);
    return 0;
  }

  if (ext->parsed()) {
    const auto gaz = open_gazetteers(ext_gaz);
    const std::string doc_id = ext_doc_id.empty() ? stem_of(ext_conllu) : ext_doc_id;
    const std::string conllu = slurp(ext_conllu);
    cardex_triples* triples = nullptr;
    check(cardex_extract(gaz.get(), doc_id.c_str(), conllu.c_str(),
                         ext_labels.c_str(), &triples));
    TriplesHandle owned_triples(triples, &cardex_triples_free);
    char* jsonl = nullptr;
    check(cardex_triples_to_jsonl(triples, &jsonl));
    StringHandle owned(jsonl, &cardex_string_free);
    emit(ext_out, jsonl);
    return 0;
  }

  if (gb->parsed()) {
    cardex_triples* triples = nullptr;
    check(cardex_triples_from_jsonl(slurp(gb_triples).c_str(), &triples));
    TriplesHandle owned_triples(triples, &cardex_triples_free);
    cardex_graph* g = nullptr;
    check(cardex_graph_build(triples, gb_unknown ? 1 : 0, &g));
    GraphHandle owned_graph(g, &cardex_graph_free);
    char* text = nullptr;
    check(cardex_graph_export(g, "json", &text));
    StringHandle owned(text, &cardex_string_free);
    emit(gb_out, text);
    return 0;
  }

  if (gq->parsed()) {
    const auto g = open_graph(gq_graph);
    char* text = nullptr;
    check(cardex_graph_query(g.get(), gq_node.c_str(), gq_depth,
                             gq_undirected ? 1 : 0, &text));
    StringHandle owned(text, &cardex_string_free);
    emit(gq_out, text);
    return 0;
  }

  if (gp->parsed()) {
    const auto g = open_graph(gp_graph);
    char* text = nullptr;
    check(cardex_graph_paths(g.get(), gp_from.c_str(), gp_to.c_str(), gp_depth,
                             gp_undirected ? 1 : 0, &text));
    StringHandle owned(text, &cardex_string_free);
    emit(gp_out, text);
    return 0;
  }

  if (ev->parsed()) {
    GazetteerHandle gaz(nullptr, &cardex_gazetteers_free);
    const bool with_gaz = !ev_gaz.models.empty() || !ev_gaz.licences.empty() ||
                          !ev_gaz.applications.empty();
    if (with_gaz) {
      if (ev_gaz.models.empty() || ev_gaz.licences.empty() ||
          ev_gaz.applications.empty()) {
        std::cerr << "cardex: eval needs all of --models/--licences/--apps or none\n";
        return 1;
      }
      gaz = open_gazetteers(ev_gaz);
    }
    char* report = nullptr;
    check(cardex_evaluate(gaz.get(), slurp(ev_gold).c_str(), slurp(ev_pred).c_str(),
                          ev_policy.c_str(), ev_format.c_str(), &report));
    StringHandle owned(report, &cardex_string_free);
    emit(ev_out, report);
    return 0;
  }

  if (ex->parsed()) {
    const auto g = open_graph(ex_graph);
    char* text = nullptr;
    check(cardex_graph_export(g.get(), ex_format.c_str(), &text));
    StringHandle owned(text, &cardex_string_free);
    emit(ex_out, text);
    return 0;
  }

  return 1;
}
