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

#include "cardex/cardex.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "eval.hpp"
#include "exporter.hpp"
#include "kg.hpp"
#include "pipeline.hpp"

struct cardex_gazetteers {
  cardex::GazetteerSet set;
};

struct cardex_triples {
  std::vector<cardex::Triple> list;
};

struct cardex_graph {
  cardex::KnowledgeGraph graph;
};

namespace {

thread_local std::string g_last_error;

cardex_status map_code(cardex::ErrorCode code) {
  switch (code) {
    case cardex::ErrorCode::usage: return CARDEX_ERROR_USAGE;
    case cardex::ErrorCode::format: return CARDEX_ERROR_FORMAT;
    case cardex::ErrorCode::invariant: return CARDEX_ERROR_INVARIANT;
    case cardex::ErrorCode::io: return CARDEX_ERROR_IO;
  }
  return CARDEX_ERROR_INTERNAL;
}

template <typename Fn>
cardex_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CARDEX_OK;
  } catch (const cardex::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CARDEX_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CARDEX_ERROR_INTERNAL;
  }
}

cardex_status usage_error(const char* message) {
  g_last_error = message;
  return CARDEX_ERROR_USAGE;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cardex::Direction direction_of(int undirected) {
  return undirected ? cardex::Direction::undirected : cardex::Direction::out;
}

std::string render_traversal(const cardex::Traversal& tr) {
  std::ostringstream os;
  for (const auto& [node, depth] : tr.visited) os << node << '\t' << depth << '\n';
  return os.str();
}

std::string render_paths(const std::vector<cardex::Path>& paths) {
  std::ostringstream os;
  for (const cardex::Path& p : paths) {
    os << p.start;
    for (const cardex::PathStep& step : p.steps) {
      if (step.forward)
        os << " --" << step.label << "--> " << step.node;
      else
        os << " <--" << step.label << "-- " << step.node;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

extern "C" {

const char* cardex_version(void) { return "0.1.0"; }

const char* cardex_last_error(void) { return g_last_error.c_str(); }

void cardex_string_free(char* s) { std::free(s); }

cardex_status cardex_gazetteers_load(const char* models_path,
                                     const char* licences_path,
                                     const char* applications_path,
                                     cardex_gazetteers** out) {
  if (!models_path || !licences_path || !applications_path || !out)
    return usage_error("cardex_gazetteers_load: null argument");
  return guarded([&] {
    auto handle = std::make_unique<cardex_gazetteers>();
    handle->set = cardex::load_gazetteers(models_path, licences_path, applications_path);
    *out = handle.release();
  });
}

void cardex_gazetteers_free(cardex_gazetteers* gaz) { delete gaz; }

cardex_status cardex_candidates_jsonl(const cardex_gazetteers* gaz,
                                      const char* doc_id, const char* text,
                                      char** out_jsonl) {
  if (!gaz || !doc_id || !text || !out_jsonl)
    return usage_error("cardex_candidates_jsonl: null argument");
  if (*doc_id == '\0') return usage_error("cardex_candidates_jsonl: empty doc_id");
  return guarded([&] {
    cardex::Document doc{doc_id, text};
    *out_jsonl = dup_string(cardex::candidates_jsonl(doc, gaz->set));
  });
}

cardex_status cardex_extract(const cardex_gazetteers* gaz, const char* doc_id,
                             const char* conllu_text, const char* label_scheme,
                             cardex_triples** out) {
  if (!gaz || !doc_id || !conllu_text || !label_scheme || !out)
    return usage_error("cardex_extract: null argument");
  cardex::LabelScheme scheme;
  if (std::strcmp(label_scheme, "classic") == 0) {
    scheme = cardex::LabelScheme::classic;
  } else if (std::strcmp(label_scheme, "ud") == 0) {
    scheme = cardex::LabelScheme::ud;
  } else {
    return usage_error("cardex_extract: label_scheme must be \"classic\" or \"ud\"");
  }
  return guarded([&] {
    auto handle = std::make_unique<cardex_triples>();
    handle->list = cardex::extract_from_conllu(conllu_text, doc_id, scheme, gaz->set);
    *out = handle.release();
  });
}

cardex_status cardex_triples_from_jsonl(const char* jsonl, cardex_triples** out) {
  if (!jsonl || !out) return usage_error("cardex_triples_from_jsonl: null argument");
  return guarded([&] {
    auto handle = std::make_unique<cardex_triples>();
    handle->list = cardex::triples_from_jsonl(jsonl);
    *out = handle.release();
  });
}

cardex_status cardex_triples_to_jsonl(const cardex_triples* triples,
                                      char** out_jsonl) {
  if (!triples || !out_jsonl)
    return usage_error("cardex_triples_to_jsonl: null argument");
  return guarded([&] { *out_jsonl = dup_string(cardex::triples_to_jsonl(triples->list)); });
}

size_t cardex_triples_count(const cardex_triples* triples) {
  return triples ? triples->list.size() : 0;
}

void cardex_triples_free(cardex_triples* triples) { delete triples; }

cardex_status cardex_graph_build(const cardex_triples* triples,
                                 int include_unknown, cardex_graph** out) {
  if (!triples || !out) return usage_error("cardex_graph_build: null argument");
  return guarded([&] {
    auto handle = std::make_unique<cardex_graph>();
    handle->graph = cardex::build_graph(triples->list, include_unknown != 0);
    *out = handle.release();
  });
}

cardex_status cardex_graph_from_json(const char* json_text, cardex_graph** out) {
  if (!json_text || !out) return usage_error("cardex_graph_from_json: null argument");
  return guarded([&] {
    auto handle = std::make_unique<cardex_graph>();
    handle->graph = cardex::import_json(json_text);
    *out = handle.release();
  });
}

cardex_status cardex_graph_export(const cardex_graph* graph, const char* format,
                                  char** out_text) {
  if (!graph || !format || !out_text)
    return usage_error("cardex_graph_export: null argument");
  std::string name = format;
  if (name != "dot" && name != "graphml" && name != "json")
    return usage_error("cardex_graph_export: format must be dot, graphml or json");
  return guarded([&] {
    std::string text;
    if (name == "dot") text = cardex::export_dot(graph->graph);
    else if (name == "graphml") text = cardex::export_graphml(graph->graph);
    else text = cardex::export_json(graph->graph);
    *out_text = dup_string(text);
  });
}

cardex_status cardex_graph_query(const cardex_graph* graph, const char* start,
                                 int max_depth, int undirected, char** out_text) {
  if (!graph || !start || !out_text)
    return usage_error("cardex_graph_query: null argument");
  if (max_depth < 0) return usage_error("cardex_graph_query: negative depth");
  return guarded([&] {
    const cardex::Traversal tr =
        cardex::dfs_query(graph->graph, start, max_depth, direction_of(undirected));
    *out_text = dup_string(render_traversal(tr));
  });
}

cardex_status cardex_graph_paths(const cardex_graph* graph, const char* from,
                                 const char* to, int max_depth, int undirected,
                                 char** out_text) {
  if (!graph || !from || !to || !out_text)
    return usage_error("cardex_graph_paths: null argument");
  if (max_depth < 0) return usage_error("cardex_graph_paths: negative depth");
  return guarded([&] {
    const auto paths =
        cardex::find_paths(graph->graph, from, to, max_depth, direction_of(undirected));
    *out_text = dup_string(render_paths(paths));
  });
}

void cardex_graph_free(cardex_graph* graph) { delete graph; }

cardex_status cardex_evaluate(const cardex_gazetteers* gaz, const char* gold_jsonl,
                              const char* pred_jsonl, const char* policy,
                              const char* format, char** out_report) {
  if (!gold_jsonl || !pred_jsonl || !policy || !format || !out_report)
    return usage_error("cardex_evaluate: null argument");
  cardex::MatchPolicy match_policy;
  if (std::strcmp(policy, "strict") == 0) {
    match_policy = cardex::MatchPolicy::strict;
  } else if (std::strcmp(policy, "loose") == 0) {
    match_policy = cardex::MatchPolicy::loose;
  } else {
    return usage_error("cardex_evaluate: policy must be \"strict\" or \"loose\"");
  }
  const std::string fmt = format;
  if (fmt != "json" && fmt != "table")
    return usage_error("cardex_evaluate: format must be \"json\" or \"table\"");
  return guarded([&] {
    const auto gold = cardex::parse_gold(gold_jsonl);
    const auto pred = cardex::triples_from_jsonl(pred_jsonl);
    const cardex::MatchResult mr = cardex::match_triples(
        pred, gold, match_policy, gaz ? &gaz->set : nullptr);
    const cardex::Metrics m = cardex::score(mr);
    *out_report = dup_string(fmt == "json" ? cardex::metrics_json(m, match_policy)
                                           : cardex::metrics_table(m));
  });
}

}  // extern "C"
