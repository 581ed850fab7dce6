/* Copyright 2026 The Cardex Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the cardex relation-extraction library.
 *
 * Everything goes through opaque handles and status codes. Returned strings
 * are heap-allocated and owned by the caller; release them with
 * cardex_string_free(). On failure, cardex_last_error() returns a
 * thread-local description of the most recent error.
 */

#ifndef CARDEX_CARDEX_H_
#define CARDEX_CARDEX_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CARDEX_BUILD)
#    define CARDEX_API __declspec(dllexport)
#  else
#    define CARDEX_API __declspec(dllimport)
#  endif
#else
#  define CARDEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cardex_status {
  CARDEX_OK = 0,
  CARDEX_ERROR_USAGE = 1,     /* bad arguments to a call */
  CARDEX_ERROR_FORMAT = 2,    /* malformed input data */
  CARDEX_ERROR_INVARIANT = 3, /* violated domain invariant */
  CARDEX_ERROR_IO = 4,        /* file access failure */
  CARDEX_ERROR_INTERNAL = 5
} cardex_status;

/* The three dictionaries (model names, licences, applications). */
typedef struct cardex_gazetteers cardex_gazetteers;
/* An extraction result list. */
typedef struct cardex_triples cardex_triples;
/* A knowledge graph. */
typedef struct cardex_graph cardex_graph;

CARDEX_API const char* cardex_version(void);

/* Thread-local message for the last failed call; empty string if none. */
CARDEX_API const char* cardex_last_error(void);

CARDEX_API void cardex_string_free(char* s);

/* --- dictionaries ------------------------------------------------------- */

CARDEX_API cardex_status cardex_gazetteers_load(const char* models_path,
                                                const char* licences_path,
                                                const char* applications_path,
                                                cardex_gazetteers** out);
CARDEX_API void cardex_gazetteers_free(cardex_gazetteers* gaz);

/* --- candidate discovery ------------------------------------------------ */

/* Segments raw document text, keeps sentences holding a model mention plus a
 * licence-or-application mention, and renders them as review JSONL:
 * {"doc_id","sentence_index","text","mentions":[...]} one per line. */
CARDEX_API cardex_status cardex_candidates_jsonl(const cardex_gazetteers* gaz,
                                                 const char* doc_id,
                                                 const char* text,
                                                 char** out_jsonl);

/* --- extraction --------------------------------------------------------- */

/* Runs the rule engine over CoNLL-U text. label_scheme selects the input's
 * dependency-label set: "classic" (CLEAR-style nsubjpass/dobj/prep) or "ud". */
CARDEX_API cardex_status cardex_extract(const cardex_gazetteers* gaz,
                                        const char* doc_id,
                                        const char* conllu_text,
                                        const char* label_scheme,
                                        cardex_triples** out);

CARDEX_API cardex_status cardex_triples_from_jsonl(const char* jsonl,
                                                   cardex_triples** out);
CARDEX_API cardex_status cardex_triples_to_jsonl(const cardex_triples* triples,
                                                 char** out_jsonl);
CARDEX_API size_t cardex_triples_count(const cardex_triples* triples);
CARDEX_API void cardex_triples_free(cardex_triples* triples);

/* --- knowledge graph ---------------------------------------------------- */

/* include_unknown != 0 keeps triples whose object matched no dictionary. */
CARDEX_API cardex_status cardex_graph_build(const cardex_triples* triples,
                                            int include_unknown,
                                            cardex_graph** out);
CARDEX_API cardex_status cardex_graph_from_json(const char* json_text,
                                                cardex_graph** out);

/* format: "dot", "graphml" or "json". */
CARDEX_API cardex_status cardex_graph_export(const cardex_graph* graph,
                                             const char* format,
                                             char** out_text);

/* Depth-first traversal; one "node<TAB>depth" line per visited node in visit
 * order. undirected != 0 walks edges both ways. */
CARDEX_API cardex_status cardex_graph_query(const cardex_graph* graph,
                                            const char* start, int max_depth,
                                            int undirected, char** out_text);

/* All simple paths up to max_depth, one rendered path per line. */
CARDEX_API cardex_status cardex_graph_paths(const cardex_graph* graph,
                                            const char* from, const char* to,
                                            int max_depth, int undirected,
                                            char** out_text);

CARDEX_API void cardex_graph_free(cardex_graph* graph);

/* --- evaluation --------------------------------------------------------- */

/* Scores predictions against gold JSONL. policy: "strict" or "loose".
 * format: "json" or "table". Gazetteers may be NULL (no canonicalization). */
CARDEX_API cardex_status cardex_evaluate(const cardex_gazetteers* gaz,
                                         const char* gold_jsonl,
                                         const char* pred_jsonl,
                                         const char* policy,
                                         const char* format,
                                         char** out_report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CARDEX_CARDEX_H_ */
