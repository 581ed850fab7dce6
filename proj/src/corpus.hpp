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

#ifndef CARDEX_CORPUS_HPP_
#define CARDEX_CORPUS_HPP_

#include <optional>
#include <string>
#include <vector>

namespace cardex {

struct Document {
  std::string doc_id;  // non-empty, caller-supplied or derived from filename
  std::string text;    // UTF-8; may be empty
};

struct Sentence {
  std::string doc_id;
  int index = 0;          // 0-based, stable across runs
  std::string text;       // equals doc.text.substr(begin, end - begin)
  std::size_t begin = 0;  // char span [begin, end) into the document text
  std::size_t end = 0;
};

// One CoNLL-U token row. The rules consume id/form/upos/head/deprel; the
// remaining columns are carried opaquely so files round-trip.
struct ConlluRow {
  int id = 0;
  std::string form;
  std::string lemma = "_";
  std::string upos = "_";
  std::string xpos = "_";
  std::string feats = "_";
  int head = 0;
  std::string deprel = "_";
  std::string deps = "_";
  std::string misc = "_";
};

struct ParsedSentence {
  std::string doc_id;
  int index = 0;  // from "# sent_id" when it is an integer, else block ordinal
  std::vector<ConlluRow> rows;
  std::optional<std::string> raw_text;  // from "# text" when present
};

// Splits a document on '.', '?', '!' followed by whitespace and an uppercase
// letter. A period flanked by digits (version numbers) or following a single
// capital letter (initials) never ends a sentence. Spans cover all
// non-whitespace text in order.
std::vector<Sentence> segment_sentences(const Document& doc);

// Parses CoNLL-U text (LF or CRLF). Multiword-token ranges and empty nodes
// are skipped; '#' comment lines feed sent_id / text metadata. Malformed
// blocks abort with a line-numbered FormatError rather than being skipped.
std::vector<ParsedSentence> parse_conllu(const std::string& text,
                                         const std::string& doc_id);

// raw_text when present, else FORM values joined with single spaces.
std::string reconstruct_text(const ParsedSentence& ps);

// Inverse of parse_conllu for a single sentence block.
std::string serialize_conllu(const ParsedSentence& ps);

}  // namespace cardex

#endif  // CARDEX_CORPUS_HPP_
