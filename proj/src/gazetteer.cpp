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

#include "gazetteer.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "textutil.hpp"

namespace cardex {

namespace {

// Normalized token for matching: case-folded, hyphen-split. `source` is the
// index of the original token it came from; `opens`/`closes` say whether this
// piece starts/ends that token, so a match can never stop inside one.
struct NormTok {
  std::string form;
  std::size_t source = 0;
  bool opens = true;
  bool closes = true;
};

// Case-folds and splits every token on '-'; standalone hyphen tokens vanish.
// Both alias and sentence sides go through this, which is what makes the
// hyphen transparent in matching.
std::vector<NormTok> match_stream(const std::vector<std::string>& tokens) {
  std::vector<NormTok> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string folded = text::fold_case(tokens[i]);
    const std::size_t first_of_token = out.size();
    std::size_t p = 0;
    while (p <= folded.size()) {
      std::size_t q = folded.find('-', p);
      if (q == std::string::npos) q = folded.size();
      if (q > p) out.push_back({folded.substr(p, q - p), i, out.size() == first_of_token, false});
      if (q == folded.size()) break;
      p = q + 1;
    }
    if (out.size() > first_of_token) out.back().closes = true;
  }
  return out;
}

constexpr char kKeySep = '\x1f';

std::string key_of(const std::vector<NormTok>& stream, std::size_t begin,
                   std::size_t count) {
  std::string key;
  for (std::size_t i = begin; i < begin + count; ++i) {
    if (i > begin) key.push_back(kKeySep);
    key += stream[i].form;
  }
  return key;
}

void add_alias(Gazetteer* gaz, const std::string& canonical,
               const std::string& alias, std::size_t line_no) {
  const std::vector<NormTok> stream = match_stream(tokenize(alias));
  if (stream.empty())
    throw FormatError(line_no, "alias \"" + alias + "\" has no matchable tokens");
  const std::string key = key_of(stream, 0, stream.size());
  auto it = gaz->index.find(key);
  if (it != gaz->index.end() && it->second != canonical)
    throw ConflictError(alias, it->second, canonical);
  gaz->index.emplace(key, canonical);
  gaz->max_alias_tokens = std::max(gaz->max_alias_tokens, stream.size());
  gaz->entries[canonical].insert(alias);
}

}  // namespace

const char* category_name(Category c) {
  switch (c) {
    case Category::model: return "model";
    case Category::licence: return "licence";
    case Category::application: return "application";
  }
  return "model";
}

std::vector<std::string> tokenize(const std::string& input) {
  std::vector<std::string> out;
  for (const std::string& chunk : text::split_ws(input)) {
    std::size_t b = 0, e = chunk.size();
    while (b < e && text::is_ascii_punct(chunk[b])) {
      out.emplace_back(1, chunk[b]);
      ++b;
    }
    std::string tail;
    while (e > b && text::is_ascii_punct(chunk[e - 1])) {
      tail.push_back(chunk[e - 1]);
      --e;
    }
    if (e > b) out.emplace_back(chunk.substr(b, e - b));
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.emplace_back(1, *it);
  }
  return out;
}

Gazetteer parse_gazetteer(const std::string& content, Category category) {
  Gazetteer gaz;
  gaz.category = category;
  std::size_t line_no = 0;
  for (std::string line : text::split(content, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string trimmed = text::trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const std::vector<std::string> cols = text::split(line, '\t');
    if (cols.size() > 2)
      throw FormatError(line_no, "expected `canonical` or `canonical<TAB>aliases`");
    const std::string canonical = text::trim(cols[0]);
    if (canonical.empty()) throw FormatError(line_no, "empty canonical name");
    add_alias(&gaz, canonical, canonical, line_no);
    if (cols.size() == 2) {
      for (const std::string& raw : text::split(cols[1], '|')) {
        const std::string alias = text::trim(raw);
        if (alias.empty()) throw FormatError(line_no, "empty alias");
        add_alias(&gaz, canonical, alias, line_no);
      }
    }
  }
  return gaz;
}

Gazetteer load_gazetteer(const std::string& path, Category category) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open gazetteer file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_gazetteer(buf.str(), category);
}

std::vector<Mention> find_mentions(const std::vector<std::string>& tokens,
                                   const Gazetteer& gaz) {
  std::vector<Mention> out;
  const std::vector<NormTok> stream = match_stream(tokens);
  std::size_t i = 0;
  while (i < stream.size()) {
    std::size_t longest = std::min(gaz.max_alias_tokens, stream.size() - i);
    bool matched = false;
    for (std::size_t len = longest; len >= 1 && !matched; --len) {
      // a mention may not begin or end in the middle of a hyphenated token
      if (!stream[i].opens || !stream[i + len - 1].closes) continue;
      auto it = gaz.index.find(key_of(stream, i, len));
      if (it == gaz.index.end()) continue;
      Mention m;
      m.category = gaz.category;
      m.canonical = it->second;
      m.begin = static_cast<int>(stream[i].source);
      m.end = static_cast<int>(stream[i + len - 1].source) + 1;
      std::vector<std::string> span(tokens.begin() + m.begin, tokens.begin() + m.end);
      m.surface = text::join(span, " ");
      out.push_back(std::move(m));
      i += len;
      matched = true;
    }
    if (!matched) ++i;
  }
  return out;
}

std::optional<std::string> normalize_mention(const std::string& surface,
                                             const Gazetteer& gaz) {
  const std::vector<NormTok> stream = match_stream(tokenize(surface));
  if (stream.empty()) return std::nullopt;
  auto it = gaz.index.find(key_of(stream, 0, stream.size()));
  if (it == gaz.index.end()) return std::nullopt;
  return it->second;
}

CandidateVerdict select_candidates(const std::string& sentence_text,
                                   const GazetteerSet& gazetteers) {
  const std::vector<std::string> tokens = tokenize(sentence_text);
  CandidateVerdict v;
  v.model_mentions = find_mentions(tokens, gazetteers.models);
  v.licence_mentions = find_mentions(tokens, gazetteers.licences);
  v.application_mentions = find_mentions(tokens, gazetteers.applications);
  v.is_candidate = !v.model_mentions.empty() &&
                   (!v.licence_mentions.empty() || !v.application_mentions.empty());
  return v;
}

}  // namespace cardex
