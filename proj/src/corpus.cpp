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

#include "corpus.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "errors.hpp"
#include "textutil.hpp"

namespace cardex {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// A '.' ends no sentence when it sits between two digits ("2.0", "v(1.5").
bool flanked_by_digits(const std::string& t, std::size_t j) {
  return j > 0 && j + 1 < t.size() && text::is_ascii_digit(t[j - 1]) &&
         text::is_ascii_digit(t[j + 1]);
}

// "A. Smith": the period follows a single capital letter that does not
// continue a longer word.
bool follows_initial(const std::string& t, std::size_t j) {
  if (j == 0 || !text::is_ascii_upper(t[j - 1])) return false;
  return j < 2 || !text::is_ascii_alpha(t[j - 2]);
}

bool parse_int_strict(const std::string& s, int* out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto res = std::from_chars(first, last, *out);
  return res.ec == std::errc() && res.ptr == last;
}

}  // namespace

std::vector<Sentence> segment_sentences(const Document& doc) {
  const std::string& t = doc.text;
  std::vector<Sentence> out;
  std::size_t i = 0;
  const std::size_t n = t.size();
  while (i < n) {
    while (i < n && is_space(t[i])) ++i;
    if (i >= n) break;
    const std::size_t start = i;
    std::size_t end = n;
    for (std::size_t j = i; j < n; ++j) {
      const char c = t[j];
      if (c != '.' && c != '?' && c != '!') continue;
      // Terminator must be followed by whitespace and then an uppercase letter.
      std::size_t k = j + 1;
      if (k >= n || !is_space(t[k])) continue;
      while (k < n && is_space(t[k])) ++k;
      if (k >= n || !text::is_ascii_upper(t[k])) continue;
      if (c == '.' && (flanked_by_digits(t, j) || follows_initial(t, j))) continue;
      end = j + 1;
      break;
    }
    if (end == n) {
      while (end > start && is_space(t[end - 1])) --end;
    }
    Sentence s;
    s.doc_id = doc.doc_id;
    s.index = static_cast<int>(out.size());
    s.text = t.substr(start, end - start);
    s.begin = start;
    s.end = end;
    out.push_back(std::move(s));
    i = end;
  }
  return out;
}

std::vector<ParsedSentence> parse_conllu(const std::string& input,
                                         const std::string& doc_id) {
  std::vector<ParsedSentence> out;
  ParsedSentence cur;
  cur.doc_id = doc_id;
  std::vector<std::size_t> row_lines;
  std::optional<int> sent_id;

  auto reset = [&] {
    cur = ParsedSentence{};
    cur.doc_id = doc_id;
    row_lines.clear();
    sent_id.reset();
  };

  auto flush = [&](std::size_t at_line) {
    if (cur.rows.empty()) {
      reset();  // comment-only or empty block
      return;
    }
    const int n = static_cast<int>(cur.rows.size());
    int roots = 0;
    for (std::size_t r = 0; r < cur.rows.size(); ++r) {
      const ConlluRow& row = cur.rows[r];
      if (row.head < 0 || row.head > n)
        throw FormatError(row_lines[r], "HEAD out of range");
      if (row.head == 0 && ++roots == 2)
        throw FormatError(row_lines[r], "multiple root rows (HEAD=0)");
    }
    if (roots == 0) throw FormatError(at_line, "sentence block has no root row (HEAD=0)");
    cur.index = sent_id.value_or(static_cast<int>(out.size()));
    out.push_back(std::move(cur));
    reset();
  };

  const std::vector<std::string> lines = text::split(input, '\n');
  std::size_t line_no = 0;
  for (std::string line : lines) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush(line_no);
      continue;
    }
    if (line[0] == '#') {
      const std::size_t eq = line.find('=');
      if (eq != std::string::npos) {
        const std::string key = text::trim(line.substr(1, eq - 1));
        const std::string value = text::trim(line.substr(eq + 1));
        if (key == "sent_id") {
          int v = 0;
          if (parse_int_strict(value, &v)) sent_id = v;
        } else if (key == "text") {
          cur.raw_text = value;
        }
      }
      continue;
    }
    const std::vector<std::string> cols = text::split(line, '\t');
    if (cols.size() != 10)
      throw FormatError(line_no, "expected 10 tab-separated columns, got " +
                                     std::to_string(cols.size()));
    // Skip multiword-token ranges ("4-5") and empty nodes ("5.1").
    if (cols[0].find('-') != std::string::npos) continue;
    if (cols[0].find('.') != std::string::npos) continue;
    ConlluRow row;
    if (!parse_int_strict(cols[0], &row.id))
      throw FormatError(line_no, "non-integer token ID \"" + cols[0] + "\"");
    if (row.id != static_cast<int>(cur.rows.size()) + 1)
      throw FormatError(line_no, "token IDs must be contiguous from 1");
    if (!parse_int_strict(cols[6], &row.head))
      throw FormatError(line_no, "non-integer HEAD \"" + cols[6] + "\"");
    if (row.head < 0) throw FormatError(line_no, "HEAD out of range");
    row.form = cols[1];
    row.lemma = cols[2];
    row.upos = cols[3];
    row.xpos = cols[4];
    row.feats = cols[5];
    row.deprel = cols[7];
    row.deps = cols[8];
    row.misc = cols[9];
    cur.rows.push_back(std::move(row));
    row_lines.push_back(line_no);
  }
  flush(line_no + 1);
  return out;
}

std::string reconstruct_text(const ParsedSentence& ps) {
  if (ps.raw_text) return *ps.raw_text;
  std::string out;
  for (std::size_t i = 0; i < ps.rows.size(); ++i) {
    if (i) out.push_back(' ');
    out += ps.rows[i].form;
  }
  return out;
}

std::string serialize_conllu(const ParsedSentence& ps) {
  std::ostringstream os;
  os << "# sent_id = " << ps.index << '\n';
  if (ps.raw_text) os << "# text = " << *ps.raw_text << '\n';
  for (const ConlluRow& r : ps.rows) {
    os << r.id << '\t' << r.form << '\t' << r.lemma << '\t' << r.upos << '\t'
       << r.xpos << '\t' << r.feats << '\t' << r.head << '\t' << r.deprel
       << '\t' << r.deps << '\t' << r.misc << '\n';
  }
  os << '\n';
  return os.str();
}

}  // namespace cardex
