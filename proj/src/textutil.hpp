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

#ifndef CARDEX_TEXTUTIL_HPP_
#define CARDEX_TEXTUTIL_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace cardex::text {

// ASCII-only case fold; multi-byte UTF-8 sequences pass through untouched.
std::string fold_case(std::string_view s);

std::string trim(std::string_view s);

// Splits on a single separator, keeping empty fields.
std::vector<std::string> split(std::string_view s, char sep);

std::vector<std::string> split_ws(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool is_ascii_digit(char c);
bool is_ascii_upper(char c);
bool is_ascii_alpha(char c);
bool is_ascii_punct(char c);

}  // namespace cardex::text

#endif  // CARDEX_TEXTUTIL_HPP_
