// Copyright 2026 The Phonoise Authors
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

#ifndef PHONOISE_TEXT_UTIL_H_
#define PHONOISE_TEXT_UTIL_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace phonoise {

// ASCII lowercasing; non-ASCII bytes pass through untouched.
std::string ascii_lower(std::string_view s);

// Strips ASCII punctuation from both ends. Interior characters are kept,
// so "don't" and hyphenated forms survive.
std::string_view strip_edge_punct(std::string_view token);

// Corpus tokenization: whitespace split, edge punctuation stripped,
// ASCII-lowercased. Tokens that are empty after stripping are dropped.
std::vector<std::string> tokenize(std::string_view sentence);

// Splits on a single delimiter without collapsing empty fields.
std::vector<std::string> split(std::string_view s, char delim);

// Spans of word characters (ASCII letters plus interior apostrophes)
// within raw text; used when replacing tokens in place.
struct WordSpan {
  size_t begin = 0;
  size_t end = 0;  // one past the last character
};
std::vector<WordSpan> word_spans(std::string_view text);

// FNV-1a, used to derive per-record RNG streams.
uint64_t fnv1a(std::string_view s);

}  // namespace phonoise

#endif  // PHONOISE_TEXT_UTIL_H_
