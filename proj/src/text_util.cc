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

#include "phonoise/text_util.h"

#include <cctype>

namespace phonoise {

namespace {

bool is_ascii_punct(unsigned char c) {
  return std::ispunct(c) != 0;
}

bool is_word_char(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

}  // namespace

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view strip_edge_punct(std::string_view token) {
  size_t b = 0;
  size_t e = token.size();
  while (b < e && is_ascii_punct(static_cast<unsigned char>(token[b]))) ++b;
  while (e > b && is_ascii_punct(static_cast<unsigned char>(token[e - 1]))) --e;
  return token.substr(b, e - b);
}

std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> out;
  size_t i = 0;
  const size_t n = sentence.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(sentence[i]))) ++i;
    size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(sentence[i]))) ++i;
    if (i > start) {
      std::string_view tok = strip_edge_punct(sentence.substr(start, i - start));
      if (!tok.empty()) out.push_back(ascii_lower(tok));
    }
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char delim) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::vector<WordSpan> word_spans(std::string_view text) {
  std::vector<WordSpan> spans;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (!is_word_char(text[i])) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < n) {
      if (is_word_char(text[i])) {
        ++i;
      } else if (text[i] == '\'' && i + 1 < n && is_word_char(text[i + 1]) &&
                 i > start) {
        ++i;  // interior apostrophe
      } else {
        break;
      }
    }
    spans.push_back({start, i});
  }
  return spans;
}

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace phonoise
