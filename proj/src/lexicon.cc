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

#include "phonoise/lexicon.h"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "phonoise/text_util.h"

namespace phonoise {

std::string normalize_word(std::string_view word) {
  return ascii_lower(strip_edge_punct(word));
}

bool is_valid_lexicon_word(std::string_view normalized) {
  if (normalized.empty()) return false;
  for (char c : normalized) {
    if (!((c >= 'a' && c <= 'z') || c == '\'')) return false;
  }
  return true;
}

std::optional<PhonemeSeq> Lexicon::phonemes_of(std::string_view word) const {
  auto it = entries_.find(normalize_word(word));
  if (it == entries_.end()) return std::nullopt;
  return it->second.front();
}

const std::vector<PhonemeSeq>* Lexicon::variants(std::string_view word) const {
  auto it = entries_.find(normalize_word(word));
  if (it == entries_.end()) return nullptr;
  return &it->second;
}

bool Lexicon::contains(std::string_view word) const {
  return entries_.contains(normalize_word(word));
}

void Lexicon::save(std::ostream& out) const {
  for (const auto& [word, variants] : entries_) {
    for (size_t v = 0; v < variants.size(); ++v) {
      out << word;
      if (v > 0) out << '(' << v + 1 << ')';
      out << "  " << to_string(variants[v]) << '\n';
    }
  }
}

namespace {

// Strips a trailing (n) variant marker if present.
std::string strip_variant_suffix(std::string_view word) {
  if (word.size() >= 3 && word.back() == ')') {
    size_t open = word.rfind('(');
    if (open != std::string_view::npos && open + 1 < word.size() - 1) {
      bool digits = true;
      for (size_t i = open + 1; i + 1 < word.size(); ++i) {
        if (word[i] < '0' || word[i] > '9') {
          digits = false;
          break;
        }
      }
      if (digits) return std::string(word.substr(0, open));
    }
  }
  return std::string(word);
}

}  // namespace

LexiconParseResult parse_lexicon(std::istream& in,
                                 const PhonemeInventory& inventory) {
  LexiconParseResult result;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind(";;;", 0) == 0) continue;

    std::istringstream fields(line);
    std::string raw_word;
    fields >> raw_word;
    if (raw_word.empty()) continue;

    std::string word = normalize_word(strip_variant_suffix(raw_word));
    if (!is_valid_lexicon_word(word)) {
      result.rejects.push_back({line_no, line, "invalid word after normalization"});
      continue;
    }

    PhonemeSeq seq;
    std::string sym;
    bool bad = false;
    while (fields >> sym) {
      if (!inventory.contains(sym)) {
        result.rejects.push_back({line_no, line, "unknown phoneme '" + sym + "'"});
        bad = true;
        break;
      }
      seq.emplace_back(sym);
    }
    if (bad) continue;
    if (seq.empty()) {
      result.rejects.push_back({line_no, line, "no phonemes"});
      continue;
    }
    result.lexicon.entries_[word].push_back(std::move(seq));
  }
  if (result.lexicon.entries_.empty()) {
    throw std::runtime_error("lexicon parse produced zero valid entries");
  }
  return result;
}

void write_rejects_report(std::ostream& out,
                          const std::vector<LexiconReject>& rejects) {
  for (const auto& r : rejects) {
    out << r.line_no << '\t' << r.line << '\t' << r.reason << '\n';
  }
}

}  // namespace phonoise
