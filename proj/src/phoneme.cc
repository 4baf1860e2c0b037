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

#include "phonoise/phoneme.h"

#include <sstream>
#include <stdexcept>

namespace phonoise {

namespace {

const char* kArpabetConsonants[] = {
    "B", "CH", "D", "DH", "F", "G", "HH", "JH", "K", "L",  "M",  "N",
    "NG", "P", "R", "S",  "SH", "T", "TH", "V", "W", "Y", "Z", "ZH"};

const char* kArpabetVowels[] = {"AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER",
                                "EY", "IH", "IY", "OW", "OY", "UH", "UW"};

}  // namespace

bool is_valid_phoneme_shape(std::string_view symbol) {
  size_t n = symbol.size();
  if (n < 1 || n > 3) return false;
  size_t letters = n;
  if (symbol.back() >= '0' && symbol.back() <= '9') {
    if (symbol.back() > '2') return false;
    letters = n - 1;
  }
  if (letters < 1 || letters > 2) return false;
  for (size_t i = 0; i < letters; ++i) {
    if (symbol[i] < 'A' || symbol[i] > 'Z') return false;
  }
  return true;
}

Phoneme::Phoneme(std::string symbol) : symbol_(std::move(symbol)) {
  if (!is_valid_phoneme_shape(symbol_)) {
    throw std::invalid_argument("malformed phoneme symbol: '" + symbol_ + "'");
  }
}

std::string Phoneme::base() const {
  if (!symbol_.empty() && symbol_.back() >= '0' && symbol_.back() <= '2') {
    return symbol_.substr(0, symbol_.size() - 1);
  }
  return symbol_;
}

std::optional<int> Phoneme::stress() const {
  if (!symbol_.empty() && symbol_.back() >= '0' && symbol_.back() <= '2') {
    return symbol_.back() - '0';
  }
  return std::nullopt;
}

PhonemeInventory PhonemeInventory::arpabet() {
  std::set<std::string> bases;
  std::set<std::string> vowels;
  for (const char* c : kArpabetConsonants) bases.insert(c);
  for (const char* v : kArpabetVowels) {
    bases.insert(v);
    vowels.insert(v);
  }
  return PhonemeInventory(std::move(bases), std::move(vowels));
}

PhonemeInventory::PhonemeInventory(std::set<std::string> bases,
                                   std::set<std::string> vowels)
    : bases_(std::move(bases)), vowels_(std::move(vowels)) {}

bool PhonemeInventory::contains(std::string_view symbol) const {
  if (!is_valid_phoneme_shape(symbol)) return false;
  bool stressed = symbol.back() >= '0' && symbol.back() <= '2';
  std::string base(stressed ? symbol.substr(0, symbol.size() - 1) : symbol);
  if (!bases_.contains(base)) return false;
  if (stressed && !vowels_.contains(base)) return false;
  return true;
}

bool PhonemeInventory::is_vowel_base(std::string_view base) const {
  return vowels_.contains(std::string(base));
}

void PhonemeInventory::add_base(const std::string& base, bool vowel) {
  bases_.insert(base);
  if (vowel) vowels_.insert(base);
}

PhonemeSeq strip_stress(const PhonemeSeq& seq) {
  PhonemeSeq out;
  out.reserve(seq.size());
  for (const Phoneme& p : seq) out.emplace_back(p.base());
  return out;
}

std::string to_string(const PhonemeSeq& seq) {
  std::string out;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out += ' ';
    out += seq[i].symbol();
  }
  return out;
}

PhonemeSeq parse_phoneme_seq(std::string_view text) {
  PhonemeSeq out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) out.emplace_back(tok);
  return out;
}

}  // namespace phonoise
