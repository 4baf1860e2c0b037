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

#ifndef PHONOISE_PHONEME_H_
#define PHONOISE_PHONEME_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace phonoise {

// One ARPAbet symbol, e.g. "DH" or "AH0". Vowels may carry a stress
// digit 0/1/2; consonants never do.
class Phoneme {
 public:
  // Throws std::invalid_argument unless the symbol matches
  // [A-Z]{1,2}[0-2]?. Inventory membership is checked separately by
  // PhonemeInventory.
  explicit Phoneme(std::string symbol);

  const std::string& symbol() const { return symbol_; }
  // Symbol with any stress digit removed, e.g. "AH0" -> "AH".
  std::string base() const;
  std::optional<int> stress() const;

  bool operator==(const Phoneme& other) const { return symbol_ == other.symbol_; }
  auto operator<=>(const Phoneme& other) const { return symbol_ <=> other.symbol_; }

 private:
  std::string symbol_;
};

using PhonemeSeq = std::vector<Phoneme>;

// Returns true iff `symbol` matches [A-Z]{1,2}[0-2]?.
bool is_valid_phoneme_shape(std::string_view symbol);

// The set of base symbols a lexicon may use. Defaults to the 39-symbol
// ARPAbet; extra symbols can be added for non-standard dictionaries.
class PhonemeInventory {
 public:
  static PhonemeInventory arpabet();

  PhonemeInventory(std::set<std::string> bases, std::set<std::string> vowels);

  // Accepts a full symbol (with optional stress digit). Rejects symbols
  // whose base is unknown, and stress digits on non-vowels.
  bool contains(std::string_view symbol) const;
  bool is_vowel_base(std::string_view base) const;

  void add_base(const std::string& base, bool vowel);
  const std::set<std::string>& bases() const { return bases_; }

 private:
  std::set<std::string> bases_;
  std::set<std::string> vowels_;
};

// Removes vowel stress digits from every phoneme; length preserved.
// Idempotent.
PhonemeSeq strip_stress(const PhonemeSeq& seq);

// Space-joined symbols, e.g. "DH EY1".
std::string to_string(const PhonemeSeq& seq);

// Parses whitespace-separated symbols. Throws std::invalid_argument on a
// malformed symbol; returns an empty sequence for blank input.
PhonemeSeq parse_phoneme_seq(std::string_view text);

}  // namespace phonoise

#endif  // PHONOISE_PHONEME_H_
