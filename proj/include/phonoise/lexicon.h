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

#ifndef PHONOISE_LEXICON_H_
#define PHONOISE_LEXICON_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phonoise/phoneme.h"

namespace phonoise {

// Lowercases, strips surrounding punctuation, keeps interior apostrophes
// (CMUdict has keys like DON'T). Returns empty if nothing remains.
std::string normalize_word(std::string_view word);

// True iff the normalized word is non-empty and contains only letters
// and apostrophes.
bool is_valid_lexicon_word(std::string_view normalized);

// Pronunciation dictionary. Immutable after parsing; safe for
// unsynchronized concurrent reads. The canonical pronunciation of a word
// is its first-listed variant.
class Lexicon {
 public:
  // Canonical (first-variant) pronunciation, or nullopt when the word is
  // out of vocabulary.
  std::optional<PhonemeSeq> phonemes_of(std::string_view word) const;

  // All pronunciation variants in file order; nullptr when OOV.
  const std::vector<PhonemeSeq>* variants(std::string_view word) const;

  bool contains(std::string_view word) const;
  size_t size() const { return entries_.size(); }

  const std::map<std::string, std::vector<PhonemeSeq>>& entries() const {
    return entries_;
  }

  // CMUdict-format dump: canonical entry as WORD, later variants as
  // WORD(n). parse(save(lex)) == lex.
  void save(std::ostream& out) const;

 private:
  friend struct LexiconParseResult;
  friend LexiconParseResult parse_lexicon(std::istream&,
                                          const PhonemeInventory&);
  std::map<std::string, std::vector<PhonemeSeq>> entries_;
};

struct LexiconReject {
  size_t line_no = 0;  // 1-based
  std::string line;
  std::string reason;
};

struct LexiconParseResult {
  Lexicon lexicon;
  std::vector<LexiconReject> rejects;
};

// Parses CMUdict format: `WORD  PH1 PH2 ...`, `;;;` comment lines,
// WORD(n) pronunciation variants. Malformed lines are recorded in
// `rejects` and skipped; throws std::runtime_error only if no valid
// entry survives.
LexiconParseResult parse_lexicon(std::istream& in,
                                 const PhonemeInventory& inventory);

// `line_no<TAB>line<TAB>reason` per reject.
void write_rejects_report(std::ostream& out,
                          const std::vector<LexiconReject>& rejects);

}  // namespace phonoise

#endif  // PHONOISE_LEXICON_H_
