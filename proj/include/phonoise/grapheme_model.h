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

#ifndef PHONOISE_GRAPHEME_MODEL_H_
#define PHONOISE_GRAPHEME_MODEL_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "phonoise/lexicon.h"
#include "phonoise/phoneme.h"

namespace phonoise {

// Viterbi segmentation of one lexicon entry: one grapheme chunk per
// phoneme, possibly empty; chunks concatenate to the word.
struct GraphemeSegmentation {
  std::string word;
  size_t variant = 0;
  std::vector<std::string> chunks;
};

// P(grapheme chunk | phoneme) with the raw counts behind it. Each
// phoneme's emission row sums to 1: prob = count / phoneme frequency.
class PhonemeGraphemeModel {
 public:
  using Row = std::map<std::string, double, std::less<>>;

  PhonemeGraphemeModel() = default;
  PhonemeGraphemeModel(
      std::map<std::string, std::map<std::string, int64_t>> counts);

  bool has_phoneme(std::string_view phoneme) const;
  // Emission row for a phoneme; throws std::out_of_range naming the
  // phoneme when absent.
  const Row& row(std::string_view phoneme) const;
  // 0 when the pair was never observed.
  double prob(std::string_view phoneme, std::string_view chunk) const;
  int64_t phoneme_freq(std::string_view phoneme) const;

  const std::map<std::string, std::map<std::string, int64_t>>& counts() const {
    return counts_;
  }
  size_t phoneme_count() const { return counts_.size(); }

  // TSV `phoneme<TAB>chunk<TAB>count<TAB>prob`, sorted by phoneme, then
  // descending prob, then chunk.
  void save(std::ostream& out) const;
  static PhonemeGraphemeModel load(std::istream& in);

 private:
  std::map<std::string, std::map<std::string, int64_t>> counts_;
  std::map<std::string, Row, std::less<>> emission_;
  std::map<std::string, int64_t, std::less<>> freq_;
};

struct LexiconAlignOptions {
  size_t max_chunk_len = 4;
  int max_iters = 10;
  unsigned workers = 1;
};

struct LexiconAlignResult {
  std::vector<GraphemeSegmentation> segmentations;
  PhonemeGraphemeModel model;
  // "word" or "word(variant)" for entries that cannot be segmented.
  std::vector<std::string> skipped;
  int iterations = 0;
  bool converged = false;
};

// Iterative hard-EM alignment of the whole lexicon: start from uniform
// chunk probabilities, Viterbi-segment every entry (all pronunciation
// variants contribute evidence), re-estimate counts, repeat until the
// segmentations stabilize or max_iters. Deterministic for any worker
// count.
LexiconAlignResult align_lexicon(const Lexicon& lex,
                                 const LexiconAlignOptions& opts = {});

// Best segmentation of `word` letters against `phonemes` under a fixed
// model; used for diagnostics and tests. Returns false when the entry
// cannot be segmented (more letters than phonemes can absorb).
bool segment_word(std::string_view word, const PhonemeSeq& phonemes,
                  const PhonemeGraphemeModel& model, size_t max_chunk_len,
                  std::vector<std::string>* chunks_out);

}  // namespace phonoise

#endif  // PHONOISE_GRAPHEME_MODEL_H_
