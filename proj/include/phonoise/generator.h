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

#ifndef PHONOISE_GENERATOR_H_
#define PHONOISE_GENERATOR_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "phonoise/confusion.h"
#include "phonoise/grapheme_model.h"
#include "phonoise/lexicon.h"

namespace phonoise {

struct GeneratorConfig {
  // Beam width K; the beam is exact, so these are the global top-K
  // corruption paths.
  size_t beam_width = 10;
  // Candidates scoring below this are dropped from the output.
  double min_prob = 0.0;
  // Remove candidates whose spelling equals the source word.
  bool drop_identity = true;
  // How paths that collide on the same spelling combine into the
  // candidate score.
  enum class Merge { kSum, kMax };
  Merge merge = Merge::kSum;
};

struct ShiftRecord {
  size_t position = 0;  // 0-based phoneme index
  std::string from;
  std::string to;

  bool operator==(const ShiftRecord&) const = default;
};

// One complete corruption path: a corrupted phoneme sequence plus the
// grapheme chunk emitted at each position.
struct CorruptionPath {
  PhonemeSeq corrupted;
  std::vector<std::string> chunks;
  std::vector<ShiftRecord> shifts;  // non-identity substitutions only
  double prob = 0.0;  // product of confusion and emission factors
};

struct MisspellingCandidate {
  std::string word;  // normalized source word
  std::string misspelling;
  // Sum (or max, per config) of the probs of `paths`.
  double score = 0.0;
  // Every surviving path that spells `misspelling`, best first.
  std::vector<CorruptionPath> paths;

  const CorruptionPath& primary() const { return paths.front(); }
  // `;`-joined `pos:from>to` for the primary path.
  std::string shifts_string() const;
};

class WordNotFoundError : public std::runtime_error {
 public:
  explicit WordNotFoundError(const std::string& word)
      : std::runtime_error("word not in lexicon: " + word), word_(word) {}
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

// Top-K misspellings of `word` under the factored corruption model:
// every phoneme is independently rewritten via its confusion row
// (phonemes without a row pass through with probability 1) and the
// rewritten phoneme emits a grapheme chunk via the grapheme model.
// The beam keeps the exact global top-K paths; paths that collide on a
// spelling are merged. Output is sorted by descending score with
// lexicographic tie-break, identity spellings removed last.
//
// Throws WordNotFoundError for OOV words and std::out_of_range when a
// required phoneme is missing from the grapheme model.
std::vector<MisspellingCandidate> corrupt(const std::string& word,
                                          const Lexicon& lex,
                                          const ConfusionMatrix& cm,
                                          const PhonemeGraphemeModel& pgm,
                                          const GeneratorConfig& cfg = {});

struct BatchResult {
  std::map<std::string, std::vector<MisspellingCandidate>> by_word;
  std::vector<std::string> skipped_oov;
};

// corrupt() for every word; OOV words are reported in skipped_oov, not
// fatal. Output is independent of worker count.
BatchResult corrupt_batch(const std::vector<std::string>& words,
                          const Lexicon& lex, const ConfusionMatrix& cm,
                          const PhonemeGraphemeModel& pgm,
                          const GeneratorConfig& cfg = {},
                          unsigned workers = 1);

// TSV `word<TAB>misspelling<TAB>score<TAB>shifts`.
void write_candidates(std::ostream& out,
                      const std::vector<MisspellingCandidate>& candidates);
void write_candidates(std::ostream& out, const BatchResult& batch);

struct CandidateRecord {
  std::string word;
  std::string misspelling;
  double score = 0.0;
  std::string shifts;
};
std::vector<CandidateRecord> read_candidates(std::istream& in);

}  // namespace phonoise

#endif  // PHONOISE_GENERATOR_H_
