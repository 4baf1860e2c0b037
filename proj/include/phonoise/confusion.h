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

#ifndef PHONOISE_CONFUSION_H_
#define PHONOISE_CONFUSION_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "phonoise/align.h"
#include "phonoise/lexicon.h"
#include "phonoise/phoneme.h"

namespace phonoise {

// One round-trip-transliteration word pair: an L2 word and the word it
// became after transliterating into pivot language L1 and back.
struct RttPair {
  std::string original;
  std::string roundtrip;
  std::string pivot;
};

// TSV `original<TAB>roundtrip<TAB>pivot_lang`; blank and `#` lines skipped.
std::vector<RttPair> read_rtt_pairs(std::istream& in);

// Sparse P(heard phoneme | intended phoneme) for one (L1, L2) pair.
// Rows cover every phoneme seen as an alignment source; each row holds
// the identity entry plus any globally retained shifts and sums to 1.
class ConfusionMatrix {
 public:
  using Row = std::map<std::string, double>;

  ConfusionMatrix() = default;
  ConfusionMatrix(std::string l1, std::string l2,
                  std::map<std::pair<std::string, std::string>, int64_t> counts);

  const std::string& l1() const { return l1_; }
  const std::string& l2() const { return l2_; }

  bool has_row(const std::string& phoneme) const;
  // nullptr when the phoneme has no row (callers treat that as identity).
  const Row* row(const std::string& phoneme) const;
  double prob(const std::string& from, const std::string& to) const;

  const std::map<std::pair<std::string, std::string>, int64_t>& shift_counts()
      const {
    return counts_;
  }
  // Non-identity entries, highest count first.
  std::vector<std::pair<std::pair<std::string, std::string>, int64_t>>
  top_shifts() const;

  bool empty() const { return rows_.empty(); }

  // `#l1=`/`#l2=` headers then `ph_i<TAB>ph_j<TAB>count<TAB>prob` sorted
  // by ph_i, then descending prob, then ph_j. save/load round-trips
  // bit-exactly.
  void save(std::ostream& out) const;
  static ConfusionMatrix load(std::istream& in,
                              const PhonemeInventory& inventory);

 private:
  std::string l1_;
  std::string l2_;
  // Retained entries only; identity stored as (p, p).
  std::map<std::pair<std::string, std::string>, int64_t> counts_;
  std::map<std::string, Row> rows_;
};

struct MiningOptions {
  AlignmentParams alignment;
  size_t top_k = 10;
  // Strip stress digits before aligning, merging e.g. AH0/AH2 evidence.
  bool ignore_stress = false;
};

struct MiningStats {
  size_t pairs_total = 0;
  size_t pairs_used = 0;
  size_t pairs_skipped_oov = 0;
  size_t pairs_skipped_pivot = 0;  // pivot column != requested L1
  size_t pairs_identical = 0;      // original == roundtrip spelling
  int64_t insertions = 0;  // gap diagnostics, not part of the matrix
  int64_t deletions = 0;
};

// Builds the confusion matrix from RTT pairs: align each pair's phoneme
// sequences, count matches and substitutions, keep the top_k most
// frequent non-identity shifts across the whole corpus, and renormalize
// each row over identity plus retained shifts. Pairs whose words are
// not in the lexicon are skipped and counted. Throws std::runtime_error
// when no pair is usable.
ConfusionMatrix mine_confusions(const std::vector<RttPair>& pairs,
                                const Lexicon& lex, const std::string& l1,
                                const std::string& l2,
                                const MiningOptions& opts = {},
                                MiningStats* stats = nullptr);

}  // namespace phonoise

#endif  // PHONOISE_CONFUSION_H_
