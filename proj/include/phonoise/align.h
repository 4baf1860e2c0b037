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

#ifndef PHONOISE_ALIGN_H_
#define PHONOISE_ALIGN_H_

#include <optional>
#include <vector>

#include "phonoise/phoneme.h"

namespace phonoise {

struct AlignmentParams {
  double match_score = 1.0;
  double mismatch_score = -1.0;
  double gap_score = -1.0;
};

// One aligned position; at most one side is a gap (nullopt).
struct AlignOp {
  std::optional<Phoneme> left;
  std::optional<Phoneme> right;

  bool is_substitution() const {
    return left && right && !(*left == *right);
  }
  bool is_match() const { return left && right && *left == *right; }
  bool is_gap() const { return !left || !right; }
};

struct AlignedPair {
  std::vector<AlignOp> ops;
  double score = 0.0;
};

// Global alignment maximizing total score. Match/mismatch is decided on
// base symbols (stress digits ignored for scoring) while ops carry the
// full stressed symbols, so stress-only shifts remain visible to
// downstream counting. Traceback ties prefer diagonal, then up (consume
// from `a`), then left. Both sequences must be non-empty.
AlignedPair needleman_wunsch(const PhonemeSeq& a, const PhonemeSeq& b,
                             const AlignmentParams& params = {});

}  // namespace phonoise

#endif  // PHONOISE_ALIGN_H_
