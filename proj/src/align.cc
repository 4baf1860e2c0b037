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

#include "phonoise/align.h"

#include <algorithm>
#include <stdexcept>

namespace phonoise {

AlignedPair needleman_wunsch(const PhonemeSeq& a, const PhonemeSeq& b,
                             const AlignmentParams& params) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("needleman_wunsch: sequences must be non-empty");
  }
  const size_t n = a.size();
  const size_t m = b.size();

  std::vector<std::vector<double>> score(n + 1, std::vector<double>(m + 1, 0.0));
  for (size_t i = 1; i <= n; ++i) score[i][0] = static_cast<double>(i) * params.gap_score;
  for (size_t j = 1; j <= m; ++j) score[0][j] = static_cast<double>(j) * params.gap_score;

  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      double sub = a[i - 1].base() == b[j - 1].base() ? params.match_score
                                                      : params.mismatch_score;
      score[i][j] = std::max({score[i - 1][j - 1] + sub,
                              score[i - 1][j] + params.gap_score,
                              score[i][j - 1] + params.gap_score});
    }
  }

  AlignedPair result;
  result.score = score[n][m];

  // Traceback, preferring diagonal, then up, then left on ties.
  std::vector<AlignOp> rev;
  size_t i = n;
  size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      double sub = a[i - 1].base() == b[j - 1].base() ? params.match_score
                                                      : params.mismatch_score;
      if (score[i][j] == score[i - 1][j - 1] + sub) {
        rev.push_back({a[i - 1], b[j - 1]});
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && score[i][j] == score[i - 1][j] + params.gap_score) {
      rev.push_back({a[i - 1], std::nullopt});
      --i;
      continue;
    }
    rev.push_back({std::nullopt, b[j - 1]});
    --j;
  }
  result.ops.assign(rev.rbegin(), rev.rend());
  return result;
}

}  // namespace phonoise
