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

#ifndef PHONOISE_NGRAM_H_
#define PHONOISE_NGRAM_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace phonoise {

inline constexpr const char* kSentenceStart = "<s>";
inline constexpr const char* kSentenceEnd = "</s>";

// Trigram / bigram counts over (left, word, right) windows, with the
// marginals needed by the stupid-backoff confidence score. Sentence
// boundaries contribute <s> / </s> context tokens; only real tokens
// appear as centers. Immutable once built; concurrent reads are safe.
class NGramStore {
 public:
  int64_t trigram(const std::string& l, const std::string& w,
                  const std::string& r) const;
  int64_t left_bigram(const std::string& l, const std::string& w) const;
  int64_t right_bigram(const std::string& w, const std::string& r) const;

  // Sum over center words for a fixed context.
  int64_t left_ctx_total(const std::string& l, const std::string& r) const;
  int64_t left_total(const std::string& l) const;
  int64_t right_total(const std::string& r) const;

  size_t trigram_types() const { return tri_.size(); }
  bool empty() const { return tri_.empty(); }

  void add_sentence(const std::vector<std::string>& tokens);
  void merge(const NGramStore& other);

  // Versioned TSV: `3<TAB>l<TAB>w<TAB>r<TAB>count` and
  // `2l/2r<TAB>...<TAB>count` rows; marginals are rebuilt on load.
  void save(std::ostream& out) const;
  static NGramStore load(std::istream& in);

 private:
  friend struct NGramStoreTestPeer;
  std::map<std::vector<std::string>, int64_t> tri_;
  std::map<std::vector<std::string>, int64_t> left_bi_;
  std::map<std::vector<std::string>, int64_t> right_bi_;
  std::map<std::vector<std::string>, int64_t> left_ctx_total_;
  std::map<std::string, int64_t> left_total_;
  std::map<std::string, int64_t> right_total_;
};

// Counts every (left, word, right) window of the tokenized sentences.
// Output is independent of worker count.
NGramStore build_ngrams(const std::vector<std::vector<std::string>>& sentences,
                        unsigned workers = 1);

// Stupid-backoff confidence that `word` belongs between `left` and
// `right`:
//   F(l,w,r) / sum_w' F(l,w',r)                   when the context was seen
//   0.4 * (F(l,w)/sum F(l,w') + F(w,r)/sum F(w',r))  otherwise
// with 0/0 fractions defined as 0. Total and pure.
double confidence(const NGramStore& store, const std::string& left,
                  const std::string& word, const std::string& right);

inline constexpr double kBackoffWeight = 0.4;

}  // namespace phonoise

#endif  // PHONOISE_NGRAM_H_
