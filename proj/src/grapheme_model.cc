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

#include "phonoise/grapheme_model.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "phonoise/io_util.h"
#include "phonoise/text_util.h"

namespace phonoise {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Stand-in log-prob for unseen (phoneme, chunk) pairs during Viterbi;
// far below any real count/freq ratio so observed pairs always win.
constexpr double kUnseenLogProb = -27.631021115928547;  // log(1e-12)

// Segmentation DP over one entry. scorer(i, chunk) returns the log
// emission score of `chunk` from phoneme i. Ties prefer chunk lengths
// 1, 2, ..., max_chunk_len, then 0, which spreads letters across
// phonemes on the uniform first iteration.
template <typename Scorer>
bool segment_dp(std::string_view word, size_t n_phonemes, size_t max_chunk_len,
                const Scorer& scorer, std::vector<std::string>* chunks_out) {
  const size_t n = n_phonemes;
  const size_t m = word.size();
  if (n == 0) return false;
  if (m > n * max_chunk_len) return false;

  std::vector<size_t> pref;
  for (size_t c = 1; c <= max_chunk_len; ++c) pref.push_back(c);
  pref.push_back(0);

  std::vector<std::vector<double>> dp(n + 1,
                                      std::vector<double>(m + 1, kNegInf));
  std::vector<std::vector<size_t>> back(
      n + 1, std::vector<size_t>(m + 1, std::numeric_limits<size_t>::max()));
  dp[0][0] = 0.0;

  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 0; j <= m; ++j) {
      double best = kNegInf;
      size_t best_c = std::numeric_limits<size_t>::max();
      for (size_t c : pref) {
        if (c > j) continue;
        double prev = dp[i - 1][j - c];
        if (prev == kNegInf) continue;
        double s = prev + scorer(i - 1, word.substr(j - c, c));
        if (s > best) {
          best = s;
          best_c = c;
        }
      }
      dp[i][j] = best;
      back[i][j] = best_c;
    }
  }
  if (dp[n][m] == kNegInf) return false;

  chunks_out->assign(n, std::string());
  size_t j = m;
  for (size_t i = n; i > 0; --i) {
    size_t c = back[i][j];
    (*chunks_out)[i - 1] = std::string(word.substr(j - c, c));
    j -= c;
  }
  return true;
}

}  // namespace

PhonemeGraphemeModel::PhonemeGraphemeModel(
    std::map<std::string, std::map<std::string, int64_t>> counts)
    : counts_(std::move(counts)) {
  for (const auto& [ph, row] : counts_) {
    int64_t total = 0;
    for (const auto& [chunk, count] : row) {
      if (count <= 0) {
        throw std::runtime_error("non-positive count for phoneme " + ph);
      }
      total += count;
    }
    freq_[ph] = total;
    Row& probs = emission_[ph];
    for (const auto& [chunk, count] : row) {
      probs[chunk] = static_cast<double>(count) / static_cast<double>(total);
    }
  }
}

bool PhonemeGraphemeModel::has_phoneme(std::string_view phoneme) const {
  return emission_.find(phoneme) != emission_.end();
}

const PhonemeGraphemeModel::Row& PhonemeGraphemeModel::row(
    std::string_view phoneme) const {
  auto it = emission_.find(phoneme);
  if (it == emission_.end()) {
    throw std::out_of_range("phoneme missing from grapheme model: " +
                            std::string(phoneme));
  }
  return it->second;
}

double PhonemeGraphemeModel::prob(std::string_view phoneme,
                                  std::string_view chunk) const {
  auto it = emission_.find(phoneme);
  if (it == emission_.end()) return 0.0;
  auto jt = it->second.find(chunk);
  return jt == it->second.end() ? 0.0 : jt->second;
}

int64_t PhonemeGraphemeModel::phoneme_freq(std::string_view phoneme) const {
  auto it = freq_.find(phoneme);
  return it == freq_.end() ? 0 : it->second;
}

void PhonemeGraphemeModel::save(std::ostream& out) const {
  for (const auto& [ph, row] : counts_) {
    int64_t total = freq_.at(ph);
    // Descending probability, chunk as tie-break.
    std::vector<std::pair<std::string, int64_t>> entries(row.begin(), row.end());
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) {
                       if (a.second != b.second) return a.second > b.second;
                       return a.first < b.first;
                     });
    for (const auto& [chunk, count] : entries) {
      double p = static_cast<double>(count) / static_cast<double>(total);
      out << ph << '\t' << chunk << '\t' << count << '\t' << format_double(p)
          << '\n';
    }
  }
}

PhonemeGraphemeModel PhonemeGraphemeModel::load(std::istream& in) {
  std::map<std::string, std::map<std::string, int64_t>> counts;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 4) {
      throw std::runtime_error("grapheme model line " + std::to_string(line_no) +
                               ": expected 4 fields");
    }
    if (!is_valid_phoneme_shape(fields[0])) {
      throw std::runtime_error("grapheme model line " + std::to_string(line_no) +
                               ": bad phoneme '" + fields[0] + "'");
    }
    int64_t count = parse_int(fields[2]);
    if (count <= 0) {
      throw std::runtime_error("grapheme model line " + std::to_string(line_no) +
                               ": non-positive count");
    }
    auto [it, inserted] = counts[fields[0]].emplace(fields[1], count);
    if (!inserted) {
      throw std::runtime_error("grapheme model line " + std::to_string(line_no) +
                               ": duplicate entry");
    }
  }
  if (counts.empty()) throw std::runtime_error("empty grapheme model");
  PhonemeGraphemeModel model(std::move(counts));
  // Emission rows sum to 1 by construction; verify anyway so corrupted
  // files fail loudly.
  for (const auto& [ph, row] : model.emission_) {
    double sum = 0.0;
    for (const auto& [chunk, p] : row) sum += p;
    if (std::abs(sum - 1.0) > 1e-9) {
      throw std::runtime_error("grapheme model row for " + ph +
                               " sums to " + format_double(sum));
    }
  }
  return model;
}

bool segment_word(std::string_view word, const PhonemeSeq& phonemes,
                  const PhonemeGraphemeModel& model, size_t max_chunk_len,
                  std::vector<std::string>* chunks_out) {
  std::vector<const PhonemeGraphemeModel::Row*> rows(phonemes.size(), nullptr);
  for (size_t i = 0; i < phonemes.size(); ++i) {
    if (model.has_phoneme(phonemes[i].symbol())) {
      rows[i] = &model.row(phonemes[i].symbol());
    }
  }
  auto scorer = [&rows](size_t i, std::string_view chunk) {
    if (rows[i] == nullptr) return kUnseenLogProb;
    auto it = rows[i]->find(chunk);
    return it == rows[i]->end() ? kUnseenLogProb : std::log(it->second);
  };
  return segment_dp(word, phonemes.size(), max_chunk_len, scorer, chunks_out);
}

LexiconAlignResult align_lexicon(const Lexicon& lex,
                                 const LexiconAlignOptions& opts) {
  if (lex.size() == 0) {
    throw std::invalid_argument("align_lexicon: empty lexicon");
  }
  struct Item {
    const std::string* word;
    const PhonemeSeq* phonemes;
    size_t variant;
  };
  LexiconAlignResult result;
  std::vector<Item> items;
  for (const auto& [word, variants] : lex.entries()) {
    for (size_t v = 0; v < variants.size(); ++v) {
      if (word.size() > variants[v].size() * opts.max_chunk_len) {
        result.skipped.push_back(
            v == 0 ? word : word + "(" + std::to_string(v + 1) + ")");
        continue;
      }
      items.push_back({&word, &variants[v], v});
    }
  }
  if (items.empty()) {
    throw std::runtime_error("align_lexicon: no segmentable entries");
  }

  std::vector<std::vector<std::string>> segs(items.size());
  std::map<std::string, std::map<std::string, int64_t>> counts;

  for (int iter = 1; iter <= opts.max_iters; ++iter) {
    PhonemeGraphemeModel model(counts);
    const bool uniform = iter == 1;
    std::vector<std::vector<std::string>> next(items.size());

    parallel_shards(items.size(), opts.workers,
                    [&](unsigned, size_t begin, size_t end) {
      std::vector<std::string> chunks;
      for (size_t idx = begin; idx < end; ++idx) {
        const Item& item = items[idx];
        if (uniform) {
          auto scorer = [](size_t, std::string_view) { return 0.0; };
          segment_dp(*item.word, item.phonemes->size(), opts.max_chunk_len,
                     scorer, &chunks);
        } else {
          segment_word(*item.word, *item.phonemes, model, opts.max_chunk_len,
                       &chunks);
        }
        next[idx] = chunks;
      }
    });

    size_t changed = 0;
    for (size_t idx = 0; idx < items.size(); ++idx) {
      if (next[idx] != segs[idx]) ++changed;
    }
    segs.swap(next);
    result.iterations = iter;

    counts.clear();
    for (size_t idx = 0; idx < items.size(); ++idx) {
      const PhonemeSeq& phs = *items[idx].phonemes;
      for (size_t i = 0; i < phs.size(); ++i) {
        ++counts[phs[i].symbol()][segs[idx][i]];
      }
    }

    if (changed == 0) {
      result.converged = true;
      break;
    }
  }

  result.model = PhonemeGraphemeModel(std::move(counts));
  result.segmentations.reserve(items.size());
  for (size_t idx = 0; idx < items.size(); ++idx) {
    result.segmentations.push_back(
        {*items[idx].word, items[idx].variant, std::move(segs[idx])});
  }
  return result;
}

}  // namespace phonoise
