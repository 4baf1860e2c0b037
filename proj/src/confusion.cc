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

#include "phonoise/confusion.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "phonoise/io_util.h"
#include "phonoise/text_util.h"

namespace phonoise {

std::vector<RttPair> read_rtt_pairs(std::istream& in) {
  std::vector<RttPair> pairs;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty() ||
        fields[2].empty()) {
      throw std::runtime_error("rtt pairs line " + std::to_string(line_no) +
                               ": expected original<TAB>roundtrip<TAB>pivot");
    }
    pairs.push_back({fields[0], fields[1], fields[2]});
  }
  return pairs;
}

ConfusionMatrix::ConfusionMatrix(
    std::string l1, std::string l2,
    std::map<std::pair<std::string, std::string>, int64_t> counts)
    : l1_(std::move(l1)), l2_(std::move(l2)), counts_(std::move(counts)) {
  std::map<std::string, int64_t> row_totals;
  for (const auto& [pair, count] : counts_) {
    if (count <= 0) {
      throw std::runtime_error("confusion count must be positive for " +
                               pair.first + " -> " + pair.second);
    }
    row_totals[pair.first] += count;
  }
  for (const auto& [pair, count] : counts_) {
    rows_[pair.first][pair.second] =
        static_cast<double>(count) / static_cast<double>(row_totals[pair.first]);
  }
}

bool ConfusionMatrix::has_row(const std::string& phoneme) const {
  return rows_.contains(phoneme);
}

const ConfusionMatrix::Row* ConfusionMatrix::row(
    const std::string& phoneme) const {
  auto it = rows_.find(phoneme);
  return it == rows_.end() ? nullptr : &it->second;
}

double ConfusionMatrix::prob(const std::string& from,
                             const std::string& to) const {
  const Row* r = row(from);
  if (r == nullptr) return from == to ? 1.0 : 0.0;
  auto it = r->find(to);
  return it == r->end() ? 0.0 : it->second;
}

std::vector<std::pair<std::pair<std::string, std::string>, int64_t>>
ConfusionMatrix::top_shifts() const {
  std::vector<std::pair<std::pair<std::string, std::string>, int64_t>> shifts;
  for (const auto& entry : counts_) {
    if (entry.first.first != entry.first.second) shifts.push_back(entry);
  }
  std::stable_sort(shifts.begin(), shifts.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second != b.second) return a.second > b.second;
                     return a.first < b.first;
                   });
  return shifts;
}

void ConfusionMatrix::save(std::ostream& out) const {
  out << "#l1=" << l1_ << '\n';
  out << "#l2=" << l2_ << '\n';
  for (const auto& [from, row] : rows_) {
    std::vector<std::pair<std::string, double>> entries(row.begin(), row.end());
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) {
                       if (a.second != b.second) return a.second > b.second;
                       return a.first < b.first;
                     });
    for (const auto& [to, p] : entries) {
      out << from << '\t' << to << '\t' << counts_.at({from, to}) << '\t'
          << format_double(p) << '\n';
    }
  }
}

ConfusionMatrix ConfusionMatrix::load(std::istream& in,
                                      const PhonemeInventory& inventory) {
  std::string l1;
  std::string l2;
  std::map<std::pair<std::string, std::string>, int64_t> counts;
  std::map<std::string, double> row_prob_sums;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("#l1=", 0) == 0) {
      l1 = line.substr(4);
      continue;
    }
    if (line.rfind("#l2=", 0) == 0) {
      l2 = line.substr(4);
      continue;
    }
    if (line[0] == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 4) {
      throw std::runtime_error("matrix line " + std::to_string(line_no) +
                               ": expected ph_i<TAB>ph_j<TAB>count<TAB>prob");
    }
    for (int k = 0; k < 2; ++k) {
      if (!inventory.contains(fields[k])) {
        throw std::runtime_error("matrix line " + std::to_string(line_no) +
                                 ": unknown phoneme '" + fields[k] + "'");
      }
    }
    int64_t count = parse_int(fields[2]);
    double prob = parse_double(fields[3]);
    if (count <= 0 || prob <= 0.0 || prob > 1.0) {
      throw std::runtime_error("matrix line " + std::to_string(line_no) +
                               ": count/prob out of range");
    }
    if (!counts.emplace(std::make_pair(fields[0], fields[1]), count).second) {
      throw std::runtime_error("matrix line " + std::to_string(line_no) +
                               ": duplicate entry " + fields[0] + " -> " +
                               fields[1]);
    }
    row_prob_sums[fields[0]] += prob;
  }
  if (counts.empty()) throw std::runtime_error("empty confusion matrix");
  if (l1.empty() || l2.empty()) {
    throw std::runtime_error("confusion matrix missing #l1=/#l2= headers");
  }
  for (const auto& [from, sum] : row_prob_sums) {
    if (std::abs(sum - 1.0) > 1e-9) {
      throw std::runtime_error("matrix row for " + from + " sums to " +
                               format_double(sum));
    }
  }
  return ConfusionMatrix(l1, l2, std::move(counts));
}

ConfusionMatrix mine_confusions(const std::vector<RttPair>& pairs,
                                const Lexicon& lex, const std::string& l1,
                                const std::string& l2,
                                const MiningOptions& opts,
                                MiningStats* stats) {
  MiningStats local;
  MiningStats& s = stats ? *stats : local;
  s = MiningStats{};
  s.pairs_total = pairs.size();

  std::map<std::pair<std::string, std::string>, int64_t> counts;
  for (const RttPair& pair : pairs) {
    if (pair.pivot != l1) {
      ++s.pairs_skipped_pivot;
      continue;
    }
    auto orig = lex.phonemes_of(pair.original);
    auto rtt = lex.phonemes_of(pair.roundtrip);
    if (!orig || !rtt) {
      ++s.pairs_skipped_oov;
      continue;
    }
    ++s.pairs_used;
    if (normalize_word(pair.original) == normalize_word(pair.roundtrip)) {
      ++s.pairs_identical;
    }
    PhonemeSeq a = opts.ignore_stress ? strip_stress(*orig) : *orig;
    PhonemeSeq b = opts.ignore_stress ? strip_stress(*rtt) : *rtt;
    AlignedPair aligned = needleman_wunsch(a, b, opts.alignment);
    for (const AlignOp& op : aligned.ops) {
      if (op.left && op.right) {
        ++counts[{op.left->symbol(), op.right->symbol()}];
      } else if (op.left) {
        ++s.deletions;
      } else {
        ++s.insertions;
      }
    }
  }
  if (s.pairs_used == 0) {
    throw std::runtime_error("mine_confusions: no usable pairs (total=" +
                             std::to_string(s.pairs_total) + ", oov=" +
                             std::to_string(s.pairs_skipped_oov) + ")");
  }

  // Rank non-identity shifts by raw count and keep the global top_k.
  std::vector<std::pair<std::pair<std::string, std::string>, int64_t>> shifts;
  for (const auto& entry : counts) {
    if (entry.first.first != entry.first.second) shifts.push_back(entry);
  }
  std::stable_sort(shifts.begin(), shifts.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second != b.second) return a.second > b.second;
                     return a.first < b.first;
                   });
  if (shifts.size() > opts.top_k) shifts.resize(opts.top_k);

  std::map<std::pair<std::string, std::string>, int64_t> retained;
  for (const auto& [pair, count] : counts) {
    if (pair.first == pair.second) retained.emplace(pair, count);
  }
  for (const auto& [pair, count] : shifts) retained.emplace(pair, count);

  return ConfusionMatrix(l1, l2, std::move(retained));
}

}  // namespace phonoise
