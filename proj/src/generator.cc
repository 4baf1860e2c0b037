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

#include "phonoise/generator.h"

#include <algorithm>
#include <istream>
#include <ostream>

#include "phonoise/io_util.h"
#include "phonoise/text_util.h"

namespace phonoise {

namespace {

struct PartialPath {
  std::string spelling;
  PhonemeSeq corrupted;
  std::vector<std::string> chunks;
  std::vector<ShiftRecord> shifts;
  double prob = 1.0;
};

// Total order on paths so the top-K cut is deterministic under ties.
bool path_less(const PartialPath& a, const PartialPath& b) {
  if (a.prob != b.prob) return a.prob > b.prob;
  if (a.spelling != b.spelling) return a.spelling < b.spelling;
  if (a.corrupted != b.corrupted) return a.corrupted < b.corrupted;
  return a.chunks < b.chunks;
}

}  // namespace

std::string MisspellingCandidate::shifts_string() const {
  std::string out;
  for (const ShiftRecord& s : primary().shifts) {
    if (!out.empty()) out += ';';
    out += std::to_string(s.position);
    out += ':';
    out += s.from;
    out += '>';
    out += s.to;
  }
  return out;
}

std::vector<MisspellingCandidate> corrupt(const std::string& word,
                                          const Lexicon& lex,
                                          const ConfusionMatrix& cm,
                                          const PhonemeGraphemeModel& pgm,
                                          const GeneratorConfig& cfg) {
  const std::string norm = normalize_word(word);
  auto phonemes = lex.phonemes_of(norm);
  if (!phonemes) throw WordNotFoundError(norm);

  std::vector<PartialPath> beam(1);
  ConfusionMatrix::Row identity_row;

  for (size_t i = 0; i < phonemes->size(); ++i) {
    const std::string& sym = (*phonemes)[i].symbol();
    const ConfusionMatrix::Row* row = cm.row(sym);
    if (row == nullptr) {
      identity_row = {{sym, 1.0}};
      row = &identity_row;
    }
    std::vector<PartialPath> next;
    next.reserve(beam.size() * 4);
    for (const auto& [target, cprob] : *row) {
      const PhonemeGraphemeModel::Row& emissions = pgm.row(target);
      Phoneme target_ph(target);
      for (const PartialPath& p : beam) {
        for (const auto& [chunk, eprob] : emissions) {
          PartialPath q = p;
          q.spelling += chunk;
          q.corrupted.push_back(target_ph);
          q.chunks.push_back(chunk);
          if (target != sym) q.shifts.push_back({i, sym, target});
          q.prob *= cprob * eprob;
          next.push_back(std::move(q));
        }
      }
    }
    std::sort(next.begin(), next.end(), path_less);
    if (next.size() > cfg.beam_width) next.resize(cfg.beam_width);
    beam = std::move(next);
  }

  // Merge paths that collide on the same spelling.
  std::map<std::string, MisspellingCandidate> merged;
  for (PartialPath& p : beam) {
    MisspellingCandidate& cand = merged[p.spelling];
    if (cand.paths.empty()) {
      cand.word = norm;
      cand.misspelling = p.spelling;
      cand.score = 0.0;
    }
    CorruptionPath path{std::move(p.corrupted), std::move(p.chunks),
                        std::move(p.shifts), p.prob};
    if (cfg.merge == GeneratorConfig::Merge::kSum) {
      cand.score += path.prob;
    } else {
      cand.score = std::max(cand.score, path.prob);
    }
    cand.paths.push_back(std::move(path));
  }

  std::vector<MisspellingCandidate> out;
  for (auto& [spelling, cand] : merged) {
    if (cfg.drop_identity && spelling == norm) continue;
    if (cand.score < cfg.min_prob) continue;
    std::stable_sort(cand.paths.begin(), cand.paths.end(),
                     [](const CorruptionPath& a, const CorruptionPath& b) {
                       return a.prob > b.prob;
                     });
    out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end(),
            [](const MisspellingCandidate& a, const MisspellingCandidate& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.misspelling < b.misspelling;
            });
  return out;
}

BatchResult corrupt_batch(const std::vector<std::string>& words,
                          const Lexicon& lex, const ConfusionMatrix& cm,
                          const PhonemeGraphemeModel& pgm,
                          const GeneratorConfig& cfg, unsigned workers) {
  BatchResult result;
  std::vector<std::vector<MisspellingCandidate>> lists(words.size());
  std::vector<char> oov(words.size(), 0);
  parallel_shards(words.size(), workers,
                  [&](unsigned, size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      try {
        lists[i] = corrupt(words[i], lex, cm, pgm, cfg);
      } catch (const WordNotFoundError&) {
        oov[i] = 1;
      }
    }
  });
  for (size_t i = 0; i < words.size(); ++i) {
    if (oov[i]) {
      result.skipped_oov.push_back(normalize_word(words[i]));
    } else {
      result.by_word[normalize_word(words[i])] = std::move(lists[i]);
    }
  }
  return result;
}

void write_candidates(std::ostream& out,
                      const std::vector<MisspellingCandidate>& candidates) {
  for (const MisspellingCandidate& c : candidates) {
    out << c.word << '\t' << c.misspelling << '\t' << format_double(c.score)
        << '\t' << c.shifts_string() << '\n';
  }
}

void write_candidates(std::ostream& out, const BatchResult& batch) {
  for (const auto& [word, candidates] : batch.by_word) {
    write_candidates(out, candidates);
  }
}

std::vector<CandidateRecord> read_candidates(std::istream& in) {
  std::vector<CandidateRecord> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 4) {
      throw std::runtime_error("candidates line " + std::to_string(line_no) +
                               ": expected 4 fields");
    }
    out.push_back({fields[0], fields[1], parse_double(fields[2]), fields[3]});
  }
  return out;
}

}  // namespace phonoise
