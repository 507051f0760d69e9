// corpuslab/langid.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef CORPUSLAB_LANGID_HPP_
#define CORPUSLAB_LANGID_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "corpuslab/metrics.hpp"
#include "corpuslab/ngramlm.hpp"
#include "corpuslab/textcore.hpp"

namespace corpuslab {

enum class LiBackend { lm_score, rank_profile };

struct LangIdConfig {
  LiBackend backend = LiBackend::lm_score;
  int order = 5;          // character LM order (lm_score)
  int profile_k = 400;    // ranked list length (rank_profile)
  int profile_nmax = 5;   // n-gram sizes 1..nmax (rank_profile)
};

// Language identification over per-language character n-gram models.
// lm_score picks the argmax of the mean per-character log probability;
// rank_profile the argmin of the out-of-place rank distance. Ties go to
// the language id that sorts first.
class IdentifierModel {
 public:
  static IdentifierModel train(const std::map<std::string, Corpus>& corpora,
                               const LangIdConfig& config);

  // Whitespace-tokenizes the text and scores it as one sentence.
  std::pair<std::string, std::map<std::string, double>> identify(
      const std::string& text) const;
  std::pair<std::string, std::map<std::string, double>> identify_sentence(
      const Sentence& sentence) const;

  ClassificationReport evaluate(
      const std::vector<std::pair<std::string, Sentence>>& test) const;

  void save(const std::string& dir) const;
  static IdentifierModel load(const std::string& dir);

  const std::vector<std::string>& languages() const { return languages_; }
  const LangIdConfig& config() const { return config_; }

 private:
  LangIdConfig config_;
  std::vector<std::string> languages_;
  std::vector<NGramModel> models_;                       // lm_score
  std::vector<std::vector<std::string>> rank_profiles_;  // rank_profile
};

// Deterministic 80/20 sentence split (seeded shuffle).
std::pair<Corpus, Corpus> split_80_20(const Corpus& corpus, std::uint64_t seed);

// Ranked n-gram profile (sizes 1..nmax, frequency descending, ties by
// length then code point order), truncated to k entries.
std::vector<std::string> rank_profile(const Corpus& corpus, int nmax, int k);

}  // namespace corpuslab

#endif  // CORPUSLAB_LANGID_HPP_
