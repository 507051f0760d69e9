// corpuslab/similarity.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef CORPUSLAB_SIMILARITY_HPP_
#define CORPUSLAB_SIMILARITY_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "corpuslab/textcore.hpp"

namespace corpuslab {

enum class SimilarityMode { raw_sum, per_char_mean };

struct SimilarityMatrix {
  std::vector<std::string> languages;
  std::vector<std::vector<double>> raw_ss;  // source-language rows
  std::vector<std::vector<double>> scaled;  // min-max scaled over all pairs
  SimilarityMode mode = SimilarityMode::per_char_mean;
  bool symmetrized = false;
};

struct DistanceMatrix {
  std::vector<std::string> languages;
  std::vector<std::vector<double>> scaled;  // diagonal forced to 0
};

// Seeded 50/50 sentence split; train is the first ceil(n/2) of the
// shuffle. The per-language generator is SplitRng(seed ^ fnv1a(lang)).
std::pair<Corpus, Corpus> split_half(const Corpus& corpus, std::uint64_t seed);

// Cross-lingual similarity: a character Kneser-Ney model per source
// language scores the target's held-out half; scores min-max scale over
// all ordered pairs including self pairs.
SimilarityMatrix ssnglm_matrix(const std::map<std::string, Corpus>& corpora,
                               int order = 5, std::uint64_t split_seed = 1,
                               SimilarityMode mode = SimilarityMode::per_char_mean,
                               bool symmetrize = false);

// Min-max scaled cross perplexity with the diagonal forced to zero.
DistanceMatrix distance_matrix(const std::map<std::string, Corpus>& corpora,
                               int order = 7, std::uint64_t split_seed = 1);

}  // namespace corpuslab

#endif  // CORPUSLAB_SIMILARITY_HPP_
