// corpuslab/morphseg.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef CORPUSLAB_MORPHSEG_HPP_
#define CORPUSLAB_MORPHSEG_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "corpuslab/stats.hpp"
#include "corpuslab/textcore.hpp"

namespace corpuslab {

struct MorphConfig {
  // Fixed lexicon price per morph, in bits.
  double per_morph_bits = 5.0;
  // Price per lexicon character; default is the entropy of the corpus
  // character distribution.
  std::optional<double> per_char_bits;
  // Upper bound on the joint one-split-per-word refinement enumeration.
  std::uint64_t joint_search_limit = 200000;
};

// Two-part MDL cost:
//   corpus cost  = -sum_w count(w) * sum_m log2 p(m)   with p(m) = M(m)/T
//   lexicon cost = sum_{m in lexicon} (per_char_bits*|m| + per_morph_bits)
// Search: per-word greedy recursive binary splitting to a fixed point,
// plus a bounded exact one-split-per-word joint refinement that escapes
// the shared-affix local minimum of plain greedy. Cost never increases.
class SegmentationModel {
 public:
  static SegmentationModel train(const std::map<std::string, std::uint64_t>& word_counts,
                                 const MorphConfig& config = {});

  // Best-cost split over the model lexicon via dynamic programming;
  // substrings not in the lexicon fall back to single-character morphs
  // with a smoothed cost.
  std::vector<std::string> segment(const std::string& word) const;

  double total_cost() const { return total_cost_; }
  // Cost after initialization and after every accepted search step.
  const std::vector<double>& cost_trace() const { return cost_trace_; }
  const std::map<std::string, std::uint64_t>& lexicon() const { return lexicon_; }
  const std::map<std::string, std::vector<std::string>>& segmentations() const {
    return segmentations_;
  }
  double per_char_bits() const { return per_char_bits_; }
  double per_morph_bits() const { return per_morph_bits_; }

  void save(std::ostream& out) const;
  static SegmentationModel load(std::istream& in);

  // Exact cost of a full assignment under the stated formula.
  static double assignment_cost(
      const std::map<std::string, std::uint64_t>& word_counts,
      const std::map<std::string, std::vector<std::string>>& segmentations,
      double per_char_bits, double per_morph_bits);

 private:
  std::map<std::string, std::uint64_t> lexicon_;  // morph -> token count
  std::map<std::string, std::vector<std::string>> segmentations_;
  std::uint64_t total_tokens_ = 0;
  double total_cost_ = 0.0;
  double per_char_bits_ = 0.0;
  double per_morph_bits_ = 5.0;
  std::vector<double> cost_trace_;
};

// Word frequency list of a corpus, for train().
std::map<std::string, std::uint64_t> word_freqs(const Corpus& corpus);

// Segments every token and tabulates the morph stream.
FrequencyTable morph_table(const Corpus& corpus, const SegmentationModel& model);

// Character-distribution entropy of a weighted word list (the default
// per-character lexicon price).
double char_price_bits(const std::map<std::string, std::uint64_t>& word_counts);

}  // namespace corpuslab

#endif  // CORPUSLAB_MORPHSEG_HPP_
