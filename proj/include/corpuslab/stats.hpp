// corpuslab/stats.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef CORPUSLAB_STATS_HPP_
#define CORPUSLAB_STATS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "corpuslab/textcore.hpp"

namespace corpuslab {

struct FrequencyRow {
  std::string unit;
  std::uint64_t freq = 0;
  double rf = 0.0;  // relative frequency
  double cc = 0.0;  // cumulative coverage
};

// Rows sorted by frequency descending, ties by unit code point order.
struct FrequencyTable {
  std::vector<FrequencyRow> rows;
  std::uint64_t total = 0;
};

struct DiversityReport {
  std::size_t tokens = 0;
  std::size_t types = 0;
  std::size_t rare_types = 0;  // frequency 1
  double ttr = 0.0;
  double mattr = 0.0;
  std::size_t window = 0;
};

struct LengthStats {
  CountMode basis = CountMode::types;
  std::size_t min = 0;
  std::size_t max = 0;
  double mean = 0.0;
  double median = 0.0;
  double stddev = 0.0;  // population standard deviation
  std::map<std::size_t, std::size_t> histogram;  // length -> count
};

using UnitStream = std::span<const std::string>;

FrequencyTable freq_table(UnitStream units);

double ttr(UnitStream units);

// Mean TTR over every contiguous window of exactly `window` units; equals
// ttr(units) when the stream fits in one window.
double mattr(UnitStream units, std::size_t window = 500);

DiversityReport diversity(UnitStream units, std::size_t window = 500);

// For each n in `percents`, samples max(1, floor(n*tokens)) token positions
// without replacement (partial Fisher-Yates on SplitRng(seed), percents
// drawn in the given order from one generator) and reports
// distinct-types-in-sample / total types.
std::map<double, double> type_coverage(UnitStream units,
                                       const std::vector<double>& percents,
                                       std::uint64_t seed);

// Word lengths in code points (input corpus is assumed NFC-normalized).
LengthStats length_stats(const Corpus& corpus, CountMode basis);

std::vector<std::pair<std::size_t, std::uint64_t>> zipf_points(const FrequencyTable& table);

// Shannon entropy (bits) of the empirical unigram distribution.
double entropy(UnitStream units);

// Characters of a token with punctuation-class code points removed.
std::vector<std::string> word_chars(const std::string& token);

// Within-word character n-grams of the whole corpus, in corpus order.
std::vector<std::string> char_ngram_stream(const Corpus& corpus, std::size_t n);

// TTR/MATTR per n-gram size 1..n_max. Throws if the corpus has no
// eligible characters at all; sizes longer than every word report zeros.
std::vector<DiversityReport> char_ngram_profile(const Corpus& corpus,
                                                std::size_t n_max = 7,
                                                std::size_t window = 500);

}  // namespace corpuslab

#endif  // CORPUSLAB_STATS_HPP_
