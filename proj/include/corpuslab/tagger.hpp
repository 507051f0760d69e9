// corpuslab/tagger.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef CORPUSLAB_TAGGER_HPP_
#define CORPUSLAB_TAGGER_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "corpuslab/metrics.hpp"

namespace corpuslab {

// A sentence for sequence labeling. `pos` optionally carries a gold POS
// layer (used as chunking features at template level >= 3).
struct TagSentence {
  std::vector<std::string> tokens;
  std::vector<std::string> gold;
  std::vector<std::string> pos;
};

// Cumulative feature template levels:
//   0 current word; 1 + w-1, w-2; 2 + w+1, w+2;
//   3 + previous predicted tag (and POS features when present);
//   4 + word bigrams w-1w0 and w0w+1.
// Features at level >= 3 make decoding a first-order Viterbi search.
std::vector<std::string> extract_features(const TagSentence& sentence, std::size_t i,
                                          int level);

// Averaged structured perceptron over the templates above. Ties in
// decoding go to the earliest tag in tagset order.
class TaggerModel {
 public:
  static TaggerModel train(const std::vector<TagSentence>& gold,
                           const std::vector<std::string>& tagset, int level,
                           int epochs, std::uint64_t seed);

  std::vector<std::string> decode(const TagSentence& sentence) const;
  // Viterbi with BIO transition constraints: I-X only after B-X or I-X.
  std::vector<std::string> decode_bio(const TagSentence& sentence) const;

  ClassificationReport evaluate(const std::vector<TagSentence>& test) const;

  void save(std::ostream& out) const;
  static TaggerModel load(std::istream& in);

  const std::vector<std::string>& tagset() const { return tagset_; }
  int level() const { return level_; }
  double weight(const std::string& feature, const std::string& tag) const;

 private:
  std::vector<std::string> viterbi(const TagSentence& sentence, bool bio) const;
  double emission(const std::vector<std::string>& feats, std::size_t tag) const;

  std::vector<std::string> tagset_;
  std::unordered_map<std::string, std::vector<double>> weights_;  // feature -> per tag
  int level_ = 0;
  bool averaged_ = true;
  int epochs_ = 0;
  std::uint64_t seed_ = 0;

  friend class TaggerTrainer;
};

// Gold data IO: two-column TSV (token TAB tag), blank line between
// sentences. An optional third column carries the POS layer.
std::vector<TagSentence> read_tagged_tsv(std::istream& in);
void write_tagged_tsv(std::ostream& out, const std::vector<TagSentence>& sentences,
                      const std::vector<std::vector<std::string>>* predicted = nullptr);

}  // namespace corpuslab

#endif  // CORPUSLAB_TAGGER_HPP_
