// corpuslab/ngramlm.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef CORPUSLAB_NGRAMLM_HPP_
#define CORPUSLAB_NGRAMLM_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "corpuslab/textcore.hpp"

namespace corpuslab {

enum class LmLevel { word, chars };
enum class Smoothing { mle, abs_backoff, kneser_ney };

struct LmConfig {
  LmLevel level = LmLevel::word;
  int order = 3;
  Smoothing smoothing = Smoothing::kneser_ney;
  // Absolute discount D in (0,1). Unset: n1/(n1+2*n2) from the bigram
  // count-of-counts (unigram counts for order-1 models).
  std::optional<double> discount;
  // End-of-sentence sentinel. Off: only the raw token stream is modeled.
  bool sentinels = true;
};

struct EvalResult {
  double total_logprob = 0.0;  // log10
  std::size_t token_count = 0;  // scored units: tokens + end sentinels, no BOS
  double cross_entropy = 0.0;   // bits per unit
  double perplexity = 1.0;      // 2^cross_entropy
  std::size_t oov_count = 0;
};

// Immutable after training. Word- or character-level n-gram model with
// MLE, absolute-discount backoff, or interpolated Kneser-Ney smoothing.
// Character-level models insert an explicit word-boundary symbol between
// words. Reserved vocabulary surfaces: <unk>, <s>, </s>, <wb>.
class NGramModel {
 public:
  static constexpr std::uint32_t kUnk = 0;
  static constexpr std::uint32_t kBos = 1;
  static constexpr std::uint32_t kEnd = 2;
  static constexpr std::uint32_t kWb = 3;

  static NGramModel train(const Corpus& corpus, const LmConfig& config);

  // Sum of log10 conditional probabilities over the padded sequence.
  // Unseen units map to <unk>; MLE zero-probability events yield -inf.
  EvalResult score_sentence(const Sentence& sentence) const;

  // Aggregate over a corpus. Throws on -inf events (advising smoothing).
  EvalResult evaluate(const Corpus& corpus) const;
  double cross_entropy(const Corpus& corpus) const;

  // Conditional probability with history given as surface strings; the
  // history is BOS-padded or truncated on the left to order-1 units.
  double prob(const std::vector<std::string>& history, const std::string& unit) const;

  void save(std::ostream& out) const;
  static NGramModel load(std::istream& in);

  const LmConfig& config() const { return config_; }
  double discount() const { return discount_; }
  // Every id a model can be asked to predict (vocabulary incl. <unk>,
  // excl. <s>); used by the normalization property checks.
  std::vector<std::uint32_t> event_ids() const;
  std::vector<std::vector<std::uint32_t>> seen_full_histories() const;
  double prob_ids(std::span<const std::uint32_t> history, std::uint32_t unit) const;
  std::size_t vocab_size() const { return vocab_.size(); }
  const std::string& symbol(std::uint32_t id) const { return vocab_[id]; }

 private:
  NGramModel() = default;
  void count_sequence(const std::vector<std::uint32_t>& scored);
  void finalize();
  std::vector<std::uint32_t> sentence_units(const Sentence& sentence,
                                            std::size_t* oov) const;
  std::uint32_t lookup(const std::string& unit, std::size_t* oov) const;
  double prob_level(int k, std::span<const std::uint32_t> history,
                    std::uint32_t unit) const;
  double unigram_prob(std::uint32_t unit) const;
  double uniform_q(std::uint32_t unit) const;

  LmConfig config_;
  double discount_ = 0.5;
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, std::uint32_t> symbol_ids_;
  // Index k holds the k-gram tables (index 0 unused).
  std::vector<std::unordered_map<std::string, std::uint64_t>> counts_;
  std::vector<std::unordered_map<std::string, std::uint64_t>> ctx_total_;
  std::vector<std::unordered_map<std::string, std::uint64_t>> ctx_distinct_;
  std::vector<std::unordered_map<std::string, std::uint64_t>> cont_;
  std::vector<std::unordered_map<std::string, std::uint64_t>> cont_ctx_total_;
  std::vector<std::unordered_map<std::string, std::uint64_t>> cont_ctx_distinct_;
  std::vector<std::unordered_map<std::string, double>> alpha_;
  std::uint64_t unigram_total_ = 0;
  std::uint64_t cont1_total_ = 0;     // number of distinct bigram types
  std::uint64_t cont1_distinct_ = 0;  // units with a nonzero continuation count
  std::uint64_t uniform_support_ = 0;
};

}  // namespace corpuslab

#endif  // CORPUSLAB_NGRAMLM_HPP_
