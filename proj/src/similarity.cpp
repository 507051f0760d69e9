// corpuslab/similarity.cpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "corpuslab/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "corpuslab/error.hpp"
#include "corpuslab/ngramlm.hpp"
#include "corpuslab/rng.hpp"

namespace corpuslab {

std::pair<Corpus, Corpus> split_half(const Corpus& corpus, std::uint64_t seed) {
  if (corpus.sentences.size() < 2) throw Error("corpus needs >= 2 sentences to split");
  std::vector<std::size_t> idx(corpus.sentences.size());
  std::iota(idx.begin(), idx.end(), 0);
  SplitRng rng(seed ^ fnv1a(corpus.language_id));
  rng.shuffle(idx);
  const std::size_t train_n = (idx.size() + 1) / 2;
  Corpus train, test;
  train.language_id = test.language_id = corpus.language_id;
  train.source_tag = test.source_tag = corpus.source_tag;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    (i < train_n ? train : test).sentences.push_back(corpus.sentences[idx[i]]);
  }
  return {std::move(train), std::move(test)};
}

namespace {

struct PairScores {
  std::vector<std::string> languages;
  std::vector<std::vector<double>> raw;
};

// Trains one character model per language on its train half, then fills
// raw[sl][tl] from scoring tl's test half.
template <typename ScoreFn>
PairScores score_pairs(const std::map<std::string, Corpus>& corpora, int order,
                       std::uint64_t seed, ScoreFn&& score) {
  if (corpora.size() < 2) throw Error("need at least 2 languages");
  PairScores out;
  std::vector<Corpus> tests;
  std::vector<NGramModel> models;
  for (const auto& [lang, corpus] : corpora) {
    out.languages.push_back(lang);
    auto [train, test] = split_half(corpus, seed);
    LmConfig cfg;
    cfg.level = LmLevel::chars;
    cfg.order = order;
    cfg.smoothing = Smoothing::kneser_ney;
    models.push_back(NGramModel::train(train, cfg));
    tests.push_back(std::move(test));
  }
  const std::size_t n = out.languages.size();
  out.raw.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t sl = 0; sl < n; ++sl) {
    for (std::size_t tl = 0; tl < n; ++tl) {
      out.raw[sl][tl] = score(models[sl], tests[tl]);
    }
  }
  return out;
}

std::vector<std::vector<double>> min_max_scale(
    const std::vector<std::vector<double>>& raw) {
  double lo = raw[0][0], hi = raw[0][0];
  for (const auto& row : raw) {
    for (double v : row) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!(hi - lo > 1e-12)) throw Error("degenerate scale");
  std::vector<std::vector<double>> scaled = raw;
  for (auto& row : scaled) {
    for (double& v : row) v = (v - lo) / (hi - lo);
  }
  return scaled;
}

}  // namespace

SimilarityMatrix ssnglm_matrix(const std::map<std::string, Corpus>& corpora,
                               int order, std::uint64_t split_seed,
                               SimilarityMode mode, bool symmetrize) {
  PairScores scores = score_pairs(
      corpora, order, split_seed,
      [mode](const NGramModel& model, const Corpus& test) {
        double total = 0.0;
        std::size_t units = 0;
        for (const auto& sent : test.sentences) {
          const EvalResult r = model.score_sentence(sent);
          total += r.total_logprob;
          units += r.token_count;
        }
        if (mode == SimilarityMode::raw_sum) return total;
        if (units == 0) throw Error("empty test half");
        return total / static_cast<double>(units);
      });
  SimilarityMatrix m;
  m.languages = std::move(scores.languages);
  m.raw_ss = scores.raw;
  m.scaled = min_max_scale(scores.raw);
  m.mode = mode;
  if (symmetrize) {
    const std::size_t n = m.languages.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double avg = (m.scaled[i][j] + m.scaled[j][i]) / 2.0;
        m.scaled[i][j] = m.scaled[j][i] = avg;
      }
    }
    m.symmetrized = true;
  }
  return m;
}

DistanceMatrix distance_matrix(const std::map<std::string, Corpus>& corpora,
                               int order, std::uint64_t split_seed) {
  PairScores scores =
      score_pairs(corpora, order, split_seed,
                  [](const NGramModel& model, const Corpus& test) {
                    return model.evaluate(test).perplexity;
                  });
  DistanceMatrix m;
  m.languages = std::move(scores.languages);
  m.scaled = min_max_scale(scores.raw);
  for (std::size_t i = 0; i < m.languages.size(); ++i) m.scaled[i][i] = 0.0;
  return m;
}

}  // namespace corpuslab
