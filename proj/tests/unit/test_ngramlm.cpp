// tests/unit/test_ngramlm.cpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "corpuslab/error.hpp"
#include "corpuslab/ngramlm.hpp"
#include "corpuslab/rng.hpp"

using namespace corpuslab;

namespace {

Corpus lines(std::initializer_list<const char*> sentences) {
  Corpus c;
  for (const char* line : sentences) {
    Sentence s;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) s.tokens.push_back(tok);
    c.sentences.push_back(std::move(s));
  }
  return c;
}

LmConfig cfg(int order, Smoothing smoothing, bool sentinels = true,
             std::optional<double> discount = std::nullopt) {
  LmConfig c;
  c.level = LmLevel::word;
  c.order = order;
  c.smoothing = smoothing;
  c.sentinels = sentinels;
  c.discount = discount;
  return c;
}

}  // namespace

TEST_CASE("mle bigram ratios on 'a b a b'") {
  const NGramModel m = NGramModel::train(lines({"a b a b"}), cfg(2, Smoothing::mle));
  CHECK(m.prob({"a"}, "b") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.prob({"b"}, "a") == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(m.prob({"b"}, "</s>") == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("mle unigram without sentinels") {
  const NGramModel m =
      NGramModel::train(lines({"a a a"}), cfg(1, Smoothing::mle, false));
  CHECK(m.prob({}, "a") == doctest::Approx(1.0));
  CHECK(m.evaluate(lines({"a a a"})).perplexity == doctest::Approx(1.0));
}

TEST_CASE("kneser-ney hand-derived value on 'a b a c'") {
  const NGramModel m =
      NGramModel::train(lines({"a b a c"}), cfg(2, Smoothing::kneser_ney, true, 0.5));
  CHECK(m.prob({"a"}, "b") == doctest::Approx(0.35).epsilon(1e-9));
}

TEST_CASE("sequence_logprob: product of trained ratios") {
  const NGramModel m = NGramModel::train(lines({"a b a b"}), cfg(2, Smoothing::mle));
  const EvalResult r = m.score_sentence(Sentence{{"a", "b"}});
  // p(a|BOS)=1, p(b|a)=1, p(END|b)=0.5
  CHECK(r.total_logprob == doctest::Approx(std::log10(0.5)).epsilon(1e-9));
  CHECK(r.token_count == 3);
}

TEST_CASE("smoothed models stay finite on OOV") {
  for (const Smoothing s : {Smoothing::abs_backoff, Smoothing::kneser_ney}) {
    const NGramModel m = NGramModel::train(lines({"a b a c", "b c a"}), cfg(2, s));
    const EvalResult r = m.score_sentence(Sentence{{"a", "zzz"}});
    CHECK(std::isfinite(r.total_logprob));
    CHECK(r.oov_count == 1);
  }
}

TEST_CASE("mle refuses unseen events at evaluation") {
  const NGramModel m = NGramModel::train(lines({"a b"}), cfg(2, Smoothing::mle));
  const EvalResult r = m.score_sentence(Sentence{{"b", "a"}});
  CHECK(std::isinf(r.total_logprob));
  CHECK_THROWS_WITH_AS(m.evaluate(lines({"b a"})),
                       "zero-probability event under MLE; train with smoothing",
                       Error);
}

TEST_CASE("normalization: every seen history sums to one") {
  const Corpus corpus = lines({"a b a c b", "c a a b", "b b c a"});
  for (const Smoothing s :
       {Smoothing::mle, Smoothing::abs_backoff, Smoothing::kneser_ney}) {
    for (int order = 1; order <= 3; ++order) {
      const NGramModel m = NGramModel::train(corpus, cfg(order, s));
      const auto events = m.event_ids();
      if (order == 1) {
        double sum = 0.0;
        for (const auto id : events) sum += m.prob_ids({}, id);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        continue;
      }
      for (const auto& history : m.seen_full_histories()) {
        double sum = 0.0;
        for (const auto id : events) sum += m.prob_ids(history, id);
        CAPTURE(order);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("char-level normalization with word boundaries") {
  Corpus corpus = lines({"क ख", "खक ख"});
  LmConfig c = cfg(2, Smoothing::kneser_ney);
  c.level = LmLevel::chars;
  const NGramModel m = NGramModel::train(corpus, c);
  const auto events = m.event_ids();
  for (const auto& history : m.seen_full_histories()) {
    double sum = 0.0;
    for (const auto id : events) sum += m.prob_ids(history, id);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("perplexity identities") {
  SplitRng rng(31);
  Corpus corpus;
  for (int s = 0; s < 20; ++s) {
    Sentence sent;
    const std::size_t n = 1 + rng.below(8);
    for (std::size_t i = 0; i < n; ++i) {
      sent.tokens.push_back(std::string(1, static_cast<char>('a' + rng.below(5))));
    }
    corpus.sentences.push_back(std::move(sent));
  }
  const NGramModel m = NGramModel::train(corpus, cfg(2, Smoothing::kneser_ney));
  const EvalResult r = m.evaluate(corpus);
  CHECK(r.perplexity == doctest::Approx(std::exp2(r.cross_entropy)).epsilon(1e-12));
  const double via_log10 =
      std::pow(10.0, -r.total_logprob / static_cast<double>(r.token_count));
  CHECK(r.perplexity == doctest::Approx(via_log10).epsilon(1e-9));
  CHECK(r.perplexity >= 1.0);
}

TEST_CASE("uniform model over 4 symbols has perplexity 4") {
  const NGramModel m =
      NGramModel::train(lines({"a b c d"}), cfg(1, Smoothing::mle, false));
  const EvalResult r = m.evaluate(lines({"a c d b a", "d d a"}));
  CHECK(r.perplexity == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("periodic corpus reaches perplexity 1 at sufficient order") {
  Corpus corpus;
  for (int i = 0; i < 1000; ++i) {
    corpus.sentences.push_back(Sentence{{"a", "b", "a", "b"}});
  }
  const NGramModel m = NGramModel::train(corpus, cfg(5, Smoothing::mle));
  CHECK(m.evaluate(corpus).perplexity == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("kneser-ney fits training data better than uniform") {
  const Corpus corpus = lines({"a b a b c", "a b b a", "c a b"});
  const NGramModel m = NGramModel::train(corpus, cfg(2, Smoothing::kneser_ney));
  const double uniform_pp = static_cast<double>(m.event_ids().size());
  CHECK(m.evaluate(corpus).perplexity <= uniform_pp);
}

TEST_CASE("serialization: deterministic, exact round trip") {
  const Corpus corpus = lines({"a b a c", "b a"});
  const NGramModel m1 = NGramModel::train(corpus, cfg(3, Smoothing::kneser_ney));
  const NGramModel m2 = NGramModel::train(corpus, cfg(3, Smoothing::kneser_ney));
  std::ostringstream s1, s2;
  m1.save(s1);
  m2.save(s2);
  CHECK(s1.str() == s2.str());

  std::istringstream in(s1.str());
  const NGramModel loaded = NGramModel::load(in);
  std::ostringstream s3;
  loaded.save(s3);
  CHECK(s3.str() == s1.str());
  CHECK(loaded.prob({"a"}, "b") == doctest::Approx(m1.prob({"a"}, "b")).epsilon(1e-15));
}

TEST_CASE("cross entropy: self-predictable text and disjoint alphabets") {
  Corpus periodic;
  for (int i = 0; i < 200; ++i) periodic.sentences.push_back(Sentence{{"कख", "कख"}});
  LmConfig c = cfg(5, Smoothing::kneser_ney);
  c.level = LmLevel::chars;
  const NGramModel self_model = NGramModel::train(periodic, c);
  const double self_ce = self_model.cross_entropy(periodic);
  CHECK(self_ce < 0.7);  // near-deterministic text

  Corpus other;
  for (int i = 0; i < 200; ++i) other.sentences.push_back(Sentence{{"pq", "rs"}});
  const double cross_ce = self_model.cross_entropy(other);
  CHECK(cross_ce > self_ce);
}

TEST_CASE("training errors") {
  CHECK_THROWS_WITH_AS(NGramModel::train(Corpus{}, cfg(2, Smoothing::mle)),
                       "empty input", Error);
  CHECK_THROWS_AS(NGramModel::train(lines({"a"}), cfg(0, Smoothing::mle)), Error);
  CHECK_THROWS_AS(
      NGramModel::train(lines({"a"}), cfg(2, Smoothing::kneser_ney, true, 1.5)),
      Error);
}

TEST_CASE("empty sentence scores only the end sentinel") {
  const NGramModel m = NGramModel::train(lines({"a b"}), cfg(2, Smoothing::kneser_ney));
  const EvalResult r = m.score_sentence(Sentence{});
  CHECK(r.token_count == 1);
  CHECK(std::isfinite(r.total_logprob));
}
