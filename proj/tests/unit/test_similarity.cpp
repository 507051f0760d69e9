// tests/unit/test_similarity.cpp
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

#include "corpuslab/error.hpp"
#include "corpuslab/rng.hpp"
#include "corpuslab/similarity.hpp"

using namespace corpuslab;

namespace {

// Synthetic language over a private consonant set: random short "words"
// drawn from per-language characters with language-specific endings.
Corpus synth_language(const std::string& id, const std::vector<std::string>& alphabet,
                      std::size_t n_sentences, std::uint64_t seed) {
  SplitRng rng(seed);
  Corpus c;
  c.language_id = id;
  for (std::size_t s = 0; s < n_sentences; ++s) {
    Sentence sent;
    const std::size_t words = 3 + rng.below(5);
    for (std::size_t w = 0; w < words; ++w) {
      std::string word;
      const std::size_t len = 2 + rng.below(4);
      for (std::size_t k = 0; k < len; ++k) {
        word += alphabet[rng.below(alphabet.size())];
      }
      sent.tokens.push_back(std::move(word));
    }
    c.sentences.push_back(std::move(sent));
  }
  return c;
}

std::map<std::string, Corpus> disjoint_pair(std::size_t n = 60) {
  return {
      {"alpha", synth_language("alpha", {"क", "ख", "ग", "घ"}, n, 1)},
      {"beta", synth_language("beta", {"प", "फ", "ब", "भ"}, n, 2)},
  };
}

}  // namespace

TEST_CASE("split_half: deterministic, covers the corpus") {
  const Corpus c = synth_language("x", {"क"}, 11, 3);
  const auto [train1, test1] = split_half(c, 5);
  const auto [train2, test2] = split_half(c, 5);
  CHECK(train1.sentences.size() == 6);
  CHECK(test1.sentences.size() == 5);
  REQUIRE(train1.sentences.size() == train2.sentences.size());
  for (std::size_t i = 0; i < train1.sentences.size(); ++i) {
    CHECK(train1.sentences[i].tokens == train2.sentences[i].tokens);
  }
  CHECK_THROWS_AS(split_half(Corpus{}, 5), Error);
}

TEST_CASE("ssnglm: disjoint alphabets put the diagonal on top") {
  const SimilarityMatrix m =
      ssnglm_matrix(disjoint_pair(), 3, 7, SimilarityMode::per_char_mean);
  REQUIRE(m.languages.size() == 2);
  CHECK(m.raw_ss[0][0] > m.raw_ss[0][1]);
  CHECK(m.raw_ss[1][1] > m.raw_ss[1][0]);
  for (const auto& row : m.scaled) {
    for (double v : row) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("ssnglm: exactly one 1 and one 0 before symmetrization") {
  // Alphabet sizes differ so no two languages are isomorphic under
  // character renaming (renaming-symmetric corpora tie exactly).
  std::map<std::string, Corpus> corpora = {
      {"a", synth_language("a", {"क", "ख"}, 40, 1)},
      {"b", synth_language("b", {"ग", "घ", "ङ"}, 40, 2)},
      {"c", synth_language("c", {"च", "छ", "ज", "झ"}, 40, 3)},
  };
  const SimilarityMatrix m =
      ssnglm_matrix(corpora, 3, 9, SimilarityMode::per_char_mean);
  int ones = 0, zeros = 0;
  for (const auto& row : m.scaled) {
    for (double v : row) {
      if (v == 1.0) ++ones;
      if (v == 0.0) ++zeros;
    }
  }
  CHECK(ones == 1);
  CHECK(zeros == 1);
}

TEST_CASE("ssnglm: symmetrization averages mirror entries") {
  const SimilarityMatrix m =
      ssnglm_matrix(disjoint_pair(), 3, 7, SimilarityMode::per_char_mean, true);
  CHECK(m.symmetrized);
  CHECK(m.scaled[0][1] == doctest::Approx(m.scaled[1][0]).epsilon(1e-15));
}

TEST_CASE("ssnglm: reproducible for a fixed seed, moved by the seed") {
  const SimilarityMatrix a =
      ssnglm_matrix(disjoint_pair(), 3, 7, SimilarityMode::raw_sum);
  const SimilarityMatrix b =
      ssnglm_matrix(disjoint_pair(), 3, 7, SimilarityMode::raw_sum);
  for (std::size_t i = 0; i < a.raw_ss.size(); ++i) {
    for (std::size_t j = 0; j < a.raw_ss.size(); ++j) {
      CHECK(a.raw_ss[i][j] == doctest::Approx(b.raw_ss[i][j]).epsilon(1e-15));
    }
  }
}

TEST_CASE("ssnglm: fewer than two languages or a flat scale errors") {
  std::map<std::string, Corpus> one = {{"a", synth_language("a", {"क"}, 10, 1)}};
  CHECK_THROWS_AS(ssnglm_matrix(one, 3, 7, SimilarityMode::raw_sum), Error);

  // Every sentence identical in both corpora: all pair scores coincide.
  Corpus flat;
  flat.language_id = "same";
  for (int i = 0; i < 8; ++i) flat.sentences.push_back(Sentence{{"क", "ख"}});
  Corpus flat2 = flat;
  flat2.language_id = "same2";
  std::map<std::string, Corpus> pair = {{"same", flat}, {"same2", flat2}};
  CHECK_THROWS_WITH_AS(ssnglm_matrix(pair, 2, 7, SimilarityMode::per_char_mean),
                       "degenerate scale", Error);
}

TEST_CASE("distance: zero diagonal, self pairs near the minimum") {
  const DistanceMatrix d = distance_matrix(disjoint_pair(), 3, 7);
  REQUIRE(d.languages.size() == 2);
  CHECK(d.scaled[0][0] == 0.0);
  CHECK(d.scaled[1][1] == 0.0);
  CHECK(d.scaled[0][1] > 0.5);
  CHECK(d.scaled[1][0] > 0.5);
}

TEST_CASE("similarity and distance anti-correlate on a synthetic suite") {
  std::map<std::string, Corpus> corpora = {
      {"a", synth_language("a", {"क", "ख", "ग"}, 50, 1)},
      {"b", synth_language("b", {"ख", "ग", "घ"}, 50, 2)},  // overlaps with a
      {"c", synth_language("c", {"प", "फ", "ब"}, 50, 3)},
      {"d", synth_language("d", {"य", "र", "ल"}, 50, 4)},
  };
  const SimilarityMatrix sim =
      ssnglm_matrix(corpora, 3, 11, SimilarityMode::per_char_mean);
  const DistanceMatrix dist = distance_matrix(corpora, 3, 11);

  // Spearman rank correlation over off-diagonal ordered pairs.
  std::vector<double> s, t;
  for (std::size_t i = 0; i < sim.languages.size(); ++i) {
    for (std::size_t j = 0; j < sim.languages.size(); ++j) {
      if (i == j) continue;
      s.push_back(sim.scaled[i][j]);
      t.push_back(dist.scaled[i][j]);
    }
  }
  auto ranks = [](const std::vector<double>& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] < v[i]) r[i] += 1.0;
      }
    }
    return r;
  };
  const std::vector<double> rs = ranks(s), rt = ranks(t);
  double ms = 0, mt = 0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    ms += rs[i];
    mt += rt[i];
  }
  ms /= rs.size();
  mt /= rt.size();
  double num = 0, ds = 0, dt = 0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    num += (rs[i] - ms) * (rt[i] - mt);
    ds += (rs[i] - ms) * (rs[i] - ms);
    dt += (rt[i] - mt) * (rt[i] - mt);
  }
  const double spearman = num / std::sqrt(ds * dt);
  CHECK(spearman < 0.0);
}
