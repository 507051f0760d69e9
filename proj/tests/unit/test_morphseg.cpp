// tests/unit/test_morphseg.cpp
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
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "corpuslab/error.hpp"
#include "corpuslab/morphseg.hpp"
#include "corpuslab/rng.hpp"
#include "corpuslab/utf8.hpp"
#include "gen.hpp"

using namespace corpuslab;

namespace oracle {

// Independent reimplementation of the two-part cost, straight from the
// formula: corpus bits - sum_w c(w)*sum_m log2(M(m)/T); lexicon bits
// per morph: gamma*|m| + beta.
double cost(const std::map<std::string, std::uint64_t>& words,
            const std::map<std::string, std::vector<std::string>>& segs,
            double gamma, double beta) {
  std::map<std::string, std::uint64_t> morphs;
  std::uint64_t total = 0;
  for (const auto& [word, count] : words) {
    for (const auto& piece : segs.at(word)) {
      morphs[piece] += count;
      total += count;
    }
  }
  double corpus = 0.0;
  double lex = 0.0;
  for (const auto& [piece, count] : morphs) {
    corpus -= static_cast<double>(count) *
              std::log2(static_cast<double>(count) / static_cast<double>(total));
    lex += gamma * static_cast<double>(utf8_length(piece)) + beta;
  }
  return corpus + lex;
}

std::vector<std::vector<std::string>> all_segmentations(const std::string& word) {
  const auto cps = utf8_decode(word);
  const std::size_t n = cps.size();
  std::vector<std::vector<std::string>> out;
  const std::size_t cuts = n - 1;
  for (std::size_t mask = 0; mask < (1ull << cuts); ++mask) {
    std::vector<std::string> seg;
    std::string piece;
    for (std::size_t i = 0; i < n; ++i) {
      utf8_append(piece, cps[i]);
      if (i == n - 1 || (mask >> i) & 1) {
        seg.push_back(piece);
        piece.clear();
      }
    }
    out.push_back(std::move(seg));
  }
  return out;
}

// Full exhaustive minimum over every multi-split assignment.
double min_cost(const std::map<std::string, std::uint64_t>& words, double gamma,
                double beta) {
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<std::string>>> options;
  for (const auto& [word, count] : words) {
    names.push_back(word);
    options.push_back(all_segmentations(word));
  }
  std::map<std::string, std::vector<std::string>> segs;
  double best = std::numeric_limits<double>::infinity();
  auto dfs = [&](auto&& self, std::size_t w) -> void {
    if (w == names.size()) {
      best = std::min(best, cost(words, segs, gamma, beta));
      return;
    }
    for (const auto& seg : options[w]) {
      segs[names[w]] = seg;
      self(self, w + 1);
    }
  };
  dfs(dfs, 0);
  return best;
}

}  // namespace oracle

namespace {

std::map<std::string, std::uint64_t> walked_suite() {
  return {{"walked", 5}, {"walking", 5}, {"talked", 5}, {"talking", 5}};
}

}  // namespace

TEST_CASE("single word stays whole") {
  const auto model = SegmentationModel::train({{"abc", 1}});
  REQUIRE(model.lexicon().size() == 1);
  CHECK(model.lexicon().count("abc") == 1);
  const double exhaustive =
      oracle::min_cost({{"abc", 1}}, model.per_char_bits(), model.per_morph_bits());
  CHECK(model.total_cost() == doctest::Approx(exhaustive).epsilon(1e-9));
}

TEST_CASE("walked/talking suite recovers the affix lexicon at optimal cost") {
  const auto words = walked_suite();
  const auto model = SegmentationModel::train(words);
  CHECK(model.lexicon().count("walk") == 1);
  CHECK(model.lexicon().count("talk") == 1);
  CHECK(model.lexicon().count("ed") == 1);
  CHECK(model.lexicon().count("ing") == 1);

  const double exhaustive =
      oracle::min_cost(words, model.per_char_bits(), model.per_morph_bits());
  CHECK(model.total_cost() == doctest::Approx(exhaustive).epsilon(1e-9));

  // The model's own cost report agrees with the independent formula.
  const double recomputed = oracle::cost(words, model.segmentations(),
                                         model.per_char_bits(),
                                         model.per_morph_bits());
  CHECK(model.total_cost() == doctest::Approx(recomputed).epsilon(1e-9));
}

TEST_CASE("greedy cost never increases across iterations") {
  const auto model = SegmentationModel::train(walked_suite());
  const auto& trace = model.cost_trace();
  REQUIRE(!trace.empty());
  for (std::size_t i = 1; i < trace.size(); ++i) {
    CHECK(trace[i] <= trace[i - 1] + 1e-9);
  }
}

TEST_CASE("heavily repeated word: final cost not above the unsplit cost") {
  const std::map<std::string, std::uint64_t> words = {{"aaaa", 100}};
  const auto model = SegmentationModel::train(words);
  const std::map<std::string, std::vector<std::string>> unsplit = {
      {"aaaa", {"aaaa"}}};
  const double unsplit_cost = oracle::cost(words, unsplit, model.per_char_bits(),
                                           model.per_morph_bits());
  CHECK(model.total_cost() <= unsplit_cost + 1e-9);
}

TEST_CASE("small-vocabulary grid matches exhaustive search exactly") {
  const std::vector<std::map<std::string, std::uint64_t>> grid = {
      {{"abc", 1}},
      {{"walked", 5}, {"talked", 5}},
      {{"king", 2}, {"ring", 2}, {"sing", 2}},
      {{"redo", 3}, {"undo", 3}},
      {{"abab", 4}, {"ab", 7}},
      {{"aaaa", 100}},
      {{"xy", 1}, {"yx", 1}},
      {{"hatke", 2}, {"hatna", 2}, {"hatta", 2}},
      {{"ababa", 3}, {"babab", 3}},
      {{"ed", 5}, {"walked", 5}, {"talked", 5}},
  };
  for (const auto& words : grid) {
    const auto model = SegmentationModel::train(words);
    const double exhaustive =
        oracle::min_cost(words, model.per_char_bits(), model.per_morph_bits());
    CAPTURE(words.begin()->first);
    CHECK(model.total_cost() == doctest::Approx(exhaustive).epsilon(1e-9));
    CHECK(model.total_cost() >= exhaustive - 1e-9);  // oracle is a lower bound
  }
}

TEST_CASE("segment: lexicon morphs, identity, character fallback") {
  const auto model = SegmentationModel::train(walked_suite());
  CHECK(model.segment("walked") == std::vector<std::string>{"walk", "ed"});
  CHECK(model.segment("walk") == std::vector<std::string>{"walk"});
  CHECK(model.segment("xyz") == std::vector<std::string>{"x", "y", "z"});
  CHECK_THROWS_AS(model.segment(""), Error);
}

TEST_CASE("segment: lossless on fuzzed Devanagari words") {
  SplitRng rng(41);
  std::map<std::string, std::uint64_t> words;
  for (int i = 0; i < 50; ++i) words[testgen::random_word(rng)] += 1;
  const auto model = SegmentationModel::train(words);
  for (int i = 0; i < 500; ++i) {
    const std::string w = testgen::random_word(rng);
    std::string joined;
    for (const auto& m : model.segment(w)) {
      CHECK(!m.empty());
      joined += m;
    }
    CHECK(joined == w);
  }
}

TEST_CASE("morph_table composes segmentation with the frequency table") {
  const auto model = SegmentationModel::train(walked_suite());
  Corpus c;
  c.sentences.push_back({{"walked"}});
  const FrequencyTable t = morph_table(c, model);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].unit == "ed");  // tie broken by code point order
  CHECK(t.rows[0].freq == 1);
  CHECK(t.rows[0].rf == doctest::Approx(0.5));
  CHECK(t.rows[0].cc == doctest::Approx(0.5));
  CHECK(t.rows[1].unit == "walk");
  CHECK(t.rows[1].cc == doctest::Approx(1.0));
}

TEST_CASE("morph_table on an unsplittable corpus equals the word table") {
  const auto model = SegmentationModel::train({{"क", 2}, {"ख", 3}});
  Corpus c;
  c.sentences.push_back({{"क", "ख", "ख"}});
  const FrequencyTable morphs = morph_table(c, model);
  std::vector<std::string> words = {"क", "ख", "ख"};
  const FrequencyTable direct = freq_table(words);
  REQUIRE(morphs.rows.size() == direct.rows.size());
  for (std::size_t i = 0; i < morphs.rows.size(); ++i) {
    CHECK(morphs.rows[i].unit == direct.rows[i].unit);
    CHECK(morphs.rows[i].freq == direct.rows[i].freq);
  }
}

TEST_CASE("model file round trip") {
  const auto model = SegmentationModel::train(walked_suite());
  std::ostringstream out;
  model.save(out);
  std::istringstream in(out.str());
  const auto loaded = SegmentationModel::load(in);
  CHECK(loaded.segment("walked") == model.segment("walked"));
  std::ostringstream out2;
  loaded.save(out2);
  CHECK(out2.str() == out.str());
}

TEST_CASE("training errors") {
  CHECK_THROWS_WITH_AS(SegmentationModel::train({}), "empty input", Error);
  CHECK_THROWS_AS(SegmentationModel::train({{"", 1}}), Error);
  CHECK_THROWS_AS(SegmentationModel::train({{"a", 0}}), Error);
}
