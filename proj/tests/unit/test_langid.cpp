// tests/unit/test_langid.cpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include <filesystem>

#include "corpuslab/error.hpp"
#include "corpuslab/langid.hpp"
#include "corpuslab/metrics.hpp"
#include "corpuslab/rng.hpp"

using namespace corpuslab;

namespace {

Corpus repeat_sentences(const std::string& id,
                        std::initializer_list<const char*> lines, int times) {
  Corpus c;
  c.language_id = id;
  for (int t = 0; t < times; ++t) {
    for (const char* line : lines) {
      Sentence s;
      std::istringstream in(line);
      std::string tok;
      while (in >> tok) s.tokens.push_back(tok);
      c.sentences.push_back(std::move(s));
    }
  }
  return c;
}

std::map<std::string, Corpus> disjoint_corpora() {
  return {
      {"dev", repeat_sentences("dev", {"क ख ग", "ख क कग", "गख क"}, 5)},
      {"lat", repeat_sentences("lat", {"ab cd ef", "cd ab", "ef ab cd"}, 5)},
  };
}

}  // namespace

TEST_CASE("classification_report: the worked confusion example") {
  // 2 classes, confusion [[9,1],[0,10]].
  std::vector<std::string> gold, pred;
  for (int i = 0; i < 9; ++i) gold.push_back("c1"), pred.push_back("c1");
  gold.push_back("c1"), pred.push_back("c2");
  for (int i = 0; i < 10; ++i) gold.push_back("c2"), pred.push_back("c2");
  const ClassificationReport r = classification_report({"c1", "c2"}, gold, pred);
  CHECK(r.per_class[0].precision == doctest::Approx(1.0));
  CHECK(r.per_class[0].recall == doctest::Approx(0.9));
  CHECK(r.per_class[0].f1 == doctest::Approx(0.9474).epsilon(1e-4));
  CHECK(r.per_class[1].precision == doctest::Approx(10.0 / 11.0).epsilon(1e-9));
  CHECK(r.per_class[1].recall == doctest::Approx(1.0));
  CHECK(r.accuracy == doctest::Approx(0.95));
  CHECK(r.weighted_recall == doctest::Approx(r.accuracy).epsilon(1e-12));
  CHECK(r.confusion[0][1] == 1);
}

TEST_CASE("train: minimal two-language model; single language errors") {
  std::map<std::string, Corpus> two = {
      {"a", repeat_sentences("a", {"क ख"}, 1)},
      {"b", repeat_sentences("b", {"xy zw"}, 1)},
  };
  const IdentifierModel m = IdentifierModel::train(two, LangIdConfig{});
  CHECK(m.languages().size() == 2);

  std::map<std::string, Corpus> one = {{"a", repeat_sentences("a", {"क ख"}, 1)}};
  CHECK_THROWS_AS(IdentifierModel::train(one, LangIdConfig{}), Error);
}

TEST_CASE("identify: disjoint alphabets, OOV collapse") {
  const IdentifierModel m = IdentifierModel::train(disjoint_corpora(), LangIdConfig{});
  CHECK(m.identify("क ख क").first == "dev");
  CHECK(m.identify("ab cd").first == "lat");
  CHECK_THROWS_AS(m.identify("   "), Error);
}

TEST_CASE("identify: exact ties go to the first language id") {
  // Identical corpora under two labels give identical scores.
  std::map<std::string, Corpus> same = {
      {"bb", repeat_sentences("x", {"क ख", "ख क"}, 3)},
      {"aa", repeat_sentences("x", {"क ख", "ख क"}, 3)},
  };
  const IdentifierModel m = IdentifierModel::train(same, LangIdConfig{});
  const auto [winner, scores] = m.identify("क ख");
  CHECK(scores.at("aa") == doctest::Approx(scores.at("bb")).epsilon(1e-15));
  CHECK(winner == "aa");
}

TEST_CASE("identify: majority class wins on mixed text") {
  const IdentifierModel m = IdentifierModel::train(disjoint_corpora(), LangIdConfig{});
  const auto [winner, scores] = m.identify("क ख ab क ख");
  CHECK(winner == "dev");
  CHECK(scores.at("dev") > scores.at("lat"));
}

TEST_CASE("identify: mean scoring is length-scale invariant") {
  const IdentifierModel m = IdentifierModel::train(disjoint_corpora(), LangIdConfig{});
  const std::string once = "क ख ग क";
  const std::string twice = once + " " + once;
  CHECK(m.identify(once).first == m.identify(twice).first);
}

TEST_CASE("evaluate: perfect predictions and the recall identity") {
  const auto corpora = disjoint_corpora();
  const IdentifierModel m = IdentifierModel::train(corpora, LangIdConfig{});
  std::vector<std::pair<std::string, Sentence>> test;
  for (const auto& [lang, corpus] : corpora) {
    for (const auto& sent : corpus.sentences) test.push_back({lang, sent});
  }
  const ClassificationReport r = m.evaluate(test);
  CHECK(r.accuracy == doctest::Approx(1.0));
  for (const auto& c : r.per_class) CHECK(c.f1 == doctest::Approx(1.0));
  CHECK(r.weighted_recall == doctest::Approx(r.accuracy).epsilon(1e-12));

  std::vector<std::pair<std::string, Sentence>> bad = {
      {"unknown", Sentence{{"क"}}}};
  CHECK_THROWS_AS(m.evaluate(bad), Error);
}

TEST_CASE("resubstitution beats the majority baseline") {
  auto corpora = disjoint_corpora();
  // Unbalanced supports: dev 15 sentences, lat 5.
  corpora["lat"].sentences.resize(5);
  const IdentifierModel m = IdentifierModel::train(corpora, LangIdConfig{});
  std::vector<std::pair<std::string, Sentence>> test;
  std::size_t dev_n = 0, total = 0;
  for (const auto& [lang, corpus] : corpora) {
    for (const auto& sent : corpus.sentences) {
      test.push_back({lang, sent});
      ++total;
      if (lang == "dev") ++dev_n;
    }
  }
  const double majority = static_cast<double>(dev_n) / static_cast<double>(total);
  CHECK(m.evaluate(test).accuracy >= majority);
}

TEST_CASE("rank_profile backend identifies and round-trips") {
  LangIdConfig config;
  config.backend = LiBackend::rank_profile;
  config.profile_k = 50;
  const IdentifierModel m = IdentifierModel::train(disjoint_corpora(), config);
  CHECK(m.identify("क ख क").first == "dev");
  CHECK(m.identify("ab ef").first == "lat");

  const std::string dir = (std::filesystem::temp_directory_path() /
                           "corpuslab_test_langid_rank").string();
  m.save(dir);
  const IdentifierModel loaded = IdentifierModel::load(dir);
  CHECK(loaded.identify("क ख क").first == "dev");
  std::filesystem::remove_all(dir);
}

TEST_CASE("lm backend save/load round trip") {
  const IdentifierModel m = IdentifierModel::train(disjoint_corpora(), LangIdConfig{});
  const std::string dir = (std::filesystem::temp_directory_path() /
                           "corpuslab_test_langid_lm").string();
  m.save(dir);
  const IdentifierModel loaded = IdentifierModel::load(dir);
  const auto before = m.identify("क ख ग");
  const auto after = loaded.identify("क ख ग");
  CHECK(before.first == after.first);
  for (const auto& [lang, score] : before.second) {
    CHECK(after.second.at(lang) == doctest::Approx(score).epsilon(1e-12));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("split_80_20 is deterministic and 80/20-sized") {
  const Corpus c = repeat_sentences("x", {"क ख", "ख ग", "ग क", "क क", "ख ख"}, 4);
  const auto [train, test] = split_80_20(c, 13);
  CHECK(train.sentences.size() == 16);
  CHECK(test.sentences.size() == 4);
  const auto [train2, test2] = split_80_20(c, 13);
  CHECK(train2.sentences.size() == train.sentences.size());
  for (std::size_t i = 0; i < train.sentences.size(); ++i) {
    CHECK(train.sentences[i].tokens == train2.sentences[i].tokens);
  }
}
