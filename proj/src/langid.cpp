// corpuslab/langid.cpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "corpuslab/langid.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "corpuslab/error.hpp"
#include "corpuslab/rng.hpp"
#include "corpuslab/stats.hpp"
#include "corpuslab/utf8.hpp"

namespace corpuslab {

namespace fs = std::filesystem;

std::pair<Corpus, Corpus> split_80_20(const Corpus& corpus, std::uint64_t seed) {
  if (corpus.sentences.size() < 2) throw Error("corpus needs >= 2 sentences to split");
  std::vector<std::size_t> idx(corpus.sentences.size());
  std::iota(idx.begin(), idx.end(), 0);
  SplitRng rng(seed ^ fnv1a(corpus.language_id));
  rng.shuffle(idx);
  std::size_t train_n = idx.size() * 8 / 10;
  if (train_n == 0) train_n = 1;
  if (train_n == idx.size()) train_n = idx.size() - 1;
  Corpus train, test;
  train.language_id = test.language_id = corpus.language_id;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    (i < train_n ? train : test).sentences.push_back(corpus.sentences[idx[i]]);
  }
  return {std::move(train), std::move(test)};
}

std::vector<std::string> rank_profile(const Corpus& corpus, int nmax, int k) {
  std::unordered_map<std::string, std::uint64_t> counts;
  for (int n = 1; n <= nmax; ++n) {
    for (auto& gram : char_ngram_stream(corpus, static_cast<std::size_t>(n))) {
      ++counts[gram];
    }
  }
  std::vector<std::pair<std::string, std::uint64_t>> items(counts.begin(), counts.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  if (items.size() > static_cast<std::size_t>(k)) items.resize(k);
  std::vector<std::string> profile;
  profile.reserve(items.size());
  for (auto& [gram, freq] : items) profile.push_back(std::move(gram));
  return profile;
}

IdentifierModel IdentifierModel::train(const std::map<std::string, Corpus>& corpora,
                                       const LangIdConfig& config) {
  if (corpora.size() < 2) throw Error("need at least 2 languages");
  IdentifierModel model;
  model.config_ = config;
  for (const auto& [lang, corpus] : corpora) {
    if (corpus.sentences.empty()) throw Error("empty corpus for language " + lang);
    model.languages_.push_back(lang);
    if (config.backend == LiBackend::lm_score) {
      LmConfig lm;
      lm.level = LmLevel::chars;
      lm.order = config.order;
      lm.smoothing = Smoothing::kneser_ney;
      model.models_.push_back(NGramModel::train(corpus, lm));
    } else {
      model.rank_profiles_.push_back(
          rank_profile(corpus, config.profile_nmax, config.profile_k));
    }
  }
  return model;
}

std::pair<std::string, std::map<std::string, double>> IdentifierModel::identify(
    const std::string& text) const {
  Corpus one = corpus_from_lines(text, "");
  if (one.sentences.empty()) throw Error("empty text");
  Sentence merged;
  for (auto& sent : one.sentences) {
    for (auto& tok : sent.tokens) merged.tokens.push_back(std::move(tok));
  }
  return identify_sentence(merged);
}

std::pair<std::string, std::map<std::string, double>> IdentifierModel::identify_sentence(
    const Sentence& sentence) const {
  if (sentence.tokens.empty()) throw Error("empty text");
  std::map<std::string, double> scores;
  std::size_t best = 0;
  if (config_.backend == LiBackend::lm_score) {
    double best_score = 0.0;
    for (std::size_t i = 0; i < languages_.size(); ++i) {
      const EvalResult r = models_[i].score_sentence(sentence);
      const double mean = r.total_logprob / static_cast<double>(r.token_count);
      scores[languages_[i]] = mean;
      if (i == 0 || mean > best_score) {
        best_score = mean;
        best = i;
      }
    }
  } else {
    // Out-of-place distance against each language profile (1-based ranks,
    // missing n-grams cost the full profile length).
    Corpus doc;
    doc.sentences.push_back(sentence);
    const std::vector<std::string> profile =
        rank_profile(doc, config_.profile_nmax, config_.profile_k);
    double best_score = 0.0;
    for (std::size_t i = 0; i < languages_.size(); ++i) {
      std::unordered_map<std::string, std::size_t> rank;
      for (std::size_t r = 0; r < rank_profiles_[i].size(); ++r) {
        rank[rank_profiles_[i][r]] = r + 1;
      }
      double dist = 0.0;
      for (std::size_t r = 0; r < profile.size(); ++r) {
        const auto it = rank.find(profile[r]);
        if (it == rank.end()) {
          dist += config_.profile_k;
        } else {
          const double d = static_cast<double>(r + 1) - static_cast<double>(it->second);
          dist += d < 0 ? -d : d;
        }
      }
      scores[languages_[i]] = dist;
      if (i == 0 || dist < best_score) {
        best_score = dist;
        best = i;
      }
    }
  }
  return {languages_[best], std::move(scores)};
}

ClassificationReport IdentifierModel::evaluate(
    const std::vector<std::pair<std::string, Sentence>>& test) const {
  if (test.empty()) throw Error("empty test set");
  std::vector<std::string> gold, predicted;
  gold.reserve(test.size());
  predicted.reserve(test.size());
  for (const auto& [label, sentence] : test) {
    if (std::find(languages_.begin(), languages_.end(), label) == languages_.end()) {
      throw Error("unknown gold label '" + label + "'");
    }
    gold.push_back(label);
    predicted.push_back(identify_sentence(sentence).first);
  }
  return classification_report(languages_, gold, predicted);
}

// ---------------------------------------------------------------------------
// Persistence: a manifest plus one file per language.
// ---------------------------------------------------------------------------

void IdentifierModel::save(const std::string& dir) const {
  fs::create_directories(dir);
  std::ofstream manifest(fs::path(dir) / "manifest.txt");
  manifest << "corpuslab-langid 1\n";
  manifest << "backend "
           << (config_.backend == LiBackend::lm_score ? "lm_score" : "rank_profile")
           << "\n";
  manifest << "order " << config_.order << "\n";
  manifest << "profile_k " << config_.profile_k << "\n";
  manifest << "profile_nmax " << config_.profile_nmax << "\n";
  manifest << "languages";
  for (const auto& lang : languages_) manifest << ' ' << lang;
  manifest << "\n";
  for (std::size_t i = 0; i < languages_.size(); ++i) {
    if (config_.backend == LiBackend::lm_score) {
      std::ofstream out(fs::path(dir) / ("lm_" + languages_[i] + ".txt"));
      models_[i].save(out);
    } else {
      std::ofstream out(fs::path(dir) / ("profile_" + languages_[i] + ".txt"));
      for (const auto& gram : rank_profiles_[i]) out << gram << "\n";
    }
  }
}

IdentifierModel IdentifierModel::load(const std::string& dir) {
  std::ifstream manifest(fs::path(dir) / "manifest.txt");
  if (!manifest) throw Error("cannot open langid manifest in " + dir);
  std::string line;
  if (!std::getline(manifest, line) || line != "corpuslab-langid 1") {
    throw Error("unrecognized langid manifest");
  }
  IdentifierModel model;
  while (std::getline(manifest, line)) {
    std::istringstream in(line);
    std::string key;
    in >> key;
    if (key == "backend") {
      std::string v;
      in >> v;
      model.config_.backend =
          (v == "lm_score") ? LiBackend::lm_score : LiBackend::rank_profile;
    } else if (key == "order") {
      in >> model.config_.order;
    } else if (key == "profile_k") {
      in >> model.config_.profile_k;
    } else if (key == "profile_nmax") {
      in >> model.config_.profile_nmax;
    } else if (key == "languages") {
      std::string lang;
      while (in >> lang) model.languages_.push_back(lang);
    }
  }
  if (model.languages_.size() < 2) throw Error("langid manifest lists fewer than 2 languages");
  for (const auto& lang : model.languages_) {
    if (model.config_.backend == LiBackend::lm_score) {
      std::ifstream in(fs::path(dir) / ("lm_" + lang + ".txt"));
      if (!in) throw Error("missing model file for language " + lang);
      model.models_.push_back(NGramModel::load(in));
    } else {
      std::ifstream in(fs::path(dir) / ("profile_" + lang + ".txt"));
      if (!in) throw Error("missing profile file for language " + lang);
      std::vector<std::string> profile;
      std::string gram;
      while (std::getline(in, gram)) {
        if (!gram.empty()) profile.push_back(gram);
      }
      model.rank_profiles_.push_back(std::move(profile));
    }
  }
  return model;
}

}  // namespace corpuslab
