// corpuslab/tagger.cpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "corpuslab/tagger.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "corpuslab/error.hpp"
#include "corpuslab/rng.hpp"

namespace corpuslab {

namespace {

constexpr const char* kBoundary = "<s>";
constexpr const char* kBoundaryRight = "</s>";

std::string word_at(const TagSentence& s, std::ptrdiff_t i) {
  if (i < 0) return kBoundary;
  if (i >= static_cast<std::ptrdiff_t>(s.tokens.size())) return kBoundaryRight;
  return s.tokens[i];
}

std::string pos_at(const TagSentence& s, std::ptrdiff_t i) {
  if (i < 0) return kBoundary;
  if (i >= static_cast<std::ptrdiff_t>(s.pos.size())) return kBoundaryRight;
  return s.pos[i];
}

// B-X/I-X/O handling for constrained decoding.
bool bio_transition_ok(const std::string& prev, const std::string& cur) {
  if (cur.size() < 2 || cur[0] != 'I' || cur[1] != '-') return true;
  const std::string chunk = cur.substr(2);
  if (prev.size() >= 2 && (prev[0] == 'B' || prev[0] == 'I') && prev[1] == '-') {
    return prev.substr(2) == chunk;
  }
  return false;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::vector<std::string> extract_features(const TagSentence& s, std::size_t i,
                                          int level) {
  const auto pos = static_cast<std::ptrdiff_t>(i);
  std::vector<std::string> feats;
  feats.push_back("w0=" + word_at(s, pos));
  if (level >= 1) {
    feats.push_back("w-1=" + word_at(s, pos - 1));
    feats.push_back("w-2=" + word_at(s, pos - 2));
  }
  if (level >= 2) {
    feats.push_back("w+1=" + word_at(s, pos + 1));
    feats.push_back("w+2=" + word_at(s, pos + 2));
  }
  if (level >= 3 && !s.pos.empty()) {
    feats.push_back("p0=" + pos_at(s, pos));
    feats.push_back("p-1=" + pos_at(s, pos - 1));
    feats.push_back("p+1=" + pos_at(s, pos + 1));
  }
  if (level >= 4) {
    feats.push_back("w-1w0=" + word_at(s, pos - 1) + "|" + word_at(s, pos));
    feats.push_back("w0w+1=" + word_at(s, pos) + "|" + word_at(s, pos + 1));
  }
  return feats;
}

double TaggerModel::weight(const std::string& feature, const std::string& tag) const {
  const auto it = weights_.find(feature);
  if (it == weights_.end()) return 0.0;
  const auto t = std::find(tagset_.begin(), tagset_.end(), tag);
  if (t == tagset_.end()) return 0.0;
  return it->second[static_cast<std::size_t>(t - tagset_.begin())];
}

double TaggerModel::emission(const std::vector<std::string>& feats,
                             std::size_t tag) const {
  double score = 0.0;
  for (const auto& f : feats) {
    const auto it = weights_.find(f);
    if (it != weights_.end()) score += it->second[tag];
  }
  return score;
}

std::vector<std::string> TaggerModel::viterbi(const TagSentence& s, bool bio) const {
  const std::size_t n = s.tokens.size();
  const std::size_t k = tagset_.size();
  if (n == 0) return {};
  constexpr double kNegInf = -1e300;

  std::vector<std::vector<double>> score(n, std::vector<double>(k, kNegInf));
  std::vector<std::vector<std::size_t>> back(n, std::vector<std::size_t>(k, 0));

  const bool use_transitions = level_ >= 3;
  std::vector<const std::vector<double>*> trans(k + 1, nullptr);
  if (use_transitions) {
    for (std::size_t p = 0; p <= k; ++p) {
      const std::string key =
          "t-1=" + (p == k ? std::string(kBoundary) : tagset_[p]);
      const auto it = weights_.find(key);
      trans[p] = (it != weights_.end()) ? &it->second : nullptr;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<std::string> feats = extract_features(s, i, level_);
    for (std::size_t t = 0; t < k; ++t) {
      if (bio && i == 0 && !bio_transition_ok("O", tagset_[t])) continue;
      const double emit = emission(feats, t);
      if (i == 0) {
        const double tr =
            (use_transitions && trans[k]) ? (*trans[k])[t] : 0.0;
        score[0][t] = emit + tr;
        continue;
      }
      double best = kNegInf;
      std::size_t best_p = 0;
      for (std::size_t p = 0; p < k; ++p) {
        if (score[i - 1][p] <= kNegInf) continue;
        if (bio && !bio_transition_ok(tagset_[p], tagset_[t])) continue;
        const double tr = (use_transitions && trans[p]) ? (*trans[p])[t] : 0.0;
        const double v = score[i - 1][p] + tr;
        if (v > best) {
          best = v;
          best_p = p;
        }
      }
      if (best <= kNegInf) continue;
      score[i][t] = best + emit;
      back[i][t] = best_p;
    }
  }

  std::size_t cur = 0;
  double best = kNegInf;
  for (std::size_t t = 0; t < k; ++t) {
    if (score[n - 1][t] > best) {
      best = score[n - 1][t];
      cur = t;
    }
  }
  std::vector<std::string> tags(n);
  for (std::size_t i = n; i-- > 0;) {
    tags[i] = tagset_[cur];
    cur = back[i][cur];
  }
  return tags;
}

std::vector<std::string> TaggerModel::decode(const TagSentence& s) const {
  return viterbi(s, false);
}

std::vector<std::string> TaggerModel::decode_bio(const TagSentence& s) const {
  return viterbi(s, true);
}

// ---------------------------------------------------------------------------
// Training
// ---------------------------------------------------------------------------

class TaggerTrainer {
 public:
  static TaggerModel train(const std::vector<TagSentence>& gold,
                           const std::vector<std::string>& tagset, int level,
                           int epochs, std::uint64_t seed) {
    if (gold.empty()) throw Error("empty training corpus");
    if (tagset.empty()) throw Error("empty tagset");
    TaggerModel model;
    model.tagset_ = tagset;
    model.level_ = level;
    model.epochs_ = epochs;
    model.seed_ = seed;
    const std::size_t k = tagset.size();

    std::unordered_map<std::string, std::size_t> tag_index;
    for (std::size_t t = 0; t < k; ++t) tag_index[tagset[t]] = t;
    for (const auto& sent : gold) {
      if (sent.tokens.size() != sent.gold.size()) {
        throw Error("token/tag length mismatch in training data");
      }
      for (const auto& tag : sent.gold) {
        if (!tag_index.count(tag)) throw Error("unknown tag '" + tag + "' in gold data");
      }
    }

    auto& w = model.weights_;
    std::unordered_map<std::string, std::vector<double>> accum;  // for averaging
    auto bump = [&](const std::string& feature, std::size_t tag, double delta,
                    double step) {
      auto [it, inserted] = w.try_emplace(feature, std::vector<double>(k, 0.0));
      it->second[tag] += delta;
      auto [ait, ai] = accum.try_emplace(feature, std::vector<double>(k, 0.0));
      ait->second[tag] += step * delta;
    };

    std::vector<std::size_t> order(gold.size());
    std::iota(order.begin(), order.end(), 0);
    SplitRng rng(seed);
    double step = 1.0;
    for (int epoch = 0; epoch < epochs; ++epoch) {
      rng.shuffle(order);
      for (std::size_t idx : order) {
        const TagSentence& sent = gold[idx];
        if (sent.tokens.empty()) continue;
        const std::vector<std::string> pred = model.viterbi(sent, false);
        if (pred != sent.gold) {
          for (std::size_t i = 0; i < sent.tokens.size(); ++i) {
            const std::vector<std::string> feats =
                extract_features(sent, i, level);
            const std::size_t g = tag_index.at(sent.gold[i]);
            const std::size_t p = tag_index.at(pred[i]);
            if (g != p) {
              for (const auto& f : feats) {
                bump(f, g, 1.0, step);
                bump(f, p, -1.0, step);
              }
            }
            if (level >= 3) {
              const std::string gprev =
                  i == 0 ? std::string(kBoundary) : sent.gold[i - 1];
              const std::string pprev =
                  i == 0 ? std::string(kBoundary) : pred[i - 1];
              if (g != p || gprev != pprev) {
                bump("t-1=" + gprev, g, 1.0, step);
                bump("t-1=" + pprev, p, -1.0, step);
              }
            }
          }
        }
        step += 1.0;
      }
    }
    // Averaging: w_avg = w - accum/step.
    for (auto& [feature, values] : w) {
      const auto it = accum.find(feature);
      for (std::size_t t = 0; t < k; ++t) {
        values[t] -= it->second[t] / step;
      }
    }
    model.averaged_ = true;
    return model;
  }
};

TaggerModel TaggerModel::train(const std::vector<TagSentence>& gold,
                               const std::vector<std::string>& tagset, int level,
                               int epochs, std::uint64_t seed) {
  return TaggerTrainer::train(gold, tagset, level, epochs, seed);
}

ClassificationReport TaggerModel::evaluate(const std::vector<TagSentence>& test) const {
  if (test.empty()) throw Error("empty test set");
  std::vector<std::string> gold, predicted;
  for (const auto& sent : test) {
    if (sent.tokens.size() != sent.gold.size()) {
      throw Error("token/tag length mismatch in test data");
    }
    const std::vector<std::string> pred = decode(sent);
    for (std::size_t i = 0; i < sent.tokens.size(); ++i) {
      gold.push_back(sent.gold[i]);
      predicted.push_back(pred[i]);
    }
  }
  return classification_report(tagset_, gold, predicted);
}

// ---------------------------------------------------------------------------
// Persistence
// ---------------------------------------------------------------------------

void TaggerModel::save(std::ostream& out) const {
  out << "corpuslab-tagger 1\n";
  out << "level " << level_ << "\n";
  out << "averaged " << (averaged_ ? 1 : 0) << "\n";
  out << "epochs " << epochs_ << "\n";
  out << "seed " << seed_ << "\n";
  out << "algorithm averaged_perceptron\n";
  out << "tagset";
  for (const auto& tag : tagset_) out << ' ' << tag;
  out << "\n";
  std::vector<std::string> features;
  features.reserve(weights_.size());
  for (const auto& [feature, values] : weights_) features.push_back(feature);
  std::sort(features.begin(), features.end());
  for (const auto& feature : features) {
    const auto& values = weights_.at(feature);
    for (std::size_t t = 0; t < tagset_.size(); ++t) {
      if (values[t] == 0.0) continue;
      out << feature << '\t' << tagset_[t] << '\t' << format_double(values[t]) << "\n";
    }
  }
  out << "end\n";
}

TaggerModel TaggerModel::load(std::istream& in) {
  TaggerModel model;
  std::string line;
  auto next_line = [&]() -> std::string& {
    if (!std::getline(in, line)) throw Error("truncated tagger model");
    return line;
  };
  if (next_line() != "corpuslab-tagger 1") throw Error("unrecognized tagger model header");
  auto field = [&](const std::string& name) {
    next_line();
    if (line.rfind(name + " ", 0) != 0) throw Error("expected '" + name + "' in tagger model");
    return line.substr(name.size() + 1);
  };
  model.level_ = std::stoi(field("level"));
  model.averaged_ = field("averaged") == "1";
  model.epochs_ = std::stoi(field("epochs"));
  model.seed_ = std::stoull(field("seed"));
  field("algorithm");
  {
    std::istringstream tags(field("tagset"));
    std::string tag;
    while (tags >> tag) model.tagset_.push_back(tag);
  }
  std::unordered_map<std::string, std::size_t> tag_index;
  for (std::size_t t = 0; t < model.tagset_.size(); ++t) tag_index[model.tagset_[t]] = t;
  while (std::getline(in, line) && line != "end") {
    const auto tab1 = line.find('\t');
    const auto tab2 = line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos) {
      throw Error("malformed weight line in tagger model");
    }
    const std::string feature = line.substr(0, tab1);
    const std::string tag = line.substr(tab1 + 1, tab2 - tab1 - 1);
    const double value = std::stod(line.substr(tab2 + 1));
    auto [it, inserted] = model.weights_.try_emplace(
        feature, std::vector<double>(model.tagset_.size(), 0.0));
    it->second[tag_index.at(tag)] = value;
  }
  return model;
}

// ---------------------------------------------------------------------------
// TSV IO
// ---------------------------------------------------------------------------

std::vector<TagSentence> read_tagged_tsv(std::istream& in) {
  std::vector<TagSentence> sentences;
  TagSentence cur;
  std::string line;
  std::size_t lineno = 0;
  auto flush = [&]() {
    if (!cur.tokens.empty()) {
      if (cur.pos.size() != cur.tokens.size()) cur.pos.clear();
      sentences.push_back(std::move(cur));
      cur = TagSentence{};
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    const auto tab1 = line.find('\t');
    if (tab1 == std::string::npos) throw ParseError("expected token TAB tag", lineno);
    const auto tab2 = line.find('\t', tab1 + 1);
    cur.tokens.push_back(line.substr(0, tab1));
    if (tab2 == std::string::npos) {
      cur.gold.push_back(line.substr(tab1 + 1));
    } else {
      cur.gold.push_back(line.substr(tab1 + 1, tab2 - tab1 - 1));
      cur.pos.push_back(line.substr(tab2 + 1));
    }
    if (cur.tokens.back().empty()) throw ParseError("empty token", lineno);
    if (cur.gold.back().empty()) throw ParseError("empty tag", lineno);
  }
  flush();
  return sentences;
}

void write_tagged_tsv(std::ostream& out, const std::vector<TagSentence>& sentences,
                      const std::vector<std::vector<std::string>>* predicted) {
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const TagSentence& sent = sentences[s];
    for (std::size_t i = 0; i < sent.tokens.size(); ++i) {
      out << sent.tokens[i] << '\t'
          << (predicted ? (*predicted)[s][i]
                        : (i < sent.gold.size() ? sent.gold[i] : ""))
          << "\n";
    }
    out << "\n";
  }
}

}  // namespace corpuslab
