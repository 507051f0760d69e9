// corpuslab/ngramlm.cpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "corpuslab/ngramlm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

#include "corpuslab/error.hpp"
#include "corpuslab/utf8.hpp"

namespace corpuslab {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;  // log2(10)

std::string pack(std::span<const std::uint32_t> ids) {
  std::string key(ids.size() * 4, '\0');
  std::memcpy(key.data(), ids.data(), key.size());
  return key;
}

std::vector<std::uint32_t> unpack(const std::string& key) {
  std::vector<std::uint32_t> ids(key.size() / 4);
  std::memcpy(ids.data(), key.data(), key.size());
  return ids;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* smoothing_name(Smoothing s) {
  switch (s) {
    case Smoothing::mle: return "mle";
    case Smoothing::abs_backoff: return "abs_backoff";
    case Smoothing::kneser_ney: return "kneser_ney";
  }
  return "?";
}

Smoothing smoothing_from_name(const std::string& name) {
  if (name == "mle") return Smoothing::mle;
  if (name == "abs_backoff") return Smoothing::abs_backoff;
  if (name == "kneser_ney") return Smoothing::kneser_ney;
  throw Error("unknown smoothing '" + name + "'");
}

}  // namespace

// ---------------------------------------------------------------------------
// Training
// ---------------------------------------------------------------------------

NGramModel NGramModel::train(const Corpus& corpus, const LmConfig& config) {
  if (corpus.sentences.empty()) throw Error("empty input");
  if (config.order < 1) throw Error("order must be >= 1");
  if (config.discount && (*config.discount <= 0.0 || *config.discount >= 1.0)) {
    throw Error("discount must lie in (0,1)");
  }

  NGramModel model;
  model.config_ = config;
  model.vocab_ = {"<unk>", "<s>", "</s>", "<wb>"};
  for (std::uint32_t id = 0; id < model.vocab_.size(); ++id) {
    model.symbol_ids_[model.vocab_[id]] = id;
  }
  model.counts_.resize(config.order + 1);

  auto intern = [&model](const std::string& s) {
    auto [it, inserted] =
        model.symbol_ids_.try_emplace(s, static_cast<std::uint32_t>(model.vocab_.size()));
    if (inserted) model.vocab_.push_back(s);
    return it->second;
  };

  for (const auto& sent : corpus.sentences) {
    std::vector<std::uint32_t> scored;
    if (config.level == LmLevel::word) {
      scored.reserve(sent.tokens.size() + 1);
      for (const auto& tok : sent.tokens) scored.push_back(intern(tok));
    } else {
      for (std::size_t t = 0; t < sent.tokens.size(); ++t) {
        if (t) scored.push_back(kWb);
        for (char32_t cp : utf8_decode(sent.tokens[t])) {
          scored.push_back(intern(utf8_of(cp)));
        }
      }
    }
    if (config.sentinels) scored.push_back(kEnd);
    if (scored.empty()) continue;
    model.count_sequence(scored);
  }
  if (model.counts_[1].empty()) throw Error("empty input");
  model.finalize();
  return model;
}

void NGramModel::count_sequence(const std::vector<std::uint32_t>& scored) {
  const int order = config_.order;
  std::vector<std::uint32_t> padded(scored.size() + order - 1, kBos);
  std::copy(scored.begin(), scored.end(), padded.begin() + order - 1);
  for (std::size_t p = static_cast<std::size_t>(order) - 1; p < padded.size(); ++p) {
    for (int k = 1; k <= order; ++k) {
      const std::span<const std::uint32_t> gram(&padded[p + 1 - k], k);
      ++counts_[k][pack(gram)];
    }
  }
}

void NGramModel::finalize() {
  const int order = config_.order;
  ctx_total_.assign(order + 1, {});
  ctx_distinct_.assign(order + 1, {});
  cont_.assign(order + 1, {});
  cont_ctx_total_.assign(order + 1, {});
  cont_ctx_distinct_.assign(order + 1, {});
  alpha_.assign(order + 1, {});

  for (int k = 2; k <= order; ++k) {
    for (const auto& [key, count] : counts_[k]) {
      const std::string prefix = key.substr(0, key.size() - 4);
      ctx_total_[k][prefix] += count;
      ctx_distinct_[k][prefix] += 1;
    }
  }
  // Continuation counts at level k come from distinct (k+1)-gram types.
  for (int k = 1; k < order; ++k) {
    for (const auto& [key, count] : counts_[k + 1]) {
      const std::string suffix = key.substr(4);
      ++cont_[k][suffix];
    }
    for (const auto& [key, c] : cont_[k]) {
      if (k == 1) continue;
      const std::string prefix = key.substr(0, key.size() - 4);
      cont_ctx_total_[k][prefix] += c;
      cont_ctx_distinct_[k][prefix] += 1;
    }
  }

  unigram_total_ = 0;
  for (const auto& [key, count] : counts_[1]) unigram_total_ += count;
  cont1_total_ = counts_.size() > 2 ? counts_[2].size() : 0;
  cont1_distinct_ = cont_[1].size();

  // Uniform floor support: seen non-sentinel types plus <unk>.
  std::uint64_t word_types = 0;
  for (const auto& [key, count] : counts_[1]) {
    const std::uint32_t id = unpack(key)[0];
    if (id != kEnd) ++word_types;
  }
  uniform_support_ = word_types + 1;

  if (config_.discount) {
    discount_ = *config_.discount;
  } else {
    const auto& source = (order >= 2) ? counts_[2] : counts_[1];
    std::uint64_t n1 = 0, n2 = 0;
    for (const auto& [key, count] : source) {
      if (count == 1) ++n1;
      if (count == 2) ++n2;
    }
    discount_ = (n1 + 2 * n2 == 0)
                    ? 0.5
                    : std::clamp(static_cast<double>(n1) /
                                     static_cast<double>(n1 + 2 * n2),
                                 0.001, 0.999);
  }

  // Backoff weights for absolute-discount backoff, built bottom-up: the
  // released mass of a context is spread over the lower-order probability
  // of its unseen continuations.
  if (config_.smoothing == Smoothing::abs_backoff) {
    for (int k = 2; k <= order; ++k) {
      std::unordered_map<std::string, double> seen_lower_mass;
      for (const auto& [key, count] : counts_[k]) {
        const std::string prefix = key.substr(0, key.size() - 4);
        const std::vector<std::uint32_t> ids = unpack(key);
        const std::span<const std::uint32_t> sub(ids.data() + 1, ids.size() - 2);
        seen_lower_mass[prefix] += prob_level(k - 1, sub, ids.back());
      }
      for (const auto& [prefix, mass] : seen_lower_mass) {
        const double tot = static_cast<double>(ctx_total_[k].at(prefix));
        const double released =
            discount_ * static_cast<double>(ctx_distinct_[k].at(prefix)) / tot;
        const double denom = std::max(1.0 - mass, 1e-15);
        alpha_[k][prefix] = released / denom;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Probabilities
// ---------------------------------------------------------------------------

double NGramModel::uniform_q(std::uint32_t unit) const {
  if (unit == kEnd || unit == kBos) return 0.0;
  return 1.0 / static_cast<double>(uniform_support_);
}

double NGramModel::unigram_prob(std::uint32_t unit) const {
  const double n = static_cast<double>(unigram_total_);
  const auto it = counts_[1].find(pack({&unit, 1}));
  const double c = (it != counts_[1].end()) ? static_cast<double>(it->second) : 0.0;
  switch (config_.smoothing) {
    case Smoothing::mle:
      return c / n;
    case Smoothing::kneser_ney:
      if (config_.order >= 2) {
        // Continuation distribution interpolated with the uniform floor.
        const auto ct = cont_[1].find(pack({&unit, 1}));
        const double cc = (ct != cont_[1].end()) ? static_cast<double>(ct->second) : 0.0;
        const double total = static_cast<double>(cont1_total_);
        const double lambda =
            discount_ * static_cast<double>(cont1_distinct_) / total;
        return std::max(cc - discount_, 0.0) / total + lambda * uniform_q(unit);
      }
      [[fallthrough]];  // order-1 KN degenerates to absolute discounting
    case Smoothing::abs_backoff: {
      const double lambda =
          discount_ * static_cast<double>(counts_[1].size()) / n;
      return std::max(c - discount_, 0.0) / n + lambda * uniform_q(unit);
    }
  }
  return 0.0;
}

double NGramModel::prob_level(int k, std::span<const std::uint32_t> history,
                              std::uint32_t unit) const {
  if (k == 1) return unigram_prob(unit);
  const std::string hkey = pack(history);
  std::vector<std::uint32_t> gram(history.begin(), history.end());
  gram.push_back(unit);
  const std::string gkey = pack(gram);
  const auto shorter = history.subspan(1);

  if (config_.smoothing == Smoothing::mle) {
    const auto tot = ctx_total_[k].find(hkey);
    if (tot == ctx_total_[k].end()) return 0.0;
    const auto c = counts_[k].find(gkey);
    if (c == counts_[k].end()) return 0.0;
    return static_cast<double>(c->second) / static_cast<double>(tot->second);
  }

  if (config_.smoothing == Smoothing::abs_backoff) {
    const auto tot = ctx_total_[k].find(hkey);
    if (tot == ctx_total_[k].end()) return prob_level(k - 1, shorter, unit);
    const auto c = counts_[k].find(gkey);
    if (c != counts_[k].end()) {
      return (static_cast<double>(c->second) - discount_) /
             static_cast<double>(tot->second);
    }
    return alpha_[k].at(hkey) * prob_level(k - 1, shorter, unit);
  }

  // Interpolated Kneser-Ney: raw counts at the highest order, continuation
  // counts at the middle orders.
  if (k == config_.order) {
    const auto tot = ctx_total_[k].find(hkey);
    if (tot == ctx_total_[k].end()) return prob_level(k - 1, shorter, unit);
    const double t = static_cast<double>(tot->second);
    const auto c = counts_[k].find(gkey);
    const double cv = (c != counts_[k].end()) ? static_cast<double>(c->second) : 0.0;
    const double lambda =
        discount_ * static_cast<double>(ctx_distinct_[k].at(hkey)) / t;
    return std::max(cv - discount_, 0.0) / t +
           lambda * prob_level(k - 1, shorter, unit);
  }
  const auto tot = cont_ctx_total_[k].find(hkey);
  if (tot == cont_ctx_total_[k].end()) return prob_level(k - 1, shorter, unit);
  const double t = static_cast<double>(tot->second);
  const auto c = cont_[k].find(gkey);
  const double cv = (c != cont_[k].end()) ? static_cast<double>(c->second) : 0.0;
  const double lambda =
      discount_ * static_cast<double>(cont_ctx_distinct_[k].at(hkey)) / t;
  return std::max(cv - discount_, 0.0) / t +
         lambda * prob_level(k - 1, shorter, unit);
}

double NGramModel::prob_ids(std::span<const std::uint32_t> history,
                            std::uint32_t unit) const {
  const std::size_t want = static_cast<std::size_t>(config_.order) - 1;
  std::vector<std::uint32_t> h(history.begin(), history.end());
  if (h.size() > want) h.erase(h.begin(), h.begin() + (h.size() - want));
  while (h.size() < want) h.insert(h.begin(), kBos);
  return prob_level(config_.order, h, unit);
}

double NGramModel::prob(const std::vector<std::string>& history,
                        const std::string& unit) const {
  std::vector<std::uint32_t> h;
  h.reserve(history.size());
  for (const auto& s : history) h.push_back(lookup(s, nullptr));
  return prob_ids(h, lookup(unit, nullptr));
}

std::uint32_t NGramModel::lookup(const std::string& unit, std::size_t* oov) const {
  const auto it = symbol_ids_.find(unit);
  if (it != symbol_ids_.end()) return it->second;
  if (oov) ++*oov;
  return kUnk;
}

// ---------------------------------------------------------------------------
// Scoring
// ---------------------------------------------------------------------------

std::vector<std::uint32_t> NGramModel::sentence_units(const Sentence& sentence,
                                                      std::size_t* oov) const {
  std::vector<std::uint32_t> scored;
  if (config_.level == LmLevel::word) {
    scored.reserve(sentence.tokens.size() + 1);
    for (const auto& tok : sentence.tokens) scored.push_back(lookup(tok, oov));
  } else {
    for (std::size_t t = 0; t < sentence.tokens.size(); ++t) {
      if (t) scored.push_back(kWb);
      for (char32_t cp : utf8_decode(sentence.tokens[t])) {
        scored.push_back(lookup(utf8_of(cp), oov));
      }
    }
  }
  if (config_.sentinels) scored.push_back(kEnd);
  return scored;
}

EvalResult NGramModel::score_sentence(const Sentence& sentence) const {
  EvalResult res;
  const std::vector<std::uint32_t> scored = sentence_units(sentence, &res.oov_count);
  const int order = config_.order;
  std::vector<std::uint32_t> hist(order - 1, kBos);
  for (std::uint32_t id : scored) {
    const double p = prob_level(order, hist, id);
    res.total_logprob += std::log10(p);
    if (order > 1) {
      hist.erase(hist.begin());
      hist.push_back(id);
    }
  }
  res.token_count = scored.size();
  if (res.token_count > 0) {
    res.cross_entropy = -(res.total_logprob * kLog2Of10) /
                        static_cast<double>(res.token_count);
    res.perplexity = std::exp2(res.cross_entropy);
  }
  return res;
}

EvalResult NGramModel::evaluate(const Corpus& corpus) const {
  if (corpus.sentences.empty()) throw Error("empty input");
  EvalResult res;
  for (const auto& sent : corpus.sentences) {
    const EvalResult one = score_sentence(sent);
    res.total_logprob += one.total_logprob;
    res.token_count += one.token_count;
    res.oov_count += one.oov_count;
  }
  if (!std::isfinite(res.total_logprob)) {
    throw Error("zero-probability event under MLE; train with smoothing");
  }
  if (res.token_count == 0) throw Error("empty input");
  res.cross_entropy =
      -(res.total_logprob * kLog2Of10) / static_cast<double>(res.token_count);
  res.perplexity = std::exp2(res.cross_entropy);
  return res;
}

double NGramModel::cross_entropy(const Corpus& corpus) const {
  return evaluate(corpus).cross_entropy;
}

std::vector<std::uint32_t> NGramModel::event_ids() const {
  std::vector<std::uint32_t> ids;
  ids.push_back(kUnk);
  std::vector<std::uint32_t> seen;
  for (const auto& [key, count] : counts_[1]) seen.push_back(unpack(key)[0]);
  std::sort(seen.begin(), seen.end());
  for (std::uint32_t id : seen) {
    if (id != kUnk) ids.push_back(id);
  }
  return ids;
}

std::vector<std::vector<std::uint32_t>> NGramModel::seen_full_histories() const {
  std::vector<std::vector<std::uint32_t>> out;
  if (config_.order < 2) return out;
  std::vector<std::string> keys;
  for (const auto& [key, total] : ctx_total_[config_.order]) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  for (const auto& key : keys) out.push_back(unpack(key));
  return out;
}

// ---------------------------------------------------------------------------
// Serialization: versioned line-oriented text, exact round-trip.
// ---------------------------------------------------------------------------

void NGramModel::save(std::ostream& out) const {
  out << "corpuslab-lm 1\n";
  out << "level " << (config_.level == LmLevel::word ? "word" : "char") << "\n";
  out << "order " << config_.order << "\n";
  out << "smoothing " << smoothing_name(config_.smoothing) << "\n";
  out << "discount " << format_double(discount_) << "\n";
  out << "sentinels " << (config_.sentinels ? 1 : 0) << "\n";
  out << "vocab " << vocab_.size() << "\n";
  for (const auto& symbol : vocab_) out << symbol << "\n";
  for (int k = 1; k <= config_.order; ++k) {
    std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> grams;
    grams.reserve(counts_[k].size());
    for (const auto& [key, count] : counts_[k]) grams.emplace_back(unpack(key), count);
    std::sort(grams.begin(), grams.end());
    out << "ngrams " << k << " " << grams.size() << "\n";
    for (const auto& [ids, count] : grams) {
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out << ' ';
        out << ids[i];
      }
      out << '\t' << count << "\n";
    }
  }
  out << "end\n";
}

NGramModel NGramModel::load(std::istream& in) {
  NGramModel model;
  std::string line;
  auto next_line = [&]() -> std::string& {
    if (!std::getline(in, line)) throw Error("truncated model file");
    return line;
  };
  if (next_line() != "corpuslab-lm 1") throw Error("unrecognized model header");
  auto field = [&](const std::string& name) {
    next_line();
    if (line.rfind(name + " ", 0) != 0) {
      throw Error("expected '" + name + "' in model file");
    }
    return line.substr(name.size() + 1);
  };
  const std::string level = field("level");
  model.config_.level = (level == "word") ? LmLevel::word : LmLevel::chars;
  model.config_.order = std::stoi(field("order"));
  model.config_.smoothing = smoothing_from_name(field("smoothing"));
  model.config_.discount = std::stod(field("discount"));
  model.config_.sentinels = field("sentinels") == "1";
  const std::size_t vocab_size = std::stoul(field("vocab"));
  model.vocab_.reserve(vocab_size);
  for (std::size_t i = 0; i < vocab_size; ++i) {
    model.vocab_.push_back(next_line());
    model.symbol_ids_[model.vocab_.back()] = static_cast<std::uint32_t>(i);
  }
  model.counts_.resize(model.config_.order + 1);
  for (int k = 1; k <= model.config_.order; ++k) {
    std::istringstream head(field("ngrams"));
    int kk = 0;
    std::size_t n = 0;
    head >> kk >> n;
    if (kk != k) throw Error("model file levels out of order");
    for (std::size_t i = 0; i < n; ++i) {
      next_line();
      const auto tab = line.find('\t');
      if (tab == std::string::npos) throw Error("malformed n-gram line");
      std::istringstream ids_in(line.substr(0, tab));
      std::vector<std::uint32_t> ids;
      std::uint32_t id;
      while (ids_in >> id) ids.push_back(id);
      if (ids.size() != static_cast<std::size_t>(k)) {
        throw Error("n-gram of wrong length in model file");
      }
      model.counts_[k][pack(ids)] = std::stoull(line.substr(tab + 1));
    }
  }
  if (next_line() != "end") throw Error("missing end marker in model file");
  model.finalize();
  return model;
}

}  // namespace corpuslab
