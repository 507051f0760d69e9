// corpuslab/morphseg.cpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "corpuslab/morphseg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <unordered_map>

#include "corpuslab/error.hpp"
#include "corpuslab/utf8.hpp"

namespace corpuslab {

namespace {

constexpr double kEps = 1e-9;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Incremental tally of the two-part cost.
class CostTally {
 public:
  CostTally(double per_char_bits, double per_morph_bits)
      : gamma_(per_char_bits), beta_(per_morph_bits) {}

  void add(const std::string& morph, std::uint64_t delta) {
    auto [it, inserted] = counts_.try_emplace(morph, 0);
    const double before = static_cast<double>(it->second);
    it->second += delta;
    sum_mlogm_ += xlog2x(static_cast<double>(it->second)) - xlog2x(before);
    total_ += delta;
    if (before == 0.0) {
      lex_chars_ += utf8_length(morph);
      ++lex_count_;
    }
  }

  void remove(const std::string& morph, std::uint64_t delta) {
    auto it = counts_.find(morph);
    const double before = static_cast<double>(it->second);
    it->second -= delta;
    sum_mlogm_ += xlog2x(static_cast<double>(it->second)) - xlog2x(before);
    total_ -= delta;
    if (it->second == 0) {
      lex_chars_ -= utf8_length(morph);
      --lex_count_;
      counts_.erase(it);
    }
  }

  double total_cost() const {
    const double corpus = xlog2x(static_cast<double>(total_)) - sum_mlogm_;
    return corpus + gamma_ * static_cast<double>(lex_chars_) +
           beta_ * static_cast<double>(lex_count_);
  }

  const std::unordered_map<std::string, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t total() const { return total_; }

 private:
  double gamma_;
  double beta_;
  std::unordered_map<std::string, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
  double sum_mlogm_ = 0.0;  // sum over morphs of M*log2(M)
  std::size_t lex_chars_ = 0;
  std::size_t lex_count_ = 0;
};

std::string slice(const std::vector<char32_t>& cps, std::size_t lo, std::size_t hi) {
  std::string out;
  for (std::size_t i = lo; i < hi; ++i) utf8_append(out, cps[i]);
  return out;
}

class Trainer {
 public:
  Trainer(const std::map<std::string, std::uint64_t>& words, double gamma,
          double beta, std::uint64_t joint_limit)
      : words_(words),
        tally_(gamma, beta),
        joint_limit_(joint_limit),
        gamma_(gamma),
        beta_(beta) {}

  void run(std::map<std::string, std::vector<std::string>>& segmentations,
           std::vector<double>& trace) {
    for (const auto& [word, count] : words_) {
      segs_[word] = {word};
      tally_.add(word, count);
    }
    trace.push_back(tally_.total_cost());

    bool improved = true;
    while (improved) {
      improved = greedy_passes(trace);
      if (joint_refinement()) {
        trace.push_back(tally_.total_cost());
        improved = true;
      }
    }
    segmentations = std::move(segs_);
  }

  const CostTally& tally() const { return tally_; }

 private:
  // Sweeps every word until a full pass makes no accepted change.
  bool greedy_passes(std::vector<double>& trace) {
    bool any = false;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [word, count] : words_) {
        if (resplit_word(word, count)) changed = true;
      }
      trace.push_back(tally_.total_cost());
      any = any || changed;
    }
    return any;
  }

  bool resplit_word(const std::string& word, std::uint64_t count) {
    const double cost_before = tally_.total_cost();
    std::vector<std::string> old_seg = segs_[word];
    for (const auto& m : old_seg) tally_.remove(m, count);
    std::vector<std::string> new_seg = split_rec(word, count);
    if (tally_.total_cost() < cost_before - kEps) {
      segs_[word] = std::move(new_seg);
      return true;
    }
    for (const auto& m : new_seg) tally_.remove(m, count);
    for (const auto& m : old_seg) tally_.add(m, count);
    segs_[word] = std::move(old_seg);
    return false;
  }

  // Greedy top-down recursive binary splitting. Leaves the tally holding
  // the returned morphs. Equal-cost splits resolve to the rightmost
  // position (shortest suffix): the cost cannot distinguish mirror-image
  // prefix/suffix lexicons, and these languages are suffixing.
  std::vector<std::string> split_rec(const std::string& piece, std::uint64_t count) {
    const std::vector<char32_t> cps = utf8_decode(piece);
    tally_.add(piece, count);
    if (cps.size() < 2) return {piece};
    double best = tally_.total_cost();
    tally_.remove(piece, count);
    std::size_t best_split = 0;
    for (std::size_t i = cps.size() - 1; i >= 1; --i) {
      const std::string u = slice(cps, 0, i);
      const std::string v = slice(cps, i, cps.size());
      tally_.add(u, count);
      tally_.add(v, count);
      const double cost = tally_.total_cost();
      tally_.remove(v, count);
      tally_.remove(u, count);
      if (cost < best - kEps) {
        best = cost;
        best_split = i;
      }
    }
    if (best_split == 0) {
      tally_.add(piece, count);
      return {piece};
    }
    const std::string u = slice(cps, 0, best_split);
    const std::string v = slice(cps, best_split, cps.size());
    tally_.add(v, count);
    std::vector<std::string> out = split_rec(u, count);
    tally_.remove(v, count);
    std::vector<std::string> right = split_rec(v, count);
    out.insert(out.end(), right.begin(), right.end());
    return out;
  }

  // Exact search over one-split-per-word assignments. Shared affixes only
  // pay off when several words split at once, which the per-word greedy
  // cannot reach; this pass can. Bounded by joint_limit_ combinations.
  // Per-word options are listed whole-first and then split positions from
  // the right, so the first-found minimum carries the suffixing tie-break.
  bool joint_refinement() {
    std::vector<std::string> names;
    std::vector<std::uint64_t> word_counts;
    std::vector<std::vector<char32_t>> cps;
    std::vector<std::vector<std::size_t>> opts;  // 0 = whole, i = split at cp i
    std::uint64_t combos = 1;
    for (const auto& [word, count] : words_) {
      names.push_back(word);
      word_counts.push_back(count);
      cps.push_back(utf8_decode(word));
      std::vector<std::size_t> positions = {0};
      for (std::size_t i = cps.back().size(); i-- > 1;) positions.push_back(i);
      if (combos > joint_limit_ / positions.size()) return false;
      combos *= positions.size();
      opts.push_back(std::move(positions));
    }
    if (combos <= 1) return false;

    const std::size_t n = names.size();
    CostTally trial(tally_gamma(), tally_beta());
    std::vector<std::size_t> choice(n, 0);  // index into opts[w]
    std::vector<std::size_t> best_choice;
    double best = std::numeric_limits<double>::infinity();
    auto apply = [&](CostTally& t, std::size_t w, std::size_t opt, bool add) {
      auto op = add ? &CostTally::add : &CostTally::remove;
      const std::size_t c = opts[w][opt];
      if (c == 0) {
        (t.*op)(names[w], word_counts[w]);
      } else {
        (t.*op)(slice(cps[w], 0, c), word_counts[w]);
        (t.*op)(slice(cps[w], c, cps[w].size()), word_counts[w]);
      }
    };
    for (std::size_t w = 0; w < n; ++w) apply(trial, w, 0, true);
    while (true) {
      const double cost = trial.total_cost();
      if (cost < best - kEps) {
        best = cost;
        best_choice = choice;
      }
      // Odometer increment.
      std::size_t w = 0;
      while (w < n) {
        apply(trial, w, choice[w], false);
        if (++choice[w] < opts[w].size()) {
          apply(trial, w, choice[w], true);
          break;
        }
        choice[w] = 0;
        apply(trial, w, 0, true);
        ++w;
      }
      if (w == n) break;
    }
    if (!(best < tally_.total_cost() - kEps)) return false;

    // Adopt the refined assignment, then let the greedy recursion split
    // the parts further where that helps.
    for (std::size_t w = 0; w < n; ++w) {
      for (const auto& m : segs_[names[w]]) tally_.remove(m, word_counts[w]);
      const std::size_t c = opts[w][best_choice[w]];
      std::vector<std::string> seg;
      if (c == 0) {
        seg = {names[w]};
      } else {
        seg = {slice(cps[w], 0, c), slice(cps[w], c, cps[w].size())};
      }
      for (const auto& m : seg) tally_.add(m, word_counts[w]);
      segs_[names[w]] = std::move(seg);
    }
    return true;
  }

  double tally_gamma() const { return gamma_; }
  double tally_beta() const { return beta_; }

  const std::map<std::string, std::uint64_t>& words_;
  CostTally tally_;
  std::uint64_t joint_limit_;
  std::map<std::string, std::vector<std::string>> segs_;
  double gamma_;
  double beta_;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

double char_price_bits(const std::map<std::string, std::uint64_t>& word_counts) {
  std::unordered_map<char32_t, double> freq;
  double total = 0.0;
  for (const auto& [word, count] : word_counts) {
    for (char32_t cp : utf8_decode(word)) {
      freq[cp] += static_cast<double>(count);
      total += static_cast<double>(count);
    }
  }
  if (total == 0.0) return 0.0;
  double h = 0.0;
  for (const auto& [cp, c] : freq) {
    const double p = c / total;
    h -= p * std::log2(p);
  }
  return h;
}

SegmentationModel SegmentationModel::train(
    const std::map<std::string, std::uint64_t>& word_counts, const MorphConfig& config) {
  if (word_counts.empty()) throw Error("empty input");
  for (const auto& [word, count] : word_counts) {
    if (word.empty()) throw Error("empty word in frequency list");
    if (count == 0) throw Error("word counts must be >= 1");
  }
  SegmentationModel model;
  model.per_morph_bits_ = config.per_morph_bits;
  model.per_char_bits_ =
      config.per_char_bits ? *config.per_char_bits : char_price_bits(word_counts);

  Trainer trainer(word_counts, model.per_char_bits_, model.per_morph_bits_,
                  config.joint_search_limit);
  trainer.run(model.segmentations_, model.cost_trace_);

  for (const auto& [morph, count] : trainer.tally().counts()) {
    model.lexicon_[morph] = count;
  }
  model.total_tokens_ = trainer.tally().total();
  model.total_cost_ = trainer.tally().total_cost();
  return model;
}

double SegmentationModel::assignment_cost(
    const std::map<std::string, std::uint64_t>& word_counts,
    const std::map<std::string, std::vector<std::string>>& segmentations,
    double per_char_bits, double per_morph_bits) {
  CostTally tally(per_char_bits, per_morph_bits);
  for (const auto& [word, count] : word_counts) {
    for (const auto& m : segmentations.at(word)) tally.add(m, count);
  }
  return tally.total_cost();
}

std::vector<std::string> SegmentationModel::segment(const std::string& word) const {
  if (word.empty()) throw Error("empty word");
  const std::vector<char32_t> cps = utf8_decode(word);
  const std::size_t n = cps.size();
  const double total = static_cast<double>(total_tokens_);
  // Smoothed cost for an unknown single-character morph.
  const double fallback = -std::log2(0.5 / (total + 1.0));

  constexpr double kInf = std::numeric_limits<double>::infinity();
  struct Cell {
    double cost = kInf;
    std::size_t morphs = 0;
    std::size_t back = 0;
  };
  std::vector<Cell> dp(n + 1);
  dp[0] = {0.0, 0, 0};
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (dp[i].cost == kInf) continue;
      const std::string piece = slice(cps, i, j);
      double piece_cost;
      const auto it = lexicon_.find(piece);
      if (it != lexicon_.end()) {
        piece_cost = -std::log2(static_cast<double>(it->second) / total);
      } else if (j - i == 1) {
        piece_cost = fallback;
      } else {
        continue;
      }
      const double cost = dp[i].cost + piece_cost;
      const std::size_t morphs = dp[i].morphs + 1;
      // Deterministic tie-break: fewer morphs, then a longer last morph.
      const Cell& cur = dp[j];
      const bool better =
          cost < cur.cost - kEps ||
          (cost < cur.cost + kEps &&
           (morphs < cur.morphs || (morphs == cur.morphs && i < cur.back)));
      if (better) dp[j] = {cost, morphs, i};
    }
  }
  std::vector<std::string> out;
  std::size_t j = n;
  while (j > 0) {
    const std::size_t i = dp[j].back;
    out.push_back(slice(cps, i, j));
    j = i;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

void SegmentationModel::save(std::ostream& out) const {
  out << "corpuslab-morph 1\n";
  out << "per_morph_bits " << format_double(per_morph_bits_) << "\n";
  out << "per_char_bits " << format_double(per_char_bits_) << "\n";
  out << "total_cost " << format_double(total_cost_) << "\n";
  out << "lexicon " << lexicon_.size() << "\n";
  for (const auto& [morph, count] : lexicon_) {
    out << morph << '\t' << count << "\n";
  }
  out << "end\n";
}

SegmentationModel SegmentationModel::load(std::istream& in) {
  SegmentationModel model;
  std::string line;
  auto next_line = [&]() -> std::string& {
    if (!std::getline(in, line)) throw Error("truncated morph model file");
    return line;
  };
  if (next_line() != "corpuslab-morph 1") throw Error("unrecognized morph model header");
  auto field = [&](const std::string& name) {
    next_line();
    if (line.rfind(name + " ", 0) != 0) throw Error("expected '" + name + "' in morph model");
    return line.substr(name.size() + 1);
  };
  model.per_morph_bits_ = std::stod(field("per_morph_bits"));
  model.per_char_bits_ = std::stod(field("per_char_bits"));
  model.total_cost_ = std::stod(field("total_cost"));
  const std::size_t k = std::stoul(field("lexicon"));
  for (std::size_t i = 0; i < k; ++i) {
    next_line();
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw Error("malformed lexicon line");
    const std::uint64_t count = std::stoull(line.substr(tab + 1));
    model.lexicon_[line.substr(0, tab)] = count;
    model.total_tokens_ += count;
  }
  if (next_line() != "end") throw Error("missing end marker in morph model");
  return model;
}

std::map<std::string, std::uint64_t> word_freqs(const Corpus& corpus) {
  std::map<std::string, std::uint64_t> freqs;
  for (const auto& sent : corpus.sentences) {
    for (const auto& tok : sent.tokens) ++freqs[tok];
  }
  return freqs;
}

FrequencyTable morph_table(const Corpus& corpus, const SegmentationModel& model) {
  std::vector<std::string> stream;
  for (const auto& sent : corpus.sentences) {
    for (const auto& tok : sent.tokens) {
      for (auto& m : model.segment(tok)) stream.push_back(std::move(m));
    }
  }
  return freq_table(stream);
}

}  // namespace corpuslab
