// corpuslab/stats.cpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "corpuslab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "corpuslab/error.hpp"
#include "corpuslab/rng.hpp"
#include "corpuslab/utf8.hpp"

namespace corpuslab {

FrequencyTable freq_table(UnitStream units) {
  if (units.empty()) throw Error("empty input");
  std::unordered_map<std::string, std::uint64_t> counts;
  for (const auto& u : units) ++counts[u];

  FrequencyTable table;
  table.total = units.size();
  table.rows.reserve(counts.size());
  for (auto& [unit, freq] : counts) table.rows.push_back({unit, freq, 0.0, 0.0});
  std::sort(table.rows.begin(), table.rows.end(),
            [](const FrequencyRow& a, const FrequencyRow& b) {
              if (a.freq != b.freq) return a.freq > b.freq;
              return a.unit < b.unit;  // byte order == code point order in UTF-8
            });
  double cc = 0.0;
  for (auto& row : table.rows) {
    row.rf = static_cast<double>(row.freq) / static_cast<double>(table.total);
    cc += row.rf;
    row.cc = cc;
  }
  return table;
}

double ttr(UnitStream units) {
  if (units.empty()) throw Error("empty input");
  std::unordered_set<std::string> types(units.begin(), units.end());
  return static_cast<double>(types.size()) / static_cast<double>(units.size());
}

double mattr(UnitStream units, std::size_t window) {
  if (window == 0) throw Error("window must be >= 1");
  if (units.empty()) throw Error("empty input");
  if (units.size() <= window) return ttr(units);

  std::unordered_map<std::string, std::size_t> in_window;
  std::size_t distinct = 0;
  auto add = [&](const std::string& u) {
    if (++in_window[u] == 1) ++distinct;
  };
  auto remove = [&](const std::string& u) {
    if (--in_window[u] == 0) --distinct;
  };
  for (std::size_t i = 0; i < window; ++i) add(units[i]);
  double sum = static_cast<double>(distinct);
  const std::size_t n_windows = units.size() - window + 1;
  for (std::size_t i = 1; i < n_windows; ++i) {
    remove(units[i - 1]);
    add(units[i + window - 1]);
    sum += static_cast<double>(distinct);
  }
  return sum / (static_cast<double>(n_windows) * static_cast<double>(window));
}

DiversityReport diversity(UnitStream units, std::size_t window) {
  if (units.empty()) throw Error("empty input");
  std::unordered_map<std::string, std::uint64_t> counts;
  for (const auto& u : units) ++counts[u];
  DiversityReport rep;
  rep.tokens = units.size();
  rep.types = counts.size();
  for (const auto& [unit, freq] : counts) {
    if (freq == 1) ++rep.rare_types;
  }
  rep.ttr = static_cast<double>(rep.types) / static_cast<double>(rep.tokens);
  rep.mattr = mattr(units, window);
  rep.window = window;
  return rep;
}

std::map<double, double> type_coverage(UnitStream units,
                                       const std::vector<double>& percents,
                                       std::uint64_t seed) {
  if (units.empty()) throw Error("empty input");
  for (double p : percents) {
    if (!(p > 0.0) || p > 1.0) throw Error("coverage percents must lie in (0,1]");
  }
  std::unordered_set<std::string> all_types(units.begin(), units.end());
  const double total_types = static_cast<double>(all_types.size());
  const std::size_t n = units.size();

  SplitRng rng(seed);
  std::map<double, double> out;
  for (double p : percents) {
    std::size_t k = static_cast<std::size_t>(std::floor(p * static_cast<double>(n)));
    if (k == 0) k = 1;
    if (k > n) k = n;
    std::vector<std::size_t> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    std::unordered_set<std::string> sampled;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t r = j + static_cast<std::size_t>(rng.below(n - j));
      std::swap(pos[j], pos[r]);
      sampled.insert(units[pos[j]]);
    }
    out[p] = static_cast<double>(sampled.size()) / total_types;
  }
  return out;
}

LengthStats length_stats(const Corpus& corpus, CountMode basis) {
  if (corpus.sentences.empty()) throw Error("empty input");
  std::vector<std::size_t> lengths;
  if (basis == CountMode::tokens) {
    for (const auto& sent : corpus.sentences) {
      for (const auto& tok : sent.tokens) lengths.push_back(utf8_length(tok));
    }
  } else {
    std::set<std::string> types;
    for (const auto& sent : corpus.sentences) {
      for (const auto& tok : sent.tokens) types.insert(tok);
    }
    for (const auto& t : types) lengths.push_back(utf8_length(t));
  }
  if (lengths.empty()) throw Error("empty input");

  LengthStats stats;
  stats.basis = basis;
  std::sort(lengths.begin(), lengths.end());
  stats.min = lengths.front();
  stats.max = lengths.back();
  double sum = 0.0;
  for (std::size_t len : lengths) {
    sum += static_cast<double>(len);
    ++stats.histogram[len];
  }
  const double n = static_cast<double>(lengths.size());
  stats.mean = sum / n;
  const std::size_t mid = lengths.size() / 2;
  stats.median = (lengths.size() % 2 == 1)
                     ? static_cast<double>(lengths[mid])
                     : (static_cast<double>(lengths[mid - 1]) +
                        static_cast<double>(lengths[mid])) / 2.0;
  double ss = 0.0;
  for (std::size_t len : lengths) {
    const double d = static_cast<double>(len) - stats.mean;
    ss += d * d;
  }
  stats.stddev = std::sqrt(ss / n);
  return stats;
}

std::vector<std::pair<std::size_t, std::uint64_t>> zipf_points(const FrequencyTable& table) {
  std::vector<std::pair<std::size_t, std::uint64_t>> points;
  points.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    points.emplace_back(i + 1, table.rows[i].freq);
  }
  return points;
}

double entropy(UnitStream units) {
  if (units.empty()) throw Error("empty input");
  std::unordered_map<std::string, std::uint64_t> counts;
  for (const auto& u : units) ++counts[u];
  const double n = static_cast<double>(units.size());
  double h = 0.0;
  for (const auto& [unit, freq] : counts) {
    const double p = static_cast<double>(freq) / n;
    h -= p * std::log2(p);
  }
  return h;
}

std::vector<std::string> word_chars(const std::string& token) {
  std::vector<std::string> chars;
  for (char32_t cp : utf8_decode(token)) {
    if (classify_char(cp) == CharClass::Punctuation) continue;
    chars.push_back(utf8_of(cp));
  }
  return chars;
}

std::vector<std::string> char_ngram_stream(const Corpus& corpus, std::size_t n) {
  if (n == 0) throw Error("n must be >= 1");
  std::vector<std::string> stream;
  for (const auto& sent : corpus.sentences) {
    for (const auto& tok : sent.tokens) {
      const std::vector<std::string> chars = word_chars(tok);
      if (chars.size() < n) continue;  // no n-grams from short words
      for (std::size_t i = 0; i + n <= chars.size(); ++i) {
        std::string gram;
        for (std::size_t k = 0; k < n; ++k) gram += chars[i + k];
        stream.push_back(std::move(gram));
      }
    }
  }
  return stream;
}

std::vector<DiversityReport> char_ngram_profile(const Corpus& corpus,
                                                std::size_t n_max,
                                                std::size_t window) {
  if (n_max == 0) throw Error("n_max must be >= 1");
  std::vector<DiversityReport> reports;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::vector<std::string> stream = char_ngram_stream(corpus, n);
    if (stream.empty()) {
      if (n == 1) throw Error("corpus has no eligible characters");
      DiversityReport rep;
      rep.window = window;
      reports.push_back(rep);
      continue;
    }
    reports.push_back(diversity(stream, window));
  }
  return reports;
}

}  // namespace corpuslab
