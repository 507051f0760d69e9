// corpuslab/metrics.cpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "corpuslab/metrics.hpp"

#include <unordered_map>

#include "corpuslab/error.hpp"

namespace corpuslab {

ClassificationReport classification_report(
    const std::vector<std::string>& labels,
    const std::vector<std::string>& gold,
    const std::vector<std::string>& predicted) {
  if (gold.size() != predicted.size()) throw Error("gold/prediction length mismatch");
  if (gold.empty()) throw Error("empty input");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
  const std::size_t k = labels.size();

  ClassificationReport rep;
  rep.labels = labels;
  rep.confusion.assign(k, std::vector<std::uint64_t>(k, 0));
  rep.total = gold.size();
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto g = index.find(gold[i]);
    if (g == index.end()) throw Error("unknown gold label '" + gold[i] + "'");
    const auto p = index.find(predicted[i]);
    if (p == index.end()) throw Error("unknown predicted label '" + predicted[i] + "'");
    ++rep.confusion[g->second][p->second];
  }

  std::uint64_t correct = 0;
  double macro_p = 0.0, macro_r = 0.0, macro_f = 0.0;
  std::size_t macro_n = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::uint64_t tp = rep.confusion[c][c];
    std::uint64_t support = 0, predicted_as = 0;
    for (std::size_t j = 0; j < k; ++j) {
      support += rep.confusion[c][j];
      predicted_as += rep.confusion[j][c];
    }
    correct += tp;
    ClassMetrics m;
    m.label = labels[c];
    m.support = support;
    m.precision = predicted_as ? static_cast<double>(tp) / predicted_as : 0.0;
    m.recall = support ? static_cast<double>(tp) / support : 0.0;
    m.f1 = (m.precision + m.recall > 0.0)
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    rep.per_class.push_back(m);
    if (support > 0 || predicted_as > 0) {
      macro_p += m.precision;
      macro_r += m.recall;
      macro_f += m.f1;
      ++macro_n;
    }
    rep.weighted_precision += m.precision * support;
    rep.weighted_recall += m.recall * support;
    rep.weighted_f1 += m.f1 * support;
  }
  rep.accuracy = static_cast<double>(correct) / static_cast<double>(rep.total);
  if (macro_n > 0) {
    rep.macro_precision = macro_p / macro_n;
    rep.macro_recall = macro_r / macro_n;
    rep.macro_f1 = macro_f / macro_n;
  }
  rep.weighted_precision /= static_cast<double>(rep.total);
  rep.weighted_recall /= static_cast<double>(rep.total);
  rep.weighted_f1 /= static_cast<double>(rep.total);
  return rep;
}

}  // namespace corpuslab
