// corpuslab/metrics.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef CORPUSLAB_METRICS_HPP_
#define CORPUSLAB_METRICS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace corpuslab {

struct ClassMetrics {
  std::string label;
  std::size_t support = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Single-label classification report: confusion rows are gold labels,
// columns predictions. Weighted recall equals accuracy by construction.
struct ClassificationReport {
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint64_t>> confusion;
  std::vector<ClassMetrics> per_class;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  double weighted_precision = 0.0;
  double weighted_recall = 0.0;
  double weighted_f1 = 0.0;
  double accuracy = 0.0;
  std::size_t total = 0;
};

// Builds a report over the fixed label set. Gold/predicted sequences must
// have equal lengths and only contain labels from `labels`.
ClassificationReport classification_report(
    const std::vector<std::string>& labels,
    const std::vector<std::string>& gold,
    const std::vector<std::string>& predicted);

}  // namespace corpuslab

#endif  // CORPUSLAB_METRICS_HPP_
