// corpuslab/report.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef CORPUSLAB_REPORT_HPP_
#define CORPUSLAB_REPORT_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "corpuslab/similarity.hpp"
#include "corpuslab/textcore.hpp"

namespace corpuslab {

struct PipelineConfig {
  std::map<std::string, std::string> corpora;  // language -> corpus path
  std::map<std::string, std::string> ssf;      // language -> SSF path (optional)
  std::uint64_t seed = 42;
  std::size_t window = 500;
  std::size_t char_ngram_max = 7;
  int max_lm_order = 3;
  int similarity_order = 5;
  SimilarityMode similarity_mode = SimilarityMode::per_char_mean;
  int distance_order = 7;
  std::vector<double> coverage_percents = {0.5, 0.6, 0.7, 0.8, 0.9};
  std::size_t top_n = 10;
  std::string format = "tsv";  // tsv | json

  static PipelineConfig from_file(const std::string& path);
  // Canonical "key = value" rendering; its FNV-1a hash stamps artifacts.
  std::string canonical() const;
  std::string hash() const;
};

struct Artifact {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct ReportBundle {
  std::string config_hash;
  std::map<std::string, std::string> module_versions;
  std::map<std::string, Artifact> artifacts;
  std::vector<std::string> notes;  // skipped analyses etc.
};

// Runs every analysis the configured inputs allow. Deterministic: the
// same config produces byte-identical artifacts.
ReportBundle run_pipeline(const PipelineConfig& config);

// Renders one artifact; format is "tsv" or "json". Unknown names throw
// with the list of available artifacts.
void emit(const ReportBundle& bundle, const std::string& artifact_name,
          const std::string& format, std::ostream& out);

// Writes every artifact plus manifest.json into `outdir`.
void write_bundle(const ReportBundle& bundle, const std::string& outdir,
                  const std::string& format);

// Number rendering used across all tables: ratios to 4 decimals,
// percentages to 2, counts exact.
std::string fmt_ratio(double v);
std::string fmt_pct(double v);

const std::map<std::string, std::string>& module_versions();

}  // namespace corpuslab

#endif  // CORPUSLAB_REPORT_HPP_
