// corpuslab/report.cpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "corpuslab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "corpuslab/akshara.hpp"
#include "corpuslab/annotio.hpp"
#include "corpuslab/error.hpp"
#include "corpuslab/morphseg.hpp"
#include "corpuslab/ngramlm.hpp"
#include "corpuslab/rng.hpp"
#include "corpuslab/stats.hpp"

namespace corpuslab {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string fmt_ratio(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string fmt_pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

const std::map<std::string, std::string>& module_versions() {
  static const std::map<std::string, std::string> versions = {
      {"textcore", "1"}, {"akshara", "1"}, {"stats", "1"},   {"ngramlm", "1"},
      {"similarity", "1"}, {"langid", "1"}, {"morphseg", "1"}, {"tagger", "1"},
      {"annotio", "1"}, {"lexres", "1"},  {"cli", "1"},
  };
  return versions;
}

// ---------------------------------------------------------------------------
// Config
// ---------------------------------------------------------------------------

PipelineConfig PipelineConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  PipelineConfig config;
  config.coverage_percents.clear();
  bool have_percents = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const auto b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    if (key.rfind("corpus.", 0) == 0) {
      config.corpora[key.substr(7)] = value;
    } else if (key.rfind("ssf.", 0) == 0) {
      config.ssf[key.substr(4)] = value;
    } else if (key == "seed") {
      config.seed = std::stoull(value);
    } else if (key == "window") {
      config.window = std::stoul(value);
    } else if (key == "char_ngram_max") {
      config.char_ngram_max = std::stoul(value);
    } else if (key == "max_lm_order") {
      config.max_lm_order = std::stoi(value);
    } else if (key == "similarity.order") {
      config.similarity_order = std::stoi(value);
    } else if (key == "similarity.mode") {
      if (value == "raw_sum") config.similarity_mode = SimilarityMode::raw_sum;
      else if (value == "per_char_mean") config.similarity_mode = SimilarityMode::per_char_mean;
      else throw ParseError("unknown similarity.mode '" + value + "'", lineno);
    } else if (key == "distance.order") {
      config.distance_order = std::stoi(value);
    } else if (key == "coverage_percents") {
      have_percents = true;
      std::istringstream vs(value);
      std::string piece;
      while (std::getline(vs, piece, ',')) {
        config.coverage_percents.push_back(std::stod(piece));
      }
    } else if (key == "top_n") {
      config.top_n = std::stoul(value);
    } else if (key == "format") {
      if (value != "tsv" && value != "json") {
        throw ParseError("format must be tsv or json", lineno);
      }
      config.format = value;
    } else {
      throw ParseError("unknown config key '" + key + "'", lineno);
    }
  }
  if (!have_percents) config.coverage_percents = {0.5, 0.6, 0.7, 0.8, 0.9};
  if (config.corpora.empty()) throw Error("config registers no corpora");
  return config;
}

std::string PipelineConfig::canonical() const {
  std::ostringstream out;
  for (const auto& [lang, path] : corpora) out << "corpus." << lang << " = " << path << "\n";
  for (const auto& [lang, path] : ssf) out << "ssf." << lang << " = " << path << "\n";
  out << "seed = " << seed << "\n";
  out << "window = " << window << "\n";
  out << "char_ngram_max = " << char_ngram_max << "\n";
  out << "max_lm_order = " << max_lm_order << "\n";
  out << "similarity.order = " << similarity_order << "\n";
  out << "similarity.mode = "
      << (similarity_mode == SimilarityMode::raw_sum ? "raw_sum" : "per_char_mean")
      << "\n";
  out << "distance.order = " << distance_order << "\n";
  out << "coverage_percents = ";
  for (std::size_t i = 0; i < coverage_percents.size(); ++i) {
    if (i) out << ',';
    out << fmt_ratio(coverage_percents[i]);
  }
  out << "\n";
  out << "top_n = " << top_n << "\n";
  out << "format = " << format << "\n";
  return out.str();
}

std::string PipelineConfig::hash() const {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(canonical())));
  return buf;
}

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

namespace {

constexpr std::uint64_t kRestrictSalt = 0x9e3779b97f4a7c15ull;

std::vector<std::string> word_stream(const Corpus& corpus) {
  std::vector<std::string> stream;
  stream.reserve(corpus.token_count());
  for (const auto& sent : corpus.sentences) {
    for (const auto& tok : sent.tokens) stream.push_back(tok);
  }
  return stream;
}

std::vector<std::string> char_stream(const Corpus& corpus) {
  return char_ngram_stream(corpus, 1);
}

// Seeded truncation to `limit` sentences, for the paper-style starred
// columns computed at the smallest corpus's size.
Corpus restrict_corpus(const Corpus& corpus, std::size_t limit, std::uint64_t seed) {
  if (corpus.sentences.size() <= limit) return corpus;
  std::vector<std::size_t> idx(corpus.sentences.size());
  std::iota(idx.begin(), idx.end(), 0);
  SplitRng rng(seed ^ fnv1a(corpus.language_id) ^ kRestrictSalt);
  rng.shuffle(idx);
  idx.resize(limit);
  Corpus out;
  out.language_id = corpus.language_id;
  out.source_tag = corpus.source_tag;
  for (std::size_t i : idx) out.sentences.push_back(corpus.sentences[i]);
  return out;
}

void add_freq_rows(Artifact& artifact, const FrequencyTable& table, std::size_t top_n) {
  for (std::size_t i = 0; i < table.rows.size() && i < top_n; ++i) {
    const FrequencyRow& row = table.rows[i];
    artifact.rows.push_back({row.unit, std::to_string(row.freq), fmt_ratio(row.rf),
                             fmt_ratio(row.cc)});
  }
}

double self_perplexity(const Corpus& corpus, LmLevel level, int order) {
  LmConfig cfg;
  cfg.level = level;
  cfg.order = order;
  cfg.smoothing = Smoothing::abs_backoff;
  const NGramModel model = NGramModel::train(corpus, cfg);
  return model.evaluate(corpus).perplexity;
}

}  // namespace

ReportBundle run_pipeline(const PipelineConfig& config) {
  ReportBundle bundle;
  bundle.config_hash = config.hash();
  bundle.module_versions = module_versions();

  std::map<std::string, Corpus> corpora;
  for (const auto& [lang, path] : config.corpora) {
    if (!fs::exists(path)) throw Error("missing corpus file for '" + lang + "': " + path);
    corpora[lang] = read_corpus(path, lang);
    if (corpora[lang].sentences.empty()) throw Error("corpus '" + lang + "' is empty");
  }
  const bool multi = corpora.size() >= 2;
  std::size_t min_sentences = 0;
  if (multi) {
    min_sentences = corpora.begin()->second.sentences.size();
    for (const auto& [lang, corpus] : corpora) {
      min_sentences = std::min(min_sentences, corpus.sentences.size());
    }
  }
  std::map<std::string, Corpus> restricted;
  if (multi) {
    for (const auto& [lang, corpus] : corpora) {
      restricted[lang] = restrict_corpus(corpus, min_sentences, config.seed);
    }
  }

  auto& artifacts = bundle.artifacts;
  auto new_artifact = [&](const std::string& name,
                          std::vector<std::string> columns) -> Artifact& {
    Artifact& a = artifacts[name];
    a.name = name;
    a.columns = std::move(columns);
    return a;
  };

  // Unigram analysis (the paper's Table 1 layout; TTR in the library's
  // [0,1] scale).
  {
    std::vector<std::string> cols = {"Language", "Sentences", "Tokens",
                                     "Types",    "RareTypes", "TTR", "MATTR"};
    if (multi) cols.push_back("TTRStar");
    Artifact& a = new_artifact("unigram", cols);
    for (const auto& [lang, corpus] : corpora) {
      const std::vector<std::string> words = word_stream(corpus);
      const DiversityReport rep = diversity(words, config.window);
      std::vector<std::string> row = {
          lang,
          std::to_string(corpus.sentences.size()),
          std::to_string(rep.tokens),
          std::to_string(rep.types),
          std::to_string(rep.rare_types),
          fmt_ratio(rep.ttr),
          fmt_ratio(rep.mattr)};
      if (multi) {
        const std::vector<std::string> rwords = word_stream(restricted.at(lang));
        row.push_back(fmt_ratio(ttr(rwords)));
      }
      a.rows.push_back(std::move(row));
    }
  }

  // Type coverage (Table 2).
  {
    std::vector<std::string> cols = {"Language"};
    for (double p : config.coverage_percents) {
      cols.push_back("P" + fmt_pct(100.0 * p));
      if (multi) cols.push_back("P" + fmt_pct(100.0 * p) + "Star");
    }
    Artifact& a = new_artifact("coverage", cols);
    for (const auto& [lang, corpus] : corpora) {
      const std::vector<std::string> words = word_stream(corpus);
      const auto coverage = type_coverage(words, config.coverage_percents, config.seed);
      std::map<double, double> coverage_star;
      if (multi) {
        const std::vector<std::string> rwords = word_stream(restricted.at(lang));
        coverage_star = type_coverage(rwords, config.coverage_percents, config.seed);
      }
      std::vector<std::string> row = {lang};
      for (double p : config.coverage_percents) {
        row.push_back(fmt_pct(100.0 * coverage.at(p)));
        if (multi) row.push_back(fmt_pct(100.0 * coverage_star.at(p)));
      }
      a.rows.push_back(std::move(row));
    }
  }

  // Top-frequency tables (Tables 3 and 6) and Zipf series (Figure 2).
  for (const auto& [lang, corpus] : corpora) {
    const std::vector<std::string> words = word_stream(corpus);
    const FrequencyTable words_table = freq_table(words);
    add_freq_rows(new_artifact("top_words." + lang, {"Unit", "Freq", "RF", "CC"}),
                  words_table, config.top_n);
    add_freq_rows(
        new_artifact("top_syllables." + lang, {"Unit", "Freq", "RF", "CC"}),
        freq_table(syllable_stream(corpus)), config.top_n);

    Artifact& zipf = new_artifact("zipf." + lang,
                                  {"Rank", "Freq", "LogRank", "LogFreq"});
    for (const auto& [rank, freq] : zipf_points(words_table)) {
      zipf.rows.push_back({std::to_string(rank), std::to_string(freq),
                           fmt_ratio(std::log10(static_cast<double>(rank))),
                           fmt_ratio(std::log10(static_cast<double>(freq)))});
    }
  }

  // Morpheme tables (Table 6, morpheme panel).
  for (const auto& [lang, corpus] : corpora) {
    const SegmentationModel segmenter = SegmentationModel::train(word_freqs(corpus));
    add_freq_rows(
        new_artifact("top_morphemes." + lang, {"Unit", "Freq", "RF", "CC"}),
        morph_table(corpus, segmenter), config.top_n);
  }

  // Syllable positions (Table 4) and syllable diversity (Table 5).
  {
    Artifact& a = new_artifact(
        "syllable_positions",
        {"Language", "Mode", "Total", "Initial", "InitialPct", "Medial",
         "MedialPct", "Final", "FinalPct"});
    for (const auto& [lang, corpus] : corpora) {
      for (const CountMode mode : {CountMode::types, CountMode::tokens}) {
        const PositionStats st = position_stats(corpus, mode);
        a.rows.push_back({lang,
                          mode == CountMode::types ? "types" : "tokens",
                          std::to_string(st.total),
                          std::to_string(st.initial),
                          fmt_pct(st.initial_pct),
                          std::to_string(st.medial),
                          fmt_pct(st.medial_pct),
                          std::to_string(st.final),
                          fmt_pct(st.final_pct)});
      }
    }
    std::vector<std::string> cols = {"Language", "TTR", "MATTR"};
    if (multi) cols.push_back("TTRStar");
    Artifact& d = new_artifact("syllable_diversity", cols);
    for (const auto& [lang, corpus] : corpora) {
      const std::vector<std::string> syl = syllable_stream(corpus);
      std::vector<std::string> row = {lang, fmt_ratio(ttr(syl)),
                                      fmt_ratio(mattr(syl, config.window))};
      if (multi) row.push_back(fmt_ratio(ttr(syllable_stream(restricted.at(lang)))));
      d.rows.push_back(std::move(row));
    }
  }

  // Word length analysis (Table 11) and its histogram (Figure 3 data).
  {
    std::vector<std::string> cols = {"Language", "Basis", "Min",   "Max",
                                     "Mean",     "Median", "StdDev"};
    if (multi) {
      cols.insert(cols.end(), {"MaxStar", "MeanStar", "MedianStar", "StdDevStar"});
    }
    Artifact& a = new_artifact("lengths", cols);
    for (const auto& [lang, corpus] : corpora) {
      for (const CountMode basis : {CountMode::types, CountMode::tokens}) {
        const LengthStats st = length_stats(corpus, basis);
        std::vector<std::string> row = {
            lang,
            basis == CountMode::types ? "types" : "tokens",
            std::to_string(st.min),
            std::to_string(st.max),
            fmt_pct(st.mean),
            fmt_pct(st.median),
            fmt_pct(st.stddev)};
        if (multi) {
          const LengthStats rs = length_stats(restricted.at(lang), basis);
          row.push_back(std::to_string(rs.max));
          row.push_back(fmt_pct(rs.mean));
          row.push_back(fmt_pct(rs.median));
          row.push_back(fmt_pct(rs.stddev));
        }
        a.rows.push_back(std::move(row));
      }
      Artifact& hist = new_artifact("length_hist." + lang, {"Length", "Count"});
      for (const auto& [len, count] : length_stats(corpus, CountMode::types).histogram) {
        hist.rows.push_back({std::to_string(len), std::to_string(count)});
      }
    }
  }

  // Entropy (Tables 7-8).
  {
    std::vector<std::string> cols = {"Language", "WordEntropy", "CharEntropy"};
    if (multi) cols.insert(cols.end(), {"WordEntropyStar", "CharEntropyStar"});
    Artifact& a = new_artifact("entropy", cols);
    for (const auto& [lang, corpus] : corpora) {
      std::vector<std::string> row = {lang, fmt_pct(entropy(word_stream(corpus))),
                                      fmt_pct(entropy(char_stream(corpus)))};
      if (multi) {
        row.push_back(fmt_pct(entropy(word_stream(restricted.at(lang)))));
        row.push_back(fmt_pct(entropy(char_stream(restricted.at(lang)))));
      }
      a.rows.push_back(std::move(row));
    }
  }

  // Self-perplexity (Tables 9-10), word and character level, backoff
  // smoothing, orders 1..max_lm_order.
  {
    std::vector<std::string> cols = {"Language", "Level"};
    for (int k = 1; k <= config.max_lm_order; ++k) {
      cols.push_back("Order" + std::to_string(k));
      if (multi) cols.push_back("Order" + std::to_string(k) + "Star");
    }
    Artifact& a = new_artifact("perplexity", cols);
    for (const auto& [lang, corpus] : corpora) {
      for (const LmLevel level : {LmLevel::word, LmLevel::chars}) {
        std::vector<std::string> row = {lang, level == LmLevel::word ? "word" : "char"};
        for (int k = 1; k <= config.max_lm_order; ++k) {
          row.push_back(fmt_pct(self_perplexity(corpus, level, k)));
          if (multi) {
            row.push_back(fmt_pct(self_perplexity(restricted.at(lang), level, k)));
          }
        }
        a.rows.push_back(std::move(row));
      }
    }
  }

  // Character n-gram diversity (Figure 1 data).
  {
    Artifact& a = new_artifact("char_ngrams",
                               {"Language", "N", "Tokens", "Types", "TTR", "MATTR"});
    for (const auto& [lang, corpus] : corpora) {
      const auto profile =
          char_ngram_profile(corpus, config.char_ngram_max, config.window);
      for (std::size_t n = 0; n < profile.size(); ++n) {
        const DiversityReport& rep = profile[n];
        a.rows.push_back({lang, std::to_string(n + 1), std::to_string(rep.tokens),
                          std::to_string(rep.types), fmt_ratio(rep.ttr),
                          fmt_ratio(rep.mattr)});
      }
    }
  }

  // Pair analyses (Tables 13-14).
  if (multi) {
    const SimilarityMatrix sim =
        ssnglm_matrix(corpora, config.similarity_order, config.seed,
                      config.similarity_mode, /*symmetrize=*/false);
    auto matrix_artifact = [&](const std::string& name,
                               const std::vector<std::string>& languages,
                               const std::vector<std::vector<double>>& values) {
      std::vector<std::string> cols = {"Language"};
      cols.insert(cols.end(), languages.begin(), languages.end());
      Artifact& a = new_artifact(name, cols);
      for (std::size_t i = 0; i < languages.size(); ++i) {
        std::vector<std::string> row = {languages[i]};
        for (double v : values[i]) row.push_back(fmt_ratio(v));
        a.rows.push_back(std::move(row));
      }
    };
    matrix_artifact("similarity", sim.languages, sim.scaled);
    matrix_artifact("similarity_raw", sim.languages, sim.raw_ss);
    const DistanceMatrix dist =
        distance_matrix(corpora, config.distance_order, config.seed);
    matrix_artifact("distance", dist.languages, dist.scaled);
  } else {
    bundle.notes.push_back("pair analyses skipped: fewer than 2 corpora");
  }

  // Annotation statistics from SSF inputs, when configured.
  if (!config.ssf.empty()) {
    Artifact& a = new_artifact(
        "annotation",
        {"Language", "Sentences", "Tokens", "POSEntropy", "WordPOSEntropy",
         "ChunkEntropy", "POSTTR", "WordPOSTTR", "ChunkTTR", "POSMATTR",
         "WordPOSMATTR", "ChunkMATTR"});
    for (const auto& [lang, path] : config.ssf) {
      if (!fs::exists(path)) throw Error("missing SSF file for '" + lang + "': " + path);
      std::ifstream in(path, std::ios::binary);
      std::ostringstream buf;
      buf << in.rdbuf();
      const SSFDocument doc = parse_ssf(buf.str());
      const AnnotatedStats st = annotated_stats({doc}, config.window);
      a.rows.push_back(
          {lang, std::to_string(st.sentences), std::to_string(st.tokens),
           fmt_pct(st.pos_entropy), fmt_pct(st.word_pos_entropy),
           st.has_chunks ? fmt_pct(st.chunk_entropy) : "-",
           fmt_ratio(st.pos.ttr), fmt_ratio(st.word_pos.ttr),
           st.has_chunks ? fmt_ratio(st.chunk.ttr) : "-",
           fmt_ratio(st.pos.mattr), fmt_ratio(st.word_pos.mattr),
           st.has_chunks ? fmt_ratio(st.chunk.mattr) : "-"});
      Artifact& tags = new_artifact("pos_tags." + lang, {"Tag", "Freq", "Pct"});
      for (const auto& row : st.pos_table.rows) {
        tags.rows.push_back({row.unit, std::to_string(row.freq),
                             fmt_pct(100.0 * row.rf)});
      }
    }
  }

  return bundle;
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

namespace {

std::string versions_string(const std::map<std::string, std::string>& versions) {
  std::string out;
  for (const auto& [module, version] : versions) {
    if (!out.empty()) out += ',';
    out += module + "=" + version;
  }
  return out;
}

}  // namespace

void emit(const ReportBundle& bundle, const std::string& artifact_name,
          const std::string& format, std::ostream& out) {
  const auto it = bundle.artifacts.find(artifact_name);
  if (it == bundle.artifacts.end()) {
    std::string names;
    for (const auto& [name, artifact] : bundle.artifacts) {
      if (!names.empty()) names += ", ";
      names += name;
    }
    throw Error("unknown artifact '" + artifact_name + "'; available: " + names);
  }
  const Artifact& artifact = it->second;
  if (format == "tsv") {
    out << "# config=" << bundle.config_hash
        << " versions=" << versions_string(bundle.module_versions) << "\n";
    for (std::size_t c = 0; c < artifact.columns.size(); ++c) {
      if (c) out << '\t';
      out << artifact.columns[c];
    }
    out << '\n';
    for (const auto& row : artifact.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << '\t';
        out << row[c];
      }
      out << '\n';
    }
    return;
  }
  if (format == "json") {
    ordered_json j;
    j["schema_version"] = 1;
    j["artifact"] = artifact.name;
    j["config_hash"] = bundle.config_hash;
    j["module_versions"] = bundle.module_versions;
    j["columns"] = artifact.columns;
    j["rows"] = artifact.rows;
    out << j.dump(2) << "\n";
    return;
  }
  throw Error("unknown format '" + format + "' (expected tsv or json)");
}

void write_bundle(const ReportBundle& bundle, const std::string& outdir,
                  const std::string& format) {
  fs::create_directories(outdir);
  const std::string ext = format == "json" ? ".json" : ".tsv";
  for (const auto& [name, artifact] : bundle.artifacts) {
    std::ofstream out(fs::path(outdir) / (name + ext), std::ios::binary);
    emit(bundle, name, format, out);
  }
  ordered_json manifest;
  manifest["schema_version"] = 1;
  manifest["config_hash"] = bundle.config_hash;
  manifest["module_versions"] = bundle.module_versions;
  std::vector<std::string> names;
  for (const auto& [name, artifact] : bundle.artifacts) names.push_back(name + ext);
  manifest["artifacts"] = names;
  manifest["notes"] = bundle.notes;
  std::ofstream out(fs::path(outdir) / "manifest.json", std::ios::binary);
  out << manifest.dump(2) << "\n";
}

}  // namespace corpuslab
