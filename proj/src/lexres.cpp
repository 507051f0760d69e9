// corpuslab/lexres.cpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "corpuslab/lexres.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "corpuslab/error.hpp"

namespace corpuslab {

namespace {

constexpr const char* kSynsetHeader = "# corpuslab-synset v1";
constexpr const char* kDictHeader = "# corpuslab-dictionary v1";

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    if (at == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, at - start));
    start = at + 1;
  }
  return parts;
}

// Splits the pipe-separated list, dropping in-entry duplicates.
std::vector<std::string> parse_list(const std::string& field, std::size_t lineno,
                                    const char* what, std::size_t* duplicates) {
  std::vector<std::string> items;
  for (const auto& item : split(field, '|')) {
    if (item.empty()) throw ParseError(std::string("empty ") + what, lineno);
    if (std::find(items.begin(), items.end(), item) != items.end()) {
      ++(*duplicates);
      continue;
    }
    items.push_back(item);
  }
  if (items.empty()) throw ParseError(std::string("no ") + what + " listed", lineno);
  return items;
}

void expect_header(std::istream& in, const char* header) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty file", 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) {
    throw ParseError(std::string("expected header '") + header + "'", 1);
  }
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

SynsetFile parse_synsets(std::istream& in) {
  expect_header(in, kSynsetHeader);
  SynsetFile file;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 4) {
      throw ParseError("expected 4 columns (id, category, gloss, synonyms)", lineno);
    }
    SynsetEntry entry;
    entry.id = cols[0];
    entry.lexical_category = cols[1];
    entry.gloss = cols[2];
    if (entry.id.empty()) throw ParseError("empty synset id", lineno);
    entry.synonyms = parse_list(cols[3], lineno, "synonym", &file.duplicate_warnings);
    file.entries.push_back(std::move(entry));
  }
  return file;
}

DictFile parse_dictionary(std::istream& in) {
  expect_header(in, kDictHeader);
  DictFile file;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 2 && cols.size() != 3) {
      throw ParseError("expected 2-3 columns (headword, equivalents, [category])", lineno);
    }
    DictEntry entry;
    entry.headword = cols[0];
    if (entry.headword.empty()) throw ParseError("empty headword", lineno);
    entry.equivalents =
        parse_list(cols[1], lineno, "equivalent", &file.duplicate_warnings);
    if (cols.size() == 3) entry.category = cols[2];
    file.entries.push_back(std::move(entry));
  }
  return file;
}

void serialize_synsets(std::ostream& out, const std::vector<SynsetEntry>& entries) {
  out << kSynsetHeader << "\n";
  for (const auto& e : entries) {
    out << e.id << '\t' << e.lexical_category << '\t' << e.gloss << '\t'
        << join(e.synonyms, '|') << "\n";
  }
}

void serialize_dictionary(std::ostream& out, const std::vector<DictEntry>& entries) {
  out << kDictHeader << "\n";
  for (const auto& e : entries) {
    out << e.headword << '\t' << join(e.equivalents, '|');
    if (!e.category.empty()) out << '\t' << e.category;
    out << "\n";
  }
}

namespace {

template <typename T, typename F>
SynonymStats list_stats(const std::vector<T>& entries, F&& size_of) {
  if (entries.empty()) throw Error("empty input");
  SynonymStats stats;
  stats.entries = entries.size();
  stats.min = size_of(entries.front());
  double sum = 0.0;
  for (const auto& e : entries) {
    const std::size_t n = size_of(e);
    stats.min = std::min(stats.min, n);
    stats.max = std::max(stats.max, n);
    sum += static_cast<double>(n);
  }
  stats.mean = sum / static_cast<double>(entries.size());
  return stats;
}

}  // namespace

SynonymStats synonym_stats(const std::vector<SynsetEntry>& entries) {
  return list_stats(entries, [](const SynsetEntry& e) { return e.synonyms.size(); });
}

SynonymStats equivalent_stats(const std::vector<DictEntry>& entries) {
  return list_stats(entries, [](const DictEntry& e) { return e.equivalents.size(); });
}

}  // namespace corpuslab
