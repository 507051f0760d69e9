// corpuslab/lexres.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef CORPUSLAB_LEXRES_HPP_
#define CORPUSLAB_LEXRES_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace corpuslab {

struct SynsetEntry {
  std::string id;
  std::string lexical_category;
  std::string gloss;
  std::vector<std::string> synonyms;  // non-empty, duplicate-free
};

struct DictEntry {
  std::string headword;
  std::vector<std::string> equivalents;  // non-empty
  std::string category;
};

enum class LexKind { dictionary, synset };

// Versioned TSV: header "# corpuslab-synset v1" then id, category, gloss,
// pipe-separated synonyms; dictionaries use "# corpuslab-dictionary v1"
// then headword, pipe-separated equivalents, optional category.
struct SynsetFile {
  std::vector<SynsetEntry> entries;
  std::size_t duplicate_warnings = 0;  // collapsed in-entry duplicates
};

struct DictFile {
  std::vector<DictEntry> entries;
  std::size_t duplicate_warnings = 0;
};

SynsetFile parse_synsets(std::istream& in);
DictFile parse_dictionary(std::istream& in);
void serialize_synsets(std::ostream& out, const std::vector<SynsetEntry>& entries);
void serialize_dictionary(std::ostream& out, const std::vector<DictEntry>& entries);

struct SynonymStats {
  std::size_t min = 0;
  std::size_t max = 0;
  double mean = 0.0;
  std::size_t entries = 0;
};

SynonymStats synonym_stats(const std::vector<SynsetEntry>& entries);
SynonymStats equivalent_stats(const std::vector<DictEntry>& entries);

}  // namespace corpuslab

#endif  // CORPUSLAB_LEXRES_HPP_
