// corpuslab/annotio.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef CORPUSLAB_ANNOTIO_HPP_
#define CORPUSLAB_ANNOTIO_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "corpuslab/stats.hpp"

namespace corpuslab {

// One SSF node: a token leaf, or a chunk when token == "((".
// Feature-structure strings are preserved byte-exact.
struct SSFItem {
  std::string address;
  std::string token;
  std::string tag;
  std::string fs;
  std::vector<SSFItem> children;

  bool is_chunk() const { return token == "(("; }
};

struct SSFSentence {
  std::string id;
  std::vector<SSFItem> items;
};

struct SSFDocument {
  std::vector<SSFSentence> sentences;
  // Chunks nested deeper than one level parse but are flagged here.
  std::size_t deep_nesting = 0;
};

SSFDocument parse_ssf(const std::string& text);
std::string serialize_ssf(const SSFDocument& doc);

struct Tagset {
  std::string name;
  std::vector<std::string> tags;

  bool contains(const std::string& tag) const;
  static const Tagset& bis_pos();    // the 25 POS tags
  static const Tagset& bis_chunk();  // the 11 chunk tags
};

struct TagViolation {
  std::size_t sentence = 0;  // 0-based index in the document
  std::string address;
  std::string tag;
};

// POS tagsets validate token leaves; chunk tagsets validate chunk nodes.
std::vector<TagViolation> validate_tags(const SSFDocument& doc, const Tagset& tagset);

struct AgreementInput {
  std::vector<std::string> first;
  std::vector<std::string> second;
};

// Cohen's kappa: (p_o - p_e) / (1 - p_e); exactly 1 when p_o == 1.
double cohen_kappa(const AgreementInput& input);

struct AnnotatedStats {
  std::size_t sentences = 0;
  std::size_t tokens = 0;
  double pos_entropy = 0.0;
  double word_pos_entropy = 0.0;
  double chunk_entropy = 0.0;  // 0 when the document has no chunks
  DiversityReport pos;
  DiversityReport word_pos;
  DiversityReport chunk;
  bool has_chunks = false;
  FrequencyTable pos_table;
  FrequencyTable chunk_table;
};

AnnotatedStats annotated_stats(const std::vector<SSFDocument>& documents,
                               std::size_t window = 500);

// Flat unit streams of a document, for agreement and statistics.
std::vector<std::string> pos_stream(const SSFDocument& doc);
std::vector<std::string> token_stream(const SSFDocument& doc);
std::vector<std::string> chunk_tag_stream(const SSFDocument& doc);
std::vector<std::string> bio_stream(const SSFDocument& doc);

}  // namespace corpuslab

#endif  // CORPUSLAB_ANNOTIO_HPP_
