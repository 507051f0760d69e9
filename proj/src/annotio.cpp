// corpuslab/annotio.cpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "corpuslab/annotio.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "corpuslab/error.hpp"

namespace corpuslab {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

// Dotted addresses compare component-wise numerically: 1 < 1.1 < 1.2 < 2.
std::vector<unsigned long> address_parts(const std::string& address, std::size_t lineno) {
  std::vector<unsigned long> parts;
  std::size_t start = 0;
  while (start <= address.size()) {
    const auto dot = address.find('.', start);
    const std::string piece = address.substr(
        start, dot == std::string::npos ? std::string::npos : dot - start);
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("malformed address '" + address + "'", lineno);
    }
    parts.push_back(std::stoul(piece));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return parts;
}

bool address_less(const std::vector<unsigned long>& a,
                  const std::vector<unsigned long>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

SSFDocument parse_ssf(const std::string& text) {
  SSFDocument doc;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;

  SSFSentence sentence;
  bool in_sentence = false;
  std::vector<SSFItem*> stack;  // open chunks
  std::vector<unsigned long> last_address;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("<Sentence id=\"", 0) == 0) {
      if (in_sentence) throw ParseError("nested <Sentence>", lineno);
      const auto close = line.find('"', 14);
      if (close == std::string::npos || line.substr(close) != "\">") {
        throw ParseError("malformed sentence header", lineno);
      }
      sentence = SSFSentence{};
      sentence.id = line.substr(14, close - 14);
      in_sentence = true;
      stack.clear();
      last_address.clear();
      continue;
    }
    if (line == "</Sentence>") {
      if (!in_sentence) throw ParseError("</Sentence> without opener", lineno);
      if (!stack.empty()) throw ParseError("unclosed chunk at sentence end", lineno);
      doc.sentences.push_back(std::move(sentence));
      in_sentence = false;
      continue;
    }
    if (!in_sentence) throw ParseError("content outside <Sentence>", lineno);

    const std::vector<std::string> cols = split_tabs(line);
    // Chunk close: empty address column, token "))".
    if (cols.size() >= 2 && cols[1] == "))") {
      if (stack.empty()) throw ParseError("'))' without open chunk", lineno);
      stack.pop_back();
      continue;
    }
    if (cols.size() < 3) throw ParseError("expected address, token and tag columns", lineno);
    const std::string& address = cols[0];
    const std::string& token = cols[1];
    const std::string& tag = cols[2];
    if (token.empty()) throw ParseError("empty token", lineno);
    if (tag.empty()) throw ParseError("empty tag", lineno);

    const std::vector<unsigned long> parts = address_parts(address, lineno);
    if (!last_address.empty() && !address_less(last_address, parts)) {
      throw ParseError("address '" + address + "' out of order", lineno);
    }
    last_address = parts;

    SSFItem item;
    item.address = address;
    item.token = token;
    item.tag = tag;
    if (cols.size() >= 4) item.fs = cols[3];

    std::vector<SSFItem>& target =
        stack.empty() ? sentence.items : stack.back()->children;
    target.push_back(std::move(item));
    if (token == "((") {
      stack.push_back(&target.back());
      if (stack.size() > 1) ++doc.deep_nesting;
    }
  }
  if (in_sentence) throw ParseError("missing </Sentence> at end of input", lineno);
  return doc;
}

namespace {

void serialize_item(std::ostringstream& out, const SSFItem& item) {
  out << item.address << '\t' << item.token << '\t' << item.tag;
  if (!item.fs.empty()) out << '\t' << item.fs;
  out << '\n';
  if (item.is_chunk()) {
    for (const SSFItem& child : item.children) serialize_item(out, child);
    out << "\t))\n";
  }
}

}  // namespace

std::string serialize_ssf(const SSFDocument& doc) {
  std::ostringstream out;
  for (const SSFSentence& sentence : doc.sentences) {
    out << "<Sentence id=\"" << sentence.id << "\">\n";
    for (const SSFItem& item : sentence.items) serialize_item(out, item);
    out << "</Sentence>\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Tagsets
// ---------------------------------------------------------------------------

bool Tagset::contains(const std::string& tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

const Tagset& Tagset::bis_pos() {
  static const Tagset tagset{
      "BIS_POS",
      {"NN", "NNP", "PRP", "VM", "VAUX", "DEM", "PSP", "QC", "JJ", "RB",
       "NST", "WQ", "RP", "QO", "SYM", "CC", "CL", "QF", "INJ", "INTF",
       "NEG", "RDP", "ECH", "UNK", "UT"}};
  return tagset;
}

const Tagset& Tagset::bis_chunk() {
  static const Tagset tagset{
      "BIS_CHUNK",
      {"NP", "VGF", "VGNF", "VGINF", "VGNN", "JJP", "RBP", "NEGP", "CCP",
       "FRAGP", "BLK"}};
  return tagset;
}

std::vector<TagViolation> validate_tags(const SSFDocument& doc, const Tagset& tagset) {
  std::vector<TagViolation> violations;
  const bool chunk_mode = tagset.name == "BIS_CHUNK";
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    auto visit = [&](auto&& self, const SSFItem& item) -> void {
      const bool check = item.is_chunk() ? chunk_mode : !chunk_mode;
      if (check && !tagset.contains(item.tag)) {
        violations.push_back({s, item.address, item.tag});
      }
      for (const SSFItem& child : item.children) self(self, child);
    };
    for (const SSFItem& item : doc.sentences[s].items) visit(visit, item);
  }
  return violations;
}

// ---------------------------------------------------------------------------
// Cohen's kappa
// ---------------------------------------------------------------------------

double cohen_kappa(const AgreementInput& input) {
  if (input.first.size() != input.second.size()) throw Error("sequence length mismatch");
  if (input.first.empty()) throw Error("empty input");
  const double n = static_cast<double>(input.first.size());
  std::map<std::string, double> m1, m2;
  double agree = 0.0;
  for (std::size_t i = 0; i < input.first.size(); ++i) {
    m1[input.first[i]] += 1.0;
    m2[input.second[i]] += 1.0;
    if (input.first[i] == input.second[i]) agree += 1.0;
  }
  const double p_o = agree / n;
  if (p_o >= 1.0) return 1.0;
  double p_e = 0.0;
  for (const auto& [label, c1] : m1) {
    const auto it = m2.find(label);
    if (it != m2.end()) p_e += (c1 / n) * (it->second / n);
  }
  return (p_o - p_e) / (1.0 - p_e);
}

// ---------------------------------------------------------------------------
// Streams and statistics
// ---------------------------------------------------------------------------

namespace {

void visit_leaves(const SSFItem& item, const auto& fn) {
  if (item.is_chunk()) {
    for (const SSFItem& child : item.children) visit_leaves(child, fn);
  } else {
    fn(item);
  }
}

}  // namespace

std::vector<std::string> pos_stream(const SSFDocument& doc) {
  std::vector<std::string> out;
  for (const auto& sentence : doc.sentences) {
    for (const auto& item : sentence.items) {
      visit_leaves(item, [&](const SSFItem& leaf) { out.push_back(leaf.tag); });
    }
  }
  return out;
}

std::vector<std::string> token_stream(const SSFDocument& doc) {
  std::vector<std::string> out;
  for (const auto& sentence : doc.sentences) {
    for (const auto& item : sentence.items) {
      visit_leaves(item, [&](const SSFItem& leaf) { out.push_back(leaf.token); });
    }
  }
  return out;
}

std::vector<std::string> chunk_tag_stream(const SSFDocument& doc) {
  std::vector<std::string> out;
  for (const auto& sentence : doc.sentences) {
    auto visit = [&](auto&& self, const SSFItem& item) -> void {
      if (item.is_chunk()) {
        out.push_back(item.tag);
        for (const SSFItem& child : item.children) self(self, child);
      }
    };
    for (const auto& item : sentence.items) visit(visit, item);
  }
  return out;
}

std::vector<std::string> bio_stream(const SSFDocument& doc) {
  std::vector<std::string> out;
  for (const auto& sentence : doc.sentences) {
    for (const auto& item : sentence.items) {
      if (item.is_chunk()) {
        bool first = true;
        visit_leaves(item, [&](const SSFItem&) {
          out.push_back((first ? "B-" : "I-") + item.tag);
          first = false;
        });
      } else {
        out.push_back("O");
      }
    }
  }
  return out;
}

AnnotatedStats annotated_stats(const std::vector<SSFDocument>& documents,
                               std::size_t window) {
  if (documents.empty()) throw Error("empty input");
  std::vector<std::string> pos, words, word_pos, chunks;
  std::size_t sentences = 0;
  for (const auto& doc : documents) {
    sentences += doc.sentences.size();
    for (const auto& s : pos_stream(doc)) pos.push_back(s);
    for (const auto& s : token_stream(doc)) words.push_back(s);
    for (const auto& s : chunk_tag_stream(doc)) chunks.push_back(s);
  }
  if (pos.empty()) throw Error("empty input");
  word_pos.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    word_pos.push_back(words[i] + "/" + pos[i]);
  }

  AnnotatedStats stats;
  stats.sentences = sentences;
  stats.tokens = words.size();
  stats.pos_entropy = entropy(pos);
  stats.word_pos_entropy = entropy(word_pos);
  stats.pos = diversity(pos, window);
  stats.word_pos = diversity(word_pos, window);
  stats.pos_table = freq_table(pos);
  if (!chunks.empty()) {
    stats.has_chunks = true;
    stats.chunk_entropy = entropy(chunks);
    stats.chunk = diversity(chunks, window);
    stats.chunk_table = freq_table(chunks);
  }
  return stats;
}

}  // namespace corpuslab
