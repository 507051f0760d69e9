// corpuslab/chunks.cpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "corpuslab/chunks.hpp"

#include <string>

#include "corpuslab/error.hpp"

namespace corpuslab {

std::vector<TagSentence> ssf_to_bio(const SSFDocument& doc) {
  std::vector<TagSentence> out;
  out.reserve(doc.sentences.size());
  for (const auto& sentence : doc.sentences) {
    TagSentence ts;
    auto add_leaf = [&](const SSFItem& leaf, const std::string& bio) {
      ts.tokens.push_back(leaf.token);
      ts.pos.push_back(leaf.tag);
      ts.gold.push_back(bio);
    };
    for (const auto& item : sentence.items) {
      if (item.is_chunk()) {
        bool first = true;
        auto visit = [&](auto&& self, const SSFItem& node) -> void {
          for (const auto& child : node.children) {
            if (child.is_chunk()) {
              self(self, child);
            } else {
              add_leaf(child, (first ? "B-" : "I-") + item.tag);
              first = false;
            }
          }
        };
        visit(visit, item);
      } else {
        add_leaf(item, "O");
      }
    }
    out.push_back(std::move(ts));
  }
  return out;
}

SSFDocument bio_to_ssf(const std::vector<TagSentence>& sentences, bool strict,
                       std::size_t* repaired) {
  SSFDocument doc;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const TagSentence& ts = sentences[s];
    SSFSentence sentence;
    sentence.id = std::to_string(s + 1);
    std::size_t top = 0;      // top-level address counter
    SSFItem* open = nullptr;  // currently open chunk
    std::string open_type;

    for (std::size_t i = 0; i < ts.tokens.size(); ++i) {
      std::string tag = i < ts.gold.size() ? ts.gold[i] : "O";
      const std::string pos = i < ts.pos.size() ? ts.pos[i] : "UNK";
      bool is_b = tag.rfind("B-", 0) == 0;
      const bool is_i = tag.rfind("I-", 0) == 0;
      const std::string chunk_type = (is_b || is_i) ? tag.substr(2) : "";
      if (is_i && (!open || open_type != chunk_type)) {
        if (strict) {
          throw Error("orphan I-" + chunk_type + " at sentence " +
                      std::to_string(s + 1) + ", token " + std::to_string(i + 1));
        }
        if (repaired) ++(*repaired);
        is_b = true;  // lenient repair: treat as B-X
      }
      if (is_b || (!is_i && open)) open = nullptr;  // close any running chunk

      if (is_b || is_i) {
        if (!open) {
          SSFItem chunk;
          chunk.address = std::to_string(++top);
          chunk.token = "((";
          chunk.tag = chunk_type;
          sentence.items.push_back(std::move(chunk));
          open = &sentence.items.back();
          open_type = chunk_type;
        }
        SSFItem leaf;
        leaf.address = open->address + "." + std::to_string(open->children.size() + 1);
        leaf.token = ts.tokens[i];
        leaf.tag = pos;
        open->children.push_back(std::move(leaf));
      } else {
        SSFItem leaf;
        leaf.address = std::to_string(++top);
        leaf.token = ts.tokens[i];
        leaf.tag = pos;
        sentence.items.push_back(std::move(leaf));
      }
    }
    doc.sentences.push_back(std::move(sentence));
  }
  return doc;
}

bool bio_well_formed(const std::vector<std::string>& tags) {
  std::string prev = "O";
  for (const auto& tag : tags) {
    if (tag.rfind("I-", 0) == 0) {
      const std::string type = tag.substr(2);
      const bool prev_same_chunk =
          (prev.rfind("B-", 0) == 0 || prev.rfind("I-", 0) == 0) &&
          prev.substr(2) == type;
      if (!prev_same_chunk) return false;
    }
    prev = tag;
  }
  return true;
}

std::vector<std::string> bio_tagset(const Tagset& chunk_tagset) {
  std::vector<std::string> tags = {"O"};
  for (const auto& chunk : chunk_tagset.tags) {
    tags.push_back("B-" + chunk);
    tags.push_back("I-" + chunk);
  }
  return tags;
}

}  // namespace corpuslab
