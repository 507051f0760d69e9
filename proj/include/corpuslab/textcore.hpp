// corpuslab/textcore.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef CORPUSLAB_TEXTCORE_HPP_
#define CORPUSLAB_TEXTCORE_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace corpuslab {

struct Sentence {
  std::vector<std::string> tokens;
};

// The universal input: an ordered collection of tokenized sentences.
// Tokens are non-empty UTF-8 strings without internal whitespace.
struct Corpus {
  std::string language_id;
  std::vector<Sentence> sentences;
  std::string source_tag;

  std::size_t token_count() const {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.tokens.size();
    return n;
  }
};

// Code point classification over the Devanagari block plus the ASCII and
// general punctuation the corpora contain. Total and pure.
enum class CharClass {
  Consonant,
  IndependentVowel,
  DependentVowelSign,
  Halant,
  Anusvara,
  Candrabindu,
  Visarga,
  Avagraha,
  Nukta,
  Digit,
  Punctuation,
  Space,
  Other,
};

CharClass classify_char(char32_t cp);

// Counting basis shared by the statistics modules.
enum class CountMode { types, tokens };

inline bool is_devanagari(char32_t cp) {
  return (cp >= 0x0900 && cp <= 0x097F) || (cp >= 0xA8E0 && cp <= 0xA8FF);
}

struct CleaningPolicy {
  bool nfc = true;
  bool strip_controls = true;
  bool collapse_spaces = true;
  bool script_filter = true;
  double min_devanagari_fraction = 0.7;
  // Extra code points to detach at token edges during tokenization.
  // Punctuation-class code points are always detached.
  std::vector<char32_t> punct_detach;

  static CleaningPolicy defaults() { return CleaningPolicy{}; }
  // Key-value config: nfc, strip_controls, collapse_spaces, script_filter,
  // min_devanagari_fraction, punct_detach (the extra code points, unseparated).
  static CleaningPolicy from_file(const std::string& path);
};

struct CleaningReport {
  std::size_t lines_in = 0;
  std::size_t lines_out = 0;
  std::size_t chars_removed = 0;
  // "control" and "space" count removed characters; "script" and "empty"
  // count dropped lines.
  std::map<std::string, std::size_t> reasons;
};

struct NormalizeResult {
  std::string text;
  CleaningReport report;
};

// Canonical composition restricted to the Devanagari block: precomposed
// nukta letters decompose (they are Unicode composition exclusions) and
// combining marks are put in canonical order. Other scripts pass through.
std::vector<char32_t> nfc_devanagari(const std::vector<char32_t>& cps);

// Cleans raw text: NFC, control stripping, whitespace collapsing and the
// script-fraction line filter. Total on valid UTF-8 and idempotent.
NormalizeResult normalize(const std::string& text, const CleaningPolicy& policy);

// One sentence per line; tokens split on whitespace; punctuation-class
// characters at token edges detached as separate tokens.
Corpus tokenize(const std::string& text,
                const std::vector<char32_t>& extra_detach = {});

enum class WxDirection { to_wx, from_wx };

struct TransliterationResult {
  std::string text;
  std::size_t unmapped = 0;  // code points passed through untranslated
};

// WX romanization of Devanagari. from_wx(to_wx(s)) == s for canonical
// Devanagari input; unmapped code points pass through and are tallied.
TransliterationResult transliterate(const std::string& text, WxDirection direction);

// Corpus file IO: one sentence per line, tokens space-separated.
Corpus read_corpus(const std::string& path, const std::string& language_id);
Corpus corpus_from_lines(const std::string& text, const std::string& language_id);
void write_corpus(std::ostream& out, const Corpus& corpus);

}  // namespace corpuslab

#endif  // CORPUSLAB_TEXTCORE_HPP_
