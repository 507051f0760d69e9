// corpuslab/akshara.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef CORPUSLAB_AKSHARA_HPP_
#define CORPUSLAB_AKSHARA_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "corpuslab/textcore.hpp"

namespace corpuslab {

enum class SyllablePosition { Initial, Medial, Final, Sole };

struct Akshara {
  std::string text;
  std::size_t index = 0;
  SyllablePosition position_class = SyllablePosition::Sole;
};

// Orthographic syllabification. An akshara is a maximal
//   (Consonant [Nukta] Halant)* Consonant [Nukta] [VowelSign] [Anusvara|Candrabindu] [Visarga]
// or an independent vowel with the same trailing signs; a word-final halant
// cluster stands alone without a vowel; avagraha joins the preceding unit.
// Concatenating the pieces always reproduces the word. Ill-formed marks are
// grouped with the nearest unit and tallied into *warnings when given.
std::vector<Akshara> syllabify(const std::string& word, std::size_t* warnings = nullptr);

struct PositionStats {
  CountMode mode = CountMode::types;
  std::size_t total = 0;
  std::size_t initial = 0;
  std::size_t medial = 0;
  std::size_t final = 0;
  double initial_pct = 0.0;
  double medial_pct = 0.0;
  double final_pct = 0.0;
};

// Positional frequency of syllables. Single-syllable words count under
// Initial; two-syllable words under Initial+Final. mode=types counts
// distinct (syllable, position) pairs, mode=tokens counts occurrences.
PositionStats position_stats(const Corpus& corpus, CountMode mode);

// The corpus re-expressed as a syllable token stream, in corpus order.
std::vector<std::string> syllable_stream(const Corpus& corpus);

}  // namespace corpuslab

#endif  // CORPUSLAB_AKSHARA_HPP_
