// tests/unit/gen.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Shared generators for property tests: random but valid Devanagari words
// built from the akshara grammar.

#ifndef CORPUSLAB_TESTS_GEN_HPP_
#define CORPUSLAB_TESTS_GEN_HPP_

#include <string>
#include <vector>

#include "corpuslab/rng.hpp"
#include "corpuslab/utf8.hpp"

namespace testgen {

// One well-formed akshara: consonant cluster or independent vowel, with
// optional nukta, matra, anusvara/candrabindu, visarga, avagraha.
inline void append_akshara(corpuslab::SplitRng& rng, std::vector<char32_t>& out,
                           bool word_final) {
  static const std::vector<char32_t> consonants = {
      0x0915, 0x0916, 0x0917, 0x091A, 0x091C, 0x091F, 0x0921, 0x0924,
      0x0926, 0x0928, 0x092A, 0x092C, 0x092E, 0x092F, 0x0930, 0x0932,
      0x0935, 0x0936, 0x0937, 0x0938, 0x0939, 0x0933};
  static const std::vector<char32_t> vowels = {0x0905, 0x0906, 0x0907, 0x0908,
                                               0x0909, 0x090A, 0x090F, 0x0910,
                                               0x0913, 0x0914, 0x090B};
  static const std::vector<char32_t> matras = {0x093E, 0x093F, 0x0940, 0x0941,
                                               0x0942, 0x0943, 0x0947, 0x0948,
                                               0x094B, 0x094C};
  // Nukta only on the consonants whose nukta forms exist in the script.
  static const std::vector<char32_t> nukta_bases = {0x0915, 0x0916, 0x0917,
                                                    0x091C, 0x0921, 0x0922,
                                                    0x092B, 0x092F};

  if (rng.below(5) == 0) {
    out.push_back(vowels[rng.below(vowels.size())]);
  } else {
    const std::size_t cluster = 1 + rng.below(10) / 8 + rng.below(10) / 9;
    for (std::size_t c = 0; c + 1 < cluster; ++c) {
      out.push_back(consonants[rng.below(consonants.size())]);
      out.push_back(0x094D);  // halant joins the cluster
    }
    if (rng.below(10) == 0) {
      out.push_back(nukta_bases[rng.below(nukta_bases.size())]);
      out.push_back(0x093C);
    } else {
      out.push_back(consonants[rng.below(consonants.size())]);
    }
    if (word_final && rng.below(12) == 0) {
      out.push_back(0x094D);  // word-final halant cluster
      return;
    }
    if (rng.below(3) != 0) out.push_back(matras[rng.below(matras.size())]);
  }
  const std::uint64_t sign = rng.below(8);
  if (sign == 0) out.push_back(0x0902);  // anusvara
  if (sign == 1) out.push_back(0x0901);  // candrabindu
  if (rng.below(16) == 0) out.push_back(0x0903);  // visarga
  if (rng.below(20) == 0) out.push_back(0x093D);  // avagraha
}

inline std::string random_word(corpuslab::SplitRng& rng, std::size_t max_aksharas = 5) {
  const std::size_t n = 1 + rng.below(max_aksharas);
  std::vector<char32_t> cps;
  for (std::size_t i = 0; i < n; ++i) append_akshara(rng, cps, i + 1 == n);
  return corpuslab::utf8_encode(cps);
}

}  // namespace testgen

#endif  // CORPUSLAB_TESTS_GEN_HPP_
