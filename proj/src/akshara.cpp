// corpuslab/akshara.cpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "corpuslab/akshara.hpp"

#include <map>
#include <set>
#include <utility>

#include "corpuslab/error.hpp"
#include "corpuslab/utf8.hpp"

namespace corpuslab {

namespace {

bool akshara_formable(CharClass c) {
  return c == CharClass::Consonant || c == CharClass::IndependentVowel;
}

}  // namespace

std::vector<Akshara> syllabify(const std::string& word, std::size_t* warnings) {
  std::vector<char32_t> cps = utf8_decode(word);
  std::vector<CharClass> cls(cps.size());
  bool any_formable = false;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    cls[i] = classify_char(cps[i]);
    any_formable = any_formable || akshara_formable(cls[i]);
  }

  std::vector<std::string> units;
  if (!any_formable) {
    // Non-Devanagari material comes back whole as one Sole unit.
    if (!word.empty()) units.push_back(word);
  } else {
    std::size_t i = 0;
    const std::size_t n = cps.size();
    auto warn = [&]() {
      if (warnings) ++*warnings;
    };
    auto attach_or_start = [&](char32_t cp) {
      if (!units.empty()) {
        utf8_append(units.back(), cp);
      } else {
        units.push_back(utf8_of(cp));
      }
    };
    while (i < n) {
      const CharClass c = cls[i];
      if (c == CharClass::Consonant) {
        std::string unit;
        bool halant_final = false;
        while (true) {
          utf8_append(unit, cps[i]);
          ++i;
          if (i < n && cls[i] == CharClass::Nukta) {
            utf8_append(unit, cps[i]);
            ++i;
          }
          if (i < n && cls[i] == CharClass::Halant) {
            utf8_append(unit, cps[i]);
            ++i;
            if (i < n && cls[i] == CharClass::Consonant) continue;  // conjunct
            halant_final = true;  // word-final (or stray) halant cluster
            if (i < n) warn();    // halant not followed by a consonant mid-word
          }
          break;
        }
        if (!halant_final) {
          if (i < n && cls[i] == CharClass::DependentVowelSign) {
            utf8_append(unit, cps[i]);
            ++i;
          }
          if (i < n && (cls[i] == CharClass::Anusvara || cls[i] == CharClass::Candrabindu)) {
            utf8_append(unit, cps[i]);
            ++i;
          }
          if (i < n && cls[i] == CharClass::Visarga) {
            utf8_append(unit, cps[i]);
            ++i;
          }
        }
        units.push_back(std::move(unit));
        continue;
      }
      if (c == CharClass::IndependentVowel) {
        std::string unit = utf8_of(cps[i]);
        ++i;
        if (i < n && (cls[i] == CharClass::Anusvara || cls[i] == CharClass::Candrabindu)) {
          utf8_append(unit, cps[i]);
          ++i;
        }
        if (i < n && cls[i] == CharClass::Visarga) {
          utf8_append(unit, cps[i]);
          ++i;
        }
        units.push_back(std::move(unit));
        continue;
      }
      if (c == CharClass::Avagraha) {
        // Lengthens the preceding vowel, so it joins the preceding unit.
        if (units.empty()) warn();
        attach_or_start(cps[i]);
        ++i;
        continue;
      }
      if (c == CharClass::Nukta || c == CharClass::DependentVowelSign ||
          c == CharClass::Halant || c == CharClass::Anusvara ||
          c == CharClass::Candrabindu || c == CharClass::Visarga) {
        // Stray combining mark: group with the nearest unit.
        warn();
        attach_or_start(cps[i]);
        ++i;
        continue;
      }
      // Digits, punctuation, Latin, etc. inside a Devanagari word: one unit
      // per maximal run.
      warn();
      std::string unit;
      while (i < n && !akshara_formable(cls[i]) && cls[i] != CharClass::Avagraha &&
             cls[i] != CharClass::Nukta && cls[i] != CharClass::DependentVowelSign &&
             cls[i] != CharClass::Halant && cls[i] != CharClass::Anusvara &&
             cls[i] != CharClass::Candrabindu && cls[i] != CharClass::Visarga) {
        utf8_append(unit, cps[i]);
        ++i;
      }
      units.push_back(std::move(unit));
    }
  }

  std::vector<Akshara> out;
  out.reserve(units.size());
  const std::size_t k = units.size();
  for (std::size_t idx = 0; idx < k; ++idx) {
    Akshara a;
    a.text = std::move(units[idx]);
    a.index = idx;
    if (k == 1) {
      a.position_class = SyllablePosition::Sole;
    } else if (idx == 0) {
      a.position_class = SyllablePosition::Initial;
    } else if (idx + 1 == k) {
      a.position_class = SyllablePosition::Final;
    } else {
      a.position_class = SyllablePosition::Medial;
    }
    out.push_back(std::move(a));
  }
  return out;
}

PositionStats position_stats(const Corpus& corpus, CountMode mode) {
  if (corpus.sentences.empty()) throw Error("empty input");
  PositionStats stats;
  stats.mode = mode;
  // Sole counts under Initial for the positional table.
  auto bucket = [](SyllablePosition p) {
    return p == SyllablePosition::Sole ? SyllablePosition::Initial : p;
  };
  std::set<std::pair<std::string, SyllablePosition>> seen;
  auto add = [&](const Akshara& a) {
    const SyllablePosition p = bucket(a.position_class);
    if (mode == CountMode::types && !seen.insert({a.text, p}).second) return;
    switch (p) {
      case SyllablePosition::Initial: ++stats.initial; break;
      case SyllablePosition::Medial: ++stats.medial; break;
      case SyllablePosition::Final: ++stats.final; break;
      case SyllablePosition::Sole: break;  // unreachable
    }
    ++stats.total;
  };
  for (const auto& sent : corpus.sentences) {
    for (const auto& tok : sent.tokens) {
      for (const Akshara& a : syllabify(tok)) add(a);
    }
  }
  if (stats.total > 0) {
    const double t = static_cast<double>(stats.total);
    stats.initial_pct = 100.0 * stats.initial / t;
    stats.medial_pct = 100.0 * stats.medial / t;
    stats.final_pct = 100.0 * stats.final / t;
  }
  return stats;
}

std::vector<std::string> syllable_stream(const Corpus& corpus) {
  std::vector<std::string> stream;
  for (const auto& sent : corpus.sentences) {
    for (const auto& tok : sent.tokens) {
      for (Akshara& a : syllabify(tok)) stream.push_back(std::move(a.text));
    }
  }
  return stream;
}

}  // namespace corpuslab
