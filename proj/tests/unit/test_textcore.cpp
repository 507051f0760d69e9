// tests/unit/test_textcore.cpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include <sstream>
#include <string>

#include "corpuslab/error.hpp"
#include "corpuslab/rng.hpp"
#include "corpuslab/textcore.hpp"
#include "corpuslab/utf8.hpp"
#include "gen.hpp"

using namespace corpuslab;

namespace {

CleaningPolicy no_filter() {
  CleaningPolicy p;
  p.script_filter = false;
  return p;
}

}  // namespace

TEST_CASE("utf8 round trip and errors") {
  const std::string s = "क़ख abc ।";
  CHECK(utf8_encode(utf8_decode(s)) == s);
  CHECK(utf8_length("कमल") == 3);
  CHECK_THROWS_AS(utf8_decode("\xC0\xAF"), Error);      // overlong
  CHECK_THROWS_AS(utf8_decode("\xE0\xA0"), Error);      // truncated
  CHECK_THROWS_AS(utf8_decode("\xED\xA0\x80"), Error);  // surrogate
}

TEST_CASE("classify_char: Devanagari block layout") {
  CHECK(classify_char(0x0915) == CharClass::Consonant);          // क
  CHECK(classify_char(0x093E) == CharClass::DependentVowelSign); // ा
  CHECK(classify_char(0x093D) == CharClass::Avagraha);           // ऽ
  CHECK(classify_char(0x0902) == CharClass::Anusvara);
  CHECK(classify_char(0x0901) == CharClass::Candrabindu);
  CHECK(classify_char(0x0903) == CharClass::Visarga);
  CHECK(classify_char(0x094D) == CharClass::Halant);
  CHECK(classify_char(0x093C) == CharClass::Nukta);
  CHECK(classify_char(0x0905) == CharClass::IndependentVowel);   // अ
  CHECK(classify_char(0x0964) == CharClass::Punctuation);        // danda
  CHECK(classify_char(0x0966) == CharClass::Digit);              // ०
  CHECK(classify_char(U'7') == CharClass::Digit);
  CHECK(classify_char(U' ') == CharClass::Space);
  CHECK(classify_char(U'a') == CharClass::Other);
  CHECK(classify_char(U'!') == CharClass::Punctuation);
  CHECK(classify_char(0x0958) == CharClass::Consonant);          // क़ precomposed
}

TEST_CASE("nfc: composition exclusions decompose, marks reorder") {
  // Precomposed qa decomposes to ka + nukta.
  const std::vector<char32_t> qa = {0x0958};
  CHECK(nfc_devanagari(qa) == std::vector<char32_t>{0x0915, 0x093C});
  // Halant (ccc 9) placed after nukta (ccc 7).
  const std::vector<char32_t> wrong_order = {0x0915, 0x094D, 0x093C};
  CHECK(nfc_devanagari(wrong_order) == std::vector<char32_t>{0x0915, 0x093C, 0x094D});
}

TEST_CASE("normalize: NFC is stable on already-composed text") {
  const auto res = normalize("कु\n", no_filter());
  CHECK(res.text == "कु\n");
  CHECK(res.report.chars_removed == 0);
  CHECK(res.report.lines_in == 1);
  CHECK(res.report.lines_out == 1);
}

TEST_CASE("normalize: script filter drops a Latin line") {
  CleaningPolicy policy;
  policy.script_filter = true;
  policy.min_devanagari_fraction = 0.5;
  const auto res = normalize("abc xyz 123\n", policy);
  CHECK(res.text.empty());
  CHECK(res.report.lines_out == 0);
  CHECK(res.report.reasons.at("script") == 1);
}

TEST_CASE("normalize: controls stripped and spaces collapsed, both counted") {
  const std::string in = std::string("क") + '\0' + "ख  ग\n";
  const auto res = normalize(in, no_filter());
  CHECK(res.text == "कख ग\n");
  CHECK(res.report.chars_removed == 2);
  CHECK(res.report.reasons.at("control") == 1);
  CHECK(res.report.reasons.at("space") == 1);
}

TEST_CASE("normalize: idempotent on fuzzed input") {
  SplitRng rng(7);
  for (int t = 0; t < 200; ++t) {
    std::string text;
    for (int w = 0; w < 6; ++w) {
      text += testgen::random_word(rng);
      text += (rng.below(4) == 0) ? "  " : " ";
      if (rng.below(7) == 0) text += "x";
      if (rng.below(9) == 0) text += '\t';
    }
    text += "\n";
    CleaningPolicy policy;
    policy.script_filter = rng.below(2) == 0;
    const auto once = normalize(text, policy);
    const auto twice = normalize(once.text, policy);
    CHECK(twice.text == once.text);
    CHECK(twice.report.chars_removed == 0);
  }
}

TEST_CASE("tokenize: empty input, line split, danda detachment") {
  CHECK(tokenize("").sentences.empty());

  const Corpus c1 = tokenize("मोहन किताब पढ़लस।\n");
  REQUIRE(c1.sentences.size() == 1);
  const auto& toks = c1.sentences[0].tokens;
  REQUIRE(toks.size() == 4);
  CHECK(toks[0] == "मोहन");
  CHECK(toks[1] == "किताब");
  CHECK(toks[2] == "पढ़लस");
  CHECK(toks[3] == "।");

  const Corpus c2 = tokenize("क ख\nग\n");
  REQUIRE(c2.sentences.size() == 2);
  CHECK(c2.sentences[0].tokens.size() == 2);
  CHECK(c2.sentences[1].tokens.size() == 1);
}

TEST_CASE("tokenize: internal punctuation stays, edge punctuation splits") {
  const Corpus c = tokenize("3224.34 (क) कहा।”\n");
  REQUIRE(c.sentences.size() == 1);
  const auto& toks = c.sentences[0].tokens;
  const std::vector<std::string> expected = {"3224.34", "(", "क", ")",
                                             "कहा", "।", "”"};
  CHECK(toks == expected);
}

TEST_CASE("tokenize: join-and-retokenize is the identity") {
  SplitRng rng(11);
  for (int t = 0; t < 200; ++t) {
    std::string line;
    const std::size_t n = 1 + rng.below(8);
    for (std::size_t w = 0; w < n; ++w) {
      if (w) line += ' ';
      line += testgen::random_word(rng);
    }
    line += "\n";
    const Corpus first = tokenize(line);
    std::string joined;
    for (const auto& sent : first.sentences) {
      for (std::size_t i = 0; i < sent.tokens.size(); ++i) {
        if (i) joined += ' ';
        CHECK(!sent.tokens[i].empty());
        joined += sent.tokens[i];
      }
      joined += '\n';
    }
    const Corpus second = tokenize(joined);
    REQUIRE(second.sentences.size() == first.sentences.size());
    for (std::size_t s = 0; s < first.sentences.size(); ++s) {
      CHECK(second.sentences[s].tokens == first.sentences[s].tokens);
    }
  }
}

TEST_CASE("wx: table lookups from the worked examples") {
  CHECK(transliterate("के", WxDirection::to_wx).text == "ke");
  CHECK(transliterate("meM", WxDirection::from_wx).text == "में");
  CHECK(transliterate("कमल", WxDirection::to_wx).text == "kamala");
  CHECK(transliterate("हिन्दी", WxDirection::to_wx).text == "hinxI");
  CHECK(transliterate("मंच", WxDirection::to_wx).text == "maMca");
  CHECK(transliterate("ladZake", WxDirection::from_wx).text == "लड़के");
  CHECK(transliterate("जगत्", WxDirection::to_wx).text == "jagaw");
  CHECK(transliterate("।", WxDirection::to_wx).text == ".");
}

TEST_CASE("wx: rAma round trip") {
  const auto dev = transliterate("rAma", WxDirection::from_wx);
  CHECK(dev.text == "राम");
  CHECK(transliterate(dev.text, WxDirection::to_wx).text == "rAma");
}

TEST_CASE("wx: unmapped code points pass through and are tallied") {
  const auto res = transliterate("कx", WxDirection::to_wx);
  CHECK(res.text == "kax");
  CHECK(res.unmapped == 1);
}

TEST_CASE("wx: round trip on fuzzed canonical Devanagari") {
  SplitRng rng(23);
  for (int t = 0; t < 2000; ++t) {
    const std::string word = testgen::random_word(rng);
    const auto wx = transliterate(word, WxDirection::to_wx);
    CHECK(wx.unmapped == 0);
    const auto back = transliterate(wx.text, WxDirection::from_wx);
    if (back.text != word) {
      CAPTURE(word);
      CAPTURE(wx.text);
      CHECK(back.text == word);
      break;
    }
  }
}

TEST_CASE("corpus io round trip") {
  const std::string text = "क ख ग\nघ ङ\n";
  const Corpus corpus = corpus_from_lines(text, "test");
  std::ostringstream out;
  write_corpus(out, corpus);
  CHECK(out.str() == text);
  CHECK(corpus.token_count() == 5);
}
