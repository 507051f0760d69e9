// corpuslab/textcore.cpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "corpuslab/textcore.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "corpuslab/error.hpp"
#include "corpuslab/utf8.hpp"

namespace corpuslab {

CharClass classify_char(char32_t cp) {
  // Whitespace first; NEL and the Unicode space separators included.
  if (cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == 0x0B ||
      cp == 0x0C || cp == 0x85 || cp == 0xA0 ||
      (cp >= 0x2000 && cp <= 0x200A) || cp == 0x202F || cp == 0x205F ||
      cp == 0x3000) {
    return CharClass::Space;
  }
  if ((cp >= U'0' && cp <= U'9') || (cp >= 0x0966 && cp <= 0x096F)) {
    return CharClass::Digit;
  }
  if (cp >= 0x0900 && cp <= 0x097F) {
    if (cp <= 0x0901) return CharClass::Candrabindu;
    if (cp == 0x0902) return CharClass::Anusvara;
    if (cp == 0x0903) return CharClass::Visarga;
    if (cp <= 0x0914) return CharClass::IndependentVowel;
    if (cp <= 0x0939) return CharClass::Consonant;
    if (cp <= 0x093B) return CharClass::DependentVowelSign;
    if (cp == 0x093C) return CharClass::Nukta;
    if (cp == 0x093D) return CharClass::Avagraha;
    if (cp <= 0x094C) return CharClass::DependentVowelSign;
    if (cp == 0x094D) return CharClass::Halant;
    if (cp <= 0x094F) return CharClass::DependentVowelSign;
    if (cp <= 0x0954) return CharClass::Other;  // OM, vedic accents
    if (cp <= 0x0957) return CharClass::DependentVowelSign;
    if (cp <= 0x095F) return CharClass::Consonant;  // precomposed nukta forms
    if (cp <= 0x0961) return CharClass::IndependentVowel;
    if (cp <= 0x0963) return CharClass::DependentVowelSign;
    if (cp <= 0x0965) return CharClass::Punctuation;  // danda, double danda
    if (cp == 0x0970) return CharClass::Punctuation;  // abbreviation sign
    if (cp == 0x0971) return CharClass::Other;
    if (cp <= 0x0977) return CharClass::IndependentVowel;
    return CharClass::Consonant;  // 0x0978..0x097F
  }
  // ASCII punctuation blocks.
  if ((cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
      (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E)) {
    return CharClass::Punctuation;
  }
  // General punctuation, minus ZWJ/ZWNJ and the space separators above.
  if (cp >= 0x2010 && cp <= 0x2027) return CharClass::Punctuation;
  if (cp >= 0x2030 && cp <= 0x205E) return CharClass::Punctuation;
  if (cp == 0x00AB || cp == 0x00BB || cp == 0x00B7) return CharClass::Punctuation;
  return CharClass::Other;
}

// ---------------------------------------------------------------------------
// NFC over the Devanagari block.
// ---------------------------------------------------------------------------

namespace {

// Precomposed letter -> (base, nukta). All of these are Unicode composition
// exclusions, so NFC keeps them decomposed.
const std::unordered_map<char32_t, char32_t> kNuktaDecompose = {
    {0x0929, 0x0928}, {0x0931, 0x0930}, {0x0934, 0x0933}, {0x0958, 0x0915},
    {0x0959, 0x0916}, {0x095A, 0x0917}, {0x095B, 0x091C}, {0x095C, 0x0921},
    {0x095D, 0x0922}, {0x095E, 0x092B}, {0x095F, 0x092F},
};

int combining_class(char32_t cp) {
  switch (cp) {
    case 0x093C: return 7;    // nukta
    case 0x094D: return 9;    // virama
    case 0x0951: return 230;  // udatta
    case 0x0952: return 220;  // anudatta
    case 0x0953: return 230;
    case 0x0954: return 230;
    default: return 0;
  }
}

}  // namespace

std::vector<char32_t> nfc_devanagari(const std::vector<char32_t>& cps) {
  std::vector<char32_t> out;
  out.reserve(cps.size() + 4);
  for (char32_t cp : cps) {
    auto it = kNuktaDecompose.find(cp);
    if (it != kNuktaDecompose.end()) {
      out.push_back(it->second);
      out.push_back(0x093C);
    } else {
      out.push_back(cp);
    }
  }
  // Canonical ordering: stable-sort maximal runs of nonzero-ccc marks.
  std::size_t i = 0;
  while (i < out.size()) {
    if (combining_class(out[i]) == 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < out.size() && combining_class(out[j]) != 0) ++j;
    std::stable_sort(out.begin() + i, out.begin() + j,
                     [](char32_t a, char32_t b) {
                       return combining_class(a) < combining_class(b);
                     });
    i = j;
  }
  // Every Devanagari canonical composition is excluded, so there is no
  // recomposition step.
  return out;
}

// ---------------------------------------------------------------------------
// normalize
// ---------------------------------------------------------------------------

NormalizeResult normalize(const std::string& text, const CleaningPolicy& policy) {
  NormalizeResult res;
  std::vector<char32_t> cps = utf8_decode(text);

  std::vector<std::vector<char32_t>> lines;
  lines.emplace_back();
  for (char32_t cp : cps) {
    if (cp == U'\n') {
      lines.emplace_back();
    } else {
      lines.back().push_back(cp);
    }
  }
  // A trailing newline does not open a new input line.
  const bool trailing_newline = !cps.empty() && cps.back() == U'\n';
  if (trailing_newline) lines.pop_back();
  res.report.lines_in = lines.size();

  std::vector<char32_t> out;
  for (auto& line : lines) {
    if (policy.nfc) line = nfc_devanagari(line);

    std::vector<char32_t> kept;
    kept.reserve(line.size());
    bool prev_space = true;  // also trims leading spaces
    for (char32_t cp : line) {
      if (policy.strip_controls && cp != U'\t' &&
          (cp < 0x20 || cp == 0x7F || (cp >= 0x80 && cp <= 0x9F))) {
        ++res.report.chars_removed;
        ++res.report.reasons["control"];
        continue;
      }
      const bool is_space = classify_char(cp) == CharClass::Space;
      if (policy.collapse_spaces && is_space) {
        if (prev_space) {
          ++res.report.chars_removed;
          ++res.report.reasons["space"];
        } else {
          kept.push_back(U' ');
          prev_space = true;
        }
        continue;
      }
      kept.push_back(cp);
      prev_space = is_space;
    }
    if (policy.collapse_spaces && !kept.empty() && kept.back() == U' ') {
      kept.pop_back();
      ++res.report.chars_removed;
      ++res.report.reasons["space"];
    }

    if (kept.empty()) {
      ++res.report.reasons["empty"];
      continue;
    }
    if (policy.script_filter) {
      std::size_t dev = 0, nonspace = 0;
      for (char32_t cp : kept) {
        if (classify_char(cp) == CharClass::Space) continue;
        ++nonspace;
        if (is_devanagari(cp)) ++dev;
      }
      if (nonspace > 0 &&
          static_cast<double>(dev) / static_cast<double>(nonspace) <
              policy.min_devanagari_fraction) {
        ++res.report.reasons["script"];
        continue;
      }
    }
    out.insert(out.end(), kept.begin(), kept.end());
    out.push_back(U'\n');
    ++res.report.lines_out;
  }
  res.text = utf8_encode(out);
  return res;
}

// ---------------------------------------------------------------------------
// tokenize
// ---------------------------------------------------------------------------

namespace {

bool detachable(char32_t cp, const std::vector<char32_t>& extra) {
  if (classify_char(cp) == CharClass::Punctuation) return true;
  return std::find(extra.begin(), extra.end(), cp) != extra.end();
}

}  // namespace

Corpus tokenize(const std::string& text, const std::vector<char32_t>& extra_detach) {
  Corpus corpus;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    Sentence sent;
    std::istringstream ls(line);
    std::string raw;
    while (ls >> raw) {
      std::vector<char32_t> cps = utf8_decode(raw);
      // Peel detachable punctuation off both edges; emit in surface order.
      std::size_t lo = 0, hi = cps.size();
      std::vector<char32_t> lead, trail;
      while (lo < hi && detachable(cps[lo], extra_detach)) lead.push_back(cps[lo++]);
      while (hi > lo && detachable(cps[hi - 1], extra_detach))
        trail.push_back(cps[hi - 1]), --hi;
      for (char32_t cp : lead) sent.tokens.push_back(utf8_of(cp));
      if (hi > lo) {
        sent.tokens.push_back(
            utf8_encode(std::vector<char32_t>(cps.begin() + lo, cps.begin() + hi)));
      }
      for (auto it = trail.rbegin(); it != trail.rend(); ++it)
        sent.tokens.push_back(utf8_of(*it));
    }
    if (!sent.tokens.empty()) corpus.sentences.push_back(std::move(sent));
  }
  return corpus;
}

// ---------------------------------------------------------------------------
// WX transliteration
// ---------------------------------------------------------------------------

namespace {

struct WxTables {
  std::unordered_map<char32_t, char> consonant;      // base consonants
  std::unordered_map<char32_t, char> vowel;          // independent vowels
  std::unordered_map<char32_t, char> matra;          // dependent vowel signs
  std::unordered_map<char, char32_t> wx_consonant;   // reverse
  std::unordered_map<char, char32_t> wx_vowel;
  std::unordered_map<char, char32_t> wx_matra;

  WxTables() {
    auto c = [&](char32_t cp, char w) {
      consonant[cp] = w;
      wx_consonant[w] = cp;
    };
    c(0x0915, 'k'); c(0x0916, 'K'); c(0x0917, 'g'); c(0x0918, 'G'); c(0x0919, 'f');
    c(0x091A, 'c'); c(0x091B, 'C'); c(0x091C, 'j'); c(0x091D, 'J'); c(0x091E, 'F');
    c(0x091F, 't'); c(0x0920, 'T'); c(0x0921, 'd'); c(0x0922, 'D'); c(0x0923, 'N');
    c(0x0924, 'w'); c(0x0925, 'W'); c(0x0926, 'x'); c(0x0927, 'X'); c(0x0928, 'n');
    c(0x092A, 'p'); c(0x092B, 'P'); c(0x092C, 'b'); c(0x092D, 'B'); c(0x092E, 'm');
    c(0x092F, 'y'); c(0x0930, 'r'); c(0x0932, 'l'); c(0x0935, 'v');
    c(0x0936, 'S'); c(0x0937, 'R'); c(0x0938, 's'); c(0x0939, 'h');
    // 0x0933 (retroflex la) is the digraph "lY", handled in code.

    auto v = [&](char32_t cp, char w) {
      vowel[cp] = w;
      wx_vowel[w] = cp;
    };
    v(0x0905, 'a'); v(0x0906, 'A'); v(0x0907, 'i'); v(0x0908, 'I');
    v(0x0909, 'u'); v(0x090A, 'U'); v(0x090B, 'q'); v(0x0960, 'Q');
    v(0x090F, 'e'); v(0x0910, 'E'); v(0x0913, 'o'); v(0x0914, 'O');

    auto m = [&](char32_t cp, char w) {
      matra[cp] = w;
      wx_matra[w] = cp;
    };
    m(0x093E, 'A'); m(0x093F, 'i'); m(0x0940, 'I'); m(0x0941, 'u');
    m(0x0942, 'U'); m(0x0943, 'q'); m(0x0944, 'Q'); m(0x0947, 'e');
    m(0x0948, 'E'); m(0x094B, 'o'); m(0x094C, 'O');
  }
};

const WxTables& wx_tables() {
  static const WxTables tables;
  return tables;
}

constexpr char32_t kNukta = 0x093C;
constexpr char32_t kHalant = 0x094D;
constexpr char32_t kAnusvara = 0x0902;
constexpr char32_t kCandrabindu = 0x0901;
constexpr char32_t kVisarga = 0x0903;
constexpr char32_t kAvagraha = 0x093D;
constexpr char32_t kDanda = 0x0964;
constexpr char32_t kDoubleDanda = 0x0965;
constexpr char32_t kLla = 0x0933;

TransliterationResult devanagari_to_wx(const std::string& text) {
  const WxTables& t = wx_tables();
  TransliterationResult res;
  std::vector<char32_t> cps = nfc_devanagari(utf8_decode(text));
  std::string& out = res.text;
  const std::size_t n = cps.size();
  std::size_t i = 0;
  while (i < n) {
    const char32_t cp = cps[i];
    auto ci = t.consonant.find(cp);
    if (ci != t.consonant.end() || cp == kLla) {
      if (cp == kLla) {
        out += "lY";
      } else {
        out += ci->second;
      }
      ++i;
      if (i < n && cps[i] == kNukta) {
        out += 'Z';
        ++i;
      }
      if (i < n && cps[i] == kHalant) {
        ++i;  // vowel suppressed; next consonant continues the cluster
        continue;
      }
      auto mi = (i < n) ? t.matra.find(cps[i]) : t.matra.end();
      if (mi != t.matra.end()) {
        out += mi->second;
        ++i;
      } else {
        out += 'a';  // inherent vowel
      }
      continue;
    }
    auto vi = t.vowel.find(cp);
    if (vi != t.vowel.end()) {
      out += vi->second;
      ++i;
      continue;
    }
    switch (cp) {
      case kAnusvara: out += 'M'; ++i; continue;
      case kCandrabindu: out += 'z'; ++i; continue;
      case kVisarga: out += 'H'; ++i; continue;
      case kAvagraha: out += 'Z'; ++i; continue;
      case kDanda: out += '.'; ++i; continue;
      case kDoubleDanda: out += ".."; ++i; continue;
      default: break;
    }
    if (cp >= 0x0966 && cp <= 0x096F) {
      out += static_cast<char>('0' + (cp - 0x0966));
      ++i;
      continue;
    }
    utf8_append(out, cp);  // pass through
    ++res.unmapped;
    ++i;
  }
  return res;
}

TransliterationResult wx_to_devanagari(const std::string& text) {
  const WxTables& t = wx_tables();
  TransliterationResult res;
  std::vector<char32_t> in = utf8_decode(text);
  std::vector<char32_t> out;
  const std::size_t n = in.size();
  std::size_t i = 0;
  // True when the previous emitted consonant still has an open vowel slot.
  bool open_consonant = false;

  auto close_with_halant = [&]() {
    if (open_consonant) {
      out.push_back(kHalant);
      open_consonant = false;
    }
  };

  while (i < n) {
    const char32_t u = in[i];
    if (u < 0x80) {
      const char ch = static_cast<char>(u);
      // Consonants. "lY" is the retroflex la digraph.
      auto ci = t.wx_consonant.find(ch);
      if (ci != t.wx_consonant.end() || (ch == 'l' && i + 1 < n && in[i + 1] == U'Y')) {
        close_with_halant();
        if (ch == 'l' && i + 1 < n && in[i + 1] == U'Y') {
          out.push_back(kLla);
          i += 2;
        } else {
          out.push_back(ci->second);
          ++i;
        }
        if (i < n && in[i] == U'Z') {  // nukta directly after a consonant
          out.push_back(kNukta);
          ++i;
        }
        open_consonant = true;
        continue;
      }
      auto vi = t.wx_vowel.find(ch);
      if (vi != t.wx_vowel.end()) {
        if (open_consonant) {
          if (ch != 'a') {
            out.push_back(t.wx_matra.at(ch));
          }
          open_consonant = false;  // inherent 'a' leaves the bare consonant
        } else {
          out.push_back(vi->second);
        }
        ++i;
        continue;
      }
      switch (ch) {
        case 'M': close_with_halant(); out.push_back(kAnusvara); ++i; continue;
        case 'z': close_with_halant(); out.push_back(kCandrabindu); ++i; continue;
        case 'H': close_with_halant(); out.push_back(kVisarga); ++i; continue;
        case 'Z':  // after a vowel: avagraha (the consonant case is consumed above)
          close_with_halant();
          out.push_back(kAvagraha);
          ++i;
          continue;
        case '.':
          close_with_halant();
          if (i + 1 < n && in[i + 1] == U'.') {
            out.push_back(kDoubleDanda);
            i += 2;
          } else {
            out.push_back(kDanda);
            ++i;
          }
          continue;
        default: break;
      }
      if (ch >= '0' && ch <= '9') {
        close_with_halant();
        out.push_back(0x0966 + (ch - '0'));
        ++i;
        continue;
      }
    }
    close_with_halant();
    out.push_back(u);  // pass through
    ++res.unmapped;
    ++i;
  }
  close_with_halant();
  res.text = utf8_encode(out);
  return res;
}

}  // namespace

TransliterationResult transliterate(const std::string& text, WxDirection direction) {
  return direction == WxDirection::to_wx ? devanagari_to_wx(text)
                                         : wx_to_devanagari(text);
}

// ---------------------------------------------------------------------------
// Corpus IO and policy files
// ---------------------------------------------------------------------------

Corpus corpus_from_lines(const std::string& text, const std::string& language_id) {
  Corpus corpus = tokenize(text);
  corpus.language_id = language_id;
  return corpus;
}

Corpus read_corpus(const std::string& path, const std::string& language_id) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Corpus corpus = corpus_from_lines(buf.str(), language_id);
  corpus.source_tag = path;
  return corpus;
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& sent : corpus.sentences) {
    for (std::size_t i = 0; i < sent.tokens.size(); ++i) {
      if (i) out << ' ';
      out << sent.tokens[i];
    }
    out << '\n';
  }
}

CleaningPolicy CleaningPolicy::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open policy file: " + path);
  CleaningPolicy policy;
  std::string line;
  std::size_t lineno = 0;
  auto parse_bool = [&](const std::string& v) {
    if (v == "true" || v == "1" || v == "on") return true;
    if (v == "false" || v == "0" || v == "off") return false;
    throw ParseError("expected boolean, got '" + v + "'", lineno);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const auto b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    if (key == "nfc") policy.nfc = parse_bool(val);
    else if (key == "strip_controls") policy.strip_controls = parse_bool(val);
    else if (key == "collapse_spaces") policy.collapse_spaces = parse_bool(val);
    else if (key == "script_filter") policy.script_filter = parse_bool(val);
    else if (key == "min_devanagari_fraction") policy.min_devanagari_fraction = std::stod(val);
    else if (key == "punct_detach") policy.punct_detach = utf8_decode(val);
    else throw ParseError("unknown policy key '" + key + "'", lineno);
  }
  return policy;
}

}  // namespace corpuslab
