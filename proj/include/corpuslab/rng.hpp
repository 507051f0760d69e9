// corpuslab/rng.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef CORPUSLAB_RNG_HPP_
#define CORPUSLAB_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace corpuslab {

// Deterministic RNG used for every sampling step in the toolkit.
// std::mt19937_64 has a standardized output sequence; the bounded draw
// and the shuffle are implemented here rather than with std::*
// distributions so results are identical across standard libraries.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform draw in [0, n) by rejection sampling. n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  // Fisher-Yates shuffle with the bounded draw above.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    if (v.size() < 2) return;
    for (std::size_t i = v.size() - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i + 1));
      std::swap(v[i], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

// FNV-1a, used for config hashing and for deriving per-language seeds.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace corpuslab

#endif  // CORPUSLAB_RNG_HPP_
