// corpuslab/utf8.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef CORPUSLAB_UTF8_HPP_
#define CORPUSLAB_UTF8_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace corpuslab {

// Decodes UTF-8 into code points. Throws Error on malformed input
// (overlong forms, surrogates, truncated sequences).
std::vector<char32_t> utf8_decode(std::string_view text);

std::string utf8_encode(const std::vector<char32_t>& cps);
void utf8_append(std::string& out, char32_t cp);
std::string utf8_of(char32_t cp);

// Number of code points in a valid UTF-8 string.
std::size_t utf8_length(std::string_view text);

}  // namespace corpuslab

#endif  // CORPUSLAB_UTF8_HPP_
