// corpuslab/error.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef CORPUSLAB_ERROR_HPP_
#define CORPUSLAB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace corpuslab {

// Data/domain error. CLI maps this to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Error tied to a specific line of an input file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace corpuslab

#endif  // CORPUSLAB_ERROR_HPP_
