// corpuslab/chunks.hpp
//
// Copyright 2026 The corpuslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef CORPUSLAB_CHUNKS_HPP_
#define CORPUSLAB_CHUNKS_HPP_

#include <cstddef>
#include <vector>

#include "corpuslab/annotio.hpp"
#include "corpuslab/tagger.hpp"

namespace corpuslab {

// SSF chunk trees <-> B-X/I-X/O token tags. The POS layer travels in
// TagSentence::pos. Round trip is the identity on well-formed input.
std::vector<TagSentence> ssf_to_bio(const SSFDocument& doc);

// strict: throws on an orphan I-X. lenient (strict=false): repairs it to
// B-X and counts the repair in *repaired.
SSFDocument bio_to_ssf(const std::vector<TagSentence>& sentences, bool strict = true,
                       std::size_t* repaired = nullptr);

bool bio_well_formed(const std::vector<std::string>& tags);

// The BIO tag inventory induced by a chunk tagset: O plus B-X/I-X pairs.
std::vector<std::string> bio_tagset(const Tagset& chunk_tagset);

}  // namespace corpuslab

#endif  // CORPUSLAB_CHUNKS_HPP_
