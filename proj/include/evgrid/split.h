// Copyright 2026 The evgrid Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded 80/10/10 document split.

#ifndef EVGRID_SPLIT_H_
#define EVGRID_SPLIT_H_

#include <cstdint>
#include <span>
#include <vector>

#include "evgrid/corpus.h"

namespace evgrid {

struct CorpusSplit {
  std::vector<Document> train;
  std::vector<Document> dev;
  std::vector<Document> test;
};

// dev and test each get round(n / 10) documents, train the rest. Membership
// comes from a seeded shuffle that is identical on every platform; each part
// keeps the input order.
CorpusSplit SplitCorpus(std::span<const Document> docs, uint64_t seed);

// Permutation of 0..n-1 used by SplitCorpus.
std::vector<size_t> SeededPermutation(size_t n, uint64_t seed);

}  // namespace evgrid

#endif  // EVGRID_SPLIT_H_
