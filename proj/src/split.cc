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

#include "evgrid/split.h"

#include <algorithm>
#include <numeric>
#include <random>

namespace evgrid {
namespace {

// std::uniform_int_distribution is implementation-defined, so draw by
// rejection to keep results identical across standard libraries.
uint64_t Below(std::mt19937_64 &rng, uint64_t bound) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

std::vector<size_t> SeededPermutation(size_t n, uint64_t seed) {
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), size_t{0});
  std::mt19937_64 rng(seed);
  for (size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[Below(rng, i)]);
  }
  return perm;
}

CorpusSplit SplitCorpus(std::span<const Document> docs, uint64_t seed) {
  const size_t n = docs.size();
  const size_t held = (n + 5) / 10;  // round(n / 10), halves up
  std::vector<size_t> perm = SeededPermutation(n, seed);
  std::vector<int> part(n, 0);
  for (size_t k = 0; k < held; ++k) part[perm[k]] = 1;
  for (size_t k = held; k < std::min(n, 2 * held); ++k) part[perm[k]] = 2;
  CorpusSplit out;
  for (size_t i = 0; i < n; ++i) {
    (part[i] == 0 ? out.train : part[i] == 1 ? out.dev : out.test)
        .push_back(docs[i]);
  }
  return out;
}

}  // namespace evgrid
