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

// Structural analysis of nuggets within a document: shape classification,
// overlap detection and span-equality sub-event detection.

#ifndef EVGRID_NUGGET_ANALYSIS_H_
#define EVGRID_NUGGET_ANALYSIS_H_

#include <utility>
#include <vector>

#include "evgrid/corpus.h"
#include "evgrid/schema.h"

namespace evgrid {

struct NuggetForm {
  // Sorted indices do not form a contiguous integer range.
  bool discontinuous = false;
  // Indices are not strictly increasing in reading order.
  bool reverse_order = false;
  bool single_token = false;

  bool plain() const { return !discontinuous && !reverse_order; }
  bool operator==(const NuggetForm &) const = default;
};

// Flags are independent and depend on the indices only.
NuggetForm ClassifyNugget(const Nugget &nugget);

// Triggers and arguments of a document pooled and deduplicated by index
// sequence, in sorted order.
std::vector<Nugget> CollectNuggets(const Document &doc);

// True when the nuggets share at least one token index.
bool NuggetsOverlap(const Nugget &a, const Nugget &b);

// All unordered pairs of distinct pooled nuggets sharing a token. Each pair
// is reported once with first < second.
std::vector<std::pair<Nugget, Nugget>> FindOverlaps(const Document &doc);

// Emits one link per (main event, sub event, role) where an argument of the
// main event spans exactly the sub event's trigger and the role admits the
// sub event's type. Events or roles unknown to the schema are skipped.
std::vector<SubEventLink> FindSubEvents(const Document &doc,
                                        const Schema &schema);

}  // namespace evgrid

#endif  // EVGRID_NUGGET_ANALYSIS_H_
