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

// Exact-match precision/recall/F1 for trigger identification (TI) and
// classification (TC), argument identification (AI) and classification (AC)
// and event correlation (EC). A nugget is the unit of evaluation and spans
// compare as ordered index sequences. Each metric compares a set of items:
//
//   TI  trigger span
//   TC  trigger span, event type
//   AI  trigger span, event type, argument span
//   AC  trigger span, event type, argument span, role
//   EC  main trigger span, main type, sub trigger span, role, sub type
//
// Counts are pooled over documents (micro-average).

#ifndef EVGRID_SCORER_H_
#define EVGRID_SCORER_H_

#include <array>
#include <compare>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evgrid/corpus.h"
#include "evgrid/schema.h"

namespace evgrid {

enum class Metric { kTI = 0, kTC = 1, kAI = 2, kAC = 3, kEC = 4 };

inline constexpr std::array<Metric, 5> kAllMetrics = {
    Metric::kTI, Metric::kTC, Metric::kAI, Metric::kAC, Metric::kEC};

std::string_view MetricName(Metric metric);

// Components not used by the item's metric stay empty.
struct EvalItem {
  std::string doc_id;
  std::vector<int> trigger;
  std::string event_type;
  std::vector<int> argument;
  std::string role;
  std::string sub_event_type;

  auto operator<=>(const EvalItem &) const = default;
};

using ItemSet = std::set<EvalItem>;

// Deduplicated items of one document. EC items come from FindSubEvents().
ItemSet ExtractItems(const Document &doc, Metric metric, const Schema &schema);
ItemSet ExtractItems(std::span<const Document> docs, Metric metric,
                     const Schema &schema);

struct MetricScore {
  long predicted = 0;
  long gold = 0;
  long matched = 0;

  // Zero when the denominator is empty.
  double precision() const;
  double recall() const;
  double f1() const;
  // False when both sides are empty over the whole corpus (reported as NA).
  bool defined() const { return predicted > 0 || gold > 0; }

  void Add(const ItemSet &pred, const ItemSet &gold);
};

struct ScoreReport {
  std::array<MetricScore, 5> metrics;

  const MetricScore &operator[](Metric m) const {
    return metrics[static_cast<int>(m)];
  }
  MetricScore &operator[](Metric m) { return metrics[static_cast<int>(m)]; }

  // {"TI": {"precision", "recall", "f1", "predicted", "gold", "matched"}, ...}
  // Undefined metrics report null scores. `percent` scales to 0-100 with two
  // decimals.
  std::string ToJson(bool percent = false) const;
  std::string ToTable(bool percent = false) const;
};

// Pairs documents by doc_id. Throws AlignmentError when an id is missing on
// one side, repeated, or the token lengths differ.
std::vector<std::pair<const Document *, const Document *>> AlignCorpora(
    std::span<const Document> pred, std::span<const Document> gold);

ScoreReport Score(std::span<const Document> pred,
                  std::span<const Document> gold, const Schema &schema);

}  // namespace evgrid

#endif  // EVGRID_SCORER_H_
