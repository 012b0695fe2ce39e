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

// Identification error taxonomy and classification confusion matrices.
//
// The taxonomy is gold-centric: each gold item without an exact-match
// prediction lands in exactly one of missed / predicted_long /
// predicted_short / other_overlap.

#ifndef EVGRID_ERROR_ANALYSIS_H_
#define EVGRID_ERROR_ANALYSIS_H_

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evgrid/corpus.h"

namespace evgrid {

enum class IdentificationLevel { kTrigger, kArgument };

// Which predicted argument spans an unmatched gold argument is compared to.
enum class ArgumentContext {
  // Arguments of predicted events sharing the gold trigger span and type;
  // every predicted argument in the document when there is no such event.
  kMatchedTrigger,
  // Every predicted argument in the document.
  kAnyArgument,
};

enum class ErrorClass { kMissed, kPredictedLong, kPredictedShort, kOtherOverlap };

std::string_view ErrorClassName(ErrorClass c);

// Classifies one gold span against candidate predicted spans. Overlap and
// containment are set-based over token indices. Among the candidates with the
// largest intersection, a disagreement between their classes resolves to
// kOtherOverlap.
ErrorClass ClassifySpanError(const std::vector<int> &gold,
                             std::span<const std::vector<int>> candidates);

struct IdentificationErrorBreakdown {
  long gold_items = 0;
  long exact = 0;
  long missed = 0;
  long predicted_long = 0;
  long predicted_short = 0;
  long other_overlap = 0;

  long errors() const {
    return missed + predicted_long + predicted_short + other_overlap;
  }
  long count(ErrorClass c) const;
  // Share among unmatched gold items in percent; 0 when there are none.
  double percent(ErrorClass c) const;
  void Add(ErrorClass c);
};

IdentificationErrorBreakdown IdentificationErrors(
    std::span<const Document> pred, std::span<const Document> gold,
    IdentificationLevel level,
    ArgumentContext context = ArgumentContext::kMatchedTrigger);

enum class ConfusionLevel { kEventType, kArgumentRole };

// Gold label -> predicted label counts for exactly matching spans. Only gold
// labels without an exact-match prediction and predicted labels that are not
// gold count, so the diagonal stays empty.
struct ConfusionMatrix {
  ConfusionLevel level = ConfusionLevel::kEventType;
  std::map<std::pair<std::string, std::string>, long> counts;

  long at(const std::string &gold, const std::string &pred) const;
  long total() const;
  std::vector<std::string> gold_labels() const;
  std::vector<std::string> predicted_labels() const;

  // gold,predicted,count
  std::string ToCsv() const;
};

ConfusionMatrix Confusion(std::span<const Document> pred,
                          std::span<const Document> gold, ConfusionLevel level);

// {"TI": {...}, "AI": {...}, "event_type_confusion": [...], ...}
std::string ErrorReportToJson(const IdentificationErrorBreakdown &ti,
                              const IdentificationErrorBreakdown &ai,
                              const ConfusionMatrix &types,
                              const ConfusionMatrix &roles);

}  // namespace evgrid

#endif  // EVGRID_ERROR_ANALYSIS_H_
