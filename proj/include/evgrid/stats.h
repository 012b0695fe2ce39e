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

// Corpus density and complexity statistics, and label distributions.

#ifndef EVGRID_STATS_H_
#define EVGRID_STATS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evgrid/corpus.h"
#include "evgrid/schema.h"

namespace evgrid {

// How nugget tokens are counted for density.
enum class CoverageMode {
  // Distinct token positions covered by at least one nugget (default).
  kDistinctPositions,
  // Sum of nugget lengths over the deduplicated nugget population.
  kSummedLengths,
};

// Which nuggets form the population for the complexity percentages.
enum class NuggetPopulation {
  // Triggers and arguments pooled and deduplicated per document (default).
  kDeduplicated,
  // Every trigger and argument occurrence counted separately.
  kPerMention,
};

struct DensityReport {
  long docs = 0;
  long tokens = 0;
  long events = 0;
  long arguments = 0;
  long nugget_tokens = 0;
  int event_types_seen = 0;
  int roles_seen = 0;

  double events_per_100_tokens = 0;
  double args_per_100_tokens = 0;
  double nugget_tokens_per_100_tokens = 0;
};

// Throws InputError when the corpus has no tokens.
DensityReport ComputeDensity(
    std::span<const Document> docs,
    CoverageMode coverage = CoverageMode::kDistinctPositions);

struct ComplexityReport {
  long nuggets = 0;
  long discontinuous = 0;
  long overlapping = 0;
  long reverse_order = 0;
  long events = 0;
  long sub_events = 0;

  // Percentages; nullopt when the population is empty.
  std::optional<double> pct_discontinuous;
  std::optional<double> pct_overlapping;
  std::optional<double> pct_reverse_order;
  std::optional<double> pct_subevent;
};

ComplexityReport ComputeComplexity(
    std::span<const Document> docs, const Schema &schema,
    NuggetPopulation population = NuggetPopulation::kDeduplicated);

// Label counts per split. Rows are labels, columns are splits.
struct LabelTable {
  std::vector<std::string> labels;
  std::vector<std::string> splits;
  // counts[label][split]
  std::vector<std::vector<long>> counts;

  long SplitTotal(int split) const;
  long LabelTotal(int label) const;
  long Total() const;
  // Share of the label within one split, in percent; 0 for an empty split.
  double Percent(int label, int split) const;
  // Share over all splits.
  double TotalPercent(int label) const;
  // Count for a label name over all splits (0 when absent).
  long Count(const std::string &label) const;

  // label,<split>,<split>%,...,total,total%
  std::string ToCsv() const;
};

struct DocLengthRow {
  std::string split;
  std::string doc_id;
  int tokens = 0;
  int events = 0;
};

struct TypeDistribution {
  LabelTable nugget_types;
  LabelTable event_types;
  LabelTable argument_roles;
  std::vector<DocLengthRow> doc_lengths;

  std::string DocLengthsCsv() const;
};

struct NamedSplit {
  std::string name;
  std::span<const Document> docs;
};

// Labels appear in schema order, followed by labels the schema does not know
// in sorted order. Sub-event filler annotations ("E-PUR") are not nugget
// types and are skipped.
TypeDistribution ComputeTypeDistribution(std::span<const NamedSplit> splits,
                                         const Schema &schema);

// JSON for the three reports above, as emitted by the stats command.
std::string StatsToJson(const DensityReport &density,
                        const ComplexityReport &complexity);
// Two-row text table in the usual density/complexity column layout.
std::string StatsToTable(const DensityReport &density,
                         const ComplexityReport &complexity);

}  // namespace evgrid

#endif  // EVGRID_STATS_H_
