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

#include "evgrid/error_analysis.h"

#include <algorithm>
#include <set>

#include "evgrid/scorer.h"
#include "json.hpp"

namespace evgrid {
namespace {

using Span = std::vector<int>;

std::set<int> AsSet(const Span &s) { return {s.begin(), s.end()}; }

ErrorClass Relate(const std::set<int> &gold, const std::set<int> &pred) {
  bool pred_covers = std::includes(pred.begin(), pred.end(), gold.begin(),
                                   gold.end());
  bool gold_covers = std::includes(gold.begin(), gold.end(), pred.begin(),
                                   pred.end());
  if (pred_covers && !gold_covers) return ErrorClass::kPredictedLong;
  if (gold_covers && !pred_covers) return ErrorClass::kPredictedShort;
  return ErrorClass::kOtherOverlap;
}

// Span key for an event trigger.
struct TriggerKey {
  Span trigger;
  std::string type;
  auto operator<=>(const TriggerKey &) const = default;
};

}  // namespace

std::string_view ErrorClassName(ErrorClass c) {
  switch (c) {
    case ErrorClass::kMissed: return "missed";
    case ErrorClass::kPredictedLong: return "predicted_long";
    case ErrorClass::kPredictedShort: return "predicted_short";
    case ErrorClass::kOtherOverlap: return "other_overlap";
  }
  return "?";
}

ErrorClass ClassifySpanError(const Span &gold,
                             std::span<const Span> candidates) {
  const std::set<int> g = AsSet(gold);
  size_t best = 0;
  std::set<ErrorClass> classes;
  for (const Span &c : candidates) {
    std::set<int> p = AsSet(c);
    size_t shared = 0;
    for (int i : p) shared += g.count(i);
    if (shared == 0 || shared < best) continue;
    if (shared > best) {
      best = shared;
      classes.clear();
    }
    classes.insert(Relate(g, p));
  }
  if (best == 0) return ErrorClass::kMissed;
  return classes.size() == 1 ? *classes.begin() : ErrorClass::kOtherOverlap;
}

long IdentificationErrorBreakdown::count(ErrorClass c) const {
  switch (c) {
    case ErrorClass::kMissed: return missed;
    case ErrorClass::kPredictedLong: return predicted_long;
    case ErrorClass::kPredictedShort: return predicted_short;
    case ErrorClass::kOtherOverlap: return other_overlap;
  }
  return 0;
}

double IdentificationErrorBreakdown::percent(ErrorClass c) const {
  long total = errors();
  return total == 0 ? 0.0 : 100.0 * count(c) / total;
}

void IdentificationErrorBreakdown::Add(ErrorClass c) {
  switch (c) {
    case ErrorClass::kMissed: ++missed; break;
    case ErrorClass::kPredictedLong: ++predicted_long; break;
    case ErrorClass::kPredictedShort: ++predicted_short; break;
    case ErrorClass::kOtherOverlap: ++other_overlap; break;
  }
}

IdentificationErrorBreakdown IdentificationErrors(
    std::span<const Document> pred, std::span<const Document> gold,
    IdentificationLevel level, ArgumentContext context) {
  IdentificationErrorBreakdown out;
  const Metric metric =
      level == IdentificationLevel::kTrigger ? Metric::kTI : Metric::kAI;
  const Schema &schema = Schema::Default();  // unused by TI/AI items
  for (const auto &[p, g] : AlignCorpora(pred, gold)) {
    ItemSet pred_items = ExtractItems(*p, metric, schema);
    ItemSet gold_items = ExtractItems(*g, metric, schema);

    std::vector<Span> all_spans;
    std::map<TriggerKey, std::vector<Span>> by_trigger;
    for (const EvalItem &item : pred_items) {
      if (metric == Metric::kTI) {
        all_spans.push_back(item.trigger);
      } else {
        all_spans.push_back(item.argument);
        by_trigger[{item.trigger, item.event_type}].push_back(item.argument);
      }
    }

    for (const EvalItem &item : gold_items) {
      ++out.gold_items;
      if (pred_items.contains(item)) {
        ++out.exact;
        continue;
      }
      if (metric == Metric::kTI) {
        out.Add(ClassifySpanError(item.trigger, all_spans));
        continue;
      }
      const std::vector<Span> *candidates = &all_spans;
      if (context == ArgumentContext::kMatchedTrigger) {
        auto it = by_trigger.find({item.trigger, item.event_type});
        if (it != by_trigger.end()) candidates = &it->second;
      }
      out.Add(ClassifySpanError(item.argument, *candidates));
    }
  }
  return out;
}

long ConfusionMatrix::at(const std::string &gold, const std::string &pred) const {
  auto it = counts.find({gold, pred});
  return it == counts.end() ? 0 : it->second;
}

long ConfusionMatrix::total() const {
  long total = 0;
  for (const auto &[key, n] : counts) total += n;
  return total;
}

std::vector<std::string> ConfusionMatrix::gold_labels() const {
  std::set<std::string> labels;
  for (const auto &[key, n] : counts) labels.insert(key.first);
  return {labels.begin(), labels.end()};
}

std::vector<std::string> ConfusionMatrix::predicted_labels() const {
  std::set<std::string> labels;
  for (const auto &[key, n] : counts) labels.insert(key.second);
  return {labels.begin(), labels.end()};
}

std::string ConfusionMatrix::ToCsv() const {
  std::string out = "gold,predicted,count\n";
  for (const auto &[key, n] : counts) {
    out += key.first + "," + key.second + "," + std::to_string(n) + "\n";
  }
  return out;
}

ConfusionMatrix Confusion(std::span<const Document> pred,
                          std::span<const Document> gold,
                          ConfusionLevel level) {
  ConfusionMatrix m;
  m.level = level;
  // Label sets keyed by the span part of the item.
  using Labels = std::map<EvalItem, std::set<std::string>>;
  auto collect = [level](const Document &doc) {
    Labels out;
    for (const Event &e : doc.events) {
      if (level == ConfusionLevel::kEventType) {
        out[{doc.doc_id, e.trigger.indices, "", {}, "", ""}].insert(
            e.event_type);
        continue;
      }
      for (const Argument &a : e.arguments) {
        out[{doc.doc_id, e.trigger.indices, e.event_type, a.nugget.indices, "",
             ""}]
            .insert(a.role);
      }
    }
    return out;
  };
  for (const auto &[p, g] : AlignCorpora(pred, gold)) {
    Labels pred_labels = collect(*p);
    for (const auto &[key, gold_set] : collect(*g)) {
      auto it = pred_labels.find(key);
      if (it == pred_labels.end()) continue;
      for (const std::string &gl : gold_set) {
        if (it->second.contains(gl)) continue;
        for (const std::string &pl : it->second) {
          if (!gold_set.contains(pl)) ++m.counts[{gl, pl}];
        }
      }
    }
  }
  return m;
}

std::string ErrorReportToJson(const IdentificationErrorBreakdown &ti,
                              const IdentificationErrorBreakdown &ai,
                              const ConfusionMatrix &types,
                              const ConfusionMatrix &roles) {
  auto breakdown = [](const IdentificationErrorBreakdown &b) {
    nlohmann::ordered_json j;
    j["gold_items"] = b.gold_items;
    j["exact"] = b.exact;
    for (ErrorClass c : {ErrorClass::kMissed, ErrorClass::kPredictedLong,
                         ErrorClass::kPredictedShort,
                         ErrorClass::kOtherOverlap}) {
      j[std::string(ErrorClassName(c))] = {{"count", b.count(c)},
                                           {"percent", b.percent(c)}};
    }
    return j;
  };
  auto matrix = [](const ConfusionMatrix &m) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &[key, n] : m.counts) {
      arr.push_back({{"gold", key.first}, {"predicted", key.second},
                     {"count", n}});
    }
    return arr;
  };
  nlohmann::ordered_json out;
  out["TI"] = breakdown(ti);
  out["AI"] = breakdown(ai);
  out["event_type_confusion"] = matrix(types);
  out["argument_role_confusion"] = matrix(roles);
  return out.dump(2) + "\n";
}

}  // namespace evgrid
