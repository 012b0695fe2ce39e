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

#include "evgrid/scorer.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "evgrid/error.h"
#include "evgrid/nugget_analysis.h"
#include "json.hpp"

namespace evgrid {
namespace {

double Round2(double v) { return std::round(v * 100.0) / 100.0; }

std::string FormatScore(double v, bool percent) {
  char buf[32];
  if (percent) {
    std::snprintf(buf, sizeof(buf), "%.2f", v * 100.0);
  } else {
    std::snprintf(buf, sizeof(buf), "%.4f", v);
  }
  return buf;
}

}  // namespace

std::string_view MetricName(Metric metric) {
  switch (metric) {
    case Metric::kTI: return "TI";
    case Metric::kTC: return "TC";
    case Metric::kAI: return "AI";
    case Metric::kAC: return "AC";
    case Metric::kEC: return "EC";
  }
  return "?";
}

ItemSet ExtractItems(const Document &doc, Metric metric, const Schema &schema) {
  ItemSet items;
  if (metric == Metric::kEC) {
    for (const SubEventLink &link : FindSubEvents(doc, schema)) {
      const Event &main = doc.events[link.main_index];
      const Event &sub = doc.events[link.sub_index];
      items.insert({doc.doc_id, main.trigger.indices, main.event_type,
                    sub.trigger.indices, link.role, sub.event_type});
    }
    return items;
  }
  for (const Event &e : doc.events) {
    switch (metric) {
      case Metric::kTI:
        items.insert({doc.doc_id, e.trigger.indices, "", {}, "", ""});
        break;
      case Metric::kTC:
        items.insert({doc.doc_id, e.trigger.indices, e.event_type, {}, "", ""});
        break;
      case Metric::kAI:
        for (const Argument &a : e.arguments) {
          items.insert({doc.doc_id, e.trigger.indices, e.event_type,
                        a.nugget.indices, "", ""});
        }
        break;
      case Metric::kAC:
        for (const Argument &a : e.arguments) {
          items.insert({doc.doc_id, e.trigger.indices, e.event_type,
                        a.nugget.indices, a.role, ""});
        }
        break;
      case Metric::kEC:
        break;
    }
  }
  return items;
}

ItemSet ExtractItems(std::span<const Document> docs, Metric metric,
                     const Schema &schema) {
  ItemSet items;
  for (const Document &doc : docs) items.merge(ExtractItems(doc, metric, schema));
  return items;
}

double MetricScore::precision() const {
  return predicted == 0 ? 0.0 : static_cast<double>(matched) / predicted;
}

double MetricScore::recall() const {
  return gold == 0 ? 0.0 : static_cast<double>(matched) / gold;
}

double MetricScore::f1() const {
  double p = precision();
  double r = recall();
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

void MetricScore::Add(const ItemSet &pred_items, const ItemSet &gold_items) {
  predicted += static_cast<long>(pred_items.size());
  gold += static_cast<long>(gold_items.size());
  // Both sets are sorted, so a merge walk counts the intersection.
  auto p = pred_items.begin();
  auto g = gold_items.begin();
  while (p != pred_items.end() && g != gold_items.end()) {
    if (*p < *g) {
      ++p;
    } else if (*g < *p) {
      ++g;
    } else {
      ++matched;
      ++p;
      ++g;
    }
  }
}

std::string ScoreReport::ToJson(bool percent) const {
  nlohmann::ordered_json out;
  for (Metric m : kAllMetrics) {
    const MetricScore &s = (*this)[m];
    nlohmann::ordered_json entry;
    if (s.defined()) {
      double scale = percent ? 100.0 : 1.0;
      auto value = [&](double v) { return percent ? Round2(v * scale) : v; };
      entry["precision"] = value(s.precision());
      entry["recall"] = value(s.recall());
      entry["f1"] = value(s.f1());
    } else {
      entry["precision"] = nullptr;
      entry["recall"] = nullptr;
      entry["f1"] = nullptr;
    }
    entry["predicted"] = s.predicted;
    entry["gold"] = s.gold;
    entry["matched"] = s.matched;
    out[std::string(MetricName(m))] = std::move(entry);
  }
  return out.dump(2) + "\n";
}

std::string ScoreReport::ToTable(bool percent) const {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-6s %10s %10s %10s %10s %10s %10s\n",
                "metric", "precision", "recall", "f1", "predicted", "gold",
                "matched");
  out += line;
  for (Metric m : kAllMetrics) {
    const MetricScore &s = (*this)[m];
    std::string p = "NA", r = "NA", f = "NA";
    if (s.defined()) {
      p = FormatScore(s.precision(), percent);
      r = FormatScore(s.recall(), percent);
      f = FormatScore(s.f1(), percent);
    }
    std::snprintf(line, sizeof(line), "%-6s %10s %10s %10s %10ld %10ld %10ld\n",
                  std::string(MetricName(m)).c_str(), p.c_str(), r.c_str(),
                  f.c_str(), s.predicted, s.gold, s.matched);
    out += line;
  }
  return out;
}

std::vector<std::pair<const Document *, const Document *>> AlignCorpora(
    std::span<const Document> pred, std::span<const Document> gold) {
  std::map<std::string, const Document *> gold_by_id;
  for (const Document &g : gold) {
    if (!gold_by_id.emplace(g.doc_id, &g).second) {
      throw AlignmentError("doc_id '" + g.doc_id + "' repeated in gold");
    }
  }
  std::map<std::string, const Document *> pred_by_id;
  for (const Document &p : pred) {
    if (!pred_by_id.emplace(p.doc_id, &p).second) {
      throw AlignmentError("doc_id '" + p.doc_id + "' repeated in predictions");
    }
    if (!gold_by_id.contains(p.doc_id)) {
      throw AlignmentError("doc_id '" + p.doc_id +
                           "' present in predictions only");
    }
  }
  std::vector<std::pair<const Document *, const Document *>> pairs;
  for (const Document &g : gold) {
    auto it = pred_by_id.find(g.doc_id);
    if (it == pred_by_id.end()) {
      throw AlignmentError("doc_id '" + g.doc_id + "' present in gold only");
    }
    if (it->second->length() != g.length()) {
      throw AlignmentError("doc_id '" + g.doc_id + "' has " +
                           std::to_string(it->second->length()) +
                           " predicted tokens but " +
                           std::to_string(g.length()) + " gold tokens");
    }
    pairs.emplace_back(it->second, &g);
  }
  return pairs;
}

ScoreReport Score(std::span<const Document> pred,
                  std::span<const Document> gold, const Schema &schema) {
  ScoreReport report;
  for (const auto &[p, g] : AlignCorpora(pred, gold)) {
    for (Metric m : kAllMetrics) {
      report[m].Add(ExtractItems(*p, m, schema), ExtractItems(*g, m, schema));
    }
  }
  return report;
}

}  // namespace evgrid
