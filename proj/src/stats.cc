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

#include "evgrid/stats.h"

#include <cstdio>
#include <map>
#include <set>

#include "evgrid/error.h"
#include "evgrid/nugget_analysis.h"
#include "json.hpp"

namespace evgrid {
namespace {

std::optional<double> Percent(long part, long whole) {
  if (whole == 0) return std::nullopt;
  return 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

std::string Fixed(double v, int decimals = 2) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string Fixed(const std::optional<double> &v) {
  return v ? Fixed(*v) : "NA";
}

// Accumulates label counts per split, then orders rows: known labels in
// schema order first, unknown ones sorted after.
class TableBuilder {
 public:
  TableBuilder(const std::vector<std::string> &known, int num_splits)
      : known_(known), num_splits_(num_splits) {}

  void Add(const std::string &label, int split) {
    auto &row = counts_[label];
    if (row.empty()) row.assign(num_splits_, 0);
    ++row[split];
  }

  LabelTable Build(std::vector<std::string> splits) const {
    LabelTable table;
    table.splits = std::move(splits);
    std::set<std::string> known(known_.begin(), known_.end());
    auto emit = [&](const std::string &label) {
      auto it = counts_.find(label);
      table.labels.push_back(label);
      table.counts.push_back(it == counts_.end()
                                 ? std::vector<long>(num_splits_, 0)
                                 : it->second);
    };
    for (const std::string &label : known_) emit(label);
    for (const auto &[label, row] : counts_) {
      if (!known.contains(label)) emit(label);
    }
    return table;
  }

 private:
  const std::vector<std::string> &known_;
  int num_splits_;
  std::map<std::string, std::vector<long>> counts_;
};

}  // namespace

DensityReport ComputeDensity(std::span<const Document> docs,
                             CoverageMode coverage) {
  DensityReport r;
  std::set<std::string> types;
  std::set<std::string> roles;
  for (const Document &doc : docs) {
    ++r.docs;
    r.tokens += doc.length();
    r.events += static_cast<long>(doc.events.size());
    std::set<int> covered;
    for (const Event &e : doc.events) {
      types.insert(e.event_type);
      covered.insert(e.trigger.indices.begin(), e.trigger.indices.end());
      r.arguments += static_cast<long>(e.arguments.size());
      for (const Argument &a : e.arguments) {
        roles.insert(a.role);
        covered.insert(a.nugget.indices.begin(), a.nugget.indices.end());
      }
    }
    if (coverage == CoverageMode::kDistinctPositions) {
      r.nugget_tokens += static_cast<long>(covered.size());
    } else {
      for (const Nugget &n : CollectNuggets(doc)) r.nugget_tokens += n.size();
    }
  }
  if (r.tokens == 0) throw InputError("corpus has no tokens");
  r.event_types_seen = static_cast<int>(types.size());
  r.roles_seen = static_cast<int>(roles.size());
  const double per100 = 100.0 / static_cast<double>(r.tokens);
  r.events_per_100_tokens = r.events * per100;
  r.args_per_100_tokens = r.arguments * per100;
  r.nugget_tokens_per_100_tokens = r.nugget_tokens * per100;
  return r;
}

ComplexityReport ComputeComplexity(std::span<const Document> docs,
                                   const Schema &schema,
                                   NuggetPopulation population) {
  ComplexityReport r;
  for (const Document &doc : docs) {
    std::set<Nugget> overlapping;
    for (const auto &[a, b] : FindOverlaps(doc)) {
      overlapping.insert(a);
      overlapping.insert(b);
    }
    auto count = [&](const Nugget &n) {
      ++r.nuggets;
      NuggetForm form = ClassifyNugget(n);
      if (form.discontinuous) ++r.discontinuous;
      if (form.reverse_order) ++r.reverse_order;
      if (overlapping.contains(n)) ++r.overlapping;
    };
    if (population == NuggetPopulation::kDeduplicated) {
      for (const Nugget &n : CollectNuggets(doc)) count(n);
    } else {
      for (const Event &e : doc.events) {
        count(e.trigger);
        for (const Argument &a : e.arguments) count(a.nugget);
      }
    }

    r.events += static_cast<long>(doc.events.size());
    std::set<int> subs;
    for (const SubEventLink &link : FindSubEvents(doc, schema)) {
      subs.insert(link.sub_index);
    }
    r.sub_events += static_cast<long>(subs.size());
  }
  r.pct_discontinuous = Percent(r.discontinuous, r.nuggets);
  r.pct_overlapping = Percent(r.overlapping, r.nuggets);
  r.pct_reverse_order = Percent(r.reverse_order, r.nuggets);
  r.pct_subevent = Percent(r.sub_events, r.events);
  return r;
}

long LabelTable::SplitTotal(int split) const {
  long total = 0;
  for (const auto &row : counts) total += row[split];
  return total;
}

long LabelTable::LabelTotal(int label) const {
  long total = 0;
  for (long c : counts[label]) total += c;
  return total;
}

long LabelTable::Total() const {
  long total = 0;
  for (size_t l = 0; l < labels.size(); ++l) {
    total += LabelTotal(static_cast<int>(l));
  }
  return total;
}

double LabelTable::Percent(int label, int split) const {
  long total = SplitTotal(split);
  return total == 0 ? 0.0 : 100.0 * counts[label][split] / total;
}

double LabelTable::TotalPercent(int label) const {
  long total = Total();
  return total == 0 ? 0.0 : 100.0 * LabelTotal(label) / total;
}

long LabelTable::Count(const std::string &label) const {
  for (size_t l = 0; l < labels.size(); ++l) {
    if (labels[l] == label) return LabelTotal(static_cast<int>(l));
  }
  return 0;
}

std::string LabelTable::ToCsv() const {
  std::string out = "label";
  for (const std::string &s : splits) out += "," + s + "," + s + "%";
  out += ",total,total%\n";
  for (size_t l = 0; l < labels.size(); ++l) {
    int li = static_cast<int>(l);
    out += labels[l];
    for (size_t s = 0; s < splits.size(); ++s) {
      out += "," + std::to_string(counts[l][s]) + "," +
             Fixed(Percent(li, static_cast<int>(s)));
    }
    out += "," + std::to_string(LabelTotal(li)) + "," +
           Fixed(TotalPercent(li)) + "\n";
  }
  return out;
}

std::string TypeDistribution::DocLengthsCsv() const {
  std::string out = "split,doc_id,tokens,events\n";
  for (const DocLengthRow &row : doc_lengths) {
    out += row.split + "," + row.doc_id + "," + std::to_string(row.tokens) +
           "," + std::to_string(row.events) + "\n";
  }
  return out;
}

TypeDistribution ComputeTypeDistribution(std::span<const NamedSplit> splits,
                                         const Schema &schema) {
  const int n = static_cast<int>(splits.size());
  TableBuilder nuggets(schema.nugget_type_names(), n);
  TableBuilder events(schema.event_type_names(), n);
  TableBuilder roles(schema.role_names(), n);
  TypeDistribution dist;
  std::vector<std::string> names;
  for (int s = 0; s < n; ++s) {
    names.push_back(splits[s].name);
    for (const Document &doc : splits[s].docs) {
      dist.doc_lengths.push_back({splits[s].name, doc.doc_id, doc.length(),
                                  static_cast<int>(doc.events.size())});
      for (const Event &e : doc.events) {
        events.Add(e.event_type, s);
        if (!e.trigger_nugget_type.empty() &&
            !std::string_view(e.trigger_nugget_type)
                 .starts_with(kSubeventPrefix)) {
          nuggets.Add(e.trigger_nugget_type, s);
        }
        for (const Argument &a : e.arguments) {
          roles.Add(a.role, s);
          if (!a.nugget_type.empty() &&
              !std::string_view(a.nugget_type).starts_with(kSubeventPrefix)) {
            nuggets.Add(a.nugget_type, s);
          }
        }
      }
    }
  }
  dist.nugget_types = nuggets.Build(names);
  dist.event_types = events.Build(names);
  dist.argument_roles = roles.Build(names);
  return dist;
}

std::string StatsToJson(const DensityReport &d, const ComplexityReport &c) {
  auto opt = [](const std::optional<double> &v) -> nlohmann::ordered_json {
    if (!v) return nullptr;
    return *v;
  };
  nlohmann::ordered_json out;
  nlohmann::ordered_json density;
  density["events_per_100_tokens"] = d.events_per_100_tokens;
  density["args_per_100_tokens"] = d.args_per_100_tokens;
  density["nugget_tokens_per_100_tokens"] = d.nugget_tokens_per_100_tokens;
  density["docs"] = d.docs;
  density["tokens"] = d.tokens;
  density["events"] = d.events;
  density["arguments"] = d.arguments;
  density["nugget_tokens"] = d.nugget_tokens;
  density["event_types_seen"] = d.event_types_seen;
  density["roles_seen"] = d.roles_seen;
  out["density"] = std::move(density);
  nlohmann::ordered_json complexity;
  complexity["pct_discontinuous"] = opt(c.pct_discontinuous);
  complexity["pct_overlapping"] = opt(c.pct_overlapping);
  complexity["pct_reverse_order"] = opt(c.pct_reverse_order);
  complexity["pct_subevent"] = opt(c.pct_subevent);
  complexity["nuggets"] = c.nuggets;
  complexity["discontinuous"] = c.discontinuous;
  complexity["overlapping"] = c.overlapping;
  complexity["reverse_order"] = c.reverse_order;
  complexity["events"] = c.events;
  complexity["sub_events"] = c.sub_events;
  out["complexity"] = std::move(complexity);
  return out.dump(2) + "\n";
}

std::string StatsToTable(const DensityReport &d, const ComplexityReport &c) {
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof(buf), "%-8s %-8s %-14s | %-6s %-6s %-6s %-6s\n",
                "#Events", "#Args", "#NuggetTokens", "#D(%)", "#O(%)", "#R(%)",
                "#S(%)");
  out += buf;
  std::snprintf(buf, sizeof(buf), "%-8s %-8s %-14s | %-6s %-6s %-6s %-6s\n",
                Fixed(d.events_per_100_tokens).c_str(),
                Fixed(d.args_per_100_tokens).c_str(),
                Fixed(d.nugget_tokens_per_100_tokens).c_str(),
                Fixed(c.pct_discontinuous).c_str(),
                Fixed(c.pct_overlapping).c_str(),
                Fixed(c.pct_reverse_order).c_str(),
                Fixed(c.pct_subevent).c_str());
  out += buf;
  return out;
}

}  // namespace evgrid
