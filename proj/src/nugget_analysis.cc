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

#include "evgrid/nugget_analysis.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace evgrid {

NuggetForm ClassifyNugget(const Nugget &nugget) {
  NuggetForm form;
  const auto &idx = nugget.indices;
  if (idx.empty()) return form;
  form.single_token = idx.size() == 1;
  auto [lo, hi] = std::minmax_element(idx.begin(), idx.end());
  form.discontinuous =
      static_cast<long>(*hi) - *lo + 1 != static_cast<long>(idx.size());
  for (size_t i = 1; i < idx.size(); ++i) {
    if (idx[i] <= idx[i - 1]) {
      form.reverse_order = true;
      break;
    }
  }
  return form;
}

std::vector<Nugget> CollectNuggets(const Document &doc) {
  std::set<Nugget> pool;
  for (const Event &e : doc.events) {
    pool.insert(e.trigger);
    for (const Argument &a : e.arguments) pool.insert(a.nugget);
  }
  return {pool.begin(), pool.end()};
}

bool NuggetsOverlap(const Nugget &a, const Nugget &b) {
  for (int i : a.indices) {
    if (std::find(b.indices.begin(), b.indices.end(), i) != b.indices.end()) {
      return true;
    }
  }
  return false;
}

std::vector<std::pair<Nugget, Nugget>> FindOverlaps(const Document &doc) {
  std::vector<Nugget> nuggets = CollectNuggets(doc);

  // Inverted index from token position to the nuggets covering it; only
  // nuggets sharing a position are compared.
  std::map<int, std::vector<int>> covering;
  for (int n = 0; n < static_cast<int>(nuggets.size()); ++n) {
    std::set<int> positions(nuggets[n].indices.begin(),
                            nuggets[n].indices.end());
    for (int p : positions) covering[p].push_back(n);
  }
  std::set<std::pair<int, int>> pairs;
  for (const auto &[pos, ids] : covering) {
    for (size_t i = 0; i < ids.size(); ++i) {
      for (size_t j = i + 1; j < ids.size(); ++j) {
        pairs.emplace(ids[i], ids[j]);
      }
    }
  }
  std::vector<std::pair<Nugget, Nugget>> out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) out.emplace_back(nuggets[a], nuggets[b]);
  return out;
}

std::vector<SubEventLink> FindSubEvents(const Document &doc,
                                        const Schema &schema) {
  // Trigger span -> indices of events using it.
  std::map<Nugget, std::vector<int>> by_trigger;
  for (int i = 0; i < static_cast<int>(doc.events.size()); ++i) {
    by_trigger[doc.events[i].trigger].push_back(i);
  }

  std::set<std::tuple<int, int, std::string>> emitted;
  std::vector<SubEventLink> links;
  for (int m = 0; m < static_cast<int>(doc.events.size()); ++m) {
    const Event &main = doc.events[m];
    auto main_type = schema.FindEventType(main.event_type);
    if (!main_type) continue;
    for (const Argument &arg : main.arguments) {
      auto it = by_trigger.find(arg.nugget);
      if (it == by_trigger.end()) continue;
      auto role = schema.FindRole(arg.role);
      if (!role) continue;
      const RoleConstraint *row = schema.Constraint(*main_type, *role);
      if (row == nullptr) continue;
      for (int s : it->second) {
        if (s == m) continue;
        const Event &sub = doc.events[s];
        auto sub_type = schema.FindEventType(sub.event_type);
        if (!sub_type || !row->AllowsSubevent(*sub_type)) continue;
        if (!emitted.emplace(m, s, arg.role).second) continue;
        links.push_back({main.event_id, sub.event_id, arg.role, m, s});
      }
    }
  }
  return links;
}

}  // namespace evgrid
