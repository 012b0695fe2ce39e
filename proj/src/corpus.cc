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

#include "evgrid/corpus.h"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

namespace evgrid {

int CanonicalizeDocument(Document &doc) {
  std::map<std::pair<Nugget, std::string>, size_t> seen;
  std::vector<Event> merged;
  int dropped = 0;
  for (Event &e : doc.events) {
    auto key = std::make_pair(e.trigger, e.event_type);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(std::move(key), merged.size());
      merged.push_back(std::move(e));
    } else {
      Event &target = merged[it->second];
      for (Argument &a : e.arguments) target.arguments.push_back(std::move(a));
      if (target.trigger_nugget_type.empty()) {
        target.trigger_nugget_type = e.trigger_nugget_type;
      }
      ++dropped;
    }
  }

  for (Event &e : merged) {
    auto &args = e.arguments;
    // Stable so that the first nugget_type annotation survives dedup.
    std::stable_sort(args.begin(), args.end(),
                     [](const Argument &a, const Argument &b) {
                       return std::tie(a.nugget, a.role) <
                              std::tie(b.nugget, b.role);
                     });
    args.erase(std::unique(args.begin(), args.end(),
                           [](const Argument &a, const Argument &b) {
                             return a.nugget == b.nugget && a.role == b.role;
                           }),
               args.end());
  }
  std::stable_sort(merged.begin(), merged.end(),
                   [](const Event &a, const Event &b) {
                     return std::tie(a.trigger, a.event_type) <
                            std::tie(b.trigger, b.event_type);
                   });
  doc.events = std::move(merged);
  return dropped;
}

void RenumberEvents(Document &doc) {
  for (size_t i = 0; i < doc.events.size(); ++i) {
    doc.events[i].event_id = "E" + std::to_string(i + 1);
  }
}

}  // namespace evgrid
