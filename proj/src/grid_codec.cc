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

#include "evgrid/grid_codec.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "evgrid/error.h"
#include "json.hpp"

namespace evgrid {
namespace {

void CheckNugget(const Nugget &n, int length, const std::string &what) {
  if (n.indices.empty()) throw InputError(what + " has no tokens");
  std::set<int> seen;
  for (int i : n.indices) {
    if (i < 0 || i >= length) {
      throw InputError(what + " index " + std::to_string(i) +
                       " outside [0, " + std::to_string(length) + ")");
    }
    if (!seen.insert(i).second) {
      throw InputError(what + " repeats index " + std::to_string(i));
    }
  }
}

void AddNugget(const Nugget &n, RelationLabel closing, RelationGrid &grid) {
  for (size_t k = 0; k + 1 < n.indices.size(); ++k) {
    grid.Add(n.indices[k], n.indices[k + 1], RelationLabel::HeadTail());
  }
  grid.Add(n.tail(), n.head(), closing);
}

// Step 1: enumerate closed HTL chains from every head.
class MentionFinder {
 public:
  MentionFinder(int length, const DecodeConfig &config,
                DecodeDiagnostics &diag)
      : config_(config), diag_(diag), forward_(length), tails_(length),
        on_path_(length, false) {}

  void AddForward(int from, int to) { forward_[from].push_back(to); }
  void AddTail(int head, int tail) { tails_[head].push_back(tail); }

  std::vector<Nugget> Run() {
    for (auto &v : forward_) Normalize(v);
    for (auto &v : tails_) Normalize(v);
    std::vector<Nugget> mentions;
    for (int h = 0; h < static_cast<int>(tails_.size()); ++h) {
      if (tails_[h].empty()) continue;
      head_ = h;
      explored_ = 1;
      truncated_ = false;
      kept_.clear();
      path_.assign(1, h);
      on_path_[h] = true;
      if (IsTail(h)) kept_.push_back(Nugget{path_});
      Extend(h);
      on_path_[h] = false;
      if (truncated_) ++diag_.heads_truncated;

      std::map<int, int> per_tail;
      for (const Nugget &m : kept_) ++per_tail[m.tail()];
      for (const auto &[tail, n] : per_tail) diag_.shared_closures += n - 1;
      for (Nugget &m : kept_) mentions.push_back(std::move(m));
    }
    diag_.mentions += static_cast<int>(mentions.size());
    return mentions;
  }

 private:
  static void Normalize(std::vector<int> &v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  bool IsTail(int t) const {
    return std::binary_search(tails_[head_].begin(), tails_[head_].end(), t);
  }

  void Extend(int node) {
    if (truncated_) return;
    if (static_cast<int>(path_.size()) >= config_.max_nugget_length) {
      for (int next : forward_[node]) {
        if (!on_path_[next]) {
          ++diag_.long_paths_abandoned;
          break;
        }
      }
      return;
    }
    for (int next : forward_[node]) {
      if (on_path_[next]) continue;
      if (explored_ >= config_.max_paths_per_head) {
        truncated_ = true;
        return;
      }
      ++explored_;
      path_.push_back(next);
      on_path_[next] = true;
      if (IsTail(next)) kept_.push_back(Nugget{path_});
      Extend(next);
      on_path_[next] = false;
      path_.pop_back();
      if (truncated_) return;
    }
  }

  const DecodeConfig &config_;
  DecodeDiagnostics &diag_;
  std::vector<std::vector<int>> forward_;
  std::vector<std::vector<int>> tails_;
  std::vector<bool> on_path_;

  int head_ = 0;
  int explored_ = 0;
  bool truncated_ = false;
  std::vector<int> path_;
  std::vector<Nugget> kept_;
};

struct ArgumentMention {
  Nugget nugget;
  RoleId role;
};

}  // namespace

void DecodeConfig::Validate() const {
  if (max_nugget_length < 1) {
    throw InputError("max_nugget_length must be at least 1");
  }
  if (max_paths_per_head < 1) {
    throw InputError("max_paths_per_head must be at least 1");
  }
}

bool DecodeDiagnostics::clean() const {
  return long_paths_abandoned == 0 && heads_truncated == 0 &&
         shared_closures == 0 && arguments_dropped == 0 &&
         fallback_subevent_links == 0 && ambiguous_subevent_roles == 0 &&
         unexplained_trigger_links == 0;
}

void DecodeDiagnostics::Merge(const DecodeDiagnostics &o) {
  mentions += o.mentions;
  long_paths_abandoned += o.long_paths_abandoned;
  heads_truncated += o.heads_truncated;
  shared_closures += o.shared_closures;
  arguments_dropped += o.arguments_dropped;
  fallback_subevent_links += o.fallback_subevent_links;
  ambiguous_subevent_roles += o.ambiguous_subevent_roles;
  unexplained_trigger_links += o.unexplained_trigger_links;
}

std::string DecodeDiagnostics::ToJson() const {
  nlohmann::ordered_json out;
  out["mentions"] = mentions;
  out["long_paths_abandoned"] = long_paths_abandoned;
  out["heads_truncated"] = heads_truncated;
  out["shared_closures"] = shared_closures;
  out["arguments_dropped"] = arguments_dropped;
  out["fallback_subevent_links"] = fallback_subevent_links;
  out["ambiguous_subevent_roles"] = ambiguous_subevent_roles;
  out["unexplained_trigger_links"] = unexplained_trigger_links;
  return out.dump();
}

RelationGrid Encode(const Document &doc, const Schema &schema) {
  RelationGrid grid(doc.length());
  for (const Event &e : doc.events) {
    auto type = schema.FindEventType(e.event_type);
    if (!type) {
      throw InputError("event '" + e.event_id + "' has unknown type '" +
                       e.event_type + "'");
    }
    CheckNugget(e.trigger, doc.length(), "trigger of '" + e.event_id + "'");
    AddNugget(e.trigger, RelationLabel::EventType(*type), grid);
    for (const Argument &a : e.arguments) {
      auto role = schema.FindRole(a.role);
      if (!role || !schema.Valid(*type, *role)) {
        throw InputError("role '" + a.role + "' is not valid for event '" +
                         e.event_id + "' of type '" + e.event_type + "'");
      }
      CheckNugget(a.nugget, doc.length(),
                  "argument '" + a.role + "' of '" + e.event_id + "'");
      AddNugget(a.nugget, RelationLabel::Role(*role), grid);
      grid.Add(e.trigger.head(), a.nugget.head(),
               RelationLabel::EventArgument());
    }
  }
  return grid;
}

DecodeResult Decode(const RelationGrid &grid, const Schema &schema,
                    const DecodeConfig &config) {
  config.Validate();
  DecodeResult result;
  DecodeDiagnostics &diag = result.diagnostics;

  // Step 0: split cells into HTL successors, closing tails and EAL links.
  MentionFinder finder(grid.length(), config, diag);
  std::set<std::pair<int, int>> links;
  for (const GridCell &c : grid.cells()) {
    switch (c.label.kind) {
      case RelationKind::kHeadTail:
        if (c.row != c.col) finder.AddForward(c.row, c.col);
        break;
      case RelationKind::kEventArgument:
        links.emplace(c.row, c.col);
        break;
      case RelationKind::kEventType:
      case RelationKind::kRole:
        finder.AddTail(c.col, c.row);
        break;
    }
  }

  // Step 1.
  std::vector<Nugget> mentions = finder.Run();

  // Step 2: type each mention by the closing labels on its (tail, head) cell.
  std::vector<Event> &events = result.events;
  std::vector<std::pair<Nugget, EventTypeId>> triggers;
  std::vector<ArgumentMention> arguments;
  for (const Nugget &m : mentions) {
    for (RelationLabel label : grid.LabelsAt(m.tail(), m.head())) {
      if (label.kind == RelationKind::kEventType) {
        triggers.emplace_back(m, EventTypeId{label.id});
      } else if (label.kind == RelationKind::kRole) {
        arguments.push_back({m, RoleId{label.id}});
      }
    }
  }
  std::sort(triggers.begin(), triggers.end(),
            [&schema](const auto &a, const auto &b) {
              return std::tie(a.first, schema.name(a.second)) <
                     std::tie(b.first, schema.name(b.second));
            });
  std::vector<EventTypeId> event_types;
  for (auto &[nugget, type] : triggers) {
    Event e;
    e.event_id = "E" + std::to_string(events.size() + 1);
    e.event_type = schema.name(type);
    e.trigger = nugget;
    events.push_back(std::move(e));
    event_types.push_back(type);
  }

  // Step 3: attach arguments through EAL and the ontology check.
  std::multimap<int, int> events_by_head;
  for (int i = 0; i < static_cast<int>(events.size()); ++i) {
    events_by_head.emplace(events[i].trigger.head(), i);
  }
  std::multimap<int, int> links_by_col;
  for (const auto &[row, col] : links) links_by_col.emplace(col, row);
  for (const ArgumentMention &arg : arguments) {
    bool attached = false;
    auto [llo, lhi] = links_by_col.equal_range(arg.nugget.head());
    for (auto link = llo; link != lhi; ++link) {
      auto [lo, hi] = events_by_head.equal_range(link->second);
      for (auto it = lo; it != hi; ++it) {
        if (!schema.Valid(event_types[it->second], arg.role)) continue;
        events[it->second].arguments.push_back(
            {schema.name(arg.role), arg.nugget, ""});
        attached = true;
      }
    }
    if (!attached) ++diag.arguments_dropped;
  }

  // Sub-event links: EAL between two trigger heads.
  auto by_span_role = [](const Argument &a, const Argument &b) {
    return std::tie(a.nugget, a.role) < std::tie(b.nugget, b.role);
  };
  for (const auto &[main_head, sub_head] : links) {
    auto [mlo, mhi] = events_by_head.equal_range(main_head);
    auto [slo, shi] = events_by_head.equal_range(sub_head);
    for (auto m = mlo; m != mhi; ++m) {
      for (auto s = slo; s != shi; ++s) {
        if (m->second == s->second) continue;
        Event &main = events[m->second];
        const Event &sub = events[s->second];
        EventTypeId main_type = event_types[m->second];
        EventTypeId sub_type = event_types[s->second];

        bool explained = false;
        for (const Argument &a : main.arguments) {
          if (a.nugget.head() != sub_head) continue;
          explained = true;
          if (a.nugget != sub.trigger) continue;
          const RoleConstraint *row =
              schema.Constraint(main_type, schema.role(a.role));
          if (row != nullptr && row->AllowsSubevent(sub_type)) {
            result.links.push_back(
                {main.event_id, sub.event_id, a.role, m->second, s->second});
          }
        }
        if (explained) continue;

        std::vector<RoleId> roles = schema.RolesForSubevent(main_type, sub_type);
        if (roles.empty()) {
          ++diag.unexplained_trigger_links;
          continue;
        }
        ++diag.fallback_subevent_links;
        if (roles.size() > 1) ++diag.ambiguous_subevent_roles;
        const std::string &role = schema.name(roles.front());
        main.arguments.push_back({role, sub.trigger, ""});
        result.links.push_back(
            {main.event_id, sub.event_id, role, m->second, s->second});
      }
    }
  }

  for (Event &e : events) {
    std::sort(e.arguments.begin(), e.arguments.end(), by_span_role);
    e.arguments.erase(std::unique(e.arguments.begin(), e.arguments.end()),
                      e.arguments.end());
  }
  std::sort(result.links.begin(), result.links.end(),
            [](const SubEventLink &a, const SubEventLink &b) {
              return std::tie(a.main_index, a.sub_index, a.role) <
                     std::tie(b.main_index, b.sub_index, b.role);
            });
  result.links.erase(std::unique(result.links.begin(), result.links.end()),
                     result.links.end());
  return result;
}

Document DecodeDocument(const RelationGrid &grid, const std::string &doc_id,
                        std::vector<std::string> tokens, const Schema &schema,
                        const DecodeConfig &config,
                        DecodeDiagnostics *diagnostics) {
  if (static_cast<int>(tokens.size()) != grid.length()) {
    throw InputError("document '" + doc_id + "' has " +
                     std::to_string(tokens.size()) +
                     " tokens but its grid has length " +
                     std::to_string(grid.length()));
  }
  DecodeResult decoded = Decode(grid, schema, config);
  if (diagnostics != nullptr) diagnostics->Merge(decoded.diagnostics);
  return Document{doc_id, std::move(tokens), std::move(decoded.events)};
}

}  // namespace evgrid
