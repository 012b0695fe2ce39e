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

// Event ontology: event types, argument roles, lexical nugget types and the
// per-event-type role table that constrains which roles an event may carry,
// which nugget types may fill them and which event types may appear as
// sub-events in them.

#ifndef EVGRID_SCHEMA_H_
#define EVGRID_SCHEMA_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace evgrid {

// Dense indices into a schema's label lists. Only meaningful together with
// the schema that produced them.
struct EventTypeId {
  int value = -1;
  auto operator<=>(const EventTypeId &) const = default;
};

struct RoleId {
  int value = -1;
  auto operator<=>(const RoleId &) const = default;
};

struct NuggetTypeId {
  int value = -1;
  auto operator<=>(const NuggetTypeId &) const = default;
};

// One row of an event type's role table.
struct RoleConstraint {
  EventTypeId event_type;
  RoleId role;
  std::vector<NuggetTypeId> allowed_fillers;
  std::vector<EventTypeId> allowed_subevent_types;

  bool AllowsFiller(NuggetTypeId type) const;
  bool AllowsSubevent(EventTypeId type) const;

  bool operator==(const RoleConstraint &) const = default;
};

// Immutable after construction; safe to share across threads.
class Schema {
 public:
  // The built-in scientific-abstract ontology: 10 event types, 20 roles and
  // 10 nugget types.
  static const Schema &Default();

  // Parses a schema document (JSON). Throws SchemaError on inconsistent
  // content and FormatError on malformed JSON.
  static Schema FromJson(std::string_view text);
  static Schema FromFile(const std::string &path);

  // Canonical JSON form. FromJson(ToJson()) reproduces the schema and
  // ToJson is a fixed point of that round trip.
  std::string ToJson() const;

  const std::vector<std::string> &event_type_names() const {
    return event_types_;
  }
  const std::vector<std::string> &role_names() const { return roles_; }
  const std::vector<std::string> &nugget_type_names() const {
    return nugget_types_;
  }
  const std::vector<RoleConstraint> &constraints() const {
    return constraints_;
  }

  int num_event_types() const { return static_cast<int>(event_types_.size()); }
  int num_roles() const { return static_cast<int>(roles_.size()); }
  int num_nugget_types() const {
    return static_cast<int>(nugget_types_.size());
  }

  // Name lookups. The Find* variants return nullopt for unknown labels, the
  // others throw UnknownLabelError.
  std::optional<EventTypeId> FindEventType(std::string_view name) const;
  std::optional<RoleId> FindRole(std::string_view name) const;
  std::optional<NuggetTypeId> FindNuggetType(std::string_view name) const;
  EventTypeId event_type(std::string_view name) const;
  RoleId role(std::string_view name) const;
  NuggetTypeId nugget_type(std::string_view name) const;

  const std::string &name(EventTypeId id) const;
  const std::string &name(RoleId id) const;
  const std::string &name(NuggetTypeId id) const;

  // True iff the role belongs to the event type's role table.
  bool Valid(EventTypeId event_type, RoleId role) const;
  // Name-based variant; unknown labels throw UnknownLabelError rather than
  // returning false.
  bool Valid(std::string_view event_type, std::string_view role) const;

  // The constraint row for (event_type, role), or nullptr when invalid.
  const RoleConstraint *Constraint(EventTypeId event_type, RoleId role) const;

  // Rows of one event type in table order.
  std::vector<const RoleConstraint *> RowsFor(EventTypeId event_type) const;

  // Roles of `main` whose sub-event column admits `sub`, in table order.
  std::vector<RoleId> RolesForSubevent(EventTypeId main, EventTypeId sub) const;
  std::vector<std::string> RolesForSubevent(std::string_view main,
                                            std::string_view sub) const;

  // Number of (event type, role) pairs accepted by Valid().
  int num_valid_pairs() const { return static_cast<int>(constraints_.size()); }

  bool operator==(const Schema &other) const;

 private:
  Schema() = default;

  // Builds a schema from raw rows and checks internal consistency.
  struct RawRow {
    std::string event_type;
    std::string role;
    std::vector<std::string> fillers;
    std::vector<std::string> subevent_types;
  };
  static Schema Build(std::vector<std::string> event_types,
                      std::vector<std::string> roles,
                      std::vector<std::string> nugget_types,
                      const std::vector<RawRow> &rows);
  static Schema BuildDefault();

  std::vector<std::string> event_types_;
  std::vector<std::string> roles_;
  std::vector<std::string> nugget_types_;
  std::unordered_map<std::string, int> event_type_index_;
  std::unordered_map<std::string, int> role_index_;
  std::unordered_map<std::string, int> nugget_type_index_;

  // Rows in file order; rows of one event type keep their relative order.
  std::vector<RoleConstraint> constraints_;
  // event_type * num_roles + role -> row index, or -1.
  std::vector<int> pair_index_;
};

// Prefix marking a sub-event entry in a constrained-types column ("E-PUR").
inline constexpr std::string_view kSubeventPrefix = "E-";

}  // namespace evgrid

#endif  // EVGRID_SCHEMA_H_
