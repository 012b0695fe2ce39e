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

#include "evgrid/schema.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "evgrid/error.h"
#include "json.hpp"

namespace evgrid {
namespace {

using ordered_json = nlohmann::ordered_json;

// Built-in role tables. Each entry lists the constrained types of one role
// exactly as written in the ontology tables: lexical nugget types and
// E-prefixed sub-event types separated by '/'.
struct DefaultRow {
  const char *event_type;
  const char *role;
  const char *constrained;
};

constexpr const char *kDefaultEventTypes[] = {
    "PUR", "ITT", "RWS", "RWF", "PRP", "WKS", "MDS", "FIN", "CMP", "FAC"};

constexpr const char *kDefaultRoles[] = {
    "Aim",        "Condition", "Dataset",       "Target",
    "Subject",    "BaseComponent", "TriedComponent", "Concern",
    "Fault",      "Extent",    "Proposer",      "Content",
    "Researcher", "Finder",    "Arg1",          "Arg2",
    "Result",     "Metrics",   "Reason",        "Object"};

constexpr const char *kDefaultNuggetTypes[] = {
    "OG", "APP", "MOD", "FEA", "TAK", "DST", "LIM", "STR", "WEA", "DEG"};

constexpr DefaultRow kDefaultRows[] = {
    // Purpose.
    {"PUR", "Aim", "APP / MOD / FEA / DST / STR / WEA / TAK"},
    {"PUR", "Condition", "LIM"},
    {"PUR", "Dataset", "DST"},
    // IntroduceTarget.
    {"ITT", "Target", "APP / MOD / FEA / DST / STR / WEA / TAK"},
    {"ITT", "Condition", "LIM"},
    {"ITT", "Dataset", "DST"},
    // RelatedWorkStep.
    {"RWS", "Subject", "APP / MOD / FEA / DST"},
    {"RWS", "BaseComponent", "APP / MOD / FEA / DST"},
    {"RWS", "TriedComponent", "APP / MOD / FEA / DST"},
    {"RWS", "Condition", "LIM / E-RWS"},
    {"RWS", "Dataset", "DST"},
    {"RWS", "Target", "E-PUR / TAK / STR / WEA / APP / FEA / MOD"},
    // RelatedWorkFault.
    {"RWF", "Concern", "APP / FEA / STR / WEA / MOD / DST"},
    {"RWF", "Fault", "APP / FEA / STR / WEA / MOD / DST"},
    {"RWF", "Condition", "LIM / E-RWF / E-RWS"},
    {"RWF", "Dataset", "DST"},
    {"RWF", "Target", "E-PUR / TAK / STR / WEA"},
    {"RWF", "Extent", "DEG"},
    // Propose.
    {"PRP", "Proposer", "OG"},
    {"PRP", "Content", "APP / FEA / MOD / DST / TAK"},
    {"PRP", "Target", "E-PUR / TAK / FEA / WEA"},
    // WorkStatement.
    {"WKS", "Researcher", "OG"},
    {"WKS", "Content", "APP / MOD / FEA / DST / STR / WEA / TAK"},
    {"WKS", "Condition", "LIM"},
    {"WKS", "Dataset", "DST"},
    {"WKS", "Target", "E-PUR / TAK / STR / WEA / APP / FEA / MOD"},
    // MethodStep.
    {"MDS", "BaseComponent", "APP / MOD / FEA / DST"},
    {"MDS", "TriedComponent", "APP / MOD / FEA / DST"},
    {"MDS", "Condition", "LIM / E-MDS"},
    {"MDS", "Dataset", "DST"},
    {"MDS", "Target", "E-PUR / TAK / STR / WEA / APP / FEA / MOD"},
    // Finding.
    {"FIN", "Finder", "OG"},
    {"FIN", "Content", "E-FAC / E-CMP"},
    // ExperimentCompare.
    {"CMP", "Arg1", "E-FAC / APP / MOD / FEA / DST"},
    {"CMP", "Arg2", "E-FAC / APP / MOD / FEA / DST"},
    {"CMP", "Condition", "LIM / E-FAC"},
    {"CMP", "Dataset", "DST"},
    {"CMP", "Result", "STR / WEA"},
    {"CMP", "Metrics", "TAK"},
    {"CMP", "Extent", "DEG"},
    // OutcomeFact.
    {"FAC", "Subject", "APP / MOD / FEA / STR / WEA / TAK / DST"},
    {"FAC", "Object", "APP / MOD / FEA / STR / WEA / TAK / DST"},
    {"FAC", "Condition", "LIM / E-FAC"},
    {"FAC", "Reason", "LIM / E-FAC"},
    {"FAC", "Dataset", "DST"},
    {"FAC", "Target", "E-PUR / TAK / STR / WEA"},
    {"FAC", "Extent", "DEG"},
};

bool HasSubeventPrefix(std::string_view s) {
  return s.substr(0, kSubeventPrefix.size()) == kSubeventPrefix;
}

std::unordered_map<std::string, int> IndexNames(
    const std::vector<std::string> &names, const char *what) {
  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) {
      throw SchemaError(std::string("empty ") + what + " label");
    }
    if (!index.emplace(names[i], static_cast<int>(i)).second) {
      throw SchemaError(std::string("duplicate ") + what + " '" + names[i] +
                        "'");
    }
  }
  return index;
}

std::vector<std::string> ReadStringList(const nlohmann::json &obj,
                                        const char *key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(std::string("missing key '") + key + "'");
  }
  if (!it->is_array()) {
    throw SchemaError(std::string("'") + key + "' must be a list");
  }
  std::vector<std::string> out;
  for (const auto &v : *it) {
    if (!v.is_string()) {
      throw SchemaError(std::string("'") + key + "' must contain strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

bool RoleConstraint::AllowsFiller(NuggetTypeId type) const {
  return std::find(allowed_fillers.begin(), allowed_fillers.end(), type) !=
         allowed_fillers.end();
}

bool RoleConstraint::AllowsSubevent(EventTypeId type) const {
  return std::find(allowed_subevent_types.begin(),
                   allowed_subevent_types.end(),
                   type) != allowed_subevent_types.end();
}

const Schema &Schema::Default() {
  static const Schema *schema = new Schema(BuildDefault());
  return *schema;
}

Schema Schema::BuildDefault() {
  std::vector<RawRow> rows;
  for (const DefaultRow &d : kDefaultRows) {
    RawRow row{d.event_type, d.role, {}, {}};
    std::istringstream in(d.constrained);
    std::string token;
    while (in >> token) {
      if (token == "/") continue;
      if (HasSubeventPrefix(token)) {
        row.subevent_types.push_back(token);
      } else {
        row.fillers.push_back(token);
      }
    }
    rows.push_back(std::move(row));
  }
  return Build({std::begin(kDefaultEventTypes), std::end(kDefaultEventTypes)},
               {std::begin(kDefaultRoles), std::end(kDefaultRoles)},
               {std::begin(kDefaultNuggetTypes), std::end(kDefaultNuggetTypes)},
               rows);
}

Schema Schema::Build(std::vector<std::string> event_types,
                     std::vector<std::string> roles,
                     std::vector<std::string> nugget_types,
                     const std::vector<RawRow> &rows) {
  if (event_types.empty()) throw SchemaError("schema has no event types");

  Schema s;
  s.event_types_ = std::move(event_types);
  s.roles_ = std::move(roles);
  s.nugget_types_ = std::move(nugget_types);
  s.event_type_index_ = IndexNames(s.event_types_, "event type");
  s.role_index_ = IndexNames(s.roles_, "argument role");
  s.nugget_type_index_ = IndexNames(s.nugget_types_, "nugget type");
  s.pair_index_.assign(s.event_types_.size() * s.roles_.size(), -1);

  for (const RawRow &raw : rows) {
    auto et = s.FindEventType(raw.event_type);
    if (!et) {
      throw SchemaError("constraint references unknown event type '" +
                        raw.event_type + "'");
    }
    auto role = s.FindRole(raw.role);
    if (!role) {
      throw SchemaError("constraint references unknown role '" + raw.role +
                        "'");
    }
    int &slot = s.pair_index_[et->value * s.roles_.size() + role->value];
    if (slot >= 0) {
      throw SchemaError("duplicate constraint row (" + raw.event_type + ", " +
                        raw.role + ")");
    }
    RoleConstraint row;
    row.event_type = *et;
    row.role = *role;
    for (const std::string &f : raw.fillers) {
      auto nt = s.FindNuggetType(f);
      if (!nt) {
        throw SchemaError("constraint (" + raw.event_type + ", " + raw.role +
                          ") references unknown nugget type '" + f + "'");
      }
      if (row.AllowsFiller(*nt)) {
        throw SchemaError("constraint (" + raw.event_type + ", " + raw.role +
                          ") lists filler '" + f + "' twice");
      }
      row.allowed_fillers.push_back(*nt);
    }
    for (const std::string &e : raw.subevent_types) {
      if (!HasSubeventPrefix(e)) {
        throw SchemaError("sub-event entry '" + e + "' lacks the E- prefix");
      }
      auto sub = s.FindEventType(std::string_view(e).substr(
          kSubeventPrefix.size()));
      if (!sub) {
        throw SchemaError("constraint (" + raw.event_type + ", " + raw.role +
                          ") references undefined sub-event type '" + e + "'");
      }
      if (row.AllowsSubevent(*sub)) {
        throw SchemaError("constraint (" + raw.event_type + ", " + raw.role +
                          ") lists '" + e + "' twice");
      }
      row.allowed_subevent_types.push_back(*sub);
    }
    slot = static_cast<int>(s.constraints_.size());
    s.constraints_.push_back(std::move(row));
  }
  return s;
}

Schema Schema::FromJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw FormatError(std::string("schema is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("schema must be a JSON object");
  for (const auto &[key, value] : doc.items()) {
    if (key != "event_types" && key != "argument_roles" &&
        key != "nugget_types" && key != "constraints") {
      throw SchemaError("unknown schema key '" + key + "'");
    }
  }
  std::vector<std::string> event_types = ReadStringList(doc, "event_types");
  std::vector<std::string> roles = ReadStringList(doc, "argument_roles");
  std::vector<std::string> nugget_types = ReadStringList(doc, "nugget_types");

  auto it = doc.find("constraints");
  if (it == doc.end() || !it->is_array()) {
    throw SchemaError("'constraints' must be a list");
  }
  std::vector<RawRow> rows;
  for (const auto &c : *it) {
    if (!c.is_object()) throw SchemaError("constraint rows must be objects");
    for (const auto &[key, value] : c.items()) {
      if (key != "event_type" && key != "role" && key != "fillers" &&
          key != "subevent_types") {
        throw SchemaError("unknown constraint key '" + key + "'");
      }
    }
    if (!c.contains("event_type") || !c["event_type"].is_string() ||
        !c.contains("role") || !c["role"].is_string()) {
      throw SchemaError("constraint rows need string event_type and role");
    }
    RawRow row;
    row.event_type = c["event_type"].get<std::string>();
    row.role = c["role"].get<std::string>();
    if (c.contains("fillers")) row.fillers = ReadStringList(c, "fillers");
    if (c.contains("subevent_types")) {
      row.subevent_types = ReadStringList(c, "subevent_types");
    }
    rows.push_back(std::move(row));
  }
  return Build(std::move(event_types), std::move(roles),
               std::move(nugget_types), rows);
}

Schema Schema::FromFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open schema file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromJson(buffer.str());
}

std::string Schema::ToJson() const {
  ordered_json out;
  out["event_types"] = event_types_;
  out["argument_roles"] = roles_;
  out["nugget_types"] = nugget_types_;
  ordered_json rows = ordered_json::array();
  for (const RoleConstraint &c : constraints_) {
    ordered_json row;
    row["event_type"] = name(c.event_type);
    row["role"] = name(c.role);
    ordered_json fillers = ordered_json::array();
    for (NuggetTypeId f : c.allowed_fillers) fillers.push_back(name(f));
    row["fillers"] = fillers;
    ordered_json subs = ordered_json::array();
    for (EventTypeId e : c.allowed_subevent_types) {
      subs.push_back(std::string(kSubeventPrefix) + name(e));
    }
    row["subevent_types"] = subs;
    rows.push_back(std::move(row));
  }
  out["constraints"] = std::move(rows);
  return out.dump(2) + "\n";
}

std::optional<EventTypeId> Schema::FindEventType(std::string_view name) const {
  auto it = event_type_index_.find(std::string(name));
  if (it == event_type_index_.end()) return std::nullopt;
  return EventTypeId{it->second};
}

std::optional<RoleId> Schema::FindRole(std::string_view name) const {
  auto it = role_index_.find(std::string(name));
  if (it == role_index_.end()) return std::nullopt;
  return RoleId{it->second};
}

std::optional<NuggetTypeId> Schema::FindNuggetType(
    std::string_view name) const {
  auto it = nugget_type_index_.find(std::string(name));
  if (it == nugget_type_index_.end()) return std::nullopt;
  return NuggetTypeId{it->second};
}

EventTypeId Schema::event_type(std::string_view name) const {
  auto id = FindEventType(name);
  if (!id) {
    throw UnknownLabelError("unknown event type '" + std::string(name) + "'");
  }
  return *id;
}

RoleId Schema::role(std::string_view name) const {
  auto id = FindRole(name);
  if (!id) {
    throw UnknownLabelError("unknown argument role '" + std::string(name) +
                            "'");
  }
  return *id;
}

NuggetTypeId Schema::nugget_type(std::string_view name) const {
  auto id = FindNuggetType(name);
  if (!id) {
    throw UnknownLabelError("unknown nugget type '" + std::string(name) + "'");
  }
  return *id;
}

const std::string &Schema::name(EventTypeId id) const {
  return event_types_.at(id.value);
}

const std::string &Schema::name(RoleId id) const { return roles_.at(id.value); }

const std::string &Schema::name(NuggetTypeId id) const {
  return nugget_types_.at(id.value);
}

bool Schema::Valid(EventTypeId event_type, RoleId role) const {
  return Constraint(event_type, role) != nullptr;
}

bool Schema::Valid(std::string_view event_type, std::string_view role) const {
  return Valid(this->event_type(event_type), this->role(role));
}

const RoleConstraint *Schema::Constraint(EventTypeId event_type,
                                         RoleId role) const {
  if (event_type.value < 0 || event_type.value >= num_event_types() ||
      role.value < 0 || role.value >= num_roles()) {
    return nullptr;
  }
  int row = pair_index_[event_type.value * roles_.size() + role.value];
  return row < 0 ? nullptr : &constraints_[row];
}

std::vector<const RoleConstraint *> Schema::RowsFor(
    EventTypeId event_type) const {
  std::vector<const RoleConstraint *> rows;
  for (const RoleConstraint &c : constraints_) {
    if (c.event_type == event_type) rows.push_back(&c);
  }
  return rows;
}

std::vector<RoleId> Schema::RolesForSubevent(EventTypeId main,
                                             EventTypeId sub) const {
  std::vector<RoleId> roles;
  for (const RoleConstraint &c : constraints_) {
    if (c.event_type == main && c.AllowsSubevent(sub)) roles.push_back(c.role);
  }
  return roles;
}

std::vector<std::string> Schema::RolesForSubevent(std::string_view main,
                                                  std::string_view sub) const {
  std::vector<std::string> names;
  for (RoleId r : RolesForSubevent(event_type(main), event_type(sub))) {
    names.push_back(name(r));
  }
  return names;
}

bool Schema::operator==(const Schema &other) const {
  return event_types_ == other.event_types_ && roles_ == other.roles_ &&
         nugget_types_ == other.nugget_types_ &&
         constraints_ == other.constraints_;
}

}  // namespace evgrid
