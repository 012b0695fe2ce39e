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

#include "evgrid/relation_grid.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <tuple>

#include "evgrid/error.h"
#include "json.hpp"

namespace evgrid {
namespace {

constexpr std::string_view kEventTypePrefix = "ET:";
constexpr std::string_view kRolePrefix = "AT:";

}  // namespace

int VocabularySize(const Schema &schema) {
  return 2 + schema.num_event_types() + schema.num_roles();
}

int VocabularyIndex(RelationLabel label, const Schema &schema) {
  switch (label.kind) {
    case RelationKind::kHeadTail: return 0;
    case RelationKind::kEventArgument: return 1;
    case RelationKind::kEventType: return 2 + label.id;
    case RelationKind::kRole: return 2 + schema.num_event_types() + label.id;
  }
  return -1;
}

RelationLabel LabelAt(int index, const Schema &schema) {
  if (index < 0 || index >= VocabularySize(schema)) {
    throw UnknownLabelError("vocabulary index " + std::to_string(index) +
                            " out of range");
  }
  if (index == 0) return RelationLabel::HeadTail();
  if (index == 1) return RelationLabel::EventArgument();
  index -= 2;
  if (index < schema.num_event_types()) {
    return RelationLabel::EventType(EventTypeId{index});
  }
  return RelationLabel::Role(RoleId{index - schema.num_event_types()});
}

std::string LabelName(RelationLabel label, const Schema &schema) {
  switch (label.kind) {
    case RelationKind::kHeadTail: return "HTL";
    case RelationKind::kEventArgument: return "EAL";
    case RelationKind::kEventType:
      return std::string(kEventTypePrefix) +
             schema.name(EventTypeId{label.id});
    case RelationKind::kRole:
      return std::string(kRolePrefix) + schema.name(RoleId{label.id});
  }
  return {};
}

RelationLabel ParseLabel(std::string_view name, const Schema &schema) {
  if (name == "HTL") return RelationLabel::HeadTail();
  if (name == "EAL") return RelationLabel::EventArgument();
  if (name.starts_with(kEventTypePrefix)) {
    return RelationLabel::EventType(
        schema.event_type(name.substr(kEventTypePrefix.size())));
  }
  if (name.starts_with(kRolePrefix)) {
    return RelationLabel::Role(schema.role(name.substr(kRolePrefix.size())));
  }
  throw UnknownLabelError("unknown relation label '" + std::string(name) +
                          "'");
}

RelationGrid::RelationGrid(int length) : length_(length) {
  if (length < 0) throw InputError("grid length must be non-negative");
}

void RelationGrid::Add(int row, int col, RelationLabel label) {
  if (row < 0 || row >= length_ || col < 0 || col >= length_) {
    throw InputError("cell (" + std::to_string(row) + ", " +
                     std::to_string(col) + ") outside grid of length " +
                     std::to_string(length_));
  }
  if (label.kind == RelationKind::kHeadTail && row == col) {
    throw InputError("HTL on the diagonal at " + std::to_string(row));
  }
  GridCell cell{row, col, label};
  auto it = std::lower_bound(cells_.begin(), cells_.end(), cell);
  if (it == cells_.end() || *it != cell) cells_.insert(it, cell);
}

bool RelationGrid::Contains(int row, int col, RelationLabel label) const {
  return std::binary_search(cells_.begin(), cells_.end(),
                            GridCell{row, col, label});
}

bool RelationGrid::Remove(int row, int col, RelationLabel label) {
  GridCell cell{row, col, label};
  auto it = std::lower_bound(cells_.begin(), cells_.end(), cell);
  if (it == cells_.end() || *it != cell) return false;
  cells_.erase(it);
  return true;
}

std::vector<RelationLabel> RelationGrid::LabelsAt(int row, int col) const {
  auto lo = std::lower_bound(
      cells_.begin(), cells_.end(), std::make_pair(row, col),
      [](const GridCell &c, const std::pair<int, int> &key) {
        return std::tie(c.row, c.col) < std::tie(key.first, key.second);
      });
  std::vector<RelationLabel> labels;
  for (auto it = lo; it != cells_.end() && it->row == row && it->col == col;
       ++it) {
    labels.push_back(it->label);
  }
  return labels;
}

GridDiff DiffGrids(const RelationGrid &a, const RelationGrid &b) {
  if (a.length() != b.length()) {
    throw InputError("grid lengths differ: " + std::to_string(a.length()) +
                     " vs " + std::to_string(b.length()));
  }
  GridDiff diff;
  std::set_difference(a.cells().begin(), a.cells().end(), b.cells().begin(),
                      b.cells().end(), std::back_inserter(diff.only_in_a));
  std::set_difference(b.cells().begin(), b.cells().end(), a.cells().begin(),
                      a.cells().end(), std::back_inserter(diff.only_in_b));
  return diff;
}

std::string SerializeGrid(const std::string &doc_id, const RelationGrid &grid,
                          const Schema &schema) {
  std::vector<std::tuple<int, int, std::string>> cells;
  cells.reserve(grid.cells().size());
  for (const GridCell &c : grid.cells()) {
    cells.emplace_back(c.row, c.col, LabelName(c.label, schema));
  }
  std::sort(cells.begin(), cells.end());

  nlohmann::ordered_json out;
  out["doc_id"] = doc_id;
  out["length"] = grid.length();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto &[row, col, name] : cells) {
    list.push_back(nlohmann::ordered_json::array({row, col, name}));
  }
  out["cells"] = std::move(list);
  return out.dump();
}

GridRecord ParseGrid(std::string_view text, const Schema &schema, int line) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw FormatError(std::string("invalid JSON: ") + e.what(), line);
  }
  if (!obj.is_object()) throw FormatError("grid must be an object", line);
  for (const auto &[key, value] : obj.items()) {
    if (key != "doc_id" && key != "length" && key != "cells") {
      throw FormatError("unknown key '" + key + "' in grid", line);
    }
  }
  if (!obj.contains("doc_id") || !obj["doc_id"].is_string()) {
    throw FormatError("grid needs a string doc_id", line);
  }
  if (!obj.contains("length") || !obj["length"].is_number_integer() ||
      obj["length"].get<int>() < 0) {
    throw FormatError("grid needs a non-negative integer length", line);
  }
  GridRecord record{obj["doc_id"].get<std::string>(),
                    RelationGrid(obj["length"].get<int>()), 0};
  auto cells = obj.find("cells");
  if (cells == obj.end() || !cells->is_array()) {
    throw FormatError("grid needs a cells list", line);
  }
  for (const auto &c : *cells) {
    if (!c.is_array() || c.size() != 3 || !c[0].is_number_integer() ||
        !c[1].is_number_integer() || !c[2].is_string()) {
      throw FormatError("cells must be [row, col, \"LABEL\"] triples", line);
    }
    int row = c[0].get<int>();
    int col = c[1].get<int>();
    RelationLabel label;
    try {
      label = ParseLabel(c[2].get<std::string>(), schema);
    } catch (const UnknownLabelError &e) {
      throw FormatError(e.what(), line);
    }
    if (label.kind == RelationKind::kHeadTail && row == col) {
      ++record.dropped_cells;
      continue;
    }
    try {
      record.grid.Add(row, col, label);
    } catch (const InputError &e) {
      throw FormatError(e.what(), line);
    }
  }
  return record;
}

std::vector<GridRecord> ReadGrids(std::istream &in, const Schema &schema) {
  std::vector<GridRecord> grids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    grids.push_back(ParseGrid(line, schema, line_no));
  }
  return grids;
}

std::vector<GridRecord> ReadGridFile(const std::string &path,
                                     const Schema &schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return ReadGrids(in, schema);
  } catch (const FormatError &e) {
    throw FormatError(path + ": " + e.what(), 0, e.line());
  }
}

void WriteGrids(std::ostream &out, std::span<const GridRecord> grids,
                const Schema &schema) {
  for (const GridRecord &g : grids) {
    out << SerializeGrid(g.doc_id, g.grid, schema) << '\n';
  }
}

}  // namespace evgrid
