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

// Sparse word-word relation grid. Cell (row, col) may carry several labels
// from the vocabulary {HTL, EAL} + event types + argument roles:
//
//   HTL (row -> col)       col follows row inside one nugget
//   ET:<type> (tail, head) closes a trigger nugget of that event type
//   AT:<role> (tail, head) closes an argument nugget of that role
//   EAL (head, head)       trigger head -> argument (or sub-event) head
//
// Grid files are JSONL, one grid per line:
//   {"doc_id": "...", "length": 12, "cells": [[row, col, "LABEL"], ...]}

#ifndef EVGRID_RELATION_GRID_H_
#define EVGRID_RELATION_GRID_H_

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evgrid/schema.h"

namespace evgrid {

enum class RelationKind : unsigned char {
  kHeadTail = 0,
  kEventArgument = 1,
  kEventType = 2,
  kRole = 3,
};

struct RelationLabel {
  RelationKind kind = RelationKind::kHeadTail;
  // Event type or role index for the closing kinds, 0 otherwise.
  int id = 0;

  static RelationLabel HeadTail() { return {RelationKind::kHeadTail, 0}; }
  static RelationLabel EventArgument() {
    return {RelationKind::kEventArgument, 0};
  }
  static RelationLabel EventType(EventTypeId t) {
    return {RelationKind::kEventType, t.value};
  }
  static RelationLabel Role(RoleId r) { return {RelationKind::kRole, r.value}; }

  // Labels that close a nugget at its (tail, head) cell.
  bool is_closing() const {
    return kind == RelationKind::kEventType || kind == RelationKind::kRole;
  }

  auto operator<=>(const RelationLabel &) const = default;
};

// 2 + |event types| + |roles|.
int VocabularySize(const Schema &schema);

// Position of a label in the flat vocabulary: HTL, EAL, event types in
// schema order, then roles in schema order.
int VocabularyIndex(RelationLabel label, const Schema &schema);
RelationLabel LabelAt(int index, const Schema &schema);

// "HTL", "EAL", "ET:<EventType>", "AT:<ArgumentRole>".
std::string LabelName(RelationLabel label, const Schema &schema);
// Throws UnknownLabelError.
RelationLabel ParseLabel(std::string_view name, const Schema &schema);

struct GridCell {
  int row = 0;
  int col = 0;
  RelationLabel label;

  auto operator<=>(const GridCell &) const = default;
};

class RelationGrid {
 public:
  explicit RelationGrid(int length = 0);

  int length() const { return length_; }

  // Set semantics. Throws InputError for out-of-range indices and for HTL on
  // the diagonal.
  void Add(int row, int col, RelationLabel label);
  void Add(const GridCell &cell) { Add(cell.row, cell.col, cell.label); }
  bool Contains(int row, int col, RelationLabel label) const;
  // Returns whether the cell was present.
  bool Remove(int row, int col, RelationLabel label);

  // Sorted by (row, col, label).
  const std::vector<GridCell> &cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }

  // Labels stored at one cell, in label order.
  std::vector<RelationLabel> LabelsAt(int row, int col) const;

  bool operator==(const RelationGrid &) const = default;

 private:
  int length_;
  std::vector<GridCell> cells_;
};

struct GridDiff {
  std::vector<GridCell> only_in_a;
  std::vector<GridCell> only_in_b;

  bool empty() const { return only_in_a.empty() && only_in_b.empty(); }
  int size() const {
    return static_cast<int>(only_in_a.size() + only_in_b.size());
  }
};

// Cell-level symmetric difference. Throws InputError on length mismatch.
GridDiff DiffGrids(const RelationGrid &a, const RelationGrid &b);

struct GridRecord {
  std::string doc_id;
  RelationGrid grid;
  // Cells in the file that no grid may hold (HTL on the diagonal). They are
  // dropped, never fatal.
  int dropped_cells = 0;
};

// One JSON line; cells ordered by (row, col, label name) so output is byte
// stable for a given schema-independent label spelling.
std::string SerializeGrid(const std::string &doc_id, const RelationGrid &grid,
                          const Schema &schema);

// Throws FormatError for malformed lines, unknown labels and out-of-range
// cells.
GridRecord ParseGrid(std::string_view json, const Schema &schema,
                     int line = 0);

std::vector<GridRecord> ReadGrids(std::istream &in, const Schema &schema);
std::vector<GridRecord> ReadGridFile(const std::string &path,
                                     const Schema &schema);
void WriteGrids(std::ostream &out, std::span<const GridRecord> grids,
                const Schema &schema);

}  // namespace evgrid

#endif  // EVGRID_RELATION_GRID_H_
