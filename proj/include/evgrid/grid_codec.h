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

// Conversion between event annotations and word-word relation grids.
//
// Encoding writes, for every nugget [i1, ..., ik], HTL at each (ij, ij+1)
// and a closing label at (ik, i1): ET:<type> for triggers, AT:<role> for
// arguments. Each (trigger, argument) pair adds EAL at (trigger head,
// argument head). A sub-event trigger that fills a role of a main event is
// just an argument of that event, so it carries both its ET and its AT label.
//
// Decoding recovers nuggets by walking HTL chains from every head that has a
// closing label and keeping only chains whose last token closes back to the
// head. Closed mentions become triggers or arguments according to their
// closing labels, and arguments attach to every trigger linked by EAL whose
// event type admits the role. Arguments attached to no trigger are dropped.

#ifndef EVGRID_GRID_CODEC_H_
#define EVGRID_GRID_CODEC_H_

#include <string>
#include <vector>

#include "evgrid/corpus.h"
#include "evgrid/relation_grid.h"
#include "evgrid/schema.h"

namespace evgrid {

struct DecodeConfig {
  // Chains longer than this are abandoned.
  int max_nugget_length = 30;
  // Path prefixes explored per head before the head is abandoned.
  int max_paths_per_head = 64;

  // Throws InputError when a bound is below 1.
  void Validate() const;
};

// Everything the decoder had to cut, drop or guess. A grid produced by
// Encode() from a document that satisfies the round-trip precondition
// decodes with every counter at zero.
struct DecodeDiagnostics {
  int mentions = 0;
  // Chains that still had unexplored HTL successors at max_nugget_length.
  int long_paths_abandoned = 0;
  // Heads whose search stopped at max_paths_per_head.
  int heads_truncated = 0;
  // More than one closed chain from the same head to the same tail.
  int shared_closures = 0;
  // Argument mentions with no EAL to a trigger admitting their role.
  int arguments_dropped = 0;
  // Trigger-to-trigger EAL without an argument label at the sub trigger;
  // the role was taken from the schema's sub-event table.
  int fallback_subevent_links = 0;
  // Fallback links where more than one role qualified; the first table row
  // was used.
  int ambiguous_subevent_roles = 0;
  // Trigger-to-trigger EAL for which the schema offers no role.
  int unexplained_trigger_links = 0;

  bool clean() const;
  void Merge(const DecodeDiagnostics &other);
  std::string ToJson() const;
};

struct DecodeResult {
  // Sorted by (trigger, type name); ids are E1..En in that order. Arguments
  // are sorted by (span, role).
  std::vector<Event> events;
  std::vector<SubEventLink> links;
  DecodeDiagnostics diagnostics;
};

// Throws InputError for out-of-range or repeated indices, empty nuggets,
// unknown labels and roles the event type does not admit.
RelationGrid Encode(const Document &doc, const Schema &schema);

// Never throws on grid content; problems surface in the diagnostics.
DecodeResult Decode(const RelationGrid &grid, const Schema &schema,
                    const DecodeConfig &config = {});

// Decode() wrapped into a document. `tokens` must match the grid length.
Document DecodeDocument(const RelationGrid &grid, const std::string &doc_id,
                        std::vector<std::string> tokens, const Schema &schema,
                        const DecodeConfig &config = {},
                        DecodeDiagnostics *diagnostics = nullptr);

}  // namespace evgrid

#endif  // EVGRID_GRID_CODEC_H_
