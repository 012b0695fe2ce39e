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

#ifndef EVGRID_CORPUS_H_
#define EVGRID_CORPUS_H_

#include <compare>
#include <string>
#include <vector>

namespace evgrid {

// A possibly discontinuous word span. Indices are kept in annotation reading
// order, which need not be document order, so [7, 2] and [2, 7] are different
// nuggets.
struct Nugget {
  std::vector<int> indices;

  int head() const { return indices.front(); }
  int tail() const { return indices.back(); }
  int size() const { return static_cast<int>(indices.size()); }

  auto operator<=>(const Nugget &) const = default;
};

struct Argument {
  std::string role;
  Nugget nugget;
  // Optional lexical annotation ("MOD", or "E-PUR" for sub-event fillers).
  // Empty when absent. Never part of span identity.
  std::string nugget_type;

  bool operator==(const Argument &) const = default;
};

struct Event {
  std::string event_id;
  std::string event_type;
  Nugget trigger;
  std::string trigger_nugget_type;
  std::vector<Argument> arguments;

  bool operator==(const Event &) const = default;
};

struct Document {
  std::string doc_id;
  std::vector<std::string> tokens;
  std::vector<Event> events;

  int length() const { return static_cast<int>(tokens.size()); }

  bool operator==(const Document &) const = default;
};

// A main event whose argument is the trigger of another event. The indices
// locate both events in the document's event list.
struct SubEventLink {
  std::string main_event_id;
  std::string sub_event_id;
  std::string role;
  int main_index = -1;
  int sub_index = -1;

  bool operator==(const SubEventLink &) const = default;
};

// Merges events sharing (event_type, trigger), drops repeated arguments and
// sorts events by (trigger, type) and arguments by (span, role). Event ids
// are kept; a merged event keeps the first id. Returns the number of events
// merged away.
int CanonicalizeDocument(Document &doc);

// Rewrites event ids as E1..En in the current event order.
void RenumberEvents(Document &doc);

}  // namespace evgrid

#endif  // EVGRID_CORPUS_H_
