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

// JSONL corpus files: one document object per line.
//
//   {"doc_id": "...", "tokens": ["..."],
//    "events": [{"event_id": "E1", "event_type": "PUR",
//                "trigger": {"indices": [5], "nugget_type": "..."},
//                "arguments": [{"role": "Aim", "indices": [7, 8],
//                               "nugget_type": "MOD"}]}]}
//
// nugget_type is optional everywhere. Index lists keep annotation order.

#ifndef EVGRID_CORPUS_IO_H_
#define EVGRID_CORPUS_IO_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evgrid/corpus.h"

namespace evgrid {

enum class ParseMode {
  // Unknown keys are errors.
  kStrict,
  // Unknown keys are ignored.
  kLenient,
};

// Throws FormatError (with `line` when nonzero) on malformed input.
Document ParseDocument(std::string_view json, ParseMode mode = ParseMode::kStrict,
                       int line = 0);

// Single-line JSON with a fixed key order.
std::string SerializeDocument(const Document &doc);

// Blank lines are skipped.
std::vector<Document> ReadCorpus(std::istream &in,
                                 ParseMode mode = ParseMode::kStrict);
std::vector<Document> ReadCorpusFile(const std::string &path,
                                     ParseMode mode = ParseMode::kStrict);

void WriteCorpus(std::ostream &out, std::span<const Document> docs);
void WriteCorpusFile(const std::string &path, std::span<const Document> docs);

}  // namespace evgrid

#endif  // EVGRID_CORPUS_IO_H_
