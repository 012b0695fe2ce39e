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

#ifndef EVGRID_VALIDATION_H_
#define EVGRID_VALIDATION_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evgrid/corpus.h"
#include "evgrid/schema.h"

namespace evgrid {

enum class IssueKind {
  kEmptyDocument,
  kEmptyNugget,
  kRepeatedIndex,
  kIndexOutOfRange,
  kUnknownEventType,
  kUnknownRole,
  kInvalidRole,
  kUnknownNuggetType,
  kFillerViolation,
  kDuplicateEventId,
  kDuplicateDocId,
  // Two events with the same (type, trigger); their arguments are merged.
  kDuplicateEvent,
};

enum class Severity { kError, kWarning };

std::string_view IssueKindName(IssueKind kind);

struct ValidationIssue {
  std::string doc_id;
  std::string event_id;
  IssueKind kind;
  Severity severity = Severity::kError;
  std::string message;
};

struct ValidationReport {
  int documents = 0;
  std::vector<ValidationIssue> issues;

  int num_errors() const;
  int num_warnings() const;
  bool ok() const { return num_errors() == 0; }
  int Count(IssueKind kind) const;

  // Reports merge associatively.
  void Merge(const ValidationReport &other);

  // {"documents": n, "errors": n, "warnings": n, "issues": [...]}
  std::string ToJson() const;
};

ValidationReport ValidateDocument(const Document &doc, const Schema &schema);

// Per-document checks plus doc_id collisions across the corpus.
ValidationReport ValidateCorpus(std::span<const Document> docs,
                                const Schema &schema);

}  // namespace evgrid

#endif  // EVGRID_VALIDATION_H_
