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

#include "evgrid/validation.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "json.hpp"

namespace evgrid {
namespace {

class DocumentChecker {
 public:
  DocumentChecker(const Document &doc, const Schema &schema,
                  ValidationReport *report)
      : doc_(doc), schema_(schema), report_(report) {}

  void Run() {
    if (doc_.tokens.empty()) {
      Add("", IssueKind::kEmptyDocument, "document has no tokens");
    }
    std::set<std::string> ids;
    std::map<std::pair<Nugget, std::string>, std::string> keys;
    for (const Event &e : doc_.events) {
      if (!ids.insert(e.event_id).second) {
        Add(e.event_id, IssueKind::kDuplicateEventId,
            "event id '" + e.event_id + "' is used twice");
      }
      auto [it, fresh] = keys.emplace(std::make_pair(e.trigger, e.event_type),
                                      e.event_id);
      if (!fresh) {
        Add(e.event_id, IssueKind::kDuplicateEvent,
            "same type and trigger as event '" + it->second +
                "'; arguments are merged",
            Severity::kWarning);
      }
      CheckEvent(e);
    }
  }

 private:
  void Add(const std::string &event_id, IssueKind kind, std::string message,
           Severity severity = Severity::kError) {
    report_->issues.push_back(
        {doc_.doc_id, event_id, kind, severity, std::move(message)});
  }

  void CheckNugget(const Event &e, const Nugget &n, const std::string &what) {
    if (n.indices.empty()) {
      Add(e.event_id, IssueKind::kEmptyNugget, what + " has no tokens");
      return;
    }
    std::set<int> seen;
    for (int i : n.indices) {
      if (i < 0 || i >= doc_.length()) {
        Add(e.event_id, IssueKind::kIndexOutOfRange,
            what + " index " + std::to_string(i) + " outside [0, " +
                std::to_string(doc_.length()) + ")");
      }
      if (!seen.insert(i).second) {
        Add(e.event_id, IssueKind::kRepeatedIndex,
            what + " repeats index " + std::to_string(i));
      }
    }
  }

  void CheckEvent(const Event &e) {
    CheckNugget(e, e.trigger, "trigger");
    if (!e.trigger_nugget_type.empty() &&
        !schema_.FindNuggetType(e.trigger_nugget_type)) {
      Add(e.event_id, IssueKind::kUnknownNuggetType,
          "trigger nugget type '" + e.trigger_nugget_type + "' is unknown");
    }
    auto type = schema_.FindEventType(e.event_type);
    if (!type) {
      Add(e.event_id, IssueKind::kUnknownEventType,
          "unknown event type '" + e.event_type + "'");
    }
    for (const Argument &a : e.arguments) {
      const std::string what = "argument '" + a.role + "'";
      CheckNugget(e, a.nugget, what);
      auto role = schema_.FindRole(a.role);
      if (!role) {
        Add(e.event_id, IssueKind::kUnknownRole,
            "unknown argument role '" + a.role + "'");
        continue;
      }
      if (!type) continue;
      const RoleConstraint *row = schema_.Constraint(*type, *role);
      if (row == nullptr) {
        Add(e.event_id, IssueKind::kInvalidRole,
            "role '" + a.role + "' is not valid for event type '" +
                e.event_type + "'");
        continue;
      }
      if (!a.nugget_type.empty()) CheckFiller(e, a, *row);
    }
  }

  void CheckFiller(const Event &e, const Argument &a,
                   const RoleConstraint &row) {
    std::string_view nt = a.nugget_type;
    if (nt.starts_with(kSubeventPrefix)) {
      auto sub = schema_.FindEventType(nt.substr(kSubeventPrefix.size()));
      if (!sub) {
        Add(e.event_id, IssueKind::kUnknownNuggetType,
            "sub-event filler '" + a.nugget_type + "' names no event type");
      } else if (!row.AllowsSubevent(*sub)) {
        Add(e.event_id, IssueKind::kFillerViolation,
            "role '" + a.role + "' of '" + e.event_type + "' does not admit " +
                a.nugget_type);
      }
      return;
    }
    auto filler = schema_.FindNuggetType(nt);
    if (!filler) {
      Add(e.event_id, IssueKind::kUnknownNuggetType,
          "unknown nugget type '" + a.nugget_type + "'");
    } else if (!row.AllowsFiller(*filler)) {
      Add(e.event_id, IssueKind::kFillerViolation,
          "role '" + a.role + "' of '" + e.event_type + "' does not admit " +
              a.nugget_type);
    }
  }

  const Document &doc_;
  const Schema &schema_;
  ValidationReport *report_;
};

}  // namespace

std::string_view IssueKindName(IssueKind kind) {
  switch (kind) {
    case IssueKind::kEmptyDocument: return "empty_document";
    case IssueKind::kEmptyNugget: return "empty_nugget";
    case IssueKind::kRepeatedIndex: return "repeated_index";
    case IssueKind::kIndexOutOfRange: return "index_out_of_range";
    case IssueKind::kUnknownEventType: return "unknown_event_type";
    case IssueKind::kUnknownRole: return "unknown_role";
    case IssueKind::kInvalidRole: return "invalid_role";
    case IssueKind::kUnknownNuggetType: return "unknown_nugget_type";
    case IssueKind::kFillerViolation: return "filler_violation";
    case IssueKind::kDuplicateEventId: return "duplicate_event_id";
    case IssueKind::kDuplicateDocId: return "duplicate_doc_id";
    case IssueKind::kDuplicateEvent: return "duplicate_event";
  }
  return "unknown";
}

int ValidationReport::num_errors() const {
  return static_cast<int>(std::count_if(
      issues.begin(), issues.end(),
      [](const ValidationIssue &i) { return i.severity == Severity::kError; }));
}

int ValidationReport::num_warnings() const {
  return static_cast<int>(issues.size()) - num_errors();
}

int ValidationReport::Count(IssueKind kind) const {
  return static_cast<int>(
      std::count_if(issues.begin(), issues.end(),
                    [kind](const ValidationIssue &i) { return i.kind == kind; }));
}

void ValidationReport::Merge(const ValidationReport &other) {
  documents += other.documents;
  issues.insert(issues.end(), other.issues.begin(), other.issues.end());
}

std::string ValidationReport::ToJson() const {
  nlohmann::ordered_json out;
  out["documents"] = documents;
  out["errors"] = num_errors();
  out["warnings"] = num_warnings();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const ValidationIssue &i : issues) {
    nlohmann::ordered_json item;
    item["doc_id"] = i.doc_id;
    item["event_id"] = i.event_id;
    item["kind"] = IssueKindName(i.kind);
    item["severity"] = i.severity == Severity::kError ? "error" : "warning";
    item["message"] = i.message;
    list.push_back(std::move(item));
  }
  out["issues"] = std::move(list);
  return out.dump(2) + "\n";
}

ValidationReport ValidateDocument(const Document &doc, const Schema &schema) {
  ValidationReport report;
  report.documents = 1;
  DocumentChecker(doc, schema, &report).Run();
  return report;
}

ValidationReport ValidateCorpus(std::span<const Document> docs,
                                const Schema &schema) {
  ValidationReport report;
  std::set<std::string> doc_ids;
  for (const Document &doc : docs) {
    report.Merge(ValidateDocument(doc, schema));
    if (!doc_ids.insert(doc.doc_id).second) {
      report.issues.push_back({doc.doc_id, "", IssueKind::kDuplicateDocId,
                               Severity::kError,
                               "doc_id '" + doc.doc_id + "' is used twice"});
    }
  }
  return report;
}

}  // namespace evgrid
