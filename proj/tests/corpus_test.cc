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

// Corpus model: nugget analysis, validation and JSONL I/O.

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "evgrid/corpus.h"
#include "evgrid/corpus_io.h"
#include "evgrid/error.h"
#include "evgrid/nugget_analysis.h"
#include "evgrid/validation.h"
#include "test_util.h"

namespace evgrid {
namespace {

using testing::Arg;
using testing::DataPath;
using testing::Doc;
using testing::Ev;

const Schema &S() { return Schema::Default(); }

// --- nugget forms -----------------------------------------------------------

// Independent oracle: discontinuous iff the sorted set is not an integer
// range; reverse iff the reading order is not strictly increasing.
NuggetForm OracleForm(const std::vector<int> &idx) {
  std::vector<int> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  NuggetForm f;
  f.discontinuous = sorted.back() - sorted.front() + 1 !=
                    static_cast<int>(sorted.size());
  f.reverse_order = !std::is_sorted(idx.begin(), idx.end()) ||
                    std::adjacent_find(idx.begin(), idx.end()) != idx.end();
  f.single_token = idx.size() == 1;
  return f;
}

TEST(NuggetFormTest, PlainContiguous) {
  NuggetForm f = ClassifyNugget({{3, 4, 5}});
  EXPECT_FALSE(f.discontinuous);
  EXPECT_FALSE(f.reverse_order);
  EXPECT_TRUE(f.plain());
}

TEST(NuggetFormTest, GapIsDiscontinuous) {
  NuggetForm f = ClassifyNugget({{3, 4, 9, 10}});
  EXPECT_EQ(f, OracleForm({3, 4, 9, 10}));
  EXPECT_TRUE(f.discontinuous);
  EXPECT_FALSE(f.reverse_order);
}

TEST(NuggetFormTest, ReverseOrderPairIsBoth) {
  NuggetForm f = ClassifyNugget({{7, 2}});
  EXPECT_EQ(f, OracleForm({7, 2}));
  EXPECT_TRUE(f.discontinuous);
  EXPECT_TRUE(f.reverse_order);
}

TEST(NuggetFormTest, SingleToken) {
  EXPECT_TRUE(ClassifyNugget({{4}}).single_token);
  EXPECT_TRUE(ClassifyNugget({{4}}).plain());
}

TEST(NuggetFormTest, MatchesOracleOnRandomNuggets) {
  testing::Rng rng(11);
  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<int> idx;
    std::set<int> seen;
    int n = rng.Int(1, 5);
    while (static_cast<int>(idx.size()) < n) {
      int v = rng.Int(0, 12);
      if (seen.insert(v).second) idx.push_back(v);
    }
    ASSERT_EQ(ClassifyNugget({idx}), OracleForm(idx));
  }
}

// --- overlaps -----------------------------------------------------------------

std::set<std::pair<Nugget, Nugget>> BruteOverlaps(const Document &doc) {
  std::set<Nugget> pool;
  for (const Event &e : doc.events) {
    pool.insert(e.trigger);
    for (const Argument &a : e.arguments) pool.insert(a.nugget);
  }
  std::vector<Nugget> v(pool.begin(), pool.end());
  std::set<std::pair<Nugget, Nugget>> out;
  for (size_t i = 0; i < v.size(); ++i) {
    for (size_t j = i + 1; j < v.size(); ++j) {
      bool shared = false;
      for (int a : v[i].indices) {
        for (int b : v[j].indices) shared = shared || a == b;
      }
      if (shared) out.insert({v[i], v[j]});
    }
  }
  return out;
}

std::set<std::pair<Nugget, Nugget>> Normalized(
    const std::vector<std::pair<Nugget, Nugget>> &pairs) {
  std::set<std::pair<Nugget, Nugget>> out;
  for (auto [a, b] : pairs) {
    if (b < a) std::swap(a, b);
    out.insert({a, b});
  }
  return out;
}

TEST(OverlapTest, SharedIndexGivesOnePair) {
  Document d = Doc("d", 6, {Ev("E1", "PUR", {1, 2}, {Arg("Aim", {2, 3})})});
  EXPECT_EQ(FindOverlaps(d).size(), 1u);
}

TEST(OverlapTest, DisjointGivesNone) {
  Document d = Doc("d", 6, {Ev("E1", "PUR", {1, 2}, {Arg("Aim", {3, 4})})});
  EXPECT_TRUE(FindOverlaps(d).empty());
}

TEST(OverlapTest, IdenticalSpansCollapse) {
  Document d = Doc("d", 6,
                   {Ev("E1", "PUR", {1, 2}), Ev("E2", "ITT", {1, 2})});
  EXPECT_TRUE(FindOverlaps(d).empty());
  EXPECT_TRUE(BruteOverlaps(d).empty());
}

TEST(OverlapTest, MatchesBruteForceOnRandomDocuments) {
  testing::DocumentGenerator gen(S(), 5);
  for (int i = 0; i < 300; ++i) {
    Document d = gen.Next("d" + std::to_string(i));
    ASSERT_EQ(Normalized(FindOverlaps(d)), BruteOverlaps(d));
  }
}

TEST(NuggetPoolTest, CollectDeduplicates) {
  Document d = Doc("d", 8,
                   {Ev("E1", "PUR", {1}, {Arg("Aim", {3, 4})}),
                    Ev("E2", "ITT", {5}, {Arg("Target", {3, 4})})});
  EXPECT_EQ(CollectNuggets(d).size(), 3u);
}

// --- sub-events -----------------------------------------------------------------

TEST(SubEventTest, TargetSpanningPurposeTrigger) {
  Document d = Doc("d", 10,
                   {Ev("E3", "PRP", {1}, {Arg("Target", {3, 4}, "E-PUR")}),
                    Ev("E4", "PUR", {3, 4}, {Arg("Aim", {5, 6})})});
  std::vector<SubEventLink> links = FindSubEvents(d, S());
  ASSERT_EQ(links.size(), 1u);
  EXPECT_EQ(links[0].main_event_id, "E3");
  EXPECT_EQ(links[0].sub_event_id, "E4");
  EXPECT_EQ(links[0].role, "Target");
}

TEST(SubEventTest, NoCoincidenceNoLinks) {
  Document d = Doc("d", 10,
                   {Ev("E1", "PRP", {1}, {Arg("Target", {5})}),
                    Ev("E2", "PUR", {3, 4})});
  EXPECT_TRUE(FindSubEvents(d, S()).empty());
}

TEST(SubEventTest, RoleMustAdmitSubType) {
  // PUR Aim admits no sub-event types.
  Document d = Doc("d", 10,
                   {Ev("E1", "PUR", {1}, {Arg("Aim", {3})}),
                    Ev("E2", "PUR", {3})});
  EXPECT_TRUE(FindSubEvents(d, S()).empty());
}

TEST(SubEventTest, TwoEventsOnOneTriggerSpan) {
  // FIN Content admits both FAC and CMP.
  Document d = Doc("d", 10,
                   {Ev("E1", "FIN", {1}, {Arg("Content", {4})}),
                    Ev("E2", "FAC", {4}), Ev("E3", "CMP", {4})});
  // Oracle: every (main, sub) pair whose trigger equals a main argument with
  // a role admitting the sub type.
  int expected = 0;
  for (const Event &m : d.events) {
    for (const Event &s : d.events) {
      if (&m == &s) continue;
      for (const Argument &a : m.arguments) {
        if (a.nugget == s.trigger) {
          for (const std::string &r :
               S().RolesForSubevent(m.event_type, s.event_type)) {
            expected += r == a.role;
          }
        }
      }
    }
  }
  EXPECT_EQ(expected, 2);
  EXPECT_EQ(static_cast<int>(FindSubEvents(d, S()).size()), expected);
}

// --- validation -----------------------------------------------------------------

TEST(ValidationTest, WorkedDocumentIsClean) {
  std::vector<Document> docs = ReadCorpusFile(DataPath("worked_document.jsonl"));
  ValidationReport r = ValidateCorpus(docs, S());
  EXPECT_TRUE(r.ok()) << r.ToJson();
  EXPECT_EQ(r.num_warnings(), 0);
}

TEST(ValidationTest, InvalidRole) {
  Document d = Doc("d", 5, {Ev("E1", "PUR", {0}, {Arg("Finder", {2})})});
  ValidationReport r = ValidateDocument(d, S());
  EXPECT_EQ(r.num_errors(), 1);
  EXPECT_EQ(r.Count(IssueKind::kInvalidRole), 1);
}

TEST(ValidationTest, IndexEqualToLengthIsOutOfRange) {
  Document d = Doc("d", 5, {Ev("E1", "PUR", {5})});
  ValidationReport r = ValidateDocument(d, S());
  EXPECT_EQ(r.num_errors(), 1);
  EXPECT_EQ(r.Count(IssueKind::kIndexOutOfRange), 1);
}

TEST(ValidationTest, UnknownLabelsAndFillers) {
  Document d = Doc("d", 6,
                   {Ev("E1", "XYZ", {0}),
                    Ev("E2", "PUR", {1},
                       {Arg("Nope", {2}), Arg("Aim", {3}, "OG"),
                        Arg("Condition", {4}, "QQQ")})});
  ValidationReport r = ValidateDocument(d, S());
  EXPECT_EQ(r.Count(IssueKind::kUnknownEventType), 1);
  EXPECT_EQ(r.Count(IssueKind::kUnknownRole), 1);
  EXPECT_EQ(r.Count(IssueKind::kFillerViolation), 1);  // OG is not an Aim
  EXPECT_EQ(r.Count(IssueKind::kUnknownNuggetType), 1);
}

TEST(ValidationTest, SubeventFillerChecked) {
  Document ok = Doc("d", 6,
                    {Ev("E1", "PRP", {0}, {Arg("Target", {2}, "E-PUR")}),
                     Ev("E2", "PUR", {2})});
  EXPECT_TRUE(ValidateDocument(ok, S()).ok());
  Document bad = Doc("d", 6, {Ev("E1", "PRP", {0},
                                 {Arg("Target", {2}, "E-FAC")})});
  EXPECT_EQ(ValidateDocument(bad, S()).Count(IssueKind::kFillerViolation), 1);
}

TEST(ValidationTest, StructuralIssues) {
  Document d = Doc("d", 6,
                   {Ev("E1", "PUR", {}), Ev("E1", "PUR", {2, 2}),
                    Ev("E3", "PUR", {4}), Ev("E4", "PUR", {4})});
  ValidationReport r = ValidateDocument(d, S());
  EXPECT_EQ(r.Count(IssueKind::kEmptyNugget), 1);
  EXPECT_EQ(r.Count(IssueKind::kRepeatedIndex), 1);
  EXPECT_EQ(r.Count(IssueKind::kDuplicateEventId), 1);
  EXPECT_EQ(r.Count(IssueKind::kDuplicateEvent), 1);
  EXPECT_EQ(r.num_warnings(), 1);
}

TEST(ValidationTest, CorpusLevelDuplicates) {
  std::vector<Document> docs = {Doc("a", 3, {}), Doc("a", 3, {})};
  ValidationReport r = ValidateCorpus(docs, S());
  EXPECT_EQ(r.Count(IssueKind::kDuplicateDocId), 1);
}

TEST(ValidationTest, MergeIsAssociative) {
  std::vector<Document> docs = {
      Doc("a", 3, {Ev("E1", "PUR", {9})}),
      Doc("b", 3, {Ev("E1", "PUR", {0}, {Arg("Finder", {1})})}),
      Doc("c", 0, {})};
  ValidationReport whole = ValidateCorpus(docs, S());
  ValidationReport left = ValidateDocument(docs[0], S());
  ValidationReport right = ValidateDocument(docs[1], S());
  right.Merge(ValidateDocument(docs[2], S()));
  left.Merge(right);
  EXPECT_EQ(left.num_errors(), whole.num_errors());
  EXPECT_EQ(left.documents, whole.documents);
}

// --- canonical form -----------------------------------------------------------------

TEST(CanonicalTest, MergesAndSorts) {
  Document d = Doc("d", 10,
                   {Ev("E9", "PUR", {5}, {Arg("Aim", {7}), Arg("Aim", {6})}),
                    Ev("E2", "ITT", {1}),
                    Ev("E5", "PUR", {5}, {Arg("Aim", {6})})});
  EXPECT_EQ(CanonicalizeDocument(d), 1);
  ASSERT_EQ(d.events.size(), 2u);
  EXPECT_EQ(d.events[0].event_id, "E2");
  EXPECT_EQ(d.events[1].event_id, "E9");
  ASSERT_EQ(d.events[1].arguments.size(), 2u);
  EXPECT_EQ(d.events[1].arguments[0].nugget.indices, std::vector<int>{6});
  RenumberEvents(d);
  EXPECT_EQ(d.events[1].event_id, "E2");
}

// --- JSONL I/O -----------------------------------------------------------------

TEST(CorpusIoTest, RoundTrip) {
  std::vector<Document> docs = ReadCorpusFile(DataPath("worked_document.jsonl"));
  std::ostringstream out;
  WriteCorpus(out, docs);
  std::istringstream in(out.str());
  EXPECT_EQ(ReadCorpus(in), docs);
}

TEST(CorpusIoTest, SerializationIsStable) {
  Document d = Doc("x", 3, {Ev("E1", "PUR", {2, 0}, {Arg("Aim", {1}, "TAK")})});
  EXPECT_EQ(SerializeDocument(d),
            R"({"doc_id":"x","tokens":["w0","w1","w2"],"events":[{"event_id":"E1",)"
            R"("event_type":"PUR","trigger":{"indices":[2,0]},"arguments":[)"
            R"({"role":"Aim","indices":[1],"nugget_type":"TAK"}]}]})");
}

TEST(CorpusIoTest, MalformedLineReportsLineNumber) {
  std::istringstream in(
      R"({"doc_id":"a","tokens":[],"events":[]})"
      "\n\n{not json}\n");
  try {
    ReadCorpus(in);
    FAIL() << "expected FormatError";
  } catch (const FormatError &e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(CorpusIoTest, UnknownKeysStrictVersusLenient) {
  const std::string line =
      R"({"doc_id":"a","tokens":["x"],"events":[],"extra":1})";
  EXPECT_THROW(ParseDocument(line, ParseMode::kStrict), FormatError);
  EXPECT_EQ(ParseDocument(line, ParseMode::kLenient).doc_id, "a");
}

TEST(CorpusIoTest, MissingFileIsIoError) {
  EXPECT_THROW(ReadCorpusFile("/nonexistent/corpus.jsonl"), IoError);
}

}  // namespace
}  // namespace evgrid
