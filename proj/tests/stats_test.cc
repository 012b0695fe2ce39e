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

#include "evgrid/stats.h"

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "evgrid/corpus_io.h"
#include "evgrid/error.h"
#include "json.hpp"
#include "test_util.h"

namespace evgrid {
namespace {

using testing::DataPath;
using testing::Doc;
using testing::Ev;

const Schema &S() { return Schema::Default(); }

// density.jsonl: 100 tokens, 3 events, 7 arguments. Covered positions by
// hand: E1 {0,2,3,4,6,7,9} = 7, E2 {20,21,23,24,25,26,30..33} = 10,
// E3 {50,52..58} = 8, so 25 distinct. Summed nugget lengths over the ten
// distinct nuggets: (1+3+2+1) + (2+3+3+4) + (1+7) = 27.
TEST(DensityTest, HandCountedFixture) {
  auto docs = ReadCorpusFile(DataPath("density.jsonl"));
  DensityReport r = ComputeDensity(docs);
  EXPECT_EQ(r.tokens, 100);
  EXPECT_EQ(r.events, 3);
  EXPECT_EQ(r.arguments, 7);
  EXPECT_EQ(r.nugget_tokens, 25);
  EXPECT_DOUBLE_EQ(r.events_per_100_tokens, 3.0);
  EXPECT_DOUBLE_EQ(r.args_per_100_tokens, 7.0);
  EXPECT_DOUBLE_EQ(r.nugget_tokens_per_100_tokens, 25.0);
}

TEST(DensityTest, SummedCoverageCountsOverlapTwice) {
  auto docs = ReadCorpusFile(DataPath("density.jsonl"));
  DensityReport r = ComputeDensity(docs, CoverageMode::kSummedLengths);
  EXPECT_EQ(r.nugget_tokens, 27);
}

TEST(DensityTest, NoEventsIsZero) {
  std::vector<Document> docs = {Doc("a", 10, {}), Doc("b", 5, {})};
  DensityReport r = ComputeDensity(docs);
  EXPECT_EQ(r.events_per_100_tokens, 0.0);
  EXPECT_EQ(r.args_per_100_tokens, 0.0);
  EXPECT_EQ(r.nugget_tokens_per_100_tokens, 0.0);
}

TEST(DensityTest, NoTokensIsAnError) {
  std::vector<Document> docs;
  EXPECT_THROW(ComputeDensity(docs), InputError);
}

TEST(DensityTest, InvariantUnderOrderAndSplitting) {
  testing::DocumentGenerator gen(S(), 99);
  std::vector<Document> docs;
  for (int i = 0; i < 40; ++i) docs.push_back(gen.Next("d" + std::to_string(i)));
  DensityReport whole = ComputeDensity(docs);
  std::vector<Document> reversed(docs.rbegin(), docs.rend());
  DensityReport rev = ComputeDensity(reversed);
  EXPECT_EQ(whole.nugget_tokens, rev.nugget_tokens);
  EXPECT_DOUBLE_EQ(whole.events_per_100_tokens, rev.events_per_100_tokens);
  // Splitting: raw counts add up.
  DensityReport a = ComputeDensity(std::span(docs).first(15));
  DensityReport b = ComputeDensity(std::span(docs).subspan(15));
  EXPECT_EQ(a.tokens + b.tokens, whole.tokens);
  EXPECT_EQ(a.events + b.events, whole.events);
  EXPECT_EQ(a.arguments + b.arguments, whole.arguments);
  EXPECT_EQ(a.nugget_tokens + b.nugget_tokens, whole.nugget_tokens);
}

// complexity.jsonl, five documents, deduplicated nuggets per document:
//   c1: [0] [2,3] [5] [3,4]             overlapping: [2,3] [3,4]
//   c2: [1] [6] [8,10] [9,10]           overlapping: [8,10] [9,10];
//                                       discontinuous: [8,10]
//   c3: [4,3] [12,14]                   reverse: [4,3]; discontinuous: [12,14]
//   c4, c5: no events
// 10 nuggets, 2 discontinuous, 4 overlapping, 1 reverse-order.
// 8 events; sub-events: c1 E2 (PRP Target), c2 E2 (FIN Content) -> 2.
TEST(ComplexityTest, HandCountedFixture) {
  auto docs = ReadCorpusFile(DataPath("complexity.jsonl"));
  ComplexityReport r = ComputeComplexity(docs, S());
  EXPECT_EQ(r.nuggets, 10);
  EXPECT_EQ(r.events, 8);
  EXPECT_EQ(r.sub_events, 2);
  EXPECT_DOUBLE_EQ(*r.pct_discontinuous, 20.0);
  EXPECT_DOUBLE_EQ(*r.pct_overlapping, 40.0);
  EXPECT_DOUBLE_EQ(*r.pct_reverse_order, 10.0);
  EXPECT_DOUBLE_EQ(*r.pct_subevent, 25.0);
}

// Per mention: 15 mentions (6 + 6 + 3); discontinuous [8,10] and [12,14]
// twice -> 3; overlapping [2,3] twice, [3,4], [8,10], [9,10] -> 5; reverse 1.
TEST(ComplexityTest, PerMentionPopulation) {
  auto docs = ReadCorpusFile(DataPath("complexity.jsonl"));
  ComplexityReport r =
      ComputeComplexity(docs, S(), NuggetPopulation::kPerMention);
  EXPECT_EQ(r.nuggets, 15);
  EXPECT_EQ(r.discontinuous, 3);
  EXPECT_EQ(r.overlapping, 5);
  EXPECT_EQ(r.reverse_order, 1);
}

// Same fixture, density by hand: 75 tokens, 8 events, 7 arguments and
// 5 + 5 + 4 = 14 covered positions.
TEST(ComplexityFixtureTest, Density) {
  auto docs = ReadCorpusFile(DataPath("complexity.jsonl"));
  DensityReport r = ComputeDensity(docs);
  EXPECT_EQ(r.tokens, 75);
  EXPECT_EQ(r.arguments, 7);
  EXPECT_EQ(r.nugget_tokens, 14);
  EXPECT_DOUBLE_EQ(r.events_per_100_tokens, 800.0 / 75.0);
}

TEST(ComplexityTest, SingleTokenDisjointIsAllZero) {
  std::vector<Document> docs = {
      Doc("a", 10, {Ev("E1", "PUR", {1}, {testing::Arg("Aim", {3})})})};
  ComplexityReport r = ComputeComplexity(docs, S());
  EXPECT_EQ(*r.pct_discontinuous, 0.0);
  EXPECT_EQ(*r.pct_overlapping, 0.0);
  EXPECT_EQ(*r.pct_reverse_order, 0.0);
  EXPECT_EQ(*r.pct_subevent, 0.0);
}

TEST(ComplexityTest, EmptyPopulationIsNa) {
  std::vector<Document> docs = {Doc("a", 10, {})};
  ComplexityReport r = ComputeComplexity(docs, S());
  EXPECT_FALSE(r.pct_discontinuous.has_value());
  EXPECT_FALSE(r.pct_subevent.has_value());
  nlohmann::json j =
      nlohmann::json::parse(StatsToJson(ComputeDensity(docs), r));
  EXPECT_TRUE(j["complexity"]["pct_overlapping"].is_null());
  EXPECT_NE(StatsToTable(ComputeDensity(docs), r).find("NA"),
            std::string::npos);
}

// Hand tally of the worked example's type column: PUR E4 E6 E8 E10 E12 E14
// E20; WKS E5 E7 E13; FAC E16 E17 E19; MDS E9 E11; FIN E15 E18; ITT, RWF
// and PRP once each.
TEST(TypeDistributionTest, WorkedDocument) {
  auto docs = ReadCorpusFile(DataPath("worked_document.jsonl"));
  std::vector<NamedSplit> splits = {{"test", docs}};
  TypeDistribution d = ComputeTypeDistribution(splits, S());
  EXPECT_EQ(d.event_types.Count("PUR"), 7);
  EXPECT_EQ(d.event_types.Count("WKS"), 3);
  EXPECT_EQ(d.event_types.Count("FAC"), 3);
  EXPECT_EQ(d.event_types.Count("MDS"), 2);
  EXPECT_EQ(d.event_types.Count("FIN"), 2);
  EXPECT_EQ(d.event_types.Count("ITT"), 1);
  EXPECT_EQ(d.event_types.Count("RWF"), 1);
  EXPECT_EQ(d.event_types.Count("PRP"), 1);
  EXPECT_EQ(d.event_types.Count("CMP"), 0);
  EXPECT_EQ(d.event_types.Total(), 20);
  EXPECT_DOUBLE_EQ(d.event_types.Percent(0, 0), 35.0);  // PUR is row 0
  // Argument side: OG fillers are the five "we"; LIM the seven conditions.
  EXPECT_EQ(d.nugget_types.Count("OG"), 5);
  EXPECT_EQ(d.nugget_types.Count("LIM"), 7);
  EXPECT_EQ(d.nugget_types.Count("E-PUR"), 0);
  EXPECT_EQ(d.argument_roles.Count("Target"), 8);
  EXPECT_EQ(d.argument_roles.Count("Aim"), 7);
  EXPECT_EQ(d.argument_roles.Total(), 44);
  ASSERT_EQ(d.doc_lengths.size(), 1u);
  EXPECT_EQ(d.doc_lengths[0].events, 20);
}

TEST(TypeDistributionTest, EmptyCorpusAllZero) {
  std::vector<Document> none;
  std::vector<NamedSplit> splits = {{"train", none}, {"dev", none}};
  TypeDistribution d = ComputeTypeDistribution(splits, S());
  EXPECT_EQ(d.event_types.labels.size(), 10u);
  EXPECT_EQ(d.event_types.Total(), 0);
  EXPECT_EQ(d.event_types.Percent(0, 1), 0.0);
}

TEST(TypeDistributionTest, PerSplitColumnsAndCsv) {
  std::vector<Document> a = {Doc("a", 5, {Ev("E1", "PUR", {0}),
                                          Ev("E2", "PUR", {1})})};
  std::vector<Document> b = {Doc("b", 5, {Ev("E1", "ITT", {0}),
                                          Ev("E2", "ZZZ", {1})})};
  std::vector<NamedSplit> splits = {{"train", a}, {"dev", b}};
  TypeDistribution d = ComputeTypeDistribution(splits, S());
  // Unknown labels go after the schema's.
  EXPECT_EQ(d.event_types.labels.back(), "ZZZ");
  std::string csv = d.event_types.ToCsv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "label,train,train%,dev,dev%,total,total%");
  EXPECT_NE(csv.find("PUR,2,100.00,0,0.00,2,50.00"), std::string::npos);
  EXPECT_NE(csv.find("ZZZ,0,0.00,1,50.00,1,25.00"), std::string::npos);
  EXPECT_EQ(d.DocLengthsCsv(),
            "split,doc_id,tokens,events\ntrain,a,5,2\ndev,b,5,2\n");
}

}  // namespace
}  // namespace evgrid
