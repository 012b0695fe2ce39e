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

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "evgrid/error.h"
#include "test_util.h"

namespace evgrid {
namespace {

const Schema &S() { return Schema::Default(); }

TEST(SchemaTest, DefaultSizes) {
  EXPECT_EQ(S().num_event_types(), 10);
  EXPECT_EQ(S().num_roles(), 20);
  EXPECT_EQ(S().num_nugget_types(), 10);
}

TEST(SchemaTest, DefaultLabelOrder) {
  EXPECT_EQ(S().event_type_names(),
            (std::vector<std::string>{"PUR", "ITT", "RWS", "RWF", "PRP", "WKS",
                                      "MDS", "FIN", "CMP", "FAC"}));
  EXPECT_EQ(S().nugget_type_names(),
            (std::vector<std::string>{"OG", "APP", "MOD", "FEA", "TAK", "DST",
                                      "LIM", "STR", "WEA", "DEG"}));
  EXPECT_EQ(S().role_names().front(), "Aim");
}

TEST(SchemaTest, ValidPairsFromTables) {
  EXPECT_TRUE(S().Valid("PUR", "Aim"));
  EXPECT_FALSE(S().Valid("PUR", "Finder"));
  EXPECT_TRUE(S().Valid("FIN", "Content"));
}

TEST(SchemaTest, ValidThrowsOnUnknownLabel) {
  EXPECT_THROW(S().Valid("XYZ", "Aim"), UnknownLabelError);
  EXPECT_THROW(S().Valid("PUR", "Nope"), UnknownLabelError);
}

TEST(SchemaTest, PurposeRowsAreAimConditionDataset) {
  std::vector<std::string> roles;
  for (const RoleConstraint *row : S().RowsFor(S().event_type("PUR"))) {
    roles.push_back(S().name(row->role));
  }
  EXPECT_EQ(roles, (std::vector<std::string>{"Aim", "Condition", "Dataset"}));
}

TEST(SchemaTest, RolesForSubevent) {
  EXPECT_EQ(S().RolesForSubevent("PRP", "PUR"),
            std::vector<std::string>{"Target"});
  EXPECT_EQ(S().RolesForSubevent("FIN", "FAC"),
            std::vector<std::string>{"Content"});
  EXPECT_EQ(S().RolesForSubevent("CMP", "FAC"),
            (std::vector<std::string>{"Arg1", "Arg2", "Condition"}));
  EXPECT_TRUE(S().RolesForSubevent("PUR", "PUR").empty());
}

// Every valid (event type, role) pair with its constrained-types column,
// transcribed from the per-type ontology tables.
struct Row {
  const char *type;
  const char *role;
  const char *column;
};

constexpr Row kTableRows[] = {
    {"PUR", "Aim", "APP MOD FEA DST STR WEA TAK"},
    {"PUR", "Condition", "LIM"},
    {"PUR", "Dataset", "DST"},
    {"ITT", "Target", "APP MOD FEA DST STR WEA TAK"},
    {"ITT", "Condition", "LIM"},
    {"ITT", "Dataset", "DST"},
    {"RWS", "Subject", "APP MOD FEA DST"},
    {"RWS", "BaseComponent", "APP MOD FEA DST"},
    {"RWS", "TriedComponent", "APP MOD FEA DST"},
    {"RWS", "Condition", "LIM E-RWS"},
    {"RWS", "Dataset", "DST"},
    {"RWS", "Target", "E-PUR TAK STR WEA APP FEA MOD"},
    {"RWF", "Concern", "APP FEA STR WEA MOD DST"},
    {"RWF", "Fault", "APP FEA STR WEA MOD DST"},
    {"RWF", "Condition", "LIM E-RWF E-RWS"},
    {"RWF", "Dataset", "DST"},
    {"RWF", "Target", "E-PUR TAK STR WEA"},
    {"RWF", "Extent", "DEG"},
    {"PRP", "Proposer", "OG"},
    {"PRP", "Content", "APP FEA MOD DST TAK"},
    {"PRP", "Target", "E-PUR TAK FEA WEA"},
    {"WKS", "Researcher", "OG"},
    {"WKS", "Content", "APP MOD FEA DST STR WEA TAK"},
    {"WKS", "Condition", "LIM"},
    {"WKS", "Dataset", "DST"},
    {"WKS", "Target", "E-PUR TAK STR WEA APP FEA MOD"},
    {"MDS", "BaseComponent", "APP MOD FEA DST"},
    {"MDS", "TriedComponent", "APP MOD FEA DST"},
    {"MDS", "Condition", "LIM E-MDS"},
    {"MDS", "Dataset", "DST"},
    {"MDS", "Target", "E-PUR TAK STR WEA APP FEA MOD"},
    {"FIN", "Finder", "OG"},
    {"FIN", "Content", "E-FAC E-CMP"},
    {"CMP", "Arg1", "E-FAC APP MOD FEA DST"},
    {"CMP", "Arg2", "E-FAC APP MOD FEA DST"},
    {"CMP", "Condition", "LIM E-FAC"},
    {"CMP", "Dataset", "DST"},
    {"CMP", "Result", "STR WEA"},
    {"CMP", "Metrics", "TAK"},
    {"CMP", "Extent", "DEG"},
    {"FAC", "Subject", "APP MOD FEA STR WEA TAK DST"},
    {"FAC", "Object", "APP MOD FEA STR WEA TAK DST"},
    {"FAC", "Condition", "LIM E-FAC"},
    {"FAC", "Reason", "LIM E-FAC"},
    {"FAC", "Dataset", "DST"},
    {"FAC", "Target", "E-PUR TAK STR WEA"},
    {"FAC", "Extent", "DEG"},
};

TEST(SchemaTest, ValidPairSnapshot) {
  std::set<std::pair<std::string, std::string>> expected;
  for (const Row &row : kTableRows) expected.insert({row.type, row.role});
  ASSERT_EQ(expected.size(), 47u);

  std::set<std::pair<std::string, std::string>> actual;
  for (const std::string &t : S().event_type_names()) {
    for (const std::string &r : S().role_names()) {
      if (S().Valid(t, r)) actual.insert({t, r});
    }
  }
  EXPECT_EQ(S().num_valid_pairs(), 47);
  EXPECT_EQ(actual, expected);
}

TEST(SchemaTest, ConstrainedColumnsMatchTables) {
  for (const Row &row : kTableRows) {
    const RoleConstraint *c =
        S().Constraint(S().event_type(row.type), S().role(row.role));
    ASSERT_NE(c, nullptr) << row.type << "/" << row.role;
    std::set<std::string> expected;
    std::istringstream words(row.column);
    for (std::string w; words >> w;) expected.insert(w);
    std::set<std::string> actual;
    for (NuggetTypeId f : c->allowed_fillers) actual.insert(S().name(f));
    for (EventTypeId e : c->allowed_subevent_types) {
      actual.insert(std::string(kSubeventPrefix) + S().name(e));
    }
    EXPECT_EQ(actual, expected) << row.type << "/" << row.role;
  }
}

TEST(SchemaTest, JsonRoundTripIsFixedPoint) {
  std::string json = S().ToJson();
  Schema again = Schema::FromJson(json);
  EXPECT_TRUE(again == S());
  EXPECT_EQ(again.ToJson(), json);
}

TEST(SchemaTest, ShippedSchemaFileMatchesBuiltIn) {
  std::ifstream in(EVGRID_SOURCE_DIR "/schema/scievents.json");
  ASSERT_TRUE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), S().ToJson());
}

TEST(SchemaTest, EmptyDocumentRejected) {
  EXPECT_THROW(Schema::FromJson("{}"), SchemaError);
  EXPECT_THROW(Schema::FromJson(""), FormatError);
}

TEST(SchemaTest, DanglingSubeventReferenceRejected) {
  const char *json = R"({
    "event_types": ["M"], "argument_roles": ["R"], "nugget_types": ["X"],
    "constraints": [
      {"event_type": "M", "role": "R", "fillers": [], "subevent_types": ["E-XYZ"]}
    ]
  })";
  EXPECT_THROW(Schema::FromJson(json), SchemaError);
}

TEST(SchemaTest, MissingFileIsIoError) {
  EXPECT_THROW(Schema::FromFile("/nonexistent/schema.json"), IoError);
}

TEST(SchemaTest, CustomSchemaLoads) {
  Schema s = Schema::FromJson(R"({
    "event_types": ["M", "N"], "argument_roles": ["BT", "CT", "DT"],
    "nugget_types": [],
    "constraints": [
      {"event_type": "M", "role": "BT", "fillers": [], "subevent_types": []},
      {"event_type": "M", "role": "CT", "fillers": [],
       "subevent_types": ["E-N"]},
      {"event_type": "N", "role": "DT", "fillers": [], "subevent_types": []}
    ]
  })");
  EXPECT_EQ(s.num_valid_pairs(), 3);
  EXPECT_EQ(s.RolesForSubevent("M", "N"), std::vector<std::string>{"CT"});
}

}  // namespace
}  // namespace evgrid
