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

#include "evgrid/corpus_io.h"

#include <fstream>
#include <initializer_list>
#include <istream>
#include <ostream>

#include "evgrid/error.h"
#include "json.hpp"

namespace evgrid {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

class Reader {
 public:
  Reader(ParseMode mode, int line) : mode_(mode), line_(line) {}

  [[noreturn]] void Fail(const std::string &message) const {
    throw FormatError(message, line_);
  }

  void CheckKeys(const json &obj, std::initializer_list<const char *> allowed,
                 const char *where) const {
    if (!obj.is_object()) Fail(std::string(where) + " must be an object");
    if (mode_ == ParseMode::kLenient) return;
    for (const auto &[key, value] : obj.items()) {
      bool known = false;
      for (const char *k : allowed) known = known || key == k;
      if (!known) Fail("unknown key '" + key + "' in " + where);
    }
  }

  const json &Require(const json &obj, const char *key,
                      const char *where) const {
    auto it = obj.find(key);
    if (it == obj.end()) {
      Fail(std::string("missing key '") + key + "' in " + where);
    }
    return *it;
  }

  std::string String(const json &obj, const char *key,
                     const char *where) const {
    const json &v = Require(obj, key, where);
    if (!v.is_string()) Fail(std::string("'") + key + "' must be a string");
    return v.get<std::string>();
  }

  std::string OptionalString(const json &obj, const char *key) const {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return {};
    if (!it->is_string()) Fail(std::string("'") + key + "' must be a string");
    return it->get<std::string>();
  }

  Nugget Indices(const json &obj, const char *where) const {
    const json &v = Require(obj, "indices", where);
    if (!v.is_array()) Fail("'indices' must be a list");
    Nugget n;
    for (const json &i : v) {
      if (!i.is_number_integer()) Fail("'indices' must contain integers");
      n.indices.push_back(i.get<int>());
    }
    return n;
  }

  Event ParseEvent(const json &obj) const {
    CheckKeys(obj, {"event_id", "event_type", "trigger", "arguments"},
              "event");
    Event e;
    e.event_id = String(obj, "event_id", "event");
    e.event_type = String(obj, "event_type", "event");
    const json &trigger = Require(obj, "trigger", "event");
    CheckKeys(trigger, {"indices", "nugget_type"}, "trigger");
    e.trigger = Indices(trigger, "trigger");
    e.trigger_nugget_type = OptionalString(trigger, "nugget_type");
    auto args = obj.find("arguments");
    if (args != obj.end()) {
      if (!args->is_array()) Fail("'arguments' must be a list");
      for (const json &a : *args) {
        CheckKeys(a, {"role", "indices", "nugget_type"}, "argument");
        Argument arg;
        arg.role = String(a, "role", "argument");
        arg.nugget = Indices(a, "argument");
        arg.nugget_type = OptionalString(a, "nugget_type");
        e.arguments.push_back(std::move(arg));
      }
    }
    return e;
  }

  Document ParseDocument(const json &obj) const {
    CheckKeys(obj, {"doc_id", "tokens", "events"}, "document");
    Document doc;
    doc.doc_id = String(obj, "doc_id", "document");
    const json &tokens = Require(obj, "tokens", "document");
    if (!tokens.is_array()) Fail("'tokens' must be a list");
    for (const json &t : tokens) {
      if (!t.is_string()) Fail("'tokens' must contain strings");
      doc.tokens.push_back(t.get<std::string>());
    }
    auto events = obj.find("events");
    if (events != obj.end()) {
      if (!events->is_array()) Fail("'events' must be a list");
      for (const json &e : *events) doc.events.push_back(ParseEvent(e));
    }
    return doc;
  }

 private:
  ParseMode mode_;
  int line_;
};

ordered_json NuggetJson(const Nugget &n, const std::string &nugget_type) {
  ordered_json out;
  out["indices"] = n.indices;
  if (!nugget_type.empty()) out["nugget_type"] = nugget_type;
  return out;
}

}  // namespace

Document ParseDocument(std::string_view text, ParseMode mode, int line) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error &e) {
    throw FormatError(std::string("invalid JSON: ") + e.what(), line);
  }
  return Reader(mode, line).ParseDocument(obj);
}

std::string SerializeDocument(const Document &doc) {
  ordered_json out;
  out["doc_id"] = doc.doc_id;
  out["tokens"] = doc.tokens;
  ordered_json events = ordered_json::array();
  for (const Event &e : doc.events) {
    ordered_json ev;
    ev["event_id"] = e.event_id;
    ev["event_type"] = e.event_type;
    ev["trigger"] = NuggetJson(e.trigger, e.trigger_nugget_type);
    ordered_json args = ordered_json::array();
    for (const Argument &a : e.arguments) {
      ordered_json arg;
      arg["role"] = a.role;
      arg["indices"] = a.nugget.indices;
      if (!a.nugget_type.empty()) arg["nugget_type"] = a.nugget_type;
      args.push_back(std::move(arg));
    }
    ev["arguments"] = std::move(args);
    events.push_back(std::move(ev));
  }
  out["events"] = std::move(events);
  return out.dump();
}

std::vector<Document> ReadCorpus(std::istream &in, ParseMode mode) {
  std::vector<Document> docs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    docs.push_back(ParseDocument(line, mode, line_no));
  }
  return docs;
}

std::vector<Document> ReadCorpusFile(const std::string &path, ParseMode mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return ReadCorpus(in, mode);
  } catch (const FormatError &e) {
    throw FormatError(path + ": " + e.what(), 0, e.line());
  }
}

void WriteCorpus(std::ostream &out, std::span<const Document> docs) {
  for (const Document &doc : docs) out << SerializeDocument(doc) << '\n';
}

void WriteCorpusFile(const std::string &path, std::span<const Document> docs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  WriteCorpus(out, docs);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace evgrid
