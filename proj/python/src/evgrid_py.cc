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

// Thin bindings over JSON/JSONL strings. The Python package turns them into
// dicts.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "evgrid/corpus_io.h"
#include "evgrid/error.h"
#include "evgrid/error_analysis.h"
#include "evgrid/grid_codec.h"
#include "evgrid/relation_grid.h"
#include "evgrid/scorer.h"
#include "evgrid/split.h"
#include "evgrid/stats.h"
#include "evgrid/validation.h"

namespace py = pybind11;

namespace evgrid {
namespace {

Schema LoadSchema(const std::optional<std::string> &json) {
  return json ? Schema::FromJson(*json) : Schema::Default();
}

std::vector<Document> ReadDocs(const std::string &jsonl, bool lenient) {
  std::istringstream in(jsonl);
  return ReadCorpus(in, lenient ? ParseMode::kLenient : ParseMode::kStrict);
}

std::string WriteDocs(std::span<const Document> docs) {
  std::ostringstream out;
  WriteCorpus(out, docs);
  return out.str();
}

std::string Validate(const std::string &corpus,
                     const std::optional<std::string> &schema, bool lenient) {
  return ValidateCorpus(ReadDocs(corpus, lenient), LoadSchema(schema)).ToJson();
}

std::string EncodeCorpus(const std::string &corpus,
                         const std::optional<std::string> &schema,
                         bool lenient) {
  Schema s = LoadSchema(schema);
  std::string out;
  for (const Document &d : ReadDocs(corpus, lenient)) {
    out += SerializeGrid(d.doc_id, Encode(d, s), s) + "\n";
  }
  return out;
}

std::pair<std::string, std::string> DecodeCorpus(
    const std::string &grids, const std::optional<std::string> &tokens_from,
    const std::optional<std::string> &schema, int max_nugget_length,
    int max_paths_per_head) {
  Schema s = LoadSchema(schema);
  DecodeConfig config;
  config.max_nugget_length = max_nugget_length;
  config.max_paths_per_head = max_paths_per_head;
  config.Validate();
  std::istringstream in(grids);
  std::vector<GridRecord> records = ReadGrids(in, s);
  std::map<std::string, std::vector<std::string>> tokens;
  if (tokens_from) {
    for (Document &d : ReadDocs(*tokens_from, true)) {
      tokens[d.doc_id] = std::move(d.tokens);
    }
  }
  DecodeDiagnostics diag;
  std::vector<Document> docs;
  for (const GridRecord &rec : records) {
    std::vector<std::string> words(rec.grid.length(), "_");
    if (tokens_from) {
      auto it = tokens.find(rec.doc_id);
      if (it == tokens.end()) {
        throw AlignmentError("doc_id '" + rec.doc_id + "' has no tokens");
      }
      words = it->second;
    }
    docs.push_back(
        DecodeDocument(rec.grid, rec.doc_id, std::move(words), s, config,
                       &diag));
  }
  return {WriteDocs(docs), diag.ToJson()};
}

std::string ScoreCorpora(const std::string &pred, const std::string &gold,
                         const std::optional<std::string> &schema,
                         bool percent) {
  return Score(ReadDocs(pred, false), ReadDocs(gold, false),
               LoadSchema(schema))
      .ToJson(percent);
}

std::string Stats(const std::string &corpus,
                  const std::optional<std::string> &schema,
                  const std::string &coverage, const std::string &population) {
  if (coverage != "distinct" && coverage != "summed") {
    throw InputError("coverage must be 'distinct' or 'summed'");
  }
  if (population != "dedup" && population != "per-mention") {
    throw InputError("population must be 'dedup' or 'per-mention'");
  }
  std::vector<Document> docs = ReadDocs(corpus, false);
  return StatsToJson(
      ComputeDensity(docs, coverage == "summed"
                               ? CoverageMode::kSummedLengths
                               : CoverageMode::kDistinctPositions),
      ComputeComplexity(docs, LoadSchema(schema),
                        population == "per-mention"
                            ? NuggetPopulation::kPerMention
                            : NuggetPopulation::kDeduplicated));
}

std::string Errors(const std::string &pred_jsonl, const std::string &gold_jsonl,
                   const std::string &ai_context) {
  if (ai_context != "matched" && ai_context != "any") {
    throw InputError("ai_context must be 'matched' or 'any'");
  }
  std::vector<Document> pred = ReadDocs(pred_jsonl, false);
  std::vector<Document> gold = ReadDocs(gold_jsonl, false);
  auto ti = IdentificationErrors(pred, gold, IdentificationLevel::kTrigger);
  auto ai = IdentificationErrors(pred, gold, IdentificationLevel::kArgument,
                                 ai_context == "any"
                                     ? ArgumentContext::kAnyArgument
                                     : ArgumentContext::kMatchedTrigger);
  return ErrorReportToJson(ti, ai,
                           Confusion(pred, gold, ConfusionLevel::kEventType),
                           Confusion(pred, gold, ConfusionLevel::kArgumentRole));
}

py::tuple Split(const std::string &corpus, uint64_t seed) {
  CorpusSplit s = SplitCorpus(ReadDocs(corpus, false), seed);
  return py::make_tuple(WriteDocs(s.train), WriteDocs(s.dev),
                        WriteDocs(s.test));
}

}  // namespace
}  // namespace evgrid

PYBIND11_MODULE(_evgrid, m) {
  using namespace evgrid;
  m.doc() = "Word-word relation grid codec, scorer and corpus tools";

  static py::exception<Error> error(m, "Error");
  static py::exception<InputError> input_error(m, "InputError", error.ptr());
  static py::exception<FormatError> format_error(m, "FormatError", error.ptr());
  static py::exception<SchemaError> schema_error(m, "SchemaError", error.ptr());
  static py::exception<AlignmentError> alignment_error(m, "AlignmentError",
                                                       error.ptr());
  static py::exception<UnknownLabelError> label_error(m, "UnknownLabelError",
                                                      error.ptr());
  static py::exception<IoError> io_error(m, "IoError", error.ptr());
  // Most specific first.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError &e) {
      py::set_error(input_error, e.what());
    } catch (const FormatError &e) {
      py::set_error(format_error, e.what());
    } catch (const SchemaError &e) {
      py::set_error(schema_error, e.what());
    } catch (const AlignmentError &e) {
      py::set_error(alignment_error, e.what());
    } catch (const UnknownLabelError &e) {
      py::set_error(label_error, e.what());
    } catch (const IoError &e) {
      py::set_error(io_error, e.what());
    } catch (const Error &e) {
      py::set_error(error, e.what());
    }
  });

  m.def("schema_json",
        [](const std::optional<std::string> &schema) {
          return LoadSchema(schema).ToJson();
        },
        py::arg("schema") = py::none());
  m.def("validate", &Validate, py::arg("corpus"),
        py::arg("schema") = py::none(), py::arg("lenient") = false);
  m.def("encode", &EncodeCorpus, py::arg("corpus"),
        py::arg("schema") = py::none(), py::arg("lenient") = false);
  m.def("decode", &DecodeCorpus, py::arg("grids"),
        py::arg("tokens_from") = py::none(), py::arg("schema") = py::none(),
        py::arg("max_nugget_length") = 30, py::arg("max_paths_per_head") = 64);
  m.def("score", &ScoreCorpora, py::arg("pred"), py::arg("gold"),
        py::arg("schema") = py::none(), py::arg("percent") = false);
  m.def("stats", &Stats, py::arg("corpus"), py::arg("schema") = py::none(),
        py::arg("coverage") = "distinct", py::arg("population") = "dedup");
  m.def("errors", &Errors, py::arg("pred"), py::arg("gold"),
        py::arg("ai_context") = "matched");
  m.def("split", &Split, py::arg("corpus"), py::arg("seed") = 0);
}
