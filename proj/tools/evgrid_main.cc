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

// evgrid command line tool.
//
// Exit status: 0 success, 1 validation failure, 2 usage error, 3 I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "evgrid/corpus_io.h"
#include "evgrid/error.h"
#include "evgrid/error_analysis.h"
#include "evgrid/grid_codec.h"
#include "evgrid/relation_grid.h"
#include "evgrid/schema.h"
#include "evgrid/scorer.h"
#include "evgrid/split.h"
#include "evgrid/stats.h"
#include "evgrid/validation.h"

namespace fs = std::filesystem;

namespace evgrid {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Options {
  std::string schema_path;
  bool lenient = false;

  std::string input;
  std::vector<std::string> inputs;
  std::string output;
  std::string pred;
  std::string gold;
  std::string tokens_from;
  std::string diagnostics;
  std::string csv_dir;
  std::string out_dir;
  std::string format = "json";
  std::string coverage = "distinct";
  std::string population = "dedup";
  std::string ai_context = "matched";
  bool percent = false;
  uint64_t seed = 0;
  DecodeConfig decode;
};

Schema LoadSchema(const Options &opt) {
  return opt.schema_path.empty() ? Schema::Default()
                                 : Schema::FromFile(opt.schema_path);
}

ParseMode Mode(const Options &opt) {
  return opt.lenient ? ParseMode::kLenient : ParseMode::kStrict;
}

void WriteText(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::ofstream OpenOutput(const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

int RunSchema(const Options &opt) {
  WriteText(opt.output, LoadSchema(opt).ToJson());
  return kExitOk;
}

int RunValidate(const Options &opt) {
  Schema schema = LoadSchema(opt);
  std::vector<Document> docs = ReadCorpusFile(opt.input, Mode(opt));
  ValidationReport report = ValidateCorpus(docs, schema);
  WriteText(opt.output, report.ToJson());
  if (!report.ok()) {
    std::cerr << "evgrid: " << report.num_errors() << " validation error(s)\n";
    if (!opt.lenient) return kExitInvalid;
  }
  return kExitOk;
}

int RunEncode(const Options &opt) {
  Schema schema = LoadSchema(opt);
  std::vector<Document> docs = ReadCorpusFile(opt.input, Mode(opt));
  std::vector<GridRecord> grids;
  grids.reserve(docs.size());
  for (const Document &doc : docs) {
    try {
      grids.push_back({doc.doc_id, Encode(doc, schema), 0});
    } catch (const InputError &e) {
      throw InputError("document '" + doc.doc_id + "': " + e.what());
    }
  }
  if (opt.output.empty() || opt.output == "-") {
    WriteGrids(std::cout, grids, schema);
  } else {
    std::ofstream out = OpenOutput(opt.output);
    WriteGrids(out, grids, schema);
  }
  return kExitOk;
}

int RunDecode(const Options &opt) {
  Schema schema = LoadSchema(opt);
  opt.decode.Validate();
  std::vector<GridRecord> grids = ReadGridFile(opt.input, schema);
  std::map<std::string, std::vector<std::string>> tokens;
  if (!opt.tokens_from.empty()) {
    for (Document &d : ReadCorpusFile(opt.tokens_from, Mode(opt))) {
      tokens[d.doc_id] = std::move(d.tokens);
    }
  }
  DecodeDiagnostics diag;
  std::vector<Document> docs;
  docs.reserve(grids.size());
  for (const GridRecord &rec : grids) {
    std::vector<std::string> words;
    if (opt.tokens_from.empty()) {
      words.assign(rec.grid.length(), "_");
    } else {
      auto it = tokens.find(rec.doc_id);
      if (it == tokens.end()) {
        throw AlignmentError("doc_id '" + rec.doc_id + "' not found in " +
                             opt.tokens_from);
      }
      if (static_cast<int>(it->second.size()) != rec.grid.length()) {
        throw AlignmentError("doc_id '" + rec.doc_id + "' has " +
                             std::to_string(it->second.size()) +
                             " tokens but a grid of length " +
                             std::to_string(rec.grid.length()));
      }
      words = it->second;
    }
    docs.push_back(DecodeDocument(rec.grid, rec.doc_id, std::move(words),
                                  schema, opt.decode, &diag));
  }
  if (opt.output.empty() || opt.output == "-") {
    WriteCorpus(std::cout, docs);
  } else {
    WriteCorpusFile(opt.output, docs);
  }
  if (!opt.diagnostics.empty()) {
    WriteText(opt.diagnostics, diag.ToJson() + "\n");
  }
  if (!diag.clean()) {
    std::cerr << "evgrid: decode diagnostics " << diag.ToJson() << "\n";
  }
  return kExitOk;
}

int RunScore(const Options &opt) {
  Schema schema = LoadSchema(opt);
  std::vector<Document> pred = ReadCorpusFile(opt.pred, Mode(opt));
  std::vector<Document> gold = ReadCorpusFile(opt.gold, Mode(opt));
  ScoreReport report = Score(pred, gold, schema);
  WriteText(opt.output, opt.format == "table" ? report.ToTable(opt.percent)
                                              : report.ToJson(opt.percent));
  return kExitOk;
}

int RunStats(const Options &opt) {
  Schema schema = LoadSchema(opt);
  std::vector<std::vector<Document>> parts;
  std::vector<Document> all;
  for (const std::string &path : opt.inputs) {
    parts.push_back(ReadCorpusFile(path, Mode(opt)));
    all.insert(all.end(), parts.back().begin(), parts.back().end());
  }
  DensityReport density = ComputeDensity(
      all, opt.coverage == "summed" ? CoverageMode::kSummedLengths
                                    : CoverageMode::kDistinctPositions);
  ComplexityReport complexity = ComputeComplexity(
      all, schema,
      opt.population == "per-mention" ? NuggetPopulation::kPerMention
                                      : NuggetPopulation::kDeduplicated);
  WriteText(opt.output, opt.format == "table"
                            ? StatsToTable(density, complexity)
                            : StatsToJson(density, complexity));
  if (!opt.csv_dir.empty()) {
    std::vector<NamedSplit> splits;
    for (size_t i = 0; i < parts.size(); ++i) {
      splits.push_back({fs::path(opt.inputs[i]).stem().string(), parts[i]});
    }
    TypeDistribution dist = ComputeTypeDistribution(splits, schema);
    fs::create_directories(opt.csv_dir);
    fs::path dir(opt.csv_dir);
    WriteText((dir / "nugget_types.csv").string(), dist.nugget_types.ToCsv());
    WriteText((dir / "event_types.csv").string(), dist.event_types.ToCsv());
    WriteText((dir / "argument_roles.csv").string(),
              dist.argument_roles.ToCsv());
    WriteText((dir / "doc_lengths.csv").string(), dist.DocLengthsCsv());
  }
  return kExitOk;
}

int RunErrors(const Options &opt) {
  std::vector<Document> pred = ReadCorpusFile(opt.pred, Mode(opt));
  std::vector<Document> gold = ReadCorpusFile(opt.gold, Mode(opt));
  ArgumentContext context = opt.ai_context == "any"
                                ? ArgumentContext::kAnyArgument
                                : ArgumentContext::kMatchedTrigger;
  auto ti = IdentificationErrors(pred, gold, IdentificationLevel::kTrigger);
  auto ai =
      IdentificationErrors(pred, gold, IdentificationLevel::kArgument, context);
  ConfusionMatrix types = Confusion(pred, gold, ConfusionLevel::kEventType);
  ConfusionMatrix roles = Confusion(pred, gold, ConfusionLevel::kArgumentRole);
  WriteText(opt.output, ErrorReportToJson(ti, ai, types, roles));
  if (!opt.csv_dir.empty()) {
    fs::create_directories(opt.csv_dir);
    fs::path dir(opt.csv_dir);
    WriteText((dir / "event_type_confusion.csv").string(), types.ToCsv());
    WriteText((dir / "argument_role_confusion.csv").string(), roles.ToCsv());
    std::string breakdown = "metric,class,count,percent\n";
    for (const auto &[name, b] :
         {std::pair<std::string, const IdentificationErrorBreakdown *>{"TI",
                                                                       &ti},
          {"AI", &ai}}) {
      for (ErrorClass c : {ErrorClass::kMissed, ErrorClass::kPredictedLong,
                           ErrorClass::kPredictedShort,
                           ErrorClass::kOtherOverlap}) {
        char pct[32];
        std::snprintf(pct, sizeof(pct), "%.2f", b->percent(c));
        breakdown += name + "," + std::string(ErrorClassName(c)) + "," +
                     std::to_string(b->count(c)) + "," + pct + "\n";
      }
    }
    WriteText((dir / "identification_errors.csv").string(), breakdown);
  }
  return kExitOk;
}

int RunSplit(const Options &opt) {
  std::vector<Document> docs = ReadCorpusFile(opt.input, Mode(opt));
  CorpusSplit split = SplitCorpus(docs, opt.seed);
  fs::create_directories(opt.out_dir);
  fs::path dir(opt.out_dir);
  WriteCorpusFile((dir / "train.jsonl").string(), split.train);
  WriteCorpusFile((dir / "dev.jsonl").string(), split.dev);
  WriteCorpusFile((dir / "test.jsonl").string(), split.test);
  std::cerr << "evgrid: train " << split.train.size() << ", dev "
            << split.dev.size() << ", test " << split.test.size() << "\n";
  return kExitOk;
}

int Main(int argc, char **argv) {
  Options opt;
  CLI::App app{"Word-word relation grid toolkit for scientific event corpora"};
  app.require_subcommand(1);
  app.add_option("--schema", opt.schema_path,
                 "Schema JSON (default: built-in ontology)");
  app.add_flag("--lenient", opt.lenient,
               "Ignore unknown JSON keys; report validation errors without "
               "failing");

  auto *schema = app.add_subcommand("schema", "Print the active schema");
  schema->add_option("-o,--output", opt.output);

  auto *validate = app.add_subcommand("validate", "Validate a corpus");
  validate->add_option("-i,--input", opt.input)->required();
  validate->add_option("-o,--output", opt.output, "Report path (stdout)");

  auto *encode = app.add_subcommand("encode", "Corpus to grid JSONL");
  encode->add_option("-i,--input", opt.input)->required();
  encode->add_option("-o,--output", opt.output);

  auto *decode = app.add_subcommand("decode", "Grid JSONL to corpus");
  decode->add_option("-i,--input", opt.input)->required();
  decode->add_option("-o,--output", opt.output);
  decode->add_option("--tokens-from", opt.tokens_from,
                     "Corpus providing tokens (default: '_' placeholders)");
  decode->add_option("--max-nugget-length", opt.decode.max_nugget_length)
      ->capture_default_str();
  decode->add_option("--max-paths-per-head", opt.decode.max_paths_per_head)
      ->capture_default_str();
  decode->add_option("--diagnostics", opt.diagnostics,
                     "Write decode diagnostics JSON here");

  auto *score = app.add_subcommand("score", "Score predictions against gold");
  score->add_option("--pred", opt.pred)->required();
  score->add_option("--gold", opt.gold)->required();
  score->add_option("-o,--output", opt.output);
  score->add_option("--format", opt.format)
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  score->add_flag("--percent", opt.percent, "Scores on a 0-100 scale");

  auto *stats = app.add_subcommand("stats", "Density and complexity");
  stats->add_option("-i,--input", opt.inputs, "One or more corpus files")
      ->required();
  stats->add_option("-o,--output", opt.output);
  stats->add_option("--format", opt.format)
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  stats->add_option("--coverage", opt.coverage)
      ->check(CLI::IsMember({"distinct", "summed"}))
      ->capture_default_str();
  stats->add_option("--population", opt.population)
      ->check(CLI::IsMember({"dedup", "per-mention"}))
      ->capture_default_str();
  stats->add_option("--csv-dir", opt.csv_dir,
                    "Write label distribution CSVs, one column per input");

  auto *errors = app.add_subcommand("errors", "Error analysis");
  errors->add_option("--pred", opt.pred)->required();
  errors->add_option("--gold", opt.gold)->required();
  errors->add_option("-o,--output", opt.output);
  errors->add_option("--ai-context", opt.ai_context)
      ->check(CLI::IsMember({"matched", "any"}))
      ->capture_default_str();
  errors->add_option("--csv-dir", opt.csv_dir, "Write plot-ready CSVs here");

  auto *split = app.add_subcommand("split", "Seeded 80/10/10 document split");
  split->add_option("-i,--input", opt.input)->required();
  split->add_option("--out-dir", opt.out_dir)->required();
  split->add_option("--seed", opt.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*schema) return RunSchema(opt);
    if (*validate) return RunValidate(opt);
    if (*encode) return RunEncode(opt);
    if (*decode) return RunDecode(opt);
    if (*score) return RunScore(opt);
    if (*stats) return RunStats(opt);
    if (*errors) return RunErrors(opt);
    if (*split) return RunSplit(opt);
  } catch (const AlignmentError &e) {
    std::cerr << "evgrid: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError &e) {
    std::cerr << "evgrid: " << e.what() << "\n";
    return kExitIo;
  } catch (const FormatError &e) {
    std::cerr << "evgrid: " << e.what() << "\n";
    return kExitIo;
  } catch (const SchemaError &e) {
    std::cerr << "evgrid: schema: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error &e) {
    // Input and label errors: the data is readable but not valid.
    std::cerr << "evgrid: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const fs::filesystem_error &e) {
    std::cerr << "evgrid: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace evgrid

int main(int argc, char **argv) { return evgrid::Main(argc, argv); }
