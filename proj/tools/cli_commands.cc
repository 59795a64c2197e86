/* Copyright 2026 The scenectx Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cli_commands.h"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <set>

#include "scenectx/cooccurrence.h"
#include "scenectx/error.h"
#include "scenectx/evaluation.h"
#include "scenectx/ingestion.h"
#include "scenectx/manifest.h"
#include "scenectx/pipeline.h"
#include "scenectx/report.h"
#include "scenectx/text_util.h"

namespace scenectx::cli {

namespace fs = std::filesystem;

namespace {

std::string Require(const std::string& value, const char* flag,
                    const char* stage) {
  if (value.empty()) throw Error(stage, std::string("missing required ") + flag);
  return value;
}

std::string OrDefault(const std::string& value, const RunConfig& config,
                      const char* file) {
  return value.empty() ? (fs::path(config.out) / file).string() : value;
}

std::string OutPath(const RunConfig& config, const char* file) {
  fs::create_directories(config.out);
  return (fs::path(config.out) / file).string();
}

std::vector<std::string> EvalClassNames(const RunConfig& config) {
  if (config.manifest.empty()) return VocClassNames();
  return ReadManifestFile(config.manifest).space.object_names();
}

}  // namespace

int RunCooc(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto manifest = ReadManifestFile(Require(config.manifest, "--manifest", "cooc"));
  SceneVocabulary vocabulary;
  std::vector<ScenePrediction> predictions;
  const auto pred_path = Require(config.predictions, "--predictions", "cooc");
  if (!config.scenes.empty()) {
    vocabulary = ReadSceneVocabularyFile(config.scenes);
    predictions = ParsePredictionsFile(pred_path, &vocabulary);
  } else {
    predictions = ParsePredictionsFile(pred_path);
    vocabulary = VocabularyFromPredictions(predictions);
  }
  const auto matrix = BuildCooccurrence(predictions, manifest, vocabulary,
                                        config.top_k, config.threads);
  const auto path = OutPath(config, kCooccurrenceFile);
  WriteCooccurrenceCsvFile(matrix, path);
  out << "co-occurrence matrix " << matrix.num_scenes() << "x"
      << matrix.num_objects() << " (top_k=" << matrix.top_k << ") -> " << path
      << '\n';
  return 0;
}

int RunRecommend(const RunConfig& config, std::ostream& out,
                 std::ostream& err) {
  const auto matrix =
      ReadCooccurrenceCsvFile(OrDefault(config.cooc, config, kCooccurrenceFile));
  const auto candidates =
      SelectCandidates(ScoreScenes(matrix, config.threshold), config.top_n);
  WriteCandidatesCsvFile(candidates, OutPath(config, kCandidatesFile));
  {
    auto summary = OpenForWrite(OutPath(config, kSummaryFile), "recommend");
    WriteCandidateSummary(candidates, summary);
  }
  WriteCandidateSummary(candidates, out);
  if (candidates.entries.empty()) {
    err << "warning: recommend: no candidate scenes selected\n";
  }
  return 0;
}

int RunClean(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto candidates = ReadCandidatesCsvFile(
      OrDefault(config.candidates, config, kCandidatesFile));
  const auto pool = ParseScenePoolFile(Require(config.pool, "--pool", "clean"));
  const auto manifest =
      ReadManifestFile(Require(config.manifest, "--manifest", "clean"));
  const auto names = manifest.space.foreground_names();
  const std::set<std::string> targets(names.begin(), names.end());
  PoolSelection selection = CollectPool(pool, candidates);
  CleanSelection(&selection, pool, targets);
  WritePoolSelectionFile(selection, OutPath(config, kCleanSetsFile));
  for (const auto& t : selection.targets) {
    out << t.object << ": |Q|=" << t.collected.size()
        << " |G|=" << t.cleaned.size() << '\n';
  }
  for (const auto& w : selection.warnings) err << "warning: clean: " << w << '\n';
  return 0;
}

int RunAugment(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto selection =
      ReadPoolSelectionFile(OrDefault(config.clean_sets, config, kCleanSetsFile));
  const auto manifest =
      ReadManifestFile(Require(config.manifest, "--manifest", "augment"));
  const auto plan = FinalizePlan(selection, config.min_clean_size, config.cap,
                                 config.seed);
  const auto augmented = EmitAugmentedManifest(manifest, plan);
  WritePlanReportFile(plan, OutPath(config, kPlanFile));
  WriteManifestFile(augmented, OutPath(config, kAugmentedManifestFile));
  WritePlanReport(plan, out);
  out << "augmented manifest: " << augmented.records.size() << " records, "
      << augmented.space.num_classes() << " classes\n";
  for (const auto& t : plan.targets) {
    if (!t.accepted) {
      err << "warning: augment: target " << t.object << " rejected (|G|="
          << t.cleaned.size() << " < " << plan.min_clean_size << ")\n";
    }
  }
  return 0;
}

int RunEval(const RunConfig& config, std::ostream& out, std::ostream&) {
  const fs::path gt_dir = Require(config.gt_dir, "--gt-dir", "eval");
  const fs::path pred_dir = Require(config.pred_dir, "--pred-dir", "eval");
  if (!fs::is_directory(gt_dir)) {
    throw Error("eval", "not a directory: \"" + gt_dir.string() + "\"");
  }
  std::vector<MaskPairPaths> pairs;
  for (const auto& entry : fs::directory_iterator(gt_dir)) {
    if (entry.path().extension() != ".png") continue;
    const fs::path pred = pred_dir / entry.path().filename();
    if (!fs::exists(pred)) {
      throw Error("eval", "no prediction for \"" +
                              entry.path().filename().string() + "\" in \"" +
                              pred_dir.string() + "\"");
    }
    pairs.push_back({pred.string(), entry.path().string()});
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const MaskPairPaths& a, const MaskPairPaths& b) {
              return a.gt < b.gt;
            });
  if (pairs.empty()) throw Error("eval", "no .png masks in \"" + gt_dir.string() + "\"");

  const auto counts = EvaluateMaskFiles(pairs, EvalClassNames(config), config.threads);
  const auto report = ComputeIoU(counts);
  {
    auto f = OpenForWrite(OutPath(config, "confusion.csv"), "eval");
    WriteConfusionCsv(counts, f);
  }
  {
    auto f = OpenForWrite(OutPath(config, "iou.csv"), "eval");
    WriteIoUCsv(report, f);
  }
  {
    auto f = OpenForWrite(OutPath(config, "iou_table.txt"), "eval");
    WriteIoUTable(report, "prediction", f);
  }
  WriteIoUTable(report, "prediction", out);
  out << "images: " << pairs.size() << "  evaluated pixels: " << counts.total()
      << "  ignored pixels: " << counts.ignored_pixels() << '\n';
  out << "mIoU: "
      << (report.mean_iou ? FormatFixed(*report.mean_iou, 4) : std::string("undefined"))
      << '\n';
  return 0;
}

int RunVerifyTable(const RunConfig& config, std::ostream& out,
                   std::ostream& err) {
  const auto table =
      ParsePublishedTableFile(Require(config.table, "--table", "verify-table"));
  const auto report = VerifyPublishedMeans(table, config.tol);
  WriteVerificationReport(report, out);
  if (!config.ours.empty() || !config.baseline.empty()) {
    const auto deltas =
        ComputeDeltas(ToResultRow(table, Require(config.ours, "--ours", "verify-table")),
                      ToResultRow(table, Require(config.baseline, "--baseline",
                                                 "verify-table")));
    WriteDeltaReport(deltas, config.ours, config.baseline, out);
  }
  if (!report.all_pass()) {
    err << "warning: verify-table: " << report.rows.size() - report.passed()
        << " row(s) outside tolerance\n";
    if (config.strict) return kVerificationFailed;
  }
  return 0;
}

int RunFigure(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto counts =
      ReadConfusionCsvFile(OrDefault(config.confusion, config, "confusion.csv"));
  const auto normalized = NormalizeConfusion(counts);
  const auto csv_path = OutPath(config, "normalized_confusion.csv");
  const auto svg_path = OutPath(config, "heatmap.svg");
  {
    auto f = OpenForWrite(csv_path, "figure");
    WriteNormalizedCsv(normalized, f);
  }
  {
    auto f = OpenForWrite(svg_path, "figure");
    WriteHeatmapSvg(normalized, "normalized pixel confusion", f);
  }
  out << "wrote " << csv_path << " and " << svg_path << '\n';
  return 0;
}

int RunSynth(const RunConfig& config, std::ostream& out, std::ostream&) {
  SynthConfig synth = config.synth;
  synth.top_k = config.top_k;
  synth.seed = config.seed;
  synth.expected_threshold = config.threshold;
  for (const auto& plant : config.plants) {
    const auto parts = Split(plant, ':');
    double object = 0, scene = 0, strength = 0;
    if (parts.size() != 3 || !ParseDouble(parts[0], &object) ||
        !ParseDouble(parts[1], &scene) || !ParseDouble(parts[2], &strength)) {
      throw Error("synth", "--plant expects object:scene:strength, got \"" +
                               plant + "\"");
    }
    synth.affinity[static_cast<int>(object)] = {static_cast<int>(scene), strength};
  }
  const auto corpus = GenerateCorpus(synth);
  fs::create_directories(config.out);
  WriteCorpus(corpus, config.out);
  out << "synthetic corpus: " << corpus.predictions.size() << " images, "
      << corpus.pool.size() << " pool images, " << corpus.expected.size()
      << " planted pair(s) -> " << config.out << '\n';
  return 0;
}

}  // namespace scenectx::cli
