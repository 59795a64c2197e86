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

#include "scenectx/pipeline.h"

#include <filesystem>
#include <set>

#include "scenectx/error.h"
#include "scenectx/text_util.h"

namespace scenectx {

namespace {

template <typename Fn>
auto Stage(const char* name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.stage() == name) throw;
    throw Error(name, e.what());
  }
}

}  // namespace

PipelineResult RunPipeline(const std::vector<ScenePrediction>& predictions,
                           const DatasetManifest& manifest,
                           const SceneVocabulary& vocabulary,
                           const std::vector<ScenePoolEntry>& pool,
                           const PipelineParams& params) {
  PipelineResult r;
  r.matrix = Stage("cooc", [&] {
    return BuildCooccurrence(predictions, manifest, vocabulary, params.top_k,
                             params.threads);
  });
  r.scores = Stage("recommend",
                   [&] { return ScoreScenes(r.matrix, params.threshold); });
  r.candidates = Stage("recommend",
                       [&] { return SelectCandidates(r.scores, params.top_n); });
  r.selection = Stage("clean", [&] {
    auto names = manifest.space.foreground_names();
    const std::set<std::string> targets(names.begin(), names.end());
    PoolSelection selection = CollectPool(pool, r.candidates);
    CleanSelection(&selection, pool, targets);
    return selection;
  });
  r.plan = Stage("augment", [&] {
    return FinalizePlan(r.selection, params.min_clean_size, params.cap,
                        params.seed);
  });
  r.augmented =
      Stage("augment", [&] { return EmitAugmentedManifest(manifest, r.plan); });
  return r;
}

void PersistPipeline(const PipelineResult& result, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  WriteCooccurrenceCsvFile(result.matrix, (base / kCooccurrenceFile).string());
  WriteCandidatesCsvFile(result.candidates, (base / kCandidatesFile).string());
  {
    auto out = OpenForWrite((base / kSummaryFile).string(), "recommend");
    WriteCandidateSummary(result.candidates, out);
  }
  WritePoolSelectionFile(result.selection, (base / kCleanSetsFile).string());
  WritePlanReportFile(result.plan, (base / kPlanFile).string());
  WriteManifestFile(result.augmented,
                    (base / kAugmentedManifestFile).string());
}

}  // namespace scenectx
