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

#ifndef SCENECTX_PIPELINE_H_
#define SCENECTX_PIPELINE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "scenectx/cooccurrence.h"
#include "scenectx/curation.h"
#include "scenectx/ingestion.h"
#include "scenectx/manifest.h"
#include "scenectx/recommender.h"

namespace scenectx {

struct PipelineParams {
  int top_k = 5;
  double threshold = kDefaultThreshold;
  int top_n = kDefaultTopN;
  int min_clean_size = kDefaultMinCleanSize;
  int cap = kDefaultCap;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct PipelineResult {
  CooccurrenceMatrix matrix;
  SceneScores scores;
  CandidateSet candidates;
  PoolSelection selection;
  AugmentationPlan plan;
  DatasetManifest augmented;
};

// File names shared by the pipeline and the CLI subcommands.
inline constexpr const char* kCooccurrenceFile = "cooccurrence.csv";
inline constexpr const char* kCandidatesFile = "candidates.csv";
inline constexpr const char* kSummaryFile = "candidates_summary.txt";
inline constexpr const char* kCleanSetsFile = "clean_sets.tsv";
inline constexpr const char* kPlanFile = "plan.txt";
inline constexpr const char* kAugmentedManifestFile = "augmented_manifest.tsv";

// co-occurrence -> scoring -> selection -> collect/clean -> plan -> manifest.
// Stage failures are rethrown as Error tagged with the stage name. Cleaning
// removes pool images tagged with any foreground class of `manifest`.
PipelineResult RunPipeline(const std::vector<ScenePrediction>& predictions,
                           const DatasetManifest& manifest,
                           const SceneVocabulary& vocabulary,
                           const std::vector<ScenePoolEntry>& pool,
                           const PipelineParams& params);

// Writes every intermediate artifact into `dir` (created if needed).
void PersistPipeline(const PipelineResult& result, const std::string& dir);

}  // namespace scenectx

#endif  // SCENECTX_PIPELINE_H_
