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

#ifndef SCENECTX_SYNTH_H_
#define SCENECTX_SYNTH_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scenectx/ingestion.h"
#include "scenectx/manifest.h"

namespace scenectx {

struct PlantedScene {
  int scene = 0;          // index into the scene vocabulary
  double strength = 0.0;  // P(scene in an image's top-k)
};

// Synthetic corpus with planted scene-object affinities. Objects are
// 0-based foreground indices; object o becomes class id o + 1.
struct SynthConfig {
  int n_objects = 20;
  int n_scenes = 365;
  int n_images = 200;  // per object class
  std::map<int, PlantedScene> affinity;
  int top_k = 5;
  std::uint64_t seed = 0;
  int pool_size = 2000;  // pool images per planted scene
  double pool_contamination = 0.05;
  double expected_threshold = 0.3;
};

struct SynthCorpus {
  SceneVocabulary scenes;
  std::vector<ScenePrediction> predictions;
  DatasetManifest manifest;
  std::vector<ScenePoolEntry> pool;
  // (scene name, object name) pairs whose expected exclusivity exceeds
  // expected_threshold by construction.
  std::vector<std::pair<std::string, std::string>> expected;

  friend bool operator==(const SynthCorpus&, const SynthCorpus&) = default;
};

std::string SynthObjectName(int object);
std::string SynthSceneName(int scene);

// Deterministic in the config. Planted scenes enter an image's top-k only
// through the affinity draw; the remaining slots are filled uniformly
// without replacement from the non-planted scenes. Throws Error on an
// invalid or infeasible config.
SynthCorpus GenerateCorpus(const SynthConfig& config);

// File names used by WriteCorpus / ReadCorpus.
inline constexpr const char* kSynthScenesFile = "scenes.txt";
inline constexpr const char* kSynthPredictionsFile = "predictions.tsv";
inline constexpr const char* kSynthManifestFile = "manifest.tsv";
inline constexpr const char* kSynthPoolFile = "pool.tsv";
inline constexpr const char* kSynthExpectedFile = "expected.csv";

void WriteCorpus(const SynthCorpus& corpus, const std::string& dir);
SynthCorpus ReadCorpus(const std::string& dir);

}  // namespace scenectx

#endif  // SCENECTX_SYNTH_H_
