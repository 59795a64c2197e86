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

#include "scenectx/synth.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <random>
#include <set>

#include "scenectx/error.h"
#include "scenectx/text_util.h"

namespace scenectx {

namespace {

constexpr const char* kStage = "synth";

void Validate(const SynthConfig& c) {
  auto fail = [](const std::string& what) { throw Error(kStage, what); };
  if (c.n_objects < 1 || c.n_objects > 254) fail("n_objects must be in [1, 254]");
  if (c.n_scenes < 1) fail("n_scenes must be >= 1");
  if (c.n_images < 1) fail("n_images must be >= 1");
  if (c.top_k < 1 || c.top_k > c.n_scenes) fail("top_k must be in [1, n_scenes]");
  if (c.pool_size < 0) fail("pool_size must be >= 0");
  auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!prob(c.pool_contamination)) fail("pool_contamination must be in [0, 1]");
  if (!(c.expected_threshold >= 0.0 && c.expected_threshold < 1.0)) {
    fail("expected_threshold must be in [0, 1)");
  }
  for (const auto& [object, planted] : c.affinity) {
    if (object < 0 || object >= c.n_objects) fail("affinity object out of range");
    if (planted.scene < 0 || planted.scene >= c.n_scenes) {
      fail("affinity scene out of range");
    }
    if (!prob(planted.strength)) fail("affinity strength must be in [0, 1]");
  }
}

}  // namespace

std::string SynthObjectName(int object) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "object_%02d", object);
  return buf;
}

std::string SynthSceneName(int scene) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "scene_%03d", scene);
  return buf;
}

SynthCorpus GenerateCorpus(const SynthConfig& config) {
  Validate(config);
  std::set<int> planted_scenes;
  for (const auto& [object, planted] : config.affinity) {
    planted_scenes.insert(planted.scene);
  }
  std::vector<int> filler;
  for (int s = 0; s < config.n_scenes; ++s) {
    if (!planted_scenes.count(s)) filler.push_back(s);
  }
  if (static_cast<int>(filler.size()) < config.top_k) {
    throw Error(kStage, "top_k=" + std::to_string(config.top_k) +
                            " exceeds the " + std::to_string(filler.size()) +
                            " non-planted scenes");
  }

  SynthCorpus corpus;
  std::vector<std::string> scene_names;
  for (int s = 0; s < config.n_scenes; ++s) scene_names.push_back(SynthSceneName(s));
  corpus.scenes = SceneVocabulary(scene_names);

  std::vector<std::string> object_names{std::string(kBackgroundName)};
  for (int o = 0; o < config.n_objects; ++o) object_names.push_back(SynthObjectName(o));
  corpus.manifest.space = LabelSpace::Build(object_names, {});
  corpus.manifest.provenance.push_back("synthetic corpus, seed " +
                                       std::to_string(config.seed));

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<int> deck = filler;
  // Partial Fisher-Yates: the first `count` entries of `deck` become a
  // uniform sample without replacement.
  auto draw = [&](int count) {
    for (int i = 0; i < count; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, deck.size() - 1);
      std::swap(deck[i], deck[pick(rng)]);
    }
  };

  int image = 0;
  for (int o = 0; o < config.n_objects; ++o) {
    const auto planted = config.affinity.find(o);
    for (int n = 0; n < config.n_images; ++n) {
      char id[32];
      std::snprintf(id, sizeof(id), "img_%06d", image++);
      std::vector<int> scenes;
      if (planted != config.affinity.end() &&
          unit(rng) < planted->second.strength) {
        scenes.push_back(planted->second.scene);
      }
      const int fill = config.top_k - static_cast<int>(scenes.size());
      draw(fill);
      scenes.insert(scenes.end(), deck.begin(), deck.begin() + fill);

      std::vector<double> scores(config.top_k);
      for (auto& s : scores) s = unit(rng);
      std::sort(scores.begin(), scores.end(), std::greater<>());

      ScenePrediction prediction{id, {}};
      for (int slot = 0; slot < config.top_k; ++slot) {
        prediction.entries.push_back({scene_names[scenes[slot]], scores[slot]});
      }
      corpus.predictions.push_back(std::move(prediction));
      corpus.manifest.records.push_back(
          {id, {o + 1}, "", ImageSource::kTargetDataset});
    }
  }

  // Pool: pool_size images per planted scene plus a few distractor scenes.
  std::vector<std::pair<int, int>> pool_plan;  // (scene, count)
  for (int s : planted_scenes) pool_plan.emplace_back(s, config.pool_size);
  draw(std::min<int>(4, static_cast<int>(deck.size())));
  for (int i = 0; i < std::min<int>(4, static_cast<int>(deck.size())); ++i) {
    pool_plan.emplace_back(deck[i], config.pool_size / 4);
  }
  std::uniform_int_distribution<int> any_object(0, config.n_objects - 1);
  int pool_image = 0;
  for (const auto& [scene, count] : pool_plan) {
    for (int n = 0; n < count; ++n) {
      char id[32];
      std::snprintf(id, sizeof(id), "pool_%07d", pool_image++);
      ScenePoolEntry entry{id, scene_names[scene], {}};
      if (unit(rng) < config.pool_contamination) {
        entry.object_tags.insert(SynthObjectName(any_object(rng)));
      }
      corpus.pool.push_back(std::move(entry));
    }
  }

  for (int s : planted_scenes) {
    double total = 0.0;
    for (const auto& [object, planted] : config.affinity) {
      if (planted.scene == s) total += planted.strength;
    }
    for (const auto& [object, planted] : config.affinity) {
      if (planted.scene != s || planted.strength <= 0.0) continue;
      if (planted.strength / total > config.expected_threshold) {
        corpus.expected.emplace_back(scene_names[s], SynthObjectName(object));
      }
    }
  }
  return corpus;
}

void WriteCorpus(const SynthCorpus& corpus, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  WriteSceneVocabularyFile(corpus.scenes, (base / kSynthScenesFile).string());
  WritePredictionsFile(corpus.predictions,
                       (base / kSynthPredictionsFile).string());
  WriteManifestFile(corpus.manifest, (base / kSynthManifestFile).string());
  WriteScenePoolFile(corpus.pool, (base / kSynthPoolFile).string());
  auto out = OpenForWrite((base / kSynthExpectedFile).string(), kStage);
  out << "scene_name,object_name\n";
  for (const auto& [scene, object] : corpus.expected) {
    out << scene << ',' << object << '\n';
  }
}

SynthCorpus ReadCorpus(const std::string& dir) {
  const std::filesystem::path base(dir);
  SynthCorpus corpus;
  corpus.scenes = ReadSceneVocabularyFile((base / kSynthScenesFile).string());
  corpus.predictions = ParsePredictionsFile(
      (base / kSynthPredictionsFile).string(), &corpus.scenes);
  corpus.manifest = ReadManifestFile((base / kSynthManifestFile).string());
  corpus.pool = ParseScenePoolFile((base / kSynthPoolFile).string());
  auto in = OpenForRead((base / kSynthExpectedFile).string(), kStage);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto fields = Split(line, ',');
    if (fields.size() != 2) throw Error(kStage, "malformed expected.csv line");
    corpus.expected.emplace_back(fields[0], fields[1]);
  }
  return corpus;
}

}  // namespace scenectx
