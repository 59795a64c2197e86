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

#include <algorithm>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "scenectx/error.h"
#include "scenectx/ingestion.h"
#include "scenectx/text_util.h"

namespace scenectx {

SceneVocabulary::SceneVocabulary(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error("ingestion", "empty scene name");
    if (!index_.emplace(names_[i], i).second) {
      throw Error("ingestion", "duplicate scene name \"" + names_[i] + "\"");
    }
  }
}

std::optional<std::size_t> SceneVocabulary::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SceneVocabulary ReadSceneVocabularyFile(const std::string& path) {
  auto in = OpenForRead(path, "ingestion");
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    auto name = Trim(line);
    if (name.empty() || name.front() == '#') continue;
    names.emplace_back(name);
  }
  return SceneVocabulary(std::move(names));
}

void WriteSceneVocabularyFile(const SceneVocabulary& vocabulary,
                              const std::string& path) {
  auto out = OpenForWrite(path, "ingestion");
  for (const auto& name : vocabulary.names()) out << name << '\n';
}

std::vector<ScenePrediction> ParsePredictions(std::istream& in,
                                              const SceneVocabulary* vocabulary) {
  std::vector<ScenePrediction> predictions;
  std::unordered_set<std::string> seen_ids;
  std::size_t top_k = 0;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw Error("ingestion",
                "predictions line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fields = Split(line, '\t');
    if (fields.size() < 3 || fields.size() % 2 == 0) {
      fail("expected image_id followed by (scene, score) pairs");
    }
    ScenePrediction prediction;
    prediction.image_id = fields[0];
    if (prediction.image_id.empty()) fail("empty image_id");
    const std::size_t k = (fields.size() - 1) / 2;
    if (top_k == 0) {
      top_k = k;
    } else if (k != top_k) {
      fail("has " + std::to_string(k) + " predictions, earlier lines have " +
           std::to_string(top_k));
    }
    std::unordered_set<std::string> scenes_in_line;
    for (std::size_t i = 0; i < k; ++i) {
      SceneScore entry;
      entry.scene = fields[1 + 2 * i];
      if (entry.scene.empty()) fail("empty scene name");
      if (vocabulary != nullptr && !vocabulary->find(entry.scene)) {
        fail("unknown scene \"" + entry.scene + "\"");
      }
      if (!scenes_in_line.insert(entry.scene).second) {
        fail("scene \"" + entry.scene + "\" repeated");
      }
      if (!ParseDouble(fields[2 + 2 * i], &entry.score)) {
        fail("malformed score \"" + fields[2 + 2 * i] + "\"");
      }
      if (!prediction.entries.empty() &&
          entry.score > prediction.entries.back().score) {
        fail("scores are not in descending order");
      }
      prediction.entries.push_back(std::move(entry));
    }
    if (!seen_ids.insert(prediction.image_id).second) {
      fail("duplicate image_id \"" + prediction.image_id + "\"");
    }
    predictions.push_back(std::move(prediction));
  }
  return predictions;
}

std::vector<ScenePrediction> ParsePredictionsFile(
    const std::string& path, const SceneVocabulary* vocabulary) {
  auto in = OpenForRead(path, "ingestion");
  return ParsePredictions(in, vocabulary);
}

void WritePredictions(const std::vector<ScenePrediction>& predictions,
                      std::ostream& out) {
  for (const auto& p : predictions) {
    out << p.image_id;
    for (const auto& e : p.entries) {
      out << '\t' << e.scene << '\t' << FormatDouble(e.score);
    }
    out << '\n';
  }
}

void WritePredictionsFile(const std::vector<ScenePrediction>& predictions,
                          const std::string& path) {
  auto out = OpenForWrite(path, "ingestion");
  WritePredictions(predictions, out);
}

SceneVocabulary VocabularyFromPredictions(
    const std::vector<ScenePrediction>& predictions) {
  std::vector<std::string> names;
  for (const auto& p : predictions) {
    for (const auto& e : p.entries) names.push_back(e.scene);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return SceneVocabulary(std::move(names));
}

std::vector<ScenePoolEntry> ParseScenePool(std::istream& in) {
  std::vector<ScenePoolEntry> pool;
  std::unordered_set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fields = Split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty() ||
        fields[1].empty()) {
      throw Error("ingestion", "pool line " + std::to_string(line_no) +
                                   ": expected image_id, scene, tags");
    }
    ScenePoolEntry entry{fields[0], fields[1], {}};
    if (fields.size() == 3 && !fields[2].empty()) {
      for (auto& tag : Split(fields[2], ',')) entry.object_tags.insert(tag);
    }
    if (!seen.insert(entry.image_id).second) {
      throw Error("ingestion", "pool line " + std::to_string(line_no) +
                                   ": duplicate image_id \"" + entry.image_id +
                                   "\"");
    }
    pool.push_back(std::move(entry));
  }
  return pool;
}

std::vector<ScenePoolEntry> ParseScenePoolFile(const std::string& path) {
  auto in = OpenForRead(path, "ingestion");
  return ParseScenePool(in);
}

void WriteScenePool(const std::vector<ScenePoolEntry>& pool,
                    std::ostream& out) {
  for (const auto& e : pool) {
    out << e.image_id << '\t' << e.scene_class << '\t'
        << Join({e.object_tags.begin(), e.object_tags.end()}, ",") << '\n';
  }
}

void WriteScenePoolFile(const std::vector<ScenePoolEntry>& pool,
                        const std::string& path) {
  auto out = OpenForWrite(path, "ingestion");
  WriteScenePool(pool, out);
}

}  // namespace scenectx
