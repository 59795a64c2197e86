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

#ifndef SCENECTX_INGESTION_H_
#define SCENECTX_INGESTION_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scenectx/label_space.h"

namespace scenectx {

// Ordered scene-class vocabulary (e.g. the 365 Places categories).
class SceneVocabulary {
 public:
  SceneVocabulary() = default;
  explicit SceneVocabulary(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const SceneVocabulary& a, const SceneVocabulary& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

SceneVocabulary ReadSceneVocabularyFile(const std::string& path);
void WriteSceneVocabularyFile(const SceneVocabulary& vocabulary,
                              const std::string& path);

struct SceneScore {
  std::string scene;
  double score = 0.0;
  friend bool operator==(const SceneScore&, const SceneScore&) = default;
};

// Top-k scene predictions for one image, best first.
struct ScenePrediction {
  std::string image_id;
  std::vector<SceneScore> entries;
  friend bool operator==(const ScenePrediction&,
                         const ScenePrediction&) = default;
};

// predictions.tsv: image_id <TAB> scene <TAB> score [<TAB> scene <TAB> score]...
// Every line must carry the same number of pairs. When `vocabulary` is given,
// scene names outside it are rejected.
std::vector<ScenePrediction> ParsePredictions(
    std::istream& in, const SceneVocabulary* vocabulary = nullptr);
std::vector<ScenePrediction> ParsePredictionsFile(
    const std::string& path, const SceneVocabulary* vocabulary = nullptr);
void WritePredictions(const std::vector<ScenePrediction>& predictions,
                      std::ostream& out);
void WritePredictionsFile(const std::vector<ScenePrediction>& predictions,
                          const std::string& path);

// Sorted, de-duplicated scene names seen in `predictions`.
SceneVocabulary VocabularyFromPredictions(
    const std::vector<ScenePrediction>& predictions);

// Scene-pool metadata: one candidate scene image with externally supplied
// object tags (annotation or detector output).
struct ScenePoolEntry {
  std::string image_id;
  std::string scene_class;
  std::set<std::string> object_tags;
  friend bool operator==(const ScenePoolEntry&, const ScenePoolEntry&) = default;
};

// pool.tsv: image_id <TAB> scene_class <TAB> tag,tag,... ('#' lines skipped).
std::vector<ScenePoolEntry> ParseScenePool(std::istream& in);
std::vector<ScenePoolEntry> ParseScenePoolFile(const std::string& path);
void WriteScenePool(const std::vector<ScenePoolEntry>& pool, std::ostream& out);
void WriteScenePoolFile(const std::vector<ScenePoolEntry>& pool,
                        const std::string& path);

// Row-major grid of class ids, 255 marks ignored pixels.
struct SegMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> values;

  std::uint8_t at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }
  friend bool operator==(const SegMask&, const SegMask&) = default;
};

// Reads an 8-bit palette PNG; palette indices are class ids. Throws when the
// image is not 8-bit indexed or an index is outside {0..num_classes-1, 255}.
SegMask ReadIndexedMask(const std::string& path, int num_classes);
// Writes an 8-bit palette PNG using the VOC color map.
void WriteIndexedMask(const SegMask& mask, const std::string& path);

struct PublishedRow {
  std::string method;
  std::vector<double> values;  // one per class column, table order
  double published_mean = 0.0;
};

struct PublishedTable {
  std::vector<std::string> class_names;
  std::vector<PublishedRow> rows;

  // Throws Error when no row has this method name.
  const PublishedRow& row(std::string_view method) const;
};

inline constexpr int kPublishedClassColumns = 21;

// Tab- or comma-separated; the header is "method, <21 class names>, mean".
PublishedTable ParsePublishedTable(std::istream& in);
PublishedTable ParsePublishedTableFile(const std::string& path);

}  // namespace scenectx

#endif  // SCENECTX_INGESTION_H_
