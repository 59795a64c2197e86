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

#ifndef SCENECTX_COOCCURRENCE_H_
#define SCENECTX_COOCCURRENCE_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scenectx/ingestion.h"
#include "scenectx/manifest.h"

namespace scenectx {

// H x N occurrence counts: rows are scene classes, columns foreground object
// classes. counts(i, j) is the number of images labeled with object j whose
// top-k scenes include scene i.
struct CooccurrenceMatrix {
  std::vector<std::string> scene_names;
  std::vector<std::string> object_names;
  int top_k = 0;
  std::vector<std::uint64_t> counts;  // row-major, H * N

  static CooccurrenceMatrix Zero(std::vector<std::string> scene_names,
                                 std::vector<std::string> object_names,
                                 int top_k);

  std::size_t num_scenes() const { return scene_names.size(); }
  std::size_t num_objects() const { return object_names.size(); }
  std::uint64_t at(std::size_t scene, std::size_t object) const {
    return counts[scene * num_objects() + object];
  }
  std::uint64_t& at(std::size_t scene, std::size_t object) {
    return counts[scene * num_objects() + object];
  }

  std::vector<std::uint64_t> RowSums() const;
  std::vector<std::uint64_t> ColSums() const;

  friend bool operator==(const CooccurrenceMatrix&,
                         const CooccurrenceMatrix&) = default;
};

// Columns are the manifest's foreground classes in id order; rows follow
// `vocabulary`. Records without foreground labels are skipped. Work is split
// into `threads` contiguous shards and merged; the result does not depend on
// the thread count or on record order.
CooccurrenceMatrix BuildCooccurrence(
    const std::vector<ScenePrediction>& predictions,
    const DatasetManifest& manifest, const SceneVocabulary& vocabulary,
    int top_k, int threads = 1);

// Cell-wise sum. Throws Error unless shapes, names and top_k agree.
CooccurrenceMatrix MergeCooccurrence(const CooccurrenceMatrix& a,
                                     const CooccurrenceMatrix& b);

// "# top_k=<k>" line, then "scene,<object names>", then one row per scene.
void WriteCooccurrenceCsv(const CooccurrenceMatrix& matrix, std::ostream& out);
void WriteCooccurrenceCsvFile(const CooccurrenceMatrix& matrix,
                              const std::string& path);
CooccurrenceMatrix ReadCooccurrenceCsv(std::istream& in);
CooccurrenceMatrix ReadCooccurrenceCsvFile(const std::string& path);

}  // namespace scenectx

#endif  // SCENECTX_COOCCURRENCE_H_
