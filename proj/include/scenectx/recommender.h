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

#ifndef SCENECTX_RECOMMENDER_H_
#define SCENECTX_RECOMMENDER_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "scenectx/cooccurrence.h"

namespace scenectx {

inline constexpr double kDefaultThreshold = 0.3;
inline constexpr int kDefaultTopN = 11;

// One admitted (scene, object) cell.
//   score       = m_ij / sum over scenes of m_kj   (object j's share in scene i)
//   exclusivity = m_ij / sum over objects of m_iz  (scene i's share held by j)
struct SceneScoreEntry {
  std::size_t scene_id = 0;
  std::size_t object_id = 0;
  std::uint64_t count = 0;
  double score = 0.0;
  double exclusivity = 0.0;

  friend bool operator==(const SceneScoreEntry&,
                         const SceneScoreEntry&) = default;
};

// The scored set before selection, in (scene, object) row-major order.
struct SceneScores {
  double threshold = kDefaultThreshold;
  std::vector<std::string> scene_names;
  std::vector<std::string> object_names;
  std::vector<SceneScoreEntry> entries;
};

struct CandidateSet {
  double threshold = kDefaultThreshold;
  int top_n = kDefaultTopN;
  std::vector<std::string> scene_names;
  std::vector<std::string> object_names;
  // Ordered by (score desc, scene_id asc, object_id asc).
  std::vector<SceneScoreEntry> entries;

  const std::string& scene_name(const SceneScoreEntry& e) const {
    return scene_names.at(e.scene_id);
  }
  const std::string& object_name(const SceneScoreEntry& e) const {
    return object_names.at(e.object_id);
  }

  // Object name -> its candidate scene names, in rank order.
  std::map<std::string, std::vector<std::string>> ByObject() const;
};

// Admits every cell with m_ij > 0, positive row and column sums, and
// exclusivity strictly above `threshold`. Throws Error unless
// 0 <= threshold < 1.
SceneScores ScoreScenes(const CooccurrenceMatrix& matrix, double threshold);

// Top `top_n` entries under the documented order. Throws Error for top_n < 1.
CandidateSet SelectCandidates(const SceneScores& scores, int top_n);

// Strict ordering used by SelectCandidates.
bool CandidateOrder(const SceneScoreEntry& a, const SceneScoreEntry& b);

// CSV: scene_name,object_name,score,exclusivity,rank preceded by a
// "# threshold_T=... top_n=..." comment. Scene/object ids of a parsed set
// index the names in order of first appearance in the file.
void WriteCandidatesCsv(const CandidateSet& candidates, std::ostream& out);
void WriteCandidatesCsvFile(const CandidateSet& candidates,
                            const std::string& path);
CandidateSet ReadCandidatesCsv(std::istream& in);
CandidateSet ReadCandidatesCsvFile(const std::string& path);

// Human-readable grouping of candidates by target object.
void WriteCandidateSummary(const CandidateSet& candidates, std::ostream& out);

}  // namespace scenectx

#endif  // SCENECTX_RECOMMENDER_H_
