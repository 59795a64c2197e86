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

#ifndef SCENECTX_CURATION_H_
#define SCENECTX_CURATION_H_

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "scenectx/ingestion.h"
#include "scenectx/manifest.h"
#include "scenectx/recommender.h"

namespace scenectx {

inline constexpr int kDefaultMinCleanSize = 1000;
inline constexpr int kDefaultCap = 5000;

// Scene images gathered for one target object. Ids are sorted and unique.
struct TargetPool {
  std::string object;
  std::vector<std::string> candidate_scenes;  // rank order
  std::vector<std::string> collected;         // Q_i
  std::vector<std::string> cleaned;           // G_i, subset of Q_i

  friend bool operator==(const TargetPool&, const TargetPool&) = default;
};

struct PoolSelection {
  std::vector<TargetPool> targets;  // sorted by object name
  std::vector<std::string> warnings;

  friend bool operator==(const PoolSelection&, const PoolSelection&) = default;
};

// Q_i: every pool image whose scene is a candidate scene of object i.
// Candidate scenes with no pool images produce a warning, not an error.
PoolSelection CollectPool(const std::vector<ScenePoolEntry>& pool,
                          const CandidateSet& candidates);

// G_i: images of `collected` carrying none of `target_objects` as a tag.
std::vector<std::string> CleanPool(const std::vector<std::string>& collected,
                                   const std::vector<ScenePoolEntry>& pool,
                                   const std::set<std::string>& target_objects);

// Fills `cleaned` for every target.
void CleanSelection(PoolSelection* selection,
                    const std::vector<ScenePoolEntry>& pool,
                    const std::set<std::string>& target_objects);

struct TargetPlan {
  std::string object;
  std::vector<std::string> candidate_scenes;
  std::size_t collected_size = 0;         // |Q_i|
  std::vector<std::string> cleaned;       // G_i
  bool accepted = false;                  // |G_i| >= min_clean_size
  std::vector<std::string> sampled;       // S_i, sorted

  friend bool operator==(const TargetPlan&, const TargetPlan&) = default;
};

struct AugmentationPlan {
  int min_clean_size = kDefaultMinCleanSize;
  int cap = kDefaultCap;
  std::uint64_t seed = 0;
  std::vector<TargetPlan> targets;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;

  std::size_t TotalSampled() const;
  friend bool operator==(const AugmentationPlan&,
                         const AugmentationPlan&) = default;
};

// Accepts targets with |G_i| >= min_clean_size and draws S_i uniformly
// without replacement, |S_i| = min(|G_i|, cap). Each target gets its own
// engine seeded from (seed, object name), so results do not depend on the
// order targets are processed in.
AugmentationPlan FinalizePlan(const PoolSelection& selection,
                              int min_clean_size, int cap, std::uint64_t seed);

// Name of the scene class added for `object`.
std::string SceneClassName(const std::string& object);

// Appends one "scene_for_<object>" class per accepted target (in base class
// id order) and one single-label record per sampled image. A sampled image
// whose id is already taken gets the suffix "@scene_for_<object>".
DatasetManifest EmitAugmentedManifest(const DatasetManifest& base,
                                      const AugmentationPlan& plan);

// Clean-set exchange file between the `clean` and `augment` subcommands.
// One line per target:
//   object <TAB> scene,scene <TAB> Q ids <TAB> G ids
// and "!warning <TAB> text" lines.
void WritePoolSelection(const PoolSelection& selection, std::ostream& out);
void WritePoolSelectionFile(const PoolSelection& selection,
                            const std::string& path);
PoolSelection ReadPoolSelection(std::istream& in);
PoolSelection ReadPoolSelectionFile(const std::string& path);

// Structured text report of the plan.
void WritePlanReport(const AugmentationPlan& plan, std::ostream& out);
void WritePlanReportFile(const AugmentationPlan& plan, const std::string& path);

}  // namespace scenectx

#endif  // SCENECTX_CURATION_H_
