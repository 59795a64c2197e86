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

#include "scenectx/curation.h"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "scenectx/error.h"
#include "scenectx/text_util.h"

namespace scenectx {

namespace {

constexpr const char* kStage = "curation";

std::uint64_t Fnv1a(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

void SortUnique(std::vector<std::string>* ids) {
  std::sort(ids->begin(), ids->end());
  ids->erase(std::unique(ids->begin(), ids->end()), ids->end());
}

}  // namespace

PoolSelection CollectPool(const std::vector<ScenePoolEntry>& pool,
                          const CandidateSet& candidates) {
  std::unordered_map<std::string, std::vector<const ScenePoolEntry*>> by_scene;
  for (const auto& entry : pool) by_scene[entry.scene_class].push_back(&entry);

  PoolSelection selection;
  std::set<std::string> warned;
  for (const auto& [object, scenes] : candidates.ByObject()) {
    TargetPool target;
    target.object = object;
    target.candidate_scenes = scenes;
    for (const auto& scene : scenes) {
      auto it = by_scene.find(scene);
      if (it == by_scene.end()) {
        if (warned.insert(scene).second) {
          selection.warnings.push_back("candidate scene \"" + scene +
                                       "\" has no pool images");
        }
        continue;
      }
      for (const auto* entry : it->second) {
        target.collected.push_back(entry->image_id);
      }
    }
    SortUnique(&target.collected);
    selection.targets.push_back(std::move(target));
  }
  return selection;
}

std::vector<std::string> CleanPool(const std::vector<std::string>& collected,
                                   const std::vector<ScenePoolEntry>& pool,
                                   const std::set<std::string>& target_objects) {
  std::unordered_map<std::string_view, const ScenePoolEntry*> by_id;
  by_id.reserve(pool.size());
  for (const auto& entry : pool) by_id.emplace(entry.image_id, &entry);

  std::vector<std::string> cleaned;
  for (const auto& id : collected) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw Error(kStage, "image \"" + id + "\" is not in the scene pool");
    }
    const auto& tags = it->second->object_tags;
    const bool contaminated =
        std::any_of(tags.begin(), tags.end(), [&](const std::string& tag) {
          return target_objects.count(tag) > 0;
        });
    if (!contaminated) cleaned.push_back(id);
  }
  return cleaned;
}

void CleanSelection(PoolSelection* selection,
                    const std::vector<ScenePoolEntry>& pool,
                    const std::set<std::string>& target_objects) {
  for (auto& target : selection->targets) {
    target.cleaned = CleanPool(target.collected, pool, target_objects);
  }
}

std::size_t AugmentationPlan::TotalSampled() const {
  std::size_t total = 0;
  for (const auto& t : targets) total += t.sampled.size();
  return total;
}

AugmentationPlan FinalizePlan(const PoolSelection& selection,
                              int min_clean_size, int cap, std::uint64_t seed) {
  if (min_clean_size < 1) throw Error(kStage, "min_clean_size must be >= 1");
  if (cap < 1) throw Error(kStage, "cap must be >= 1");
  AugmentationPlan plan;
  plan.min_clean_size = min_clean_size;
  plan.cap = cap;
  plan.seed = seed;
  plan.warnings = selection.warnings;

  for (const auto& target : selection.targets) {
    TargetPlan t;
    t.object = target.object;
    t.candidate_scenes = target.candidate_scenes;
    t.collected_size = target.collected.size();
    t.cleaned = target.cleaned;
    std::sort(t.cleaned.begin(), t.cleaned.end());
    t.accepted = t.cleaned.size() >= static_cast<std::size_t>(min_clean_size);
    if (t.accepted) {
      const std::size_t take =
          std::min(t.cleaned.size(), static_cast<std::size_t>(cap));
      std::seed_seq seq{static_cast<std::uint32_t>(seed),
                        static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(Fnv1a(t.object)),
                        static_cast<std::uint32_t>(Fnv1a(t.object) >> 32)};
      std::mt19937_64 engine(seq);
      t.sampled.reserve(take);
      std::sample(t.cleaned.begin(), t.cleaned.end(),
                  std::back_inserter(t.sampled), take, engine);
    }
    plan.targets.push_back(std::move(t));
  }

  std::map<std::string, std::vector<std::string>> owners;
  for (const auto& t : plan.targets) {
    for (const auto& id : t.sampled) owners[id].push_back(t.object);
  }
  std::size_t shared = 0;
  for (const auto& [id, objects] : owners) shared += objects.size() > 1;
  if (shared > 0) {
    plan.notes.push_back(std::to_string(shared) +
                         " sampled image(s) were added for more than one "
                         "target object");
  }
  return plan;
}

std::string SceneClassName(const std::string& object) {
  return "scene_for_" + object;
}

DatasetManifest EmitAugmentedManifest(const DatasetManifest& base,
                                      const AugmentationPlan& plan) {
  std::vector<const TargetPlan*> accepted;
  for (const auto& t : plan.targets) {
    if (!t.accepted) continue;
    if (!base.space.find(t.object)) {
      throw Error(kStage, "target \"" + t.object +
                              "\" is not a class of the base manifest");
    }
    accepted.push_back(&t);
  }
  std::sort(accepted.begin(), accepted.end(),
            [&base](const TargetPlan* a, const TargetPlan* b) {
              return base.space.id(a->object) < base.space.id(b->object);
            });

  DatasetManifest out = base;
  if (accepted.empty()) return out;

  auto scenes = base.space.scene_names();
  for (const auto* t : accepted) {
    const std::string name = SceneClassName(t->object);
    if (base.space.find(name)) {
      throw Error(kStage, "class \"" + name + "\" already exists");
    }
    scenes.push_back(name);
  }
  out.space = LabelSpace::Build(base.space.object_names(), scenes);

  std::unordered_set<std::string> taken;
  for (const auto& r : base.records) taken.insert(r.image_id);
  std::size_t renamed = 0;
  for (const auto* t : accepted) {
    const std::string scene_class = SceneClassName(t->object);
    const ClassId label = out.space.id(scene_class);
    for (const auto& id : t->sampled) {
      ImageRecord record;
      record.image_id = id;
      if (!taken.insert(id).second) {
        record.image_id = id + "@" + scene_class;
        ++renamed;
        if (!taken.insert(record.image_id).second) {
          throw Error(kStage, "cannot make image id \"" + id + "\" unique");
        }
      }
      record.labels = {label};
      record.source = ImageSource::kScenePool;
      out.records.push_back(std::move(record));
    }
    out.provenance.push_back("added " + std::to_string(t->sampled.size()) +
                             " scene images as \"" + scene_class + "\" (seed " +
                             std::to_string(plan.seed) + ")");
  }
  if (renamed > 0) {
    out.provenance.push_back(std::to_string(renamed) +
                             " scene record id(s) suffixed with @<class> to "
                             "stay unique");
  }
  return out;
}

void WritePoolSelection(const PoolSelection& selection, std::ostream& out) {
  out << "# object\tcandidate_scenes\tcollected\tcleaned\n";
  for (const auto& w : selection.warnings) out << "!warning\t" << w << '\n';
  for (const auto& t : selection.targets) {
    out << t.object << '\t' << Join(t.candidate_scenes, ",") << '\t'
        << Join(t.collected, ",") << '\t' << Join(t.cleaned, ",") << '\n';
  }
}

void WritePoolSelectionFile(const PoolSelection& selection,
                            const std::string& path) {
  auto out = OpenForWrite(path, kStage);
  WritePoolSelection(selection, out);
}

PoolSelection ReadPoolSelection(std::istream& in) {
  PoolSelection selection;
  std::string line;
  int line_no = 0;
  auto list = [](const std::string& field) {
    return field.empty() ? std::vector<std::string>{} : Split(field, ',');
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fields = Split(line, '\t');
    if (fields.front() == "!warning") {
      if (fields.size() != 2) {
        throw Error(kStage, "clean sets line " + std::to_string(line_no) +
                                ": malformed warning");
      }
      selection.warnings.push_back(fields[1]);
      continue;
    }
    if (fields.size() != 4) {
      throw Error(kStage, "clean sets line " + std::to_string(line_no) +
                              ": expected 4 tab-separated fields");
    }
    selection.targets.push_back(
        {fields[0], list(fields[1]), list(fields[2]), list(fields[3])});
  }
  return selection;
}

PoolSelection ReadPoolSelectionFile(const std::string& path) {
  auto in = OpenForRead(path, kStage);
  return ReadPoolSelection(in);
}

void WritePlanReport(const AugmentationPlan& plan, std::ostream& out) {
  out << "augmentation plan\n"
      << "min_clean_size=" << plan.min_clean_size << " cap=" << plan.cap
      << " seed=" << plan.seed << '\n';
  for (const auto& t : plan.targets) {
    out << "target " << t.object << '\n'
        << "  candidate_scenes: " << Join(t.candidate_scenes, ",") << '\n'
        << "  |Q|=" << t.collected_size << " |G|=" << t.cleaned.size()
        << " accepted=" << (t.accepted ? "yes" : "no")
        << " |S|=" << t.sampled.size() << '\n';
  }
  out << "total_added=" << plan.TotalSampled() << '\n';
  for (const auto& w : plan.warnings) out << "warning: " << w << '\n';
  for (const auto& n : plan.notes) out << "note: " << n << '\n';
}

void WritePlanReportFile(const AugmentationPlan& plan,
                         const std::string& path) {
  auto out = OpenForWrite(path, kStage);
  WritePlanReport(plan, out);
}

}  // namespace scenectx
