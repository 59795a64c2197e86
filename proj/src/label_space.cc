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

#include "scenectx/label_space.h"

#include "scenectx/error.h"

namespace scenectx {

LabelSpace LabelSpace::Build(const std::vector<std::string>& object_names,
                             const std::vector<std::string>& scene_names) {
  if (object_names.empty() || object_names.front() != kBackgroundName) {
    throw Error("label_space", "first object class must be \"background\"");
  }
  LabelSpace space;
  space.num_objects_ = static_cast<int>(object_names.size());
  auto add = [&space](const std::string& name) {
    if (name.empty()) throw Error("label_space", "empty class name");
    if (name.find_first_of("\t\n,|") != std::string::npos) {
      throw Error("label_space",
                  "class name contains a reserved character: \"" + name + "\"");
    }
    const ClassId id = static_cast<ClassId>(space.names_.size());
    if (!space.index_.emplace(name, id).second) {
      throw Error("label_space", "duplicate class name \"" + name + "\"");
    }
    space.names_.push_back(name);
  };
  for (const auto& n : object_names) add(n);
  for (const auto& n : scene_names) add(n);
  return space;
}

std::optional<ClassId> LabelSpace::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ClassId LabelSpace::id(std::string_view name) const {
  auto found = find(name);
  if (!found) {
    throw Error("label_space", "unknown class \"" + std::string(name) + "\"");
  }
  return *found;
}

std::vector<std::string> LabelSpace::object_names() const {
  return {names_.begin(), names_.begin() + num_objects_};
}

std::vector<std::string> LabelSpace::foreground_names() const {
  if (num_objects_ == 0) return {};
  return {names_.begin() + 1, names_.begin() + num_objects_};
}

std::vector<std::string> LabelSpace::scene_names() const {
  return {names_.begin() + num_objects_, names_.end()};
}

LabelSpace LabelSpace::WithScene(const std::string& scene_name) const {
  auto scenes = scene_names();
  scenes.push_back(scene_name);
  return Build(object_names(), scenes);
}

const std::vector<std::string>& VocClassNames() {
  static const std::vector<std::string> kNames = {
      "background", "aeroplane",   "bicycle", "bird",  "boat",
      "bottle",     "bus",         "car",     "cat",   "chair",
      "cow",        "diningtable", "dog",     "horse", "motorbike",
      "person",     "pottedplant", "sheep",   "sofa",  "train",
      "tvmonitor"};
  return kNames;
}

const std::vector<std::string>& VocShortNames() {
  static const std::vector<std::string> kNames = {
      "bk",  "plane", "bicycle", "bird",  "boat",   "bottle", "bus",
      "car", "cat",   "chair",   "cow",   "table",  "dog",    "horse",
      "motor", "person", "plant", "sheep", "sofa", "train",  "tv"};
  return kNames;
}

}  // namespace scenectx
