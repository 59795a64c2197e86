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

#ifndef SCENECTX_LABEL_SPACE_H_
#define SCENECTX_LABEL_SPACE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace scenectx {

using ClassId = int;

inline constexpr std::uint8_t kIgnoreValue = 255;
inline constexpr std::string_view kBackgroundName = "background";

// Object classes (background at id 0) followed by scene classes. Ids are
// contiguous and assigned in declaration order.
class LabelSpace {
 public:
  LabelSpace() = default;

  // Throws Error on duplicate names, empty names, or when object_names[0]
  // is not "background".
  static LabelSpace Build(const std::vector<std::string>& object_names,
                          const std::vector<std::string>& scene_names);

  int num_classes() const { return static_cast<int>(names_.size()); }
  int num_objects() const { return num_objects_; }
  int num_foreground() const { return num_objects_ - 1; }
  int num_scenes() const { return num_classes() - num_objects_; }

  bool contains(ClassId id) const { return id >= 0 && id < num_classes(); }
  bool is_object(ClassId id) const { return id >= 0 && id < num_objects_; }
  bool is_foreground(ClassId id) const { return id > 0 && id < num_objects_; }
  bool is_scene(ClassId id) const {
    return id >= num_objects_ && id < num_classes();
  }

  const std::string& name(ClassId id) const { return names_.at(id); }
  std::optional<ClassId> find(std::string_view name) const;
  // Like find() but throws Error naming the missing class.
  ClassId id(std::string_view name) const;

  const std::vector<std::string>& names() const { return names_; }
  std::vector<std::string> object_names() const;
  std::vector<std::string> foreground_names() const;
  std::vector<std::string> scene_names() const;

  // Returns a new space with `scene_name` appended as a scene class.
  LabelSpace WithScene(const std::string& scene_name) const;

  friend bool operator==(const LabelSpace& a, const LabelSpace& b) {
    return a.names_ == b.names_ && a.num_objects_ == b.num_objects_;
  }

 private:
  std::vector<std::string> names_;
  int num_objects_ = 0;
  std::unordered_map<std::string, ClassId> index_;
};

// The 21 Pascal VOC 2012 classes in benchmark order (background first).
const std::vector<std::string>& VocClassNames();

// Short column names used by published result tables (bk .. tv).
const std::vector<std::string>& VocShortNames();

}  // namespace scenectx

#endif  // SCENECTX_LABEL_SPACE_H_
