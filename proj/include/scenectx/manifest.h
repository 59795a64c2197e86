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

#ifndef SCENECTX_MANIFEST_H_
#define SCENECTX_MANIFEST_H_

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "scenectx/label_space.h"

namespace scenectx {

enum class ImageSource { kTargetDataset, kScenePool, kWeb };

const char* ToString(ImageSource source);
ImageSource ParseImageSource(const std::string& tag);

struct ImageRecord {
  std::string image_id;
  std::set<ClassId> labels;  // image-level; never contains background
  std::string mask_path;     // empty when absent
  ImageSource source = ImageSource::kTargetDataset;

  friend bool operator==(const ImageRecord&, const ImageRecord&) = default;
};

struct DatasetManifest {
  LabelSpace space;
  std::vector<ImageRecord> records;
  std::vector<std::string> provenance;

  friend bool operator==(const DatasetManifest&,
                         const DatasetManifest&) = default;
};

struct ManifestViolation {
  enum class Rule {
    kUnknownLabel,
    kBackgroundLabel,
    kSceneLabelOnTarget,
    kDuplicateImageId,
    kEmptyImageId,
  };
  std::string image_id;
  Rule rule;
  std::string detail;
};

const char* ToString(ManifestViolation::Rule rule);

// Violations are reported as data; an empty result means the manifest is
// well formed.
std::vector<ManifestViolation> ValidateManifest(const DatasetManifest& manifest);

// Text format, one record per line:
//   image_id <TAB> label,label,... <TAB> mask_path <TAB> source
// preceded by a "#labels" header listing every class name in id order, with
// a lone "|" between object classes and scene classes. "## " lines carry
// provenance notes.
void WriteManifest(const DatasetManifest& manifest, std::ostream& out);
DatasetManifest ReadManifest(std::istream& in);
void WriteManifestFile(const DatasetManifest& manifest, const std::string& path);
DatasetManifest ReadManifestFile(const std::string& path);

}  // namespace scenectx

#endif  // SCENECTX_MANIFEST_H_
