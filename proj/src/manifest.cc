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

#include "scenectx/manifest.h"

#include <istream>
#include <ostream>
#include <unordered_set>

#include "scenectx/error.h"
#include "scenectx/text_util.h"

namespace scenectx {

namespace {

constexpr std::string_view kHeaderTag = "#labels";
constexpr std::string_view kProvenanceTag = "## ";
constexpr std::string_view kSceneSeparator = "|";

}  // namespace

const char* ToString(ImageSource source) {
  switch (source) {
    case ImageSource::kTargetDataset:
      return "target";
    case ImageSource::kScenePool:
      return "scene";
    case ImageSource::kWeb:
      return "web";
  }
  return "target";
}

ImageSource ParseImageSource(const std::string& tag) {
  if (tag == "target") return ImageSource::kTargetDataset;
  if (tag == "scene") return ImageSource::kScenePool;
  if (tag == "web") return ImageSource::kWeb;
  throw Error("manifest", "unknown source tag \"" + tag + "\"");
}

const char* ToString(ManifestViolation::Rule rule) {
  switch (rule) {
    case ManifestViolation::Rule::kUnknownLabel:
      return "unknown-label";
    case ManifestViolation::Rule::kBackgroundLabel:
      return "background-label";
    case ManifestViolation::Rule::kSceneLabelOnTarget:
      return "scene-label-on-target";
    case ManifestViolation::Rule::kDuplicateImageId:
      return "duplicate-id";
    case ManifestViolation::Rule::kEmptyImageId:
      return "empty-id";
  }
  return "unknown";
}

std::vector<ManifestViolation> ValidateManifest(
    const DatasetManifest& manifest) {
  using Rule = ManifestViolation::Rule;
  std::vector<ManifestViolation> violations;
  std::unordered_set<std::string> seen;
  for (const auto& record : manifest.records) {
    if (record.image_id.empty()) {
      violations.push_back({record.image_id, Rule::kEmptyImageId, ""});
    } else if (!seen.insert(record.image_id).second) {
      violations.push_back({record.image_id, Rule::kDuplicateImageId, ""});
    }
    for (ClassId label : record.labels) {
      if (!manifest.space.contains(label)) {
        violations.push_back({record.image_id, Rule::kUnknownLabel,
                              "label id " + std::to_string(label)});
      } else if (label == 0) {
        violations.push_back({record.image_id, Rule::kBackgroundLabel, ""});
      } else if (manifest.space.is_scene(label) &&
                 record.source == ImageSource::kTargetDataset) {
        violations.push_back({record.image_id, Rule::kSceneLabelOnTarget,
                              manifest.space.name(label)});
      }
    }
  }
  return violations;
}

void WriteManifest(const DatasetManifest& manifest, std::ostream& out) {
  const LabelSpace& space = manifest.space;
  out << kHeaderTag;
  for (ClassId id = 0; id < space.num_classes(); ++id) {
    if (id == space.num_objects() && space.num_scenes() > 0) {
      out << '\t' << kSceneSeparator;
    }
    out << '\t' << space.name(id);
  }
  out << '\n';
  for (const auto& note : manifest.provenance) {
    out << kProvenanceTag << note << '\n';
  }
  for (const auto& record : manifest.records) {
    out << record.image_id << '\t';
    bool first = true;
    for (ClassId label : record.labels) {
      if (!first) out << ',';
      first = false;
      out << (space.contains(label) ? space.name(label) : std::to_string(label));
    }
    out << '\t' << record.mask_path << '\t' << ToString(record.source) << '\n';
  }
}

DatasetManifest ReadManifest(std::istream& in) {
  DatasetManifest manifest;
  bool have_header = false;
  std::string line;
  int line_no = 0;
  std::unordered_set<std::string> seen;
  auto fail = [&line_no](const std::string& what) {
    throw Error("manifest", "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind(kProvenanceTag, 0) == 0) {
      manifest.provenance.push_back(line.substr(kProvenanceTag.size()));
      continue;
    }
    if (line.front() == '#') {
      if (have_header) fail("second label header");
      auto fields = Split(line, '\t');
      if (fields.front() != kHeaderTag) fail("expected \"#labels\" header");
      std::vector<std::string> objects, scenes;
      bool in_scenes = false;
      for (std::size_t i = 1; i < fields.size(); ++i) {
        if (fields[i] == kSceneSeparator) {
          if (in_scenes) fail("repeated scene separator");
          in_scenes = true;
          continue;
        }
        (in_scenes ? scenes : objects).push_back(fields[i]);
      }
      manifest.space = LabelSpace::Build(objects, scenes);
      have_header = true;
      continue;
    }
    if (!have_header) fail("record before \"#labels\" header");
    auto fields = Split(line, '\t');
    if (fields.size() != 4) {
      fail("expected 4 tab-separated fields, got " +
           std::to_string(fields.size()));
    }
    ImageRecord record;
    record.image_id = fields[0];
    if (record.image_id.empty()) fail("empty image_id");
    if (!seen.insert(record.image_id).second) {
      fail("duplicate image_id \"" + record.image_id + "\"");
    }
    if (!fields[1].empty()) {
      for (const auto& name : Split(fields[1], ',')) {
        auto id = manifest.space.find(name);
        if (!id) fail("unknown label \"" + name + "\"");
        record.labels.insert(*id);
      }
    }
    record.mask_path = fields[2];
    record.source = ParseImageSource(fields[3]);
    manifest.records.push_back(std::move(record));
  }
  if (!have_header) throw Error("manifest", "missing \"#labels\" header");
  return manifest;
}

void WriteManifestFile(const DatasetManifest& manifest,
                       const std::string& path) {
  auto out = OpenForWrite(path, "manifest");
  WriteManifest(manifest, out);
}

DatasetManifest ReadManifestFile(const std::string& path) {
  auto in = OpenForRead(path, "manifest");
  return ReadManifest(in);
}

}  // namespace scenectx
