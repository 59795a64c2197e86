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

#include "scenectx/cooccurrence.h"

#include <algorithm>
#include <charconv>
#include <future>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "scenectx/error.h"
#include "scenectx/kernels/mask_kernels.h"
#include "scenectx/text_util.h"

namespace scenectx {

namespace {

constexpr const char* kStage = "cooc";

struct Job {
  const ScenePrediction* prediction;
  const ImageRecord* record;
};

void CountShard(std::span<const Job> jobs, const LabelSpace& space,
                const SceneVocabulary& vocabulary, int top_k,
                CooccurrenceMatrix* out) {
  for (const Job& job : jobs) {
    for (int slot = 0; slot < top_k; ++slot) {
      const auto scene = vocabulary.find(job.prediction->entries[slot].scene);
      if (!scene) {
        throw Error(kStage, "image \"" + job.record->image_id +
                                "\": scene \"" +
                                job.prediction->entries[slot].scene +
                                "\" not in vocabulary");
      }
      for (ClassId label : job.record->labels) {
        if (!space.is_foreground(label)) continue;
        ++out->at(*scene, static_cast<std::size_t>(label - 1));
      }
    }
  }
}

}  // namespace

CooccurrenceMatrix CooccurrenceMatrix::Zero(std::vector<std::string> scene_names,
                                            std::vector<std::string> object_names,
                                            int top_k) {
  CooccurrenceMatrix m;
  m.counts.assign(scene_names.size() * object_names.size(), 0);
  m.scene_names = std::move(scene_names);
  m.object_names = std::move(object_names);
  m.top_k = top_k;
  return m;
}

std::vector<std::uint64_t> CooccurrenceMatrix::RowSums() const {
  std::vector<std::uint64_t> sums(num_scenes());
  kernels::RowSums(counts, num_scenes(), num_objects(), sums);
  return sums;
}

std::vector<std::uint64_t> CooccurrenceMatrix::ColSums() const {
  std::vector<std::uint64_t> sums(num_objects());
  kernels::ColSums(counts, num_scenes(), num_objects(), sums);
  return sums;
}

CooccurrenceMatrix BuildCooccurrence(
    const std::vector<ScenePrediction>& predictions,
    const DatasetManifest& manifest, const SceneVocabulary& vocabulary,
    int top_k, int threads) {
  if (top_k < 1) throw Error(kStage, "top_k must be positive");
  const LabelSpace& space = manifest.space;

  std::unordered_map<std::string_view, const ScenePrediction*> by_id;
  by_id.reserve(predictions.size());
  for (const auto& p : predictions) by_id.emplace(p.image_id, &p);

  std::vector<Job> jobs;
  std::vector<std::string> missing;
  for (const auto& record : manifest.records) {
    const bool labeled = std::any_of(
        record.labels.begin(), record.labels.end(),
        [&space](ClassId id) { return space.is_foreground(id); });
    if (!labeled) continue;
    auto it = by_id.find(record.image_id);
    if (it == by_id.end()) {
      missing.push_back(record.image_id);
      continue;
    }
    if (static_cast<int>(it->second->entries.size()) < top_k) {
      throw Error(kStage, "top_k=" + std::to_string(top_k) + " but image \"" +
                              record.image_id + "\" has only " +
                              std::to_string(it->second->entries.size()) +
                              " predictions");
    }
    jobs.push_back({it->second, &record});
  }
  if (!missing.empty()) {
    std::string list;
    for (std::size_t i = 0; i < missing.size() && i < 10; ++i) {
      list += (i ? ", " : "") + missing[i];
    }
    if (missing.size() > 10) list += ", ...";
    throw Error(kStage, std::to_string(missing.size()) +
                            " labeled image(s) have no prediction: " + list);
  }

  auto zero = CooccurrenceMatrix::Zero(vocabulary.names(),
                                       space.foreground_names(), top_k);
  const std::size_t shards = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::max(threads, 1)), 1,
      std::max<std::size_t>(jobs.size(), 1));
  if (shards == 1) {
    CountShard(jobs, space, vocabulary, top_k, &zero);
    return zero;
  }

  std::vector<CooccurrenceMatrix> partial(shards, zero);
  std::vector<std::future<void>> pending;
  const std::size_t per = (jobs.size() + shards - 1) / shards;
  for (std::size_t s = 0; s < shards; ++s) {
    const std::size_t begin = std::min(jobs.size(), s * per);
    const std::size_t end = std::min(jobs.size(), begin + per);
    pending.push_back(std::async(std::launch::async, [&, s, begin, end] {
      CountShard(std::span<const Job>(jobs).subspan(begin, end - begin), space,
                 vocabulary, top_k, &partial[s]);
    }));
  }
  for (auto& f : pending) f.get();
  CooccurrenceMatrix total = std::move(partial.front());
  for (std::size_t s = 1; s < shards; ++s) {
    total = MergeCooccurrence(total, partial[s]);
  }
  return total;
}

CooccurrenceMatrix MergeCooccurrence(const CooccurrenceMatrix& a,
                                     const CooccurrenceMatrix& b) {
  if (a.scene_names != b.scene_names || a.object_names != b.object_names ||
      a.top_k != b.top_k || a.counts.size() != b.counts.size()) {
    throw Error(kStage, "cannot merge matrices with different shape, names "
                        "or top_k");
  }
  CooccurrenceMatrix out = a;
  for (std::size_t i = 0; i < out.counts.size(); ++i) out.counts[i] += b.counts[i];
  return out;
}

void WriteCooccurrenceCsv(const CooccurrenceMatrix& matrix, std::ostream& out) {
  auto check = [](const std::string& name) {
    if (name.find(',') != std::string::npos) {
      throw Error(kStage, "name \"" + name + "\" contains a comma");
    }
  };
  out << "# top_k=" << matrix.top_k << '\n' << "scene";
  for (const auto& name : matrix.object_names) {
    check(name);
    out << ',' << name;
  }
  out << '\n';
  for (std::size_t i = 0; i < matrix.num_scenes(); ++i) {
    check(matrix.scene_names[i]);
    out << matrix.scene_names[i];
    for (std::size_t j = 0; j < matrix.num_objects(); ++j) {
      out << ',' << matrix.at(i, j);
    }
    out << '\n';
  }
}

void WriteCooccurrenceCsvFile(const CooccurrenceMatrix& matrix,
                              const std::string& path) {
  auto out = OpenForWrite(path, kStage);
  WriteCooccurrenceCsv(matrix, out);
}

CooccurrenceMatrix ReadCooccurrenceCsv(std::istream& in) {
  CooccurrenceMatrix m;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  auto fail = [&line_no](const std::string& what) {
    throw Error(kStage, "matrix line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string_view body = Trim(std::string_view(line).substr(1));
      if (body.rfind("top_k=", 0) == 0) {
        const auto digits = body.substr(6);
        auto [ptr, ec] = std::from_chars(digits.data(),
                                         digits.data() + digits.size(), m.top_k);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
          fail("malformed top_k");
        }
      }
      continue;
    }
    auto fields = Split(line, ',');
    if (!have_header) {
      if (fields.front() != "scene") fail("header must start with \"scene\"");
      m.object_names.assign(fields.begin() + 1, fields.end());
      have_header = true;
      continue;
    }
    if (fields.size() != m.object_names.size() + 1) fail("wrong column count");
    m.scene_names.push_back(fields.front());
    for (std::size_t j = 1; j < fields.size(); ++j) {
      std::uint64_t v = 0;
      const auto& f = fields[j];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        fail("malformed count \"" + f + "\"");
      }
      m.counts.push_back(v);
    }
  }
  if (!have_header) throw Error(kStage, "matrix CSV has no header");
  return m;
}

CooccurrenceMatrix ReadCooccurrenceCsvFile(const std::string& path) {
  auto in = OpenForRead(path, kStage);
  return ReadCooccurrenceCsv(in);
}

}  // namespace scenectx
