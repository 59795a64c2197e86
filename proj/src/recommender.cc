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

#include "scenectx/recommender.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "scenectx/error.h"
#include "scenectx/kernels/mask_kernels.h"
#include "scenectx/text_util.h"

namespace scenectx {

namespace {

constexpr const char* kStage = "recommend";

}  // namespace

std::map<std::string, std::vector<std::string>> CandidateSet::ByObject() const {
  std::map<std::string, std::vector<std::string>> grouped;
  for (const auto& e : entries) {
    grouped[object_name(e)].push_back(scene_name(e));
  }
  return grouped;
}

bool CandidateOrder(const SceneScoreEntry& a, const SceneScoreEntry& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.scene_id != b.scene_id) return a.scene_id < b.scene_id;
  return a.object_id < b.object_id;
}

SceneScores ScoreScenes(const CooccurrenceMatrix& matrix, double threshold) {
  if (!(threshold >= 0.0 && threshold < 1.0)) {
    throw Error(kStage, "threshold_T must be in [0, 1)");
  }
  const std::size_t rows = matrix.num_scenes();
  const std::size_t cols = matrix.num_objects();
  if (matrix.counts.size() != rows * cols) {
    throw Error(kStage, "matrix counts do not match its name lists");
  }
  SceneScores scores;
  scores.threshold = threshold;
  scores.scene_names = matrix.scene_names;
  scores.object_names = matrix.object_names;

  const auto row_sums = matrix.RowSums();
  const auto col_sums = matrix.ColSums();
  std::vector<double> exclusivity(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (row_sums[i] == 0) continue;
    const std::span<const std::uint64_t> row(matrix.counts.data() + i * cols,
                                             cols);
    kernels::DivideRow(row, row_sums[i], exclusivity);
    for (std::size_t j = 0; j < cols; ++j) {
      if (row[j] == 0 || col_sums[j] == 0) continue;
      if (!(exclusivity[j] > threshold)) continue;
      scores.entries.push_back(
          {i, j, row[j],
           static_cast<double>(row[j]) / static_cast<double>(col_sums[j]),
           exclusivity[j]});
    }
  }
  return scores;
}

CandidateSet SelectCandidates(const SceneScores& scores, int top_n) {
  if (top_n < 1) throw Error(kStage, "top_n must be at least 1");
  CandidateSet set;
  set.threshold = scores.threshold;
  set.top_n = top_n;
  set.scene_names = scores.scene_names;
  set.object_names = scores.object_names;
  set.entries = scores.entries;
  const std::size_t keep =
      std::min(set.entries.size(), static_cast<std::size_t>(top_n));
  std::partial_sort(set.entries.begin(), set.entries.begin() + keep,
                    set.entries.end(), CandidateOrder);
  set.entries.resize(keep);
  return set;
}

void WriteCandidatesCsv(const CandidateSet& candidates, std::ostream& out) {
  out << "# threshold_T=" << FormatDouble(candidates.threshold)
      << " top_n=" << candidates.top_n << '\n';
  out << "scene_name,object_name,score,exclusivity,rank\n";
  int rank = 1;
  for (const auto& e : candidates.entries) {
    out << candidates.scene_name(e) << ',' << candidates.object_name(e) << ','
        << FormatDouble(e.score) << ',' << FormatDouble(e.exclusivity) << ','
        << rank++ << '\n';
  }
}

void WriteCandidatesCsvFile(const CandidateSet& candidates,
                            const std::string& path) {
  auto out = OpenForWrite(path, kStage);
  WriteCandidatesCsv(candidates, out);
}

CandidateSet ReadCandidatesCsv(std::istream& in) {
  CandidateSet set;
  std::unordered_map<std::string, std::size_t> scene_ids, object_ids;
  auto intern = [](std::unordered_map<std::string, std::size_t>& ids,
                   std::vector<std::string>& names, const std::string& name) {
    auto [it, inserted] = ids.emplace(name, names.size());
    if (inserted) names.push_back(name);
    return it->second;
  };
  std::string line;
  int line_no = 0;
  bool have_header = false;
  auto fail = [&line_no](const std::string& what) {
    throw Error(kStage,
                "candidates line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream meta(line.substr(1));
      std::string token;
      while (meta >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        double v = 0.0;
        if (!ParseDouble(value, &v)) fail("malformed " + key);
        if (key == "threshold_T") set.threshold = v;
        if (key == "top_n") set.top_n = static_cast<int>(v);
      }
      continue;
    }
    auto fields = Split(line, ',');
    if (!have_header) {
      if (fields.size() != 5 || fields[0] != "scene_name") {
        fail("expected header scene_name,object_name,score,exclusivity,rank");
      }
      have_header = true;
      continue;
    }
    if (fields.size() != 5) fail("expected 5 columns");
    SceneScoreEntry e;
    e.scene_id = intern(scene_ids, set.scene_names, fields[0]);
    e.object_id = intern(object_ids, set.object_names, fields[1]);
    double rank = 0.0;
    if (!ParseDouble(fields[2], &e.score) ||
        !ParseDouble(fields[3], &e.exclusivity) ||
        !ParseDouble(fields[4], &rank)) {
      fail("malformed number");
    }
    if (static_cast<std::size_t>(rank) != set.entries.size() + 1) {
      fail("ranks must be consecutive from 1");
    }
    set.entries.push_back(e);
  }
  if (!have_header) throw Error(kStage, "candidates CSV has no header");
  return set;
}

CandidateSet ReadCandidatesCsvFile(const std::string& path) {
  auto in = OpenForRead(path, kStage);
  return ReadCandidatesCsv(in);
}

void WriteCandidateSummary(const CandidateSet& candidates, std::ostream& out) {
  out << "threshold_T=" << FormatDouble(candidates.threshold)
      << " top_n=" << candidates.top_n << " selected="
      << candidates.entries.size() << '\n';
  if (candidates.entries.empty()) {
    out << "no scene passed the exclusivity threshold\n";
    return;
  }
  for (const auto& [object, scenes] : candidates.ByObject()) {
    out << object << ":";
    for (const auto& e : candidates.entries) {
      if (candidates.object_name(e) != object) continue;
      out << ' ' << candidates.scene_name(e) << " (score "
          << FormatFixed(e.score, 4) << ", exclusivity "
          << FormatFixed(e.exclusivity, 4) << ")";
    }
    out << '\n';
  }
}

}  // namespace scenectx
