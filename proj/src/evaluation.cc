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

#include "scenectx/evaluation.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <istream>
#include <numeric>
#include <ostream>

#include "scenectx/error.h"
#include "scenectx/kernels/mask_kernels.h"
#include "scenectx/text_util.h"

namespace scenectx {

namespace {

constexpr const char* kStage = "eval";

}  // namespace

ConfusionMatrix::ConfusionMatrix(std::vector<std::string> class_names)
    : class_names_(std::move(class_names)) {
  if (class_names_.empty() || class_names_.size() > 255) {
    throw Error(kStage, "confusion matrix needs 1..255 classes");
  }
  counts_.assign(class_names_.size() * class_names_.size(), 0);
}

std::uint64_t ConfusionMatrix::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

void ConfusionMatrix::Accumulate(const SegMask& pred, const SegMask& gt) {
  if (pred.width != gt.width || pred.height != gt.height ||
      pred.values.size() != gt.values.size()) {
    throw Error(kStage, "prediction is " + std::to_string(pred.width) + "x" +
                            std::to_string(pred.height) +
                            " but ground truth is " + std::to_string(gt.width) +
                            "x" + std::to_string(gt.height));
  }
  const int n = num_classes();
  const std::size_t bad_gt = kernels::FindInvalidIndex(gt.values, n, true);
  if (bad_gt != kernels::kNotFound) {
    throw Error(kStage, "ground truth has invalid class " +
                            std::to_string(gt.values[bad_gt]) + " at pixel " +
                            std::to_string(bad_gt));
  }
  const std::size_t bad_pred = kernels::FindInvalidIndex(pred.values, n, false);
  if (bad_pred != kernels::kNotFound) {
    throw Error(kStage, "prediction has invalid class " +
                            std::to_string(pred.values[bad_pred]) +
                            " at pixel " + std::to_string(bad_pred) +
                            " (predictions must not contain 255)");
  }
  const auto tally = kernels::AccumulateConfusion(gt.values, pred.values, n,
                                                  counts_);
  ignored_ += tally.ignored;
}

void ConfusionMatrix::Merge(const ConfusionMatrix& other) {
  if (class_names_ != other.class_names_) {
    throw Error(kStage, "cannot merge confusion matrices over different classes");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  ignored_ += other.ignored_;
}

ConfusionMatrix AccumulateConfusion(const SegMask& pred, const SegMask& gt,
                                    ConfusionMatrix acc) {
  acc.Accumulate(pred, gt);
  return acc;
}

ConfusionMatrix EvaluateMaskFiles(const std::vector<MaskPairPaths>& pairs,
                                  const std::vector<std::string>& class_names,
                                  int threads) {
  const ConfusionMatrix zero(class_names);
  const int n = zero.num_classes();
  auto run = [&](std::size_t begin, std::size_t end) {
    ConfusionMatrix acc = zero;
    for (std::size_t i = begin; i < end; ++i) {
      const SegMask gt = ReadIndexedMask(pairs[i].gt, n);
      const SegMask pred = ReadIndexedMask(pairs[i].pred, n);
      try {
        acc.Accumulate(pred, gt);
      } catch (const Error& e) {
        throw Error(kStage, "\"" + pairs[i].pred + "\": " + e.what());
      }
    }
    return acc;
  };
  const std::size_t shards = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::max(threads, 1)), 1,
      std::max<std::size_t>(pairs.size(), 1));
  if (shards == 1) return run(0, pairs.size());
  const std::size_t per = (pairs.size() + shards - 1) / shards;
  std::vector<std::future<ConfusionMatrix>> pending;
  for (std::size_t s = 0; s < shards; ++s) {
    const std::size_t begin = std::min(pairs.size(), s * per);
    const std::size_t end = std::min(pairs.size(), begin + per);
    pending.push_back(std::async(std::launch::async, run, begin, end));
  }
  ConfusionMatrix total = zero;
  for (auto& f : pending) total.Merge(f.get());
  return total;
}

std::optional<double> NormalizedConfusion::at(int i, int j) const {
  if (!row_defined[i]) return std::nullopt;
  return values[static_cast<std::size_t>(i) * class_names.size() + j];
}

NormalizedConfusion NormalizeConfusion(const ConfusionMatrix& counts) {
  const auto n = static_cast<std::size_t>(counts.num_classes());
  NormalizedConfusion out;
  out.class_names = counts.class_names();
  out.values.assign(n * n, 0.0);
  out.row_defined.assign(n, false);
  std::vector<std::uint64_t> row_sums(n);
  kernels::RowSums(counts.counts(), n, n, row_sums);
  for (std::size_t i = 0; i < n; ++i) {
    if (row_sums[i] == 0) continue;
    out.row_defined[i] = true;
    kernels::DivideRow(std::span(counts.counts()).subspan(i * n, n),
                       row_sums[i], std::span(out.values).subspan(i * n, n));
  }
  return out;
}

IoUReport ComputeIoU(const ConfusionMatrix& counts) {
  const auto n = static_cast<std::size_t>(counts.num_classes());
  IoUReport report;
  report.class_names = counts.class_names();
  std::vector<std::uint64_t> rows(n), cols(n);
  kernels::RowSums(counts.counts(), n, n, rows);
  kernels::ColSums(counts.counts(), n, n, cols);
  double sum = 0.0;
  int defined = 0;
  for (std::size_t c = 0; c < n; ++c) {
    const std::uint64_t inter = counts.at(static_cast<int>(c), static_cast<int>(c));
    const std::uint64_t uni = rows[c] + cols[c] - inter;
    if (uni == 0) {
      report.per_class.push_back(std::nullopt);
      continue;
    }
    const double iou = static_cast<double>(inter) / static_cast<double>(uni);
    report.per_class.push_back(iou);
    sum += iou;
    ++defined;
  }
  if (defined > 0) report.mean_iou = sum / defined;
  return report;
}

ResultRow ToResultRow(const PublishedTable& table, std::string_view method) {
  const PublishedRow& row = table.row(method);
  return {row.method, table.class_names, row.values};
}

ResultRow ToResultRow(const IoUReport& report, std::string name) {
  ResultRow row{std::move(name), report.class_names, {}};
  for (const auto& v : report.per_class) row.values.push_back(v ? *v * 100.0 : 0.0);
  return row;
}

DeltaReport ComputeDeltas(const ResultRow& ours, const ResultRow& baseline) {
  if (ours.class_names != baseline.class_names ||
      ours.values.size() != baseline.values.size() ||
      ours.values.size() != ours.class_names.size()) {
    throw Error(kStage, "rows \"" + ours.name + "\" and \"" + baseline.name +
                            "\" have different class layouts");
  }
  DeltaReport report;
  report.class_names = ours.class_names;
  for (std::size_t c = 0; c < ours.values.size(); ++c) {
    const double d = ours.values[c] - baseline.values[c];
    report.deltas.push_back(d);
    if (c == 0 || d > report.max_delta) {
      report.max_delta = d;
      report.max_class = ours.class_names[c];
    }
  }
  return report;
}

bool VerificationReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const RowVerification& r) { return r.pass; });
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(),
                    [](const RowVerification& r) { return r.pass; }));
}

VerificationReport VerifyPublishedMeans(const PublishedTable& table,
                                        double tolerance) {
  VerificationReport report;
  report.tolerance = tolerance;
  for (const auto& row : table.rows) {
    RowVerification v;
    v.method = row.method;
    v.published_mean = row.published_mean;
    v.recomputed_mean =
        std::accumulate(row.values.begin(), row.values.end(), 0.0) /
        static_cast<double>(row.values.size());
    v.difference = v.recomputed_mean - v.published_mean;
    // Slack absorbs the representation error of decimal inputs such as 50.7.
    v.pass = std::abs(v.difference) <= tolerance + 1e-9;
    report.rows.push_back(std::move(v));
  }
  return report;
}

void WriteConfusionCsv(const ConfusionMatrix& counts, std::ostream& out) {
  out << "gt\\pred";
  for (const auto& name : counts.class_names()) out << ',' << name;
  out << '\n';
  for (int i = 0; i < counts.num_classes(); ++i) {
    out << counts.class_names()[i];
    for (int j = 0; j < counts.num_classes(); ++j) out << ',' << counts.at(i, j);
    out << '\n';
  }
}

ConfusionMatrix ReadConfusionCsv(std::istream& in) {
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    rows.push_back(Split(line, ','));
  }
  if (rows.empty()) throw Error(kStage, "confusion CSV is empty");
  std::vector<std::string> names(rows.front().begin() + 1, rows.front().end());
  if (rows.size() != names.size() + 1) {
    throw Error(kStage, "confusion CSV is not square");
  }
  ConfusionMatrix m(names);
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& fields = rows[i + 1];
    if (fields.size() != names.size() + 1 || fields.front() != names[i]) {
      throw Error(kStage, "confusion CSV row " + std::to_string(i + 1) +
                              " does not match the header");
    }
    for (std::size_t j = 0; j < names.size(); ++j) {
      std::uint64_t v = 0;
      const auto& f = fields[j + 1];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        throw Error(kStage, "malformed count \"" + f + "\"");
      }
      m.set(static_cast<int>(i), static_cast<int>(j), v);
    }
  }
  return m;
}

ConfusionMatrix ReadConfusionCsvFile(const std::string& path) {
  auto in = OpenForRead(path, kStage);
  return ReadConfusionCsv(in);
}

}  // namespace scenectx
