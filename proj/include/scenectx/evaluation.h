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

#ifndef SCENECTX_EVALUATION_H_
#define SCENECTX_EVALUATION_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scenectx/ingestion.h"

namespace scenectx {

// Square pixel-count matrix: rows are ground-truth classes, columns are
// predicted classes, background at index 0.
class ConfusionMatrix {
 public:
  ConfusionMatrix() = default;
  explicit ConfusionMatrix(std::vector<std::string> class_names);

  int num_classes() const { return static_cast<int>(class_names_.size()); }
  const std::vector<std::string>& class_names() const { return class_names_; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::uint64_t at(int gt, int pred) const {
    return counts_[static_cast<std::size_t>(gt) * num_classes() + pred];
  }
  void set(int gt, int pred, std::uint64_t value) {
    counts_[static_cast<std::size_t>(gt) * num_classes() + pred] = value;
  }
  std::uint64_t total() const;
  std::uint64_t ignored_pixels() const { return ignored_; }

  // counts[gt][pred] += 1 for every pixel whose ground truth is not 255.
  // Throws Error on a dimension mismatch, an out-of-range id, or any 255 in
  // the prediction.
  void Accumulate(const SegMask& pred, const SegMask& gt);
  // Throws Error when class names differ.
  void Merge(const ConfusionMatrix& other);

  friend bool operator==(const ConfusionMatrix&,
                         const ConfusionMatrix&) = default;

 private:
  std::vector<std::string> class_names_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t ignored_ = 0;
};

// Functional form of ConfusionMatrix::Accumulate.
ConfusionMatrix AccumulateConfusion(const SegMask& pred, const SegMask& gt,
                                    ConfusionMatrix acc);

struct MaskPairPaths {
  std::string pred;
  std::string gt;
};

// Reads and accumulates every pair, sharded over `threads` workers. The
// result is identical for any thread count and pair order.
ConfusionMatrix EvaluateMaskFiles(const std::vector<MaskPairPaths>& pairs,
                                  const std::vector<std::string>& class_names,
                                  int threads = 1);

// Row-normalized confusion: c_ij = v_ij / sum_h v_ih. Rows with no pixels are
// undefined.
struct NormalizedConfusion {
  std::vector<std::string> class_names;
  std::vector<double> values;      // row-major; 0 in undefined rows
  std::vector<bool> row_defined;

  std::optional<double> at(int i, int j) const;
};

NormalizedConfusion NormalizeConfusion(const ConfusionMatrix& counts);

struct IoUReport {
  std::vector<std::string> class_names;
  std::vector<std::optional<double>> per_class;  // in [0, 1]
  std::optional<double> mean_iou;                // over defined classes
};

// iou_c = v_cc / (row_c + col_c - v_cc); undefined when the class is absent
// from both ground truth and prediction.
IoUReport ComputeIoU(const ConfusionMatrix& counts);

// One labeled row of per-class results (e.g. a published method or an
// IoUReport scaled to percent).
struct ResultRow {
  std::string name;
  std::vector<std::string> class_names;
  std::vector<double> values;
};

ResultRow ToResultRow(const PublishedTable& table, std::string_view method);
// Percent scale; undefined classes become 0.
ResultRow ToResultRow(const IoUReport& report, std::string name);

struct DeltaReport {
  std::vector<std::string> class_names;
  std::vector<double> deltas;  // ours - baseline
  double max_delta = 0.0;
  std::string max_class;
};

// Throws Error when the class layouts differ.
DeltaReport ComputeDeltas(const ResultRow& ours, const ResultRow& baseline);

struct RowVerification {
  std::string method;
  double recomputed_mean = 0.0;
  double published_mean = 0.0;
  double difference = 0.0;  // recomputed - published
  bool pass = false;
};

struct VerificationReport {
  double tolerance = 0.0;
  std::vector<RowVerification> rows;
  bool all_pass() const;
  std::size_t passed() const;
};

// Recomputes each row's mean from its class cells; a row passes when
// |recomputed - published| <= tolerance.
VerificationReport VerifyPublishedMeans(const PublishedTable& table,
                                        double tolerance);

// Confusion counts as CSV: "gt\pred,<names>" header then one row per class.
void WriteConfusionCsv(const ConfusionMatrix& counts, std::ostream& out);
ConfusionMatrix ReadConfusionCsv(std::istream& in);
ConfusionMatrix ReadConfusionCsvFile(const std::string& path);

}  // namespace scenectx

#endif  // SCENECTX_EVALUATION_H_
