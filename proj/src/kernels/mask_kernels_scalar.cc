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

#include "scenectx/kernels/mask_kernels.h"

namespace scenectx::kernels::scalar {

std::size_t FindInvalidIndex(std::span<const std::uint8_t> values,
                             int num_classes, bool allow_ignore) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int v = values[i];
    if (v < num_classes) continue;
    if (allow_ignore && v == 255) continue;
    return i;
  }
  return kNotFound;
}

ConfusionTally AccumulateConfusion(std::span<const std::uint8_t> gt,
                                   std::span<const std::uint8_t> pred,
                                   int num_classes,
                                   std::span<std::uint64_t> counts) {
  ConfusionTally tally;
  const std::size_t stride = static_cast<std::size_t>(num_classes);
  for (std::size_t i = 0; i < gt.size(); ++i) {
    if (gt[i] == 255) {
      ++tally.ignored;
      continue;
    }
    ++counts[gt[i] * stride + pred[i]];
    ++tally.evaluated;
  }
  return tally;
}

void RowSums(std::span<const std::uint64_t> matrix, std::size_t rows,
             std::size_t cols, std::span<std::uint64_t> out) {
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint64_t sum = 0;
    for (std::size_t c = 0; c < cols; ++c) sum += matrix[r * cols + c];
    out[r] = sum;
  }
}

void ColSums(std::span<const std::uint64_t> matrix, std::size_t rows,
             std::size_t cols, std::span<std::uint64_t> out) {
  for (std::size_t c = 0; c < cols; ++c) out[c] = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out[c] += matrix[r * cols + c];
  }
}

void DivideRow(std::span<const std::uint64_t> row, std::uint64_t denominator,
               std::span<double> out) {
  const double d = static_cast<double>(denominator);
  for (std::size_t j = 0; j < row.size(); ++j) {
    out[j] = static_cast<double>(row[j]) / d;
  }
}

}  // namespace scenectx::kernels::scalar
