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

#ifndef SCENECTX_KERNELS_MASK_KERNELS_H_
#define SCENECTX_KERNELS_MASK_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <span>

// Inner loops over pixel grids and count matrices. Each kernel has a scalar
// reference implementation and, on x86-64, an AVX2 variant. Callers go
// through the dispatching entry points; the scalar:: and avx2:: namespaces
// are exposed so the variants can be tested against each other.
//
// Every variant must produce bit-identical results to scalar::.

namespace scenectx::kernels {

enum class Backend { kScalar, kAvx2 };

const char* ToString(Backend backend);
bool BackendSupported(Backend backend);
// Best backend the running CPU supports, unless SCENECTX_KERNELS=scalar.
Backend DetectBackend();
Backend ActiveBackend();
// Throws scenectx::Error if the backend is not supported here.
void SetBackend(Backend backend);

inline constexpr std::size_t kNotFound = static_cast<std::size_t>(-1);

struct ConfusionTally {
  std::uint64_t evaluated = 0;
  std::uint64_t ignored = 0;
};

// Position of the first value that is neither a class id below num_classes
// nor (when allow_ignore) the ignore value 255. kNotFound when all valid.
// num_classes must be in [1, 255].
std::size_t FindInvalidIndex(std::span<const std::uint8_t> values,
                             int num_classes, bool allow_ignore);

// counts is num_classes x num_classes, row = ground truth, column =
// prediction. Pixels whose ground truth is 255 are skipped and tallied as
// ignored. Inputs must already pass FindInvalidIndex (gt with ignore
// allowed, pred without).
ConfusionTally AccumulateConfusion(std::span<const std::uint8_t> gt,
                                   std::span<const std::uint8_t> pred,
                                   int num_classes,
                                   std::span<std::uint64_t> counts);

// matrix is rows x cols, row-major.
void RowSums(std::span<const std::uint64_t> matrix, std::size_t rows,
             std::size_t cols, std::span<std::uint64_t> out);
void ColSums(std::span<const std::uint64_t> matrix, std::size_t rows,
             std::size_t cols, std::span<std::uint64_t> out);

// out[j] = row[j] / denominator, denominator > 0.
void DivideRow(std::span<const std::uint64_t> row, std::uint64_t denominator,
               std::span<double> out);

namespace scalar {
std::size_t FindInvalidIndex(std::span<const std::uint8_t> values,
                             int num_classes, bool allow_ignore);
ConfusionTally AccumulateConfusion(std::span<const std::uint8_t> gt,
                                   std::span<const std::uint8_t> pred,
                                   int num_classes,
                                   std::span<std::uint64_t> counts);
void RowSums(std::span<const std::uint64_t> matrix, std::size_t rows,
             std::size_t cols, std::span<std::uint64_t> out);
void ColSums(std::span<const std::uint64_t> matrix, std::size_t rows,
             std::size_t cols, std::span<std::uint64_t> out);
void DivideRow(std::span<const std::uint64_t> row, std::uint64_t denominator,
               std::span<double> out);
}  // namespace scalar

#if defined(SCENECTX_HAVE_AVX2)
namespace avx2 {
std::size_t FindInvalidIndex(std::span<const std::uint8_t> values,
                             int num_classes, bool allow_ignore);
ConfusionTally AccumulateConfusion(std::span<const std::uint8_t> gt,
                                   std::span<const std::uint8_t> pred,
                                   int num_classes,
                                   std::span<std::uint64_t> counts);
void RowSums(std::span<const std::uint64_t> matrix, std::size_t rows,
             std::size_t cols, std::span<std::uint64_t> out);
void ColSums(std::span<const std::uint64_t> matrix, std::size_t rows,
             std::size_t cols, std::span<std::uint64_t> out);
void DivideRow(std::span<const std::uint64_t> row, std::uint64_t denominator,
               std::span<double> out);
}  // namespace avx2
#endif

}  // namespace scenectx::kernels

#endif  // SCENECTX_KERNELS_MASK_KERNELS_H_
