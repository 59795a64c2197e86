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

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "scenectx/error.h"
#include "scenectx/kernels/mask_kernels.h"

namespace scenectx::kernels {

namespace {

std::atomic<Backend>& ActiveSlot() {
  static std::atomic<Backend> slot{DetectBackend()};
  return slot;
}

}  // namespace

const char* ToString(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
  }
  return "scalar";
}

bool BackendSupported(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
#if defined(SCENECTX_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Backend DetectBackend() {
  const char* forced = std::getenv("SCENECTX_KERNELS");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) {
    return Backend::kScalar;
  }
  return BackendSupported(Backend::kAvx2) ? Backend::kAvx2 : Backend::kScalar;
}

Backend ActiveBackend() { return ActiveSlot().load(std::memory_order_relaxed); }

void SetBackend(Backend backend) {
  if (!BackendSupported(backend)) {
    throw Error("kernels", std::string("backend not supported on this CPU: ") +
                               ToString(backend));
  }
  ActiveSlot().store(backend, std::memory_order_relaxed);
}

#if defined(SCENECTX_HAVE_AVX2)
#define SCENECTX_DISPATCH(fn, ...)                 \
  (ActiveBackend() == Backend::kAvx2 ? avx2::fn(__VA_ARGS__) \
                                     : scalar::fn(__VA_ARGS__))
#else
#define SCENECTX_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

std::size_t FindInvalidIndex(std::span<const std::uint8_t> values,
                             int num_classes, bool allow_ignore) {
  return SCENECTX_DISPATCH(FindInvalidIndex, values, num_classes, allow_ignore);
}

ConfusionTally AccumulateConfusion(std::span<const std::uint8_t> gt,
                                   std::span<const std::uint8_t> pred,
                                   int num_classes,
                                   std::span<std::uint64_t> counts) {
  return SCENECTX_DISPATCH(AccumulateConfusion, gt, pred, num_classes, counts);
}

void RowSums(std::span<const std::uint64_t> matrix, std::size_t rows,
             std::size_t cols, std::span<std::uint64_t> out) {
  SCENECTX_DISPATCH(RowSums, matrix, rows, cols, out);
}

void ColSums(std::span<const std::uint64_t> matrix, std::size_t rows,
             std::size_t cols, std::span<std::uint64_t> out) {
  SCENECTX_DISPATCH(ColSums, matrix, rows, cols, out);
}

void DivideRow(std::span<const std::uint64_t> row, std::uint64_t denominator,
               std::span<double> out) {
  SCENECTX_DISPATCH(DivideRow, row, denominator, out);
}

#undef SCENECTX_DISPATCH

}  // namespace scenectx::kernels
