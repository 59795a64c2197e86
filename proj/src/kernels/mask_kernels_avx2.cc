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

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "scenectx/kernels/mask_kernels.h"

namespace scenectx::kernels::avx2 {

namespace {

constexpr std::size_t kBytesPerVec = 32;

inline std::uint64_t HorizontalSum(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

std::size_t FindInvalidIndex(std::span<const std::uint8_t> values,
                             int num_classes, bool allow_ignore) {
  const __m256i max_valid = _mm256_set1_epi8(static_cast<char>(num_classes - 1));
  const __m256i ignore = _mm256_set1_epi8(static_cast<char>(0xFF));
  const std::size_t n = values.size();
  std::size_t i = 0;
  for (; i + kBytesPerVec <= n; i += kBytesPerVec) {
    const __m256i v = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(values.data() + i));
    // v <= max_valid  <=>  max(v, max_valid) == max_valid (unsigned)
    __m256i ok = _mm256_cmpeq_epi8(_mm256_max_epu8(v, max_valid), max_valid);
    if (allow_ignore) ok = _mm256_or_si256(ok, _mm256_cmpeq_epi8(v, ignore));
    const auto bad = ~static_cast<std::uint32_t>(_mm256_movemask_epi8(ok));
    if (bad != 0) return i + static_cast<std::size_t>(std::countr_zero(bad));
  }
  const std::size_t tail =
      scalar::FindInvalidIndex(values.subspan(i), num_classes, allow_ignore);
  return tail == kNotFound ? kNotFound : i + tail;
}

ConfusionTally AccumulateConfusion(std::span<const std::uint8_t> gt,
                                   std::span<const std::uint8_t> pred,
                                   int num_classes,
                                   std::span<std::uint64_t> counts) {
  ConfusionTally tally;
  const __m256i ignore = _mm256_set1_epi8(static_cast<char>(0xFF));
  const __m256i stride = _mm256_set1_epi16(static_cast<short>(num_classes));
  alignas(32) std::uint16_t flat[kBytesPerVec];
  const std::size_t n = gt.size();
  std::size_t i = 0;
  for (; i + kBytesPerVec <= n; i += kBytesPerVec) {
    const __m256i g =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gt.data() + i));
    const __m256i p =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pred.data() + i));
    const auto skip =
        static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(g, ignore)));

    // flat = gt * num_classes + pred in 16-bit lanes; ids <= 254 so the
    // product fits. Ignored lanes overflow harmlessly and are skipped below.
    const __m256i g_lo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(g));
    const __m256i g_hi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(g, 1));
    const __m256i p_lo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(p));
    const __m256i p_hi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(p, 1));
    _mm256_store_si256(reinterpret_cast<__m256i*>(flat),
                       _mm256_add_epi16(_mm256_mullo_epi16(g_lo, stride), p_lo));
    _mm256_store_si256(reinterpret_cast<__m256i*>(flat + 16),
                       _mm256_add_epi16(_mm256_mullo_epi16(g_hi, stride), p_hi));

    if (skip == 0) {
      for (std::size_t j = 0; j < kBytesPerVec; ++j) ++counts[flat[j]];
      tally.evaluated += kBytesPerVec;
    } else {
      const int skipped = std::popcount(skip);
      tally.ignored += static_cast<std::uint64_t>(skipped);
      tally.evaluated += kBytesPerVec - static_cast<std::uint64_t>(skipped);
      for (std::uint32_t keep = ~skip; keep != 0; keep &= keep - 1) {
        ++counts[flat[std::countr_zero(keep)]];
      }
    }
  }
  const ConfusionTally tail = scalar::AccumulateConfusion(
      gt.subspan(i), pred.subspan(i), num_classes, counts);
  tally.evaluated += tail.evaluated;
  tally.ignored += tail.ignored;
  return tally;
}

void RowSums(std::span<const std::uint64_t> matrix, std::size_t rows,
             std::size_t cols, std::span<std::uint64_t> out) {
  for (std::size_t r = 0; r < rows; ++r) {
    const std::uint64_t* row = matrix.data() + r * cols;
    __m256i acc = _mm256_setzero_si256();
    std::size_t c = 0;
    for (; c + 4 <= cols; c += 4) {
      acc = _mm256_add_epi64(
          acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + c)));
    }
    std::uint64_t sum = HorizontalSum(acc);
    for (; c < cols; ++c) sum += row[c];
    out[r] = sum;
  }
}

void ColSums(std::span<const std::uint64_t> matrix, std::size_t rows,
             std::size_t cols, std::span<std::uint64_t> out) {
  for (std::size_t c = 0; c < cols; ++c) out[c] = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::uint64_t* row = matrix.data() + r * cols;
    std::size_t c = 0;
    for (; c + 4 <= cols; c += 4) {
      auto* dst = reinterpret_cast<__m256i*>(out.data() + c);
      const __m256i sum = _mm256_add_epi64(
          _mm256_loadu_si256(dst),
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + c)));
      _mm256_storeu_si256(dst, sum);
    }
    for (; c < cols; ++c) out[c] += row[c];
  }
}

void DivideRow(std::span<const std::uint64_t> row, std::uint64_t denominator,
               std::span<double> out) {
  // u64 -> f64 via the 2^52 magic constant; exact for values below 2^52.
  // Larger values take the scalar path, which is also exact up to 2^53 and
  // rounds identically above.
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 52;
  const __m256i magic_bits = _mm256_set1_epi64x(0x4330000000000000LL);
  const __m256d magic = _mm256_castsi256_pd(magic_bits);
  const __m256d d = _mm256_set1_pd(static_cast<double>(denominator));
  const __m256i limit = _mm256_set1_epi64x(static_cast<long long>(kLimit - 1));
  const std::size_t n = row.size();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256i v =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + j));
    // Signed compare is fine: anything with the top bit set reads negative
    // and is caught by the second test.
    const __m256i too_big = _mm256_or_si256(
        _mm256_cmpgt_epi64(v, limit),
        _mm256_cmpgt_epi64(_mm256_setzero_si256(), v));
    if (!_mm256_testz_si256(too_big, too_big)) {
      scalar::DivideRow(row.subspan(j, 4), denominator, out.subspan(j, 4));
      continue;
    }
    const __m256d as_double =
        _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(v, magic_bits)), magic);
    _mm256_storeu_pd(out.data() + j, _mm256_div_pd(as_double, d));
  }
  if (j < n) scalar::DivideRow(row.subspan(j), denominator, out.subspan(j));
}

}  // namespace scenectx::kernels::avx2
