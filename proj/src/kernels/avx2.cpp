// Copyright 2026 The q7 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "q7/kernels.hpp"

namespace q7::kernels::avx2 {

void axpy(std::span<std::int64_t> acc, std::span<const std::int32_t> x, std::int32_t s) {
  const std::size_t n = x.size();
  const __m256i vs = _mm256_set1_epi64x(s);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x8 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    // _mm256_mul_epi32 takes the low signed 32 bits of each 64-bit lane.
    const __m256i lo = _mm256_cvtepi32_epi64(_mm256_castsi256_si128(x8));
    const __m256i hi = _mm256_cvtepi32_epi64(_mm256_extracti128_si256(x8, 1));
    __m256i* out = reinterpret_cast<__m256i*>(acc.data() + i);
    _mm256_storeu_si256(out, _mm256_add_epi64(_mm256_loadu_si256(out), _mm256_mul_epi32(lo, vs)));
    _mm256_storeu_si256(out + 1,
                        _mm256_add_epi64(_mm256_loadu_si256(out + 1), _mm256_mul_epi32(hi, vs)));
  }
  const std::int64_t s64 = s;
  for (; i < n; ++i) {
    acc[i] += s64 * x[i];
  }
}

std::int64_t max_abs(std::span<const std::int32_t> x) {
  const std::size_t n = x.size();
  std::int64_t m = 0;
  std::size_t i = 0;
  if (n >= 8) {
    // abs(INT32_MIN) wraps to INT32_MIN; treat it as unsigned for the max.
    __m256i vm = _mm256_setzero_si256();
    for (; i + 8 <= n; i += 8) {
      const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
      vm = _mm256_max_epu32(vm, _mm256_abs_epi32(v));
    }
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), vm);
    for (const std::uint32_t l : lanes) {
      if (static_cast<std::int64_t>(l) > m) m = l;
    }
  }
  for (; i < n; ++i) {
    const std::int64_t a = x[i] < 0 ? -static_cast<std::int64_t>(x[i]) : x[i];
    if (a > m) m = a;
  }
  return m;
}

}  // namespace q7::kernels::avx2
