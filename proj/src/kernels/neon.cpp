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

#include <arm_neon.h>

#include "q7/kernels.hpp"

namespace q7::kernels::neon {

void axpy(std::span<std::int64_t> acc, std::span<const std::int32_t> x, std::int32_t s) {
  const std::size_t n = x.size();
  const int32x2_t vs = vdup_n_s32(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const int32x4_t x4 = vld1q_s32(x.data() + i);
    int64x2_t lo = vld1q_s64(acc.data() + i);
    int64x2_t hi = vld1q_s64(acc.data() + i + 2);
    lo = vmlal_s32(lo, vget_low_s32(x4), vs);
    hi = vmlal_s32(hi, vget_high_s32(x4), vs);
    vst1q_s64(acc.data() + i, lo);
    vst1q_s64(acc.data() + i + 2, hi);
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
  if (n >= 4) {
    uint32x4_t vm = vdupq_n_u32(0);
    for (; i + 4 <= n; i += 4) {
      vm = vmaxq_u32(vm, vreinterpretq_u32_s32(vabsq_s32(vld1q_s32(x.data() + i))));
    }
    m = vmaxvq_u32(vm);
  }
  for (; i < n; ++i) {
    const std::int64_t a = x[i] < 0 ? -static_cast<std::int64_t>(x[i]) : x[i];
    if (a > m) m = a;
  }
  return m;
}

}  // namespace q7::kernels::neon
