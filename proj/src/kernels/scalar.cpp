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

#include <cstdlib>

#include "q7/kernels.hpp"

namespace q7::kernels::scalar {

void axpy(std::span<std::int64_t> acc, std::span<const std::int32_t> x, std::int32_t s) {
  const std::int64_t s64 = s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc[i] += s64 * x[i];
  }
}

std::int64_t max_abs(std::span<const std::int32_t> x) {
  std::int64_t m = 0;
  for (const std::int32_t v : x) {
    const std::int64_t a = std::llabs(static_cast<std::int64_t>(v));
    if (a > m) m = a;
  }
  return m;
}

}  // namespace q7::kernels::scalar
