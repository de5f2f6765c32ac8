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

// Fixed-width coefficient kernels used by the series product fast path.
//
// Every kernel has a scalar reference implementation. SIMD variants must be
// bit-identical to it; the dispatcher picks the widest variant the running
// CPU supports.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace q7::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

/// True if the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// Variant used by the dispatching entry points. Honors Q7_FORCE_ISA
/// ("scalar", "avx2", "neon") when the forced variant is available.
Isa active_isa();

/// acc[i] += s * x[i] for i < x.size(). Requires acc.size() >= x.size().
/// The caller guarantees that no partial sum leaves the int64 range.
void axpy(std::span<std::int64_t> acc, std::span<const std::int32_t> x, std::int32_t s);

/// Largest |x[i]|, as a 64-bit value so that INT32_MIN is representable.
std::int64_t max_abs(std::span<const std::int32_t> x);

namespace scalar {
void axpy(std::span<std::int64_t> acc, std::span<const std::int32_t> x, std::int32_t s);
std::int64_t max_abs(std::span<const std::int32_t> x);
}  // namespace scalar

#if defined(Q7_HAVE_AVX2)
namespace avx2 {
void axpy(std::span<std::int64_t> acc, std::span<const std::int32_t> x, std::int32_t s);
std::int64_t max_abs(std::span<const std::int32_t> x);
}  // namespace avx2
#endif

#if defined(Q7_HAVE_NEON)
namespace neon {
void axpy(std::span<std::int64_t> acc, std::span<const std::int32_t> x, std::int32_t s);
std::int64_t max_abs(std::span<const std::int32_t> x);
}  // namespace neon
#endif

}  // namespace q7::kernels
