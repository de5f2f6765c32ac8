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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "q7/kernels.hpp"

namespace k = q7::kernels;

namespace {

std::vector<std::int32_t> random_vec(std::mt19937_64& rng, std::size_t n, std::int32_t lim) {
  std::uniform_int_distribution<std::int32_t> d(-lim, lim);
  std::vector<std::int32_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST(Kernels, ScalarAlwaysAvailable) {
  EXPECT_TRUE(k::isa_available(k::Isa::scalar));
  EXPECT_TRUE(k::isa_available(k::active_isa()));
  EXPECT_EQ(k::isa_name(k::Isa::avx2), "avx2");
}

TEST(Kernels, ScalarAxpyByHand) {
  std::vector<std::int64_t> acc = {1, 2, 3};
  const std::vector<std::int32_t> x = {4, -5, 6};
  k::scalar::axpy(acc, x, -2);
  EXPECT_EQ(acc, (std::vector<std::int64_t>{-7, 12, -9}));
  EXPECT_EQ(k::scalar::max_abs(x), 6);
  const std::vector<std::int32_t> extreme = {INT32_MIN, 3};
  EXPECT_EQ(k::scalar::max_abs(extreme), 2147483648LL);
}

TEST(Kernels, DispatchMatchesScalar) {
  std::mt19937_64 rng(23);
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 31u, 64u, 1001u}) {
    const auto x = random_vec(rng, n, INT32_MAX);
    const std::int32_t s = static_cast<std::int32_t>(rng());
    std::vector<std::int64_t> a(n, 17), b(n, 17);
    k::scalar::axpy(a, x, s);
    k::axpy(b, x, s);
    EXPECT_EQ(a, b) << "n=" << n;
    EXPECT_EQ(k::scalar::max_abs(x), k::max_abs(x));
  }
}

#if defined(Q7_HAVE_AVX2)
TEST(Kernels, Avx2MatchesScalar) {
  if (!k::isa_available(k::Isa::avx2)) GTEST_SKIP() << "CPU lacks AVX2";
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 130;
    const auto x = random_vec(rng, n, trial % 2 ? 1000 : INT32_MAX);
    const std::int32_t s = static_cast<std::int32_t>(rng());
    std::vector<std::int64_t> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = b[i] = static_cast<std::int32_t>(rng());
    k::scalar::axpy(a, x, s);
    k::avx2::axpy(b, x, s);
    ASSERT_EQ(a, b) << "trial " << trial;
    ASSERT_EQ(k::scalar::max_abs(x), k::avx2::max_abs(x));
  }
  const std::vector<std::int32_t> extreme(9, INT32_MIN);
  EXPECT_EQ(k::avx2::max_abs(extreme), 2147483648LL);
}
#endif

#if defined(Q7_HAVE_NEON)
TEST(Kernels, NeonMatchesScalar) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 130;
    const auto x = random_vec(rng, n, INT32_MAX);
    const std::int32_t s = static_cast<std::int32_t>(rng());
    std::vector<std::int64_t> a(n), b(n);
    k::scalar::axpy(a, x, s);
    k::neon::axpy(b, x, s);
    ASSERT_EQ(a, b);
    ASSERT_EQ(k::scalar::max_abs(x), k::neon::max_abs(x));
  }
}
#endif
