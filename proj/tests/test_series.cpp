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

#include "oracle.hpp"
#include "q7/series.hpp"
#include "q7/theta.hpp"

using q7::Integer;
using q7::TruncSeries;

namespace {

TruncSeries S(std::vector<Integer> c) { return TruncSeries(std::move(c)); }
TruncSeries from(const oracle::Coeffs& c) { return TruncSeries(c); }

TruncSeries random_series(std::mt19937_64& rng, std::size_t order, int spread = 9) {
  std::uniform_int_distribution<int> d(-spread, spread);
  std::vector<Integer> c(order + 1);
  for (auto& x : c) x = d(rng);
  return S(c);
}

TruncSeries E(std::size_t order) { return q7::theta::euler_E(1, order); }

}  // namespace

TEST(Series, ConstructionAndAccessors) {
  EXPECT_THROW(S({}), q7::SeriesError);
  const auto m = TruncSeries::monomial(3, 7, 5);
  EXPECT_EQ(m.order(), 5u);
  EXPECT_EQ(m.coeffs().size(), 6u);
  EXPECT_EQ(m[3], 7);
  EXPECT_EQ(m.nonzero_count(), 1u);
  EXPECT_TRUE(TruncSeries::monomial(9, 1, 5).is_zero());
  EXPECT_THROW(m.at(6), std::out_of_range);
}

TEST(Series, AddExamples) {
  EXPECT_EQ(S({1, 1}) + S({1, -1}), S({2, 0}));
  const auto e = E(30);
  EXPECT_EQ(e + TruncSeries::zero(30), e);
  EXPECT_TRUE((e + (-e)).is_zero());
  EXPECT_EQ((S({1, 2, 3}) + S({1, 1})).order(), 1u);
}

TEST(Series, MulExamples) {
  auto a = TruncSeries::zero(5) + S({1, 1, 0, 0, 0, 0});
  auto b = S({1, -1, 0, 0, 0, 0});
  EXPECT_EQ(a * b, S({1, 0, -1, 0, 0, 0}));
  const auto e = E(40);
  EXPECT_EQ(e * TruncSeries::constant(1, 40), e);
  EXPECT_EQ((S({1, 2, 3}) * S({1, 1})).order(), 1u);
  namespace th = q7::theta;
  EXPECT_EQ(th::psi(1, 50) * th::psi(1, 50), th::psi(2, 50) * th::phi(1, 50));
}

TEST(Series, InvertExamples) {
  const auto g = q7::invert(S({1, -1, 0, 0, 0}));
  EXPECT_EQ(g, S({1, 1, 1, 1, 1}));
  EXPECT_EQ(q7::invert(E(10))[10], 42);
  const auto a = S({1, 1, 0, 0, 0, 0, 0});
  EXPECT_EQ(q7::invert(q7::invert(a)), a);
  EXPECT_EQ(q7::invert(S({-1, 0, 0})), S({-1, 0, 0}));
}

TEST(Series, InvertRejectsNonUnit) {
  try {
    q7::invert(S({2, 1, 1}));
    FAIL() << "expected SeriesError";
  } catch (const q7::SeriesError& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
  EXPECT_THROW(q7::invert(S({0, 1})), q7::SeriesError);
  EXPECT_THROW(S({1, 1}) / S({0, 1}), q7::SeriesError);
}

TEST(Series, DivExamples) {
  const auto e = E(20);
  EXPECT_EQ(e / e, TruncSeries::constant(1, 20));
  const auto cores = q7::pow(q7::theta::euler_E(7, 7), 7) / E(7);
  EXPECT_EQ(cores[6], 11);
  EXPECT_EQ(cores[7], 8);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_series(rng, 25);
    const auto b = from(oracle::random_unit(rng, 25));
    EXPECT_EQ(a / b, a * q7::invert(b));
  }
}

TEST(Series, ComposePower) {
  EXPECT_EQ(q7::compose_power(S({1, 1, 0, 0}), 2), S({1, 0, 1, 0}));
  const auto e = E(30);
  EXPECT_EQ(q7::compose_power(e, 1), e);
  EXPECT_EQ(q7::compose_power(e, 5).order(), 30u);
  EXPECT_THROW(q7::compose_power(e, 0), q7::SeriesError);
  EXPECT_EQ(q7::compose_power(q7::theta::psi(1, 60), 2), q7::theta::psi(2, 60));
  std::mt19937_64 rng(5);
  for (std::size_t j = 1; j <= 4; ++j) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto a = random_series(rng, 40);
      EXPECT_EQ(q7::compose_power(q7::compose_power(a, j), k), q7::compose_power(a, j * k));
    }
  }
}

TEST(Series, AlternateAndDissection) {
  EXPECT_EQ(q7::alternate(S({1, 1, 1})), S({1, -1, 1}));
  EXPECT_EQ(q7::even_part(S({1, 1, 1, 1})), S({1, 0, 1, 0}));
  EXPECT_EQ(q7::odd_part(q7::theta::phi(1, 3)), S({0, 2, 0, 0}));
  const auto cores = q7::pow(q7::theta::euler_E(7, 100), 7) / E(100);
  EXPECT_EQ(q7::even_part(cores), q7::exact_quotient(cores + q7::alternate(cores), 2));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_series(rng, 1 + i);
    EXPECT_EQ(q7::alternate(q7::alternate(a)), a);
    EXPECT_EQ(q7::even_part(a) + q7::odd_part(a), a);
  }
}

TEST(Series, ShiftScalePowCompare) {
  EXPECT_EQ(q7::shift(TruncSeries::constant(1, 5), 3), TruncSeries::monomial(3, 1, 5));
  EXPECT_EQ(q7::shift(S({1, 2, 3}), 2), S({0, 0, 1}));
  EXPECT_EQ(q7::scale(S({1, -2}), -3), S({-3, 6}));
  EXPECT_EQ(q7::pow(S({1, 1, 0, 0}), 3), S({1, 3, 3, 1}));
  EXPECT_EQ(q7::pow(S({5, 1}), 0), S({1, 0}));
  EXPECT_EQ(q7::first_negative(E(10)), 1u);
  EXPECT_EQ(q7::first_negative(S({0, 1, 2})), std::nullopt);
  const auto e = E(50);
  EXPECT_TRUE(q7::compare(e * q7::invert(e), TruncSeries::constant(1, 50)).pass());
  const auto c = q7::compare(S({1, 2, 3}), S({1, 5, 3, 9}));
  ASSERT_FALSE(c.pass());
  EXPECT_EQ(c.order, 2u);
  EXPECT_EQ(c.mismatch->exponent, 1u);
  EXPECT_EQ(c.mismatch->lhs, 2);
  EXPECT_EQ(c.mismatch->rhs, 5);
  EXPECT_THROW(q7::exact_quotient(S({1, 2}), 2), q7::SeriesError);
}

TEST(Series, Section) {
  const auto a = S({0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  EXPECT_EQ(q7::section(a, 3, 1), S({1, 4, 7}));
  EXPECT_EQ(q7::section(a, 2, 0), S({0, 2, 4, 6, 8}));
}

TEST(SeriesProperty, RingLaws) {
  std::mt19937_64 rng(11);
  for (std::size_t order = 0; order <= 24; ++order) {
    const auto a = random_series(rng, order);
    const auto b = random_series(rng, order);
    const auto c = random_series(rng, order);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(SeriesProperty, MulMatchesDenseOracle) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    const std::size_t order = 1 + rng() % 60;
    const auto a = random_series(rng, order, i < 20 ? 9 : 1 << 30);
    const auto b = random_series(rng, order, i < 20 ? 9 : 1 << 30);
    oracle::Coeffs ca(a.coeffs().begin(), a.coeffs().end());
    oracle::Coeffs cb(b.coeffs().begin(), b.coeffs().end());
    EXPECT_EQ(a * b, from(oracle::product(ca, cb)));
  }
}

TEST(SeriesProperty, SmallPathMatchesBigint) {
  std::mt19937_64 rng(17);
  int fast = 0;
  for (int i = 0; i < 60; ++i) {
    const std::size_t order = 1 + rng() % 300;
    const auto a = random_series(rng, order, 1000);
    const auto b = random_series(rng, order, 1000);
    const auto small = q7::detail::mul_small(a, b);
    if (small) {
      ++fast;
      EXPECT_EQ(*small, q7::detail::mul_bigint(a, b));
    }
  }
  EXPECT_GT(fast, 0);
  // Overflow guard: products this large must fall back.
  const auto big = random_series(rng, 200, 2000000000);
  EXPECT_FALSE(q7::detail::mul_small(big, big).has_value());
  EXPECT_EQ(big * big, q7::detail::mul_bigint(big, big));
}

TEST(SeriesProperty, RandomUnitInverses) {
  std::mt19937_64 rng(19);
  const auto one = TruncSeries::constant(1, 64);
  for (int i = 0; i < 100; ++i) {
    const auto a = from(oracle::random_unit(rng, 64));
    EXPECT_EQ(a * q7::invert(a), one);
    EXPECT_EQ(q7::invert(a), from(oracle::reciprocal(oracle::Coeffs(a.coeffs().begin(), a.coeffs().end()))));
  }
}

TEST(SeriesProperty, PartitionNumbers) {
  const auto p = oracle::partition_counts(40);
  const auto inv = q7::invert(E(40));
  for (std::size_t n = 0; n <= 40; ++n) EXPECT_EQ(inv[n], p[n]) << "n=" << n;
  // Growth past 64 bits is exact.
  const auto p400 = oracle::partition_counts(400);
  EXPECT_EQ(q7::invert(E(400))[400], p400[400]);
  EXPECT_GT(q7::invert(E(100))[100], Integer(100000000));
}

TEST(Series, ToString) {
  EXPECT_EQ(q7::to_string(S({1, -1, 0, 3})), "1 - q + 3*q^3 + O(q^4)");
}
