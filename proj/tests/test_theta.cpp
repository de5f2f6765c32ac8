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

#include <thread>
#include <vector>

#include "oracle.hpp"
#include "q7/theta.hpp"

using q7::Integer;
using q7::TruncSeries;
namespace th = q7::theta;

namespace {

TruncSeries from(const oracle::Coeffs& c) { return TruncSeries(c); }
TruncSeries q(std::size_t k, std::size_t n) { return TruncSeries::monomial(k, 1, n); }

}  // namespace

TEST(Theta, EulerMatchesFiniteProduct) {
  const auto e12 = th::euler_E(1, 12);
  std::vector<std::size_t> support;
  for (std::size_t n = 0; n <= 12; ++n) {
    if (e12[n] != 0) support.push_back(n);
  }
  EXPECT_EQ(support, (std::vector<std::size_t>{0, 1, 2, 5, 7, 12}));
  EXPECT_EQ(e12, TruncSeries({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
  EXPECT_EQ(th::euler_E(7, 6), TruncSeries::constant(1, 6));
  EXPECT_EQ(th::euler_E(2, 10), q7::compose_power(th::euler_E(1, 10), 2));
  for (unsigned m : {1u, 2u, 3u, 7u, 14u, 28u}) {
    EXPECT_EQ(th::euler_E(m, 500), from(oracle::euler_product(m, 500))) << "m=" << m;
  }
  EXPECT_THROW(th::euler_E(0, 5), q7::SeriesError);
}

TEST(Theta, NamedSeriesExamples) {
  EXPECT_EQ(th::theta_f({1, 1, 1, 1}, 9), TruncSeries({1, 2, 0, 0, 2, 0, 0, 0, 0, 2}));
  EXPECT_EQ(th::theta_f({1, 1, 1, 3}, 10), TruncSeries({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}));
  EXPECT_EQ(th::phi(1, 9), th::theta_f({1, 1, 1, 1}, 9));
  EXPECT_EQ(th::psi(1, 10), th::theta_f({1, 1, 1, 3}, 10));
  EXPECT_EQ(th::theta_f({-1, 1, -1, 1}, 9), TruncSeries({1, -2, 0, 0, 2, 0, 0, 0, 0, -2}));
  // f(1, q): r = 0 is allowed when s >= 1.
  EXPECT_EQ(th::theta_f({1, 0, 1, 1}, 6), q7::scale(th::psi(1, 6), 2));
  EXPECT_THROW(th::theta_f({1, 0, 1, 0}, 5), q7::SeriesError);
  EXPECT_THROW(th::theta_f({2, 1, 1, 1}, 5), q7::SeriesError);
}

TEST(Theta, TripleProductForEveryArgumentInUse) {
  const std::size_t n = 200;
  const std::vector<std::pair<unsigned, unsigned>> pairs = {
      {1, 1}, {1, 3}, {1, 6}, {2, 5}, {3, 4}, {1, 13}, {3, 11}, {5, 9}, {2, 12}, {4, 10}, {6, 8},
      {2, 26}, {4, 24}, {10, 18}, {12, 16}, {0, 1}, {2, 2}, {4, 12}, {14, 14}, {28, 84}};
  for (const auto& [r, s] : pairs) {
    for (int sa : {1, -1}) {
      for (int sb : {1, -1}) {
        const th::ThetaArgs a{sa, r, sb, s};
        EXPECT_EQ(th::theta_f(a, n), th::theta_f_product(a, n))
            << "f(" << sa << "q^" << r << ", " << sb << "q^" << s << ")";
      }
    }
  }
}

TEST(Theta, PhiPsiTwoWays) {
  const std::size_t n = 200;
  for (unsigned m : {1u, 2u, 4u, 7u, 14u}) {
    const auto e1 = th::euler_E(m, n), e2 = th::euler_E(2 * m, n), e4 = th::euler_E(4 * m, n);
    EXPECT_EQ(th::phi(m, n), q7::pow(e2, 5) / (q7::pow(e4, 2) * q7::pow(e1, 2))) << m;
    EXPECT_EQ(th::psi(m, n), q7::pow(e2, 2) / e1) << m;
    EXPECT_EQ(th::chi_neg(m, n), e1 / e2) << m;
    EXPECT_EQ(th::phi(m, n), th::theta_f({1, m, 1, m}, n));
    EXPECT_EQ(th::psi(m, n), th::theta_f({1, m, 1, 3 * m}, n));
  }
}

TEST(Theta, ClassicalIdentities) {
  const std::size_t n = 200;
  const auto psi = th::psi(1, n), phi = th::phi(1, n);
  EXPECT_EQ(psi * psi, th::psi(2, n) * phi);
  EXPECT_EQ(phi, th::phi(4, n) + q7::scale(q(1, n) * th::psi(8, n), 2));
  const auto psi2 = th::psi(2, n), phi2 = th::phi(2, n), psi4 = th::psi(4, n);
  EXPECT_EQ(q7::pow(psi, 4), psi2 * psi2 * (phi2 * phi2 + q7::scale(q(1, n) * psi4 * psi4, 4)));
  const std::size_t m = 80;
  EXPECT_EQ(th::chi_neg(7, m) / th::chi_neg(1, m) * q7::pow(th::euler_E(7, m), 3),
            th::theta_f({1, 1, 1, 6}, m) * th::theta_f({1, 2, 1, 5}, m) *
                th::theta_f({1, 3, 1, 4}, m));
}

TEST(Theta, SigmaOmega) {
  const auto s = th::sigma(1, 100);
  EXPECT_EQ(s[0], 1);
  EXPECT_EQ(s[1], 2);
  EXPECT_EQ(s[2], 4);
  const auto w = th::omega(1, 100);
  EXPECT_EQ(w[0], 1);
  EXPECT_EQ(w[1], 0);
  EXPECT_EQ(w[2], 0);
  EXPECT_EQ(w[3], 1);
  const auto rest = s - th::sigma(2, 100) - q7::scale(q(1, 100) * th::psi(1, 100) * th::psi(7, 100), 2);
  EXPECT_TRUE(rest.is_zero());
  // Definitions spelled out.
  const std::size_t n = 150;
  EXPECT_EQ(th::sigma(1, n), th::phi(1, n) * th::phi(7, n) +
                                 q7::scale(q(2, n) * th::psi(2, n) * th::psi(14, n), 4));
  EXPECT_EQ(th::omega(1, n), th::psi(4, n) * th::phi(14, n) + q(3, n) * th::psi(28, n) * th::phi(2, n));
  for (unsigned k : {1u, 2u, 4u}) {
    EXPECT_EQ(th::sigma(k, n), q7::compose_power(th::sigma(1, n), k));
    EXPECT_EQ(th::omega(k, n), q7::compose_power(th::omega(1, n), k));
  }
}

TEST(Theta, CacheBehavesAsIfAbsent) {
  std::vector<TruncSeries> got(8, TruncSeries::zero(0));
  {
    std::vector<std::jthread> pool;
    for (int i = 0; i < 8; ++i) {
      pool.emplace_back([&, i] { got[i] = (i % 2) ? th::sigma(3, 120) : th::omega(3, 120); });
    }
  }
  for (int i = 0; i < 8; ++i) {
    EXPECT_EQ(got[i], (i % 2) ? th::detail::build_sigma(3, 120) : th::detail::build_omega(3, 120));
  }
  EXPECT_EQ(th::sigma(3, 60), th::detail::build_sigma(3, 60));
}

TEST(Theta, EtaQuotient) {
  th::EtaQuotientSpec cores{{{7, 7}, {1, -1}}};
  const auto c = th::eta_quotient(cores, 6);
  EXPECT_EQ(c, TruncSeries({1, 1, 2, 3, 5, 7, 11}));
  const auto rank2 = q7::shift(th::eta_quotient({{{28, 7}, {4, -1}}}, 20), 6);
  EXPECT_EQ(rank2[6], 1);
  EXPECT_THROW(th::EtaQuotientSpec{}.validate(), q7::SeriesError);
  EXPECT_THROW((th::EtaQuotientSpec{{{0, 1}}}.validate()), q7::SeriesError);
  EXPECT_EQ(th::eta_power(2, -3, 50), q7::invert(q7::pow(th::euler_E(2, 50), 3)));
}

TEST(Theta, JacobiCube) {
  const auto j = th::jacobi_cube(200);
  EXPECT_EQ(j[0], 1);
  EXPECT_EQ(j[1], -3);
  EXPECT_EQ(j[2], 0);
  EXPECT_EQ(j[3], 5);
  EXPECT_EQ(j[6], -7);
  const auto e = oracle::euler_product(1, 200);
  EXPECT_EQ(j, from(oracle::product(oracle::product(e, e), e)));
}
