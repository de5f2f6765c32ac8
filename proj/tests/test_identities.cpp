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

#include "q7/cores.hpp"
#include "q7/identities.hpp"
#include "q7/theta.hpp"

using q7::Integer;
using q7::TruncSeries;
namespace id = q7::identities;

namespace {

TruncSeries random_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_int_distribution<int> d(-50, 50);
  std::vector<Integer> c(order + 1);
  for (auto& x : c) x = d(rng);
  return TruncSeries(c);
}

id::IdentityRecord constant_record(std::string name, int lhs, int rhs) {
  return {std::move(name), "",
          {[lhs](std::size_t n) { return TruncSeries::constant(lhs, n); }, std::nullopt},
          {[rhs](std::size_t n) { return TruncSeries::constant(rhs, n); }, std::nullopt},
          ""};
}

}  // namespace

TEST(Hecke, Examples) {
  EXPECT_EQ(id::hecke_T2(TruncSeries::monomial(1, 1, 8)), TruncSeries::monomial(2, 4, 4));
  EXPECT_EQ(id::hecke_T2(TruncSeries::constant(1, 8)), TruncSeries::constant(5, 4));
  EXPECT_EQ(id::hecke_T2(TruncSeries({0, 1, 2, 3, 4, 5})), TruncSeries({0, 2, 8}));
  const std::size_t n = 100;
  const auto cores = q7::cores::seven_cores(2 * n);
  const auto lhs = id::hecke_T2(q7::shift(cores, 2));
  const auto c = cores.truncated(n);
  const auto cube = q7::pow(q7::theta::euler_E(1, n), 3) * q7::pow(q7::theta::euler_E(7, n), 3);
  const auto rest = lhs - q7::scale(q7::shift(c, 2), 5) - q7::shift(cube, 1);
  EXPECT_EQ(rest.order(), n);
  EXPECT_TRUE(rest.is_zero());
}

TEST(Hecke, Linear) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_series(rng, 2 * i + 1);
    const auto b = random_series(rng, 2 * i + 1);
    EXPECT_EQ(id::hecke_T2(a + b), id::hecke_T2(a) + id::hecke_T2(b));
    EXPECT_EQ(id::hecke_T2(q7::scale(a, -7)), q7::scale(id::hecke_T2(a), -7));
  }
}

TEST(Registry, Basics) {
  id::Registry r;
  r.add(constant_record("x", 1, 1));
  EXPECT_THROW(r.add(constant_record("x", 1, 1)), std::invalid_argument);
  EXPECT_TRUE(r.contains("x"));
  EXPECT_FALSE(r.contains("y"));
  EXPECT_THROW(r.find("y"), id::UnknownIdentity);
  EXPECT_THROW(id::verify(r, "y", 10), id::UnknownIdentity);
  EXPECT_TRUE(id::verify_all(id::Registry{}, 50).empty());
}

TEST(Registry, CorruptedRhsFailsAtZero) {
  const auto& std_reg = id::Registry::standard();
  auto rec = std_reg.find("eq-1.22");
  auto build = rec.rhs.build;
  rec.rhs.build = [build](std::size_t n) { return build(n) + TruncSeries::constant(1, n); };
  const auto report = id::verify(rec, 30);
  EXPECT_FALSE(report.passed());
  ASSERT_TRUE(report.mismatch.has_value());
  EXPECT_EQ(report.mismatch->exponent, 0u);
  EXPECT_EQ(report.mismatch->lhs + 1, report.mismatch->rhs);
}

TEST(Registry, StandardContents) {
  const auto& r = id::Registry::standard();
  for (const char* want :
       {"eq-1.3-t2", "eq-1.3-t3", "eq-1.3-t5", "eq-1.3-t7", "eq-1.17", "eq-1.18", "eq-1.20", "eq-1.21",
        "eq-1.22", "eq-1.23", "eq-1.24", "eq-1.25", "eq-1.31", "eq-1.32", "eq-1.34", "eq-1.35",
        "eq-1.36", "eq-3.1", "eq-3.2", "eq-3.3", "eq-3.4", "eq-3.5", "eq-3.6", "eq-3.7", "eq-3.8",
        "eq-3.14", "eq-3.15", "eq-3.16", "eq-3.22", "eq-3.23", "eq-3.24", "eq-3.28", "eq-4.4",
        "eq-4.5", "eq-4.8", "eq-4.11", "eq-4.15", "eq-5.1", "eq-5.2", "eq-5.3", "eq-5.4", "eq-5.5",
        "eq-5.6", "aux-phi-dissection", "aux-psi-square"}) {
    EXPECT_TRUE(r.contains(want)) << want;
  }
  EXPECT_GE(r.records().size(), 40u);
}

TEST(Registry, VerifyExamples) {
  const auto& r = id::Registry::standard();
  EXPECT_TRUE(id::verify(r, "eq-1.34", 100).passed());
  EXPECT_TRUE(id::verify(r, "eq-3.24", 200).passed());
  EXPECT_TRUE(id::verify(r, "eq-1.18", 200).passed());
  const auto rep = id::verify(r, "eq-3.2", 100);
  EXPECT_EQ(rep.order, 100u);
  EXPECT_EQ(rep.id, "eq-3.2");
}

TEST(Registry, VerifyAllOrderZeroAndDeterministicOrder) {
  const auto& r = id::Registry::standard();
  const auto zero = id::verify_all(r, 0, 4);
  ASSERT_EQ(zero.size(), r.records().size());
  for (std::size_t i = 0; i < zero.size(); ++i) {
    EXPECT_EQ(zero[i].id, r.records()[i].id);
    EXPECT_TRUE(zero[i].passed()) << zero[i].id;
  }
  const auto one = id::verify_all(r, 60, 1);
  const auto many = id::verify_all(r, 60, 7);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].id, many[i].id);
    EXPECT_EQ(one[i].status, many[i].status);
  }
}

TEST(Registry, AllPassAt200) {
  for (const auto& rep : id::verify_all(id::Registry::standard(), 200)) {
    EXPECT_TRUE(rep.passed()) << rep.id << " mismatch at q^"
                              << (rep.mismatch ? rep.mismatch->exponent : 0);
  }
}
