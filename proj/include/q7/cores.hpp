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

// The 7-core generating function and its BG-rank components, built from
// eta-quotient closed forms and even/odd dissection.

#pragma once

#include <array>
#include <cstddef>

#include "q7/series.hpp"

namespace q7::cores {

/// E(q^7)^7 / E(q): sum of a_7(n) q^n.
TruncSeries seven_cores(std::size_t order);

/// C_{7,j}(q) for j in {-1, 0, 1, 2}. The extreme ranks use their
/// eta-quotients; ranks 0 and 1 subtract them from the even and odd parts
/// of seven_cores().
TruncSeries rank_series(int j, std::size_t order);

/// E(q^28) E(q^14)^3 E(q^4) / E(q^2), the common factor of the rank 0 and
/// rank 1 formulas.
TruncSeries core_factor(std::size_t order);

/// E(q)^3 E(q^7)^3 via Jacobi's cube series, with coefficients b(n).
TruncSeries cube_product(std::size_t order);

/// a_7, a_{7,j} and b tabulated once to a fixed order.
class SevenCoreTable {
 public:
  explicit SevenCoreTable(std::size_t order);

  std::size_t order() const { return order_; }
  const Integer& a7(std::size_t n) const { return all_[n]; }
  const Integer& a7j(int j, std::size_t n) const { return by_rank_[rank_index(j)][n]; }
  const Integer& b(std::size_t n) const { return cube_[n]; }

  const TruncSeries& series() const { return all_; }
  const TruncSeries& rank(int j) const { return by_rank_[rank_index(j)]; }

 private:
  static std::size_t rank_index(int j);

  std::size_t order_;
  TruncSeries all_;
  std::array<TruncSeries, 4> by_rank_;
  TruncSeries cube_;
};

}  // namespace q7::cores
