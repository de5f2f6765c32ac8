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

#include "q7/cores.hpp"

#include <stdexcept>
#include <string>

#include "q7/theta.hpp"

namespace q7::cores {

using theta::eta_power;

TruncSeries seven_cores(std::size_t order) {
  return eta_power(7, 7, order) / theta::euler_E(1, order);
}

TruncSeries core_factor(std::size_t order) {
  return theta::euler_E(28, order) * eta_power(14, 3, order) * theta::euler_E(4, order) /
         theta::euler_E(2, order);
}

TruncSeries rank_series(int j, std::size_t order) {
  switch (j) {
    case -1:
      return shift(eta_power(28, 3, order) * eta_power(14, 2, order) * eta_power(4, 3, order) /
                       eta_power(2, 2, order),
                   3);
    case 2:
      return shift(eta_power(28, 7, order) / theta::euler_E(4, order), 6);
    case 0:
      return even_part(seven_cores(order)) - rank_series(2, order);
    case 1:
      return odd_part(seven_cores(order)) - rank_series(-1, order);
    default:
      throw std::invalid_argument("7-core BG-rank must be in [-1, 2], got " + std::to_string(j));
  }
}

TruncSeries cube_product(std::size_t order) {
  const TruncSeries cube = theta::jacobi_cube(order);
  return cube * compose_power(cube, 7);
}

std::size_t SevenCoreTable::rank_index(int j) {
  if (j < -1 || j > 2) throw std::out_of_range("7-core BG-rank must be in [-1, 2]");
  return static_cast<std::size_t>(j + 1);
}

SevenCoreTable::SevenCoreTable(std::size_t order)
    : order_(order),
      all_(seven_cores(order)),
      by_rank_{rank_series(-1, order), TruncSeries::zero(order), TruncSeries::zero(order),
               rank_series(2, order)},
      cube_(cube_product(order)) {
  by_rank_[1] = even_part(all_) - by_rank_[3];
  by_rank_[2] = odd_part(all_) - by_rank_[0];
}

}  // namespace q7::cores
