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

// Random well-formed expression trees for round-trip properties.

#pragma once

#include <cstdint>
#include <random>

#include "q7/expr.hpp"

namespace testing_support {

class RandomExpr {
 public:
  explicit RandomExpr(std::uint64_t seed) : rng_(seed) {}

  q7::expr::Expr operator()(int depth) {
    if (depth == 0 || pick(4) == 0) return leaf();
    switch (pick(4)) {
      case 0:
        return q7::expr::make(static_cast<q7::expr::UnaryOp>(pick(5)), (*this)(depth - 1));
      case 1:
        return q7::expr::make_power((*this)(depth - 1), pick(4));
      default:
        return q7::expr::make(static_cast<q7::expr::BinaryOp>(pick(4)), (*this)(depth - 1), (*this)(depth - 1));
    }
  }

 private:
  unsigned pick(unsigned n) { return static_cast<unsigned>(rng_() % n); }

  q7::expr::Expr leaf() {
    switch (pick(4)) {
      case 0: {
        const auto kind = static_cast<q7::expr::AtomKind>(pick(6));
        const bool neg = kind == q7::expr::AtomKind::chi || pick(2) == 0;
        return q7::expr::make(q7::expr::Atom{kind, neg, 1 + pick(28)});
      }
      case 1:
        return q7::expr::make(q7::expr::Theta{pick(2) ? 1 : -1, pick(6), pick(2) ? 1 : -1, 1 + pick(14)});
      case 2:
        return q7::expr::make(q7::expr::QPower{pick(12)});
      default:
        return q7::expr::make(q7::expr::Literal{q7::Integer(pick(1000))});
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace testing_support
