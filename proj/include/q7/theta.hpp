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

// Constructors for the named q-series: Euler products, Ramanujan's theta
// function f(a, b) and its specializations, eta-quotients, and the septic
// combinations sigma and omega.

#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "q7/series.hpp"

namespace q7::theta {

/// Formal theta argument pair a = sign_a q^r, b = sign_b q^s with r + s >= 1.
struct ThetaArgs {
  int sign_a = 1;
  unsigned r = 1;
  int sign_b = 1;
  unsigned s = 1;

  /// Throws SeriesError unless both signs are +-1 and r + s >= 1.
  void validate() const;
  friend bool operator==(const ThetaArgs&, const ThetaArgs&) = default;
};

/// prod_i E(q^i)^{exponent_i}.
struct EtaQuotientSpec {
  std::map<unsigned, int> factors;

  void validate() const;
  std::string to_string() const;
};

/// E(q^m) = prod_{j >= 1} (1 - q^{mj}), from the pentagonal number series.
TruncSeries euler_E(unsigned m, std::size_t order);

/// prod_{n >= 0} (1 - x y^n q^{a + n*step}) with x, y in {+1, -1}; step >= 1.
/// With x = y = 1 this is the Pochhammer symbol (q^a; q^step)_inf.
TruncSeries pochhammer(int x, unsigned a, int y, unsigned step, std::size_t order);

/// Bilateral sum f(a, b) = sum_n a^{n(n+1)/2} b^{n(n-1)/2}.
TruncSeries theta_f(const ThetaArgs& args, std::size_t order);

/// Jacobi triple product (-a; ab)(-b; ab)(ab; ab), the product side of f(a, b).
TruncSeries theta_f_product(const ThetaArgs& args, std::size_t order);

/// phi(q^m) = f(q^m, q^m).
TruncSeries phi(unsigned m, std::size_t order);
/// psi(q^m) = f(q^m, q^{3m}).
TruncSeries psi(unsigned m, std::size_t order);
/// chi(-q^m) = (q^m; q^{2m})_inf.
TruncSeries chi_neg(unsigned m, std::size_t order);

/// sigma(q^k) where sigma(q) = phi(q)phi(q^7) + 4q^2 psi(q^2)psi(q^14). Cached.
TruncSeries sigma(unsigned k, std::size_t order);
/// omega(q^k) where omega(q) = psi(q^4)phi(q^14) + q^3 psi(q^28)phi(q^2). Cached.
TruncSeries omega(unsigned k, std::size_t order);

TruncSeries eta_quotient(const EtaQuotientSpec& spec, std::size_t order);

/// E(q)^e, a convenience for eta_quotient({{m, e}}).
TruncSeries eta_power(unsigned m, int e, std::size_t order);

/// sum_{k >= 1} (-1)^{k-1} (2k-1) q^{k(k-1)/2}.
TruncSeries jacobi_cube(std::size_t order);

namespace detail {
TruncSeries build_sigma(unsigned k, std::size_t order);
TruncSeries build_omega(unsigned k, std::size_t order);
}  // namespace detail

}  // namespace q7::theta
