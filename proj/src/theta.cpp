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

#include "q7/theta.hpp"

#include <cstdint>
#include <mutex>
#include <sstream>
#include <utility>

namespace q7::theta {
namespace {

void check_step(unsigned m, const char* what) {
  if (m == 0) throw SeriesError(std::string(what) + ": argument q^0 is not allowed");
}

// In-place multiplication by (1 - c q^e).
void times_binomial(std::vector<Integer>& v, int c, std::size_t e) {
  if (c == 0) return;
  if (e == 0) {
    for (auto& x : v) x *= (1 - c);
    return;
  }
  for (std::size_t n = v.size(); n-- > e;) {
    if (c > 0) {
      v[n] -= v[n - e];
    } else {
      v[n] += v[n - e];
    }
  }
}

int sign_power(int sign, std::int64_t e) { return (sign < 0 && (e & 1)) ? -1 : 1; }

struct CacheKey {
  unsigned k;
  std::size_t order;
  auto operator<=>(const CacheKey&) const = default;
};

class SeriesCache {
 public:
  template <class Build>
  TruncSeries get(CacheKey key, Build&& build) {
    {
      std::lock_guard lock(mu_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    TruncSeries value = build();
    std::lock_guard lock(mu_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<CacheKey, TruncSeries> map_;
};

SeriesCache& sigma_cache() {
  static SeriesCache c;
  return c;
}

SeriesCache& omega_cache() {
  static SeriesCache c;
  return c;
}

}  // namespace

void ThetaArgs::validate() const {
  if ((sign_a != 1 && sign_a != -1) || (sign_b != 1 && sign_b != -1)) {
    throw SeriesError("theta arguments need signs +1 or -1");
  }
  if (r + s < 1) throw SeriesError("theta arguments need r + s >= 1 so that |ab| < 1");
}

void EtaQuotientSpec::validate() const {
  if (factors.empty()) throw SeriesError("eta-quotient needs at least one factor");
  for (const auto& [step, exponent] : factors) {
    (void)exponent;
    if (step == 0) throw SeriesError("eta-quotient step must be positive");
  }
}

std::string EtaQuotientSpec::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [step, exponent] : factors) {
    if (!first) os << " ";
    os << "E(q^" << step << ")^" << exponent;
    first = false;
  }
  return os.str();
}

TruncSeries euler_E(unsigned m, std::size_t order) {
  check_step(m, "euler_E");
  // Pentagonal numbers k(3k-1)/2 for k = 0, 1, -1, 2, -2, ... with sign (-1)^k.
  std::vector<Integer> c(order + 1);
  const std::uint64_t n_max = order;
  for (std::int64_t k = 0;; ++k) {
    bool any = false;
    for (int side = 0; side < (k == 0 ? 1 : 2); ++side) {
      const std::int64_t j = side == 0 ? k : -k;
      const std::uint64_t e = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(j * (3 * j - 1) / 2);
      if (e > n_max) continue;
      any = true;
      c[e] += (k & 1) ? -1 : 1;
    }
    if (!any && k > 0) break;
  }
  return TruncSeries(std::move(c));
}

TruncSeries pochhammer(int x, unsigned a, int y, unsigned step, std::size_t order) {
  check_step(step, "pochhammer");
  if ((x != 1 && x != -1) || (y != 1 && y != -1)) throw SeriesError("pochhammer signs must be +-1");
  std::vector<Integer> v(order + 1);
  v[0] = 1;
  for (std::uint64_t n = 0, e = a; e <= order; ++n, e += step) {
    times_binomial(v, x * sign_power(y, static_cast<std::int64_t>(n)), e);
  }
  return TruncSeries(std::move(v));
}

TruncSeries theta_f(const ThetaArgs& args, std::size_t order) {
  args.validate();
  std::vector<Integer> c(order + 1);
  auto exponent = [&](std::int64_t n) {
    return static_cast<std::int64_t>(args.r) * (n * (n + 1) / 2) +
           static_cast<std::int64_t>(args.s) * (n * (n - 1) / 2);
  };
  auto add_term = [&](std::int64_t n) {
    const std::int64_t e = exponent(n);
    if (e < 0 || static_cast<std::uint64_t>(e) > order) return false;
    c[static_cast<std::size_t>(e)] +=
        sign_power(args.sign_a, n * (n + 1) / 2) * sign_power(args.sign_b, n * (n - 1) / 2);
    return true;
  };
  // The exponent is nondecreasing walking outward from 0; it can stall for
  // one step when r or s is 0, hence the look-ahead.
  add_term(0);
  for (std::int64_t n = 1; exponent(n) <= static_cast<std::int64_t>(order) ||
                           exponent(n + 1) <= static_cast<std::int64_t>(order);
       ++n) {
    add_term(n);
  }
  for (std::int64_t n = -1; exponent(n) <= static_cast<std::int64_t>(order) ||
                            exponent(n - 1) <= static_cast<std::int64_t>(order);
       --n) {
    add_term(n);
  }
  return TruncSeries(std::move(c));
}

TruncSeries theta_f_product(const ThetaArgs& args, std::size_t order) {
  args.validate();
  const int xy = args.sign_a * args.sign_b;
  const unsigned step = args.r + args.s;
  return mul(mul(pochhammer(-args.sign_a, args.r, xy, step, order),
                 pochhammer(-args.sign_b, args.s, xy, step, order)),
             pochhammer(xy, step, xy, step, order));
}

TruncSeries phi(unsigned m, std::size_t order) {
  check_step(m, "phi");
  return theta_f({1, m, 1, m}, order);
}

TruncSeries psi(unsigned m, std::size_t order) {
  check_step(m, "psi");
  return theta_f({1, m, 1, 3 * m}, order);
}

TruncSeries chi_neg(unsigned m, std::size_t order) {
  check_step(m, "chi");
  return pochhammer(1, m, 1, 2 * m, order);
}

namespace detail {

TruncSeries build_sigma(unsigned k, std::size_t order) {
  check_step(k, "sigma");
  const TruncSeries base =
      phi(1, order) * phi(7, order) + scale(shift(psi(2, order) * psi(14, order), 2), 4);
  return compose_power(base, k);
}

TruncSeries build_omega(unsigned k, std::size_t order) {
  check_step(k, "omega");
  const TruncSeries base =
      psi(4, order) * phi(14, order) + shift(psi(28, order) * phi(2, order), 3);
  return compose_power(base, k);
}

}  // namespace detail

TruncSeries sigma(unsigned k, std::size_t order) {
  return sigma_cache().get({k, order}, [&] { return detail::build_sigma(k, order); });
}

TruncSeries omega(unsigned k, std::size_t order) {
  return omega_cache().get({k, order}, [&] { return detail::build_omega(k, order); });
}

TruncSeries eta_power(unsigned m, int e, std::size_t order) {
  const TruncSeries base = euler_E(m, order);
  if (e >= 0) return pow(base, static_cast<unsigned>(e));
  return invert(pow(base, static_cast<unsigned>(-e)));
}

TruncSeries eta_quotient(const EtaQuotientSpec& spec, std::size_t order) {
  spec.validate();
  TruncSeries num = TruncSeries::constant(1, order);
  TruncSeries den = TruncSeries::constant(1, order);
  for (const auto& [step, exponent] : spec.factors) {
    if (exponent > 0) {
      num = num * pow(euler_E(step, order), static_cast<unsigned>(exponent));
    } else if (exponent < 0) {
      den = den * pow(euler_E(step, order), static_cast<unsigned>(-exponent));
    }
  }
  return num / den;
}

TruncSeries jacobi_cube(std::size_t order) {
  std::vector<Integer> c(order + 1);
  for (std::uint64_t k = 1;; ++k) {
    const std::uint64_t e = k * (k - 1) / 2;
    if (e > order) break;
    const long mag = static_cast<long>(2 * k - 1);
    c[e] += (k % 2 == 1) ? mag : -mag;
  }
  return TruncSeries(std::move(c));
}

}  // namespace q7::theta
