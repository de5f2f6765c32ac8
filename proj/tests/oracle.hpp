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

// Slow, obviously-correct reference implementations used only by tests.
// Nothing here calls into the library's arithmetic.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Coeffs = std::vector<mpz_class>;

/// Dense O(N^2) Cauchy product, truncated to the shorter input.
inline Coeffs product(const Coeffs& a, const Coeffs& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Coeffs c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

/// prod_{k>=1} (1 - q^{mk}) by repeated multiplication by binomials.
inline Coeffs euler_product(unsigned m, std::size_t order) {
  Coeffs c(order + 1);
  c[0] = 1;
  for (std::size_t e = m; e <= order; e += m) {
    for (std::size_t n = order; n >= e; --n) c[n] -= c[n - e];
  }
  return c;
}

/// Power-series reciprocal by solving a * x = 1 term by term.
inline Coeffs reciprocal(const Coeffs& a) {
  Coeffs x(a.size());
  x[0] = 1 / a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    mpz_class s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += a[k] * x[n - k];
    x[n] = -s / a[0];
  }
  return x;
}

/// p(n) for n <= max by the "parts at most k" recurrence.
inline std::vector<mpz_class> partition_counts(std::size_t max) {
  std::vector<mpz_class> p(max + 1);
  p[0] = 1;
  for (std::size_t part = 1; part <= max; ++part) {
    for (std::size_t n = part; n <= max; ++n) p[n] += p[n - part];
  }
  return p;
}

/// Every partition of n as a nonincreasing part list.
inline void partitions(unsigned n, const std::function<void(const std::vector<unsigned>&)>& f) {
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> go = [&](unsigned rest, unsigned cap) {
    if (rest == 0) {
      f(cur);
      return;
    }
    for (unsigned k = std::min(rest, cap); k >= 1; --k) {
      cur.push_back(k);
      go(rest - k, k);
      cur.pop_back();
    }
  };
  go(n, n);
}

/// Hook of cell (i, j) counted directly from the diagram.
inline bool has_hook_divisible_by(const std::vector<unsigned>& parts, unsigned t) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (unsigned j = 0; j < parts[i]; ++j) {
      unsigned arm = parts[i] - j - 1;
      unsigned leg = 0;
      for (std::size_t r = i + 1; r < parts.size() && parts[r] > j; ++r) ++leg;
      if ((arm + leg + 1) % t == 0) return true;
    }
  }
  return false;
}

inline int bg_rank(const std::vector<unsigned>& parts) {
  int r = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] % 2) r += (i % 2 == 0) ? 1 : -1;
  }
  return r;
}

/// Exhaustive a_t(n) and, for t = 7, counts by BG-rank -1..2.
struct CoreRow {
  std::uint64_t total = 0;
  std::uint64_t rank[4] = {0, 0, 0, 0};
  std::uint64_t other_rank = 0;
};

inline CoreRow core_row(unsigned n, unsigned t) {
  CoreRow row;
  partitions(n, [&](const std::vector<unsigned>& p) {
    if (has_hook_divisible_by(p, t)) return;
    ++row.total;
    const int r = bg_rank(p);
    if (r >= -1 && r <= 2) {
      ++row.rank[r + 1];
    } else {
      ++row.other_rank;
    }
  });
  return row;
}

/// A random series with small coefficients and constant term +-1.
inline Coeffs random_unit(std::mt19937_64& rng, std::size_t order, int spread = 5) {
  std::uniform_int_distribution<int> d(-spread, spread);
  Coeffs c(order + 1);
  for (auto& x : c) x = d(rng);
  c[0] = (rng() & 1) ? 1 : -1;
  return c;
}

}  // namespace oracle
