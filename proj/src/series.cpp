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

#include "q7/series.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <utility>

#include "q7/kernels.hpp"

namespace q7 {
namespace {

std::size_t common_order(const TruncSeries& a, const TruncSeries& b) {
  return std::min(a.order(), b.order());
}

std::vector<std::size_t> nonzero_indices(const TruncSeries& a, std::size_t order) {
  std::vector<std::size_t> idx;
  for (std::size_t n = 0; n <= order; ++n) {
    if (sgn(a[n]) != 0) idx.push_back(n);
  }
  return idx;
}

void require_unit(const TruncSeries& a, const char* what) {
  const Integer& c = a[0];
  if (c != 1 && c != -1) {
    throw SeriesError(std::string(what) + ": constant term " + c.get_str() +
                      " is not a unit (+1 or -1)");
  }
}

}  // namespace

TruncSeries::TruncSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw SeriesError("a truncated series needs at least one coefficient");
}

TruncSeries TruncSeries::zero(std::size_t order) {
  return TruncSeries(std::vector<Integer>(order + 1));
}

TruncSeries TruncSeries::constant(const Integer& c, std::size_t order) {
  std::vector<Integer> v(order + 1);
  v[0] = c;
  return TruncSeries(std::move(v));
}

TruncSeries TruncSeries::monomial(std::size_t k, const Integer& c, std::size_t order) {
  std::vector<Integer> v(order + 1);
  if (k <= order) v[k] = c;
  return TruncSeries(std::move(v));
}

TruncSeries TruncSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) {
    throw SeriesError("cannot extend a series from order " + std::to_string(order()) + " to " +
                      std::to_string(new_order));
  }
  return TruncSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) == 0; });
}

std::size_t TruncSeries::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; }));
}

TruncSeries add(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t n = common_order(a, b);
  std::vector<Integer> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] + b[i];
  return TruncSeries(std::move(c));
}

TruncSeries sub(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t n = common_order(a, b);
  std::vector<Integer> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] - b[i];
  return TruncSeries(std::move(c));
}

TruncSeries negate(const TruncSeries& a) {
  std::vector<Integer> c(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) c[i] = -a[i];
  return TruncSeries(std::move(c));
}

namespace detail {

TruncSeries mul_bigint(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t n = common_order(a, b);
  auto ia = nonzero_indices(a, n);
  auto ib = nonzero_indices(b, n);
  const TruncSeries* sparse = &a;
  const TruncSeries* dense = &b;
  if (ib.size() < ia.size()) {
    std::swap(ia, ib);
    std::swap(sparse, dense);
  }
  std::vector<Integer> c(n + 1);
  for (const std::size_t i : ia) {
    const Integer& ai = (*sparse)[i];
    for (const std::size_t j : ib) {
      if (i + j > n) break;
      mpz_addmul(c[i + j].get_mpz_t(), ai.get_mpz_t(), (*dense)[j].get_mpz_t());
    }
  }
  return TruncSeries(std::move(c));
}

std::optional<TruncSeries> mul_small(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t n = common_order(a, b);
  std::vector<std::int32_t> xa(n + 1), xb(n + 1);
  std::size_t nnz_a = 0, nnz_b = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (!a[i].fits_sint_p() || !b[i].fits_sint_p()) return std::nullopt;
    const long va = a[i].get_si();
    const long vb = b[i].get_si();
    if (va < INT32_MIN || va > INT32_MAX || vb < INT32_MIN || vb > INT32_MAX) return std::nullopt;
    xa[i] = static_cast<std::int32_t>(va);
    xb[i] = static_cast<std::int32_t>(vb);
    nnz_a += va != 0;
    nnz_b += vb != 0;
  }
  if (nnz_b < nnz_a) {
    std::swap(xa, xb);
    std::swap(nnz_a, nnz_b);
  }
  // Every output coefficient is a sum of at most nnz_a products, each bounded
  // by max|a| * max|b|; so is every partial sum.
  std::int64_t bound = 0;
  if (__builtin_mul_overflow(kernels::max_abs(xa), kernels::max_abs(xb), &bound) ||
      __builtin_mul_overflow(bound, static_cast<std::int64_t>(nnz_a), &bound)) {
    return std::nullopt;
  }

  std::vector<std::int64_t> acc(n + 1, 0);
  const std::span<const std::int32_t> dense(xb);
  for (std::size_t i = 0; i <= n; ++i) {
    if (xa[i] == 0) continue;
    kernels::axpy(std::span(acc).subspan(i), dense.first(n + 1 - i), xa[i]);
  }
  std::vector<Integer> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    c[i] = static_cast<long>(acc[i]);  // long is 64-bit on the supported targets
  }
  return TruncSeries(std::move(c));
}

}  // namespace detail

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
  if (auto fast = detail::mul_small(a, b)) return std::move(*fast);
  return detail::mul_bigint(a, b);
}

TruncSeries invert(const TruncSeries& a) {
  require_unit(a, "invert");
  return div(TruncSeries::constant(1, a.order()), a);
}

TruncSeries div(const TruncSeries& a, const TruncSeries& b) {
  require_unit(b, "div");
  const std::size_t n = common_order(a, b);
  const bool negative_unit = b[0] < 0;
  std::vector<std::size_t> ib;
  for (std::size_t k = 1; k <= n; ++k) {
    if (sgn(b[k]) != 0) ib.push_back(k);
  }
  // c[m] = b0 * (a[m] - sum_{k >= 1} b[k] c[m-k]), with 1/b0 = b0.
  std::vector<Integer> c(n + 1);
  Integer s;
  for (std::size_t m = 0; m <= n; ++m) {
    s = a[m];
    for (const std::size_t k : ib) {
      if (k > m) break;
      mpz_submul(s.get_mpz_t(), b[k].get_mpz_t(), c[m - k].get_mpz_t());
    }
    if (negative_unit) mpz_neg(s.get_mpz_t(), s.get_mpz_t());
    c[m] = s;
  }
  return TruncSeries(std::move(c));
}

TruncSeries compose_power(const TruncSeries& a, std::size_t k) {
  if (k == 0) throw SeriesError("compose_power: substitution q -> q^0 is not allowed");
  std::vector<Integer> c(a.order() + 1);
  for (std::size_t n = 0; n * k <= a.order(); ++n) c[n * k] = a[n];
  return TruncSeries(std::move(c));
}

TruncSeries alternate(const TruncSeries& a) {
  std::vector<Integer> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t n = 1; n < c.size(); n += 2) c[n] = -c[n];
  return TruncSeries(std::move(c));
}

TruncSeries even_part(const TruncSeries& a) {
  std::vector<Integer> c(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); n += 2) c[n] = a[n];
  return TruncSeries(std::move(c));
}

TruncSeries odd_part(const TruncSeries& a) {
  std::vector<Integer> c(a.order() + 1);
  for (std::size_t n = 1; n <= a.order(); n += 2) c[n] = a[n];
  return TruncSeries(std::move(c));
}

TruncSeries shift(const TruncSeries& a, std::size_t k) {
  std::vector<Integer> c(a.order() + 1);
  for (std::size_t n = 0; n + k <= a.order(); ++n) c[n + k] = a[n];
  return TruncSeries(std::move(c));
}

TruncSeries scale(const TruncSeries& a, const Integer& s) {
  std::vector<Integer> c(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) c[n] = a[n] * s;
  return TruncSeries(std::move(c));
}

TruncSeries exact_quotient(const TruncSeries& a, const Integer& d) {
  if (sgn(d) == 0) throw SeriesError("exact_quotient: division by zero");
  std::vector<Integer> c(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) {
    if (!mpz_divisible_p(a[n].get_mpz_t(), d.get_mpz_t())) {
      throw SeriesError("exact_quotient: coefficient of q^" + std::to_string(n) + " (" +
                        a[n].get_str() + ") is not divisible by " + d.get_str());
    }
    mpz_divexact(c[n].get_mpz_t(), a[n].get_mpz_t(), d.get_mpz_t());
  }
  return TruncSeries(std::move(c));
}

TruncSeries pow(const TruncSeries& a, unsigned e) {
  TruncSeries result = TruncSeries::constant(1, a.order());
  TruncSeries base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

TruncSeries section(const TruncSeries& a, std::size_t m, std::size_t r) {
  if (m == 0 || r >= m) throw SeriesError("section: need 0 <= r < m");
  if (r > a.order()) throw SeriesError("section: residue exceeds the series order");
  const std::size_t order = (a.order() - r) / m;
  std::vector<Integer> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = a[m * n + r];
  return TruncSeries(std::move(c));
}

std::optional<std::size_t> first_negative(const TruncSeries& a) {
  for (std::size_t n = 0; n <= a.order(); ++n) {
    if (sgn(a[n]) < 0) return n;
  }
  return std::nullopt;
}

Comparison compare(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t n = common_order(a, b);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] != b[i]) return {n, Mismatch{i, a[i], b[i]}};
  }
  return {n, std::nullopt};
}

std::string to_string(const TruncSeries& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n <= a.order(); ++n) {
    const Integer& c = a[n];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (n == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "q";
      if (n > 1) os << "^" << n;
    }
    first = false;
  }
  if (first) os << "0";
  os << " + O(q^" << a.order() + 1 << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& a) { return os << to_string(a); }

}  // namespace q7
