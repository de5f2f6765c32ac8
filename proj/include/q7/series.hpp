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

// Truncated formal power series in q with exact integer coefficients.

#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace q7 {

using Integer = mpz_class;

class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A power series known exactly up to and including q^order.
///
/// Values are immutable: every operation returns a new series. Binary
/// operations work at the smaller of the two orders and never invent
/// coefficients beyond what both operands know.
class TruncSeries {
 public:
  /// coeffs[n] is the coefficient of q^n; order = coeffs.size() - 1.
  explicit TruncSeries(std::vector<Integer> coeffs);

  static TruncSeries zero(std::size_t order);
  static TruncSeries constant(const Integer& c, std::size_t order);
  /// c * q^k, or zero when k > order.
  static TruncSeries monomial(std::size_t k, const Integer& c, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Integer& operator[](std::size_t n) const { return coeffs_[n]; }
  const Integer& at(std::size_t n) const { return coeffs_.at(n); }
  std::span<const Integer> coeffs() const { return coeffs_; }

  /// Drops coefficients above new_order. new_order must not exceed order().
  TruncSeries truncated(std::size_t new_order) const;

  bool is_zero() const;
  std::size_t nonzero_count() const;

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::vector<Integer> coeffs_;
};

TruncSeries add(const TruncSeries& a, const TruncSeries& b);
TruncSeries sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries negate(const TruncSeries& a);

/// Truncated Cauchy product. Operands whose coefficients are small enough
/// go through the int64 kernels; the result is identical either way.
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);

/// Multiplicative inverse. a[0] must be +1 or -1.
TruncSeries invert(const TruncSeries& a);

/// a / b by forward substitution; b[0] must be +1 or -1.
TruncSeries div(const TruncSeries& a, const TruncSeries& b);

/// q -> q^k. Keeps a's order: input coefficients above order/k are unused.
TruncSeries compose_power(const TruncSeries& a, std::size_t k);

/// q -> -q.
TruncSeries alternate(const TruncSeries& a);

TruncSeries even_part(const TruncSeries& a);
TruncSeries odd_part(const TruncSeries& a);

/// q^k * a at the same order; the top k coefficients fall off.
TruncSeries shift(const TruncSeries& a, std::size_t k);

TruncSeries scale(const TruncSeries& a, const Integer& c);

/// Exact division of every coefficient by c; throws if any is not divisible.
TruncSeries exact_quotient(const TruncSeries& a, const Integer& c);

TruncSeries pow(const TruncSeries& a, unsigned e);

/// Sum over n of a[m*n + r] q^n, at order floor((a.order() - r) / m).
TruncSeries section(const TruncSeries& a, std::size_t m, std::size_t r);

/// Least n with a[n] < 0.
std::optional<std::size_t> first_negative(const TruncSeries& a);

struct Mismatch {
  std::size_t exponent;
  Integer lhs;
  Integer rhs;
};

struct Comparison {
  std::size_t order;
  std::optional<Mismatch> mismatch;

  bool pass() const { return !mismatch.has_value(); }
};

/// Exact comparison over exponents 0..min(a.order(), b.order()).
Comparison compare(const TruncSeries& a, const TruncSeries& b);

inline TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return add(a, b); }
inline TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return sub(a, b); }
inline TruncSeries operator-(const TruncSeries& a) { return negate(a); }
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return mul(a, b); }
inline TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) { return div(a, b); }

/// "1 - q - q^2 + q^5 + O(q^8)" style rendering, for diagnostics.
std::string to_string(const TruncSeries& a);
std::ostream& operator<<(std::ostream& os, const TruncSeries& a);

namespace detail {
/// Schoolbook product over GMP integers, skipping zero coefficients. This is
/// the reference the kernel fast path must agree with.
TruncSeries mul_bigint(const TruncSeries& a, const TruncSeries& b);
/// Kernel product; std::nullopt when an operand or a partial sum would not
/// fit the fixed-width path.
std::optional<TruncSeries> mul_small(const TruncSeries& a, const TruncSeries& b);
}  // namespace detail

}  // namespace q7
