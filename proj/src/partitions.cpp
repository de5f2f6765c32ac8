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

#include "q7/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace q7::partitions {
namespace {

void check_bound(unsigned n, unsigned bound) {
  if (n > bound) {
    throw OracleBoundError("partition oracle: n = " + std::to_string(n) +
                           " exceeds the oracle bound " + std::to_string(bound));
  }
}

void generate(unsigned remaining, unsigned max_part, std::vector<unsigned>& parts,
              const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition(parts));
    return;
  }
  for (unsigned k = std::min(remaining, max_part); k >= 1; --k) {
    parts.push_back(k);
    generate(remaining - k, k, parts, visit);
    parts.pop_back();
  }
}

// Twice the lattice exponent contributed by coordinate i: t x^2 + 2 i x.
std::int64_t twice_term(unsigned t, unsigned i, std::int64_t x) {
  return static_cast<std::int64_t>(t) * x * x + 2 * static_cast<std::int64_t>(i) * x;
}

std::int64_t twice_term_min(unsigned t, unsigned i) {
  // The real minimizer is -i/t, in (-1, 0]; the integer minimum is at 0 or -1.
  return std::min(twice_term(t, i, 0), twice_term(t, i, -1));
}

}  // namespace

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be nonincreasing");
    }
  }
}

unsigned Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<unsigned> cols(parts_.front(), 0);
  for (const unsigned p : parts_) {
    for (unsigned j = 0; j < p; ++j) ++cols[j];
  }
  return Partition(std::move(cols));
}

int bg_rank(const Partition& p) {
  int rank = 0;
  int sign = 1;
  for (const unsigned part : p.parts()) {
    if (part % 2 == 1) rank += sign;
    sign = -sign;
  }
  return rank;
}

std::vector<unsigned> hook_lengths(const Partition& p) {
  const Partition conj = p.conjugate();
  const auto& rows = p.parts();
  const auto& cols = conj.parts();
  std::vector<unsigned> hooks;
  for (unsigned i = 0; i < rows.size(); ++i) {
    for (unsigned j = 0; j < rows[i]; ++j) {
      // arm = rows[i] - j - 1, leg = cols[j] - i - 1
      hooks.push_back(rows[i] - j + cols[j] - i - 1);
    }
  }
  return hooks;
}

bool is_t_core(const Partition& p, unsigned t) {
  if (t == 0) throw std::invalid_argument("is_t_core: t must be positive");
  const auto hooks = hook_lengths(p);
  return std::none_of(hooks.begin(), hooks.end(), [t](unsigned h) { return h % t == 0; });
}

void for_each_partition(unsigned n, const std::function<void(const Partition&)>& visit,
                        unsigned bound) {
  check_bound(n, bound);
  std::vector<unsigned> parts;
  parts.reserve(n);
  generate(n, n, parts, visit);
}

std::vector<Partition> enumerate_partitions(unsigned n, unsigned bound) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, bound);
  return out;
}

std::uint64_t count_cores(unsigned n, unsigned t, unsigned bound) {
  std::uint64_t count = 0;
  for_each_partition(n, [&](const Partition& p) { count += is_t_core(p, t); }, bound);
  return count;
}

std::uint64_t count_cores_by_rank(unsigned n, unsigned t, int rank, unsigned bound) {
  std::uint64_t count = 0;
  for_each_partition(
      n, [&](const Partition& p) { count += is_t_core(p, t) && bg_rank(p) == rank; }, bound);
  return count;
}

CoreCounts seven_core_counts(unsigned n, unsigned bound) {
  CoreCounts row;
  row.n = n;
  for_each_partition(
      n,
      [&](const Partition& p) {
        if (!is_t_core(p, 7)) return;
        ++row.total;
        const int j = bg_rank(p);
        if (j >= -1 && j <= 2) {
          ++row.by_rank[j + 1];
        } else {
          ++row.out_of_range;
        }
      },
      bound);
  return row;
}

LatticeSpec::LatticeSpec(unsigned t, std::vector<std::uint32_t> residues)
    : t_(t), residues_(std::move(residues)) {
  if (t_ == 0 || t_ > 20) throw std::invalid_argument("lattice dimension must be in [1, 20]");
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
  admitted_.assign(std::size_t{1} << t_, 0);
  for (const std::uint32_t r : residues_) {
    if (r >= (std::uint32_t{1} << t_)) {
      throw std::invalid_argument("residue vector longer than the lattice dimension");
    }
    admitted_[r] = 1;
  }
}

LatticeSpec LatticeSpec::unrestricted(unsigned t) {
  if (t == 0 || t > 20) throw std::invalid_argument("lattice dimension must be in [1, 20]");
  std::vector<std::uint32_t> all(std::size_t{1} << t);
  std::iota(all.begin(), all.end(), 0u);
  return LatticeSpec(t, std::move(all));
}

LatticeSpec LatticeSpec::seven_core_rank(int j) {
  constexpr std::uint32_t kB = 0b0101010;        // (0,1,0,1,0,1,0), bit i = coordinate i
  constexpr std::uint32_t kBTilde = 0b1010101;   // (1,0,1,0,1,0,1)
  std::vector<std::uint32_t> res;
  switch (j) {
    case -1:
      for (unsigned i = 0; i < 7; ++i) res.push_back(kB ^ (1u << i));
      break;
    case 0:
      for (unsigned a = 0; a < 7; ++a)
        for (unsigned b = a + 1; b < 7; ++b)
          for (unsigned c = b + 1; c < 7; ++c) res.push_back(kB ^ (1u << a) ^ (1u << b) ^ (1u << c));
      break;
    case 1:
      for (unsigned a = 0; a < 7; ++a)
        for (unsigned b = a + 1; b < 7; ++b) res.push_back(kBTilde ^ (1u << a) ^ (1u << b));
      break;
    case 2:
      res.push_back(kBTilde);
      break;
    default:
      throw std::invalid_argument("7-core BG-rank must be in [-1, 2], got " + std::to_string(j));
  }
  return LatticeSpec(7, std::move(res));
}

std::vector<int> LatticeSpec::offset() const {
  std::vector<int> b(t_);
  std::iota(b.begin(), b.end(), 0);
  return b;
}

std::vector<std::int64_t> lattice_coordinate_bounds(unsigned t, std::size_t order) {
  const std::int64_t limit = 2 * static_cast<std::int64_t>(order);
  std::int64_t all_min = 0;
  for (unsigned i = 0; i < t; ++i) all_min += twice_term_min(t, i);
  std::vector<std::int64_t> bounds(t);
  for (unsigned i = 0; i < t; ++i) {
    // Any vector with |n_i| = x has twice-exponent at least
    // twice_term(i, x) + sum_{j != i} min_j; the term grows with |x|.
    const std::int64_t others = all_min - twice_term_min(t, i);
    std::int64_t m = 0;
    while (std::min(twice_term(t, i, m + 1), twice_term(t, i, -(m + 1))) + others <= limit) ++m;
    bounds[i] = m;
  }
  return bounds;
}

TruncSeries lattice_theta(const LatticeSpec& spec, std::size_t order) {
  const unsigned t = spec.t();
  const std::int64_t limit = 2 * static_cast<std::int64_t>(order);
  const auto bounds = lattice_coordinate_bounds(t, order);

  std::vector<std::int64_t> rest_min(t + 1, 0);  // sum of minima for coordinates >= i
  for (unsigned i = t; i-- > 0;) rest_min[i] = rest_min[i + 1] + twice_term_min(t, i);
  for (unsigned i = 0; i < t; ++i) {
    const std::int64_t others = rest_min[0] - twice_term_min(t, i);
    const std::int64_t just_outside = bounds[i] + 1;
    if (std::min(twice_term(t, i, just_outside), twice_term(t, i, -just_outside)) + others <= limit) {
      throw std::logic_error("lattice_theta: coordinate bound too small");
    }
  }

  std::vector<std::uint64_t> counts(order + 1, 0);
  // Coordinates 0..t-2 are free; the last one is fixed by n.1 = 0.
  auto recurse = [&](auto&& self, unsigned i, std::int64_t partial, std::int64_t sum,
                     std::uint32_t parity) -> void {
    if (i + 1 == t) {
      const std::int64_t x = -sum;
      const std::int64_t total = partial + twice_term(t, i, x);
      if (total > limit) return;
      const std::uint32_t mask = parity | (static_cast<std::uint32_t>(x & 1) << i);
      if (!spec.admits(mask)) return;
      if (total % 2 != 0) throw std::logic_error("lattice_theta: non-integral exponent");
      ++counts[static_cast<std::size_t>(total / 2)];
      return;
    }
    for (std::int64_t x = -bounds[i]; x <= bounds[i]; ++x) {
      const std::int64_t next = partial + twice_term(t, i, x);
      if (next + rest_min[i + 1] > limit) continue;
      self(self, i + 1, next, sum + x, parity | (static_cast<std::uint32_t>(x & 1) << i));
    }
  };
  recurse(recurse, 0, 0, 0, 0);

  std::vector<Integer> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = static_cast<unsigned long>(counts[n]);
  return TruncSeries(std::move(c));
}

}  // namespace q7::partitions
