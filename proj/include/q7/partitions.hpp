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

// Brute-force ground truth: partition enumeration, BG-rank, t-core tests,
// and the constrained lattice theta sums over Z^t.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "q7/series.hpp"

namespace q7::partitions {

inline constexpr unsigned kDefaultOracleBound = 45;

class OracleBoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A nonincreasing sequence of positive parts. The empty partition is the
/// unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument if parts are not positive and nonincreasing.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned size() const;  // sum of parts
  /// Conjugate partition (column lengths of the Young diagram).
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// Alternating sum of the parities of the parts, starting with +.
int bg_rank(const Partition& p);

/// All hook lengths of the Young diagram, row by row.
std::vector<unsigned> hook_lengths(const Partition& p);

/// No hook length divisible by t (equivalently, no rim hook of length t).
bool is_t_core(const Partition& p, unsigned t);

/// Calls visit once for every partition of n, in reverse lexicographic order.
void for_each_partition(unsigned n, const std::function<void(const Partition&)>& visit,
                        unsigned bound = kDefaultOracleBound);

std::vector<Partition> enumerate_partitions(unsigned n, unsigned bound = kDefaultOracleBound);

std::uint64_t count_cores(unsigned n, unsigned t, unsigned bound = kDefaultOracleBound);
std::uint64_t count_cores_by_rank(unsigned n, unsigned t, int rank,
                                  unsigned bound = kDefaultOracleBound);

/// One row of the brute-force 7-core table.
struct CoreCounts {
  unsigned n = 0;
  std::uint64_t total = 0;
  std::uint64_t by_rank[4] = {0, 0, 0, 0};  // ranks -1, 0, 1, 2
  std::uint64_t out_of_range = 0;           // 7-cores with rank outside [-1, 2]

  std::uint64_t rank(int j) const { return by_rank[j + 1]; }
};

/// Exhaustive a_7(n) and a_{7,j}(n) for one n, from a single enumeration.
CoreCounts seven_core_counts(unsigned n, unsigned bound = kDefaultOracleBound);

/// Congruence-constrained lattice Z^t with offset vector (0, 1, ..., t-1).
class LatticeSpec {
 public:
  /// residues are bitmasks: bit i is the parity of coordinate i.
  LatticeSpec(unsigned t, std::vector<std::uint32_t> residues);

  /// No congruence filter: every parity class is admitted.
  static LatticeSpec unrestricted(unsigned t);

  /// The t = 7 classes whose theta sums generate the 7-cores of BG-rank
  /// j in {-1, 0, 1, 2}, with B = (0,1,0,1,0,1,0) and its complement.
  static LatticeSpec seven_core_rank(int j);

  unsigned t() const { return t_; }
  const std::vector<std::uint32_t>& residues() const { return residues_; }
  std::vector<int> offset() const;
  bool admits(std::uint32_t parity_mask) const { return admitted_[parity_mask] != 0; }

 private:
  unsigned t_;
  std::vector<std::uint32_t> residues_;  // sorted, deduplicated
  std::vector<char> admitted_;           // indexed by parity mask
};

/// Largest |n_i| that can occur in a vector of exponent <= order, from the
/// coordinatewise minima of (t/2)x^2 + b_i x.
std::vector<std::int64_t> lattice_coordinate_bounds(unsigned t, std::size_t order);

/// sum over n in Z^t with n.1 = 0 and n mod 2 admitted of q^{(t/2)|n|^2 + b.n}.
TruncSeries lattice_theta(const LatticeSpec& spec, std::size_t order);

}  // namespace q7::partitions
