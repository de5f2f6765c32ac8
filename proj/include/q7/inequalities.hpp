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

// Exhaustive scanners for the coefficient inequalities, arithmetic
// progression equalities, positivity claims, and conjectures about 7-cores.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "q7/cores.hpp"
#include "q7/series.hpp"

namespace q7::inequalities {

/// A failed theorem scan is an implementation bug; a failed conjecture scan
/// is a finding.
enum class ClaimKind { theorem, conjecture };

std::string_view kind_name(ClaimKind kind);

/// One checked instance: lhs (relation) rhs at index n, for family member r.
struct Instance {
  std::size_t n = 0;
  std::optional<int> r;
  Integer lhs;
  Integer rhs;
  std::string text;
};

struct ScanReport {
  std::string claim_id;
  ClaimKind kind = ClaimKind::theorem;
  std::string statement;
  std::size_t order = 0;
  std::size_t checked = 0;
  std::size_t equalities = 0;
  std::optional<Instance> violation;
  /// Positivity claims: least exponent with a negative coefficient.
  std::optional<std::size_t> first_negative;
  /// The first instance of each family member, in scan order.
  std::vector<Instance> first_instances;
  double millis = 0.0;

  bool holds() const { return !violation.has_value(); }
  /// Finds an instance among first_instances with the given n and r.
  const Instance* instance(std::size_t n, std::optional<int> r = std::nullopt) const;
};

/// The six a_7 inequalities and progression equalities, one report each.
std::vector<ScanReport> check_theorem_1_1(const cores::SevenCoreTable& table);

/// 3 a_7(n-1) + b(n) >= 0 for 0 < n <= order.
ScanReport check_corollary_4_1(const cores::SevenCoreTable& table);

/// b(n) = 0 whenever n = 2, 4, 5 (mod 7).
ScanReport check_b_vanishing(const cores::SevenCoreTable& table);

/// First negative coefficient of `series`, if any, up to its order.
ScanReport positivity(std::string claim_id, ClaimKind kind, std::string statement,
                      const TruncSeries& series);

/// a_7(196n + 4r) = 5 a_7(98n + 2r - 1), r in {10, 17, 45}.
ScanReport check_referee_progressions(const cores::SevenCoreTable& table);

/// The three sharper inequalities observed numerically, with their n-domains.
std::vector<ScanReport> check_refined_inequalities(const cores::SevenCoreTable& table);

/// A named scan over a shared table.
struct Claim {
  std::string id;
  ClaimKind kind;
  std::function<ScanReport(const cores::SevenCoreTable&)> run;
};

/// Every theorem and conjecture scan, sorted by id.
const std::vector<Claim>& standard_claims();

/// Runs the claims whose id is `id`, or all of one kind, at `order`.
std::vector<ScanReport> run_claims(std::size_t order, const std::function<bool(const Claim&)>& select);

}  // namespace q7::inequalities
