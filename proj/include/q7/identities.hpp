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

// Registry of q-series identities, each checked coefficient by coefficient
// to a requested order, and the Hecke operator T_2.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "q7/series.hpp"

namespace q7::identities {

/// sum a(n) q^n -> sum (a(2n) + 4 a(n/2)) q^n, with a(n/2) = 0 for odd n.
/// The result has order floor(a.order() / 2).
TruncSeries hecke_T2(const TruncSeries& a);

using Builder = std::function<TruncSeries(std::size_t order)>;

/// One side of an identity. `text` is the same side in the expression
/// language, when the language can express it.
struct Side {
  Builder build;
  std::optional<std::string> text;
};

struct IdentityRecord {
  std::string id;
  std::string citation;
  Side lhs;
  Side rhs;
  std::string note;
};

class UnknownIdentity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Registry {
 public:
  Registry() = default;
  /// Throws std::invalid_argument on a duplicate id.
  explicit Registry(std::vector<IdentityRecord> records);

  void add(IdentityRecord record);
  const std::vector<IdentityRecord>& records() const { return records_; }
  bool contains(std::string_view id) const;
  /// Throws UnknownIdentity.
  const IdentityRecord& find(std::string_view id) const;

  /// Every identity this project checks.
  static const Registry& standard();

 private:
  std::vector<IdentityRecord> records_;
};

enum class Status { pass, fail };

struct VerificationReport {
  std::string id;
  std::string citation;
  std::size_t order = 0;
  Status status = Status::fail;
  std::optional<Mismatch> mismatch;
  double millis = 0.0;

  bool passed() const { return status == Status::pass; }
};

VerificationReport verify(const IdentityRecord& record, std::size_t order);
VerificationReport verify(const Registry& registry, std::string_view id, std::size_t order);

/// Verifies every record, fanning out over `threads` workers (0 picks the
/// hardware concurrency). Reports come back in registry order.
std::vector<VerificationReport> verify_all(const Registry& registry, std::size_t order,
                                           unsigned threads = 0);

}  // namespace q7::identities
