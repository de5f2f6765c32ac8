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

#include "q7/inequalities.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "q7/theta.hpp"

namespace q7::inequalities {
namespace {

enum class Relation { ge, eq };

class Scan {
 public:
  Scan(std::string id, ClaimKind kind, std::string statement, std::size_t order)
      : start_(std::chrono::steady_clock::now()) {
    report_.claim_id = std::move(id);
    report_.kind = kind;
    report_.statement = std::move(statement);
    report_.order = order;
  }

  void check(std::size_t n, std::optional<int> r, const Integer& lhs, const Integer& rhs,
             Relation rel, std::string text) {
    ++report_.checked;
    const bool equal = lhs == rhs;
    report_.equalities += equal;
    const bool ok = rel == Relation::eq ? equal : lhs >= rhs;
    const bool first_of_family =
        std::none_of(report_.first_instances.begin(), report_.first_instances.end(),
                     [&](const Instance& i) { return i.r == r; });
    if (!ok && !report_.violation) report_.violation = Instance{n, r, lhs, rhs, text};
    if (first_of_family) report_.first_instances.push_back(Instance{n, r, lhs, rhs, std::move(text)});
  }

  ScanReport finish() {
    report_.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
                         .count();
    return std::move(report_);
  }

 private:
  ScanReport report_;
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(const char* lhs_name, std::size_t li, const Integer& lhs, const char* rel,
                const Integer& rhs_factor, const char* rhs_name, std::size_t ri, const Integer& rhs) {
  return std::string(lhs_name) + "(" + std::to_string(li) + ")=" + lhs.get_str() + " " + rel + " " +
         rhs_factor.get_str() + "*" + rhs_name + "(" + std::to_string(ri) + ")=" + rhs.get_str();
}

// a_7(mul * n + add) >= factor * a_7(n) for n >= first with mul * n + add <= order.
ScanReport scan_linear(const cores::SevenCoreTable& t, std::string id, ClaimKind kind,
                       std::string statement, std::size_t mul, std::size_t add, long factor,
                       std::size_t first) {
  Scan scan(std::move(id), kind, std::move(statement), t.order());
  for (std::size_t n = first; mul * n + add <= t.order(); ++n) {
    const Integer& lhs = t.a7(mul * n + add);
    const Integer rhs = factor * t.a7(n);
    scan.check(n, std::nullopt, lhs, rhs, Relation::ge,
               fmt("a7", mul * n + add, lhs, ">=", factor, "a7", n, rhs));
  }
  return scan.finish();
}

ScanReport scan_1_11(const cores::SevenCoreTable& t) {
  return scan_linear(t, "eq-1.11", ClaimKind::theorem, "a7(2n+2) >= 2 a7(n)", 2, 2, 2, 0);
}

ScanReport scan_1_12(const cores::SevenCoreTable& t) {
  return scan_linear(t, "eq-1.12", ClaimKind::theorem, "a7(4n+6) >= 10 a7(n)", 4, 6, 10, 0);
}

ScanReport scan_rank_pair(const cores::SevenCoreTable& t, std::string id, std::string statement,
                          int big, int small, long factor) {
  Scan scan(std::move(id), ClaimKind::theorem, std::move(statement), t.order());
  for (std::size_t n = 0; n <= t.order(); ++n) {
    const Integer& lhs = t.a7j(big, n);
    const Integer rhs = factor * t.a7j(small, n);
    scan.check(n, std::nullopt, lhs, rhs, Relation::ge,
               "a7," + std::to_string(big) + "(" + std::to_string(n) + ")=" + lhs.get_str() +
                   " >= " + std::to_string(factor) + "*a7," + std::to_string(small) + "(" +
                   std::to_string(n) + ")=" + rhs.get_str());
  }
  return scan.finish();
}

ScanReport scan_1_13(const cores::SevenCoreTable& t) {
  return scan_rank_pair(t, "eq-1.13", "a7,0(n) >= 9 a7,2(n)", 0, 2, 9);
}

ScanReport scan_1_14(const cores::SevenCoreTable& t) {
  return scan_rank_pair(t, "eq-1.14", "a7,1(n) >= 2 a7,-1(n)", 1, -1, 2);
}

ScanReport scan_1_15(const cores::SevenCoreTable& t) {
  Scan scan("eq-1.15", ClaimKind::theorem, "a7(28n+4r) = 5 a7(14n+2r-1), r = 1, 2, 6", t.order());
  for (const int r : {1, 2, 6}) {
    for (std::size_t n = 0; 28 * n + 4 * r <= t.order(); ++n) {
      const std::size_t i = 28 * n + 4 * r;
      const std::size_t j = 14 * n + 2 * r - 1;
      const Integer rhs = 5 * t.a7(j);
      scan.check(n, r, t.a7(i), rhs, Relation::eq, fmt("a7", i, t.a7(i), "=", 5, "a7", j, rhs));
    }
  }
  return scan.finish();
}

ScanReport scan_1_16(const cores::SevenCoreTable& t) {
  Scan scan("eq-1.16", ClaimKind::theorem,
            "a7(28n+4r+2) + 4 a7(7n+r-1) = 5 a7(14n+2r), r = 2, 4, 5", t.order());
  for (const int r : {2, 4, 5}) {
    for (std::size_t n = 0; 28 * n + 4 * r + 2 <= t.order(); ++n) {
      const std::size_t i = 28 * n + 4 * r + 2;
      const std::size_t k = 7 * n + r - 1;
      const std::size_t j = 14 * n + 2 * r;
      const Integer lhs = t.a7(i) + 4 * t.a7(k);
      const Integer rhs = 5 * t.a7(j);
      scan.check(n, r, lhs, rhs, Relation::eq,
                 "a7(" + std::to_string(i) + ") + 4*a7(" + std::to_string(k) + ")=" + lhs.get_str() +
                     " = 5*a7(" + std::to_string(j) + ")=" + rhs.get_str());
    }
  }
  return scan.finish();
}

ScanReport positivity_of(std::string id, ClaimKind kind, std::string statement,
                         const TruncSeries& s) {
  return positivity(std::move(id), kind, std::move(statement), s);
}

TruncSeries weight(std::size_t n) {
  return theta::eta_power(14, 4, n) / (theta::euler_E(4, n) * theta::euler_E(28, n));
}

std::vector<Claim> build_claims() {
  using K = ClaimKind;
  std::vector<Claim> c;
  c.push_back({"b-vanishing", K::theorem, check_b_vanishing});
  c.push_back({"cor-4.1", K::theorem, check_corollary_4_1});
  c.push_back({"eq-1.11", K::theorem, scan_1_11});
  c.push_back({"eq-1.12", K::theorem, scan_1_12});
  c.push_back({"eq-1.13", K::theorem, scan_1_13});
  c.push_back({"eq-1.14", K::theorem, scan_1_14});
  c.push_back({"eq-1.15", K::theorem, scan_1_15});
  c.push_back({"eq-1.16", K::theorem, scan_1_16});

  const std::pair<const char*, const char*> summands[] = {
      {"pos-1.23-1", "sigma(q^4) f(q,q^13) f(q^3,q^11) f(q^5,q^9) phi(q^7) in P[q]"},
      {"pos-1.23-2", "2 q^3 E(q^28)^3 E(q^14)^2 E(q^4)^3 / E(q^2)^2 in P[q]"},
      {"pos-1.23-3", "6 q^6 E(q^28)^7 / E(q^4) in P[q]"},
      {"pos-1.23-4", "2 q^2 E(q^14)^7 / E(q^2) in P[q]"}};
  for (int k = 0; k < 4; ++k) {
    c.push_back({summands[k].first, K::theorem, [k, id = summands[k].first, statement = summands[k].second](
                                                   const cores::SevenCoreTable& t) {
                   const std::size_t n = t.order();
                   TruncSeries s = TruncSeries::zero(n);
                   switch (k) {
                     case 0:
                       s = theta::sigma(4, n) * theta::theta_f({1, 1, 1, 13}, n) *
                           theta::theta_f({1, 3, 1, 11}, n) * theta::theta_f({1, 5, 1, 9}, n) *
                           theta::phi(7, n);
                       break;
                     case 1:
                       s = scale(t.rank(-1), 2);
                       break;
                     case 2:
                       s = scale(t.rank(2), 6);
                       break;
                     default:
                       s = scale(shift(compose_power(t.series(), 2), 2), 2);
                   }
                   return positivity_of(id, K::theorem, statement, s);
                 }});
  }
  c.push_back({"pos-4.12", K::theorem, [](const cores::SevenCoreTable& t) {
                 return positivity_of("pos-4.12", K::theorem,
                                      "odd part of E(q^7)^7/E(q) - 3 C7,-1(q) in P[q]",
                                      odd_part(t.series()) - scale(t.rank(-1), 3));
               }});
  c.push_back({"pos-4.6", K::theorem, [](const cores::SevenCoreTable& t) {
                 return positivity_of("pos-4.6", K::theorem,
                                      "E(q^14)^4 / (E(q^4) E(q^28)) omega(q^2) in P[q]",
                                      weight(t.order()) * theta::omega(2, t.order()));
               }});
  c.push_back({"pos-4.7", K::theorem, [](const cores::SevenCoreTable& t) {
                 return positivity_of(
                     "pos-4.7", K::theorem, "E(q^7)^7/E(q) - 2 q^2 E(q^14)^7/E(q^2) in P[q]",
                     t.series() - scale(shift(compose_power(t.series(), 2), 2), 2));
               }});

  auto conj = [](const char* id, const char* statement, bool left_psi, bool mid_phi, bool right_phi) {
    return Claim{id, K::conjecture, [=](const cores::SevenCoreTable& t) {
                   const std::size_t n = t.order();
                   const TruncSeries outer = left_psi ? theta::psi(1, n) : theta::phi(1, n);
                   const TruncSeries a = mid_phi ? theta::phi(1, n) : theta::psi(1, n);
                   const TruncSeries b = right_phi ? theta::phi(7, n) : theta::psi(7, n);
                   return positivity_of(id, K::conjecture, statement, outer * (a * a - b * b));
                 }};
  };
  c.push_back(conj("conj-6.1", "psi(q) (psi(q)^2 - psi(q^7)^2) in P[q]", true, false, false));
  c.push_back(conj("conj-6.2", "psi(q) (phi(q)^2 - phi(q^7)^2) in P[q]", true, true, true));
  c.push_back(conj("conj-6.3", "phi(q) (psi(q)^2 - psi(q^7)^2) in P[q]", false, false, false));
  c.push_back(conj("conj-6.4", "psi(q) (phi(q)^2 - psi(q^7)^2) in P[q]", true, true, false));

  c.push_back({"referee", K::conjecture, check_referee_progressions});
  c.push_back({"refined-1", K::conjecture, [](const cores::SevenCoreTable& t) {
                 return scan_linear(t, "refined-1", K::conjecture, "a7(2n+2) >= 3 a7(n), n >= 1",
                                    2, 2, 3, 1);
               }});
  c.push_back({"refined-2", K::conjecture, [](const cores::SevenCoreTable& t) {
                 return scan_linear(t, "refined-2", K::conjecture, "a7(4n+6) >= 15 a7(n), n >= 1",
                                    4, 6, 15, 1);
               }});
  c.push_back({"refined-3", K::conjecture, [](const cores::SevenCoreTable& t) {
                 return scan_linear(t, "refined-3", K::conjecture, "a7(4n+6) >= 11 a7(n), n >= 0",
                                    4, 6, 11, 0);
               }});
  std::sort(c.begin(), c.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
  return c;
}

}  // namespace

std::string_view kind_name(ClaimKind kind) {
  return kind == ClaimKind::theorem ? "theorem" : "conjecture";
}

const Instance* ScanReport::instance(std::size_t n, std::optional<int> r) const {
  for (const auto& i : first_instances) {
    if (i.n == n && i.r == r) return &i;
  }
  return nullptr;
}

std::vector<ScanReport> check_theorem_1_1(const cores::SevenCoreTable& table) {
  return {scan_1_11(table), scan_1_12(table), scan_1_13(table),
          scan_1_14(table), scan_1_15(table), scan_1_16(table)};
}

ScanReport check_corollary_4_1(const cores::SevenCoreTable& t) {
  Scan scan("cor-4.1", ClaimKind::theorem, "3 a7(n-1) + b(n) >= 0 for n > 0", t.order());
  const Integer zero = 0;
  for (std::size_t n = 1; n <= t.order(); ++n) {
    const Integer lhs = 3 * t.a7(n - 1) + t.b(n);
    scan.check(n, std::nullopt, lhs, zero, Relation::ge,
               "3*a7(" + std::to_string(n - 1) + ") + b(" + std::to_string(n) + ")=" +
                   lhs.get_str() + " >= 0");
  }
  return scan.finish();
}

ScanReport check_b_vanishing(const cores::SevenCoreTable& t) {
  Scan scan("b-vanishing", ClaimKind::theorem, "b(n) = 0 for n = 2, 4, 5 (mod 7)", t.order());
  const Integer zero = 0;
  for (std::size_t n = 0; n <= t.order(); ++n) {
    const std::size_t res = n % 7;
    if (res != 2 && res != 4 && res != 5) continue;
    scan.check(n, static_cast<int>(res), t.b(n), zero, Relation::eq,
               "b(" + std::to_string(n) + ")=" + t.b(n).get_str());
  }
  return scan.finish();
}

ScanReport positivity(std::string claim_id, ClaimKind kind, std::string statement,
                      const TruncSeries& series) {
  Scan scan(std::move(claim_id), kind, std::move(statement), series.order());
  const Integer zero = 0;
  for (std::size_t n = 0; n <= series.order(); ++n) {
    scan.check(n, std::nullopt, series[n], zero, Relation::ge,
               "coefficient of q^" + std::to_string(n) + " = " + series[n].get_str());
  }
  ScanReport report = scan.finish();
  report.first_negative = first_negative(series);
  return report;
}

ScanReport check_referee_progressions(const cores::SevenCoreTable& t) {
  Scan scan("referee", ClaimKind::conjecture, "a7(196n+4r) = 5 a7(98n+2r-1), r = 10, 17, 45",
            t.order());
  for (const int r : {10, 17, 45}) {
    for (std::size_t n = 0; 196 * n + 4 * r <= t.order(); ++n) {
      const std::size_t i = 196 * n + 4 * r;
      const std::size_t j = 98 * n + 2 * r - 1;
      const Integer rhs = 5 * t.a7(j);
      scan.check(n, r, t.a7(i), rhs, Relation::eq, fmt("a7", i, t.a7(i), "=", 5, "a7", j, rhs));
    }
  }
  return scan.finish();
}

std::vector<ScanReport> check_refined_inequalities(const cores::SevenCoreTable& t) {
  return {scan_linear(t, "refined-1", ClaimKind::conjecture, "a7(2n+2) >= 3 a7(n), n >= 1", 2, 2, 3, 1),
          scan_linear(t, "refined-2", ClaimKind::conjecture, "a7(4n+6) >= 15 a7(n), n >= 1", 4, 6, 15, 1),
          scan_linear(t, "refined-3", ClaimKind::conjecture, "a7(4n+6) >= 11 a7(n), n >= 0", 4, 6, 11, 0)};
}

const std::vector<Claim>& standard_claims() {
  static const std::vector<Claim> claims = build_claims();
  return claims;
}

std::vector<ScanReport> run_claims(std::size_t order,
                                   const std::function<bool(const Claim&)>& select) {
  std::vector<const Claim*> chosen;
  for (const auto& c : standard_claims()) {
    if (select(c)) chosen.push_back(&c);
  }
  std::vector<ScanReport> reports;
  if (chosen.empty()) return reports;
  const cores::SevenCoreTable table(order);
  for (const Claim* c : chosen) reports.push_back(c->run(table));
  return reports;
}

}  // namespace q7::inequalities
