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

#include "q7/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>
#include <utility>

#include "q7/cores.hpp"
#include "q7/partitions.hpp"
#include "q7/theta.hpp"

namespace q7::identities {

TruncSeries hecke_T2(const TruncSeries& a) {
  const std::size_t order = a.order() / 2;
  std::vector<Integer> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    c[n] = a[2 * n];
    if (n % 2 == 0) c[n] += 4 * a[n / 2];
  }
  return TruncSeries(std::move(c));
}

namespace {

// Builders for the named series at a fixed order, so that registry entries
// read like the displayed formulas.
struct Q {
  std::size_t n;

  TruncSeries E(unsigned m, int e = 1) const { return theta::eta_power(m, e, n); }
  TruncSeries E_neg(unsigned m, int e = 1) const { return neg_arg(theta::eta_power(1, e, n), m); }
  TruncSeries phi(unsigned m) const { return theta::phi(m, n); }
  TruncSeries psi(unsigned m) const { return theta::psi(m, n); }
  TruncSeries phi_neg(unsigned m) const { return neg_arg(theta::phi(1, n), m); }
  TruncSeries psi_neg(unsigned m) const { return neg_arg(theta::psi(1, n), m); }
  TruncSeries chi_neg(unsigned m) const { return theta::chi_neg(m, n); }
  TruncSeries sigma(unsigned k) const { return theta::sigma(k, n); }
  TruncSeries omega(unsigned k) const { return theta::omega(k, n); }
  TruncSeries f(unsigned r, unsigned s) const { return theta::theta_f({1, r, 1, s}, n); }
  TruncSeries q(std::size_t k) const { return TruncSeries::monomial(k, 1, n); }
  TruncSeries c(long v) const { return TruncSeries::constant(v, n); }

  // X(-q^m) from X(q).
  static TruncSeries neg_arg(const TruncSeries& x, unsigned m) {
    return compose_power(alternate(x), m);
  }

  TruncSeries seven_cores() const { return E(7, 7) / E(1); }
  TruncSeries core() const { return E(28) * E(14, 3) * E(4) / E(2); }
  TruncSeries rank_m1() const { return q(3) * E(28, 3) * E(14, 2) * E(4, 3) / E(2, 2); }
  TruncSeries rank_2() const { return q(6) * E(28, 7) / E(4); }
  TruncSeries weight() const { return E(14, 4) / (E(4) * E(28)); }
  TruncSeries fff13() const { return f(1, 13) * f(3, 11) * f(5, 9); }
  TruncSeries fff6() const { return f(1, 6) * f(2, 5) * f(3, 4); }
  // Right-hand side of the rank 1 formula.
  TruncSeries rank_1_closed() const {
    return q(1) * core() * (sigma(4) + q(2) * psi(2) * psi(14));
  }
  // Right-hand side of the rank 0 formula, read with the omega(q^2) braces
  // spanning the first three terms.
  TruncSeries rank_0_closed() const {
    const TruncSeries braced = pow(psi(4), 2) * pow(phi(14), 2) +
                               q(6) * pow(psi(28), 2) * pow(phi(2), 2) + q(2) * core();
    return omega(2) * braced + q(2) * psi(4) * pow(psi(14), 2) * pow(phi(14), 3) +
           scale(q(4) * pow(psi(2), 3) * pow(psi(14), 3), 2) +
           scale(q(12) * pow(psi(14), 2) * pow(psi(28), 3) * phi(2), 4);
  }
};

TruncSeries times(long k, const TruncSeries& a) { return scale(a, k); }

// Expression-language spellings of recurring pieces.
const std::string kA7 = "E(q^7)^7/E(q)";
const std::string kA7Sq = "E(q^14)^7/E(q^2)";
const std::string kA7Qu = "E(q^28)^7/E(q^4)";
const std::string kCore = "E(q^28)*E(q^14)^3*E(q^4)/E(q^2)";
const std::string kRankM1 = "q^3*E(q^28)^3*E(q^14)^2*E(q^4)^3/E(q^2)^2";
const std::string kRank2 = "q^6*E(q^28)^7/E(q^4)";
const std::string kWeight = "E(q^14)^4/(E(q^4)*E(q^28))";
const std::string kFff13 = "f(q,q^13)*f(q^3,q^11)*f(q^5,q^9)";
const std::string kFff6 = "f(q,q^6)*f(q^2,q^5)*f(q^3,q^4)";
const std::string kRank1Closed = "q*" + kCore + "*(sigma(q^4) + q^2*psi(q^2)*psi(q^14))";
const std::string kRank0Closed =
    "omega(q^2)*(psi(q^4)^2*phi(q^14)^2 + q^6*psi(q^28)^2*phi(q^2)^2 + q^2*" + kCore +
    ") + q^2*psi(q^4)*psi(q^14)^2*phi(q^14)^3 + 2*q^4*psi(q^2)^3*psi(q^14)^3"
    " + 4*q^12*psi(q^14)^2*psi(q^28)^3*phi(q^2)";

template <class F>
Side side(F&& f, std::optional<std::string> text) {
  return Side{[f = std::forward<F>(f)](std::size_t n) { return f(Q{n}); }, std::move(text)};
}

IdentityRecord rec(std::string id, std::string citation, Side lhs, Side rhs, std::string note = {}) {
  return IdentityRecord{std::move(id), std::move(citation), std::move(lhs), std::move(rhs),
                        std::move(note)};
}

std::vector<IdentityRecord> standard_records() {
  std::vector<IdentityRecord> r;

  for (const unsigned t : {2u, 3u, 5u, 7u}) {
    r.push_back(rec(
        "eq-1.3-t" + std::to_string(t), "(1.3)",
        Side{[t](std::size_t n) {
               return partitions::lattice_theta(partitions::LatticeSpec::unrestricted(t), n);
             },
             std::nullopt},
        side([t](const Q& x) { return x.E(t, static_cast<int>(t)) / x.E(1); },
             "E(q^" + std::to_string(t) + ")^" + std::to_string(t) + "/E(q)"),
        "t-core generating function: lattice sum against eta-quotient"));
  }

  r.push_back(rec("eq-1.7", "(1.7)", side([](const Q& x) { return x.phi(1); }, "phi(q)"),
                  side([](const Q& x) { return x.E(2, 5) / (x.E(4, 2) * x.E(1, 2)); },
                       "E(q^2)^5/(E(q^4)^2*E(q)^2)")));
  r.push_back(rec("eq-1.8", "(1.8)", side([](const Q& x) { return x.psi(1); }, "psi(q)"),
                  side([](const Q& x) { return x.E(2, 2) / x.E(1); }, "E(q^2)^2/E(q)")));

  r.push_back(rec("eq-1.17", "(1.17)",
                  side([](const Q& x) { return odd_part(x.seven_cores()) - x.rank_m1(); },
                       "odd(" + kA7 + ") - " + kRankM1),
                  side([](const Q& x) { return x.rank_1_closed(); }, kRank1Closed),
                  "rank 1 generating function from the odd dissection"));
  r.push_back(rec("eq-1.18", "(1.18)",
                  side([](const Q& x) { return even_part(x.seven_cores()) - x.rank_2(); },
                       "even(" + kA7 + ") - " + kRank2),
                  side([](const Q& x) { return x.rank_0_closed(); }, kRank0Closed),
                  "rank 0 generating function; literal reading of the printed braces"));
  r.push_back(rec("eq-1.20", "(1.20)", side([](const Q& x) { return x.core(); }, kCore),
                  side([](const Q& x) { return x.f(2, 12) * x.f(4, 10) * x.f(6, 8) * x.psi(14); },
                       "f(q^2,q^12)*f(q^4,q^10)*f(q^6,q^8)*psi(q^14)")));
  r.push_back(rec("eq-1.21", "(1.21)", side([](const Q& x) { return x.seven_cores(); }, kA7),
                  side(
                      [](const Q& x) {
                        return x.fff13() * x.phi(7) * x.sigma(2) + times(8, x.rank_2());
                      },
                      kFff13 + "*phi(q^7)*sigma(q^2) + 8*" + kRank2)));
  r.push_back(rec("eq-1.22", "(1.22)", side([](const Q& x) { return x.seven_cores(); }, kA7),
                  side(
                      [](const Q& x) {
                        return x.fff6() * x.psi(7) * x.omega(1) + x.q(2) * x.E(14, 7) / x.E(2);
                      },
                      kFff6 + "*psi(q^7)*omega(q) + q^2*" + kA7Sq)));
  r.push_back(rec(
      "eq-1.23", "(1.23)", side([](const Q& x) { return x.seven_cores(); }, kA7),
      side(
          [](const Q& x) {
            return x.sigma(4) * x.fff13() * x.phi(7) + times(2, x.rank_m1()) +
                   times(6, x.rank_2()) + times(2, x.q(2) * x.E(14, 7) / x.E(2));
          },
          "sigma(q^4)*" + kFff13 + "*phi(q^7) + 2*" + kRankM1 + " + 6*" + kRank2 + " + 2*q^2*" +
              kA7Sq),
      "manifestly positive representation"));
  r.push_back(rec("eq-1.24", "(1.24)",
                  side([](const Q& x) { return x.E(28, 3) * x.E(14, 2) * x.E(4, 3) / x.E(2, 2); },
                       "E(q^28)^3*E(q^14)^2*E(q^4)^3/E(q^2)^2"),
                  side(
                      [](const Q& x) {
                        return x.f(2, 12) * x.f(6, 8) * x.f(4, 10) * x.psi(2) * pow(x.psi(14), 2);
                      },
                      "f(q^2,q^12)*f(q^6,q^8)*f(q^4,q^10)*psi(q^2)*psi(q^14)^2")));
  r.push_back(rec("eq-1.25", "(1.25)",
                  side([](const Q& x) { return x.fff13() * x.phi(7); }, kFff13 + "*phi(q^7)"),
                  side([](const Q& x) { return x.psi(1) * x.psi(7) * x.weight(); },
                       "psi(q)*psi(q^7)*" + kWeight)));

  const char* lattice_cites[] = {"(1.26), (1.31)", "(1.27), (1.35)", "(1.28), (1.36)",
                                 "(1.29), (1.32)"};
  const char* lattice_ids[] = {"eq-1.31", "eq-1.27", "eq-1.28", "eq-1.32"};
  const std::string rank_texts[] = {kRankM1, "even(" + kA7 + ") - " + kRank2,
                                    "odd(" + kA7 + ") - " + kRankM1, kRank2};
  for (int j = -1; j <= 2; ++j) {
    const auto k = static_cast<std::size_t>(j + 1);
    r.push_back(rec(
        lattice_ids[k], lattice_cites[k],
        Side{[j](std::size_t n) {
               return partitions::lattice_theta(partitions::LatticeSpec::seven_core_rank(j), n);
             },
             std::nullopt},
        side(
            [j](const Q& x) {
              switch (j) {
                case -1:
                  return x.rank_m1();
                case 0:
                  return even_part(x.seven_cores()) - x.rank_2();
                case 1:
                  return odd_part(x.seven_cores()) - x.rank_m1();
                default:
                  return x.rank_2();
              }
            },
            rank_texts[k]),
        "BG-rank " + std::to_string(j) + " class: lattice sum against closed form"));
  }

  r.push_back(rec("eq-1.34", "(1.34)", side([](const Q& x) { return x.seven_cores(); }, kA7),
                  side(
                      [](const Q& x) {
                        return x.rank_m1() + x.rank_0_closed() + x.rank_1_closed() + x.rank_2();
                      },
                      kRankM1 + " + " + kRank0Closed + " + " + kRank1Closed + " + " + kRank2),
                  "sum over the four ranks, each in closed form"));
  r.push_back(rec("eq-1.35", "(1.35)",
                  side([](const Q& x) { return times(2, even_part(x.seven_cores()) - x.rank_2()); },
                       "2*(even(" + kA7 + ") - " + kRank2 + ")"),
                  side(
                      [](const Q& x) {
                        return x.seven_cores() + x.E_neg(7, 7) / x.E_neg(1) - times(2, x.rank_2());
                      },
                      kA7 + " + E(-q^7)^7/E(-q) - 2*" + kRank2),
                  "both sides doubled"));
  r.push_back(rec("eq-1.36", "(1.36)",
                  side([](const Q& x) { return times(2, odd_part(x.seven_cores()) - x.rank_m1()); },
                       "2*(odd(" + kA7 + ") - " + kRankM1 + ")"),
                  side(
                      [](const Q& x) {
                        return x.seven_cores() - x.E_neg(7, 7) / x.E_neg(1) - times(2, x.rank_m1());
                      },
                      kA7 + " - E(-q^7)^7/E(-q) - 2*" + kRankM1),
                  "both sides doubled"));

  r.push_back(rec("eq-3.1", "(3.1)", side([](const Q& x) { return x.sigma(2); }, "sigma(q^2)"),
                  side(
                      [](const Q& x) {
                        return x.phi(1) * x.phi(7) -
                               times(2, x.q(1) * x.psi_neg(1) * x.psi_neg(7));
                      },
                      "phi(q)*phi(q^7) - 2*q*psi(-q)*psi(-q^7)")));
  r.push_back(rec("eq-3.2", "(3.2)", side([](const Q& x) { return x.sigma(1); }, "sigma(q)"),
                  side([](const Q& x) { return x.sigma(2) + times(2, x.q(1) * x.psi(1) * x.psi(7)); },
                       "sigma(q^2) + 2*q*psi(q)*psi(q^7)")));
  r.push_back(rec("eq-3.3", "(3.3)",
                  side([](const Q& x) { return pow(x.omega(1), 2); }, "omega(q)^2"),
                  side(
                      [](const Q& x) {
                        return x.psi(1) * x.psi(7) * (x.sigma(2) - x.q(1) * x.psi(1) * x.psi(7));
                      },
                      "psi(q)*psi(q^7)*(sigma(q^2) - q*psi(q)*psi(q^7))")));
  r.push_back(rec("eq-3.4", "(3.4)",
                  side([](const Q& x) { return pow(x.sigma(2), 2); }, "sigma(q^2)^2"),
                  side(
                      [](const Q& x) {
                        return times(4, x.q(1) * pow(x.omega(1), 2)) +
                               pow(x.phi_neg(1), 2) * pow(x.phi_neg(7), 2);
                      },
                      "4*q*omega(q)^2 + phi(-q)^2*phi(-q^7)^2")));
  r.push_back(rec("eq-3.5", "(3.5)",
                  side([](const Q& x) { return x.phi_neg(2) * x.phi_neg(14); },
                       "phi(-q^2)*phi(-q^14)"),
                  side(
                      [](const Q& x) {
                        return x.phi_neg(1) * x.phi_neg(7) +
                               times(2, x.q(1) * x.psi_neg(1) * x.psi_neg(7));
                      },
                      "phi(-q)*phi(-q^7) + 2*q*psi(-q)*psi(-q^7)")));
  r.push_back(rec("eq-3.6", "(3.6)",
                  side([](const Q& x) { return x.psi(1) * x.psi(7); }, "psi(q)*psi(q^7)"),
                  side(
                      [](const Q& x) {
                        return x.psi(8) * x.phi(28) + x.q(6) * x.psi(56) * x.phi(4) +
                               x.q(1) * x.psi(2) * x.psi(14);
                      },
                      "psi(q^8)*phi(q^28) + q^6*psi(q^56)*phi(q^4) + q*psi(q^2)*psi(q^14)")));
  r.push_back(rec("eq-3.7", "(3.7)",
                  side([](const Q& x) { return x.psi(1) * x.psi(7); }, "psi(q)*psi(q^7)"),
                  side([](const Q& x) { return x.omega(2) + x.q(1) * x.psi(2) * x.psi(14); },
                       "omega(q^2) + q*psi(q^2)*psi(q^14)")));
  r.push_back(rec("eq-3.8", "(3.8)",
                  side([](const Q& x) { return x.phi(1) * x.phi(7); }, "phi(q)*phi(q^7)"),
                  side([](const Q& x) { return x.sigma(4) + times(2, x.q(1) * x.omega(2)); },
                       "sigma(q^4) + 2*q*omega(q^2)")));
  r.push_back(rec("eq-3.8-mid", "(3.8)",
                  side([](const Q& x) { return x.phi(1) * x.phi(7); }, "phi(q)*phi(q^7)"),
                  side(
                      [](const Q& x) {
                        return x.phi(4) * x.phi(28) + times(4, x.q(8) * x.psi(8) * x.psi(56)) +
                               times(2, x.q(1) * (x.psi(8) * x.phi(28) +
                                                  x.q(6) * x.psi(56) * x.phi(4)));
                      },
                      "phi(q^4)*phi(q^28) + 4*q^8*psi(q^8)*psi(q^56)"
                      " + 2*q*(psi(q^8)*phi(q^28) + q^6*psi(q^56)*phi(q^4))"),
                  "middle member of the chain"));
  r.push_back(rec("eq-3.14", "(3.14)", side([](const Q& x) { return x.fff6(); }, kFff6),
                  side(
                      [](const Q& x) {
                        return x.q(2) * pow(x.psi(7), 3) + x.psi(1) * x.omega(1);
                      },
                      "q^2*psi(q^7)^3 + psi(q)*omega(q)")));
  r.push_back(rec("eq-3.15", "(3.15)", side([](const Q& x) { return x.fff6(); }, kFff6),
                  side([](const Q& x) { return x.chi_neg(7) / x.chi_neg(1) * x.E(7, 3); },
                       "chi(-q^7)/chi(-q)*E(q^7)^3")));
  r.push_back(rec(
      "eq-3.16", "(3.16)",
      side([](const Q& x) { return x.chi_neg(14) / x.chi_neg(2) * x.E(14, 3); },
           "chi(-q^14)/chi(-q^2)*E(q^14)^3"),
      side(
          [](const Q& x) {
            return x.q(4) * pow(x.psi(14), 3) +
                   x.psi(2) * (x.psi(1) * x.psi(7) - x.q(1) * x.psi(2) * x.psi(14));
          },
          "q^4*psi(q^14)^3 + psi(q^2)*(psi(q)*psi(q^7) - q*psi(q^2)*psi(q^14))"),
      "stated at q^2"));
  r.push_back(rec("eq-3.22", "(3.22)",
                  side([](const Q& x) { return x.E(14) * x.E(7, 3) * x.E(2) / x.E(1); },
                       "E(q^14)*E(q^7)^3*E(q^2)/E(q)"),
                  side(
                      [](const Q& x) {
                        return x.q(2) * pow(x.psi(7), 4) + x.psi(1) * x.psi(7) * x.omega(1);
                      },
                      "q^2*psi(q^7)^4 + psi(q)*psi(q^7)*omega(q)")));
  r.push_back(rec("eq-3.23", "(3.23)", side([](const Q& x) { return x.seven_cores(); }, kA7),
                  side(
                      [](const Q& x) {
                        return x.q(2) * x.E(14, 7) / x.E(2) +
                               x.E(14) * x.E(7, 3) * x.E(2) / x.E(1) * x.omega(1);
                      },
                      "q^2*" + kA7Sq + " + E(q^14)*E(q^7)^3*E(q^2)/E(q)*omega(q)")));
  r.push_back(rec("eq-3.24", "(3.24)",
                  side([](const Q& x) { return x.seven_cores() + x.E_neg(7, 7) / x.E_neg(1); },
                       kA7 + " + E(-q^7)^7/E(-q)"),
                  side(
                      [](const Q& x) {
                        return times(2, times(5, x.q(2) * x.E(14, 7) / x.E(2)) -
                                            times(4, x.rank_2()) + x.E(2, 3) * x.E(14, 3));
                      },
                      "2*(5*q^2*" + kA7Sq + " - 4*" + kRank2 + " + E(q^2)^3*E(q^14)^3)"),
                  "both sides doubled"));
  r.push_back(rec("eq-3.28", "(3.28)",
                  Side{[](std::size_t n) {
                         return hecke_T2(shift(cores::seven_cores(2 * n), 2));
                       },
                       "T2(q^2*" + kA7 + ")"},
                  side(
                      [](const Q& x) {
                        return times(5, x.q(2) * x.seven_cores()) +
                               x.q(1) * x.E(1, 3) * x.E(7, 3);
                      },
                      "5*q^2*" + kA7 + " + q*E(q)^3*E(q^7)^3")));

  r.push_back(rec("eq-4.4", "(4.4)",
                  side([](const Q& x) { return x.seven_cores() - times(8, x.rank_2()); },
                       kA7 + " - 8*" + kRank2),
                  side([](const Q& x) { return x.psi(1) * x.psi(7) * x.weight() * x.sigma(2); },
                       "psi(q)*psi(q^7)*" + kWeight + "*sigma(q^2)")));
  r.push_back(rec("eq-4.5", "(4.5)",
                  side([](const Q& x) { return even_part(x.seven_cores()); }, "even(" + kA7 + ")"),
                  side(
                      [](const Q& x) {
                        return times(2, x.q(2) * x.E(14, 7) / x.E(2)) + times(6, x.rank_2()) +
                               x.weight() * x.omega(2) * x.sigma(4);
                      },
                      "2*q^2*" + kA7Sq + " + 6*" + kRank2 + " + " + kWeight +
                          "*omega(q^2)*sigma(q^4)"),
                  "first against last member"));
  r.push_back(rec("eq-4.6", "(4.6)",
                  side([](const Q& x) { return x.weight() * x.omega(2); }, kWeight + "*omega(q^2)"),
                  side([](const Q& x) { return even_part(x.psi(1) * x.psi(7) * x.weight()); },
                       "even(psi(q)*psi(q^7)*" + kWeight + ")")));
  r.push_back(rec("eq-4.8", "(4.8)",
                  side([](const Q& x) { return x.weight() * x.omega(2); }, kWeight + "*omega(q^2)"),
                  side(
                      [](const Q& x) {
                        return x.f(4, 24) * pow(x.f(12, 16), 3) +
                               x.q(6) * x.f(10, 18) * pow(x.f(2, 26), 3);
                      },
                      "f(q^4,q^24)*f(q^12,q^16)^3 + q^6*f(q^10,q^18)*f(q^2,q^26)^3"),
                  "stated without proof; checked numerically only"));
  r.push_back(rec("eq-4.11", "(4.11)",
                  side([](const Q& x) { return odd_part(x.seven_cores()) - times(3, x.rank_m1()); },
                       "odd(" + kA7 + ") - 3*" + kRankM1),
                  side([](const Q& x) { return x.q(1) * pow(x.omega(2), 2) * x.weight(); },
                       "q*omega(q^2)^2*" + kWeight),
                  "first against last member"));
  r.push_back(rec("eq-4.14", "(4.14)",
                  Side{[](std::size_t n) {
                         return hecke_T2(cores::seven_cores(2 * n)) -
                                times(4, theta::eta_power(14, 7, n) / theta::euler_E(2, n));
                       },
                       "T2(" + kA7 + ") - 4*" + kA7Sq},
                  side(
                      [](const Q& x) {
                        return times(5, x.q(1) * x.seven_cores()) -
                               times(4, x.q(3) * x.E(14, 7) / x.E(2)) + x.E(1, 3) * x.E(7, 3);
                      },
                      "5*q*" + kA7 + " - 4*q^3*" + kA7Sq + " + E(q)^3*E(q^7)^3"),
                  "sum a_7(2n) q^n written as T2(A) - 4A(q^2)"));
  r.push_back(rec("eq-4.15", "(4.13), (4.15)",
                  Side{[](std::size_t n) {
                         const TruncSeries a = cores::seven_cores(4 * n + 4);
                         return section(a, 4, 0) - times(5, shift(section(a, 2, 1), 1));
                       },
                       std::nullopt},
                  Side{[](std::size_t n) { return section(cores::cube_product(2 * n), 2, 0); },
                       std::nullopt},
                  "a_7(4n) - 5 a_7(2n-1) = b(2n) as a series in n"));
  r.push_back(rec("eq-4.16", "(4.16)", side([](const Q& x) { return x.E(1, 3); }, "E(q)^3"),
                  Side{[](std::size_t n) { return theta::jacobi_cube(n); }, std::nullopt},
                  "Jacobi's cube series"));
  r.push_back(rec("eq-4.18", "(4.18)",
                  side(
                      [](const Q& x) {
                        return times(3, x.q(1) * x.seven_cores()) + x.E(1, 3) * x.E(7, 3);
                      },
                      "3*q*" + kA7 + " + E(q)^3*E(q^7)^3"),
                  side(
                      [](const Q& x) {
                        return times(10, x.q(3) * x.E(14, 7) / x.E(2)) +
                               x.sigma(2) * x.omega(1) * x.E(7, 4) / (x.E(2) * x.E(14));
                      },
                      "10*q^3*" + kA7Sq + " + sigma(q^2)*omega(q)*E(q^7)^4/(E(q^2)*E(q^14))")));

  r.push_back(rec("eq-5.1", "(5.1)",
                  side([](const Q& x) { return odd_part(x.seven_cores()) - x.rank_m1(); },
                       "odd(" + kA7 + ") - " + kRankM1),
                  side([](const Q& x) { return x.rank_1_closed(); }, kRank1Closed),
                  "first against last member"));
  r.push_back(rec("eq-5.2", "(5.2)", side([](const Q& x) { return x.seven_cores(); }, kA7),
                  side(
                      [](const Q& x) {
                        return x.q(2) * x.E(14, 7) / x.E(2) +
                               x.q(2) * pow(x.psi(7), 4) * x.omega(1) +
                               x.psi(1) * x.psi(7) * pow(x.omega(1), 2);
                      },
                      "q^2*" + kA7Sq + " + q^2*psi(q^7)^4*omega(q) + psi(q)*psi(q^7)*omega(q)^2")));
  r.push_back(rec("eq-5.3", "(5.3)", side([](const Q& x) { return x.seven_cores(); }, kA7),
                  side(
                      [](const Q& x) {
                        return x.rank_2() + x.q(2) * x.core() * x.omega(2) +
                               x.q(2) * pow(x.psi(7), 4) * x.omega(1) +
                               x.psi(1) * x.psi(7) * pow(x.omega(1), 2);
                      },
                      kRank2 + " + q^2*" + kCore +
                          "*omega(q^2) + q^2*psi(q^7)^4*omega(q) + psi(q)*psi(q^7)*omega(q)^2"),
                  "first against last member"));
  r.push_back(rec("eq-5.4", "(5.4)", side([](const Q& x) { return pow(x.psi(1), 4); }, "psi(q)^4"),
                  side(
                      [](const Q& x) {
                        return pow(x.psi(2), 2) *
                               (pow(x.phi(2), 2) + times(4, x.q(1) * pow(x.psi(4), 2)));
                      },
                      "psi(q^2)^2*(phi(q^2)^2 + 4*q*psi(q^4)^2)")));
  r.push_back(rec("eq-5.5", "(5.5)",
                  side([](const Q& x) { return odd_part(x.seven_cores()) - times(2, x.rank_m1()); },
                       "odd(" + kA7 + ") - 2*" + kRankM1),
                  side([](const Q& x) { return x.q(1) * x.core() * x.sigma(4); },
                       "q*" + kCore + "*sigma(q^4)"),
                  "first against last member"));
  r.push_back(rec("eq-5.6", "(5.6)", side([](const Q& x) { return x.seven_cores(); }, kA7),
                  side(
                      [](const Q& x) {
                        return times(2, x.rank_m1()) + times(2, x.q(2) * x.E(14, 7) / x.E(2)) +
                               times(6, x.rank_2()) + x.sigma(4) * x.fff13() * x.phi(7);
                      },
                      "2*" + kRankM1 + " + 2*q^2*" + kA7Sq + " + 6*" + kRank2 + " + sigma(q^4)*" +
                          kFff13 + "*phi(q^7)"),
                  "first against last member"));

  r.push_back(rec("aux-phi-dissection", "phi(q) = phi(q^4) + 2q psi(q^8)",
                  side([](const Q& x) { return x.phi(1); }, "phi(q)"),
                  side([](const Q& x) { return x.phi(4) + times(2, x.q(1) * x.psi(8)); },
                       "phi(q^4) + 2*q*psi(q^8)")));
  r.push_back(rec("aux-psi-square", "psi(q)^2 = psi(q^2) phi(q)",
                  side([](const Q& x) { return pow(x.psi(1), 2); }, "psi(q)^2"),
                  side([](const Q& x) { return x.psi(2) * x.phi(1); }, "psi(q^2)*phi(q)")));
  return r;
}

}  // namespace

Registry::Registry(std::vector<IdentityRecord> records) {
  for (auto& rec : records) add(std::move(rec));
}

void Registry::add(IdentityRecord record) {
  if (contains(record.id)) throw std::invalid_argument("duplicate identity id: " + record.id);
  records_.push_back(std::move(record));
}

bool Registry::contains(std::string_view id) const {
  return std::any_of(records_.begin(), records_.end(),
                     [&](const IdentityRecord& r) { return r.id == id; });
}

const IdentityRecord& Registry::find(std::string_view id) const {
  for (const auto& r : records_) {
    if (r.id == id) return r;
  }
  throw UnknownIdentity("unknown identity id: " + std::string(id));
}

const Registry& Registry::standard() {
  static const Registry registry(standard_records());
  return registry;
}

VerificationReport verify(const IdentityRecord& record, std::size_t order) {
  const auto start = std::chrono::steady_clock::now();
  const TruncSeries lhs = record.lhs.build(order);
  const TruncSeries rhs = record.rhs.build(order);
  const Comparison cmp = compare(lhs.truncated(std::min(lhs.order(), order)),
                                 rhs.truncated(std::min(rhs.order(), order)));
  VerificationReport report;
  report.id = record.id;
  report.citation = record.citation;
  report.order = cmp.order;
  report.status = cmp.pass() ? Status::pass : Status::fail;
  report.mismatch = cmp.mismatch;
  report.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify(const Registry& registry, std::string_view id, std::size_t order) {
  return verify(registry.find(id), order);
}

std::vector<VerificationReport> verify_all(const Registry& registry, std::size_t order,
                                           unsigned threads) {
  const auto& records = registry.records();
  std::vector<VerificationReport> reports(records.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, records.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < records.size();) {
      try {
        reports[i] = verify(records[i], order);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

}  // namespace q7::identities
