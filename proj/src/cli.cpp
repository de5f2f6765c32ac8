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

#include "q7/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "q7/cores.hpp"
#include "q7/expr.hpp"
#include "q7/identities.hpp"
#include "q7/inequalities.hpp"
#include "q7/partitions.hpp"

namespace q7::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t resolve_order(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kOrderEnv); env && *env) {
    std::size_t pos = 0;
    try {
      const unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string_view(env).size()) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kOrderEnv) + " is not a nonnegative integer: " + env);
  }
  throw UsageError("--order is required");
}

int cmd_coeffs(const std::string& text, std::size_t order, std::optional<std::size_t> from,
               std::optional<std::size_t> to, std::ostream& out, std::ostream& err) {
  const std::size_t lo = from.value_or(0);
  const std::size_t hi = to.value_or(order);
  if (hi > order) throw UsageError("--to exceeds --order");
  if (lo > hi) throw UsageError("--from exceeds --to");
  try {
    const TruncSeries s = expr::eval(expr::parse(text), order);
    for (std::size_t n = lo; n <= hi; ++n) out << n << ' ' << s[n] << '\n';
  } catch (const expr::ParseError& e) {
    const std::string what = e.what();
    err << "q7: " << what;
    if (what.find("expected") == std::string::npos) err << " (expected " << e.expected() << ')';
    err << '\n';
    return kExitUsage;
  } catch (const expr::EvalError& e) {
    err << "q7: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

std::string fmt_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << ms;
  return os.str();
}

int cmd_verify(const std::optional<std::string>& id, bool all, std::size_t order,
               const std::string& format, std::ostream& out) {
  const auto& registry = identities::Registry::standard();
  if (all == id.has_value()) throw UsageError("give exactly one of <id> or --all");
  std::vector<identities::VerificationReport> reports;
  if (all) {
    reports = identities::verify_all(registry, order);
  } else {
    if (!registry.contains(*id)) throw UsageError("unknown identity '" + *id + "'");
    reports.push_back(identities::verify(registry, *id, order));
  }

  std::size_t passed = 0;
  if (format == "jsonlike") {
    for (const auto& r : reports) {
      nlohmann::ordered_json j;
      j["id"] = r.id;
      j["ref"] = r.citation;
      j["order"] = r.order;
      j["status"] = r.passed() ? "pass" : "fail";
      if (r.mismatch) {
        j["mismatch_exponent"] = r.mismatch->exponent;
        j["lhs"] = r.mismatch->lhs.get_str();
        j["rhs"] = r.mismatch->rhs.get_str();
      } else {
        j["mismatch_exponent"] = nullptr;
        j["lhs"] = nullptr;
        j["rhs"] = nullptr;
      }
      j["millis"] = std::round(r.millis * 10) / 10;
      out << j.dump() << '\n';
      passed += r.passed();
    }
  } else {
    std::size_t width = 2;
    for (const auto& r : reports) width = std::max(width, r.id.size());
    out << std::left << std::setw(static_cast<int>(width)) << "id" << "  status  order  millis  mismatch\n";
    for (const auto& r : reports) {
      out << std::left << std::setw(static_cast<int>(width)) << r.id << "  " << std::setw(6)
          << (r.passed() ? "pass" : "FAIL") << "  " << std::right << std::setw(5) << r.order << "  "
          << std::setw(6) << fmt_ms(r.millis) << "  ";
      if (r.mismatch) {
        out << "q^" << r.mismatch->exponent << ": " << r.mismatch->lhs << " != " << r.mismatch->rhs;
      } else {
        out << '-';
      }
      out << '\n';
      passed += r.passed();
    }
    out << passed << '/' << reports.size() << " identities pass at order " << order << '\n';
  }
  return passed == reports.size() ? kExitOk : kExitFailure;
}

void print_instance(std::ostream& out, const char* label, const inequalities::Instance& i) {
  out << "  " << label << ": " << i.text << "  [" << i.lhs << " vs " << i.rhs << "]\n";
}

int cmd_scan(const std::optional<std::string>& id, bool conjectures, bool theorems,
             std::size_t order, std::ostream& out) {
  using inequalities::Claim;
  using inequalities::ClaimKind;
  if (static_cast<int>(id.has_value()) + conjectures + theorems != 1) {
    throw UsageError("give exactly one of <claim-id>, --conjectures, --theorems");
  }
  if (id) {
    const auto& claims = inequalities::standard_claims();
    if (std::none_of(claims.begin(), claims.end(), [&](const Claim& c) { return c.id == *id; })) {
      throw UsageError("unknown claim '" + *id + "'");
    }
  }
  const auto reports = inequalities::run_claims(order, [&](const Claim& c) {
    if (id) return c.id == *id;
    return c.kind == (conjectures ? ClaimKind::conjecture : ClaimKind::theorem);
  });

  bool theorem_failed = false;
  bool counterexample = false;
  for (const auto& r : reports) {
    out << r.claim_id << " [" << inequalities::kind_name(r.kind) << "] "
        << (r.holds() ? "holds" : (r.kind == ClaimKind::theorem ? "VIOLATED" : "COUNTEREXAMPLE"))
        << "  order=" << r.order << " checked=" << r.checked << " equalities=" << r.equalities
        << " millis=" << fmt_ms(r.millis) << '\n';
    out << "  " << r.statement << '\n';
    for (const auto& i : r.first_instances) print_instance(out, "first", i);
    if (r.violation) {
      print_instance(out, "witness", *r.violation);
      (r.kind == ClaimKind::theorem ? theorem_failed : counterexample) = true;
    }
  }
  if (theorem_failed) return kExitFailure;
  return counterexample ? kExitCounterexample : kExitOk;
}

int cmd_table(const std::string& which, std::size_t max, bool csv, std::ostream& out) {
  const bool by_rank = which == "a7j";
  if (!by_rank && which != "a7") throw UsageError("table must be a7 or a7j");
  const cores::SevenCoreTable t(max);
  const char* sep = csv ? "," : " ";
  const int w = csv ? 0 : 10;
  auto cell = [&](const auto& v, bool first) {
    if (!first) out << sep;
    out << std::setw(w) << v;
  };
  cell("n", true);
  cell("a7", false);
  if (by_rank) {
    for (const char* h : {"a7_m1", "a7_0", "a7_1", "a7_2"}) cell(h, false);
  }
  out << '\n';
  for (std::size_t n = 0; n <= max; ++n) {
    cell(n, true);
    cell(t.a7(n), false);
    if (by_rank) {
      for (int j : {-1, 0, 1, 2}) cell(t.a7j(j, n), false);
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_oracle(unsigned max, std::ostream& out) {
  if (max > partitions::kDefaultOracleBound) {
    throw UsageError("--max " + std::to_string(max) + " exceeds the oracle bound " +
                     std::to_string(partitions::kDefaultOracleBound));
  }
  const cores::SevenCoreTable t(max);
  unsigned same = 0;
  for (unsigned n = 1; n <= max; ++n) {
    const auto c = partitions::seven_core_counts(n);
    bool ok = c.out_of_range == 0 && t.a7(n) == c.total;
    for (int j : {-1, 0, 1, 2}) ok = ok && t.a7j(j, n) == c.rank(j);
    if (ok) {
      ++same;
      continue;
    }
    out << "n=" << n << " brute force " << c.total << " [" << c.rank(-1) << ',' << c.rank(0) << ','
        << c.rank(1) << ',' << c.rank(2) << "] series " << t.a7(n) << " [" << t.a7j(-1, n) << ','
        << t.a7j(0, n) << ',' << t.a7j(1, n) << ',' << t.a7j(2, n) << "]\n";
  }
  out << same << '/' << max << " rows identical\n";
  return same == max ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series identities and coefficient scans for 7-cores", "q7"};
  app.require_subcommand(1);

  std::optional<std::size_t> order;
  std::string text;
  std::optional<std::size_t> from, to;
  auto* coeffs = app.add_subcommand("coeffs", "Print exponent/coefficient pairs of an expression");
  coeffs->add_option("expr", text, "Expression, e.g. 'E(q^7)^7/E(q)'")->required();
  coeffs->add_option("--order", order, "Truncation order");
  coeffs->add_option("--from", from, "First exponent to print");
  coeffs->add_option("--to", to, "Last exponent to print");

  std::optional<std::string> id;
  bool all = false;
  std::string format = "table";
  auto* verify = app.add_subcommand("verify", "Check registered identities");
  verify->add_option("id", id, "Identity id");
  verify->add_flag("--all", all, "Check every identity");
  verify->add_option("--order", order, "Truncation order");
  verify->add_option("--format", format, "table or jsonlike")
      ->check(CLI::IsMember({"table", "jsonlike"}));

  bool conjectures = false, theorems = false;
  auto* scan = app.add_subcommand("scan", "Run inequality and positivity scans");
  scan->add_option("claim", id, "Claim id");
  scan->add_flag("--conjectures", conjectures, "Every conjecture");
  scan->add_flag("--theorems", theorems, "Every theorem");
  scan->add_option("--order", order, "Truncation order");

  std::string which;
  std::size_t max = 0;
  bool csv = false;
  auto* table = app.add_subcommand("table", "Tabulate a7(n) or a7 by BG-rank");
  table->add_option("which", which, "a7 or a7j")->required()->check(CLI::IsMember({"a7", "a7j"}));
  table->add_option("--max", max, "Largest n")->required();
  table->add_flag("--csv", csv, "Comma-separated output");

  unsigned oracle_max = 0;
  auto* oracle = app.add_subcommand("oracle", "Diff the series table against brute force");
  oracle->add_option("--max", oracle_max, "Largest n")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    msg.erase(std::remove(msg.begin(), msg.end(), '\n'), msg.end());
    err << "q7: usage: " << msg << '\n';
    return kExitUsage;
  }

  try {
    if (*coeffs) return cmd_coeffs(text, resolve_order(order), from, to, out, err);
    if (*verify) return cmd_verify(id, all, resolve_order(order), format, out);
    if (*scan) return cmd_scan(id, conjectures, theorems, resolve_order(order), out);
    if (*table) return cmd_table(which, max, csv, out);
    if (*oracle) return cmd_oracle(oracle_max, out);
  } catch (const UsageError& e) {
    err << "q7: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "q7: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace q7::cli
