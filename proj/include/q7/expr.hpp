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

// A small expression language for q-series.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INT)*
//   primary := INT | 'q' ['^' INT] | '(' expr ')'
//            | ('E' | 'phi' | 'psi' | 'sigma' | 'omega') '(' ['-'] 'q' ['^' INT] ')'
//            | 'chi' '(' '-' 'q' ['^' INT] ')'
//            | 'f' '(' ['+'|'-'] 'q' ['^' INT] ',' ['+'|'-'] 'q' ['^' INT] ')'
//            | ('even' | 'odd' | 'T2' | 'altq') '(' expr ')'
//
// Binary operators associate to the left. Unary minus binds tighter than '*'
// and looser than '^', so -q^2 is -(q^2) and -2*x is (-2)*x. Whitespace is
// ignored. Error offsets are 1-based byte positions.

#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "q7/series.hpp"

namespace q7::expr {

enum class AtomKind { E, phi, psi, chi, sigma, omega };

std::string_view atom_name(AtomKind kind);

/// X(q^k), or X(-q^k) when negated.
struct Atom {
  AtomKind kind;
  bool negated = false;
  unsigned k = 1;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// f(sign_a q^r, sign_b q^s).
struct Theta {
  int sign_a = 1;
  unsigned r = 1;
  int sign_b = 1;
  unsigned s = 1;
  friend bool operator==(const Theta&, const Theta&) = default;
};

struct QPower {
  unsigned k = 1;
  friend bool operator==(const QPower&, const QPower&) = default;
};

struct Literal {
  Integer value;  // nonnegative; negation is a Unary node
  friend bool operator==(const Literal& a, const Literal& b) { return a.value == b.value; }
};

enum class UnaryOp { neg, even, odd, T2, altq };
enum class BinaryOp { add, sub, mul, div };

struct Node;

/// Immutable expression tree with structural equality.
class Expr {
 public:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  const Node& node() const { return *node_; }

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  std::shared_ptr<const Node> node_;
};

struct Unary {
  UnaryOp op;
  Expr child;
  friend bool operator==(const Unary&, const Unary&) = default;
};

struct Binary {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
  friend bool operator==(const Binary&, const Binary&) = default;
};

struct Power {
  Expr base;
  unsigned exponent;
  friend bool operator==(const Power&, const Power&) = default;
};

struct Node {
  std::variant<Atom, Theta, QPower, Literal, Unary, Binary, Power> v;
  friend bool operator==(const Node&, const Node&) = default;
};

Expr make(Atom a);
Expr make(Theta t);
Expr make(QPower p);
Expr make(Literal l);
Expr make(UnaryOp op, Expr child);
Expr make(BinaryOp op, Expr lhs, Expr rhs);
Expr make_power(Expr base, unsigned exponent);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& message);

  /// 1-based byte position where parsing stopped.
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Expr parse(std::string_view text);

/// Canonical text; parse(print(e)) == e.
std::string print(const Expr& e);

/// Evaluates to a series of exactly `order`. T2(x) evaluates x at 2*order.
TruncSeries eval(const Expr& e, std::size_t order);

inline TruncSeries eval(std::string_view text, std::size_t order) { return eval(parse(text), order); }

}  // namespace q7::expr
