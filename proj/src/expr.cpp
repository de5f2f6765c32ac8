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

#include "q7/expr.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "q7/identities.hpp"
#include "q7/theta.hpp"

namespace q7::expr {

std::string_view atom_name(AtomKind kind) {
  switch (kind) {
    case AtomKind::E:
      return "E";
    case AtomKind::phi:
      return "phi";
    case AtomKind::psi:
      return "psi";
    case AtomKind::chi:
      return "chi";
    case AtomKind::sigma:
      return "sigma";
    case AtomKind::omega:
      return "omega";
  }
  return "?";
}

bool operator==(const Expr& a, const Expr& b) {
  return a.node_ == b.node_ || *a.node_ == *b.node_;
}

Expr make(Atom a) { return Expr(std::make_shared<const Node>(Node{a})); }
Expr make(Theta t) { return Expr(std::make_shared<const Node>(Node{t})); }
Expr make(QPower p) { return Expr(std::make_shared<const Node>(Node{p})); }
Expr make(Literal l) { return Expr(std::make_shared<const Node>(Node{std::move(l)})); }
Expr make(UnaryOp op, Expr child) {
  return Expr(std::make_shared<const Node>(Node{Unary{op, std::move(child)}}));
}
Expr make(BinaryOp op, Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(Node{Binary{op, std::move(lhs), std::move(rhs)}}));
}
Expr make_power(Expr base, unsigned exponent) {
  return Expr(std::make_shared<const Node>(Node{Power{std::move(base), exponent}}));
}

ParseError::ParseError(std::size_t offset, std::string expected, const std::string& message)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { integer, ident, lparen, rparen, comma, plus, minus, star, slash, caret, end };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;  // 0-based
};

std::string describe(const Token& t) {
  if (t.kind == Tok::end) return "end of input";
  return "'" + std::string(t.text) + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (true) {
      while (i < src_.size() && std::isspace(static_cast<unsigned char>(src_[i]))) ++i;
      if (i == src_.size()) {
        out.push_back({Tok::end, {}, i});
        return out;
      }
      const char c = src_[i];
      const std::size_t start = i;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]))) ++i;
        out.push_back({Tok::integer, src_.substr(start, i - start), start});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (i < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[i])) || src_[i] == '_')) {
          ++i;
        }
        out.push_back({Tok::ident, src_.substr(start, i - start), start});
        continue;
      }
      Tok kind;
      switch (c) {
        case '(':
          kind = Tok::lparen;
          break;
        case ')':
          kind = Tok::rparen;
          break;
        case ',':
          kind = Tok::comma;
          break;
        case '+':
          kind = Tok::plus;
          break;
        case '-':
          kind = Tok::minus;
          break;
        case '*':
          kind = Tok::star;
          break;
        case '/':
          kind = Tok::slash;
          break;
        case '^':
          kind = Tok::caret;
          break;
        default:
          throw ParseError(start + 1, "an operator, operand, or parenthesis",
                           "unexpected character '" + std::string(1, c) + "'");
      }
      out.push_back({kind, src_.substr(start, 1), start});
      ++i;
    }
  }

 private:
  std::string_view src_;
};

std::optional<AtomKind> atom_kind(std::string_view name) {
  for (const AtomKind k : {AtomKind::E, AtomKind::phi, AtomKind::psi, AtomKind::chi,
                           AtomKind::sigma, AtomKind::omega}) {
    if (name == atom_name(k)) return k;
  }
  return std::nullopt;
}

std::optional<UnaryOp> unary_fn(std::string_view name) {
  if (name == "even") return UnaryOp::even;
  if (name == "odd") return UnaryOp::odd;
  if (name == "T2") return UnaryOp::T2;
  if (name == "altq") return UnaryOp::altq;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

  Expr parse_all() {
    Expr e = parse_expr();
    if (peek().kind != Tok::end) fail("an operator or end of input", "unexpected " + describe(peek()));
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected, const std::string& message) const {
    throw ParseError(peek().pos + 1, expected, message);
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      fail(what, std::string("expected ") + what + ", found " + describe(peek()));
    }
    return take();
  }

  unsigned parse_uint(const char* what) {
    const Token& t = expect(Tok::integer, what);
    const Integer v(std::string(t.text));
    if (v > std::numeric_limits<unsigned>::max()) {
      throw ParseError(t.pos + 1, what, "integer " + std::string(t.text) + " is too large");
    }
    return static_cast<unsigned>(v.get_ui());
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const BinaryOp op = take().kind == Tok::plus ? BinaryOp::add : BinaryOp::sub;
      lhs = make(op, std::move(lhs), parse_term());
    }
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const BinaryOp op = take().kind == Tok::star ? BinaryOp::mul : BinaryOp::div;
      lhs = make(op, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Expr parse_unary() {
    if (peek().kind == Tok::minus) {
      take();
      return make(UnaryOp::neg, parse_unary());
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    while (peek().kind == Tok::caret) {
      take();
      base = make_power(std::move(base), parse_uint("a nonnegative integer exponent"));
    }
    return base;
  }

  // 'q' ['^' INT], after an optional sign.
  unsigned parse_q_power(const char* context) {
    if (peek().kind != Tok::ident || peek().text != "q") {
      fail("'q'", std::string("expected 'q' in ") + context + ", found " + describe(peek()));
    }
    take();
    if (peek().kind == Tok::caret) {
      take();
      return parse_uint("an integer exponent of q");
    }
    return 1;
  }

  Expr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::integer: {
        take();
        return make(Literal{Integer(std::string(t.text))});
      }
      case Tok::lparen: {
        take();
        Expr inner = parse_expr();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::ident:
        break;
      default:
        fail("an operand", "expected an operand, found " + describe(t));
    }

    const std::string_view name = t.text;
    if (name == "q") {
      take();
      if (peek().kind == Tok::caret && toks_[pos_ + 1].kind == Tok::integer) {
        take();
        return make(QPower{parse_uint("an integer exponent of q")});
      }
      return make(QPower{1});
    }
    const std::size_t name_pos = t.pos;
    if (auto kind = atom_kind(name)) {
      take();
      expect(Tok::lparen, "'('");
      bool negated = false;
      if (peek().kind == Tok::minus) {
        take();
        negated = true;
      } else if (*kind == AtomKind::chi) {
        fail("'-'", "chi is only available as chi(-q^k)");
      }
      const std::size_t arg_pos = peek().pos;
      const unsigned k = parse_q_power("the argument");
      if (k == 0) throw ParseError(arg_pos + 1, "q^k with k >= 1", "argument q^0 is not allowed");
      expect(Tok::rparen, "')'");
      return make(Atom{*kind, negated, k});
    }
    if (name == "f") {
      take();
      expect(Tok::lparen, "'('");
      Theta th;
      auto sign = [&] {
        if (peek().kind == Tok::minus) {
          take();
          return -1;
        }
        if (peek().kind == Tok::plus) take();
        return 1;
      };
      th.sign_a = sign();
      th.r = parse_q_power("the first theta argument");
      expect(Tok::comma, "','");
      th.sign_b = sign();
      th.s = parse_q_power("the second theta argument");
      if (th.r + th.s == 0) {
        throw ParseError(name_pos + 1, "f(q^r, q^s) with r + s >= 1", "f needs |ab| < 1");
      }
      expect(Tok::rparen, "')'");
      return make(th);
    }
    if (auto op = unary_fn(name)) {
      take();
      expect(Tok::lparen, "'('");
      Expr inner = parse_expr();
      expect(Tok::rparen, "')'");
      return make(*op, std::move(inner));
    }
    throw ParseError(name_pos + 1, "a known function name",
                     "unknown name '" + std::string(name) + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Node& n) {
  if (const auto* b = std::get_if<Binary>(&n.v)) {
    return (b->op == BinaryOp::add || b->op == BinaryOp::sub) ? 1 : 2;
  }
  if (const auto* u = std::get_if<Unary>(&n.v); u && u->op == UnaryOp::neg) return 3;
  if (std::holds_alternative<Power>(n.v)) return 4;
  return 5;
}

std::string q_arg(int sign, unsigned k) {
  std::string s = sign < 0 ? "-q" : "q";
  if (k != 1) s += "^" + std::to_string(k);
  return s;
}

struct Printer {
  std::string operator()(const Atom& a) const {
    return std::string(atom_name(a.kind)) + "(" + q_arg(a.negated ? -1 : 1, a.k) + ")";
  }
  std::string operator()(const Theta& t) const {
    return "f(" + q_arg(t.sign_a, t.r) + "," + q_arg(t.sign_b, t.s) + ")";
  }
  std::string operator()(const QPower& p) const { return q_arg(1, p.k); }
  std::string operator()(const Literal& l) const { return l.value.get_str(); }
  std::string operator()(const Unary& u) const {
    switch (u.op) {
      case UnaryOp::neg: {
        const std::string inner = print(u.child);
        return precedence(u.child.node()) < 3 ? "-(" + inner + ")" : "-" + inner;
      }
      case UnaryOp::even:
        return "even(" + print(u.child) + ")";
      case UnaryOp::odd:
        return "odd(" + print(u.child) + ")";
      case UnaryOp::T2:
        return "T2(" + print(u.child) + ")";
      case UnaryOp::altq:
        return "altq(" + print(u.child) + ")";
    }
    return {};
  }
  std::string operator()(const Binary& b) const {
    const int p = (b.op == BinaryOp::add || b.op == BinaryOp::sub) ? 1 : 2;
    std::string l = print(b.lhs);
    std::string r = print(b.rhs);
    if (precedence(b.lhs.node()) < p) l = "(" + l + ")";
    if (precedence(b.rhs.node()) <= p) r = "(" + r + ")";
    const char* op = b.op == BinaryOp::add ? " + " : b.op == BinaryOp::sub ? " - "
                     : b.op == BinaryOp::mul ? "*" : "/";
    return l + op + r;
  }
  std::string operator()(const Power& p) const {
    std::string base = print(p.base);
    // A bare q^k base would be re-read as a single q power.
    if (precedence(p.base.node()) < 4 || std::holds_alternative<QPower>(p.base.node().v)) {
      base = "(" + base + ")";
    }
    return base + "^" + std::to_string(p.exponent);
  }
};

TruncSeries eval_atom(const Atom& a, std::size_t order) {
  auto at = [&](auto&& build) {
    return a.negated ? compose_power(alternate(build(1u)), a.k) : build(a.k);
  };
  switch (a.kind) {
    case AtomKind::E:
      return at([&](unsigned m) { return theta::euler_E(m, order); });
    case AtomKind::phi:
      return at([&](unsigned m) { return theta::phi(m, order); });
    case AtomKind::psi:
      return at([&](unsigned m) { return theta::psi(m, order); });
    case AtomKind::sigma:
      return at([&](unsigned m) { return theta::sigma(m, order); });
    case AtomKind::omega:
      return at([&](unsigned m) { return theta::omega(m, order); });
    case AtomKind::chi:
      return theta::chi_neg(a.k, order);
  }
  throw EvalError("unknown atom");
}

TruncSeries eval_node(const Expr& e, std::size_t order) {
  const Node& n = e.node();
  if (const auto* a = std::get_if<Atom>(&n.v)) return eval_atom(*a, order);
  if (const auto* t = std::get_if<Theta>(&n.v)) {
    return theta::theta_f({t->sign_a, t->r, t->sign_b, t->s}, order);
  }
  if (const auto* p = std::get_if<QPower>(&n.v)) return TruncSeries::monomial(p->k, 1, order);
  if (const auto* l = std::get_if<Literal>(&n.v)) return TruncSeries::constant(l->value, order);
  if (const auto* u = std::get_if<Unary>(&n.v)) {
    switch (u->op) {
      case UnaryOp::neg:
        return negate(eval_node(u->child, order));
      case UnaryOp::even:
        return even_part(eval_node(u->child, order));
      case UnaryOp::odd:
        return odd_part(eval_node(u->child, order));
      case UnaryOp::altq:
        return alternate(eval_node(u->child, order));
      case UnaryOp::T2:
        return identities::hecke_T2(eval_node(u->child, 2 * order));
    }
  }
  if (const auto* b = std::get_if<Binary>(&n.v)) {
    TruncSeries lhs = eval_node(b->lhs, order);
    TruncSeries rhs = eval_node(b->rhs, order);
    switch (b->op) {
      case BinaryOp::add:
        return lhs + rhs;
      case BinaryOp::sub:
        return lhs - rhs;
      case BinaryOp::mul:
        return lhs * rhs;
      case BinaryOp::div:
        if (rhs[0] != 1 && rhs[0] != -1) {
          throw EvalError("division by a series with constant term " + rhs[0].get_str() +
                          " (not +1 or -1) in '" + print(b->rhs) + "'");
        }
        return lhs / rhs;
    }
  }
  const auto& p = std::get<Power>(n.v);
  return pow(eval_node(p.base, order), p.exponent);
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Expr& e) { return std::visit(Printer{}, e.node().v); }

TruncSeries eval(const Expr& e, std::size_t order) { return eval_node(e, order); }

}  // namespace q7::expr
