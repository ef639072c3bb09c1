#include "gp/expression.hpp"

#include <cctype>

#include "gp/errors.hpp"

namespace gp {

ExprPtr Expr::make_literal(const BigRat& v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Literal;
  e->literal = v;
  return e;
}

ExprPtr Expr::make_pi() {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Pi;
  return e;
}

ExprPtr Expr::make_e() {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::E;
  return e;
}

ExprPtr Expr::make_sqrt2() {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Sqrt2;
  return e;
}

ExprPtr Expr::make_neg(ExprPtr x) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Neg;
  e->lhs = std::move(x);
  return e;
}

ExprPtr Expr::make_binary(Kind op, ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->kind = op;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

ExprPtr Expr::make_pow(ExprPtr base, long exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Pow;
  e->lhs = std::move(base);
  e->exponent = exponent;
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(normalize(text)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  // Map U+2212 (minus sign) to ASCII '-'. Offsets reported in errors refer to
  // the normalized text.
  static std::string normalize(std::string_view text) {
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
          static_cast<unsigned char>(text[i + 1]) == 0x88 &&
          static_cast<unsigned char>(text[i + 2]) == 0x92) {
        out.push_back('-');
        i += 2;
      } else {
        out.push_back(text[i]);
      }
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = Expr::make_binary(Expr::Kind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = Expr::make_binary(Expr::Kind::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (true) {
      if (accept('*')) {
        lhs = Expr::make_binary(Expr::Kind::Mul, lhs, factor());
      } else if (accept('/')) {
        lhs = Expr::make_binary(Expr::Kind::Div, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr factor() {
    if (accept('-')) return Expr::make_neg(factor());
    ExprPtr b = base();
    if (accept('^')) {
      bool neg = accept('-');
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      BigInt exp_val(s_.substr(start, pos_ - start));
      if (exp_val > 100000) {
        pos_ = start;
        fail("exponent too large");
      }
      long e = exp_val.get_si();
      b = Expr::make_pow(b, neg ? -e : e);
    }
    return b;
  }

  ExprPtr base() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '.') {
        ++pos_;
        std::size_t frac = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (frac == pos_) fail("expected digits after '.'");
      }
      return Expr::make_literal(BigRat::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string ident = s_.substr(start, pos_ - start);
      if (ident == "pi") return Expr::make_pi();
      if (ident == "e") return Expr::make_e();
      if (ident == "sqrt2") return Expr::make_sqrt2();
      pos_ = start;
      fail("unknown identifier '" + ident + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    case Expr::Kind::Literal:
      if (!e.literal.is_integer()) return 2;
      return e.literal.sign() < 0 ? 3 : 5;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, bool paren) { return paren ? "(" + to_string(e) + ")" : to_string(e); }

QSqrt2 qpow(QSqrt2 base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DomainError("zero raised to a negative power");
    return QSqrt2(1) / qpow(base, -exponent);
  }
  QSqrt2 result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Literal:
      return e.literal.to_string();
    case K::Pi:
      return "pi";
    case K::E:
      return "e";
    case K::Sqrt2:
      return "sqrt2";
    case K::Neg:
      return "-" + wrap(*e.lhs, precedence(*e.lhs) < 3);
    case K::Pow:
      return wrap(*e.lhs, precedence(*e.lhs) <= 4) + "^" + std::to_string(e.exponent);
    default:
      break;
  }
  int p = precedence(e);
  char op = e.kind == K::Add ? '+' : e.kind == K::Sub ? '-' : e.kind == K::Mul ? '*' : '/';
  return wrap(*e.lhs, precedence(*e.lhs) < p) + op + wrap(*e.rhs, precedence(*e.rhs) <= p);
}

bool is_exact(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Pi:
    case Expr::Kind::E:
      return false;
    case Expr::Kind::Literal:
    case Expr::Kind::Sqrt2:
      return true;
    default:
      return is_exact(*e.lhs) && (!e.rhs || is_exact(*e.rhs));
  }
}

std::optional<QSqrt2> exact_value(const Expr& e) {
  if (!is_exact(e)) return std::nullopt;
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Literal:
      return QSqrt2(e.literal);
    case K::Sqrt2:
      return QSqrt2::sqrt2();
    case K::Neg:
      return -*exact_value(*e.lhs);
    case K::Pow:
      return qpow(*exact_value(*e.lhs), e.exponent);
    case K::Add:
      return *exact_value(*e.lhs) + *exact_value(*e.rhs);
    case K::Sub:
      return *exact_value(*e.lhs) - *exact_value(*e.rhs);
    case K::Mul:
      return *exact_value(*e.lhs) * *exact_value(*e.rhs);
    case K::Div:
      return *exact_value(*e.lhs) / *exact_value(*e.rhs);
    default:
      return std::nullopt;
  }
}

}  // namespace gp
