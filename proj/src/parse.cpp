#include "scoh/parse.hpp"

#include "scoh/diffop.hpp"

#include <cctype>

namespace scoh {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Lexer {
  std::string_view s;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string text;
  std::size_t tok_pos = 0;

  explicit Lexer(std::string_view sv) : s(sv) { next(); }

  void next() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    tok_pos = pos;
    text.clear();
    if (pos >= s.size()) {
      tok = Tok::End;
      return;
    }
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) text += s[pos++];
      tok = Tok::Int;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        text += s[pos++];
      tok = Tok::Ident;
      return;
    }
    text.assign(1, c);
    ++pos;
    switch (c) {
      case '+': tok = Tok::Plus; return;
      case '-': tok = Tok::Minus; return;
      case '*': tok = Tok::Star; return;
      case '/': tok = Tok::Slash; return;
      case '^': tok = Tok::Caret; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      default: throw ParseError(tok_pos, text, "unexpected character");
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(tok_pos, text.empty() ? "<end>" : text, what);
  }
};

bool is_op_ident(const std::string& t) { return t == "etabar" || t == "dx" || t == "dtheta"; }

class Parser {
public:
  explicit Parser(std::string_view sv) : lx_(sv) {}

  SuperFun superfun() {
    SuperFun v = expr();
    if (lx_.tok != Tok::End) lx_.fail("trailing input");
    return v;
  }

  DOp dop(const Rat& src, const Rat& dst) {
    DOp acc(src, dst);
    bool neg = eat_sign(true);
    op_term(acc, neg);
    while (lx_.tok != Tok::End) {
      if (lx_.tok != Tok::Plus && lx_.tok != Tok::Minus) lx_.fail("expected '+', '-' or end");
      neg = (lx_.tok == Tok::Minus);
      lx_.next();
      op_term(acc, neg);
    }
    return acc;
  }

private:
  Lexer lx_;

  bool eat_sign(bool allow_none) {
    if (lx_.tok == Tok::Plus || lx_.tok == Tok::Minus) {
      const bool neg = (lx_.tok == Tok::Minus);
      lx_.next();
      return neg;
    }
    if (!allow_none) lx_.fail("expected sign");
    return false;
  }

  int exponent() {
    lx_.next();  // consume '^'
    if (lx_.tok != Tok::Int) lx_.fail("expected integer exponent");
    if (lx_.text.size() > 4) lx_.fail("exponent out of range");
    const int n = std::stoi(lx_.text);
    lx_.next();
    return n;
  }

  Rat rational() {
    mpz_class num(lx_.text);
    lx_.next();
    mpz_class den(1);
    if (lx_.tok == Tok::Slash) {
      lx_.next();
      if (lx_.tok != Tok::Int) lx_.fail("expected denominator");
      den = mpz_class(lx_.text);
      if (den == 0) lx_.fail("zero denominator");
      lx_.next();
    }
    return Rat(mpq_class(num, den));
  }

  SuperFun base() {
    switch (lx_.tok) {
      case Tok::Int:
        return SuperFun(rational());
      case Tok::Ident: {
        if (lx_.text == "x") {
          lx_.next();
          return SuperFun::x();
        }
        if (lx_.text == "theta") {
          lx_.next();
          return SuperFun::theta();
        }
        lx_.fail("unknown identifier");
      }
      case Tok::LParen: {
        lx_.next();
        SuperFun v = expr();
        if (lx_.tok != Tok::RParen) lx_.fail("expected ')'");
        lx_.next();
        return v;
      }
      default: lx_.fail("expected a value");
    }
  }

  SuperFun factor() {
    SuperFun b = base();
    if (lx_.tok == Tok::Caret) {
      const int n = exponent();
      SuperFun r(1);
      for (int i = 0; i < n; ++i) r = r * b;
      return r;
    }
    return b;
  }

  SuperFun term() {
    SuperFun acc = factor();
    while (lx_.tok == Tok::Star) {
      lx_.next();
      acc = acc * factor();
    }
    return acc;
  }

  SuperFun expr() {
    bool neg = eat_sign(true);
    SuperFun t = term();
    SuperFun acc = neg ? -t : t;
    while (lx_.tok == Tok::Plus || lx_.tok == Tok::Minus) {
      neg = (lx_.tok == Tok::Minus);
      lx_.next();
      t = term();
      acc += neg ? -t : t;
    }
    return acc;
  }

  // One summand of an operator expression: optional coefficient factors, then
  // an optional etabar / dx / dtheta tail.
  void op_term(DOp& acc, bool neg) {
    SuperFun coef(1);
    bool have_atom = false;
    if (!(lx_.tok == Tok::Ident && is_op_ident(lx_.text))) {
      coef = factor();
      while (lx_.tok == Tok::Star) {
        lx_.next();
        if (lx_.tok == Tok::Ident && is_op_ident(lx_.text)) {
          have_atom = true;
          break;
        }
        coef = coef * factor();
      }
    } else {
      have_atom = true;
    }
    if (neg) coef = -coef;
    if (!have_atom) {
      acc.add_term(0, coef);
      return;
    }

    const std::string which = lx_.text;
    lx_.next();
    int power = 1;
    if (lx_.tok == Tok::Caret) power = exponent();

    const Rat minus_one(-1);
    if (which == "etabar") {
      acc.add_term(power, coef);
      return;
    }
    if (which == "dtheta") {
      // pure dtheta = etabar - theta etabar^2
      acc.add_term(1, coef);
      acc.add_term(2, -(coef * SuperFun::theta()));
      return;
    }
    // dx^i, possibly followed by "* dtheta"
    const int i = power;
    const Rat sign = (i % 2 == 0) ? Rat(1) : minus_one;
    if (lx_.tok == Tok::Star) {
      lx_.next();
      if (!(lx_.tok == Tok::Ident && lx_.text == "dtheta")) lx_.fail("expected 'dtheta'");
      lx_.next();
      acc.add_term(2 * i + 1, sign * coef);
      acc.add_term(2 * i + 2, -sign * (coef * SuperFun::theta()));
      return;
    }
    acc.add_term(2 * i, sign * coef);
  }
};

}  // namespace

SuperFun parse_superfun(std::string_view s) { return Parser(s).superfun(); }

DOp parse_dop(std::string_view s, const Rat& src, const Rat& dst) {
  return Parser(s).dop(src, dst);
}

SuperFun SuperFun::parse(std::string_view s) { return parse_superfun(s); }

}  // namespace scoh
