#include "scoh/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace scoh {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

std::optional<Rat> Rat::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  auto digits = [&](std::string& out) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out.push_back(s[i++]);
    return i > start;
  };
  std::string num, den;
  if (!digits(num)) return std::nullopt;
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (!digits(den)) return std::nullopt;
  }
  if (i != s.size()) return std::nullopt;
  mpz_class n(num), d(den.empty() ? "1" : den);
  if (d == 0) return std::nullopt;
  if (neg) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(std::move(q));
}

bool Rat::is_integer() const { return v_.get_den() == 1; }

long Rat::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw std::domain_error("Rat::to_long: not a small integer: " + str());
  return v_.get_num().get_si();
}

std::string Rat::str() const { return v_.get_str(); }

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

long ceil_to_long(const Rat& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.raw().get_num().get_mpz_t(), r.raw().get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::domain_error("ceil_to_long: out of range");
  return q.get_si();
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  int c = cmp(a.v_, b.v_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace scoh
