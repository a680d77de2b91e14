#include "scoh/poly.hpp"

#include <stdexcept>

namespace scoh {

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int deg, Rat coef) {
  if (deg < 0) throw std::invalid_argument("Poly::monomial: negative degree");
  Poly p;
  p.c_.assign(static_cast<std::size_t>(deg) + 1, Rat(0));
  p.c_.back() = std::move(coef);
  p.normalize();
  return p;
}

Poly Poly::from_coeffs(std::vector<Rat> cs) {
  Poly p;
  p.c_ = std::move(cs);
  p.normalize();
  return p;
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[static_cast<std::size_t>(k)];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

Poly operator*(const Rat& s, const Poly& p) {
  Poly r = p;
  for (auto& c : r.c_) c *= s;
  r.normalize();
  return r;
}

Poly Poly::derivative() const {
  Poly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  r.normalize();
  return r;
}

Poly Poly::derivative(int n) const {
  Poly r = *this;
  for (int i = 0; i < n; ++i) r = r.derivative();
  return r;
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return Poly();
  Poly r;
  r.c_.assign(static_cast<std::size_t>(k), Rat(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Rat Poly::eval(const Rat& x0) const {
  Rat acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x0 + c_[i];
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rat c = coeff(k);
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rat a = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = (a == Rat(1));
    if (k == 0) {
      out += a.str();
    } else {
      if (!unit) {
        out += a.str();
        out += "*";
      }
      out += (k == 1) ? "x" : "x^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace scoh
