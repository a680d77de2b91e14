#pragma once

#include "scoh/rat.hpp"

#include <climits>
#include <string>
#include <vector>

namespace scoh {

/// Polynomial in x over Rat. Dense ascending coefficients, canonical form:
/// no trailing zero coefficients, zero polynomial stores nothing.
class Poly {
public:
  /// degree() of the zero polynomial. Finite negative-infinity marker chosen
  /// so that sums of two degrees never overflow (keeps degree arithmetic total).
  static constexpr int kNegInf = INT_MIN / 4;

  Poly() = default;
  Poly(Rat c) { c_ = {std::move(c)}; normalize(); }
  Poly(long c) : Poly(Rat(c)) {}

  static Poly x() { return monomial(1); }
  static Poly monomial(int deg, Rat coef = Rat(1));
  static Poly from_coeffs(std::vector<Rat> cs);

  int degree() const { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int k) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& p);

  Poly derivative() const;
  Poly derivative(int n) const;
  /// Multiplication by x^k.
  Poly shifted(int k) const;
  Rat eval(const Rat& x0) const;

  bool operator==(const Poly&) const = default;

  std::string str() const;

private:
  std::vector<Rat> c_;
  void normalize();
};

}  // namespace scoh
