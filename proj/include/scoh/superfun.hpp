#pragma once

#include "scoh/poly.hpp"

#include <string>
#include <string_view>

namespace scoh {

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }
inline int parity_int(Parity p) { return static_cast<int>(p); }
inline Parity parity_of_int(int n) { return (n % 2 == 0) ? Parity::Even : Parity::Odd; }

/// Function on the supercircle: F(x, theta) = ev(x) + theta * od(x), theta^2 = 0.
/// Coefficients are polynomials in x over Rat.
class SuperFun {
public:
  SuperFun() = default;
  SuperFun(Poly ev, Poly od) : ev_(std::move(ev)), od_(std::move(od)) {}
  SuperFun(Rat c) : ev_(Poly(std::move(c))) {}
  SuperFun(long c) : ev_(Poly(c)) {}

  static SuperFun x() { return SuperFun(Poly::x(), Poly()); }
  static SuperFun theta() { return SuperFun(Poly(), Poly(1)); }

  const Poly& ev() const { return ev_; }
  const Poly& od() const { return od_; }

  bool is_zero() const { return ev_.is_zero() && od_.is_zero(); }
  bool is_homogeneous() const { return ev_.is_zero() || od_.is_zero(); }
  /// Parity of a homogeneous element; zero counts as even. Throws on mixed input.
  Parity parity() const;
  SuperFun even_part() const { return SuperFun(ev_, Poly()); }
  SuperFun odd_part() const { return SuperFun(Poly(), od_); }
  SuperFun part(Parity p) const { return p == Parity::Even ? even_part() : odd_part(); }

  SuperFun operator-() const { return SuperFun(-ev_, -od_); }
  SuperFun& operator+=(const SuperFun& o);
  SuperFun& operator-=(const SuperFun& o);
  friend SuperFun operator+(SuperFun a, const SuperFun& b) { return a += b; }
  friend SuperFun operator-(SuperFun a, const SuperFun& b) { return a -= b; }
  friend SuperFun operator*(const SuperFun& a, const SuperFun& b);
  friend SuperFun operator*(const Rat& s, const SuperFun& f);

  SuperFun ddx() const { return SuperFun(ev_.derivative(), od_.derivative()); }
  /// Left derivative by theta.
  SuperFun dtheta() const { return SuperFun(od_, Poly()); }
  SuperFun eta() const { return SuperFun(od_, ev_.derivative()); }
  SuperFun etabar() const { return SuperFun(od_, -ev_.derivative()); }

  int max_deg_x() const { return std::max(ev_.degree(), od_.degree()); }

  bool operator==(const SuperFun&) const = default;

  std::string str() const;
  /// Throws ParseError on malformed input.
  static SuperFun parse(std::string_view s);

private:
  Poly ev_, od_;
};

}  // namespace scoh
