#pragma once

#include "scoh/diffop.hpp"

#include <array>

namespace scoh {

/// One-cochain on the five-dimensional symmetry algebra with operator values.
/// Parity law for homogeneous cochains: p(vals[i]) = parity + p(X_i).
struct Cochain1 {
  Rat lam, mu;
  Parity parity = Parity::Even;
  std::array<DOp, kOspDim> vals;

  static Cochain1 zero(const Rat& lam, const Rat& mu, Parity p);
  bool is_zero() const;
  Cochain1& operator+=(const Cochain1& o);
  friend Cochain1 operator+(Cochain1 a, const Cochain1& b) { return a += b; }
  friend Cochain1 operator*(const Rat& s, Cochain1 c);
  bool operator==(const Cochain1&) const = default;
};

/// Argument-pair slots of a two-cochain: antisymmetric in the three even
/// generators, plain pairs for even x odd, symmetric (diagonal included once)
/// in the two odd generators.
struct C2Slot {
  int x, y;
};

inline constexpr int kC2Dim = 12;
inline constexpr std::array<C2Slot, kC2Dim> kC2Slots = {{
    {0, 1}, {0, 2}, {1, 2},                          // even-even
    {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4},  // even-odd
    {3, 3}, {3, 4}, {4, 4},                          // odd-odd
}};

struct Cochain2 {
  Rat lam, mu;
  Parity parity = Parity::Even;
  std::array<DOp, kC2Dim> vals;

  static Cochain2 zero(const Rat& lam, const Rat& mu, Parity p);
  bool is_zero() const;
  bool operator==(const Cochain2&) const = default;
};

/// (delta0 A)(X) = action of X on A. Requires parity-homogeneous A.
Cochain1 delta0(const DOp& A);

/// (delta1 c)(X, Y) = c([X,Y]) - X.c(Y) + (-1)^{p(X)p(Y)} Y.c(X).
Cochain2 delta1(const Cochain1& c);

}  // namespace scoh
