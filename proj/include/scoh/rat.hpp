#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace scoh {

/// Exact rational scalar. Invariant: always canonical (reduced, denominator > 0).
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(int n) : v_(static_cast<long>(n)) {}
  Rat(long num, long den);
  explicit Rat(mpq_class q);

  /// Strict "p", "-p", "p/q" syntax; no whitespace, no floats, q > 0 after sign fold.
  static std::optional<Rat> parse(std::string_view s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const;
  bool is_nonneg_integer() const { return is_integer() && sgn(v_) >= 0; }
  int sign() const { return sgn(v_); }

  /// Requires an integer value that fits in long.
  long to_long() const;

  std::string str() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  const mpq_class& raw() const { return v_; }

private:
  mpq_class v_;
};

inline Rat half() { return Rat(1, 2); }

/// Smallest integer >= r, as long. Requires the result to fit.
long ceil_to_long(const Rat& r);

}  // namespace scoh
