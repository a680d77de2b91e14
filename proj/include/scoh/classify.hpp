#pragma once

#include "scoh/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scoh {

/// Bilinear differential map A(h, f) = sum beta_{r,s} h^(r) f^(s) with
/// constant coefficients, first argument of weight -1/2, second of weight
/// lam, output of weight mu.
struct BilinearOp {
  Rat lam, mu;
  std::map<std::pair<int, int>, Rat> beta;

  Poly apply(const Poly& h, const Poly& f) const;
  bool is_zero() const { return beta.empty(); }
  bool operator==(const BilinearOp&) const = default;
  std::string str() const;
};

struct BilinearReport {
  Rat lam, mu;
  std::optional<long> k;  // mu - lam + 1/2 when a nonnegative integer
  long dim = 0;
  std::vector<BilinearOp> basis;
};

/// All invariant maps with h-derivatives of order <= 1 and f-derivatives of
/// order <= cap (cap chosen automatically when omitted).
BilinearReport invariant_bilinear(const Rat& lam, const Rat& mu, std::optional<int> cap = {});

/// h f^(k) + k (2 lam + k - 1) h' f^(k-1), the closed-form solution at
/// mu = lam + k - 1/2.
BilinearOp closed_form_invariant(const Rat& lam, long k);

/// True when a and b span the same line (either may be zero only if both are).
bool proportional(const BilinearOp& a, const BilinearOp& b);

}  // namespace scoh
