#pragma once

#include "scoh/superfun.hpp"

#include <array>
#include <vector>

namespace scoh {

/// Contact vector field X_F = F d/dx + (1/2) eta(F) (d/dtheta - theta d/dx),
/// determined by its generator function F.
struct ContactField {
  SuperFun gen;
  Parity parity() const { return gen.parity(); }
};

/// Contact bracket {F, G} with [X_F, X_G] = X_{{F,G}}.
SuperFun contact_bracket(const SuperFun& F, const SuperFun& G);

/// Action of X_F on functions.
SuperFun field_apply(const SuperFun& F, const SuperFun& G);
inline SuperFun field_apply(const ContactField& X, const SuperFun& G) {
  return field_apply(X.gen, G);
}

/// Weighted density: coeff * alpha^weight.
struct Density {
  SuperFun coeff;
  Rat weight;
  bool operator==(const Density&) const = default;
};

/// Action of X_F on weighted densities.
Density lie_density(const SuperFun& F, const Density& d);
inline Density lie_density(const ContactField& X, const Density& d) {
  return lie_density(X.gen, d);
}

inline constexpr int kOspDim = 5;

struct OspElem {
  const char* name;
  SuperFun gen;
  Parity parity;
  Rat ad_weight;  // eigenvalue under ad X_x
};

/// Basis X_1, X_x, X_{x^2} (even), X_theta, X_{xtheta} (odd), in that order.
const std::array<OspElem, kOspDim>& osp_basis();

/// Coefficients of F over the span of the five basis generators; throws if F lies outside.
std::array<Rat, kOspDim> osp_decompose(const SuperFun& F);

/// [X_i, X_j] decomposed over the basis.
const std::array<Rat, kOspDim>& osp_bracket(int i, int j);

/// True iff the bracket reproduces the whole structure table exactly and
/// ad X_x is diagonal with weights (-1, 0, +1, -1/2, +1/2).
bool check_table();

}  // namespace scoh
