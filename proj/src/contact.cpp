#include "scoh/contact.hpp"

#include <stdexcept>

namespace scoh {

SuperFun contact_bracket(const SuperFun& F, const SuperFun& G) {
  // F G' - F' G + (1/2)(-1)^{p(F)+1} etabar(F) etabar(G), extended bilinearly:
  // the sign factor is -1 on the even part of F and +1 on the odd part.
  SuperFun sign_part = F.odd_part().etabar() - F.even_part().etabar();
  return F * G.ddx() - F.ddx() * G + half() * (sign_part * G.etabar());
}

SuperFun field_apply(const SuperFun& F, const SuperFun& G) {
  // F G' + (1/2)(-1)^{(p(F)+1) p(G)} etabar(F) etabar(G), bilinear in both slots.
  SuperFun ebF = F.etabar();
  SuperFun ebF_odd_minus_even = F.odd_part().etabar() - F.even_part().etabar();
  return F * G.ddx() +
         half() * (ebF * G.even_part().etabar() + ebF_odd_minus_even * G.odd_part().etabar());
}

Density lie_density(const SuperFun& F, const Density& d) {
  return Density{field_apply(F, d.coeff) + d.weight * (F.ddx() * d.coeff), d.weight};
}

const std::array<OspElem, kOspDim>& osp_basis() {
  static const std::array<OspElem, kOspDim> basis = {{
      {"X_1", SuperFun(1), Parity::Even, Rat(-1)},
      {"X_x", SuperFun::x(), Parity::Even, Rat(0)},
      {"X_x2", SuperFun::x() * SuperFun::x(), Parity::Even, Rat(1)},
      {"X_theta", SuperFun::theta(), Parity::Odd, Rat(-1, 2)},
      {"X_xtheta", SuperFun::x() * SuperFun::theta(), Parity::Odd, Rat(1, 2)},
  }};
  return basis;
}

std::array<Rat, kOspDim> osp_decompose(const SuperFun& F) {
  if (F.ev().degree() > 2 || F.od().degree() > 1)
    throw std::domain_error("osp_decompose: not in the span of the basis: " + F.str());
  return {F.ev().coeff(0), F.ev().coeff(1), F.ev().coeff(2), F.od().coeff(0), F.od().coeff(1)};
}

namespace {

std::array<std::array<std::array<Rat, kOspDim>, kOspDim>, kOspDim> build_bracket_table() {
  std::array<std::array<std::array<Rat, kOspDim>, kOspDim>, kOspDim> t;
  const auto& basis = osp_basis();
  for (int i = 0; i < kOspDim; ++i)
    for (int j = 0; j < kOspDim; ++j)
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          osp_decompose(contact_bracket(basis[static_cast<std::size_t>(i)].gen,
                                        basis[static_cast<std::size_t>(j)].gen));
  return t;
}

}  // namespace

const std::array<Rat, kOspDim>& osp_bracket(int i, int j) {
  static const auto table = build_bracket_table();
  return table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

bool check_table() {
  const auto& b = osp_basis();
  // Expected nonzero structure constants, upper entries; the rest follow by
  // super antisymmetry [X,Y] = -(-1)^{p(X)p(Y)} [Y,X].
  struct Entry {
    int i, j, target;
    Rat coef;
  };
  const Entry upper[] = {
      {0, 1, 0, Rat(1)},        // [X_1, X_x] = X_1
      {0, 2, 1, Rat(2)},        // [X_1, X_x2] = 2 X_x
      {1, 2, 2, Rat(1)},        // [X_x, X_x2] = X_x2
      {0, 4, 3, Rat(1)},        // [X_1, X_xtheta] = X_theta
      {1, 3, 3, Rat(-1, 2)},    // [X_x, X_theta] = -(1/2) X_theta
      {1, 4, 4, Rat(1, 2)},     // [X_x, X_xtheta] = (1/2) X_xtheta
      {2, 3, 4, Rat(-1)},       // [X_x2, X_theta] = -X_xtheta
      {3, 3, 0, Rat(1, 2)},     // [X_theta, X_theta] = (1/2) X_1
      {3, 4, 1, Rat(1, 2)},     // [X_theta, X_xtheta] = (1/2) X_x
      {4, 4, 2, Rat(1, 2)},     // [X_xtheta, X_xtheta] = (1/2) X_x2
  };
  // [X_1, X_theta] = 0 and [X_x2, X_xtheta] = 0 are covered by the dense compare.
  std::array<std::array<std::array<Rat, kOspDim>, kOspDim>, kOspDim> expected{};
  for (const auto& e : upper) {
    expected[e.i][e.j][e.target] = e.coef;
    const bool both_odd = b[e.i].parity == Parity::Odd && b[e.j].parity == Parity::Odd;
    const Rat flip = both_odd ? Rat(1) : Rat(-1);
    if (e.i != e.j) expected[e.j][e.i][e.target] = flip * e.coef;
  }
  for (int i = 0; i < kOspDim; ++i)
    for (int j = 0; j < kOspDim; ++j)
      if (osp_bracket(i, j) != expected[i][j]) return false;
  // ad X_x diagonal with the advertised weights.
  for (int j = 0; j < kOspDim; ++j) {
    std::array<Rat, kOspDim> want{};
    want[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j)].ad_weight;
    if (osp_bracket(1, j) != want) return false;
  }
  return true;
}

}  // namespace scoh
