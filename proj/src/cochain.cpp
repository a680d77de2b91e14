#include "scoh/cochain.hpp"

#include <stdexcept>

namespace scoh {

Cochain1 Cochain1::zero(const Rat& lam, const Rat& mu, Parity p) {
  Cochain1 c{lam, mu, p, {}};
  for (auto& v : c.vals) v = DOp(lam, mu);
  return c;
}

bool Cochain1::is_zero() const {
  for (const auto& v : vals)
    if (!v.is_zero()) return false;
  return true;
}

Cochain1& Cochain1::operator+=(const Cochain1& o) {
  if (lam != o.lam || mu != o.mu)
    throw std::invalid_argument("Cochain1: weight mismatch in sum");
  if (parity != o.parity && !is_zero() && !o.is_zero())
    throw std::invalid_argument("Cochain1: parity mismatch in sum");
  for (int i = 0; i < kOspDim; ++i) vals[static_cast<std::size_t>(i)] += o.vals[static_cast<std::size_t>(i)];
  return *this;
}

Cochain1 operator*(const Rat& s, Cochain1 c) {
  for (auto& v : c.vals) v = s * v;
  return c;
}

Cochain2 Cochain2::zero(const Rat& lam, const Rat& mu, Parity p) {
  Cochain2 c{lam, mu, p, {}};
  for (auto& v : c.vals) v = DOp(lam, mu);
  return c;
}

bool Cochain2::is_zero() const {
  for (const auto& v : vals)
    if (!v.is_zero()) return false;
  return true;
}

Cochain1 delta0(const DOp& A) {
  if (!A.is_parity_homogeneous())
    throw std::invalid_argument("delta0: operator must be parity homogeneous");
  Cochain1 c = Cochain1::zero(A.src(), A.dst(), A.parity());
  const auto& basis = osp_basis();
  for (int i = 0; i < kOspDim; ++i)
    c.vals[static_cast<std::size_t>(i)] = lie_op(basis[static_cast<std::size_t>(i)].gen, A);
  return c;
}

Cochain2 delta1(const Cochain1& c) {
  const auto& basis = osp_basis();
  Cochain2 d = Cochain2::zero(c.lam, c.mu, c.parity);
  for (int s = 0; s < kC2Dim; ++s) {
    const auto [xi, yi] = kC2Slots[static_cast<std::size_t>(s)];
    const OspElem& X = basis[static_cast<std::size_t>(xi)];
    const OspElem& Y = basis[static_cast<std::size_t>(yi)];
    DOp val(c.lam, c.mu);
    const auto& br = osp_bracket(xi, yi);
    for (int r = 0; r < kOspDim; ++r)
      if (!br[static_cast<std::size_t>(r)].is_zero())
        val += br[static_cast<std::size_t>(r)] * c.vals[static_cast<std::size_t>(r)];
    val -= lie_op(X.gen, c.vals[static_cast<std::size_t>(yi)]);
    const bool both_odd = (X.parity == Parity::Odd && Y.parity == Parity::Odd);
    const DOp back = lie_op(Y.gen, c.vals[static_cast<std::size_t>(xi)]);
    val += both_odd ? -back : back;
    d.vals[static_cast<std::size_t>(s)] = val;
  }
  return d;
}

}  // namespace scoh
