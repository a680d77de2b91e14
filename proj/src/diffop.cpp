#include "scoh/diffop.hpp"

#include <algorithm>
#include <stdexcept>

namespace scoh {

DOp DOp::mult(const SuperFun& c, Rat src, Rat dst) {
  DOp r(std::move(src), std::move(dst));
  r.add_term(0, c);
  return r;
}

DOp DOp::monomial(Rat src, Rat dst, int j, const SuperFun& coef) {
  DOp r(std::move(src), std::move(dst));
  r.add_term(j, coef);
  return r;
}

SuperFun DOp::coeff(int j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? SuperFun() : it->second;
}

void DOp::add_term(int j, const SuperFun& c) {
  if (j < 0) throw std::invalid_argument("DOp::add_term: negative power");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(j, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DOp DOp::operator-() const {
  DOp r(src_, dst_);
  for (const auto& [j, c] : terms_) r.terms_.emplace(j, -c);
  return r;
}

DOp& DOp::operator+=(const DOp& o) {
  if (src_ != o.src_ || dst_ != o.dst_)
    throw std::invalid_argument("DOp: weight mismatch in sum");
  for (const auto& [j, c] : o.terms_) add_term(j, c);
  return *this;
}

DOp& DOp::operator-=(const DOp& o) {
  if (src_ != o.src_ || dst_ != o.dst_)
    throw std::invalid_argument("DOp: weight mismatch in difference");
  for (const auto& [j, c] : o.terms_) add_term(j, -c);
  return *this;
}

DOp operator*(const Rat& s, const DOp& A) {
  DOp r(A.src(), A.dst());
  if (s.is_zero()) return r;
  for (const auto& [j, c] : A.terms()) r.add_term(j, s * c);
  return r;
}

bool DOp::is_parity_homogeneous() const {
  bool seen_even = false, seen_odd = false;
  for (const auto& [j, c] : terms_) {
    const bool j_even = (j % 2 == 0);
    if (!c.ev().is_zero()) (j_even ? seen_even : seen_odd) = true;
    if (!c.od().is_zero()) (j_even ? seen_odd : seen_even) = true;
  }
  return !(seen_even && seen_odd);
}

Parity DOp::parity() const {
  if (is_zero()) return Parity::Even;
  if (!is_parity_homogeneous())
    throw std::domain_error("DOp::parity: inhomogeneous operator " + str());
  const auto& [j, c] = *terms_.begin();
  const Parity pc = c.is_homogeneous() ? c.parity() : (c.ev().is_zero() ? Parity::Odd : Parity::Even);
  return parity_of_int(parity_int(pc) + j);
}

DOp DOp::part(Parity p) const {
  DOp r(src_, dst_);
  for (const auto& [j, c] : terms_) {
    const Parity coeff_parity = parity_of_int(parity_int(p) + j);
    r.add_term(j, c.part(coeff_parity));
  }
  return r;
}

std::string DOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [j, c] : terms_) {
    if (!out.empty()) out += " + ";
    const bool unit = (c == SuperFun(1));
    std::string op;
    if (j == 1) op = "etabar";
    else if (j > 1) op = "etabar^" + std::to_string(j);
    if (op.empty()) {
      out += "(" + c.str() + ")";
    } else if (unit) {
      out += op;
    } else {
      out += "(" + c.str() + ") * " + op;
    }
  }
  return out;
}

SuperFun etabar_pow_apply(int j, const SuperFun& G) {
  if (j < 0) throw std::invalid_argument("etabar_pow_apply: negative power");
  SuperFun r = G;
  if (j % 2 == 1) r = r.etabar();
  const int m = j / 2;
  for (int i = 0; i < m; ++i) r = -r.ddx();
  return r;
}

Density op_apply(const DOp& A, const Density& d) {
  if (d.weight != A.src())
    throw std::invalid_argument("op_apply: density weight " + d.weight.str() +
                                " does not match operator source " + A.src().str());
  SuperFun acc;
  for (const auto& [j, c] : A.terms()) acc += c * etabar_pow_apply(j, d.coeff);
  return Density{acc, A.dst()};
}

namespace {

// etabar composed on the left: etabar . (c .) = (etabar c) . + (-1)^{p(c)} c . etabar.
DOp etabar_left(const DOp& B) {
  DOp r(B.src(), B.dst());
  for (const auto& [j, c] : B.terms()) {
    r.add_term(j, c.etabar());
    r.add_term(j + 1, c.even_part() - c.odd_part());
  }
  return r;
}

DOp mult_left(const SuperFun& c, const DOp& B) {
  DOp r(B.src(), B.dst());
  for (const auto& [j, d] : B.terms()) r.add_term(j, c * d);
  return r;
}

}  // namespace

DOp op_compose(const DOp& A, const DOp& B) {
  if (A.src() != B.dst())
    throw std::invalid_argument("op_compose: source weight " + A.src().str() +
                                " does not match inner target " + B.dst().str());
  DOp r(B.src(), A.dst());
  DOp shifted = B;  // etabar^i composed with B, advanced lazily
  int shift = 0;
  for (const auto& [i, c] : A.terms()) {
    while (shift < i) {
      shifted = etabar_left(shifted);
      ++shift;
    }
    DOp piece = mult_left(c, shifted);
    for (const auto& [j, d] : piece.terms()) r.add_term(j, d);
  }
  return r;
}

DOp lie_operator(const SuperFun& F, const Rat& lam) {
  DOp r(lam, lam);
  r.add_term(2, -F);
  r.add_term(1, half() * F.eta());
  r.add_term(0, lam * F.ddx());
  return r;
}

DOp lie_op(const SuperFun& F, const DOp& A) {
  const Rat lam = A.src(), mu = A.dst();
  DOp r(lam, mu);
  for (Parity pf : {Parity::Even, Parity::Odd}) {
    const SuperFun Fp = F.part(pf);
    if (Fp.is_zero()) continue;
    const DOp left = op_compose(lie_operator(Fp, mu), A);
    r += left;
    for (Parity pa : {Parity::Even, Parity::Odd}) {
      const DOp Ap = A.part(pa);
      if (Ap.is_zero()) continue;
      const DOp right = op_compose(Ap, lie_operator(Fp, lam));
      const bool minus = !(pf == Parity::Odd && pa == Parity::Odd);
      r += minus ? -right : right;
    }
  }
  return r;
}

Rat OpMonomial::weight(const Rat& lam, const Rat& mu) const {
  Rat w = Rat(a) + (mu - lam) - Rat(j, 2);
  if (theta) w += half();
  return w;
}

DOp OpMonomial::to_dop(const Rat& lam, const Rat& mu, const Rat& coef) const {
  Poly p = Poly::monomial(static_cast<int>(a), coef);
  SuperFun c = theta ? SuperFun(Poly(), p) : SuperFun(p, Poly());
  return DOp::monomial(lam, mu, j, c);
}

std::string OpMonomial::str() const {
  std::string out;
  if (theta) out += "theta";
  if (a > 0) {
    if (!out.empty()) out += "*";
    out += (a == 1) ? "x" : "x^" + std::to_string(a);
  }
  if (j > 0) {
    if (!out.empty()) out += "*";
    out += (j == 1) ? "etabar" : "etabar^" + std::to_string(j);
  }
  return out.empty() ? "1" : out;
}

std::vector<std::pair<OpMonomial, Rat>> dop_monomials(const DOp& A) {
  std::vector<std::pair<OpMonomial, Rat>> out;
  for (const auto& [j, c] : A.terms()) {
    for (int a = 0; a <= c.ev().degree(); ++a)
      if (!c.ev().coeff(a).is_zero())
        out.push_back({OpMonomial{a, false, j}, c.ev().coeff(a)});
    for (int a = 0; a <= c.od().degree(); ++a)
      if (!c.od().coeff(a).is_zero())
        out.push_back({OpMonomial{a, true, j}, c.od().coeff(a)});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

std::optional<Rat> op_weight(const DOp& A) {
  auto ms = dop_monomials(A);
  if (ms.empty()) return std::nullopt;
  Rat w = ms.front().first.weight(A.src(), A.dst());
  for (const auto& [m, c] : ms)
    if (m.weight(A.src(), A.dst()) != w) return std::nullopt;
  return w;
}

OpBasisIndex enumerate_basis(const Rat& lam, const Rat& mu, const Rat& w, int max_order) {
  OpBasisIndex idx{w, max_order, {}};
  for (int j = 0; j <= max_order; ++j) {
    for (int eps = 0; eps <= 1; ++eps) {
      // weight = a + eps/2 - j/2 + (mu - lam)
      Rat a = w - (mu - lam) + Rat(j, 2) - Rat(eps, 2);
      if (!a.is_nonneg_integer()) continue;
      idx.elements.push_back(OpMonomial{a.to_long(), eps == 1, j});
    }
  }
  std::sort(idx.elements.begin(), idx.elements.end());
  return idx;
}

std::vector<OpMonomial> enumerate_monomials(const Rat& lam, const Rat& mu, const Rat& w,
                                            int max_order, Parity p) {
  std::vector<OpMonomial> out;
  for (const auto& m : enumerate_basis(lam, mu, w, max_order).elements)
    if (m.parity() == p) out.push_back(m);
  return out;
}

DForm to_dform(const DOp& A) {
  DForm f{A.src(), A.dst(), {}, {}};
  auto add = [](std::map<int, SuperFun>& m, int i, const SuperFun& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.try_emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  };
  const Rat minus_one(-1);
  for (const auto& [j, c] : A.terms()) {
    const int m = j / 2;
    const Rat sign = (m % 2 == 0) ? Rat(1) : minus_one;
    if (j % 2 == 0) {
      add(f.a, m, sign * c);
    } else {
      // c etabar^{2m+1} = (-1)^m (c dx^m dtheta - (c theta) dx^{m+1})
      add(f.b, m, sign * c);
      add(f.a, m + 1, -sign * (c * SuperFun::theta()));
    }
  }
  return f;
}

DOp from_dform(const DForm& f) {
  DOp r(f.src, f.dst);
  const Rat minus_one(-1);
  for (const auto& [i, c] : f.a) {
    const Rat sign = (i % 2 == 0) ? Rat(1) : minus_one;
    r.add_term(2 * i, sign * c);
  }
  for (const auto& [i, c] : f.b) {
    // c dx^i dtheta = (-1)^i (c etabar^{2i+1} - (c theta) etabar^{2i+2})
    const Rat sign = (i % 2 == 0) ? Rat(1) : minus_one;
    r.add_term(2 * i + 1, sign * c);
    r.add_term(2 * i + 2, -sign * (c * SuperFun::theta()));
  }
  return r;
}

std::string DForm::str() const {
  if (a.empty() && b.empty()) return "0";
  std::string out;
  auto append = [&out](const SuperFun& c, const std::string& op) {
    if (!out.empty()) out += " + ";
    const bool unit = (c == SuperFun(1));
    if (op.empty()) out += "(" + c.str() + ")";
    else if (unit) out += op;
    else out += "(" + c.str() + ") * " + op;
  };
  for (const auto& [i, c] : a) {
    std::string op;
    if (i == 1) op = "dx";
    else if (i > 1) op = "dx^" + std::to_string(i);
    append(c, op);
  }
  for (const auto& [i, c] : b) {
    std::string op;
    if (i == 1) op = "dx * dtheta";
    else if (i > 1) op = "dx^" + std::to_string(i) + " * dtheta";
    else op = "dtheta";
    append(c, op);
  }
  return out;
}

}  // namespace scoh
