#include "scoh/classify.hpp"

#include "scoh/linalg.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace scoh {

Poly BilinearOp::apply(const Poly& h, const Poly& f) const {
  Poly acc;
  for (const auto& [rs, b] : beta) acc += b * (h.derivative(rs.first) * f.derivative(rs.second));
  return acc;
}

std::string BilinearOp::str() const {
  if (beta.empty()) return "0";
  std::string out;
  for (const auto& [rs, b] : beta) {
    if (!out.empty()) out += " + ";
    std::string term = rs.first == 0 ? "h" : "h'";
    term += "*";
    term += rs.second == 0 ? "f" : "f^(" + std::to_string(rs.second) + ")";
    if (b == Rat(1)) out += term;
    else out += "(" + b.str() + ")*" + term;
  }
  return out;
}

namespace {

// g u' + nu g' u
Poly scalar_lie(const Poly& g, const Rat& nu, const Poly& u) {
  return g * u.derivative() + nu * (g.derivative() * u);
}

int auto_cap(const Rat& lam, const Rat& mu) {
  const Rat k = mu - lam + half();
  if (k.is_nonneg_integer()) return static_cast<int>(std::max<long>(8, k.to_long() + 2));
  return 8;
}

}  // namespace

BilinearReport invariant_bilinear(const Rat& lam, const Rat& mu, std::optional<int> cap_opt) {
  const int cap = cap_opt.value_or(auto_cap(lam, mu));
  const int ncols = 2 * (cap + 1);
  const auto col_of = [cap](int r, int s) { return r * (cap + 1) + s; };

  const std::array<Poly, 3> gs = {Poly(1), Poly::x(), Poly::x() * Poly::x()};
  const std::array<Poly, 3> hs = gs;

  // Rows: x-coefficients of the invariance residual for each (g, h, x^n).
  std::vector<std::vector<Rat>> rows;
  for (const Poly& g : gs)
    for (const Poly& h : hs)
      for (int n = 0; n <= cap + 2; ++n) {
        const Poly f = Poly::monomial(n, Rat(1));
        std::vector<Poly> contrib(static_cast<std::size_t>(ncols));
        int maxdeg = -1;
        for (int r = 0; r <= 1; ++r)
          for (int s = 0; s <= cap; ++s) {
            const Poly hr = h.derivative(r);
            const Poly fs = f.derivative(s);
            Poly res = scalar_lie(g, mu, hr * fs);
            res -= scalar_lie(g, Rat(-1, 2), h).derivative(r) * fs;
            res -= hr * scalar_lie(g, lam, f).derivative(s);
            contrib[static_cast<std::size_t>(col_of(r, s))] = res;
            maxdeg = std::max(maxdeg, res.degree());
          }
        for (int d = 0; d <= maxdeg; ++d) {
          std::vector<Rat> row(static_cast<std::size_t>(ncols), Rat(0));
          bool nonzero = false;
          for (int c = 0; c < ncols; ++c) {
            row[static_cast<std::size_t>(c)] = contrib[static_cast<std::size_t>(c)].coeff(d);
            nonzero = nonzero || !row[static_cast<std::size_t>(c)].is_zero();
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }

  RatMat m(static_cast<int>(rows.size()), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < ncols; ++c) m.at(static_cast<int>(r), c) = rows[r][static_cast<std::size_t>(c)];

  BilinearReport rep;
  rep.lam = lam;
  rep.mu = mu;
  const Rat kr = mu - lam + half();
  if (kr.is_nonneg_integer()) rep.k = kr.to_long();
  for (const auto& v : kernel_basis(m)) {
    BilinearOp op;
    op.lam = lam;
    op.mu = mu;
    for (int r = 0; r <= 1; ++r)
      for (int s = 0; s <= cap; ++s) {
        const Rat& b = v[static_cast<std::size_t>(col_of(r, s))];
        if (!b.is_zero()) op.beta[{r, s}] = b;
      }
    rep.basis.push_back(std::move(op));
  }
  rep.dim = static_cast<long>(rep.basis.size());
  return rep;
}

BilinearOp closed_form_invariant(const Rat& lam, long k) {
  if (k < 0) throw std::invalid_argument("closed_form_invariant: negative order");
  BilinearOp op;
  op.lam = lam;
  op.mu = lam + Rat(k) - half();
  op.beta[{0, static_cast<int>(k)}] = Rat(1);
  if (k >= 1) {
    const Rat c = Rat(k) * (Rat(2) * lam + Rat(k) - Rat(1));
    if (!c.is_zero()) op.beta[{1, static_cast<int>(k - 1)}] = c;
  }
  return op;
}

bool proportional(const BilinearOp& a, const BilinearOp& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  // Scale so the first key of a maps to the matching coefficient of b.
  const auto& [k0, a0] = *a.beta.begin();
  auto it = b.beta.find(k0);
  if (it == b.beta.end()) return false;
  const Rat ratio = it->second / a0;
  std::map<std::pair<int, int>, Rat> scaled;
  for (const auto& [k, v] : a.beta) scaled[k] = v * ratio;
  return scaled == b.beta;
}

}  // namespace scoh
