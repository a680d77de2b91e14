#include "scoh/cocycles.hpp"

#include <algorithm>
#include <stdexcept>

namespace scoh {

namespace {

SuperFun eta_pow(SuperFun f, int n) {
  for (int t = 0; t < n; ++t) f = f.eta();
  return f;
}

void require_parity_law(const Cochain1& c, const char* what) {
  const auto& basis = osp_basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (c.vals[i].is_zero()) continue;
    const Parity want =
        parity_of_int(parity_int(c.parity) + parity_int(basis[i].parity));
    if (c.vals[i].parity() != want)
      throw std::logic_error(std::string(what) + ": parity law violated on " + basis[i].name);
  }
}

std::pair<Rat, Rat> odd_weights(long k) {
  if (k < 1) throw std::invalid_argument("odd cocycle family needs k >= 1");
  return {Rat(1 - k, 2), Rat(k, 2)};
}

}  // namespace

Cochain1 diag_cocycle(const Rat& lam) {
  Cochain1 c = Cochain1::zero(lam, lam, Parity::Even);
  const auto& basis = osp_basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const SuperFun d = basis[i].gen.ddx();
    if (!d.is_zero()) c.vals[i] = DOp::mult(d, lam, lam);
  }
  require_parity_law(c, "diag_cocycle");
  return c;
}

Cochain1 odd_cocycle(long k) {
  const auto [lam, mu] = odd_weights(k);
  Cochain1 c = Cochain1::zero(lam, mu, Parity::Odd);
  const auto& basis = osp_basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const SuperFun coef = basis[i].gen.etabar().etabar();
    if (!coef.is_zero())
      c.vals[i] = DOp::monomial(lam, mu, static_cast<int>(2 * k - 1), coef);
  }
  require_parity_law(c, "odd_cocycle");
  return c;
}

Cochain1 odd_cocycle_tilde(long k) {
  const auto [lam, mu] = odd_weights(k);
  Cochain1 c = Cochain1::zero(lam, mu, Parity::Odd);
  const auto& basis = osp_basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    DOp val(lam, mu);
    if (k >= 2) {
      const SuperFun c4 = eta_pow(basis[i].gen, 4);
      if (!c4.is_zero()) val.add_term(static_cast<int>(2 * k - 3), Rat(k - 1) * c4);
    }
    const SuperFun c3 = eta_pow(basis[i].gen, 3);
    if (!c3.is_zero()) val.add_term(static_cast<int>(2 * k - 2), c3);
    c.vals[i] = val;
  }
  require_parity_law(c, "odd_cocycle_tilde");
  return c;
}

ClassCochain1 class_diag_cocycle(const Rat& lam) {
  ClassCochain1 c = ClassCochain1::zero(lam, lam);
  const auto& basis = sl2_basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Poly d = basis[i].gen.derivative();
    if (!d.is_zero()) c.vals[i] = ClassOp::mult(d, lam, lam);
  }
  return c;
}

ClassCochain1 class_res_cocycle(long k) {
  if (k < 1) throw std::invalid_argument("classical resonant cocycle needs k >= 1");
  const Rat lam(1 - k, 2), mu(1 + k, 2);
  ClassCochain1 c = ClassCochain1::zero(lam, mu);
  const auto& basis = sl2_basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Poly d = basis[i].gen.derivative();
    if (!d.is_zero()) c.vals[i] = ClassOp::monomial(lam, mu, static_cast<int>(k), d);
  }
  return c;
}

ClassCochain1 class_res_cocycle_tilde(long k) {
  if (k < 1) throw std::invalid_argument("classical resonant cocycle needs k >= 1");
  const Rat lam(1 - k, 2), mu(1 + k, 2);
  ClassCochain1 c = ClassCochain1::zero(lam, mu);
  const auto& basis = sl2_basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Poly d2 = basis[i].gen.derivative(2);
    if (!d2.is_zero()) c.vals[i] = ClassOp::monomial(lam, mu, static_cast<int>(k - 1), d2);
  }
  return c;
}

ResonanceInfo resonance_type(const Rat& lam, const Rat& mu) {
  if (lam == mu) return {ResonanceType::Diagonal, 0};
  const Rat k = mu - lam + half();
  if (k.is_nonneg_integer()) {
    const long kk = k.to_long();
    if (kk >= 1 && lam == Rat(1 - kk, 2)) return {ResonanceType::OddResonant, kk};
  }
  return {ResonanceType::Generic, 0};
}

std::string resonance_label(const Rat& lam, const Rat& mu) {
  const ResonanceInfo info = resonance_type(lam, mu);
  switch (info.type) {
    case ResonanceType::Diagonal: return "diagonal";
    case ResonanceType::OddResonant: return "odd-resonant k=" + std::to_string(info.k);
    case ResonanceType::Generic: return "generic";
  }
  return "generic";
}

namespace {

std::string slice_table(const H1Report& rep) {
  std::string s;
  for (const auto& sl : rep.slices) {
    s += (sl.parity == Parity::Even ? "even" : "odd");
    s += " w=" + sl.w.str();
    s += " dims=(" + std::to_string(sl.dim_c0) + "," + std::to_string(sl.dim_c1) + "," +
         std::to_string(sl.dim_c2) + ")";
    s += " rank_d0=" + std::to_string(sl.rank_d0);
    s += " ker_d1=" + std::to_string(sl.ker_d1);
    s += " h1=" + std::to_string(sl.h1) + "; ";
  }
  return s;
}

}  // namespace

TheoremVerdict verify_theorem(const Rat& lam, const Rat& mu, std::optional<int> order_cap) {
  TheoremVerdict v;
  v.lam = lam;
  v.mu = mu;
  const ResonanceInfo info = resonance_type(lam, mu);
  v.expected_even = (info.type == ResonanceType::Diagonal) ? 1 : 0;
  v.expected_odd = (info.type == ResonanceType::OddResonant) ? 2 : 0;
  v.report = h1_dims(lam, mu, order_cap);
  const int cap = v.report.order_cap;

  auto add = [&v](std::string name, bool ok, std::string detail) {
    v.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  add("stabilized", v.report.stabilized,
      "order caps " + std::to_string(cap) + " and " + std::to_string(cap + 2) + " agree");
  add("dim_even", v.report.dim_even == v.expected_even,
      "computed " + std::to_string(v.report.dim_even) + " expected " +
          std::to_string(v.expected_even));
  add("dim_odd", v.report.dim_odd == v.expected_odd,
      "computed " + std::to_string(v.report.dim_odd) + " expected " +
          std::to_string(v.expected_odd));

  bool exact = true;
  for (const auto& sl : v.report.slices) exact = exact && (sl.w.is_zero() || sl.h1 == 0);
  add("nonzero-weight exactness", exact, exact ? "all nonzero-weight slices exact"
                                               : slice_table(v.report));

  if (info.type == ResonanceType::Diagonal) {
    const Cochain1 c = diag_cocycle(lam);
    add("diagonal cocycle closed", delta1(c).is_zero(), "delta1 of the multiplication cocycle");
    const bool nontrivial = !solve_coboundary(c, cap).has_value();
    add("diagonal cocycle nontrivial", nontrivial, "no preimage of order <= " + std::to_string(cap));
    const long rank = rank_mod_coboundaries({c}, cap);
    add("diagonal cocycle spans", rank == 1 && v.report.dim_even == 1,
        "rank mod coboundaries = " + std::to_string(rank));
  } else if (info.type == ResonanceType::OddResonant) {
    const Cochain1 c = odd_cocycle(info.k);
    const Cochain1 ct = odd_cocycle_tilde(info.k);
    add("odd generators closed", delta1(c).is_zero() && delta1(ct).is_zero(),
        "delta1 of both generators at k=" + std::to_string(info.k));
    const bool nt1 = !solve_coboundary(c, cap).has_value();
    const bool nt2 = !solve_coboundary(ct, cap).has_value();
    add("odd generators nontrivial", nt1 && nt2,
        "no preimages of order <= " + std::to_string(cap));
    const long rank = rank_mod_coboundaries({c, ct}, cap);
    add("odd generators span", rank == 2 && v.report.dim_odd == 2,
        "rank mod coboundaries = " + std::to_string(rank));
  }

  v.ok = true;
  for (const auto& ch : v.checks) v.ok = v.ok && ch.ok;
  return v;
}

std::vector<CatalogueEntry> cocycle_catalogue(const Rat& lam, long kmax) {
  std::vector<CatalogueEntry> out;
  {
    const Cochain1 c = diag_cocycle(lam);
    int order = 0;
    for (const auto& v : c.vals) order = std::max(order, v.order());
    out.push_back({"diagonal", lam, lam, Parity::Even, order});
  }
  {
    const ClassCochain1 c = class_diag_cocycle(lam);
    int order = 0;
    for (const auto& v : c.vals) order = std::max(order, v.order());
    out.push_back({"classical-diagonal", lam, lam, Parity::Even, order});
  }
  for (long k = 1; k <= kmax; ++k) {
    const auto [l, m] = odd_weights(k);
    out.push_back({"odd-resonant k=" + std::to_string(k), l, m, Parity::Odd,
                   static_cast<int>(2 * k - 1)});
    out.push_back({"odd-resonant-tilde k=" + std::to_string(k), l, m, Parity::Odd,
                   static_cast<int>(2 * k - 2)});
    out.push_back({"classical-resonant k=" + std::to_string(k), Rat(1 - k, 2), Rat(1 + k, 2),
                   Parity::Even, static_cast<int>(k)});
    out.push_back({"classical-resonant-tilde k=" + std::to_string(k), Rat(1 - k, 2),
                   Rat(1 + k, 2), Parity::Even, static_cast<int>(k - 1)});
  }
  return out;
}

}  // namespace scoh
