#include "scoh/cohomology.hpp"

#include "scoh/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace scoh {

namespace {

Parity compose_parity(Parity a, Parity b) { return parity_of_int(parity_int(a) + parity_int(b)); }

using Index = std::map<OpMonomial, int>;

Index make_index(const std::vector<OpMonomial>& ms, int offset) {
  Index idx;
  for (const auto& m : ms) idx.emplace(m, offset++);
  return idx;
}

void expand_into(const DOp& v, const Index& idx, std::vector<Rat>& out) {
  for (const auto& [m, coef] : dop_monomials(v)) {
    auto it = idx.find(m);
    if (it == idx.end())
      throw std::logic_error("slice expansion: monomial " + m.str() + " outside index");
    out[static_cast<std::size_t>(it->second)] += coef;
  }
}

/// One (parity, weight) slice of the degree <= 1 complex at a fixed order cap.
struct SliceSystem {
  Rat lam, mu, w;
  Parity parity;
  int cap;
  std::vector<OpMonomial> c0;
  std::array<std::vector<OpMonomial>, kOspDim> c1;
  std::array<Index, kOspDim> c1_idx;
  std::array<std::vector<OpMonomial>, kC2Dim> c2;
  std::array<Index, kC2Dim> c2_idx;
  int dim_c0 = 0, dim_c1 = 0, dim_c2 = 0;
  RatMat m0, m1;

  SliceSystem(const Rat& lam_, const Rat& mu_, Parity parity_, const Rat& w_, int cap_)
      : lam(lam_), mu(mu_), w(w_), parity(parity_), cap(cap_) {
    const auto& basis = osp_basis();
    c0 = enumerate_monomials(lam, mu, w, cap, parity);
    dim_c0 = static_cast<int>(c0.size());
    int off = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      c1[i] = enumerate_monomials(lam, mu, w + basis[i].ad_weight, cap,
                                  compose_parity(parity, basis[i].parity));
      c1_idx[i] = make_index(c1[i], off);
      off += static_cast<int>(c1[i].size());
    }
    dim_c1 = off;
    off = 0;
    for (std::size_t s = 0; s < kC2Slots.size(); ++s) {
      const auto& bx = basis[static_cast<std::size_t>(kC2Slots[s].x)];
      const auto& by = basis[static_cast<std::size_t>(kC2Slots[s].y)];
      c2[s] = enumerate_monomials(lam, mu, w + bx.ad_weight + by.ad_weight, cap,
                                  compose_parity(parity, compose_parity(bx.parity, by.parity)));
      c2_idx[s] = make_index(c2[s], off);
      off += static_cast<int>(c2[s].size());
    }
    dim_c2 = off;

    m0 = RatMat(dim_c1, dim_c0);
    for (int col = 0; col < dim_c0; ++col) {
      const Cochain1 dc = delta0(c0[static_cast<std::size_t>(col)].to_dop(lam, mu));
      std::vector<Rat> vec(static_cast<std::size_t>(dim_c1), Rat(0));
      for (std::size_t i = 0; i < basis.size(); ++i) expand_into(dc.vals[i], c1_idx[i], vec);
      for (int r = 0; r < dim_c1; ++r) m0.at(r, col) = vec[static_cast<std::size_t>(r)];
    }

    m1 = RatMat(dim_c2, dim_c1);
    int col = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (const auto& m : c1[i]) {
        Cochain1 e = Cochain1::zero(lam, mu, parity);
        e.vals[i] = m.to_dop(lam, mu);
        const Cochain2 dc = delta1(e);
        std::vector<Rat> vec(static_cast<std::size_t>(dim_c2), Rat(0));
        for (std::size_t s = 0; s < kC2Slots.size(); ++s) expand_into(dc.vals[s], c2_idx[s], vec);
        for (int r = 0; r < dim_c2; ++r) m1.at(r, col) = vec[static_cast<std::size_t>(r)];
        ++col;
      }
    }
  }

  std::vector<Rat> expand_cochain(const Cochain1& c) const {
    std::vector<Rat> vec(static_cast<std::size_t>(dim_c1), Rat(0));
    for (std::size_t i = 0; i < c.vals.size(); ++i) expand_into(c.vals[i], c1_idx[i], vec);
    return vec;
  }

  Cochain1 cochain_from_vector(const std::vector<Rat>& v) const {
    Cochain1 c = Cochain1::zero(lam, mu, parity);
    for (std::size_t i = 0; i < c1.size(); ++i)
      for (const auto& m : c1[i]) {
        const Rat& coef = v[static_cast<std::size_t>(c1_idx[i].at(m))];
        if (!coef.is_zero()) c.vals[i] += m.to_dop(lam, mu, coef);
      }
    return c;
  }

  SliceReport report() const {
    SliceReport s;
    s.parity = parity;
    s.w = w;
    s.dim_c0 = dim_c0;
    s.dim_c1 = dim_c1;
    s.dim_c2 = dim_c2;
    s.rank_d0 = mat_rank(m0);
    s.rank_d1 = mat_rank(m1);
    s.ker_d1 = s.dim_c1 - s.rank_d1;
    s.h1 = s.ker_d1 - s.rank_d0;
    return s;
  }
};

std::vector<Rat> window_weights(const Rat& lam, const Rat& mu, const Rat& window) {
  std::vector<Rat> ws;
  const Rat delta = mu - lam;
  // Candidate cochain weights form the lattice (mu - lam) + (1/2)Z.
  const long lo = -ceil_to_long(Rat(2) * (window + delta));
  const long hi = ceil_to_long(Rat(2) * (window - delta));
  for (long m = lo; m <= hi; ++m) {
    const Rat w = delta + Rat(m, 2);
    if (w < -window || window < w) continue;
    ws.push_back(w);
  }
  bool has_zero = false;
  for (const auto& w : ws) has_zero = has_zero || w.is_zero();
  if (!has_zero) ws.push_back(Rat(0));
  std::sort(ws.begin(), ws.end());
  return ws;
}

std::vector<Cochain1> weight_zero_basis(const SliceSystem& sys) {
  const auto kernel = kernel_basis(sys.m1);
  const int base_rank = mat_rank(sys.m0);
  std::vector<std::vector<Rat>> chosen;
  for (const auto& kv : kernel) {
    auto trial = chosen;
    trial.push_back(kv);
    if (rank_with_columns(sys.m0, trial) > base_rank + static_cast<int>(chosen.size()))
      chosen = std::move(trial);
  }
  std::vector<Cochain1> out;
  for (const auto& v : chosen) out.push_back(sys.cochain_from_vector(v));
  return out;
}

}  // namespace

std::string H1Report::line() const {
  std::string s = "lambda=" + lam.str() + " mu=" + mu.str();
  s += " dim_even=" + std::to_string(dim_even);
  s += " dim_odd=" + std::to_string(dim_odd);
  s += " N=" + std::to_string(order_cap);
  s += " W=" + window.str();
  s += std::string(" stabilized=") + (stabilized ? "yes" : "no");
  return s;
}

int default_order_cap(const Rat& lam, const Rat& mu) {
  const long base = ceil_to_long(Rat(2) * (mu - lam)) + 6;
  return static_cast<int>(std::max<long>(base, 8));
}

SliceReport compute_slice(const Rat& lam, const Rat& mu, Parity parity, const Rat& w,
                          int order_cap) {
  return SliceSystem(lam, mu, parity, w, order_cap).report();
}

H1Report h1_dims(const Rat& lam, const Rat& mu, std::optional<int> order_cap,
                 const Rat& window) {
  const int cap = order_cap.value_or(default_order_cap(lam, mu));
  H1Report rep;
  rep.lam = lam;
  rep.mu = mu;
  rep.order_cap = cap;
  rep.window = window;
  for (const Parity p : {Parity::Even, Parity::Odd}) {
    for (const Rat& w : window_weights(lam, mu, window)) {
      SliceSystem sys(lam, mu, p, w, cap);
      const SliceReport s = sys.report();
      if (!w.is_zero() && s.h1 != 0)
        throw std::logic_error("nonzero-weight slice not exact at lam=" + lam.str() +
                               " mu=" + mu.str() + " w=" + w.str());
      rep.slices.push_back(s);
      if (w.is_zero()) {
        (p == Parity::Even ? rep.dim_even : rep.dim_odd) = s.h1;
        auto basis = weight_zero_basis(sys);
        (p == Parity::Even ? rep.even_basis : rep.odd_basis) = std::move(basis);
      }
    }
  }
  const SliceReport ev2 = compute_slice(lam, mu, Parity::Even, Rat(0), cap + 2);
  const SliceReport od2 = compute_slice(lam, mu, Parity::Odd, Rat(0), cap + 2);
  rep.stabilized = (ev2.h1 == rep.dim_even && od2.h1 == rep.dim_odd);
  return rep;
}

std::optional<DOp> solve_coboundary(const Cochain1& c, int order_cap) {
  const auto& basis = osp_basis();
  // Split the cochain by (cochain parity, cochain weight).
  std::map<std::pair<int, Rat>, Cochain1> parts;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const auto& [m, coef] : dop_monomials(c.vals[i])) {
      if (m.j > order_cap) return std::nullopt;
      const Rat w = m.weight(c.lam, c.mu) - basis[i].ad_weight;
      const Parity p = compose_parity(m.parity(), basis[i].parity);
      auto [it, inserted] =
          parts.try_emplace({parity_int(p), w}, Cochain1::zero(c.lam, c.mu, p));
      it->second.vals[i] += m.to_dop(c.lam, c.mu, coef);
    }
  }
  DOp total(c.lam, c.mu);
  for (const auto& [key, part] : parts) {
    SliceSystem sys(c.lam, c.mu, parity_of_int(key.first), key.second, order_cap);
    const auto sol = solve(sys.m0, sys.expand_cochain(part));
    if (!sol) return std::nullopt;
    for (std::size_t t = 0; t < sys.c0.size(); ++t)
      if (!(*sol)[t].is_zero()) total += sys.c0[t].to_dop(c.lam, c.mu, (*sol)[t]);
  }
  return total;
}

long rank_mod_coboundaries(const std::vector<Cochain1>& cs, int order_cap) {
  if (cs.empty()) return 0;
  const Cochain1& front = cs.front();
  SliceSystem sys(front.lam, front.mu, front.parity, Rat(0), order_cap);
  std::vector<std::vector<Rat>> cols;
  for (const auto& c : cs) {
    if (c.lam != front.lam || c.mu != front.mu || c.parity != front.parity)
      throw std::invalid_argument("rank_mod_coboundaries: mixed cochain types");
    cols.push_back(sys.expand_cochain(c));
  }
  return rank_with_columns(sys.m0, cols) - mat_rank(sys.m0);
}

namespace {

Rat sign_pow(int m) { return (m % 2 == 0) ? Rat(1) : Rat(-1); }

}  // namespace

OpBlocks op_blocks(const DOp& A) {
  OpBlocks b{A.src(), A.dst(),
             ClassOp(A.src(), A.dst()),
             ClassOp(A.src() + half(), A.dst() + half()),
             ClassOp(A.src(), A.dst() + half()),
             ClassOp(A.src() + half(), A.dst())};
  for (const auto& [j, c] : A.terms()) {
    const Poly& u = c.ev();
    const Poly& v = c.od();
    if (j % 2 == 0) {
      const int m = j / 2;
      b.keep.add_term(m, sign_pow(m) * u);
      b.shift.add_term(m, sign_pow(m) * u);
      b.up.add_term(m, sign_pow(m) * v);
    } else {
      const int m = (j - 1) / 2;
      b.down.add_term(m, sign_pow(m) * u);
      b.up.add_term(m + 1, sign_pow(m + 1) * u);
      b.shift.add_term(m, sign_pow(m) * v);
    }
  }
  return b;
}

DOp op_from_blocks(const OpBlocks& b) {
  DOp A(b.lam, b.mu);
  // Even half from (keep, shift): u_{2m} = (-1)^m keep_m, v_{2m+1} = (-1)^m shift_m - u_{2m}.
  {
    const int top = std::max(b.keep.order(), b.shift.order());
    for (int m = 0; top >= 0 && m <= top; ++m) {
      const Poly u = sign_pow(m) * b.keep.coeff(m);
      const Poly v = sign_pow(m) * b.shift.coeff(m) - u;
      if (!u.is_zero()) A.add_term(2 * m, SuperFun(u, Poly()));
      if (!v.is_zero()) A.add_term(2 * m + 1, SuperFun(Poly(), v));
    }
  }
  // Odd half from (up, down): u_{2m+1} = (-1)^m down_m, v_{2m} = (-1)^m up_m - u_{2m-1}.
  // One step past the block orders flushes the trailing u term.
  {
    const int top = std::max(b.up.order(), b.down.order());
    Poly prev_u;
    for (int m = 0; top >= 0 && m <= top + 1; ++m) {
      const Poly u = sign_pow(m) * b.down.coeff(m);
      const Poly v = sign_pow(m) * b.up.coeff(m) - prev_u;
      if (!v.is_zero()) A.add_term(2 * m, SuperFun(Poly(), v));
      if (!u.is_zero()) A.add_term(2 * m + 1, SuperFun(u, Poly()));
      prev_u = u;
    }
  }
  return A;
}

ComponentSplit project_components(const Cochain1& c) {
  ComponentSplit s;
  s.lam = c.lam;
  s.mu = c.mu;
  s.parity = c.parity;
  s.sl2_keep = ClassCochain1::zero(c.lam, c.mu);
  s.sl2_shift = ClassCochain1::zero(c.lam + half(), c.mu + half());
  s.sl2_up = ClassCochain1::zero(c.lam, c.mu + half());
  s.sl2_down = ClassCochain1::zero(c.lam + half(), c.mu);
  for (std::size_t i = 0; i < 3; ++i) {
    const OpBlocks b = op_blocks(c.vals[i]);
    s.sl2_keep.vals[i] = b.keep;
    s.sl2_shift.vals[i] = b.shift;
    s.sl2_up.vals[i] = b.up;
    s.sl2_down.vals[i] = b.down;
  }
  for (std::size_t h = 0; h < 2; ++h) {
    const OpBlocks b = op_blocks(c.vals[3 + h]);
    s.h_keep[h] = b.keep;
    s.h_shift[h] = b.shift;
    s.h_up[h] = b.up;
    s.h_down[h] = b.down;
  }
  return s;
}

Cochain1 reassemble(const ComponentSplit& s) {
  Cochain1 c = Cochain1::zero(s.lam, s.mu, s.parity);
  for (std::size_t i = 0; i < 3; ++i) {
    OpBlocks b{s.lam, s.mu, s.sl2_keep.vals[i], s.sl2_shift.vals[i], s.sl2_up.vals[i],
               s.sl2_down.vals[i]};
    c.vals[i] = op_from_blocks(b);
  }
  for (std::size_t h = 0; h < 2; ++h) {
    OpBlocks b{s.lam, s.mu, s.h_keep[h], s.h_shift[h], s.h_up[h], s.h_down[h]};
    c.vals[3 + h] = op_from_blocks(b);
  }
  return c;
}

}  // namespace scoh
