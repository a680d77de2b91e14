#include "scoh/classical.hpp"

#include <algorithm>
#include <stdexcept>

namespace scoh {

ClassOp ClassOp::mult(const Poly& c, Rat src, Rat dst) {
  ClassOp r(std::move(src), std::move(dst));
  r.add_term(0, c);
  return r;
}

ClassOp ClassOp::monomial(Rat src, Rat dst, int i, const Poly& coef) {
  ClassOp r(std::move(src), std::move(dst));
  r.add_term(i, coef);
  return r;
}

Poly ClassOp::coeff(int i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? Poly() : it->second;
}

void ClassOp::add_term(int i, const Poly& c) {
  if (i < 0) throw std::invalid_argument("ClassOp::add_term: negative power");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ClassOp ClassOp::operator-() const {
  ClassOp r(src_, dst_);
  for (const auto& [i, c] : terms_) r.terms_.emplace(i, -c);
  return r;
}

ClassOp& ClassOp::operator+=(const ClassOp& o) {
  if (src_ != o.src_ || dst_ != o.dst_)
    throw std::invalid_argument("ClassOp: weight mismatch in sum");
  for (const auto& [i, c] : o.terms_) add_term(i, c);
  return *this;
}

ClassOp& ClassOp::operator-=(const ClassOp& o) {
  if (src_ != o.src_ || dst_ != o.dst_)
    throw std::invalid_argument("ClassOp: weight mismatch in difference");
  for (const auto& [i, c] : o.terms_) add_term(i, -c);
  return *this;
}

ClassOp operator*(const Rat& s, const ClassOp& A) {
  ClassOp r(A.src(), A.dst());
  if (s.is_zero()) return r;
  for (const auto& [i, c] : A.terms()) r.add_term(i, s * c);
  return r;
}

std::string ClassOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string op;
    if (i == 1) op = "dx";
    else if (i > 1) op = "dx^" + std::to_string(i);
    const bool unit = (c == Poly(1));
    if (op.empty()) out += "(" + c.str() + ")";
    else if (unit) out += op;
    else out += "(" + c.str() + ") * " + op;
  }
  return out;
}

Poly class_apply(const ClassOp& A, const Poly& f) {
  Poly acc;
  for (const auto& [i, c] : A.terms()) acc += c * f.derivative(i);
  return acc;
}

namespace {

// d/dx composed on the left: d . (c .) = (c') . + c . d
ClassOp d_left(const ClassOp& B) {
  ClassOp r(B.src(), B.dst());
  for (const auto& [i, c] : B.terms()) {
    r.add_term(i, c.derivative());
    r.add_term(i + 1, c);
  }
  return r;
}

}  // namespace

ClassOp class_compose(const ClassOp& A, const ClassOp& B) {
  if (A.src() != B.dst())
    throw std::invalid_argument("class_compose: source weight " + A.src().str() +
                                " does not match inner target " + B.dst().str());
  ClassOp r(B.src(), A.dst());
  ClassOp shifted = B;
  int shift = 0;
  for (const auto& [i, c] : A.terms()) {
    while (shift < i) {
      shifted = d_left(shifted);
      ++shift;
    }
    for (const auto& [j, d] : shifted.terms()) r.add_term(j, c * d);
  }
  return r;
}

ClassOp class_lie_operator(const Poly& g, const Rat& lam) {
  ClassOp r(lam, lam);
  r.add_term(1, g);
  r.add_term(0, lam * g.derivative());
  return r;
}

ClassOp class_lie_op(const Poly& g, const ClassOp& A) {
  return class_compose(class_lie_operator(g, A.dst()), A) -
         class_compose(A, class_lie_operator(g, A.src()));
}

const std::array<Sl2Elem, kSl2Dim>& sl2_basis() {
  static const std::array<Sl2Elem, kSl2Dim> basis = {{
      {"L_1", Poly(1), Rat(-1)},
      {"L_x", Poly::x(), Rat(0)},
      {"L_x2", Poly::x() * Poly::x(), Rat(1)},
  }};
  return basis;
}

const std::array<Rat, kSl2Dim>& sl2_bracket(int i, int j) {
  static const auto table = [] {
    std::array<std::array<std::array<Rat, kSl2Dim>, kSl2Dim>, kSl2Dim> t;
    const auto& b = sl2_basis();
    for (std::size_t i = 0; i < kSl2Dim; ++i)
      for (std::size_t j = 0; j < kSl2Dim; ++j) {
        const Poly br = b[i].gen * b[j].gen.derivative() - b[i].gen.derivative() * b[j].gen;
        if (br.degree() > 2) throw std::logic_error("sl2_bracket: outside span");
        t[i][j] = {br.coeff(0), br.coeff(1), br.coeff(2)};
      }
    return t;
  }();
  return table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

ClassOp ClassMonomial::to_op(const Rat& lam, const Rat& mu, const Rat& coef) const {
  return ClassOp::monomial(lam, mu, i, Poly::monomial(static_cast<int>(a), coef));
}

std::vector<ClassMonomial> class_enumerate(const Rat& lam, const Rat& mu, const Rat& w,
                                           int max_order) {
  std::vector<ClassMonomial> out;
  for (int i = 0; i <= max_order; ++i) {
    const Rat a = w - (mu - lam) + Rat(i);
    if (!a.is_nonneg_integer()) continue;
    out.push_back(ClassMonomial{a.to_long(), i});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<ClassMonomial, Rat>> class_monomials(const ClassOp& A) {
  std::vector<std::pair<ClassMonomial, Rat>> out;
  for (const auto& [i, c] : A.terms())
    for (int a = 0; a <= c.degree(); ++a)
      if (!c.coeff(a).is_zero()) out.push_back({ClassMonomial{a, i}, c.coeff(a)});
  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

ClassCochain1 ClassCochain1::zero(const Rat& lam, const Rat& mu) {
  ClassCochain1 c{lam, mu, {}};
  for (auto& v : c.vals) v = ClassOp(lam, mu);
  return c;
}

bool ClassCochain1::is_zero() const {
  return vals[0].is_zero() && vals[1].is_zero() && vals[2].is_zero();
}

bool ClassCochain2::is_zero() const {
  return vals[0].is_zero() && vals[1].is_zero() && vals[2].is_zero();
}

ClassCochain1 class_delta0(const ClassOp& A) {
  ClassCochain1 c = ClassCochain1::zero(A.src(), A.dst());
  const auto& basis = sl2_basis();
  for (std::size_t i = 0; i < kSl2Dim; ++i) c.vals[i] = class_lie_op(basis[i].gen, A);
  return c;
}

ClassCochain2 class_delta1(const ClassCochain1& c) {
  const auto& basis = sl2_basis();
  ClassCochain2 d{c.lam, c.mu, {}};
  for (std::size_t s = 0; s < kClassC2Slots.size(); ++s) {
    const auto [gi, hi] = kClassC2Slots[s];
    ClassOp val(c.lam, c.mu);
    const auto& br = sl2_bracket(gi, hi);
    for (std::size_t r = 0; r < kSl2Dim; ++r)
      if (!br[r].is_zero()) val += br[r] * c.vals[r];
    val -= class_lie_op(basis[static_cast<std::size_t>(gi)].gen,
                        c.vals[static_cast<std::size_t>(hi)]);
    val += class_lie_op(basis[static_cast<std::size_t>(hi)].gen,
                        c.vals[static_cast<std::size_t>(gi)]);
    d.vals[s] = val;
  }
  return d;
}

namespace {

using Index = std::map<ClassMonomial, int>;

Index make_index(const std::vector<ClassMonomial>& ms, int offset) {
  Index idx;
  for (const auto& m : ms) idx.emplace(m, offset++);
  return idx;
}

void expand_into(const ClassOp& v, const Index& idx, std::vector<Rat>& out) {
  for (const auto& [m, coef] : class_monomials(v)) {
    auto it = idx.find(m);
    if (it == idx.end())
      throw std::logic_error("classical slice expansion: monomial outside index (order cap too small?)");
    out[static_cast<std::size_t>(it->second)] += coef;
  }
}

/// Weight-w slice of the classical complex at fixed order cap.
struct ClassSliceSystem {
  Rat lam, mu, w;
  int cap;
  std::vector<ClassMonomial> c0;
  std::array<std::vector<ClassMonomial>, kSl2Dim> c1;
  std::array<Index, kSl2Dim> c1_idx;
  int dim_c0 = 0, dim_c1 = 0, dim_c2 = 0;
  std::array<std::vector<ClassMonomial>, 3> c2;
  std::array<Index, 3> c2_idx;
  RatMat m0, m1;

  ClassSliceSystem(const Rat& lam_, const Rat& mu_, const Rat& w_, int cap_)
      : lam(lam_), mu(mu_), w(w_), cap(cap_) {
    const auto& basis = sl2_basis();
    c0 = class_enumerate(lam, mu, w, cap);
    dim_c0 = static_cast<int>(c0.size());
    int off = 0;
    for (std::size_t k = 0; k < kSl2Dim; ++k) {
      c1[k] = class_enumerate(lam, mu, w + basis[k].ad_weight, cap);
      c1_idx[k] = make_index(c1[k], off);
      off += static_cast<int>(c1[k].size());
    }
    dim_c1 = off;
    off = 0;
    for (std::size_t s = 0; s < kClassC2Slots.size(); ++s) {
      const auto [gi, hi] = kClassC2Slots[s];
      c2[s] = class_enumerate(
          lam, mu,
          w + basis[static_cast<std::size_t>(gi)].ad_weight +
              basis[static_cast<std::size_t>(hi)].ad_weight,
          cap);
      c2_idx[s] = make_index(c2[s], off);
      off += static_cast<int>(c2[s].size());
    }
    dim_c2 = off;

    m0 = RatMat(dim_c1, dim_c0);
    for (int col = 0; col < dim_c0; ++col) {
      const ClassCochain1 dc = class_delta0(c0[static_cast<std::size_t>(col)].to_op(lam, mu));
      std::vector<Rat> vec(static_cast<std::size_t>(dim_c1), Rat(0));
      for (std::size_t k = 0; k < kSl2Dim; ++k) expand_into(dc.vals[k], c1_idx[k], vec);
      for (int r = 0; r < dim_c1; ++r) m0.at(r, col) = vec[static_cast<std::size_t>(r)];
    }

    m1 = RatMat(dim_c2, dim_c1);
    int col = 0;
    for (std::size_t k = 0; k < kSl2Dim; ++k) {
      for (const auto& m : c1[k]) {
        ClassCochain1 e = ClassCochain1::zero(lam, mu);
        e.vals[k] = m.to_op(lam, mu);
        const ClassCochain2 dc = class_delta1(e);
        std::vector<Rat> vec(static_cast<std::size_t>(dim_c2), Rat(0));
        for (std::size_t s = 0; s < kClassC2Slots.size(); ++s)
          expand_into(dc.vals[s], c2_idx[s], vec);
        for (int r = 0; r < dim_c2; ++r) m1.at(r, col) = vec[static_cast<std::size_t>(r)];
        ++col;
      }
    }
  }

  std::vector<Rat> expand_cochain(const ClassCochain1& c) const {
    std::vector<Rat> vec(static_cast<std::size_t>(dim_c1), Rat(0));
    for (std::size_t k = 0; k < kSl2Dim; ++k) expand_into(c.vals[k], c1_idx[k], vec);
    return vec;
  }

  ClassCochain1 cochain_from_vector(const std::vector<Rat>& v) const {
    ClassCochain1 c = ClassCochain1::zero(lam, mu);
    for (std::size_t k = 0; k < kSl2Dim; ++k)
      for (std::size_t t = 0; t < c1[k].size(); ++t) {
        const Rat& coef = v[static_cast<std::size_t>(c1_idx[k].at(c1[k][t]))];
        if (!coef.is_zero()) c.vals[k] += c1[k][t].to_op(lam, mu, coef);
      }
    return c;
  }
};

}  // namespace

int class_default_order_cap(const Rat& lam, const Rat& mu) {
  const long base = ceil_to_long(Rat(2) * (mu - lam)) + 6;
  return static_cast<int>(std::max<long>(base, 8));
}

ClassSlice class_compute_slice(const Rat& lam, const Rat& mu, const Rat& w, int order_cap) {
  ClassSliceSystem sys(lam, mu, w, order_cap);
  ClassSlice s;
  s.w = w;
  s.dim_c0 = sys.dim_c0;
  s.dim_c1 = sys.dim_c1;
  s.dim_c2 = sys.dim_c2;
  s.rank_d0 = mat_rank(sys.m0);
  s.rank_d1 = mat_rank(sys.m1);
  s.ker_d1 = s.dim_c1 - s.rank_d1;
  s.h1 = s.ker_d1 - s.rank_d0;
  return s;
}

namespace {

std::vector<Rat> class_window_weights(const Rat& lam, const Rat& mu, const Rat& window) {
  std::vector<Rat> ws;
  const Rat delta = mu - lam;
  // Candidate cochain weights form the lattice (mu - lam) + Z.
  const long lo = -ceil_to_long(window + delta);
  const long hi = ceil_to_long(window - delta);
  for (long m = lo; m <= hi; ++m) {
    const Rat w = delta + Rat(m);
    if (w < -window || window < w) continue;
    ws.push_back(w);
  }
  bool has_zero = false;
  for (const auto& w : ws) has_zero = has_zero || w.is_zero();
  if (!has_zero) ws.push_back(Rat(0));
  std::sort(ws.begin(), ws.end());
  return ws;
}

}  // namespace

ClassH1Report class_h1_dims(const Rat& lam, const Rat& mu, std::optional<int> order_cap,
                            const Rat& window) {
  const int cap = order_cap.value_or(class_default_order_cap(lam, mu));
  ClassH1Report rep;
  rep.lam = lam;
  rep.mu = mu;
  rep.order_cap = cap;
  rep.window = window;
  for (const Rat& w : class_window_weights(lam, mu, window)) {
    const ClassSlice s = class_compute_slice(lam, mu, w, cap);
    if (!w.is_zero() && s.h1 != 0)
      throw std::logic_error("classical nonzero-weight slice not exact at lam=" + lam.str() +
                             " mu=" + mu.str() + " w=" + w.str());
    rep.slices.push_back(s);
    if (w.is_zero()) rep.dim = s.h1;
  }
  const ClassSlice again = class_compute_slice(lam, mu, Rat(0), cap + 2);
  rep.stabilized = (again.h1 == rep.dim);

  // Representatives at weight 0.
  ClassSliceSystem sys(lam, mu, Rat(0), cap);
  const auto kernel = kernel_basis(sys.m1);
  const int base_rank = mat_rank(sys.m0);
  std::vector<std::vector<Rat>> chosen;
  for (const auto& kv : kernel) {
    auto trial = chosen;
    trial.push_back(kv);
    if (rank_with_columns(sys.m0, trial) > base_rank + static_cast<int>(chosen.size()))
      chosen = std::move(trial);
  }
  for (const auto& v : chosen) rep.cocycle_basis.push_back(sys.cochain_from_vector(v));
  return rep;
}

std::optional<ClassOp> class_solve_coboundary(const ClassCochain1& c, int order_cap) {
  const auto& basis = sl2_basis();
  // Split the cochain into weight-homogeneous parts.
  std::map<Rat, ClassCochain1> parts;
  for (std::size_t k = 0; k < kSl2Dim; ++k) {
    for (const auto& [m, coef] : class_monomials(c.vals[k])) {
      if (m.i > order_cap) return std::nullopt;
      const Rat w = m.weight(c.lam, c.mu) - basis[k].ad_weight;
      auto [it, inserted] = parts.try_emplace(w, ClassCochain1::zero(c.lam, c.mu));
      it->second.vals[k] += m.to_op(c.lam, c.mu, coef);
    }
  }
  ClassOp total(c.lam, c.mu);
  for (const auto& [w, part] : parts) {
    ClassSliceSystem sys(c.lam, c.mu, w, order_cap);
    const auto sol = solve(sys.m0, sys.expand_cochain(part));
    if (!sol) return std::nullopt;
    for (std::size_t t = 0; t < sys.c0.size(); ++t)
      if (!(*sol)[t].is_zero()) total += sys.c0[t].to_op(c.lam, c.mu, (*sol)[t]);
  }
  return total;
}

long class_rank_mod_coboundaries(const std::vector<ClassCochain1>& cs, int order_cap) {
  if (cs.empty()) return 0;
  ClassSliceSystem sys(cs.front().lam, cs.front().mu, Rat(0), order_cap);
  std::vector<std::vector<Rat>> cols;
  for (const auto& c : cs) {
    if (c.lam != cs.front().lam || c.mu != cs.front().mu)
      throw std::invalid_argument("class_rank_mod_coboundaries: mixed weights");
    cols.push_back(sys.expand_cochain(c));
  }
  return rank_with_columns(sys.m0, cols) - mat_rank(sys.m0);
}

}  // namespace scoh
