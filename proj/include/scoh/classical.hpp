#pragma once

#include "scoh/linalg.hpp"
#include "scoh/poly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace scoh {

/// Classical differential operator sum a_i(x) d^i between scalar density
/// modules on the circle. Canonical: no zero coefficients stored.
class ClassOp {
public:
  ClassOp() = default;
  ClassOp(Rat src, Rat dst) : src_(std::move(src)), dst_(std::move(dst)) {}

  static ClassOp mult(const Poly& c, Rat src, Rat dst);
  static ClassOp monomial(Rat src, Rat dst, int i, const Poly& coef);
  static ClassOp identity(const Rat& lam) { return mult(Poly(1), lam, lam); }

  const Rat& src() const { return src_; }
  const Rat& dst() const { return dst_; }
  const std::map<int, Poly>& terms() const { return terms_; }
  Poly coeff(int i) const;
  int order() const { return terms_.empty() ? Poly::kNegInf : terms_.rbegin()->first; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int i, const Poly& c);

  ClassOp operator-() const;
  ClassOp& operator+=(const ClassOp& o);
  ClassOp& operator-=(const ClassOp& o);
  friend ClassOp operator+(ClassOp a, const ClassOp& b) { return a += b; }
  friend ClassOp operator-(ClassOp a, const ClassOp& b) { return a -= b; }
  friend ClassOp operator*(const Rat& s, const ClassOp& A);

  bool operator==(const ClassOp&) const = default;
  std::string str() const;

private:
  Rat src_, dst_;
  std::map<int, Poly> terms_;
};

Poly class_apply(const ClassOp& A, const Poly& f);
ClassOp class_compose(const ClassOp& A, const ClassOp& B);

/// g f' + lam g' f as an order-one operator.
ClassOp class_lie_operator(const Poly& g, const Rat& lam);

/// Module action on operators: L^mu_g after A - A after L^lam_g.
ClassOp class_lie_op(const Poly& g, const ClassOp& A);

inline constexpr int kSl2Dim = 3;

struct Sl2Elem {
  const char* name;
  Poly gen;
  Rat ad_weight;
};

/// Basis d/dx, x d/dx, x^2 d/dx with ad weights -1, 0, +1.
const std::array<Sl2Elem, kSl2Dim>& sl2_basis();

/// [g_i, g_j] = g_i g_j' - g_i' g_j decomposed over the basis.
const std::array<Rat, kSl2Dim>& sl2_bracket(int i, int j);

struct ClassMonomial {
  long a = 0;
  int i = 0;
  Rat weight(const Rat& lam, const Rat& mu) const { return Rat(a) - Rat(i) + (mu - lam); }
  ClassOp to_op(const Rat& lam, const Rat& mu, const Rat& coef = Rat(1)) const;
  friend auto operator<=>(const ClassMonomial&, const ClassMonomial&) = default;
};

std::vector<ClassMonomial> class_enumerate(const Rat& lam, const Rat& mu, const Rat& w,
                                           int max_order);
std::vector<std::pair<ClassMonomial, Rat>> class_monomials(const ClassOp& A);

struct ClassCochain1 {
  Rat lam, mu;
  std::array<ClassOp, kSl2Dim> vals;
  static ClassCochain1 zero(const Rat& lam, const Rat& mu);
  bool is_zero() const;
  bool operator==(const ClassCochain1&) const = default;
};

inline constexpr std::array<std::pair<int, int>, 3> kClassC2Slots = {{{0, 1}, {0, 2}, {1, 2}}};

struct ClassCochain2 {
  Rat lam, mu;
  std::array<ClassOp, 3> vals;
  bool is_zero() const;
};

ClassCochain1 class_delta0(const ClassOp& A);
ClassCochain2 class_delta1(const ClassCochain1& c);

struct ClassSlice {
  Rat w;
  long dim_c0 = 0, dim_c1 = 0, dim_c2 = 0;
  long rank_d0 = 0, rank_d1 = 0, ker_d1 = 0;
  long h1 = 0;
};

struct ClassH1Report {
  Rat lam, mu;
  long dim = 0;
  int order_cap = 0;
  Rat window;
  bool stabilized = false;
  std::vector<ClassSlice> slices;
  std::vector<ClassCochain1> cocycle_basis;
};

int class_default_order_cap(const Rat& lam, const Rat& mu);
ClassSlice class_compute_slice(const Rat& lam, const Rat& mu, const Rat& w, int order_cap);
ClassH1Report class_h1_dims(const Rat& lam, const Rat& mu, std::optional<int> order_cap = {},
                            const Rat& window = Rat(3));
std::optional<ClassOp> class_solve_coboundary(const ClassCochain1& c, int order_cap);
long class_rank_mod_coboundaries(const std::vector<ClassCochain1>& cs, int order_cap);

}  // namespace scoh
