#pragma once

#include "scoh/contact.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace scoh {

/// Differential operator between weighted density modules, kept in normal form
/// sum_j c_j(x, theta) * etabar^j with coefficients on the left.
/// Canonical: no zero coefficients stored.
class DOp {
public:
  DOp() = default;
  DOp(Rat src, Rat dst) : src_(std::move(src)), dst_(std::move(dst)) {}

  static DOp mult(const SuperFun& c, Rat src, Rat dst);
  static DOp monomial(Rat src, Rat dst, int j, const SuperFun& coef);
  static DOp identity(const Rat& lam) { return mult(SuperFun(1), lam, lam); }

  const Rat& src() const { return src_; }
  const Rat& dst() const { return dst_; }
  const std::map<int, SuperFun>& terms() const { return terms_; }
  SuperFun coeff(int j) const;

  /// Poly::kNegInf for the zero operator.
  int order() const { return terms_.empty() ? Poly::kNegInf : terms_.rbegin()->first; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int j, const SuperFun& c);

  DOp operator-() const;
  DOp& operator+=(const DOp& o);
  DOp& operator-=(const DOp& o);
  friend DOp operator+(DOp a, const DOp& b) { return a += b; }
  friend DOp operator-(DOp a, const DOp& b) { return a -= b; }
  friend DOp operator*(const Rat& s, const DOp& A);

  bool is_parity_homogeneous() const;
  /// Parity of a homogeneous operator; zero counts as even. Throws on mixed input.
  Parity parity() const;
  DOp part(Parity p) const;
  DOp even_part() const { return part(Parity::Even); }
  DOp odd_part() const { return part(Parity::Odd); }

  bool operator==(const DOp&) const = default;

  std::string str() const;

private:
  Rat src_, dst_;
  std::map<int, SuperFun> terms_;
};

/// etabar^j applied to a function (etabar^2 = -d/dx).
SuperFun etabar_pow_apply(int j, const SuperFun& G);

/// Requires d.weight == A.src(); returns a density of weight A.dst().
Density op_apply(const DOp& A, const Density& d);

/// A after B; requires A.src() == B.dst().
DOp op_compose(const DOp& A, const DOp& B);

/// The density action of X_F as an order-two operator:
/// -F etabar^2 + (1/2) eta(F) etabar + lam * F'.
DOp lie_operator(const SuperFun& F, const Rat& lam);

/// Module action of X_F on operators:
/// L^mu_F after A - (-1)^{p(A) p(F)} A after L^lam_F.
DOp lie_op(const SuperFun& F, const DOp& A);
inline DOp lie_op(const ContactField& X, const DOp& A) { return lie_op(X.gen, A); }

/// Monomial x^a etabar^j or theta x^a etabar^j.
struct OpMonomial {
  long a = 0;
  bool theta = false;
  int j = 0;

  Rat weight(const Rat& lam, const Rat& mu) const;
  Parity parity() const { return parity_of_int(j + (theta ? 1 : 0)); }
  DOp to_dop(const Rat& lam, const Rat& mu, const Rat& coef = Rat(1)) const;
  std::string str() const;

  friend auto operator<=>(const OpMonomial& l, const OpMonomial& r) {
    return std::tie(l.j, l.a, l.theta) <=> std::tie(r.j, r.a, r.theta);
  }
  friend bool operator==(const OpMonomial&, const OpMonomial&) = default;
};

/// Exact monomial expansion of A.
std::vector<std::pair<OpMonomial, Rat>> dop_monomials(const DOp& A);

/// Common grading eigenvalue of all monomials of A, if A is weight homogeneous.
std::optional<Rat> op_weight(const DOp& A);

struct OpBasisIndex {
  Rat weight;
  int max_order = 0;
  std::vector<OpMonomial> elements;  // sorted by (j, a, theta)
};

/// All monomials of the given grading eigenvalue with order <= max_order.
OpBasisIndex enumerate_basis(const Rat& lam, const Rat& mu, const Rat& w, int max_order);

/// Same, restricted to one parity.
std::vector<OpMonomial> enumerate_monomials(const Rat& lam, const Rat& mu, const Rat& w,
                                            int max_order, Parity p);

/// Presentation over (dx, dx*dtheta): sum a_i dx^i + sum b_i dx^i dtheta.
struct DForm {
  Rat src, dst;
  std::map<int, SuperFun> a;
  std::map<int, SuperFun> b;
  bool operator==(const DForm&) const = default;
  std::string str() const;
};

DForm to_dform(const DOp& A);
DOp from_dform(const DForm& f);

}  // namespace scoh
