#include "doctest.h"
#include "scoh/classical.hpp"
#include "scoh/cocycles.hpp"
#include "test_util.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using namespace scoh;

namespace {
ClassOp dk(int k, const Rat& lam, const Rat& mu) {
  return ClassOp::monomial(lam, mu, k, Poly(1));
}
}  // namespace

TEST_CASE("scalar operators apply and compose") {
  const Rat lam(0);
  const Poly x = Poly::x();
  for (int k = 0; k <= 4; ++k)
    CHECK(class_apply(dk(k, lam, lam), Poly::monomial(5)) == Poly::monomial(5).derivative(k));

  // d after (x .) = 1 + (x .) d
  ClassOp expected = ClassOp::identity(lam);
  expected.add_term(1, x);
  CHECK(class_compose(dk(1, lam, lam), ClassOp::mult(x, lam, lam)) == expected);

  std::mt19937_64 rng(51);
  for (int t = 0; t < 25; ++t) {
    const ClassOp A = testutil::random_class_op(rng, Rat(1), Rat(0), 4, 3);
    const ClassOp B = testutil::random_class_op(rng, Rat(1, 2), Rat(1), 4, 3);
    const Poly f = testutil::random_poly(rng, 5);
    CHECK(class_apply(class_compose(A, B), f) == class_apply(A, class_apply(B, f)));
  }
}

TEST_CASE("scalar density action") {
  const Poly g = Poly::monomial(2);
  const Rat lam(1, 3);
  const ClassOp L = class_lie_operator(g, lam);
  CHECK(L.coeff(1) == g);
  CHECK(L.coeff(0) == lam * g.derivative());
  CHECK(L.order() == 1);
  CHECK(class_apply(L, Poly::x()) ==
        g * Poly(1) + lam * g.derivative() * Poly::x());
}

TEST_CASE("projective basis brackets") {
  const auto& basis = sl2_basis();
  CHECK(basis[0].name == std::string("L_1"));
  CHECK(basis[1].name == std::string("L_x"));
  CHECK(basis[2].name == std::string("L_x2"));
  CHECK(basis[0].ad_weight == Rat(-1));
  CHECK(basis[1].ad_weight == Rat(0));
  CHECK(basis[2].ad_weight == Rat(1));

  CHECK(sl2_bracket(0, 1) == std::array<Rat, kSl2Dim>{Rat(1), Rat(0), Rat(0)});
  CHECK(sl2_bracket(0, 2) == std::array<Rat, kSl2Dim>{Rat(0), Rat(2), Rat(0)});
  CHECK(sl2_bracket(1, 2) == std::array<Rat, kSl2Dim>{Rat(0), Rat(0), Rat(1)});
  for (int i = 0; i < kSl2Dim; ++i) {
    for (int j = 0; j < kSl2Dim; ++j) {
      const auto& gi = basis[static_cast<std::size_t>(i)].gen;
      const auto& gj = basis[static_cast<std::size_t>(j)].gen;
      Poly recomposed;
      for (int m = 0; m < kSl2Dim; ++m)
        recomposed += sl2_bracket(i, j)[static_cast<std::size_t>(m)] *
                      basis[static_cast<std::size_t>(m)].gen;
      CHECK(recomposed == gi * gj.derivative() - gi.derivative() * gj);
    }
  }
}

TEST_CASE("scalar module action is a representation") {
  std::mt19937_64 rng(52);
  const Rat lam(1, 4), mu(-2, 3);
  for (int t = 0; t < 25; ++t) {
    const Poly g = testutil::random_poly(rng, 2);
    const Poly h = testutil::random_poly(rng, 2);
    const ClassOp A = testutil::random_class_op(rng, lam, mu, 4, 3);
    const Poly br = g * h.derivative() - g.derivative() * h;
    CHECK(class_lie_op(br, A) ==
          class_lie_op(g, class_lie_op(h, A)) - class_lie_op(h, class_lie_op(g, A)));
    for (const auto& elem : sl2_basis()) {
      if (A.is_zero()) continue;
      CHECK(class_lie_op(elem.gen, A).order() <= A.order());
    }
  }
}

TEST_CASE("scalar monomial enumeration") {
  const auto ms = class_enumerate(Rat(0), Rat(1), Rat(0), 3);
  REQUIRE(ms.size() == 3);
  CHECK(ms[0] == ClassMonomial{0, 1});
  CHECK(ms[1] == ClassMonomial{1, 2});
  CHECK(ms[2] == ClassMonomial{2, 3});
  CHECK(class_enumerate(Rat(0), Rat(1, 2), Rat(0), 6).empty());
  for (const auto& m : ms) CHECK(m.weight(Rat(0), Rat(1)) == Rat(0));
}

TEST_CASE("scalar coboundary of a coboundary vanishes") {
  std::mt19937_64 rng(53);
  const std::vector<std::pair<Rat, Rat>> points = {
      {Rat(0), Rat(0)}, {Rat(1, 3), Rat(1, 3)}, {Rat(0), Rat(1)},
      {Rat(-1, 2), Rat(3, 2)}, {Rat(1, 4), Rat(-2)}};
  for (const auto& [lam, mu] : points) {
    for (int t = 0; t < 20; ++t) {
      const ClassOp A = testutil::random_class_op(rng, lam, mu, 4, 3);
      CHECK(class_delta1(class_delta0(A)).is_zero());
    }
  }
}

TEST_CASE("scalar cohomology dimensions follow the three case table") {
  CHECK(class_h1_dims(Rat(1, 3), Rat(1, 3)).dim == 1);
  CHECK(class_h1_dims(Rat(-1, 2), Rat(-1, 2)).dim == 1);
  CHECK(class_h1_dims(Rat(0), Rat(1)).dim == 2);        // k = 1
  CHECK(class_h1_dims(Rat(-1, 2), Rat(3, 2)).dim == 2); // k = 2
  CHECK(class_h1_dims(Rat(-1), Rat(2)).dim == 2);       // k = 3
  CHECK(class_h1_dims(Rat(1, 4), Rat(3, 4)).dim == 0);
  CHECK(class_h1_dims(Rat(1), Rat(3)).dim == 0);
  CHECK(class_h1_dims(Rat(0), Rat(2)).dim == 0);
  CHECK(class_h1_dims(Rat(-1), Rat(0)).dim == 0);
  const ClassH1Report rep = class_h1_dims(Rat(0), Rat(1));
  CHECK(rep.stabilized);
  CHECK(rep.cocycle_basis.size() == 2);
  for (const auto& c : rep.cocycle_basis) CHECK(class_delta1(c).is_zero());
}

TEST_CASE("scalar cocycle families are closed and nontrivial") {
  for (long k = 1; k <= 3; ++k) {
    const ClassCochain1 c = class_res_cocycle(k);
    const ClassCochain1 ct = class_res_cocycle_tilde(k);
    CHECK(c.lam == Rat(1 - k, 2));
    CHECK(c.mu == Rat(1 + k, 2));
    CHECK(class_delta1(c).is_zero());
    CHECK(class_delta1(ct).is_zero());
    const int cap = static_cast<int>(k) + 6;
    CHECK(!class_solve_coboundary(c, cap));
    CHECK(!class_solve_coboundary(ct, cap));
    CHECK(class_rank_mod_coboundaries({c, ct}, cap) == 2);
  }
  const ClassCochain1 diag = class_diag_cocycle(Rat(1, 3));
  CHECK(class_delta1(diag).is_zero());
  CHECK(!class_solve_coboundary(diag, 12));
  CHECK_THROWS_AS(class_res_cocycle(0), std::invalid_argument);
  CHECK_THROWS_AS(class_res_cocycle_tilde(0), std::invalid_argument);
}

TEST_CASE("scalar coboundary solver inverts delta0") {
  std::mt19937_64 rng(54);
  const Rat lam(2, 5), mu(2, 5);
  for (int t = 0; t < 10; ++t) {
    const ClassOp A = testutil::random_class_op(rng, lam, mu, 3, 2);
    const ClassCochain1 c = class_delta0(A);
    const auto found = class_solve_coboundary(c, 6);
    REQUIRE(found.has_value());
    CHECK(class_delta0(*found) == c);
  }
  CHECK(class_solve_coboundary(ClassCochain1::zero(lam, mu), 4).has_value());
}

TEST_CASE("scalar cocycle values match their closed forms") {
  const ClassCochain1 c1 = class_res_cocycle(1);
  CHECK(c1.vals[1] == dk(1, Rat(0), Rat(1)));                  // g = x
  CHECK(c1.vals[0].is_zero());                                 // g = 1
  CHECK(c1.vals[2] == ClassOp::monomial(Rat(0), Rat(1), 1, Poly::monomial(1, Rat(2))));
  const ClassCochain1 t2 = class_res_cocycle_tilde(2);
  CHECK(t2.vals[2] == ClassOp::monomial(Rat(-1, 2), Rat(3, 2), 1, Poly(2)));
  const ClassCochain1 d = class_diag_cocycle(Rat(1, 3));
  CHECK(d.vals[1] == ClassOp::identity(Rat(1, 3)));
  CHECK(d.vals[0].is_zero());
}
