#include "doctest.h"
#include "scoh/poly.hpp"
#include "scoh/rat.hpp"
#include "test_util.hpp"

#include <random>
#include <stdexcept>

using namespace scoh;

TEST_CASE("rational parsing accepts integers and fractions only") {
  CHECK(Rat::parse("5") == Rat(5));
  CHECK(Rat::parse("-7/2") == Rat(-7, 2));
  CHECK(Rat::parse("+3/9") == Rat(1, 3));
  CHECK(Rat::parse("4/6") == Rat(2, 3));
  CHECK(!Rat::parse(""));
  CHECK(!Rat::parse("1.5"));
  CHECK(!Rat::parse("1/0"));
  CHECK(!Rat::parse(" 1"));
  CHECK(!Rat::parse("1/-2"));
  CHECK(!Rat::parse("2/"));
  CHECK(!Rat::parse("x"));
}

TEST_CASE("rational arithmetic stays canonical") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(1, 2) / Rat(1, 3) == Rat(3, 2));
  CHECK(Rat(3, 6) == Rat(1, 2));
  CHECK(-Rat(1, 2) == Rat(-1, 2));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(1, 3));
  CHECK(Rat(0).is_zero());
  CHECK(Rat(-4, 2).is_integer());
  CHECK(!Rat(-4, 2).is_nonneg_integer());
  CHECK(Rat(6, 3).is_nonneg_integer());
  CHECK(Rat(-1, 2).sign() == -1);
  CHECK(Rat(5, 2).str() == "5/2");
  CHECK(Rat(-3).str() == "-3");
}

TEST_CASE("to_long requires a small integer") {
  CHECK(Rat(7).to_long() == 7);
  CHECK(Rat(-14, 2).to_long() == -7);
  CHECK_THROWS_AS(Rat(1, 2).to_long(), std::domain_error);
}

TEST_CASE("ceil_to_long rounds toward positive infinity") {
  CHECK(ceil_to_long(Rat(5, 2)) == 3);
  CHECK(ceil_to_long(Rat(-5, 2)) == -2);
  CHECK(ceil_to_long(Rat(3)) == 3);
  CHECK(ceil_to_long(Rat(0)) == 0);
  CHECK(ceil_to_long(Rat(-1, 3)) == 0);
}

TEST_CASE("polynomial canonical form drops trailing zeros") {
  CHECK(Poly::from_coeffs({Rat(1), Rat(0), Rat(0)}).degree() == 0);
  CHECK(Poly().degree() == Poly::kNegInf);
  CHECK(Poly().is_zero());
  CHECK(Poly::monomial(3, Rat(2)).coeff(3) == Rat(2));
  CHECK(Poly::monomial(3).coeff(1) == Rat(0));
  CHECK((Poly::x() - Poly::x()).is_zero());
}

TEST_CASE("polynomial ring identities") {
  const Poly x = Poly::x();
  CHECK((x + Poly(1)) * (x - Poly(1)) == Poly::monomial(2) - Poly(1));
  CHECK(x.shifted(2) == Poly::monomial(3));
  CHECK(Rat(3) * x == Poly::monomial(1, Rat(3)));

  std::mt19937_64 rng(2024);
  for (int t = 0; t < 50; ++t) {
    const Poly a = testutil::random_poly(rng, 5);
    const Poly b = testutil::random_poly(rng, 5);
    const Poly c = testutil::random_poly(rng, 5);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    const Rat x0 = testutil::random_rat(rng);
    CHECK((a * b).eval(x0) == a.eval(x0) * b.eval(x0));
  }
}

TEST_CASE("polynomial derivative") {
  const Poly p = Poly::monomial(3) + Poly::monomial(1, Rat(1, 2));
  CHECK(p.derivative() == Poly::monomial(2, Rat(3)) + Poly(Rat(1, 2)));
  CHECK(p.derivative(2) == Poly::monomial(1, Rat(6)));
  CHECK(p.derivative(0) == p);
  CHECK(p.derivative(5).is_zero());

  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const Poly a = testutil::random_poly(rng, 6);
    const Poly b = testutil::random_poly(rng, 6);
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
  }
}

TEST_CASE("polynomial printing") {
  CHECK(Poly().str() == "0");
  CHECK((Poly::monomial(2, Rat(-3)) + Poly(Rat(1, 2))).str() == "-3*x^2 + 1/2");
  CHECK(Poly::x().str() == "x");
  CHECK(Poly::monomial(1, Rat(-1)).str() == "-x");
}
