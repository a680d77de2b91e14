#include "doctest.h"
#include "scoh/parse.hpp"
#include "scoh/superfun.hpp"
#include "test_util.hpp"

#include <random>
#include <stdexcept>

using namespace scoh;

namespace {
const SuperFun kX = SuperFun::x();
const SuperFun kTheta = SuperFun::theta();
SuperFun x_pow(int n) { return SuperFun(Poly::monomial(n), Poly()); }
}  // namespace

TEST_CASE("superfunction ring basics") {
  CHECK(SuperFun(Poly::x(), Poly()) + SuperFun(Poly(), Poly(1)) == kX + kTheta);
  CHECK((x_pow(2) + kTheta) + (-x_pow(2)) == kTheta);
  CHECK((kTheta * kTheta).is_zero());
  CHECK(kX * kTheta == kTheta * kX);
  const SuperFun one_plus_theta = SuperFun(1) + kTheta;
  CHECK(one_plus_theta * one_plus_theta == SuperFun(1) + Rat(2) * kTheta);
}

TEST_CASE("parity of homogeneous elements") {
  CHECK(x_pow(2).parity() == Parity::Even);
  CHECK((kTheta * kX).parity() == Parity::Odd);
  CHECK(SuperFun().parity() == Parity::Even);
  CHECK_THROWS_AS((kX + kTheta).parity(), std::domain_error);
  CHECK((kX + kTheta).even_part() == kX);
  CHECK((kX + kTheta).odd_part() == kTheta);
  CHECK(!(kX + kTheta).is_homogeneous());
}

TEST_CASE("coordinate derivatives") {
  CHECK((x_pow(2) + kTheta * kX).ddx() == Rat(2) * kX + kTheta);
  CHECK((kTheta * x_pow(3)).dtheta() == x_pow(3));
  CHECK(x_pow(3).dtheta().is_zero());
}

TEST_CASE("odd derivations on monomials") {
  CHECK(x_pow(2).etabar() == Rat(-2) * (kX * kTheta));
  CHECK(kTheta.etabar() == SuperFun(1));
  CHECK(SuperFun(1).eta().is_zero());
  CHECK(kX.eta() == kTheta);
  CHECK(kX.etabar() == -kTheta);
}

TEST_CASE("squares of the odd derivations give the x derivative") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const SuperFun F = testutil::random_superfun(rng, 8);
    CHECK(F.etabar().etabar() == -F.ddx());
    CHECK(F.eta().eta() == F.ddx());
  }
}

TEST_CASE("etabar satisfies the graded Leibniz rule") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const Parity p = t % 2 == 0 ? Parity::Even : Parity::Odd;
    const SuperFun F = testutil::random_homogeneous(rng, 6, p);
    const SuperFun G = testutil::random_superfun(rng, 6);
    const Rat sign = p == Parity::Even ? Rat(1) : Rat(-1);
    CHECK((F * G).etabar() == F.etabar() * G + sign * (F * G.etabar()));
  }
}

TEST_CASE("eta and etabar agree up to the parity sign") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const SuperFun even = testutil::random_homogeneous(rng, 6, Parity::Even);
    const SuperFun odd = testutil::random_homogeneous(rng, 6, Parity::Odd);
    CHECK(even.eta() == -even.etabar());
    CHECK(odd.eta() == odd.etabar());
  }
}

TEST_CASE("multiplication is supercommutative") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 50; ++t) {
    for (const Parity pf : {Parity::Even, Parity::Odd}) {
      for (const Parity pg : {Parity::Even, Parity::Odd}) {
        const SuperFun F = testutil::random_homogeneous(rng, 5, pf);
        const SuperFun G = testutil::random_homogeneous(rng, 5, pg);
        const Rat sign =
            (pf == Parity::Odd && pg == Parity::Odd) ? Rat(-1) : Rat(1);
        CHECK(F * G == sign * (G * F));
      }
    }
  }
}

TEST_CASE("printing and parsing round-trip") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const SuperFun F = testutil::random_superfun(rng, 6);
    CHECK(parse_superfun(F.str()) == F);
  }
  CHECK(parse_superfun("x^2 + theta*(2*x)") == x_pow(2) + Rat(2) * kTheta * kX);
  CHECK(parse_superfun("0").is_zero());
  CHECK(parse_superfun("theta") == kTheta);
  CHECK(parse_superfun("-1/2*x") == Rat(-1, 2) * kX);
  CHECK(parse_superfun("theta*x - x*theta").is_zero());
}

TEST_CASE("parse errors carry position and token") {
  try {
    parse_superfun("x + * 2");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.pos() == 4);
    CHECK(e.token() == "*");
  }
  CHECK_THROWS_AS(parse_superfun(""), ParseError);
  CHECK_THROWS_AS(parse_superfun("x^"), ParseError);
  CHECK_THROWS_AS(parse_superfun("(x"), ParseError);
}

TEST_CASE("max_deg_x covers both components") {
  CHECK((x_pow(3) + kTheta * kX).max_deg_x() == 3);
  CHECK((kTheta * x_pow(4)).max_deg_x() == 4);
  CHECK(SuperFun().max_deg_x() == Poly::kNegInf);
}
