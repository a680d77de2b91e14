#include "doctest.h"
#include "scoh/cocycles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

using namespace scoh;

namespace {
const SuperFun kTheta = SuperFun::theta();
SuperFun x_mon(int n, Rat c = Rat(1)) { return SuperFun(Poly::monomial(n, std::move(c)), Poly()); }
}  // namespace

TEST_CASE("diagonal cocycle multiplies by the generator derivative") {
  const Cochain1 c = diag_cocycle(Rat(1, 3));
  CHECK(c.parity == Parity::Even);
  CHECK(c.lam == Rat(1, 3));
  CHECK(c.mu == Rat(1, 3));
  CHECK(c.vals[0].is_zero());
  CHECK(c.vals[1] == DOp::identity(Rat(1, 3)));
  CHECK(c.vals[2] == DOp::mult(x_mon(1, Rat(2)), Rat(1, 3), Rat(1, 3)));
  CHECK(c.vals[3].is_zero());
  CHECK(c.vals[4] == DOp::mult(kTheta, Rat(1, 3), Rat(1, 3)));
  CHECK(delta1(c).is_zero());
}

TEST_CASE("first odd generator values") {
  const Cochain1 c = odd_cocycle(1);
  CHECK(c.lam == Rat(0));
  CHECK(c.mu == Rat(1, 2));
  CHECK(c.parity == Parity::Odd);
  CHECK(c.vals[0].is_zero());
  CHECK(c.vals[1] == DOp::monomial(Rat(0), Rat(1, 2), 1, SuperFun(-1)));
  CHECK(c.vals[2] == DOp::monomial(Rat(0), Rat(1, 2), 1, x_mon(1, Rat(-2))));
  CHECK(c.vals[3].is_zero());
  CHECK(c.vals[4] == DOp::monomial(Rat(0), Rat(1, 2), 1, -kTheta));
}

TEST_CASE("first companion generator values") {
  const Cochain1 t = odd_cocycle_tilde(1);
  CHECK(t.lam == Rat(0));
  CHECK(t.mu == Rat(1, 2));
  CHECK(t.vals[0].is_zero());
  CHECK(t.vals[1].is_zero());
  CHECK(t.vals[2] == DOp::mult(Rat(2) * kTheta, Rat(0), Rat(1, 2)));
  CHECK(t.vals[3].is_zero());
  CHECK(t.vals[4] == DOp::mult(SuperFun(1), Rat(0), Rat(1, 2)));
}

TEST_CASE("second companion generator keeps both terms") {
  const Cochain1 t = odd_cocycle_tilde(2);
  CHECK(t.lam == Rat(-1, 2));
  CHECK(t.mu == Rat(1));
  DOp expected(Rat(-1, 2), Rat(1));
  expected.add_term(1, SuperFun(2));            // (k-1) eta^4(x^2) etabar
  expected.add_term(2, Rat(2) * kTheta);        // eta^3(x^2) etabar^2
  CHECK(t.vals[2] == expected);
  CHECK(t.vals[4] == DOp::monomial(Rat(-1, 2), Rat(1), 2, SuperFun(1)));
}

TEST_CASE("generator families are closed under delta1") {
  for (long k = 1; k <= 3; ++k) {
    CHECK(delta1(odd_cocycle(k)).is_zero());
    CHECK(delta1(odd_cocycle_tilde(k)).is_zero());
    CHECK(odd_cocycle(k).lam == Rat(1 - k, 2));
    CHECK(odd_cocycle(k).mu == Rat(k, 2));
  }
}

TEST_CASE("generator families are not coboundaries and span rank two") {
  for (long k = 1; k <= 2; ++k) {
    const Cochain1 c = odd_cocycle(k);
    const Cochain1 ct = odd_cocycle_tilde(k);
    const int cap = 2 * static_cast<int>(k) + 6;
    CHECK(!solve_coboundary(c, cap));
    CHECK(!solve_coboundary(ct, cap));
    CHECK(rank_mod_coboundaries({c, ct}, cap) == 2);
  }
}

TEST_CASE("generator families reject k below one") {
  CHECK_THROWS_AS(odd_cocycle(0), std::invalid_argument);
  CHECK_THROWS_AS(odd_cocycle_tilde(0), std::invalid_argument);
  CHECK_THROWS_AS(odd_cocycle(-2), std::invalid_argument);
}

TEST_CASE("resonance classification") {
  CHECK(resonance_type(Rat(1, 3), Rat(1, 3)).type == ResonanceType::Diagonal);
  CHECK(resonance_type(Rat(0), Rat(0)).type == ResonanceType::Diagonal);

  const ResonanceInfo r1 = resonance_type(Rat(0), Rat(1, 2));
  CHECK(r1.type == ResonanceType::OddResonant);
  CHECK(r1.k == 1);
  const ResonanceInfo r2 = resonance_type(Rat(-1, 2), Rat(1));
  CHECK(r2.type == ResonanceType::OddResonant);
  CHECK(r2.k == 2);
  CHECK(resonance_type(Rat(-1), Rat(3, 2)).k == 3);

  CHECK(resonance_type(Rat(1, 4), Rat(3, 4)).type == ResonanceType::Generic);
  CHECK(resonance_type(Rat(0), Rat(5, 2)).type == ResonanceType::Generic);
  CHECK(resonance_type(Rat(1), Rat(0)).type == ResonanceType::Generic);

  CHECK(resonance_label(Rat(1, 3), Rat(1, 3)) == "diagonal");
  CHECK(resonance_label(Rat(-1, 2), Rat(1)) == "odd-resonant k=2");
  CHECK(resonance_label(Rat(1, 4), Rat(3, 4)) == "generic");
}

TEST_CASE("theorem verification passes at each resonance type") {
  for (const auto& [lam, mu] : std::vector<std::pair<Rat, Rat>>{
           {Rat(1, 3), Rat(1, 3)}, {Rat(0), Rat(1, 2)}, {Rat(1, 4), Rat(3, 4)}}) {
    const TheoremVerdict v = verify_theorem(lam, mu);
    CHECK(v.ok);
    for (const auto& ch : v.checks) CHECK(ch.ok);
    const auto has = [&](const char* name) {
      return std::any_of(v.checks.begin(), v.checks.end(),
                         [&](const CheckLine& ch) { return ch.name == name; });
    };
    CHECK(has("stabilized"));
    CHECK(has("dim_even"));
    CHECK(has("dim_odd"));
    CHECK(has("nonzero-weight exactness"));
    if (lam == mu) {
      CHECK(has("diagonal cocycle closed"));
      CHECK(has("diagonal cocycle spans"));
      CHECK(v.expected_even == 1);
    }
    if (lam == Rat(0) && mu == Rat(1, 2)) {
      CHECK(has("odd generators closed"));
      CHECK(has("odd generators nontrivial"));
      CHECK(has("odd generators span"));
      CHECK(v.expected_odd == 2);
    }
  }
}

TEST_CASE("catalogue lists every family with its order") {
  const auto entries = cocycle_catalogue(Rat(1, 3), 2);
  CHECK(entries.size() == 10);
  const auto find = [&](const std::string& name) {
    const auto it = std::find_if(entries.begin(), entries.end(),
                                 [&](const CatalogueEntry& e) { return e.name == name; });
    REQUIRE(it != entries.end());
    return *it;
  };
  const CatalogueEntry diag = find("diagonal");
  CHECK(diag.lam == Rat(1, 3));
  CHECK(diag.parity == Parity::Even);
  CHECK(diag.order == 0);
  CHECK(find("classical-diagonal").order == 0);

  const CatalogueEntry r2 = find("odd-resonant k=2");
  CHECK(r2.lam == Rat(-1, 2));
  CHECK(r2.mu == Rat(1));
  CHECK(r2.parity == Parity::Odd);
  CHECK(r2.order == 3);
  CHECK(find("odd-resonant-tilde k=2").order == 2);
  CHECK(find("classical-resonant k=2").order == 2);
  CHECK(find("classical-resonant-tilde k=2").order == 1);
  CHECK(find("odd-resonant k=1").order == 1);
  CHECK(find("odd-resonant-tilde k=1").order == 0);
}
