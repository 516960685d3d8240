#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "barpoly/games.hpp"
#include "barpoly/operators.hpp"
#include "test_util.hpp"

using namespace barpoly;
using testutil::C;
using testutil::L;
using testutil::P;
using testutil::X;

TEST_CASE("adjacent transpositions") {
  CHECK(apply_si(X(2, 1), 1) == X(2, 2));
  CHECK(apply_si(X(2, 1) * X(2, 2), 1) == X(2, 1) * X(2, 2));
  CHECK_THROWS_AS(apply_si(X(2, 1), 2), std::invalid_argument);
}

TEST_CASE("divided differences") {
  CHECK(div_diff(X(2, 1), 1) == -MPoly::one(2));   // (x2 - x1)/(x1 - x2)
  CHECK(div_diff(X(2, 2), 1) == MPoly::one(2));
  CHECK(div_diff(MPoly::constant(2, L("r^2 - 3")), 1).is_zero());
  CHECK(div_diff(P("x1^2", 2), 1) == -P("x1 + x2", 2));

  std::mt19937 rng(5150);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 2;
    MPoly f = testutil::random_mpoly(rng, n);
    for (int i = 1; i < n; ++i) {
      MPoly d = div_diff(f, i);
      CHECK(d * (X(n, i) - X(n, i + 1)) == apply_si(f, i) - f);
    }
  }
}

TEST_CASE("sigma operators are involutions") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 3;
    MPoly f = testutil::random_mpoly(rng, n);
    for (int i = 1; i < n; ++i) {
      CHECK(sigma_plus(sigma_plus(f, i), i) == f);
      CHECK(sigma_minus(sigma_minus(f, i), i) == f);
    }
  }
}

TEST_CASE("sigma+ moves bar monomials along transpositions") {
  BarmonCache cache;
  MPoly bar20 = barmon_transition(C("2,0"), cache);
  MPoly bar02 = barmon_transition(C("0,2"), cache);
  CHECK(sigma_plus(bar20, 1) == bar02);
  CHECK(sigma_plus(bar02, 1) == bar20);
}

TEST_CASE("sigma+ fixes exactly the symmetric polynomials") {
  MPoly sym = P("x1^2 + x2^2 + (2*r + 1)*x1*x2", 2);
  CHECK(apply_si(sym, 1) == sym);
  CHECK(sigma_plus(sym, 1) == sym);
  MPoly asym = P("x1^2 + x2", 2);
  CHECK(apply_si(asym, 1) != asym);
  CHECK(sigma_plus(asym, 1) != asym);
}

TEST_CASE("affine intertwiners substitute and multiply") {
  int n = 3;
  CHECK(phi_plus(MPoly::one(n)) == X(n, 3));
  // Phi on a monomial cycles the exponent vector and adds a box
  CHECK(phi(MPoly::monomial(n, {2, 0, 1})) == MPoly::monomial(n, {0, 1, 3}));
  // Phi- substitutes x_n - 1 into the first slot
  CHECK(phi_minus(X(n, 1)) == X(n, 3) * (X(n, 3) - MPoly::one(n)));
  CHECK(omega_tilde(X(n, 1)) == X(n, 3) + MPoly::one(n));
  CHECK(omega_tilde(X(n, 2)) == X(n, 1));
  // Phi+ = x_n * omega~
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    MPoly f = testutil::random_mpoly(rng, n);
    CHECK(phi_plus(f) == X(n, 3) * omega_tilde(f));
  }
}

TEST_CASE("sign flip") {
  std::mt19937 rng(2718);
  MPoly f = testutil::random_mpoly(rng, 2);
  CHECK(sign_flip(sign_flip(f)) == f);
  CHECK(sign_flip(X(2, 1) * X(2, 2)) == X(2, 1) * X(2, 2));
  CHECK(sign_flip(P("x1 + r", 2)) == P("-x1 + r", 2));
}

TEST_CASE("twisted derivation laws") {
  std::mt19937 rng(818);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 2;
    MPoly f = testutil::random_mpoly(rng, n);
    MPoly g = testutil::random_mpoly(rng, n);
    CHECK(phi_plus(f * g) == omega_tilde(f) * phi_plus(g));
    for (int i = 1; i < n; ++i) {
      CHECK(sigma_plus(f * g, i) ==
            apply_si(f, i) * sigma_plus(g, i) + RLaurent::r() * div_diff(f, i) * g);
    }
  }
}

TEST_CASE("dehomogenization acts monomial-wise") {
  BarmonCache cache;
  auto oracle = barmon_oracle(cache);
  CHECK(dehomogenize_xi(MPoly::one(2), oracle) == MPoly::one(2));
  // the symmetric monomial of shape (2,0)
  MPoly m20 = P("x1^2 + x2^2", 2);
  CHECK(dehomogenize_xi(m20, oracle) ==
        P("x1^2 + x2^2 + (2*r + 1)*x1 + (2*r + 1)*x2 + r^2 + r", 2));
}

TEST_CASE("dehomogenization intertwines the two operator families") {
  BarmonCache cache;
  auto oracle = barmon_oracle(cache);
  int n = 3;
  for (const auto& eta : compositions_up_to(n, 4)) {
    MPoly mono = MPoly::monomial(n, eta.parts());
    MPoly bm = dehomogenize_xi(mono, oracle);
    CHECK(dehomogenize_xi(phi(mono), oracle) == phi_plus(bm));
    for (int i = 1; i < n; ++i)
      CHECK(dehomogenize_xi(apply_si(mono, i), oracle) == sigma_plus(bm, i));
  }
}

TEST_CASE("dehomogenization preserves symmetric polynomials") {
  BarmonCache cache;
  auto oracle = barmon_oracle(cache);
  for (const auto& lambda : {C("2,0"), C("1,1"), C("3,1"), C("2,2")}) {
    MPoly m(2);
    for (const auto& eta : rearrangements(lambda)) m += MPoly::monomial(2, eta.parts());
    MPoly image = dehomogenize_xi(m, oracle);
    CHECK(apply_si(image, 1) == image);
  }
}

TEST_CASE("operator tags dispatch and name themselves") {
  MPoly f = P("x1^2", 2);
  CHECK(apply_operator({OperatorTag::Kind::Si, 1}, f) == P("x2^2", 2));
  CHECK(apply_operator({OperatorTag::Kind::SigmaPlus, 1}, f) == sigma_plus(f, 1));
  CHECK(apply_operator({OperatorTag::Kind::SignFlip}, f) == f);
  CHECK(OperatorTag{OperatorTag::Kind::PhiPlus}.name() == "Phi+");
  CHECK_THROWS_AS(apply_operator({OperatorTag::Kind::Xi}, f), std::invalid_argument);
  BarmonCache cache;
  CHECK(apply_operator({OperatorTag::Kind::Xi}, f, barmon_oracle(cache)) ==
        P("x1^2 + (2*r + 1)*x1 + r*x2 + r^2 + r", 2));
}

TEST_CASE("composing sign flips with dehomogenization") {
  BarmonCache cache;
  auto oracle = barmon_oracle(cache);
  // psi = S Xi S sends x^eta to a polynomial with the same top term
  MPoly f = P("x1*x2^2", 2);
  MPoly g = psi(f, oracle);
  CHECK(g.coeff({1, 2}).is_one());
  CHECK((g - f).total_degree() < 3);
}
