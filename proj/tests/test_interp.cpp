#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "barpoly/interp.hpp"
#include "barpoly/verify.hpp"
#include "test_util.hpp"

using namespace barpoly;
using testutil::C;
using testutil::L;
using testutil::P;
using testutil::X;

namespace {

MPoly bar(JackFamilies& fam, const char* eta) { return fam.barmon(C(eta)); }

}  // namespace

TEST_CASE("recursion scalars") {
  auto h = hecke_scalars(C("0,1"), 1);
  CHECK(h.c.num == L("r"));
  CHECK(h.c.den == L("1 + r"));
  CHECK(h.d.num.is_one());
  CHECK(h.d.den.is_one());

  h = hecke_scalars(C("1,0"), 1);
  CHECK(h.c.den == L("-1 - r"));
  // d = 1 - c^2 = ((1+r)^2 - r^2) / (1+r)^2
  CHECK(h.d.num * (L("1 + r") * L("1 + r")) == L("2*r + 1") * h.d.den);

  h = hecke_scalars(C("1,1"), 1);
  CHECK(h.c.num == L("r"));
  CHECK(h.c.den == L("-r"));  // c = -1 on repeated entries
  CHECK(h.d.num.is_zero());
}

TEST_CASE("monic nonsymmetric entries carry scalar denominators") {
  JackFamilies fam(2);
  CHECK(fam.E_alpha(C("0,0")) == ScaledPoly(MPoly::one(2)));
  CHECK(fam.E_rdelta(C("0,0")) == ScaledPoly(MPoly::one(2)));
  CHECK(fam.E_alpha(C("0,1")) == ScaledPoly(X(2, 2)));
  CHECK(fam.E_alpha(C("1,0")) == ScaledPoly(P("(r + 1)*x1 + r*x2", 2), L("r + 1")));
  CHECK(fam.E_alpha(C("0,2")) ==
        ScaledPoly(P("(r + 1)*x2^2 + r*x1*x2", 2), L("r + 1")));
  CHECK(fam.E_alpha(C("2,0")) ==
        ScaledPoly(P("(r + 2)*x1^2 + 2*r*x1*x2 + r*x2^2", 2), L("r + 2")));

  CHECK(fam.E_rdelta(C("0,1")) == ScaledPoly(X(2, 2)));
  CHECK(fam.E_rdelta(C("1,0")) ==
        ScaledPoly(P("(r + 1)*x1 + r*x2 - r^2 - r", 2), L("r + 1")));
}

TEST_CASE("interpolation entries vanish at every lower shifted point") {
  JackFamilies fam(2);
  Composition eta = C("0,2");
  const ScaledPoly& e = fam.E_rdelta(eta);
  CHECK(e.num().coeff(eta.parts()) == e.den());  // monic
  for (const auto& gamma : compositions_up_to(2, 2)) {
    if (gamma == eta) continue;
    CHECK(e.num().eval(rho_point(gamma)).is_zero());
  }
  CHECK(!e.num().eval(rho_point(eta)).is_zero());
}

TEST_CASE("one-variable entries are falling and rising factorials") {
  JackFamilies fam(1);
  CHECK(fam.E_rdelta(C("3")) == ScaledPoly(P("x1^3 - 3*x1^2 + 2*x1", 1)));
  CHECK(fam.barmon(C("3")) == P("x1^3 + 3*x1^2 + 2*x1", 1));
  CHECK(fam.F_rdelta(C("3")) ==
        MPoly::constant(1, L("3*r^-1 + 1") * L("2*r^-1 + 1") * L("r^-1 + 1")) *
            P("x1^3 + 3*x1^2 + 2*x1", 1));
}

TEST_CASE("normalized interpolation entries for n=2 degree 2") {
  JackFamilies fam(2);
  MPoly f02 = fam.F_rdelta(C("0,2"));
  MPoly expected02 = MPoly::constant(2, L("2*r^-1 + 2")) * bar(fam, "1,1") +
                     MPoly::constant(2, L("2*r^-1 + 2") * L("r^-1 + 1")) * bar(fam, "0,2");
  CHECK(f02 == expected02);

  MPoly f20 = fam.F_rdelta(C("2,0"));
  MPoly expected20 =
      MPoly::constant(2, L("2*r^-1 + 1") * L("r^-1 + 1")) * bar(fam, "2,0") +
      MPoly::constant(2, L("2*r^-1 + 2")) * bar(fam, "1,1") +
      MPoly::constant(2, L("r^-1 + 1")) * bar(fam, "0,2");
  CHECK(f20 == expected20);

  MPoly j20 = fam.J_rdelta(C("2,0"));
  MPoly expectedJ = MPoly::constant(2, L("r^-1 + 1")) * (bar(fam, "2,0") + bar(fam, "0,2")) +
                    MPoly::constant(2, L("2")) * bar(fam, "1,1");
  CHECK(j20 == expectedJ);
}

TEST_CASE("normalized interpolation entry for n=3 degree 3") {
  JackFamilies fam(3);
  auto cst = [](const RLaurent& c) { return MPoly::constant(3, c); };
  RLaurent a1 = L("r^-1 + 1"), a2 = L("r^-1 + 2"), twoa2 = L("2*r^-1 + 2");
  MPoly expected = cst(twoa2 * a1 * a2) * bar(fam, "2,0,1") +
                   cst(twoa2 * a2 + a2) * bar(fam, "1,1,1") +
                   cst(twoa2 * a2) * bar(fam, "1,0,2") +
                   cst(a1 * a2) * bar(fam, "0,2,1") +
                   cst(a2) * bar(fam, "0,1,2");
  CHECK(fam.F_rdelta(C("2,0,1")) == expected);
}

TEST_CASE("homogeneous and interpolation normalizations are linked by Xi") {
  for (int n = 1; n <= 3; ++n) {
    JackFamilies fam(n);
    for (const auto& eta : compositions_up_to(n, 3))
      CHECK(fam.F_rdelta(eta) == fam.xi(fam.F_alpha(eta)));
  }
}

TEST_CASE("top degree of the interpolation entry is the homogeneous one") {
  JackFamilies fam(3);
  for (const auto& eta : compositions_up_to(3, 4)) {
    ScaledPoly diff = fam.E_rdelta(eta) - fam.E_alpha(eta);
    CHECK(diff.num().total_degree() < eta.norm());
  }
}

TEST_CASE("symmetric entries") {
  JackFamilies fam(2);
  CHECK(fam.P_alpha(C("2,0")) ==
        ScaledPoly(P("(r + 1)*x1^2 + 2*r*x1*x2 + (r + 1)*x2^2", 2), L("r + 1")));
  CHECK(fam.J_alpha(C("2,0")) == P("(r^-1 + 1)*x1^2 + 2*x1*x2 + (r^-1 + 1)*x2^2", 2));
  CHECK(fam.J_rdelta(C("1,1")) == P("2*x1*x2", 2));
  CHECK(fam.P_rdelta(C("1,1")) == ScaledPoly(P("x1*x2", 2)));
  CHECK_THROWS_AS(fam.P_alpha(C("0,2")), std::invalid_argument);

  // symmetric, and vanishing at the negated shifted partitions below
  for (const auto& lambda : {C("2,0"), C("1,1"), C("3,1")}) {
    MPoly j = fam.J_rdelta(lambda);
    CHECK(apply_si(j, 1) == j);
    ScaledPoly p = fam.P_rdelta(lambda);
    CHECK(apply_si(p.num(), 1) == p.num());
    for (const auto& mu : compositions_up_to(2, lambda.norm() - 1)) {
      if (!mu.is_partition()) continue;
      CHECK(eval_at_neg_bar(j, mu).is_zero());
      CHECK(eval_at_neg_bar(p.num(), mu).is_zero());
    }
  }
}

TEST_CASE("expansion coefficients in the four bases") {
  JackFamilies fam(3);
  BarmonCache& cache = fam.barmons();

  auto cm = expansion_coeffs(fam.barmon(C("2,0,0")), Basis::Monomials, cache);
  // restricted to the first two variables this is the classic quadratic case
  JackFamilies fam2(2);
  auto c2 = expansion_coeffs(fam2.barmon(C("2,0")), Basis::Monomials, fam2.barmons());
  CHECK(c2.at(C("2,0")).is_one());
  CHECK(c2.at(C("1,0")) == L("2*r + 1"));
  CHECK(c2.at(C("0,1")) == L("r"));
  CHECK(c2.at(C("0,0")) == L("r^2 + r"));
  CHECK(c2.size() == 4);
  CHECK(cm.at(C("2,0,0")).is_one());

  auto cb = expansion_coeffs(fam.F_rdelta(C("2,0,1")), Basis::BarMonomials, cache);
  RLaurent a1 = L("r^-1 + 1"), a2 = L("r^-1 + 2"), twoa2 = L("2*r^-1 + 2");
  CHECK(cb.at(C("2,0,1")) == twoa2 * a1 * a2);
  CHECK(cb.at(C("1,1,1")) == twoa2 * a2 + a2);
  CHECK(cb.at(C("1,0,2")) == twoa2 * a2);
  CHECK(cb.at(C("0,2,1")) == a1 * a2);
  CHECK(cb.at(C("0,1,2")) == a2);
  CHECK(cb.size() == 5);

  auto cs = expansion_coeffs(sym_barmon(C("2,0"), fam2.barmons()), Basis::SymmetricMonomials,
                             fam2.barmons());
  CHECK(cs.at(C("2,0")).is_one());
  CHECK(cs.at(C("1,0")) == L("2*r + 1"));
  CHECK(cs.at(C("0,0")) == L("r^2 + r"));
  CHECK(cs.size() == 3);

  auto cj = expansion_coeffs(fam2.J_rdelta(C("2,0")), Basis::SymmetricBar, fam2.barmons());
  CHECK(cj.at(C("2,0")) == L("r^-1 + 1"));
  CHECK(cj.at(C("1,1")) == L("2"));
  CHECK(cj.size() == 2);
}

TEST_CASE("symmetric bar coefficients are rearrangement sums of monomial ones") {
  for (int n = 2; n <= 3; ++n) {
    JackFamilies fam(n);
    for (const auto& lambda : compositions_up_to(n, 4)) {
      if (!lambda.is_partition()) continue;
      auto d = expansion_coeffs(sym_barmon(lambda, fam.barmons()), Basis::SymmetricMonomials,
                                fam.barmons());
      for (const auto& mu : compositions_up_to(n, lambda.norm())) {
        if (!mu.is_partition()) continue;
        RLaurent sum;
        for (const auto& eta : rearrangements(lambda)) sum += fam.barmon(eta).coeff(mu.parts());
        RLaurent got = d.count(mu) ? d.at(mu) : RLaurent();
        CHECK(got == sum);
        if (!got.is_zero()) {
          CHECK(got.min_exp() >= 0);
          CHECK(got.max_exp() <= lambda.norm() - mu.norm());
          CHECK(got.all_coeffs_integer());
          CHECK(got.all_coeffs_nonneg());
        }
      }
    }
  }
}

TEST_CASE("special values at shifted points") {
  JackFamilies fam(2);
  // zero below the diagonal of the vanishing characterization
  CHECK(binomial_value(fam, C("2,0"), C("1,0")).is_zero());
  CHECK(binomial_value(fam, C("2,0"), C("0,0")).is_zero());
  CHECK(binomial_value(fam, C("3,1"), C("2,1")).is_zero());
  // the smallest nonzero diagonal value
  CHECK(binomial_value(fam, C("1,0"), C("1,0")) == L("r"));
  CHECK_THROWS_AS(binomial_value(fam, C("0,2"), C("1,0")), std::invalid_argument);
}

TEST_CASE("raw special value of the degree-4 entry") {
  JackFamilies fam(2);
  MPoly f31 = fam.F_rdelta(C("3,1"));
  RLaurent expected = L("144*r^-4 + 708*r^-3 + 1272*r^-2 + 1044*r^-1 + 384 + 48*r");
  CHECK(eval_at_neg_bar(f31, C("3,4")) == expected);

  // term-by-term split over the bar-monomial expansion at the same point
  RLaurent a1 = L("r^-1 + 1"), twoa1 = L("2*r^-1 + 1"), threea2 = L("3*r^-1 + 2");
  auto at = [&](const char* eta) { return eval_at_neg_bar(fam.barmon(C(eta)), C("3,4")); };
  CHECK(threea2 * twoa1 * a1 * a1 * at("3,1") ==
        L("144*r^-4 + 60*r^-3 - 834*r^-2 - 1530*r^-1 - 1074 - 330*r - 36*r^2"));
  CHECK(threea2 * a1 * at("2,2") == L("216*r^-2 + 486*r^-1 + 372 + 114*r + 12*r^2"));
  CHECK(threea2 * twoa1 * a1 * at("2,2") ==
        L("432*r^-3 + 1188*r^-2 + 1230*r^-1 + 600 + 138*r + 12*r^2"));
  CHECK(threea2 * a1 * a1 * at("1,3") ==
        L("216*r^-3 + 702*r^-2 + 858*r^-1 + 486 + 126*r + 12*r^2"));
}

TEST_CASE("translated-origin substitution round-trips") {
  JackFamilies fam(3);
  RLaurent c = L("2*r");  // (n-1) r
  for (const auto& eta : {C("1,0,2"), C("2,1,0")}) {
    const MPoly& num = fam.E_rdelta(eta).num();
    CHECK(shift_all(shift_all(num, -c), c) == num);
  }
}

TEST_CASE("family entries dispatch by tag") {
  JackFamilies fam(2);
  CHECK(fam.entry(Family::F_rdelta, C("0,2")).value == ScaledPoly(fam.F_rdelta(C("0,2"))));
  CHECK(fam.entry(Family::E_alpha, C("1,0")).value == fam.E_alpha(C("1,0")));
  CHECK(std::string(family_name(Family::J_rdelta)) == "J_rdelta");
  CHECK_THROWS_AS(fam.entry(Family::J_rdelta, C("0,2")), std::invalid_argument);
  CHECK_THROWS_AS(fam.E_alpha(C("1,0,0")), std::invalid_argument);
}
