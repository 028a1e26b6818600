#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.h"
#include "exact/cyclotomic.h"
#include "exact/linsolve.h"
#include "exact/xypoly.h"

using namespace discmf;

TEST_CASE("cyclotomic fields: polynomial and degree") {
  // phi(n) for the orders used throughout
  CHECK(CycField::get(1).degree() == 1);
  CHECK(CycField::get(2).degree() == 1);
  CHECK(CycField::get(3).degree() == 2);
  CHECK(CycField::get(4).degree() == 2);
  CHECK(CycField::get(6).degree() == 2);
  CHECK(CycField::get(8).degree() == 4);
  CHECK(CycField::get(12).degree() == 4);

  // Phi_6 = x^2 - x + 1
  const auto& phi6 = CycField::get(6).cyclotomic_polynomial();
  REQUIRE(phi6.size() == 3);
  CHECK(phi6[0] == 1);
  CHECK(phi6[1] == -1);
  CHECK(phi6[2] == 1);

  // Phi_12 = x^4 - x^2 + 1
  const auto& phi12 = CycField::get(12).cyclotomic_polynomial();
  REQUIRE(phi12.size() == 5);
  CHECK(phi12[0] == 1);
  CHECK(phi12[2] == -1);
  CHECK(phi12[4] == 1);
}

TEST_CASE("zeta powers and basic identities") {
  for (unsigned n : {2u, 3u, 4u, 5u, 6u, 8u, 9u, 12u}) {
    CAPTURE(n);
    CycNum z = CycNum::zeta(n);
    CycNum t(1);
    for (unsigned k = 0; k < n; ++k) {
      CHECK(t == CycNum::zeta(n, k));
      t *= z;
    }
    CHECK(t == CycNum(1));

    // geometric sum: 1 + z + ... + z^{n-1} = 0
    CycNum s(0);
    for (unsigned k = 0; k < n; ++k) s += CycNum::zeta(n, k);
    CHECK(s.is_zero());
  }

  // order-6 specifics
  CycNum w = CycNum::zeta(6);
  CHECK(w * w == w - CycNum(1));
  CHECK(w * w * w == CycNum(-1));
  CHECK((w - CycNum(1)) * (w - CycNum(1)) == -w);
}

TEST_CASE("mixed-order sums keep both parts") {
  // regression: a rational accumulated with an order-6 number must not drop
  // the irrational part (the promotion used to be undone by normalization)
  CycNum w = CycNum::zeta(6);
  CycNum a(-1);
  a += -w;
  CHECK(a == -(CycNum(1) + w));
  CHECK(!a.is_rational());

  CycNum b = CycNum(3) - CycNum::zeta(4);
  CHECK(b * (CycNum(3) + CycNum::zeta(4)) == CycNum(10));

  // zeta_6 * zeta_4 = zeta_12^5 (promotion to the lcm field)
  CHECK(CycNum::zeta(6) * CycNum::zeta(4) == CycNum::zeta(12, 5));
}

TEST_CASE("inverse and conjugation") {
  for (unsigned n : {3u, 4u, 5u, 6u, 8u, 12u}) {
    CAPTURE(n);
    for (unsigned k = 0; k < n; ++k) {
      CycNum z = CycNum::zeta(n, k);
      CHECK(z * z.inverse() == CycNum(1));
      CHECK(z.conj() == CycNum::zeta(n, (n - k) % n));
      // |zeta^k|^2 = 1
      CHECK(z * z.conj() == CycNum(1));
    }
    CycNum v = CycNum(2) + CycNum::zeta(n) - CycNum::zeta(n, n - 1);
    if (!v.is_zero()) CHECK(v * v.inverse() == CycNum(1));
  }
  CHECK_THROWS_AS(CycNum(0).inverse(), std::domain_error);
}

TEST_CASE("rational demotion and coordinates") {
  CycNum w = CycNum::zeta(6);
  CycNum r = w + w.conj();  // = 1
  CHECK(r.is_rational());
  CHECK(r.rational() == 1);

  CycNum i4 = CycNum::zeta(4);
  CHECK((i4 * i4).is_rational());
  CHECK((i4 * i4).rational() == -1);

  auto c = (CycNum(2) - w).coords_in(6);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == 2);
  CHECK(c[1] == -1);
  // embedding into the degree-4 order-12 field
  auto c12 = w.coords_in(12);
  REQUIRE(c12.size() == 4);  // zeta_6 = zeta_12^2 = x^2 -> reduced mod Phi_12
}

TEST_CASE("rendering") {
  CHECK(CycNum(Rational(-3, 2)).str() == "-3/2");
  CHECK(CycNum::zeta(6).str() == "w");
  CHECK((CycNum::zeta(6, 2)).str() == "w - 1");
  CHECK((-CycNum::zeta(6)).str() == "-w");
}

TEST_CASE("linear solver: unique, none, many") {
  using M = DenseMatrix<Rational>;
  SUBCASE("unique") {
    M a{{Rational(2), Rational(1)}, {Rational(1), Rational(-1)}};
    std::vector<Rational> b{Rational(5), Rational(1)};
    auto sol = solve(a, b);
    REQUIRE(sol.status == SolveStatus::kUnique);
    CHECK(sol.x[0] == 2);
    CHECK(sol.x[1] == 1);
  }
  SUBCASE("inconsistent") {
    M a{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
    std::vector<Rational> b{Rational(1), Rational(3)};
    CHECK(solve(a, b).status == SolveStatus::kNoSolution);
  }
  SUBCASE("underdetermined") {
    M a{{Rational(1), Rational(1)}};
    std::vector<Rational> b{Rational(1)};
    CHECK(solve(a, b).status == SolveStatus::kAmbiguous);
  }
  SUBCASE("rank and nullspace") {
    M a{{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}};
    CHECK(rank(a) == 1);
    auto ns = nullspace(a, 3);
    CHECK(ns.size() == 2);
  }
  SUBCASE("over the cyclotomic field") {
    CycNum w = CycNum::zeta(6);
    DenseMatrix<CycNum> a{{w, CycNum(1)}, {CycNum(1), w.conj()}};
    // det = w * conj(w) - 1 = 0, so rank 1
    CHECK(rank(a) == 1);
  }
}

TEST_CASE("polynomial arithmetic and normalization") {
  XYPoly x = XYPoly::monomial(1, 0), y = XYPoly::monomial(0, 1);

  // regression: the full product of the six order-6 diagonal forms
  XYPoly prod(CycNum(1));
  for (unsigned a = 0; a < 6; ++a)
    prod *= x - XYPoly::monomial(0, 1, CycNum::zeta(6, a));
  CHECK(prod == XYPoly::monomial(6, 0) - XYPoly::monomial(0, 6));

  XYPoly f = (x + y) * (x - y);
  CHECK(f == XYPoly::monomial(2, 0) - XYPoly::monomial(0, 2));
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK_FALSE((f + XYPoly(CycNum(1))).is_homogeneous());

  XYPoly g = XYPoly::monomial(1, 1, CycNum(-2)) + XYPoly::monomial(2, 0, CycNum(-4));
  CHECK(g.leading_coeff() == CycNum(-4));
  CHECK(g.normalized_monic() ==
        XYPoly::monomial(2, 0) + XYPoly::monomial(1, 1, CycNum(Rational(1, 2))));

  CHECK(to_string_xy(f) == "x^2 - y^2");
  CHECK(to_string_xy(XYPoly::monomial(0, 1, -CycNum::zeta(4))) == "(-w)*y");
  CHECK(to_string_sigma(SigmaPoly::monomial(1, 1, CycNum(2)) - SigmaPoly::monomial(3, 0)) ==
        "-s1^3 + 2*s1*s2");
}

TEST_CASE("monomial substitution") {
  XYPoly f = XYPoly::monomial(2, 1);  // x^2 y
  // x -> 2y, y -> x gives 4 y^2 x
  XYPoly g = monomial_substitute(f, CycNum(2), 0, 1, CycNum(1), 1, 0);
  CHECK(g == XYPoly::monomial(1, 2, CycNum(4)));
}

TEST_CASE("invariant frame: expansion") {
  InvariantFrame fr(4, 4);  // G(4,1,2): sigma1 = (xy)^4, sigma2 = x^4 + y^4
  CHECK(fr.sigma1_xy() == XYPoly::monomial(4, 4));
  CHECK(fr.expand(SigmaPoly::monomial(0, 2)) ==
        XYPoly::monomial(8, 0) + XYPoly::monomial(4, 4, CycNum(2)) + XYPoly::monomial(0, 8));
  CHECK(fr.expand(SigmaPoly::monomial(1, 1)) ==
        XYPoly::monomial(8, 4) + XYPoly::monomial(4, 8));
}

TEST_CASE("express_in_basis") {
  InvariantFrame fr(6, 2);  // G(6,3,2)

  SUBCASE("plain invariants") {
    XYPoly d6 = XYPoly::monomial(6, 0) - XYPoly::monomial(0, 6);
    auto r = fr.express_in_basis(d6 * d6, {XYPoly(CycNum(1))});
    REQUIRE(r.size() == 1);
    CHECK(r[0] == SigmaPoly::monomial(0, 2) - SigmaPoly::monomial(3, 0, CycNum(4)));
  }

  SUBCASE("module coordinates over a two-element basis") {
    // target = sigma1^3 * b0 + 2*sigma2^2 * b1, both products of degree 15
    XYPoly b0 = XYPoly::monomial(3, 0), b1 = XYPoly::monomial(1, 2);
    XYPoly target = fr.expand(SigmaPoly::monomial(3, 0)) * b0 +
                    fr.expand(SigmaPoly::monomial(0, 2, CycNum(2))) * b1;
    auto r = fr.express_in_basis(target, {b0, b1});
    REQUIRE(r.size() == 2);
    CHECK(r[0] == SigmaPoly::monomial(3, 0));
    CHECK(r[1] == SigmaPoly::monomial(0, 2, CycNum(2)));
  }

  SUBCASE("cyclotomic coefficients are found") {
    CycNum w = CycNum::zeta(6);
    XYPoly b0 = XYPoly::monomial(1, 1);
    XYPoly target = fr.expand(SigmaPoly::monomial(1, 0)).scaled(w) * b0;
    auto r = fr.express_in_basis(target, {b0});
    CHECK(r[0] == SigmaPoly::monomial(1, 0, w));
  }

  SUBCASE("outside the span") {
    CHECK_THROWS_AS(fr.express_in_basis(XYPoly::monomial(2, 0), {XYPoly(CycNum(1))}),
                    NoSolution);
    // right degree (4 = deg sigma1) but not invariant
    CHECK_THROWS_AS(fr.express_in_basis(XYPoly::monomial(4, 0), {XYPoly(CycNum(1))}),
                    NoSolution);
  }

  SUBCASE("dependent basis is rejected") {
    XYPoly b0 = XYPoly::monomial(1, 1);
    XYPoly b1 = fr.expand(SigmaPoly::monomial(1, 0)) * b0;  // sigma1 * b0
    XYPoly target = fr.expand(SigmaPoly::monomial(1, 0)) * b1;
    CHECK_THROWS_AS(fr.express_in_basis(target, {b0, b1}), AmbiguousSolution);
  }

  SUBCASE("inhomogeneous input is rejected") {
    CHECK_THROWS_AS(
        fr.express_in_basis(XYPoly(CycNum(1)) + XYPoly::monomial(1, 0), {XYPoly(CycNum(1))}),
        NoSolution);
  }
}
