#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "specht/specht.h"

using namespace discmf;

namespace {

XYPoly xpow(int a, int b, CycNum c = CycNum(1)) { return XYPoly::monomial(a, b, std::move(c)); }

}  // namespace

TEST_CASE("standard tableaux and words") {
  SUBCASE("one-slot shapes have a single filling") {
    for (ShapeKind k : {ShapeKind::kTwoRow, ShapeKind::kTwoCol}) {
      Shape s{k, 2, 0};
      auto ts = standard_tableaux(s);
      REQUIRE(ts.size() == 1);
      CHECK(ts[0].letter_slot == std::vector<int>{2, 2});
    }
  }
  SUBCASE("two-cell shapes have the filling and its swap") {
    Shape s{ShapeKind::kTwoCell, 1, 3};
    auto ts = standard_tableaux(s);
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].letter_slot == std::vector<int>{1, 3});  // Q: 1 low, 2 high
    CHECK(ts[1].letter_slot == std::vector<int>{3, 1});  // T: swapped
    CHECK(ts[0].str() == "1@1,2@3");
    CHECK(ts[1].str() == "1@3,2@1");  // rendered in letter order
  }
  SUBCASE("reading word and word index") {
    Shape s{ShapeKind::kTwoCell, 0, 2};
    auto ts = standard_tableaux(s);
    CHECK(reading_word(ts[0]) == std::vector<int>{1, 2});
    CHECK(reading_word(ts[1]) == std::vector<int>{2, 1});
    // word index of (1,2) is (0,0); of (2,1) it charges letter 2 one unit
    CHECK(word_index(ts[0]) == std::vector<int>{0, 0});
    CHECK(word_index(ts[1]) == std::vector<int>{0, 1});
  }
}

TEST_CASE("higher Specht polynomials: pinned values") {
  // two-cell {i, j} at m = 4, the four (S, T) entries
  const unsigned m = 4;
  Shape s{ShapeKind::kTwoCell, 1, 2};
  auto ts = standard_tableaux(s);
  const Tableau &Q = ts[0], &T = ts[1];
  // Delta_{Q,Q} = x^i y^j, Delta_{Q,T} = x^j y^i
  CHECK(specht_polynomial(Q, Q, m) == xpow(1, 2));
  CHECK(specht_polynomial(Q, T, m) == xpow(2, 1));
  // Delta_{T,Q} = x^{i+m} y^j, Delta_{T,T} = x^j y^{i+m}
  CHECK(specht_polynomial(T, Q, m) == xpow(5, 2));
  CHECK(specht_polynomial(T, T, m) == xpow(2, 5));

  // one-slot shapes: [2]_i -> (xy)^i, [1,1]_i -> (xy)^i (x^m - y^m) up to sign
  Tableau r = standard_tableaux(Shape{ShapeKind::kTwoRow, 3, 0})[0];
  CHECK(specht_polynomial(r, r, m) == xpow(3, 3));
  Tableau c = standard_tableaux(Shape{ShapeKind::kTwoCol, 2, 0})[0];
  XYPoly pc = specht_polynomial(c, c, m).normalized_monic();
  CHECK(pc == xpow(6, 2) - xpow(2, 6));
}

TEST_CASE("for fixed S the T-span of Delta_{S,T} is group-stable") {
  // Each choice of S gives one embedded copy of the irreducible; the copy is
  // spanned by the Delta_{S,T} over all fillings T.
  Group g(6, 3);
  Shape s{ShapeKind::kTwoCell, 0, 3};
  auto ts = standard_tableaux(s);
  for (const Tableau& S : ts) {
    XYPoly f0 = specht_polynomial(S, ts[0], 6);
    XYPoly f1 = specht_polynomial(S, ts[1], 6);
    for (const GroupElement& e : g.elements()) {
      // membership test by monomial support: f0, f1 are single monomials here
      for (const XYPoly& img : {g.act(e, f0), g.act(e, f1)}) {
        for (const auto& [mono, coeff] : img.terms()) {
          (void)coeff;
          CHECK((f0.terms().count(mono) || f1.terms().count(mono)));
        }
      }
    }
  }
}

TEST_CASE("split Specht polynomials") {
  // (4,2): shape {0,2} is stabilized by the shift; model polynomials are
  // (xy)^0 (y^2 + (-1)^l x^2) up to normalization
  Group g(4, 2);
  Shape s{ShapeKind::kTwoCell, 0, 2};
  Tableau S = standard_tableaux(s)[0];
  XYPoly w0 = split_specht_polynomial(S, 4, 2, 0).normalized_monic();
  XYPoly w1 = split_specht_polynomial(S, 4, 2, 1).normalized_monic();
  CHECK(w0 == xpow(2, 0) + xpow(0, 2));
  CHECK(w1 == xpow(2, 0) - xpow(0, 2));

  // each split polynomial spans a one-dimensional subgroup-stable space
  for (int l : {0, 1}) {
    XYPoly w = split_specht_polynomial(S, 4, 2, l);
    for (const GroupElement& e : g.elements()) {
      XYPoly img = g.act(e, w);
      // img must be a scalar multiple of w: compare normalized forms
      CHECK(img.normalized_monic() == w.normalized_monic());
    }
  }
}

TEST_CASE("isotypic bases") {
  for (auto [m, p] : {std::pair{4u, 1u}, std::pair{4u, 2u}, std::pair{6u, 3u},
                      std::pair{4u, 4u}, std::pair{5u, 5u}, std::pair{6u, 6u}}) {
    CAPTURE(m);
    CAPTURE(p);
    Group g(m, p);
    RepTable t(g);
    const unsigned q = g.q();

    size_t total = 0;
    for (const auto& ir : t.irreps()) {
      IsotypicBasis basis = isotypic_basis(g, ir);
      CHECK(basis.vectors.size() == ir.dim * ir.dim);
      total += basis.vectors.size();
      for (const auto& v : basis.vectors) {
        CHECK(!v.poly.is_zero());
        CHECK(v.poly.is_homogeneous());
        CHECK(v.poly.degree() == v.degree);
        CHECK(v.poly.leading_coeff() == CycNum(1));
        // coinvariant degrees stay below deg(z) = 2q + m - 1... the basis
        // vectors live at or below the top coinvariant degree
        CHECK(v.degree <= static_cast<int>(2 * q + m - 2));
        CHECK(!v.origin.empty());
      }
    }
    // across all irreps the basis vectors number dim^2 summed = |G|
    CHECK(total == g.order());
  }
}

TEST_CASE("isotypic vectors project onto their own character") {
  // P_chi f = (dim/|G|) sum_g conj(chi(g)) (g . f) must fix every basis vector
  for (auto [m, p] : {std::pair{4u, 2u}, std::pair{6u, 3u}}) {
    CAPTURE(m);
    CAPTURE(p);
    Group g(m, p);
    RepTable t(g);
    const CycNum inv_order(Rational(1, static_cast<long>(g.order())));
    for (const auto& ir : t.irreps()) {
      const CycNum scale = CycNum(static_cast<long>(ir.dim)) * inv_order;
      for (const auto& v : isotypic_basis(g, ir).vectors) {
        XYPoly acc;
        for (size_t i = 0; i < g.order(); ++i)
          acc += g.act(g.elements()[i], v.poly).scaled(ir.character[i].conj());
        acc = acc.scaled(scale);
        CHECK(acc == v.poly);
      }
    }
  }
}

TEST_CASE("isotypic bases at (6,3): the concrete degree table") {
  Group g(6, 3);
  RepTable t(g);
  // degrees by label, sorted: matches the coinvariant Hilbert series slices
  std::map<std::string, std::vector<int>> expect = {
      {"2@0", {0}},          {"2@1", {2}},
      {"11@0", {6}},         {"11@1", {8}},
      {"1@0,1@1", {1, 1, 7, 7}},
      {"1@0,1@2", {2, 2, 4, 4}},
      {"1@0,1@3", {3, 3, 5, 5}},
      {"1@0,1@5", {3, 3, 5, 5}},
      {"1@1,1@3", {4, 4, 6, 6}},
  };
  for (const auto& ir : t.irreps()) {
    REQUIRE(expect.count(ir.label));
    auto degs = isotypic_basis(g, ir).degrees();
    auto want = expect[ir.label];
    std::sort(degs.begin(), degs.end());
    std::sort(want.begin(), want.end());
    CHECK(degs == want);
  }
}
