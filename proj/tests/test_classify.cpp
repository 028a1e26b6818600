#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "classify/classify.h"
#include "errors.h"
#include "group/group.h"

using namespace discmf;

namespace {

SigmaPoly s(int a, int b, CycNum c = CycNum(1)) { return SigmaPoly::monomial(a, b, std::move(c)); }

// The middle normal forms of the D regime, reproduced for j outside the
// canonical range so equivalences across the range boundary can be tested.
MFPair kpair_at(int j, int p) {
  return {{{s(0, 1), s(j, 0, CycNum(2))}, {s(p - j, 0, CycNum(2)), s(0, 1)}},
          {{s(1, 1), s(j + 1, 0, CycNum(-2))}, {s(p + 1 - j, 0, CycNum(-2)), s(1, 1)}}};
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("canonical lists by regime") {
  SUBCASE("p = 1") {
    auto list = canonical_list(5, 1);
    CHECK(list.regime == "A3");
    CHECK(list.delta == s(1, 2) - s(2, 0, CycNum(4)));
    std::set<std::string> names;
    for (const auto& e : list.entries) names.insert(e.name);
    CHECK(names == std::set<std::string>{"FreeR", "RmodDelta", "A", "B", "X"});
    CHECK(list.find("X") != nullptr);
    CHECK(list.find("X")->mf.size() == 2);
    CHECK(list.find("K_1") == nullptr);
    for (const auto& e : list.entries) CHECK(e.expands_to.empty());
  }
  SUBCASE("1 < p < m, odd p") {
    auto list = canonical_list(6, 3);
    CHECK(list.regime == "D5");
    CHECK(list.delta == s(1, 2) - s(4, 0, CycNum(4)));
    std::set<std::string> names;
    for (const auto& e : list.entries) names.insert(e.name);
    CHECK(names == std::set<std::string>{"FreeR", "RmodDelta", "A", "B", "X_1", "X_2", "X_3",
                                         "K_1", "N_1"});
    for (const auto& e : list.entries) CHECK(e.expands_to.empty());
  }
  SUBCASE("1 < p < m, even p: branch forms and expansions") {
    auto list = canonical_list(8, 4);
    CHECK(list.regime == "D6");
    std::set<std::string> names;
    for (const auto& e : list.entries) names.insert(e.name);
    CHECK(names == std::set<std::string>{"FreeR", "RmodDelta", "A", "B", "X_1", "X_2", "X_3",
                                         "X_4", "K_1", "N_1", "K_2", "N_2", "C_plus", "C_minus",
                                         "D_plus", "D_minus"});
    CHECK(list.find("K_2")->expands_to == std::vector<std::string>{"D_plus", "D_minus"});
    CHECK(list.find("N_2")->expands_to == std::vector<std::string>{"C_plus", "C_minus"});
    CHECK(list.find("K_1")->expands_to.empty());
  }
  SUBCASE("p = m") {
    auto odd = canonical_list(5, 5);
    CHECK(odd.regime == "A4");
    std::set<std::string> on;
    for (const auto& e : odd.entries) on.insert(e.name);
    CHECK(on == std::set<std::string>{"FreeR", "RmodDelta", "X_1", "X_2"});

    auto even = canonical_list(6, 6);
    CHECK(even.regime == "A5");
    std::set<std::string> en;
    for (const auto& e : even.entries) en.insert(e.name);
    CHECK(en == std::set<std::string>{"FreeR", "RmodDelta", "X_1", "X_2", "X_3", "N_plus",
                                      "N_minus"});
    CHECK(even.find("X_3")->expands_to == std::vector<std::string>{"N_plus", "N_minus"});
  }
  SUBCASE("every entry satisfies the factorization identity") {
    for (auto [m, p] : {std::pair{4u, 1u}, std::pair{8u, 4u}, std::pair{6u, 6u}}) {
      auto list = canonical_list(m, p);
      for (const auto& e : list.entries)
        CHECK_NOTHROW(check_mf_identity(e.mf, list.delta, e.name));
    }
  }
}

TEST_CASE("constant equivalence") {
  auto list = canonical_list(8, 4);

  SUBCASE("reflexive on every canonical entry") {
    for (const auto& e : list.entries) CHECK(constant_equivalent(e.mf, e.mf));
  }

  SUBCASE("distinct canonical entries are inequivalent") {
    for (size_t i = 0; i < list.entries.size(); ++i)
      for (size_t j = i + 1; j < list.entries.size(); ++j) {
        CAPTURE(list.entries[i].name);
        CAPTURE(list.entries[j].name);
        CHECK_FALSE(constant_equivalent(list.entries[i].mf, list.entries[j].mf));
      }
  }

  SUBCASE("invariant under explicit constant conjugation") {
    const MFPair& x1 = list.find("X_1")->mf;
    // S = [[1, 2], [0, 1]], T = [[3, 0], [1, 1]]; phi' = S phi T, psi' = T^-1 psi S^-1
    // T^-1 = 1/3 [[1, 0], [-1, 3]], S^-1 = [[1, -2], [0, 1]]
    auto mat2 = [](CycNum a, CycNum b, CycNum c, CycNum d) {
      return SigmaMatrix{{SigmaPoly(a), SigmaPoly(b)}, {SigmaPoly(c), SigmaPoly(d)}};
    };
    SigmaMatrix S = mat2(CycNum(1), CycNum(2), CycNum(0), CycNum(1));
    SigmaMatrix T = mat2(CycNum(3), CycNum(0), CycNum(1), CycNum(1));
    SigmaMatrix Tinv = mat2(CycNum(Rational(1, 3)), CycNum(0), CycNum(Rational(-1, 3)), CycNum(1));
    SigmaMatrix Sinv = mat2(CycNum(1), CycNum(-2), CycNum(0), CycNum(1));
    MFPair moved{matmul(matmul(S, x1.phi), T), matmul(matmul(Tinv, x1.psi), Sinv)};
    check_mf_identity(moved, list.delta, "conjugated");
    CHECK(constant_equivalent(moved, x1));
    CHECK(constant_equivalent(x1, moved));
    // still inequivalent to a different normal form
    CHECK_FALSE(constant_equivalent(moved, list.find("X_2")->mf));
  }

  SUBCASE("K_j is equivalent to K_{p-j}") {
    CHECK(constant_equivalent(kpair_at(3, 4), list.find("K_1")->mf));
    CHECK_FALSE(constant_equivalent(kpair_at(3, 4), list.find("K_2")->mf));
  }

  SUBCASE("the swapped X pair lands at index p + 1 - j") {
    const MFPair& x1 = list.find("X_1")->mf;
    MFPair y1{x1.psi, x1.phi};
    CHECK(constant_equivalent(y1, list.find("X_4")->mf));
    CHECK_FALSE(constant_equivalent(y1, list.find("X_1")->mf));
  }

  SUBCASE("size mismatch is never equivalent") {
    CHECK_FALSE(constant_equivalent(list.find("A")->mf, list.find("X_1")->mf));
  }
}

TEST_CASE("classify_block") {
  SUBCASE("each canonical entry classifies as itself") {
    for (auto [m, p] : {std::pair{4u, 1u}, std::pair{8u, 4u}, std::pair{9u, 3u},
                        std::pair{6u, 6u}}) {
      CAPTURE(m);
      CAPTURE(p);
      auto list = canonical_list(m, p);
      for (const auto& e : list.entries) {
        CAPTURE(e.name);
        CHECK(classify_block(e.mf, list, "self") == e.name);
      }
    }
  }
  SUBCASE("an alien block throws Unclassified") {
    auto list = canonical_list(8, 4);
    MFPair alien;
    alien.phi = {{s(2, 0)}};                      // sigma1^2
    alien.psi = {{s(0, 2) - s(3, 0, CycNum(4))}}; // would need delta = s1^2 * (...)
    CHECK_THROWS_AS(classify_block(alien, list, "alien"), Unclassified);
  }
}

TEST_CASE("predicted multisets") {
  SUBCASE("p = 1") {
    auto pr = theorem_predicted_multiset(4, 1);
    CHECK(pr.regime == "A3");
    CHECK(pr.classes ==
          std::map<std::string, unsigned>{{"A", 1}, {"B", 9}, {"X", 6}, {"RmodDelta", 1}});
    CHECK(pr.free_count == 9);

    auto pr2 = theorem_predicted_multiset(2, 1);
    CHECK(pr2.classes ==
          std::map<std::string, unsigned>{{"A", 1}, {"B", 1}, {"X", 2}, {"RmodDelta", 1}});
    CHECK(pr2.free_count == 1);
  }
  SUBCASE("1 < p < m odd") {
    auto pr = theorem_predicted_multiset(6, 3);
    CHECK(pr.regime == "D5");
    CHECK(pr.classes == std::map<std::string, unsigned>{{"A", 1},
                                                        {"B", 1},
                                                        {"RmodDelta", 1},
                                                        {"X_1", 2},
                                                        {"X_2", 2},
                                                        {"X_3", 2},
                                                        {"K_1", 2},
                                                        {"N_1", 2}});
    CHECK(pr.free_count == 1);
  }
  SUBCASE("1 < p < m even: branch classes, no K/N at p = 2") {
    auto pr = theorem_predicted_multiset(8, 2);
    CHECK(pr.regime == "D4");
    CHECK(pr.classes == std::map<std::string, unsigned>{{"A", 1},
                                                        {"B", 9},
                                                        {"RmodDelta", 1},
                                                        {"X_1", 6},
                                                        {"X_2", 6},
                                                        {"C_plus", 1},
                                                        {"C_minus", 1},
                                                        {"D_plus", 9},
                                                        {"D_minus", 9}});
    CHECK(pr.free_count == 9);

    auto pr84 = theorem_predicted_multiset(8, 4);
    CHECK(pr84.regime == "D6");
    CHECK(pr84.classes == std::map<std::string, unsigned>{{"A", 1},
                                                          {"B", 1},
                                                          {"RmodDelta", 1},
                                                          {"X_1", 2},
                                                          {"X_2", 2},
                                                          {"X_3", 2},
                                                          {"X_4", 2},
                                                          {"K_1", 2},
                                                          {"N_1", 2},
                                                          {"C_plus", 1},
                                                          {"C_minus", 1},
                                                          {"D_plus", 1},
                                                          {"D_minus", 1}});
  }
  SUBCASE("p = m") {
    auto odd = theorem_predicted_multiset(5, 5);
    CHECK(odd.regime == "A4");
    CHECK(odd.classes ==
          std::map<std::string, unsigned>{{"X_1", 2}, {"X_2", 2}, {"RmodDelta", 1}});
    CHECK(odd.free_count == 1);

    auto even = theorem_predicted_multiset(4, 4);
    CHECK(even.regime == "A3");
    CHECK(even.classes == std::map<std::string, unsigned>{
                              {"X_1", 2}, {"N_plus", 1}, {"N_minus", 1}, {"RmodDelta", 1}});
    CHECK(even.free_count == 1);
  }
  SUBCASE("inadmissible pairs are rejected") {
    CHECK_THROWS_AS(theorem_predicted_multiset(2, 2), InadmissiblePair);
    CHECK_THROWS_AS(theorem_predicted_multiset(6, 4), InadmissiblePair);
  }
}

TEST_CASE("decompose_group: the worked example at (4,1)") {
  Group g(4, 1);
  RepTable t(g);
  Decomposition d = decompose_group(g, t);
  CHECK(d.regime == "A3");
  CHECK(d.aggregate == std::map<std::string, unsigned>{
                           {"A", 1}, {"B", 9}, {"X", 6}, {"RmodDelta", 1}, {"FreeR", 9}});
  // one component per irrep, each carrying dim^2-sized factorization data
  CHECK(d.components.size() == t.irreps().size());
  for (const auto& c : d.components) {
    CHECK(c.mf.size() == c.dim * c.dim);
    CHECK(c.src_degrees.size() == c.mf.size());
  }
  // theorem check agrees end to end
  auto check = check_against_theorem(d, theorem_predicted_multiset(4, 1));
  CHECK(check.match);
  CHECK(check.free_found == 9);
  CHECK(check.free_predicted == 9);
  CHECK(check.diffs.empty());
}

TEST_CASE("decompose_group: verbatim component table at (6,3)") {
  Group g(6, 3);
  RepTable t(g);
  Decomposition d = decompose_group(g, t);
  std::map<std::string, std::vector<std::string>> got;
  for (const auto& c : d.components) got[c.label] = sorted(c.classes);
  std::map<std::string, std::vector<std::string>> want = {
      {"2@0", {"FreeR"}},
      {"2@1", {"A"}},
      {"11@0", {"B"}},
      {"11@1", {"RmodDelta"}},
      {"1@0,1@1", {"X_1", "X_1"}},
      {"1@0,1@2", {"K_1", "K_1"}},
      {"1@0,1@3", {"X_2", "X_2"}},
      {"1@0,1@5", {"X_3", "X_3"}},
      {"1@1,1@3", {"N_1", "N_1"}},
  };
  CHECK(got == want);

  // det twist pairs the components: source 1@0,1@1 lands in 1@0,1@5
  for (const auto& c : d.components)
    if (c.label == "1@0,1@1") CHECK(c.twist_label == "1@0,1@5");
}

TEST_CASE("decompose_group at (8,4): even-regime expansions appear") {
  Group g(8, 4);
  RepTable t(g);
  Decomposition d = decompose_group(g, t);
  CHECK(d.regime == "D6");
  auto check = check_against_theorem(d, theorem_predicted_multiset(8, 4));
  CHECK(check.match);
  CHECK(check.diffs.empty());
  // the aggregate has been expanded: K_2 / N_2 never appear, their branch
  // splits do
  CHECK(d.aggregate.count("K_2") == 0);
  CHECK(d.aggregate.count("N_2") == 0);
  CHECK(d.aggregate.at("C_plus") == 1);
  CHECK(d.aggregate.at("D_plus") == 1);
}

TEST_CASE("check_against_theorem reports mismatches without free counts") {
  Decomposition d;
  d.aggregate = {{"A", 1}, {"B", 2}, {"FreeR", 5}};
  PredictedMultiset pred;
  pred.classes = {{"A", 1}, {"B", 3}};
  pred.free_count = 5;
  auto r = check_against_theorem(d, pred);
  CHECK_FALSE(r.match);
  REQUIRE(r.diffs.size() == 1);
  CHECK(r.diffs[0] == "B: found 2, predicted 3");
  CHECK(r.free_found == 5);

  // matching classes with a free deficit: match stays true, diff recorded
  d.aggregate = {{"A", 1}, {"B", 3}, {"FreeR", 4}};
  r = check_against_theorem(d, pred);
  CHECK(r.match);
  REQUIRE(r.diffs.size() == 1);
  CHECK(r.diffs[0].find("FreeR") == 0);

  // exact agreement: no diffs
  d.aggregate = {{"A", 1}, {"B", 3}, {"FreeR", 5}};
  r = check_against_theorem(d, pred);
  CHECK(r.match);
  CHECK(r.diffs.empty());
}
