#include <doctest.h>

#include <algorithm>

#include "padiclie/errors.hpp"
#include "padiclie/rootdata.hpp"

using namespace padiclie;

namespace {
const std::vector<std::string> kTypes = {"A1", "A2", "A3", "A4", "B2", "C3", "D4", "G2"};

long classical_count(const RootDatum& d) {
  switch (d.family) {
    case Family::A: return static_cast<long>(d.rank) * (d.rank + 1) / 2;
    case Family::B:
    case Family::C: return static_cast<long>(d.rank) * d.rank;
    case Family::D: return static_cast<long>(d.rank) * (d.rank - 1);
    case Family::G: return 6;
  }
  return -1;
}
}  // namespace

TEST_CASE("A1 and A2 fixed data") {
  RootDatum a1 = build_root_datum("A1");
  CHECK(a1.cartan == std::vector<std::vector<long>>{{2}});
  CHECK(a1.det == 2);
  CHECK(a1.adjugate == std::vector<std::vector<long>>{{1}});
  CHECK(a1.positive_roots == std::vector<std::vector<long>>{{1}});

  RootDatum a2 = build_root_datum("A2");
  CHECK(a2.cartan == std::vector<std::vector<long>>{{2, -1}, {-1, 2}});
  CHECK(a2.det == 3);
  // oracle: cofactor expansion of [[2,-1],[-1,2]]
  CHECK(a2.adjugate == std::vector<std::vector<long>>{{2, 1}, {1, 2}});
  CHECK(a2.positive_roots ==
        std::vector<std::vector<long>>{{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("G2 determinant and adjugate") {
  RootDatum g2 = build_root_datum("G2");
  CHECK(g2.det == 1);
  for (const auto& row : g2.adjugate)
    for (long x : row) CHECK(x >= 0);
  CHECK(g2.num_positive() == 6);
}

TEST_CASE("whitelist rejects everything else") {
  CHECK_THROWS_AS(build_root_datum("B3"), UnsupportedType);
  CHECK_THROWS_AS(build_root_datum("C2"), UnsupportedType);
  CHECK_THROWS_AS(build_root_datum("E6"), UnsupportedType);
  CHECK_THROWS_AS(build_root_datum(Family::A, 5), UnsupportedType);
}

TEST_CASE("adjugate identity and nonnegativity across the whitelist") {
  for (const auto& label : kTypes) {
    RootDatum d = build_root_datum(label);
    CAPTURE(label);
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j) {
        long cc = 0, cc2 = 0;
        for (int k = 0; k < d.rank; ++k) {
          cc += d.cartan[i][k] * d.adjugate[k][j];
          cc2 += d.adjugate[i][k] * d.cartan[k][j];
        }
        CHECK(cc == (i == j ? d.det : 0));
        CHECK(cc2 == (i == j ? d.det : 0));
        CHECK(d.adjugate[i][j] >= 0);
      }
    CHECK(d.num_positive() == classical_count(d));
    // simple roots first, in index order
    for (int i = 0; i < d.rank; ++i) {
      std::vector<long> e(d.rank, 0);
      e[i] = 1;
      CHECK(d.positive_roots[i] == e);
    }
    // closure sanity: every positive root has nonnegative coordinates
    for (const auto& r : d.positive_roots)
      for (long c : r) CHECK(c >= 0);
  }
}

TEST_CASE("adjugate weight combination") {
  RootDatum a2 = build_root_datum("A2");
  CHECK(adjugate_weight_combination(a2, {1, 0}) == std::vector<long>{2, 1});
  CHECK(adjugate_weight_combination(a2, {0, 0}) == std::vector<long>{0, 0});
  RootDatum a1 = build_root_datum("A1");
  CHECK(adjugate_weight_combination(a1, {1}) == std::vector<long>{1});  // 2 omega_1 = alpha_1
}

TEST_CASE("longest element across the whitelist") {
  for (const auto& label : kTypes) {
    RootDatum d = build_root_datum(label);
    CAPTURE(label);
    WeylElement w0 = longest_element(d);
    CHECK(w0.word.size() == static_cast<std::size_t>(d.num_positive()));
    for (const auto& r : d.positive_roots) {
      std::vector<long> img = apply_weyl(w0, r);
      for (long& x : img) x = -x;
      CHECK(d.index_of_root(img) >= 0);
    }
  }
}

TEST_CASE("longest element fixed instances") {
  RootDatum a1 = build_root_datum("A1");
  WeylElement w1 = longest_element(a1);
  CHECK(w1.word.size() == 1);
  CHECK(apply_weyl(w1, {1}) == std::vector<long>{-1});

  RootDatum a2 = build_root_datum("A2");
  WeylElement w2 = longest_element(a2);
  CHECK(w2.word.size() == 3);
  CHECK(apply_weyl(w2, {1, 0}) == std::vector<long>{0, -1});  // alpha1 -> -alpha2

  RootDatum b2 = build_root_datum("B2");
  WeylElement wb = longest_element(b2);
  CHECK(wb.word.size() == 4);
  CHECK(wb.matrix == std::vector<std::vector<long>>{{-1, 0}, {0, -1}});
}

TEST_CASE("weight pairing evaluates fundamental coordinates") {
  RootDatum a2 = build_root_datum("A2");
  // alpha1 in fundamental coordinates is (2, -1)
  std::vector<long> alpha1 = {1, 0};
  std::vector<long> fund = a2.root_to_weight_coords(alpha1);
  CHECK(fund == std::vector<long>{2, -1});
  std::vector<Rat> w = {Rat(2), Rat(-1)};
  CHECK(weight_pairing(w, 1) == Rat(-1));
  CHECK(weight_pairing(std::vector<Rat>{Rat(0), Rat(0)}, 0) == 0);
  // omega_1 pairs to delta_1j
  CHECK(weight_pairing(std::vector<Rat>{Rat(1), Rat(0)}, 0) == 1);
}

TEST_CASE("weyl search budget") {
  RootDatum d4 = build_root_datum("D4");
  CHECK_THROWS_AS(longest_element(d4, 10), SearchBudgetExceeded);
}
