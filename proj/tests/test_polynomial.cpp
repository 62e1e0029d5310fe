#include <doctest.h>

#include <random>

#include "padiclie/polynomial.hpp"

using namespace padiclie;

TEST_CASE("polynomial arithmetic and evaluation") {
  Polynomial x = Polynomial::variable(2, 0);
  Polynomial y = Polynomial::variable(2, 1);
  Polynomial f = x * x - y + Polynomial::constant(2, Rat(3, 2));
  CHECK(f.degree_in(0) == 2);
  CHECK(f.degree_in(1) == 1);
  CHECK(f.evaluate({Rat(2), Rat(1)}) == Rat(4) - Rat(1) + Rat(3, 2));
  Polynomial zero = f - f;
  CHECK(zero.is_zero());
}

TEST_CASE("grid vanishing on fixed instances") {
  // zero polynomial
  {
    Polynomial f(2);
    std::vector<std::vector<Rat>> grids = {{Rat(0), Rat(1)}, {Rat(0), Rat(1)}};
    auto r = grid_vanishing_check(f, grids);
    CHECK(r.vanishes);
    CHECK(r.is_zero);
  }
  // x(x-1) on {0,1} x {0}: vanishes, not zero, grid below the degree
  {
    Polynomial f(2);
    f.add_term({2, 0}, Rat(1));
    f.add_term({1, 0}, Rat(-1));
    auto r = grid_vanishing_check(f, {{Rat(0), Rat(1)}, {Rat(0)}});
    CHECK(r.vanishes);
    CHECK_FALSE(r.is_zero);
    CHECK_FALSE(r.certificate.sufficient);
  }
  // x1 x2 - x2 = x2 (x1 - 1) on {0..3}^2: non-vanishing with a witness
  {
    Polynomial f(2);
    f.add_term({1, 1}, Rat(1));
    f.add_term({0, 1}, Rat(-1));
    std::vector<Rat> grid = {Rat(0), Rat(1), Rat(2), Rat(3)};
    auto r = grid_vanishing_check(f, {grid, grid});
    CHECK_FALSE(r.vanishes);
    REQUIRE(r.witness_point.has_value());
    CHECK(f.evaluate(*r.witness_point) == r.witness_value);
    CHECK(r.witness_value != 0);
    CHECK(f.evaluate({Rat(2), Rat(2)}) == Rat(2));
    CHECK(f.evaluate({Rat(2), Rat(1)}) == Rat(1));
  }
}

TEST_CASE("grid vanishing equivalence on random polynomials") {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<long> coeff(-9, 9), deg(0, 4), nvars(1, 3), terms(1, 5);
  for (int t = 0; t < 60; ++t) {
    int nv = static_cast<int>(nvars(gen));
    Polynomial f(nv);
    long nt = terms(gen);
    for (long s = 0; s < nt; ++s) {
      Polynomial::Exp e(nv, 0);
      for (int j = 0; j < nv; ++j) e[j] = static_cast<std::uint16_t>(deg(gen));
      f.add_term(e, Rat(coeff(gen)));
    }
    std::vector<std::vector<Rat>> grids(nv);
    for (int j = 0; j < nv; ++j)
      for (long v = 0; v < 6; ++v) grids[j].push_back(Rat(v));
    auto r = grid_vanishing_check(f, grids);
    CHECK(r.certificate.sufficient);
    CHECK(r.vanishes == f.is_zero());
  }
}

TEST_CASE("interpolation certificate lists the points driving the induction") {
  Polynomial f(2);
  f.add_term({2, 1}, Rat(1));
  std::vector<Rat> grid = {Rat(0), Rat(1), Rat(2), Rat(3)};
  auto r = grid_vanishing_check(f, {grid, grid});
  REQUIRE(r.certificate.used_points.size() == 2);
  CHECK(r.certificate.used_points[0] == std::vector<Rat>{Rat(0), Rat(1), Rat(2)});
  CHECK(r.certificate.used_points[1] == std::vector<Rat>{Rat(0), Rat(1)});
}
