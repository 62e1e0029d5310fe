#include <doctest.h>

#include <random>

#include "padiclie/linalg.hpp"

using namespace padiclie;

TEST_CASE("rank and kernel of a fixed matrix") {
  // rows: (1,2,3), (2,4,6), (0,1,1)
  QMatrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(0, 2) = 3;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  m.at(1, 2) = 6;
  m.at(2, 1) = 1;
  m.at(2, 2) = 1;
  CHECK(rank(m) == 2);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  // m * v = 0 for the basis vector
  for (std::size_t i = 0; i < 3; ++i) {
    Rat acc(0);
    for (std::size_t j = 0; j < 3; ++j) acc += m.at(i, j) * ker[0][j];
    CHECK(acc == 0);
  }
}

TEST_CASE("solve recovers exact solutions") {
  QMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(1, 1) = 3;
  std::vector<Rat> b = {Rat(1), Rat(0)};
  std::vector<Rat> x;
  REQUIRE(solve(m, b, x));
  CHECK(x[0] == Rat(3, 5));
  CHECK(x[1] == Rat(-1, 5));
}

TEST_CASE("determinant and adjugate against the defining identity") {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + t % 4;
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(gen);
    Int det = determinant(m);
    QMatrix adj = adjugate(m);
    QMatrix prod = m * adj;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(prod.at(i, j) == (i == j ? Rat(det) : Rat(0)));
  }
}

TEST_CASE("kernel vectors are primitive integer vectors") {
  QMatrix m(1, 3);
  m.at(0, 0) = Rat(1, 2);
  m.at(0, 1) = Rat(1, 3);
  m.at(0, 2) = 0;
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    Int g(0);
    for (const auto& x : v) {
      CHECK(x.get_den() == 1);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    CHECK(g == 1);
  }
}

TEST_CASE("padic elimination gives elementary divisor exponents") {
  // diag(1, 5, 25) in disguise
  QMatrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(0, 2) = 3;
  m.at(1, 0) = 0;
  m.at(1, 1) = 5;
  m.at(1, 2) = 10;
  m.at(2, 0) = 0;
  m.at(2, 1) = 0;
  m.at(2, 2) = 25;
  PadicElimination e = padic_elementary_divisors(m, 5);
  CHECK(e.rank == 3);
  CHECK(e.pivot_valuations == std::vector<long>{0, 1, 2});

  QMatrix singular(2, 2);
  singular.at(0, 0) = 5;
  singular.at(0, 1) = 10;
  singular.at(1, 0) = 1;
  singular.at(1, 1) = 2;
  PadicElimination e2 = padic_elementary_divisors(singular, 5);
  CHECK(e2.rank == 1);
  CHECK(e2.pivot_valuations == std::vector<long>{0});
}

TEST_CASE("prime field rref and kernel") {
  FpMatrix m(2, 3, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(0, 2) = 0;
  m.at(1, 0) = 2;
  m.at(1, 1) = 1;
  m.at(1, 2) = 1;
  CHECK(rank(m) == 2);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  // check m v = 0 mod 3
  for (std::size_t i = 0; i < 2; ++i) {
    unsigned long acc = 0;
    for (std::size_t j = 0; j < 3; ++j) acc += m.at(i, j) * ker[0][j];
    CHECK(acc % 3 == 0);
  }
}
