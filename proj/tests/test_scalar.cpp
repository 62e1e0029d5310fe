#include <doctest.h>

#include <random>

#include "padiclie/errors.hpp"
#include "padiclie/scalar.hpp"

using namespace padiclie;

TEST_CASE("valuation on fixed instances") {
  CHECK(valuation(Rat(50), 5) == Valuation::finite(2));  // 50 = 2 * 5^2
  CHECK(valuation(Rat(0), 5) == Valuation::infinity());
  CHECK(valuation(Rat(3, 25), 5) == Valuation::finite(-2));
  CHECK(valuation(Rat(7), 5) == Valuation::finite(0));
  CHECK(valuation(Rat(-125), 5) == Valuation::finite(3));
}

TEST_CASE("infinity sentinel sits above every finite value") {
  CHECK(Valuation::infinity() > Valuation::finite(1000000));
  CHECK(min(Valuation::infinity(), Valuation::finite(-3)) == Valuation::finite(-3));
  CHECK(Valuation::infinity() + Valuation::finite(5) == Valuation::infinity());
}

TEST_CASE("valuation laws on random rationals") {
  std::mt19937_64 gen(42);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 500);
  for (int t = 0; t < 400; ++t) {
    Rat x(num(gen), den(gen)), y(num(gen), den(gen));
    x.canonicalize();
    y.canonicalize();
    for (unsigned long p : {3ul, 5ul, 7ul}) {
      CHECK(valuation(x * y, p) == valuation(x, p) + valuation(y, p));
      CHECK(!(valuation(x + y, p) < min(valuation(x, p), valuation(y, p))));
    }
  }
}

TEST_CASE("reduce on fixed instances") {
  CHECK(reduce_mod(Rat(7), 5, 1) == 2);
  // oracle: 2 * 13 = 26 = 1 mod 25
  CHECK(reduce_mod(Rat(1, 2), 5, 2) == 13);
  CHECK_THROWS_AS(reduce_mod(Rat(1, 5), 5, 2), NegativeValuation);
  CHECK(reduce_mod(Rat(-1), 5, 2) == 24);
}

TEST_CASE("reduce is a ring homomorphism on the valuation ring") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<long> num(-400, 400), den(1, 60);
  const unsigned long p = 5;
  const int M = 3;
  Int pm = p_power(p, M);
  int done = 0;
  while (done < 200) {
    Rat x(num(gen), den(gen)), y(num(gen), den(gen));
    x.canonicalize();
    y.canonicalize();
    Valuation vx = valuation(x, p), vy = valuation(y, p);
    if ((vx.is_finite() && vx.v < 0) || (vy.is_finite() && vy.v < 0)) continue;
    ++done;
    CHECK(reduce_mod(x + y, p, M) == (reduce_mod(x, p, M) + reduce_mod(y, p, M)) % pm);
    CHECK(reduce_mod(x * y, p, M) == (reduce_mod(x, p, M) * reduce_mod(y, p, M)) % pm);
  }
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(PadicContext(4, 3), ConfigInvalid);
  CHECK_THROWS_AS(PadicContext(2, 3), ConfigInvalid);
  CHECK_THROWS_AS(PadicContext(5, 0), ConfigInvalid);
  PadicContext ctx(5, 6);
  CHECK(ctx.p == 5);
}

TEST_CASE("rational string round trip") {
  CHECK(to_string(Rat(-7, 3)) == "-7/3");
  CHECK(rat_from_string("-7/3") == Rat(-7, 3));
  CHECK(rat_from_string("42") == Rat(42));
}
