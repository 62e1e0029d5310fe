#include <doctest.h>

#include <map>

#include "padiclie/chevalley.hpp"
#include "padiclie/errors.hpp"

using namespace padiclie;

namespace {
const std::vector<std::string> kTypes = {"A1", "A2", "A3", "A4", "B2", "C3", "D4"};
}

TEST_CASE("A1 is the standard sl2") {
  ChevalleyPtr g = build_chevalley("A1");
  const LieAlgebra& lie = *g->lie;
  int f = g->f_index(0), h = g->h_index(0), e = g->e_index(0);
  CHECK(lie.bracket(e, f) == LieAlgebra::SparseVec{{h, Rat(1)}});
  CHECK(lie.bracket(h, e) == LieAlgebra::SparseVec{{e, Rat(2)}});
  CHECK(lie.bracket(h, f) == LieAlgebra::SparseVec{{f, Rat(-2)}});
}

TEST_CASE("A2 root vector products carry unit structure constants") {
  ChevalleyPtr g = build_chevalley("A2");
  const LieAlgebra& lie = *g->lie;
  // [e_{a1}, e_{a2}] = +- e_{a1+a2} in the matrix-unit model
  int e1 = g->e_index(0), e2 = g->e_index(1), e12 = g->e_index(2);
  auto br = lie.bracket(e1, e2);
  REQUIRE(br.size() == 1);
  CHECK(br[0].first == e12);
  CHECK((br[0].second == 1 || br[0].second == -1));
}

TEST_CASE("torus is abelian in every type") {
  for (const auto& label : kTypes) {
    ChevalleyPtr g = build_chevalley(label);
    for (int i = 0; i < g->rank(); ++i)
      for (int j = 0; j < g->rank(); ++j)
        CHECK(g->lie->bracket(g->h_index(i), g->h_index(j)).empty());
  }
}

TEST_CASE("jacobi, integrality, commutator oracle across types") {
  for (const auto& label : kTypes) {
    ChevalleyPtr g = build_chevalley(label);
    CAPTURE(label);
    const LieAlgebra& lie = *g->lie;
    const int dim = lie.dim();
    CHECK(lie.all_integer_constants());
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j) {
        // bracket table vs the defining matrix commutator
        QMatrix want = g->rep[i] * g->rep[j] - g->rep[j] * g->rep[i];
        QMatrix have(want.rows(), want.cols());
        for (const auto& [k, c] : lie.bracket(i, j)) have = have + g->rep[k].scaled(c);
        CHECK(want == have);
        for (int k = j; k < dim; ++k) CHECK(lie.jacobi_holds(i, j, k));
      }
  }
}

TEST_CASE("cartan adjoint eigenvalues match the root datum") {
  for (const auto& label : kTypes) {
    ChevalleyPtr g = build_chevalley(label);
    CAPTURE(label);
    for (int i = 0; i < g->rank(); ++i)
      for (int k = 0; k < g->num_positive(); ++k) {
        long a = g->datum.root_pairing(g->datum.positive_roots[k], i);
        auto bre = g->lie->bracket(g->h_index(i), g->e_index(k));
        auto brf = g->lie->bracket(g->h_index(i), g->f_index(k));
        if (a == 0) {
          CHECK(bre.empty());
          CHECK(brf.empty());
        } else {
          REQUIRE(bre.size() == 1);
          CHECK(bre[0] == std::pair<int, Rat>(g->e_index(k), Rat(a)));
          REQUIRE(brf.size() == 1);
          CHECK(brf[0] == std::pair<int, Rat>(g->f_index(k), Rat(-a)));
        }
      }
  }
}

TEST_CASE("sl2 triples normalized for every positive root") {
  for (const auto& label : kTypes) {
    ChevalleyPtr g = build_chevalley(label);
    CAPTURE(label);
    for (int k = 0; k < g->num_positive(); ++k) {
      // h_k := [e_k, f_k] lies in the torus and alpha_k(h_k) = 2
      auto br = g->lie->bracket(g->e_index(k), g->f_index(k));
      Rat pairing(0);
      for (const auto& [b, c] : br) {
        CHECK(g->is_h(b));
        pairing += c * g->weight_on(g->e_index(k), b - g->num_positive());
      }
      CHECK(pairing == 2);
    }
  }
}

TEST_CASE("bracket of vectors is antisymmetric and bilinear") {
  ChevalleyPtr g = build_chevalley("B2");
  const LieAlgebra& lie = *g->lie;
  std::vector<Rat> x(lie.dim(), Rat(0)), y(lie.dim(), Rat(0));
  x[0] = Rat(2, 3);
  x[5] = Rat(-1);
  y[1] = Rat(5);
  y[7] = Rat(1, 2);
  auto xy = lie.bracket(x, y);
  auto yx = lie.bracket(y, x);
  for (int i = 0; i < lie.dim(); ++i) CHECK(xy[i] == -yx[i]);
  auto xx = lie.bracket(x, x);
  for (int i = 0; i < lie.dim(); ++i) CHECK(xx[i] == 0);
}

TEST_CASE("G2 has no matrix model") {
  CHECK_THROWS_AS(build_chevalley("G2"), UnsupportedType);
}

TEST_CASE("A1 casimir normalization") {
  ChevalleyPtr g = build_chevalley("A1");
  CasimirData cas = quadratic_casimir(*g);
  // h^2 + 2h + 4fe in the (f, h, e) order
  int f = g->f_index(0), h = g->h_index(0), e = g->e_index(0);
  std::map<std::pair<int, int>, Rat> quad(cas.quadratic.begin(), cas.quadratic.end());
  CHECK(quad[{h, h}] == 1);
  CHECK(quad[{f, e}] == 4);
  REQUIRE(cas.linear.size() == 1);
  CHECK(cas.linear[0] == std::pair<int, Rat>(h, Rat(2)));
}
