// Acceptance suite: one criterion per line, exact budgets pinned in code.
// Exit status 0 only when every criterion passes inside its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "padiclie/errors.hpp"
#include "padiclie/iwasawa.hpp"
#include "padiclie/pbw.hpp"
#include "padiclie/polynomial.hpp"
#include "padiclie/rootdata.hpp"
#include "padiclie/runtime.hpp"
#include "padiclie/smash.hpp"
#include "padiclie/verma.hpp"

using namespace padiclie;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

PBWElement random_element(std::mt19937_64& gen, const LiePtr& lie, int deg, int support,
                          long height, bool integer = false) {
  std::uniform_int_distribution<long> num(-height, height), den(1, height), d(0, deg),
      b(0, lie->dim() - 1);
  PBWElement out(lie);
  for (int s = 0; s < support; ++s) {
    Mono m(static_cast<std::size_t>(lie->dim()), 0);
    long dd = d(gen);
    for (long i = 0; i < dd; ++i) ++m[static_cast<std::size_t>(b(gen))];
    Rat c(num(gen), integer ? 1 : den(gen));
    c.canonicalize();
    out.add_term(m, c);
  }
  if (out.is_zero()) out = PBWElement::unit(lie);
  return out;
}

std::vector<VermaVector::Beta> beta_box(int m, long bound) {
  std::vector<VermaVector::Beta> out;
  VermaVector::Beta cur(static_cast<std::size_t>(m), 0);
  std::function<void(int, long)> rec = [&](int from, long budget) {
    out.push_back(cur);
    for (int i = from; i < m && budget > 0; ++i) {
      ++cur[i];
      rec(i, budget - 1);
      --cur[i];
    }
  };
  rec(0, bound);
  return out;
}

// ---- criterion 1: root data ------------------------------------------------

Outcome criterion_rootdata() {
  for (const std::string label : {"A1", "A2", "A3", "A4", "B2", "C3", "D4", "G2"}) {
    RootDatum d = build_root_datum(label);
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j) {
        long cc = 0;
        for (int k = 0; k < d.rank; ++k) cc += d.cartan[i][k] * d.adjugate[k][j];
        if (cc != (i == j ? d.det : 0)) return {false, label + ": CC* != dI"};
        if (d.adjugate[i][j] < 0) return {false, label + ": negative adjugate entry"};
      }
    WeylElement w0 = longest_element(d);
    for (const auto& r : d.positive_roots) {
      std::vector<long> img = apply_weyl(w0, r);
      for (long& x : img) x = -x;
      if (d.index_of_root(img) < 0) return {false, label + ": w0 does not negate a root"};
    }
    long expect = 0;
    switch (d.family) {
      case Family::A: expect = static_cast<long>(d.rank) * (d.rank + 1) / 2; break;
      case Family::B:
      case Family::C: expect = static_cast<long>(d.rank) * d.rank; break;
      case Family::D: expect = static_cast<long>(d.rank) * (d.rank - 1); break;
      case Family::G: expect = 6; break;
    }
    if (d.num_positive() != expect) return {false, label + ": positive root count"};
  }
  return {true, "8 types"};
}

// ---- criterion 2: Lie algebras ----------------------------------------------

Outcome criterion_lie() {
  long triples = 0, pairs = 0;
  for (const std::string label : {"A1", "A2", "A3", "B2", "C3", "D4"}) {
    ChevalleyPtr g = build_chevalley(label);
    const LieAlgebra& lie = *g->lie;
    const int dim = lie.dim();
    bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok) reduction(+ : triples) if (runtime::parallel_enabled())
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j)
        for (int k = j; k < dim; ++k) {
          ok = ok && lie.jacobi_holds(i, j, k);
          ++triples;
        }
    if (!ok) return {false, label + ": Jacobi identity fails"};
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        QMatrix want = g->rep[i] * g->rep[j] - g->rep[j] * g->rep[i];
        QMatrix have(want.rows(), want.cols());
        for (const auto& [k, c] : lie.bracket(i, j)) have = have + g->rep[k].scaled(c);
        if (!(want == have)) return {false, label + ": bracket vs matrix commutator"};
        ++pairs;
      }
  }
  return {true, std::to_string(triples) + " triples, " + std::to_string(pairs) + " pairs"};
}

// ---- criterion 3: PBW arithmetic ---------------------------------------------

Outcome criterion_pbw() {
  const long height = 1000000;
  std::mt19937_64 gen(2024);
  MultiplyOptions left, right;
  left.strategy = Strategy::LeftmostSwap;
  right.strategy = Strategy::RightmostSwap;
  for (const std::string label : {"A2", "B2"}) {
    ChevalleyPtr g = build_chevalley(label);
    for (int t = 0; t < 100; ++t) {
      PBWElement a = random_element(gen, g->lie, 3, 3, height);
      PBWElement b = random_element(gen, g->lie, 3, 3, height);
      PBWElement c = random_element(gen, g->lie, 3, 3, height);
      if (!(multiply(multiply(a, b), c) == multiply(a, multiply(b, c))))
        return {false, label + ": associativity violated at t=" + std::to_string(t)};
    }
    for (int t = 0; t < 50; ++t) {
      PBWElement a = random_element(gen, g->lie, 3, 3, height);
      PBWElement b = random_element(gen, g->lie, 3, 3, height);
      if (!(multiply(a, b, left) == multiply(a, b, right)))
        return {false, label + ": straightening strategies disagree"};
      PBWElement comm = multiply(a, b) - multiply(b, a);
      if (!comm.is_zero() &&
          filtration_degree(comm) > filtration_degree(a) + filtration_degree(b) - 1)
        return {false, label + ": gr-commutativity degree drop fails"};
    }
  }
  return {true, "200 associativity triples, 100 confluence / 100 degree-drop pairs"};
}

// ---- criterion 4: exponential adjoint ----------------------------------------

Outcome criterion_adjoint() {
  const unsigned long p = 5;
  std::mt19937_64 gen(77);
  ChevalleyPtr g = build_chevalley("A2");
  std::vector<int> roots;
  for (int k = 0; k < g->num_positive(); ++k) {
    roots.push_back(g->e_index(k));
    roots.push_back(g->f_index(k));
  }
  std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);

  for (int t = 0; t < 100; ++t) {
    int x = roots[pick(gen)];
    Rat r(t % 4 + 1);
    PBWElement a = random_element(gen, g->lie, 2, 2, 50);
    PBWElement b = random_element(gen, g->lie, 2, 2, 50);
    if (!(exp_adjoint(multiply(a, b), x, r) ==
          multiply(exp_adjoint(a, x, r), exp_adjoint(b, x, r))))
      return {false, "multiplicativity fails at t=" + std::to_string(t)};
  }
  for (int t = 0; t < 10; ++t) {
    int x = roots[pick(gen)];
    PBWElement a = random_element(gen, g->lie, 2, 2, 50);
    for (const Rat& r : {Rat(1), Rat(2), Rat(static_cast<long>(p))})
      for (const Rat& s : {Rat(1), Rat(2), Rat(static_cast<long>(p))})
        if (!(exp_adjoint(exp_adjoint(a, x, s), x, r) == exp_adjoint(a, x, r + s)))
          return {false, "one-parameter law fails"};
  }
  {
    ChevalleyPtr a1 = build_chevalley("A1");
    const LiePtr& lie = a1->lie;
    int f = a1->f_index(0), h = a1->h_index(0), e = a1->e_index(0);
    for (const Rat& r : {Rat(1), Rat(2), Rat(5)}) {
      PBWElement img_f = exp_adjoint(PBWElement::basis(lie, f), e, r);
      PBWElement want_f = PBWElement::basis(lie, f) + PBWElement::basis(lie, h).scaled(r) +
                          PBWElement::basis(lie, e).scaled(-r * r);
      PBWElement img_h = exp_adjoint(PBWElement::basis(lie, h), e, r);
      PBWElement want_h = PBWElement::basis(lie, h) + PBWElement::basis(lie, e).scaled(-2 * r);
      PBWElement img_e = exp_adjoint(PBWElement::basis(lie, e), e, r);
      if (!(img_f == want_f && img_h == want_h && img_e == PBWElement::basis(lie, e)))
        return {false, "sl2 conjugation oracle mismatch"};
    }
  }
  for (int t = 0; t < 100; ++t) {
    int x = roots[pick(gen)];
    Rat r(static_cast<long>(t % 7) - 3);
    PBWElement a = random_element(gen, g->lie, 3, 2, 20, true);
    long deg = filtration_degree(a);
    for (int mm = 0; mm <= 2 * deg + 2; ++mm) {
      PBWElement dp = divided_ad_power(a, x, r, mm);
      for (const auto& [m2, c2] : dp.terms())
        if (c2.get_den() != 1) return {false, "divided power not integral"};
      if (mm >= 2 * deg + 1 && !dp.is_zero())
        return {false, "adjoint series fails to vanish past 2*deg"};
    }
  }
  return {true, "100 multiplicative pairs, r,s in {1,2,5}, sl2 oracle, integrality, vanishing"};
}

// ---- criterion 5: centre ------------------------------------------------------

Outcome criterion_center() {
  const unsigned long p = 5;
  const int N = 6;
  ChevalleyPtr a1 = build_chevalley("A1");
  const std::vector<std::pair<long, std::size_t>> expected = {{2, 2}, {4, 3}, {6, 4}};
  PBWElement cas = casimir_element(a1);
  for (const auto& [D, dim] : expected) {
    CenterResult res = truncated_center(a1, D, p, N, 0);
    if (res.dimension() != dim)
      return {false, "A1 D=" + std::to_string(D) + ": dimension " +
                         std::to_string(res.dimension()) + " != " + std::to_string(dim)};
    // span of Casimir powers 1, cas, ..., cas^{D/2} equals the kernel span
    std::vector<PBWElement> powers{PBWElement::unit(a1->lie)};
    while (static_cast<long>(powers.size() - 1) < D / 2)
      powers.push_back(multiply(powers.back(), cas));
    std::map<Mono, std::size_t> idx;
    for (const auto& z : res.basis)
      for (const auto& [m, c] : z.terms()) idx.emplace(m, 0);
    for (const auto& z : powers)
      for (const auto& [m, c] : z.terms()) idx.emplace(m, 0);
    std::size_t next = 0;
    for (auto& [m, i] : idx) i = next++;
    QMatrix stack(res.basis.size() + powers.size(), idx.size());
    std::size_t r = 0;
    for (const auto& z : res.basis) {
      for (const auto& [m, c] : z.terms()) stack.at(r, idx[m]) = c;
      ++r;
    }
    for (const auto& z : powers) {
      for (const auto& [m, c] : z.terms()) stack.at(r, idx[m]) = c;
      ++r;
    }
    if (rank(stack) != dim) return {false, "A1 D=" + std::to_string(D) + ": not the Casimir span"};
    // adjoint invariance mod p^N for r = 1..4 on both simple directions
    for (const auto& z : res.basis)
      for (int x : {a1->e_index(0), a1->f_index(0)})
        for (int rr = 1; rr <= 4; ++rr) {
          if (!(exp_adjoint(z, x, Rat(rr)) == z))
            return {false, "A1: centre element moved by exp_adjoint"};
          PBWElement zm = reduce_coeffs_mod(z, p, N);
          PBWElement diff = exp_adjoint(zm, x, Rat(rr)) - zm;
          if (gauge(diff, 0, p) < Valuation::finite(N))
            return {false, "A1: reduced centre element moved mod p^N"};
        }
  }
  ChevalleyPtr a2 = build_chevalley("A2");
  CenterResult d3 = truncated_center(a2, 3, p, N, 0);
  CenterResult d4 = truncated_center(a2, 4, p, N, 0);
  if (d3.dimension() != 3) return {false, "A2 D=3: dimension != 3"};
  if (d4.dimension() != 4) return {false, "A2 D=4: dimension != 4"};
  // 1 and the quadratic Casimir lie in the D=3 span; the third dimension
  // is a cubic candidate
  {
    PBWElement cas2 = casimir_element(a2);
    std::map<Mono, std::size_t> idx;
    for (const auto& z : d3.basis)
      for (const auto& [m, c] : z.terms()) idx.emplace(m, 0);
    for (const auto& [m, c] : cas2.terms()) idx.emplace(m, 0);
    Mono one(static_cast<std::size_t>(a2->dim()), 0);
    idx.emplace(one, 0);
    std::size_t next = 0;
    for (auto& [m, i] : idx) i = next++;
    QMatrix mat(idx.size(), d3.basis.size());
    for (std::size_t j = 0; j < d3.basis.size(); ++j)
      for (const auto& [m, c] : d3.basis[j].terms()) mat.at(idx[m], j) = c;
    std::vector<Rat> rhs(idx.size(), Rat(0)), sol;
    for (const auto& [m, c] : cas2.terms()) rhs[idx[m]] = c;
    if (!solve(mat, rhs, sol)) return {false, "A2: quadratic Casimir outside the centre span"};
    std::vector<Rat> rhs1(idx.size(), Rat(0));
    rhs1[idx[one]] = 1;
    if (!solve(mat, rhs1, sol)) return {false, "A2: unit outside the centre span"};
    bool cubic = false;
    for (const auto& z : d3.basis) cubic = cubic || filtration_degree(z) == 3;
    if (!cubic) return {false, "A2: no cubic generator candidate at D=3"};
  }
  for (const auto& z : d3.basis)
    for (int i = 0; i < a2->rank(); ++i)
      for (int x : {a2->e_index(i), a2->f_index(i)})
        for (int rr = 1; rr <= 4; ++rr)
          if (!(exp_adjoint(z, x, Rat(rr)) == z))
            return {false, "A2: centre element moved by exp_adjoint"};
  return {true, "A1 dims 2/3/4 (Casimir powers, adjoint-fixed mod 5^6); A2 dims 3 -> 4"};
}

// ---- criterion 6: Verma actions ------------------------------------------------

Outcome criterion_verma() {
  const unsigned long p = 5;
  PadicContext ctx(p, 6);
  ChevalleyPtr a1 = build_chevalley("A1");
  for (const Rat& l0 : {Rat(0), Rat(1), Rat(-2), Rat(7, 3)}) {
    WeightCharacter lam = make_weight(ctx, 0, {l0});
    for (int k = 0; k <= 20; ++k) {
      VermaVector::Beta beta(1, static_cast<std::uint16_t>(k));
      VermaVector fk = VermaVector::basis_vector(a1, lam, beta);
      VermaVector img = act(PBWElement::basis(a1->lie, a1->e_index(0)), fk, p);
      VermaVector want(a1, lam);
      if (k > 0) {
        VermaVector::Beta bm(1, static_cast<std::uint16_t>(k - 1));
        want.add_term(bm, Rat(k) * (l0 - Rat(k) + 1));
      }
      if (!(img == want)) return {false, "sl2 action formula fails at k=" + std::to_string(k)};
    }
  }
  ChevalleyPtr a2 = build_chevalley("A2");
  {
    WeightCharacter lam = make_weight(ctx, 0, {Rat(7, 3), Rat(-2)});
    for (const auto& beta : beta_box(a2->num_positive(), 6)) {
      VermaVector fb = VermaVector::basis_vector(a2, lam, beta);
      std::vector<Rat> wt = weight_of(*a2, beta, lam, p);
      for (int i = 0; i < a2->rank(); ++i) {
        VermaVector img = act(PBWElement::basis(a2->lie, a2->h_index(i)), fb, p);
        if (!(img == fb.scaled(weight_pairing(wt, i))))
          return {false, "A2 weight formula fails"};
      }
    }
  }
  std::vector<std::pair<ChevalleyPtr, long>> ann = {{a1, 10}, {a2, 6}};
  for (const auto& [chev, bound] : ann) {
    PBWElement cas = casimir_element(chev);
    WeightCharacter lam = make_weight(
        ctx, 0, std::vector<Rat>(static_cast<std::size_t>(chev->rank()), Rat(7, 3)));
    Rat chi = central_character_scalar(chev, cas, lam, p);
    PBWElement shifted = cas - PBWElement::unit(chev->lie).scaled(chi);
    for (const auto& beta : beta_box(chev->num_positive(), bound)) {
      VermaVector fb = VermaVector::basis_vector(chev, lam, beta);
      if (!act(shifted, fb, p).is_zero())
        return {false, chev->datum.label() + ": Casimir annihilation fails"};
    }
  }
  return {true, "sl2 formula k<=20, A2 weights |beta|<=6, annihilation |beta|<=10/6"};
}

// ---- criterion 7: torus eigenvalues -------------------------------------------

Outcome criterion_torus() {
  const unsigned long p = 5;
  PadicContext ctx(p, 6);
  for (const std::string label : {"A1", "A2"}) {
    ChevalleyPtr g = build_chevalley(label);
    const int l = g->rank();
    for (int n = 0; n <= 1; ++n) {
      Rat pn(p_power(p, static_cast<unsigned long>(n)));
      WeightCharacter lam =
          make_weight(ctx, n, std::vector<Rat>(static_cast<std::size_t>(l), pn));
      std::vector<std::vector<long>> mus;
      std::vector<long> mu(l, 0);
      std::function<void(int)> rec = [&](int i) {
        if (i == l) {
          mus.push_back(mu);
          return;
        }
        for (long v = 0; v < 4; ++v) {
          mu[i] = v;
          rec(i + 1);
        }
      };
      rec(0);
      std::set<std::vector<Rat>> spectra;
      for (const auto& m : mus) {
        std::vector<Rat> tuple;
        for (const auto& c : torus_eigenvalue_check(g, lam, m, p)) {
          if (!c.pass)
            return {false, label + " n=" + std::to_string(n) + ": eigenvalue formula fails"};
          tuple.push_back(c.expected);
        }
        spectra.insert(tuple);
      }
      if (spectra.size() != mus.size())
        return {false, label + " n=" + std::to_string(n) + ": joint spectra collide"};
    }
  }
  return {true, "A1/A2, n in {0,1}, boxes of side 4, distinct joint spectra"};
}

// ---- criterion 8: grid vanishing ----------------------------------------------

Outcome criterion_grid() {
  std::mt19937_64 gen(31415);
  std::uniform_int_distribution<long> coeff(-9, 9), deg(0, 4), nv(1, 3), terms(0, 5);
  for (int t = 0; t < 100; ++t) {
    int vars = static_cast<int>(nv(gen));
    Polynomial f(vars);
    long nt = terms(gen);
    for (long s = 0; s < nt; ++s) {
      Polynomial::Exp e(vars, 0);
      for (int j = 0; j < vars; ++j) e[j] = static_cast<std::uint16_t>(deg(gen));
      f.add_term(e, Rat(coeff(gen)));
    }
    std::vector<std::vector<Rat>> grids(vars);
    for (int j = 0; j < vars; ++j)
      for (long v = 0; v < 6; ++v) grids[j].push_back(Rat(v));
    GridVanishingReport r = grid_vanishing_check(f, grids);
    if (!r.certificate.sufficient) return {false, "grid certificate should be sufficient"};
    if (r.vanishes != f.is_zero()) return {false, "vanishing/zero equivalence fails"};
    if (!r.vanishes && !(r.witness_point.has_value() &&
                         f.evaluate(*r.witness_point) == r.witness_value && r.witness_value != 0))
      return {false, "witness point invalid"};
  }
  Polynomial f(2);
  f.add_term({2, 0}, Rat(1));
  f.add_term({1, 0}, Rat(-1));
  GridVanishingReport r = grid_vanishing_check(f, {{Rat(0), Rat(1)}, {Rat(0)}});
  if (!(r.vanishes && !r.is_zero && !r.certificate.sufficient))
    return {false, "sub-threshold counterexample misjudged"};
  return {true, "100 random polynomials, grids of side 6, counterexample rejected"};
}

// ---- criterion 9: injectivity ranks -------------------------------------------

Outcome criterion_injectivity() {
  UniformGroupData zp = abelian_uniform_group(5, 1);
  RankCertificate a = injectivity_rank_auto(zp, 2, 2, 12, 6, 24);
  if (!(a.full_rank && a.rank == 9 && a.certified))
    return {false, "abelian: rank " + std::to_string(a.rank) + " of 9, certified=" +
                       std::to_string(a.certified)};
  UniformGroupData h = heisenberg_uniform_group(5);
  RankCertificate b = injectivity_rank_auto(h, 1, 1, 8, 5, 20);
  if (!(b.full_rank && b.rank == 16 && b.certified))
    return {false, "heisenberg: rank " + std::to_string(b.rank) + " of 16"};
  return {true, "abelian D=" + std::to_string(a.truncation) + " rank 9; heisenberg D=" +
                    std::to_string(b.truncation) + " rank 16"};
}

// ---- criterion 10: faithfulness witnesses --------------------------------------

Outcome criterion_faithfulness() {
  const unsigned long p = 5;
  PadicContext ctx(p, 6);
  ChevalleyPtr a1 = build_chevalley("A1");
  CongruenceKernelSetup setup = congruence_kernel_setup(a1, 1, p);
  WeightCharacter lam = make_weight(ctx, 1, {Rat(5)});
  std::mt19937_64 gen(999);

  std::vector<IwasawaElement::Alpha> box;
  IwasawaElement::Alpha cur(3, 0);
  std::function<void(int, int)> rec = [&](int from, int budget) {
    box.push_back(cur);
    for (int i = from; i < 3 && budget > 0; ++i) {
      ++cur[i];
      rec(i, budget - 1);
      --cur[i];
    }
  };
  rec(0, 2);

  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  std::uniform_int_distribution<long> coeff(-50, 50), nsup(1, 3), scale(0, 3);
  for (int t = 0; t < 50; ++t) {
    IwasawaElement zeta(&setup.group);
    long sup = nsup(gen);
    for (long s = 0; s < sup; ++s) {
      Rat c(coeff(gen));
      if (scale(gen) == 0) c *= 5;
      zeta.add_term(box[pick(gen)], c);
    }
    if (zeta.is_zero()) zeta.add_term(box[1], Rat(1));
    FaithfulnessReport r = faithfulness_witness(setup, zeta, lam, 8, 6, 6);
    if (!r.witness_found)
      return {false, "no witness for sample " + std::to_string(t) +
                         (r.inconclusive ? " (inconclusive)" : "")};
    if (!r.sound) return {false, "witness budget unsound at sample " + std::to_string(t)};
  }
  return {true, "50 random nonzero elements, witnesses with |beta| <= 6 at precision 5^6"};
}

// ---- criterion 11: smash products ----------------------------------------------

Outcome criterion_smash() {
  FiniteGroup c2 = cyclic_group(2);
  FiniteGroup c3 = cyclic_group(3);
  FiniteGroup c4 = cyclic_group(4);
  FiniteGroup s3 = symmetric3();

  if (!simplicity_certificate(c2, SmashBase::rationals()).simple)
    return {false, "C2 over Q not simple"};
  if (!simplicity_certificate(c3, SmashBase::prime_field(3)).simple)
    return {false, "C3 over F3 not simple"};
  if (!simplicity_certificate(s3, SmashBase::prime_field(2)).simple)
    return {false, "S3 over F2 not simple"};

  struct EndoCase {
    const FiniteGroup* F;
    std::vector<int> E;
    SmashBase base;
  };
  std::vector<EndoCase> endo = {{&c2, {0}, SmashBase::rationals()},
                                {&c3, {0}, SmashBase::prime_field(3)},
                                {&c4, cyclic_subgroup(c4, 2), SmashBase::rationals()},
                                {&s3, cyclic_subgroup(s3, 4), SmashBase::rationals()}};
  for (const auto& cs : endo) {
    EndomorphismCheck chk = endomorphism_check(*cs.F, cs.E, cs.base);
    if (!chk.pass || chk.dim_end != chk.dim_invariants)
      return {false, cs.F->name + ": endomorphism dimension mismatch"};
  }

  struct QuotCase {
    const FiniteGroup* F;
    std::vector<int> E;
  };
  std::vector<QuotCase> quot = {{&c4, cyclic_subgroup(c4, 2)}, {&s3, cyclic_subgroup(s3, 4)}};
  for (const auto& cs : quot) {
    auto inv = invariant_subalgebra(*cs.F, cs.E, SmashBase::rationals());
    if (inv.size() != cs.E.size()) return {false, cs.F->name + ": invariants dimension"};
    QMatrix stack(inv.size() + cs.E.size(), cs.F->order);
    for (std::size_t i = 0; i < inv.size(); ++i)
      for (int j = 0; j < cs.F->order; ++j) stack.at(i, j) = inv[i][j];
    for (std::size_t i = 0; i < cs.E.size(); ++i) stack.at(inv.size() + i, cs.E[i]) = 1;
    if (rank(stack) != cs.E.size())
      return {false, cs.F->name + ": invariants differ from the subgroup algebra"};
  }
  return {true, "simplicity C2/Q, C3/F3, S3/F2; endomorphism dims; quotient invariants"};
}

// ---- criterion 12: theta/lambda round trip --------------------------------------

Outcome criterion_theta_lambda() {
  const unsigned long p = 5;
  const int M = 6;
  std::mt19937_64 gen(4242);
  std::uniform_int_distribution<long> unit(0, 1 << 30), den(1, 60);
  for (int t = 0; t < 50; ++t) {
    Rat u(unit(gen));
    if (t % 3 == 0) {
      long d = den(gen);
      while (d % 5 == 0) ++d;
      u /= Rat(d);
    }
    Rat theta = 1 + Rat(5) * u;
    Rat lam = padic_log(theta, p, M);
    Rat back = padic_exp(lam, p, M);
    if (reduce_mod(back, p, M) != reduce_mod(theta, p, M))
      return {false, "round trip fails for theta sample " + std::to_string(t)};
  }
  return {true, "50 random values in 1+5Z_5, identity mod 5^6"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  runtime::set_jobs(0);
  std::vector<Criterion> criteria = {
      {1, "root-datum", 1.0, criterion_rootdata},
      {2, "lie-algebra", 10.0, criterion_lie},
      {3, "pbw-arithmetic", 60.0, criterion_pbw},
      {4, "exponential-adjoint", 60.0, criterion_adjoint},
      {5, "truncated-centre", 600.0, criterion_center},
      {6, "verma-action", 120.0, criterion_verma},
      {7, "torus-eigenvalues", 120.0, criterion_torus},
      {8, "grid-vanishing", 30.0, criterion_grid},
      {9, "injectivity-rank", 600.0, criterion_injectivity},
      {10, "faithfulness-witness", 600.0, criterion_faithfulness},
      {11, "smash-product", 120.0, criterion_smash},
      {12, "theta-lambda-roundtrip", 10.0, criterion_theta_lambda},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool in_time = secs < c.limit_seconds;
    bool pass = out.pass && in_time;
    all = all && pass;
    std::printf("[%s] %02d %-24s %7.2fs (limit %gs)  %s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.name, secs, c.limit_seconds, out.detail.c_str(),
                !in_time ? "  [over time budget]" : "");
    std::fflush(stdout);
  }
  std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT");
  return all ? 0 : 1;
}
