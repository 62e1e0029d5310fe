#include "padiclie/chevalley.hpp"

#include <algorithm>

#include "padiclie/errors.hpp"

namespace padiclie {

namespace {

QMatrix comm(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix unit(std::size_t n, std::size_t r, std::size_t c, long v = 1) {
  QMatrix m(n, n);
  m.at(r, c) = v;
  return m;
}

struct EpsRoot {
  // nonzero entries of the root written in the orthogonal coordinates of
  // the defining representation
  std::vector<std::pair<int, long>> entries;
};

EpsRoot to_eps(const RootDatum& d, const std::vector<long>& alpha_coords, int eps_dim) {
  std::vector<long> eps(eps_dim, 0);
  for (int i = 0; i < d.rank; ++i) {
    long c = alpha_coords[i];
    if (c == 0) continue;
    switch (d.family) {
      case Family::A:
        eps[i] += c;
        eps[i + 1] -= c;
        break;
      case Family::B:
        if (i + 1 < d.rank) {
          eps[i] += c;
          eps[i + 1] -= c;
        } else {
          eps[i] += c;
        }
        break;
      case Family::C:
        if (i + 1 < d.rank) {
          eps[i] += c;
          eps[i + 1] -= c;
        } else {
          eps[i] += 2 * c;
        }
        break;
      case Family::D:
        if (i + 1 < d.rank) {
          eps[i] += c;
          eps[i + 1] -= c;
        } else {
          eps[i - 1] += c;
          eps[i] += c;
        }
        break;
      case Family::G:
        throw UnsupportedType("no matrix model for G2");
    }
  }
  EpsRoot r;
  for (int i = 0; i < eps_dim; ++i)
    if (eps[i] != 0) r.entries.emplace_back(i, eps[i]);
  return r;
}

struct MatrixModel {
  Family family;
  int rank;
  int n;  // matrix size

  int pos_plus(int i) const { return i; }
  int pos_minus(int i) const { return family == Family::B ? rank + 1 + i : rank + i; }
  int pos_zero() const { return rank; }  // B only

  QMatrix gram() const {
    QMatrix j(n, n);
    if (family == Family::A) return j;  // unused
    for (int i = 0; i < rank; ++i) {
      j.at(pos_plus(i), pos_minus(i)) = 1;
      j.at(pos_minus(i), pos_plus(i)) = family == Family::C ? -1 : 1;
    }
    if (family == Family::B) j.at(pos_zero(), pos_zero()) = 2;
    return j;
  }

  bool member(const QMatrix& x) const {
    if (family == Family::A) {
      Rat tr(0);
      for (int i = 0; i < n; ++i) tr += x.at(i, i);
      return tr == 0;
    }
    QMatrix j = gram();
    return (x.transposed() * j + j * x).is_zero();
  }

  QMatrix candidate(const EpsRoot& r) const {
    const auto& e = r.entries;
    if (family == Family::A) {
      // eps_i - eps_j in gl(rank+1)
      if (e.size() == 2 && e[0].second + e[1].second == 0) {
        int i = e[0].second > 0 ? e[0].first : e[1].first;
        int j = e[0].second > 0 ? e[1].first : e[0].first;
        return unit(n, i, j);
      }
      throw Error("A-model: unexpected root shape");
    }
    if (e.size() == 2 && e[0].second == 1 && e[1].second == -1)
      return unit(n, pos_plus(e[0].first), pos_plus(e[1].first)) -
             unit(n, pos_minus(e[1].first), pos_minus(e[0].first));
    if (e.size() == 2 && e[0].second == -1 && e[1].second == 1)
      return unit(n, pos_plus(e[1].first), pos_plus(e[0].first)) -
             unit(n, pos_minus(e[0].first), pos_minus(e[1].first));
    if (e.size() == 2 && e[0].second == 1 && e[1].second == 1) {
      int i = e[0].first, j = e[1].first;
      if (family == Family::C)
        return unit(n, pos_plus(i), pos_minus(j)) + unit(n, pos_plus(j), pos_minus(i));
      return unit(n, pos_plus(i), pos_minus(j)) - unit(n, pos_plus(j), pos_minus(i));
    }
    if (e.size() == 2 && e[0].second == -1 && e[1].second == -1) {
      int i = e[0].first, j = e[1].first;
      if (family == Family::C)
        return unit(n, pos_minus(i), pos_plus(j)) + unit(n, pos_minus(j), pos_plus(i));
      return unit(n, pos_minus(j), pos_plus(i)) - unit(n, pos_minus(i), pos_plus(j));
    }
    if (e.size() == 1 && family == Family::C && e[0].second == 2)
      return unit(n, pos_plus(e[0].first), pos_minus(e[0].first));
    if (e.size() == 1 && family == Family::C && e[0].second == -2)
      return unit(n, pos_minus(e[0].first), pos_plus(e[0].first));
    if (e.size() == 1 && family == Family::B && e[0].second == 1)
      return unit(n, pos_plus(e[0].first), pos_zero(), 2) -
             unit(n, pos_zero(), pos_minus(e[0].first));
    if (e.size() == 1 && family == Family::B && e[0].second == -1)
      return unit(n, pos_minus(e[0].first), pos_zero(), 2) -
             unit(n, pos_zero(), pos_plus(e[0].first));
    throw Error("matrix model: unexpected root shape");
  }
};

struct Anchor {
  std::size_t r = 0, c = 0;
  Rat v;
};

Anchor anchor_of(const QMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0) return {r, c, m.at(r, c)};
  throw Error("anchor of zero matrix");
}

/// [h, x] = c x for an ad-eigenvector x; asserts exact proportionality.
Rat ad_eigenvalue(const QMatrix& h, const QMatrix& x) {
  QMatrix b = comm(h, x);
  Anchor a = anchor_of(x);
  Rat c = b.at(a.r, a.c) / a.v;
  if (!(b - x.scaled(c)).is_zero()) throw Error("not an ad-eigenvector");
  return c;
}

}  // namespace

std::vector<long> ChevalleyAlgebra::root_of_basis(int basis) const {
  if (is_h(basis)) throw DimensionMismatch("coroot basis index has no root");
  if (is_f(basis)) {
    std::vector<long> r = datum.positive_roots[basis];
    for (long& x : r) x = -x;
    return r;
  }
  return datum.positive_roots[basis - num_positive() - rank()];
}

long ChevalleyAlgebra::weight_on(int basis, int i) const {
  if (is_h(basis)) return 0;
  return datum.root_pairing(root_of_basis(basis), i);
}

ChevalleyPtr build_chevalley(const RootDatum& datum) {
  if (datum.family == Family::G)
    throw UnsupportedType("G2 has no matrix model in this workbench");

  MatrixModel model;
  model.family = datum.family;
  model.rank = datum.rank;
  int eps_dim = datum.family == Family::A ? datum.rank + 1 : datum.rank;
  model.n = datum.family == Family::A   ? datum.rank + 1
            : datum.family == Family::B ? 2 * datum.rank + 1
                                        : 2 * datum.rank;

  const int m = datum.num_positive();
  const int l = datum.rank;
  std::vector<QMatrix> e_mats(m), f_mats(m), h_mats(l);

  for (int k = 0; k < m; ++k) {
    EpsRoot plus = to_eps(datum, datum.positive_roots[k], eps_dim);
    EpsRoot minus = plus;
    for (auto& [i, v] : minus.entries) v = -v;
    QMatrix x = model.candidate(plus);
    QMatrix y = model.candidate(minus);
    if (!model.member(x) || !model.member(y)) throw Error("candidate outside the model algebra");
    QMatrix h = comm(x, y);
    Rat c = ad_eigenvalue(h, x);
    if (c == 0) throw Error("degenerate sl2 triple");
    e_mats[k] = x;
    f_mats[k] = y.scaled(2 / c);
  }
  for (int i = 0; i < l; ++i) {
    // simple roots are the first `rank` entries of the positive list
    std::vector<long> simple(l, 0);
    simple[i] = 1;
    if (datum.positive_roots[i] != simple) throw Error("positive root order broken");
    h_mats[i] = comm(e_mats[i], f_mats[i]);
  }

  // cross-check the whole root bookkeeping against the datum
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < l; ++i) {
      long want = datum.root_pairing(datum.positive_roots[k], i);
      if (ad_eigenvalue(h_mats[i], e_mats[k]) != want ||
          ad_eigenvalue(h_mats[i], f_mats[k]) != -want)
        throw Error("matrix model disagrees with the root datum");
    }

  auto chev = std::make_shared<ChevalleyAlgebra>();
  chev->datum = datum;
  const int dim = 2 * m + l;
  std::vector<std::string> labels(dim);
  chev->rep.resize(dim);
  auto root_name = [&](int k) {
    std::string s;
    for (int i = 0; i < l; ++i) {
      if (datum.positive_roots[k][i] == 0) continue;
      if (!s.empty()) s += "+";
      if (datum.positive_roots[k][i] != 1) s += std::to_string(datum.positive_roots[k][i]);
      s += "a" + std::to_string(i + 1);
    }
    return s;
  };
  for (int k = 0; k < m; ++k) {
    labels[k] = "f[" + root_name(k) + "]";
    chev->rep[k] = f_mats[k];
    labels[m + l + k] = "e[" + root_name(k) + "]";
    chev->rep[m + l + k] = e_mats[k];
  }
  for (int i = 0; i < l; ++i) {
    labels[m + i] = "h" + std::to_string(i + 1);
    chev->rep[m + i] = h_mats[i];
  }

  // Express commutators in the basis. Off-diagonal positions belong to
  // exactly one root vector (positions carry the root as a weight), so a
  // single anchor pass strips the root-vector part; the remainder must be
  // a combination of the coroot diagonals.
  std::vector<Anchor> anchors(dim);
  for (int b = 0; b < dim; ++b)
    if (b < m || b >= m + l) anchors[b] = anchor_of(chev->rep[b]);

  QMatrix hdiag(model.n, l);
  for (int i = 0; i < l; ++i)
    for (int r = 0; r < model.n; ++r) hdiag.at(r, i) = h_mats[i].at(r, r);

  auto algebra = std::make_shared<LieAlgebra>(dim, labels);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      QMatrix c = comm(chev->rep[i], chev->rep[j]);
      LieAlgebra::SparseVec expr;
      for (int b = 0; b < dim; ++b) {
        if (b >= m && b < m + l) continue;
        Rat coef = c.at(anchors[b].r, anchors[b].c) / anchors[b].v;
        if (coef == 0) continue;
        expr.emplace_back(b, coef);
        c = c - chev->rep[b].scaled(coef);
      }
      if (!c.is_zero()) {
        std::vector<Rat> diag(model.n);
        for (int r = 0; r < model.n; ++r) diag[r] = c.at(r, r);
        std::vector<Rat> x;
        if (!solve(hdiag, diag, x)) throw Error("commutator not in the span of the basis");
        QMatrix check(model.n, model.n);
        for (int r = 0; r < model.n; ++r)
          for (int s = 0; s < model.n; ++s) check.at(r, s) = c.at(r, s);
        for (int t = 0; t < l; ++t) {
          if (x[t] != 0) expr.emplace_back(m + t, x[t]);
          check = check - h_mats[t].scaled(x[t]);
        }
        if (!check.is_zero()) throw Error("commutator not in the span of the basis");
      }
      algebra->set_bracket(i, j, std::move(expr));
    }
  if (!algebra->all_integer_constants()) throw Error("structure constants are not integral");
  chev->lie = algebra;
  return chev;
}

ChevalleyPtr build_chevalley(const std::string& label) {
  return build_chevalley(build_root_datum(label));
}

CasimirData quadratic_casimir(const ChevalleyAlgebra& g) {
  const int dim = g.dim();
  QMatrix gram(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b) {
      QMatrix prod = g.rep[a] * g.rep[b];
      Rat tr(0);
      for (std::size_t r = 0; r < prod.rows(); ++r) tr += prod.at(r, r);
      gram.at(a, b) = tr;
      gram.at(b, a) = tr;
    }
  // invert the Gram matrix of the trace form
  QMatrix aug(dim, 2 * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) aug.at(i, j) = gram.at(i, j);
    aug.at(i, dim + i) = 1;
  }
  auto pivots = rref(aug, true);
  if (static_cast<int>(pivots.size()) != dim) throw Error("degenerate trace form");
  QMatrix inv(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) inv.at(i, j) = aug.at(i, dim + j);

  // sum g^{ab} b_a b_b, rewritten with ordered quadratic monomials:
  // b_a b_b + b_b b_a = 2 b_a b_b + [b_b, b_a] for a < b.
  CasimirData cas;
  std::vector<Rat> lin(dim, Rat(0));
  for (int a = 0; a < dim; ++a) {
    if (inv.at(a, a) != 0) cas.quadratic.push_back({{a, a}, inv.at(a, a)});
    for (int b = a + 1; b < dim; ++b) {
      const Rat& c = inv.at(a, b);
      if (c == 0) continue;
      cas.quadratic.push_back({{a, b}, 2 * c});
      for (const auto& [k, s] : g.lie->bracket(b, a)) lin[k] += c * s;
    }
  }
  // scale to a primitive integer element
  std::vector<Rat> all;
  for (auto& q : cas.quadratic) all.push_back(q.second);
  for (auto& x : lin) all.push_back(x);
  std::vector<Rat> scaled = primitive_integer_scale(all);
  Rat factor(1);
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != 0) {
      factor = scaled[i] / all[i];
      break;
    }
  if (factor < 0) factor = -factor;
  for (auto& q : cas.quadratic) q.second *= factor;
  for (int k = 0; k < dim; ++k)
    if (lin[k] * factor != 0) cas.linear.emplace_back(k, lin[k] * factor);
  return cas;
}

}  // namespace padiclie
