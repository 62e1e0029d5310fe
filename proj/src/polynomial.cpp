#include "padiclie/polynomial.hpp"

#include <algorithm>

#include "padiclie/errors.hpp"
#include "padiclie/runtime.hpp"

namespace padiclie {

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  Exp e(nvars, 0);
  e[i] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

Polynomial Polynomial::constant(int nvars, const Rat& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.emplace(Exp(nvars, 0), c);
  return p;
}

void Polynomial::add_term(const Exp& e, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw DimensionMismatch("polynomial product arity");
  Polynomial r(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exp e = ea;
      for (int i = 0; i < nvars_; ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

long Polynomial::degree_in(int var) const {
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max<long>(d, e[var]);
  return d;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw DimensionMismatch("evaluation point arity");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

GridVanishingReport grid_vanishing_check(const Polynomial& f,
                                         const std::vector<std::vector<Rat>>& grids) {
  if (static_cast<int>(grids.size()) != f.nvars())
    throw DimensionMismatch("one grid per variable required");
  GridVanishingReport rep;
  rep.certificate.sufficient = true;
  for (int j = 0; j < f.nvars(); ++j) {
    long dj = f.degree_in(j);
    rep.certificate.degrees.push_back(dj);
    rep.certificate.grid_sizes.push_back(grids[j].size());
    if (grids[j].size() <= static_cast<std::size_t>(dj)) {
      rep.certificate.sufficient = false;
      rep.certificate.used_points.emplace_back();
    } else {
      rep.certificate.used_points.emplace_back(grids[j].begin(),
                                               grids[j].begin() + dj + 1);
    }
  }

  // exhaustive evaluation on the product grid
  std::size_t total = 1;
  for (const auto& g : grids) total *= g.size();
  rep.vanishes = true;
  std::vector<Rat> point(f.nvars());
  for (std::size_t idx = 0; idx < total && rep.vanishes; ++idx) {
    std::size_t t = idx;
    for (int j = 0; j < f.nvars(); ++j) {
      point[j] = grids[j][t % grids[j].size()];
      t /= grids[j].size();
    }
    Rat v = f.evaluate(point);
    if (v != 0) {
      rep.vanishes = false;
      rep.witness_point = point;
      rep.witness_value = v;
    }
  }

  rep.is_zero = f.is_zero();
  // With |A_j| > deg_j f in every variable, grid vanishing == zero
  // polynomial; anything else is an arithmetic bug worth a hard stop.
  if (rep.vanishes && rep.certificate.sufficient && !rep.is_zero)
    throw Error("grid vanishing with sufficient grids but nonzero polynomial");
  return rep;
}

}  // namespace padiclie
