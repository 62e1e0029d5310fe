#include "padiclie/verma.hpp"

#include <algorithm>

#include "padiclie/errors.hpp"

namespace padiclie {

Rat WeightCharacter::on_coroot(int i, unsigned long p) const {
  Rat pn(p_power(p, static_cast<unsigned long>(deformation)));
  return values.at(static_cast<std::size_t>(i)) / pn;
}

WeightCharacter make_weight(const PadicContext& ctx, int deformation, std::vector<Rat> values) {
  if (deformation < 0) throw ConfigInvalid("deformation parameter must be >= 0");
  for (const auto& v : values) {
    Valuation val = valuation(v, ctx.p);
    if (val.is_finite() && val.v < 0)
      throw NegativeValuation("weight value " + to_string(v) + " lies outside the valuation ring");
  }
  WeightCharacter w;
  w.deformation = deformation;
  w.values = std::move(values);
  return w;
}

VermaVector VermaVector::highest_weight(ChevalleyPtr chev, WeightCharacter lambda) {
  if (lambda.values.size() != static_cast<std::size_t>(chev->rank()))
    throw DimensionMismatch("weight needs one value per coroot");
  VermaVector v(std::move(chev), std::move(lambda));
  v.add_term(Beta(static_cast<std::size_t>(v.chev_->num_positive()), 0), Rat(1));
  return v;
}

VermaVector VermaVector::basis_vector(ChevalleyPtr chev, WeightCharacter lambda,
                                      const Beta& beta) {
  if (lambda.values.size() != static_cast<std::size_t>(chev->rank()))
    throw DimensionMismatch("weight needs one value per coroot");
  VermaVector v(std::move(chev), std::move(lambda));
  if (beta.size() != static_cast<std::size_t>(v.chev_->num_positive()))
    throw DimensionMismatch("beta length must equal the number of positive roots");
  v.add_term(beta, Rat(1));
  return v;
}

Rat VermaVector::coefficient(const Beta& beta) const {
  auto it = terms_.find(beta);
  return it == terms_.end() ? Rat(0) : it->second;
}

void VermaVector::add_term(const Beta& beta, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(beta, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

VermaVector VermaVector::operator+(const VermaVector& o) const {
  VermaVector r = *this;
  for (const auto& [b, c] : o.terms_) r.add_term(b, c);
  return r;
}

VermaVector VermaVector::operator-(const VermaVector& o) const {
  VermaVector r = *this;
  for (const auto& [b, c] : o.terms_) r.add_term(b, -c);
  return r;
}

VermaVector VermaVector::scaled(const Rat& c) const {
  VermaVector r(chev_, lambda_);
  if (c == 0) return r;
  for (const auto& [b, x] : terms_) r.add_term(b, x * c);
  return r;
}

VermaVector act(const PBWElement& u, const VermaVector& w, unsigned long p) {
  const ChevalleyPtr& chev = w.algebra();
  if (u.lie() != chev->lie) throw DimensionMismatch("action over a different algebra");
  const int m = chev->num_positive();
  const int l = chev->rank();
  const int dim = chev->dim();

  std::vector<Rat> lambda_h(l);
  for (int i = 0; i < l; ++i) lambda_h[i] = w.weight().on_coroot(i, p);

  VermaVector out(chev, w.weight());
  for (const auto& [beta, cw] : w.terms()) {
    Mono fmono(static_cast<std::size_t>(dim), 0);
    for (int j = 0; j < m; ++j) fmono[j] = beta[j];
    PBWElement fv = PBWElement::monomial(chev->lie, fmono, Rat(1));
    PBWElement prod = multiply(u, fv);
    for (const auto& [mono, c] : prod.terms()) {
      bool killed = false;
      for (int k = m + l; k < dim; ++k)
        if (mono[k] != 0) {
          killed = true;  // e v_lambda = 0
          break;
        }
      if (killed) continue;
      Rat scalar = c * cw;
      for (int i = 0; i < l; ++i)
        for (int k = 0; k < mono[m + i]; ++k) scalar *= lambda_h[i];
      VermaVector::Beta b(static_cast<std::size_t>(m), 0);
      for (int j = 0; j < m; ++j) b[j] = mono[j];
      out.add_term(b, scalar);
    }
  }
  return out;
}

std::vector<Rat> weight_of(const ChevalleyAlgebra& chev, const VermaVector::Beta& beta,
                           const WeightCharacter& lambda, unsigned long p) {
  const int l = chev.rank();
  std::vector<Rat> w(l);
  for (int i = 0; i < l; ++i) w[i] = lambda.on_coroot(i, p);
  for (int j = 0; j < chev.num_positive(); ++j) {
    if (beta[j] == 0) continue;
    std::vector<long> fund = chev.datum.root_to_weight_coords(chev.datum.positive_roots[j]);
    for (int i = 0; i < l; ++i) w[i] -= Rat(static_cast<long>(beta[j]) * fund[i]);
  }
  return w;
}

Rat central_character_scalar(const ChevalleyPtr& chev, const PBWElement& omega,
                             const WeightCharacter& lambda, unsigned long p) {
  for (int i = 0; i < chev->rank(); ++i) {
    for (int g : {chev->e_index(i), chev->f_index(i), chev->h_index(i)}) {
      PBWElement x = PBWElement::basis(chev->lie, g);
      if (!ad(x, omega).is_zero())
        throw NotCentral("element does not commute with generator " + chev->lie->label(g));
    }
  }
  VermaVector v = VermaVector::highest_weight(chev, lambda);
  VermaVector img = act(omega, v, p);
  VermaVector::Beta zero(static_cast<std::size_t>(chev->num_positive()), 0);
  Rat chi = img.coefficient(zero);
  if (!(img - v.scaled(chi)).is_zero())
    throw NotCentral("central element moved the highest weight line");
  return chi;
}

VermaVector e_mu_vector(const ChevalleyPtr& chev, const WeightCharacter& lambda,
                        const std::vector<long>& mu) {
  std::vector<long> exps = adjugate_weight_combination(chev->datum, mu);
  VermaVector::Beta beta(static_cast<std::size_t>(chev->num_positive()), 0);
  for (int j = 0; j < chev->rank(); ++j) {
    if (exps[j] < 0) throw Error("negative adjugate combination");
    beta[j] = static_cast<std::uint16_t>(exps[j]);
  }
  return VermaVector::basis_vector(chev, lambda, beta);
}

std::vector<TorusEigenvalueCheck> torus_eigenvalue_check(const ChevalleyPtr& chev,
                                                         const WeightCharacter& lambda,
                                                         const std::vector<long>& mu,
                                                         unsigned long p) {
  const int l = chev->rank();
  const Rat pn(p_power(p, static_cast<unsigned long>(lambda.deformation)));
  VermaVector emu = e_mu_vector(chev, lambda, mu);
  std::vector<TorusEigenvalueCheck> out;
  for (int j = 0; j < l; ++j) {
    // x_j = lambda(p^n h_j) - p^n h_j
    PBWElement xj = PBWElement::unit(chev->lie).scaled(lambda.values[j]) -
                    PBWElement::basis(chev->lie, chev->h_index(j)).scaled(pn);
    VermaVector img = act(xj, emu, p);
    TorusEigenvalueCheck chk;
    chk.mu = mu;
    chk.coroot = j;
    chk.expected = Rat(chev->datum.det) * pn * Rat(mu[j]);
    chk.pass = (img == emu.scaled(chk.expected));
    out.push_back(chk);
  }
  return out;
}

}  // namespace padiclie
