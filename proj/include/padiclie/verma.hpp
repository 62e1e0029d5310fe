#ifndef PADICLIE_VERMA_HPP
#define PADICLIE_VERMA_HPP

#include <map>
#include <optional>
#include <vector>

#include "padiclie/pbw.hpp"
#include "padiclie/polynomial.hpp"

namespace padiclie {

/// Highest weight stored through its values on the rescaled coroots
/// p^n h_1, ..., p^n h_l. Each value must have v_p >= 0 (the character
/// maps the rescaled torus lattice into the valuation ring); the value on
/// the unscaled h_i is values[i] / p^n and may have negative valuation.
struct WeightCharacter {
  int deformation = 0;  // n
  std::vector<Rat> values;

  Rat on_coroot(int i, unsigned long p) const;  // lambda(h_i)
};

WeightCharacter make_weight(const PadicContext& ctx, int deformation, std::vector<Rat> values);

/// Vector in the dense rank-one U(n)-submodule of the highest-weight
/// module: a finite sum of f^beta v_lambda, keyed by the exponent vector
/// beta over the positive-root list.
class VermaVector {
 public:
  using Beta = std::vector<std::uint16_t>;
  using TermMap = std::map<Beta, Rat>;

  VermaVector() = default;
  VermaVector(ChevalleyPtr chev, WeightCharacter lambda)
      : chev_(std::move(chev)), lambda_(std::move(lambda)) {}

  static VermaVector highest_weight(ChevalleyPtr chev, WeightCharacter lambda);
  static VermaVector basis_vector(ChevalleyPtr chev, WeightCharacter lambda, const Beta& beta);

  const ChevalleyPtr& algebra() const { return chev_; }
  const WeightCharacter& weight() const { return lambda_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coefficient(const Beta& beta) const;
  void add_term(const Beta& beta, const Rat& c);

  VermaVector operator+(const VermaVector& o) const;
  VermaVector operator-(const VermaVector& o) const;
  VermaVector scaled(const Rat& c) const;
  bool operator==(const VermaVector& o) const { return terms_ == o.terms_; }

 private:
  ChevalleyPtr chev_;
  WeightCharacter lambda_;
  TermMap terms_;
};

/// Left action of U(g) by straightening against e v = 0, h v = lambda(h) v.
VermaVector act(const PBWElement& u, const VermaVector& w, unsigned long p);

/// Weight of f^beta v_lambda in fundamental-weight coordinates:
/// lambda - sum_j beta_j alpha_(j) over the positive-root list.
std::vector<Rat> weight_of(const ChevalleyAlgebra& chev, const VermaVector::Beta& beta,
                           const WeightCharacter& lambda, unsigned long p);

/// chi_lambda(omega): the scalar by which a central element acts.
/// Verifies centrality by exact brackets with the Chevalley generators
/// first and throws NotCentral on failure.
Rat central_character_scalar(const ChevalleyPtr& chev, const PBWElement& omega,
                             const WeightCharacter& lambda, unsigned long p);

/// e_mu = prod_j f_j^{sum_i mu_i C*_ij} v_lambda (simple-root f's only;
/// they sit first in the PBW order, so this is a basis vector).
VermaVector e_mu_vector(const ChevalleyPtr& chev, const WeightCharacter& lambda,
                        const std::vector<long>& mu);

struct TorusEigenvalueCheck {
  std::vector<long> mu;
  int coroot = 0;                 // j
  Rat expected;                   // d p^n mu_j
  bool pass = false;
};

/// Evaluates (lambda(p^n h_j) - p^n h_j) e_mu against d p^n mu_j e_mu for
/// every j; exact scalars, failures reported rather than thrown.
std::vector<TorusEigenvalueCheck> torus_eigenvalue_check(const ChevalleyPtr& chev,
                                                         const WeightCharacter& lambda,
                                                         const std::vector<long>& mu,
                                                         unsigned long p);

}  // namespace padiclie

#endif
