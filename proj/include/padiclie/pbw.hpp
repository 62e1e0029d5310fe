#ifndef PADICLIE_PBW_HPP
#define PADICLIE_PBW_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "padiclie/chevalley.hpp"
#include "padiclie/lie.hpp"
#include "padiclie/scalar.hpp"

namespace padiclie {

/// Exponent vector over the ordered basis of a LieAlgebra; the monomial
/// b_0^{m_0} b_1^{m_1} ... with factors in increasing basis order. For a
/// Chevalley algebra this is exactly f^beta h^gamma e^delta.
using Mono = std::vector<std::uint16_t>;

long mono_degree(const Mono& m);

/// Element of U(g) as a finite sum of ordered monomials with exact
/// rational coefficients. Zero coefficients are never stored. Values are
/// immutable in spirit: all operations return fresh elements.
class PBWElement {
 public:
  using TermMap = std::map<Mono, Rat>;

  PBWElement() = default;
  explicit PBWElement(LiePtr lie) : lie_(std::move(lie)) {}

  static PBWElement zero(LiePtr lie) { return PBWElement(std::move(lie)); }
  static PBWElement unit(LiePtr lie);
  static PBWElement basis(LiePtr lie, int index);
  static PBWElement monomial(LiePtr lie, const Mono& m, const Rat& c);

  const LiePtr& lie() const { return lie_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  Rat coefficient(const Mono& m) const;

  void add_term(const Mono& m, const Rat& c);  // builder-style accumulation

  PBWElement operator+(const PBWElement& o) const;
  PBWElement operator-(const PBWElement& o) const;
  PBWElement operator-() const;
  PBWElement scaled(const Rat& c) const;
  bool operator==(const PBWElement& o) const { return terms_ == o.terms_; }

 private:
  LiePtr lie_;
  TermMap terms_;
};

enum class Strategy { LeftmostSwap, RightmostSwap };

struct MultiplyOptions {
  bool serial = false;        // force the reference path unconditionally
  bool pair_parallel = false; // opt-in OpenMP over term pairs (see below)
  Strategy strategy = Strategy::LeftmostSwap;
  long truncate_degree = -1;  // drop result monomials above this degree when >= 0
};

/// PBW product by commutator-driven reordering. Exact; associative; the
/// two reduction strategies must agree (tested).
///
/// The serial path shares one straightening memo across all term pairs
/// and is the default: pairs inside one product always share subwords, so
/// pair-level threading duplicates memo work and rarely pays (the bench
/// target measures this). Callers that want parallelism run whole
/// products as independent work items; pair_parallel remains available
/// for very large single products.
PBWElement multiply(const PBWElement& a, const PBWElement& b, const MultiplyOptions& opt = {});
PBWElement multiply_serial(const PBWElement& a, const PBWElement& b);

PBWElement ad(const PBWElement& x, const PBWElement& a);  // xa - ax

/// Minimal i with a in F_i, i.e. the maximal monomial degree.
/// Throws ZeroElement on 0.
long filtration_degree(const PBWElement& a);

/// Lattice valuation min_terms(v_p(c) - n * deg), i.e. the p-adic
/// valuation in the rescaled basis (p^n x)^beta: nonnegative gauge means
/// membership in the n-th deformation lattice. Gauge of 0 is +infinity.
Valuation gauge(const PBWElement& a, int n, unsigned long p);

/// ad(r * b_index)^m (a) / m!, computed incrementally so divided powers
/// stay exact. b_index must be a root-vector basis index.
PBWElement divided_ad_power(const PBWElement& a, int b_index, const Rat& r, int m);

/// exp(ad(r * b_index)) applied to a. ad of a root vector is locally
/// nilpotent: every basis factor is killed by at most two applications in
/// the supported types, so the series stops by 2*deg(a)+1 terms; an
/// exhausted cap means a broken bracket table and throws.
PBWElement exp_adjoint(const PBWElement& a, int b_index, const Rat& r);

PBWElement reduce_coeffs_mod(const PBWElement& a, unsigned long p, int M);

/// Casimir of the trace form as a PBW element (primitive integer scaling).
PBWElement casimir_element(const ChevalleyPtr& chev);

struct CenterResult {
  long degree_bound = 0;
  int deformation = 0;
  int precision = 0;
  unsigned long p = 5;
  std::size_t lattice_monomials = 0;  // weight-zero candidates considered
  std::vector<PBWElement> basis;      // exact kernel basis, primitive integer
  std::vector<PBWElement> basis_mod;  // coefficients reduced mod p^N
  std::size_t dimension() const { return basis.size(); }
};

/// Degree-truncated centralizer of the Chevalley generators inside the
/// n-th deformation lattice. Solves [x, z] = 0 exactly for all simple e_i,
/// f_i over candidates of degree <= D (ad(h)-weight-zero pruning applied
/// first; it is exact since ordered monomials are ad(h)-eigenvectors).
/// The returned basis is the exact kernel, reported both exactly and
/// reduced mod p^N.
CenterResult truncated_center(const ChevalleyPtr& chev, long D, unsigned long p, int N,
                              int deformation, std::size_t budget_columns = 20000);

}  // namespace padiclie

#endif
