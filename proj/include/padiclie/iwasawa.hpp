#ifndef PADICLIE_IWASAWA_HPP
#define PADICLIE_IWASAWA_HPP

#include <map>
#include <optional>
#include <vector>

#include "padiclie/pbw.hpp"
#include "padiclie/verma.hpp"

namespace padiclie {

/// Uniform pro-p group presented by the Z_p-Lie data of L_G on a basis
/// x_1..x_d: brackets [x_i, x_j] = sum_k c_ijk x_k with every c divisible
/// by p. The PBW engine works over the scaled algebra on y_i = x_i / p
/// (integer constants c/p); group generators are g_i = exp(x_i), so
/// b_i = g_i - 1 embeds as exp(p y_i) - 1.
struct UniformGroupData {
  unsigned long p = 5;
  int rank = 0;  // d
  std::vector<std::vector<long>> bracket_entries;  // rows (i, j, k, coeff), 0-based, i < j
  LiePtr scaled;                                   // algebra on the y basis

  std::string describe() const;
};

UniformGroupData make_uniform_group(unsigned long p, int rank,
                                    const std::vector<std::vector<Rat>>& brackets);
UniformGroupData abelian_uniform_group(unsigned long p, int rank);
UniformGroupData heisenberg_uniform_group(unsigned long p);

/// Congruence-kernel style group attached to a Chevalley algebra: L_G is
/// the p^{n+1}-rescaled Chevalley lattice, so y_i = p^n b_i and monomials
/// transfer to the Chevalley PBW basis by the diagonal p^{n deg} scaling.
struct CongruenceKernelSetup {
  ChevalleyPtr chev;
  int deformation = 0;  // n
  UniformGroupData group;
};
CongruenceKernelSetup congruence_kernel_setup(const ChevalleyPtr& chev, int deformation,
                                              unsigned long p);

/// Finite sum  sum_alpha lambda_alpha b^alpha  in the completed group
/// ring; no intrinsic multiplication, all products go through embed.
class IwasawaElement {
 public:
  using Alpha = std::vector<std::uint16_t>;
  using TermMap = std::map<Alpha, Rat>;

  IwasawaElement() = default;
  explicit IwasawaElement(const UniformGroupData* group) : group_(group) {}

  const UniformGroupData* group() const { return group_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Alpha& a, const Rat& c);

 private:
  const UniformGroupData* group_ = nullptr;
  TermMap terms_;
};

/// log_p of the sup norm |lambda_alpha| (1/p)^{|alpha|}: the exponent
/// max(-v_p(lambda_alpha) - |alpha|); nullopt encodes norm 0.
std::optional<long> norm_exponent(const IwasawaElement& z);

/// Lower bound for the lattice valuation of every term of total degree
/// > D in any product of the exponential series exp(p y_i): the minimum
/// of k - v_p(k!) over k > D. Strictly increasing horizon, computed
/// exactly; this is the one constant all truncation certificates lean on.
long gauge_bound(long D, unsigned long p);

PBWElement embed_generator(const UniformGroupData& g, int i, long D);
PBWElement embed_monomial(const UniformGroupData& g, const IwasawaElement::Alpha& alpha, long D);
/// Product of b-factors in the given (not necessarily sorted) order;
/// exposes the noncommutativity of the group ring for tests.
PBWElement embed_product(const UniformGroupData& g, const std::vector<int>& factors, long D);
PBWElement embed_element(const IwasawaElement& z, long D);

struct RankCertificate {
  std::size_t rows = 0, cols = 0, rank = 0;
  bool full_rank = false;
  long truncation = 0;        // final D used
  int precision = 0;          // M
  long gauge_bound_value = 0;
  long gauge_spread = 0;      // max row gauge - min row gauge
  std::vector<long> pivot_valuations;
  bool certified = false;  // full rank, pivots < M, and M + spread <= gauge bound
};

/// Rows are the PBW coefficient vectors of embed(b^alpha, D) * y^beta for
/// |alpha| <= A, |beta| <= B. Exact rank over Q plus the elementary
/// divisor exponents over Z_p of the gauge-normalized rows; a certified
/// full-rank result is a permanent linear-independence certificate for
/// the untruncated family. Throws TruncationInsufficient when the gauge
/// bound cannot cover M + spread.
RankCertificate injectivity_rank_test(const UniformGroupData& g, int A, int B, long D, int M);

/// Same, but escalates D (in steps of 2) until the truncation check
/// passes or max_D is exceeded.
RankCertificate injectivity_rank_auto(const UniformGroupData& g, int A, int B, long D, int M,
                                      long max_D);

/// p-adic logarithm of theta in 1 + pZ_p, exact partial sum accurate
/// mod p^M. Throws ConvergenceDomain outside the disc.
Rat padic_log(const Rat& theta, unsigned long p, int M);
/// p-adic exponential of lambda in pZ_p, accurate mod p^M.
Rat padic_exp(const Rat& lam, unsigned long p, int M);

/// Character-level conversion: a group character with values theta(g_i)
/// in 1 + pZ_p corresponds to the linear character with lambda(log g_i) =
/// log theta(g_i) in pZ_p, generator by generator; round trips are the
/// identity mod p^M.
std::vector<Rat> theta_to_lambda(const std::vector<Rat>& theta_values, unsigned long p, int M);
std::vector<Rat> lambda_to_theta(const std::vector<Rat>& lambda_values, unsigned long p, int M);

struct FaithfulnessReport {
  bool witness_found = false;
  VermaVector::Beta witness_beta;
  long witness_valuation = 0;  // image lattice valuation relative to the content of zeta
  bool sound = false;          // M within the gauge bound of the truncation
  bool inconclusive = false;   // exhausted the search box; never "unfaithful"
  long D = 0;
  int B = 0;
  int M = 0;
};

/// Searches f^beta v_lambda, |beta| <= B, for a vector whose image under
/// the embedded zeta is nonzero mod p^M in the deformation lattice.
/// Valuations are measured relative to the content of zeta, so the
/// verdict is invariant under scalar rescaling of zeta.
FaithfulnessReport faithfulness_witness(const CongruenceKernelSetup& setup,
                                        const IwasawaElement& zeta,
                                        const WeightCharacter& lambda, long D, int B, int M);

}  // namespace padiclie

#endif
