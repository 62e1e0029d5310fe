#ifndef PADICLIE_SMASH_HPP
#define PADICLIE_SMASH_HPP

#include <optional>
#include <string>
#include <vector>

#include "padiclie/scalar.hpp"

namespace padiclie {

/// Finite group given by its multiplication table. Everything is checked
/// on construction (associativity, identity, inverses).
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[g][h] = g*h
  std::vector<int> inverse;
  int identity = 0;
  std::string name;

  int mul(int g, int h) const { return table[g][h]; }
};

FiniteGroup group_from_table(std::vector<std::vector<int>> table, std::string name = "custom");
FiniteGroup cyclic_group(int n);
FiniteGroup symmetric3();
FiniteGroup dihedral_group(int n);  // order 2n

/// Subgroup as a sorted element list; normality required where cosets are
/// used as Hopf data.
std::vector<int> cyclic_subgroup(const FiniteGroup& g, int generator);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h);
bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& h);
std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const std::vector<int>& h);

/// Coefficient field: the rationals or a prime field F_p (p <= 7 keeps the
/// brute-force budgets honest).
struct SmashBase {
  bool rational = true;
  unsigned long p = 0;

  static SmashBase rationals() { return {true, 0}; }
  static SmashBase prime_field(unsigned long p) { return {false, p}; }
  std::string describe() const { return rational ? "Q" : "F" + std::to_string(p); }
  bool operator==(const SmashBase&) const = default;
};

/// Element of k[F] # Fun(F, k): coefficients c[g][h] on g # delta_h.
/// Multiplication rule on the basis:
///   (g # d_h)(g' # d_{h'}) = [h == g'h'] (gg' # d_{h'})
/// which is the smash twist of the pointwise Hopf structure on Fun(F,k).
class SmashElement {
 public:
  SmashElement() = default;
  SmashElement(const FiniteGroup* group, SmashBase base);

  static SmashElement group_term(const FiniteGroup* g, SmashBase base, int elem);     // g # 1
  static SmashElement delta_term(const FiniteGroup* g, SmashBase base, int point);    // 1 # d_h
  static SmashElement basis_term(const FiniteGroup* g, SmashBase base, int elem, int point);
  static SmashElement one(const FiniteGroup* g, SmashBase base);

  const FiniteGroup* group() const { return group_; }
  const SmashBase& base() const { return base_; }
  Rat& at(int g, int h) { return coeffs_[g * group_->order + h]; }
  const Rat& at(int g, int h) const { return coeffs_[g * group_->order + h]; }

  SmashElement operator+(const SmashElement& o) const;
  SmashElement operator-(const SmashElement& o) const;
  bool operator==(const SmashElement& o) const;
  bool is_zero() const;

 private:
  const FiniteGroup* group_ = nullptr;
  SmashBase base_;
  std::vector<Rat> coeffs_;

  void normalize();  // reduce mod p for prime fields
  friend SmashElement smash_multiply(const SmashElement&, const SmashElement&);
};

SmashElement smash_multiply(const SmashElement& x, const SmashElement& y);

/// Action of the smash product on A = k[F]: (g # d_h) e_x = [x == h] e_{gx}.
std::vector<Rat> smash_act(const SmashElement& x, const std::vector<Rat>& vec);

/// Basis of the Fun(F/E)-invariants of k[F], computed as the kernel of
/// the action constraints (not by the structural shortcut); for a normal
/// subgroup E these are exactly k[E].
std::vector<std::vector<Rat>> invariant_subalgebra(const FiniteGroup& g,
                                                   const std::vector<int>& subgroup,
                                                   SmashBase base);

struct SimplicityCertificate {
  bool simple = false;
  bool exhaustive = false;        // every nonzero vector enumerated (prime fields)
  std::size_t vectors_checked = 0;
  bool spans_matrix_algebra = false;
  std::optional<std::vector<Rat>> failing_vector;
};

/// Checks that every nonzero vector of k[F] generates the whole module
/// over k[F] # Fun(F,k). Prime-field instances within budget are settled
/// by enumeration; otherwise the operator span is compared against the
/// full matrix algebra, which gives the same transitivity statement.
SimplicityCertificate simplicity_certificate(const FiniteGroup& g, SmashBase base,
                                             std::size_t enumeration_budget = 100000);

struct EndomorphismCheck {
  std::size_t dim_end = 0;
  std::size_t dim_invariants = 0;
  bool right_multiplications = false;  // every endomorphism is x -> x * phi(1)
  bool pass = false;
};

/// End over k[F] # Fun(F/E) of k[F] by solving the commutation system;
/// compared against the invariant subalgebra dimension.
EndomorphismCheck endomorphism_check(const FiniteGroup& g, const std::vector<int>& subgroup,
                                     SmashBase base);

}  // namespace padiclie

#endif
