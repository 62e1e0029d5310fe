#ifndef PADICLIE_CHEVALLEY_HPP
#define PADICLIE_CHEVALLEY_HPP

#include <memory>
#include <vector>

#include "padiclie/lie.hpp"
#include "padiclie/linalg.hpp"
#include "padiclie/rootdata.hpp"

namespace padiclie {

/// A split semisimple Lie algebra with basis f_1..f_m, h_1..h_l, e_1..e_m
/// (fixed global order: negative root vectors in the positive-root order of
/// the datum, then coroots, then positive root vectors). Structure
/// constants come from an explicit faithful matrix model per type, so every
/// sign is pinned by matrix arithmetic rather than by a convention table;
/// the model itself is kept as the commutator oracle.
class ChevalleyAlgebra {
 public:
  RootDatum datum;
  LiePtr lie;
  std::vector<QMatrix> rep;  // defining matrix of each basis element

  int num_positive() const { return datum.num_positive(); }
  int rank() const { return datum.rank; }
  int dim() const { return lie->dim(); }

  int f_index(int root) const { return root; }
  int h_index(int i) const { return num_positive() + i; }
  int e_index(int root) const { return num_positive() + rank() + root; }

  bool is_f(int basis) const { return basis < num_positive(); }
  bool is_h(int basis) const {
    return basis >= num_positive() && basis < num_positive() + rank();
  }
  bool is_e(int basis) const { return basis >= num_positive() + rank(); }

  /// Root of a root-vector basis index, in simple-root coordinates with
  /// sign (+ for e, - for f). Throws for coroot indices.
  std::vector<long> root_of_basis(int basis) const;

  /// ad(h_i)-eigenvalue of a basis vector (0 on the Cartan part).
  long weight_on(int basis, int i) const;
};

using ChevalleyPtr = std::shared_ptr<const ChevalleyAlgebra>;

/// Supported: A1..A4 (trace-zero matrices), B2/C3/D4 (bilinear-form
/// models). G2 is not carried by a matrix model here and is rejected.
ChevalleyPtr build_chevalley(const RootDatum& datum);
ChevalleyPtr build_chevalley(const std::string& label);

/// Quadratic Casimir from the trace form of the defining model, scaled to
/// a primitive integer element of U(g). For A1 this normalization is
/// h^2 + 2h + 4fe. Returned as PBW-ready coefficients: list of
/// (basis-index pair (i, j) meaning b_i b_j with i <= j in basis order,
/// coefficient) plus a linear part; consumed by the pbw module.
struct CasimirData {
  std::vector<std::pair<std::pair<int, int>, Rat>> quadratic;  // ordered pairs i <= j
  std::vector<std::pair<int, Rat>> linear;
};
CasimirData quadratic_casimir(const ChevalleyAlgebra& g);

}  // namespace padiclie

#endif
