#ifndef PADICLIE_LIE_HPP
#define PADICLIE_LIE_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "padiclie/scalar.hpp"

namespace padiclie {

/// A finite-dimensional Lie algebra presented by an ordered basis and a
/// bracket table. The PBW engine only ever sees this interface, so the
/// same straightening code serves the Chevalley algebras and the
/// Iwasawa-side algebras of uniform groups.
class LieAlgebra {
 public:
  using SparseVec = std::vector<std::pair<int, Rat>>;  // sorted by index

  LieAlgebra() = default;
  LieAlgebra(int dim, std::vector<std::string> labels);

  int dim() const { return dim_; }
  const std::string& label(int i) const { return labels_[i]; }

  void set_bracket(int i, int j, SparseVec value);  // also fills [j,i] = -value
  const SparseVec& bracket(int i, int j) const { return table_[i * dim_ + j]; }

  /// Bracket of dense coefficient vectors, bilinear extension of the table.
  std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

  bool jacobi_holds(int i, int j, int k) const;
  bool all_integer_constants() const;

 private:
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
};

using LiePtr = std::shared_ptr<const LieAlgebra>;

}  // namespace padiclie

#endif
