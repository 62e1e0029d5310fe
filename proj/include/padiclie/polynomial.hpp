#ifndef PADICLIE_POLYNOMIAL_HPP
#define PADICLIE_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padiclie/scalar.hpp"

namespace padiclie {

/// Multivariate polynomial over exact rationals; exponent-vector keyed.
class Polynomial {
 public:
  using Exp = std::vector<std::uint16_t>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}
  static Polynomial variable(int nvars, int i);
  static Polynomial constant(int nvars, const Rat& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exp, Rat>& terms() const { return terms_; }
  void add_term(const Exp& e, const Rat& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  long degree_in(int var) const;
  Rat evaluate(const std::vector<Rat>& point) const;

 private:
  int nvars_;
  std::map<Exp, Rat> terms_;
};

/// Outcome of testing vanishing on a product grid. When the grid is large
/// enough in every variable (|A_j| > deg_j f), grid vanishing forces
/// f = 0; the certificate records the per-variable interpolation counts
/// that justify the step, mirroring the inductive divisibility argument
/// (each grid value y beyond the degree contributes a factor x_j - y).
struct GridCertificate {
  bool sufficient = false;  // every grid exceeds the matching degree
  std::vector<long> degrees;
  std::vector<std::size_t> grid_sizes;
  // per variable, the deg_j + 1 grid points whose vanishing rows drive the
  // interpolation step (each contributes a linear factor x_j - y)
  std::vector<std::vector<Rat>> used_points;
};

struct GridVanishingReport {
  bool vanishes = false;
  bool is_zero = false;
  std::optional<std::vector<Rat>> witness_point;  // non-vanishing point
  Rat witness_value;
  GridCertificate certificate;
};

GridVanishingReport grid_vanishing_check(const Polynomial& f,
                                         const std::vector<std::vector<Rat>>& grids);

}  // namespace padiclie

#endif
