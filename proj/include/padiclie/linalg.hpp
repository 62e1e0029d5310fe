#ifndef PADICLIE_LINALG_HPP
#define PADICLIE_LINALG_HPP

#include <cstddef>
#include <vector>

#include "padiclie/scalar.hpp"

namespace padiclie {

/// Dense matrix over exact rationals. Row-major, desk scale: every
/// elimination below is exact, no pivot-growth concerns beyond what GMP
/// absorbs.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  static QMatrix identity(std::size_t n);
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix scaled(const Rat& c) const;
  QMatrix transposed() const;
  bool operator==(const QMatrix& o) const = default;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

/// Reduced row echelon form in place; returns pivot column indices.
/// The row-update loop is OpenMP-parallel when enabled; set serial=true to
/// force the reference path.
std::vector<std::size_t> rref(QMatrix& m, bool serial = false);

std::size_t rank(QMatrix m, bool serial = false);

/// Basis of the right kernel {v : m v = 0}. Deterministic: standard
/// free-variable parametrization of the RREF, each vector scaled to a
/// primitive integer vector (content 1, first nonzero entry positive).
std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m, bool serial = false);

/// Solve m x = b exactly; returns false when inconsistent.
bool solve(const QMatrix& m, const std::vector<Rat>& b, std::vector<Rat>& x);

Int determinant(const QMatrix& m);
QMatrix adjugate(const QMatrix& m);

std::vector<Rat> primitive_integer_scale(const std::vector<Rat>& v);

/// Elimination over Z_p by minimal-valuation pivoting. For a p-integral
/// input this yields the elementary divisor exponents of the matrix over
/// Z_p (pivot valuations, sorted ascending), which is what the truncation
/// certificates consume: an exponent e means some unit-content row
/// combination vanishes mod p^(e+1) but not below.
struct PadicElimination {
  std::size_t rank = 0;
  std::vector<long> pivot_valuations;  // ascending
};
PadicElimination padic_elementary_divisors(QMatrix m, unsigned long p);

/// Prime-field matrices for the finite-group machinery. p is carried by
/// the matrix, entries are canonical representatives in [0, p).
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, unsigned long p)
      : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned long p() const { return p_; }
  unsigned long& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  unsigned long at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  unsigned long p_ = 2;
  std::vector<unsigned long> a_;
};

std::vector<std::size_t> rref(FpMatrix& m);
std::size_t rank(FpMatrix m);
std::vector<std::vector<unsigned long>> kernel_basis(const FpMatrix& m);

}  // namespace padiclie

#endif
