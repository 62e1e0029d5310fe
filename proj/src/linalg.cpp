#include "padiclie/linalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "padiclie/errors.hpp"
#include "padiclie/runtime.hpp"

namespace padiclie {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
  QMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
  QMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix diff shape");
  QMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

QMatrix QMatrix::scaled(const Rat& c) const {
  QMatrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

QMatrix QMatrix::transposed() const {
  QMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool QMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

std::vector<std::size_t> rref(QMatrix& m, bool serial) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = col; j < m.cols(); ++j) swap(m.at(piv, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    const long nrows = static_cast<long>(m.rows());
#pragma omp parallel for schedule(dynamic, 8) if (!serial && runtime::parallel_enabled() && nrows > 32)
    for (long i = 0; i < nrows; ++i) {
      if (static_cast<std::size_t>(i) == row) continue;
      const Rat& f = m.at(i, col);
      if (f == 0) continue;
      Rat factor = f;
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(QMatrix m, bool serial) { return rref(m, serial).size(); }

std::vector<Rat> primitive_integer_scale(const std::vector<Rat>& v) {
  Int lcm_den(1), gcd_num(0);
  for (const auto& x : v) {
    if (x == 0) continue;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  }
  std::vector<Rat> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * Rat(lcm_den);
  for (const auto& x : out) {
    if (x == 0) continue;
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), x.get_num().get_mpz_t());
  }
  if (gcd_num == 0) return out;  // zero vector
  int lead_sign = 0;
  for (const auto& x : out)
    if (x != 0) {
      lead_sign = sgn(x);
      break;
    }
  Rat scale = Rat(lead_sign) / Rat(gcd_num);
  for (auto& x : out) x *= scale;
  return out;
}

std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m, bool serial) {
  QMatrix r = m;
  std::vector<std::size_t> pivots = rref(r, serial);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[free_col] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, free_col);
    basis.push_back(primitive_integer_scale(v));
  }
  return basis;
}

bool solve(const QMatrix& m, const std::vector<Rat>& b, std::vector<Rat>& x) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve rhs size");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug, true);
  if (!pivots.empty() && pivots.back() == m.cols()) return false;
  x.assign(m.cols(), Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, m.cols());
  return true;
}

Int determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  QMatrix a = m;
  Rat det(1);
  std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) return Int(0);
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) swap(a.at(piv, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    Rat inv = 1 / a.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      Rat f = a.at(i, col) * inv;
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
    }
  }
  if (det.get_den() != 1) throw Error("non-integer determinant of integer matrix");
  return Int(det.get_num());
}

QMatrix adjugate(const QMatrix& m) {
  // adj(M) = det(M) * M^{-1} when invertible; fall back to cofactors for
  // singular input (only needed for tiny ranks here).
  std::size_t n = m.rows();
  if (n != m.cols()) throw DimensionMismatch("adjugate of non-square matrix");
  if (n == 0) return m;
  if (n == 1) {
    QMatrix r(1, 1);
    r.at(0, 0) = 1;
    return r;
  }
  QMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;  // transpose of cofactor matrix
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(rr, cc) = m.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = determinant(minor);
      adj.at(i, j) = ((i + j) % 2 == 0) ? Rat(cof) : Rat(-cof);
    }
  return adj;
}

PadicElimination padic_elementary_divisors(QMatrix m, unsigned long p) {
  PadicElimination out;
  std::size_t top = 0;
  std::size_t left = 0;
  std::vector<bool> col_done(m.cols(), false);
  while (top < m.rows()) {
    // pick the entry of minimal p-adic valuation in the remaining block
    bool found = false;
    long best_v = 0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = top; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (col_done[j] || m.at(i, j) == 0) continue;
        Valuation v = valuation(m.at(i, j), p);
        if (!found || v.v < best_v) {
          found = true;
          best_v = v.v;
          bi = i;
          bj = j;
        }
      }
    if (!found) break;
    if (best_v < 0) throw Error("padic_elementary_divisors: input not p-integral");
    if (bi != top)
      for (std::size_t j = 0; j < m.cols(); ++j) swap(m.at(bi, j), m.at(top, j));
    Rat pivot = m.at(top, bj);
    for (std::size_t i = top + 1; i < m.rows(); ++i) {
      if (m.at(i, bj) == 0) continue;
      Rat f = m.at(i, bj) / pivot;  // valuation >= 0 by pivot minimality
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!col_done[j]) m.at(i, j) -= f * m.at(top, j);
    }
    col_done[bj] = true;
    out.pivot_valuations.push_back(best_v);
    ++top;
    ++left;
  }
  out.rank = out.pivot_valuations.size();
  std::sort(out.pivot_valuations.begin(), out.pivot_valuations.end());
  return out;
}

namespace {
unsigned long fp_inv(unsigned long a, unsigned long p) {
  long t = 0, nt = 1;
  long r = static_cast<long>(p), nr = static_cast<long>(a % p);
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw Error("fp_inv: not invertible");
  return static_cast<unsigned long>((t % static_cast<long>(p) + static_cast<long>(p)) %
                                    static_cast<long>(p));
}
}  // namespace

std::vector<std::size_t> rref(FpMatrix& m) {
  const unsigned long p = m.p();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m.at(piv, col) % p == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
    unsigned long inv = fp_inv(m.at(row, col), p);
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv % p;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      unsigned long f = m.at(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(i, j) = (m.at(i, j) + (p - f) * m.at(row, j)) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(FpMatrix m) { return rref(m).size(); }

std::vector<std::vector<unsigned long>> kernel_basis(const FpMatrix& m) {
  FpMatrix r = m;
  const unsigned long p = m.p();
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<unsigned long>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<unsigned long> v(m.cols(), 0);
    v[free_col] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = (p - r.at(k, free_col) % p) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace padiclie
