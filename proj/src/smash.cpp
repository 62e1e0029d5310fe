#include "padiclie/smash.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "padiclie/errors.hpp"
#include "padiclie/linalg.hpp"

namespace padiclie {

FiniteGroup group_from_table(std::vector<std::vector<int>> table, std::string name) {
  FiniteGroup g;
  g.order = static_cast<int>(table.size());
  g.name = std::move(name);
  if (g.order == 0) throw ConfigInvalid("empty multiplication table");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != g.order) throw ConfigInvalid("ragged multiplication table");
  g.table = std::move(table);

  int id = -1;
  for (int e = 0; e < g.order; ++e) {
    bool ok = true;
    for (int x = 0; x < g.order; ++x)
      if (g.table[e][x] != x || g.table[x][e] != x) {
        ok = false;
        break;
      }
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw ConfigInvalid("multiplication table has no identity");
  g.identity = id;

  g.inverse.assign(g.order, -1);
  for (int x = 0; x < g.order; ++x) {
    for (int y = 0; y < g.order; ++y)
      if (g.table[x][y] == id && g.table[y][x] == id) {
        g.inverse[x] = y;
        break;
      }
    if (g.inverse[x] < 0) throw ConfigInvalid("element without inverse");
  }
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      for (int c = 0; c < g.order; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          throw ConfigInvalid("multiplication table is not associative");
  return g;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw ConfigInvalid("cyclic group order must be >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return group_from_table(std::move(t), "C" + std::to_string(n));
}

FiniteGroup symmetric3() {
  // permutations of {0,1,2} listed as id, (01), (02), (12), (012), (021)
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto compose = [&](int a, int b) {
    std::array<int, 3> c{};
    for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
    for (int k = 0; k < 6; ++k)
      if (perms[k] == c) return k;
    throw Error("S3 composition fell outside the table");
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t[a][b] = compose(a, b);
  return group_from_table(std::move(t), "S3");
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw ConfigInvalid("dihedral parameter must be >= 1");
  // elements r^a s^e encoded as a + n*e
  int order = 2 * n;
  auto enc = [&](int a, int e) { return ((a % n + n) % n) + n * e; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < n; ++a)
    for (int e = 0; e < 2; ++e)
      for (int b = 0; b < n; ++b)
        for (int f = 0; f < 2; ++f) {
          // (r^a s^e)(r^b s^f) = r^{a + (-1)^e b} s^{e+f}
          int exp = e == 0 ? a + b : a - b;
          t[enc(a, e)][enc(b, f)] = enc(exp, (e + f) % 2);
        }
  return group_from_table(std::move(t), "D" + std::to_string(n));
}

std::vector<int> cyclic_subgroup(const FiniteGroup& g, int generator) {
  std::vector<int> h{g.identity};
  int x = generator;
  while (x != g.identity) {
    h.push_back(x);
    x = g.mul(x, generator);
  }
  std::sort(h.begin(), h.end());
  return h;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
  if (!std::binary_search(h.begin(), h.end(), g.identity)) return false;
  for (int a : h)
    for (int b : h)
      if (!std::binary_search(h.begin(), h.end(), g.mul(a, b))) return false;
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
  if (!is_subgroup(g, h)) return false;
  for (int x = 0; x < g.order; ++x)
    for (int a : h)
      if (!std::binary_search(h.begin(), h.end(), g.mul(g.mul(x, a), g.inverse[x]))) return false;
  return true;
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const std::vector<int>& h) {
  std::vector<bool> seen(g.order, false);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < g.order; ++x) {
    if (seen[x]) continue;
    std::vector<int> coset;
    for (int a : h) {
      int y = g.mul(x, a);
      coset.push_back(y);
      seen[y] = true;
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

SmashElement::SmashElement(const FiniteGroup* group, SmashBase base)
    : group_(group), base_(base),
      coeffs_(static_cast<std::size_t>(group->order) * group->order, Rat(0)) {}

void SmashElement::normalize() {
  if (base_.rational) return;
  for (auto& c : coeffs_) {
    if (c == 0) continue;
    c = Rat(reduce_mod(c, base_.p, 1));
  }
}

SmashElement SmashElement::basis_term(const FiniteGroup* g, SmashBase base, int elem, int point) {
  SmashElement x(g, base);
  x.at(elem, point) = 1;
  return x;
}

SmashElement SmashElement::group_term(const FiniteGroup* g, SmashBase base, int elem) {
  SmashElement x(g, base);
  for (int h = 0; h < g->order; ++h) x.at(elem, h) = 1;  // g # 1 = sum_h g # d_h
  return x;
}

SmashElement SmashElement::delta_term(const FiniteGroup* g, SmashBase base, int point) {
  return basis_term(g, base, g->identity, point);
}

SmashElement SmashElement::one(const FiniteGroup* g, SmashBase base) {
  return group_term(g, base, g->identity);
}

SmashElement SmashElement::operator+(const SmashElement& o) const {
  if (group_ != o.group_ || !(base_ == o.base_)) throw BaseMismatch("smash sum operands");
  SmashElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  r.normalize();
  return r;
}

SmashElement SmashElement::operator-(const SmashElement& o) const {
  if (group_ != o.group_ || !(base_ == o.base_)) throw BaseMismatch("smash diff operands");
  SmashElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  r.normalize();
  return r;
}

bool SmashElement::operator==(const SmashElement& o) const {
  if (group_ != o.group_ || !(base_ == o.base_)) return false;
  SmashElement d = *this - o;
  return d.is_zero();
}

bool SmashElement::is_zero() const {
  SmashElement c = *this;
  c.normalize();
  return std::all_of(c.coeffs_.begin(), c.coeffs_.end(), [](const Rat& x) { return x == 0; });
}

SmashElement smash_multiply(const SmashElement& x, const SmashElement& y) {
  if (x.group() != y.group() || !(x.base() == y.base()))
    throw BaseMismatch("smash product operands live over different data");
  const FiniteGroup& F = *x.group();
  SmashElement r(x.group(), x.base());
  for (int g = 0; g < F.order; ++g)
    for (int h = 0; h < F.order; ++h) {
      const Rat& a = x.at(g, h);
      if (a == 0) continue;
      for (int g2 = 0; g2 < F.order; ++g2) {
        // (g # d_h)(g2 # d_{h2}) survives only for h2 = g2^{-1} h
        int h2 = F.mul(F.inverse[g2], h);
        const Rat& b = y.at(g2, h2);
        if (b == 0) continue;
        r.at(F.mul(g, g2), h2) += a * b;
      }
    }
  r.normalize();
  return r;
}

std::vector<Rat> smash_act(const SmashElement& x, const std::vector<Rat>& vec) {
  const FiniteGroup& F = *x.group();
  if (static_cast<int>(vec.size()) != F.order) throw DimensionMismatch("module vector size");
  std::vector<Rat> out(F.order, Rat(0));
  for (int g = 0; g < F.order; ++g)
    for (int h = 0; h < F.order; ++h) {
      const Rat& c = x.at(g, h);
      if (c == 0 || vec[h] == 0) continue;
      out[F.mul(g, h)] += c * vec[h];
    }
  if (!x.base().rational)
    for (auto& v : out) v = Rat(reduce_mod(v, x.base().p, 1));
  return out;
}

namespace {

/// Kernel of an integer constraint matrix over the chosen base.
std::vector<std::vector<Rat>> base_kernel(const std::vector<std::vector<long>>& rows,
                                          std::size_t cols, SmashBase base) {
  std::vector<std::vector<Rat>> out;
  if (base.rational) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    for (auto& v : kernel_basis(m)) out.push_back(std::move(v));
  } else {
    FpMatrix m(rows.size(), cols, base.p);
    long p = static_cast<long>(base.p);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = ((rows[i][j] % p) + p) % p;
    for (auto& v : kernel_basis(m)) {
      std::vector<Rat> w(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) w[j] = Rat(static_cast<long>(v[j]));
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Rat>> invariant_subalgebra(const FiniteGroup& g,
                                                   const std::vector<int>& subgroup,
                                                   SmashBase base) {
  if (!is_normal_subgroup(g, subgroup))
    throw ConfigInvalid("coset functions need a normal subgroup");
  auto cosets = left_cosets(g, subgroup);
  // d_C . a = eps(d_C) a for every coset indicator: projection onto the
  // coset coordinates equals a (coset of 1) or 0 (other cosets)
  std::vector<std::vector<long>> rows;
  for (const auto& coset : cosets) {
    bool has_identity = std::binary_search(coset.begin(), coset.end(), g.identity);
    for (int x = 0; x < g.order; ++x) {
      std::vector<long> row(g.order, 0);
      bool in_coset = std::binary_search(coset.begin(), coset.end(), x);
      row[x] = (in_coset ? 1 : 0) - (has_identity ? 1 : 0);
      if (std::any_of(row.begin(), row.end(), [](long v) { return v != 0; }))
        rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) rows.push_back(std::vector<long>(g.order, 0));
  return base_kernel(rows, g.order, base);
}

SimplicityCertificate simplicity_certificate(const FiniteGroup& g, SmashBase base,
                                             std::size_t enumeration_budget) {
  if (g.order > 12) throw BudgetExceeded("simplicity certificate limited to order <= 12");
  if (!base.rational && base.p > 7) throw BudgetExceeded("prime field budget is p <= 7");
  SimplicityCertificate cert;
  const int n = g.order;

  // operator span: (g # d_h) acts as the matrix unit E_{gh, h}, so the
  // image of the smash algebra inside End(k[F]) is all of M_n(k)
  std::vector<std::vector<long>> span_rows;
  for (int gg = 0; gg < n; ++gg)
    for (int h = 0; h < n; ++h) {
      std::vector<long> row(static_cast<std::size_t>(n) * n, 0);
      row[static_cast<std::size_t>(g.mul(gg, h)) * n + h] = 1;
      span_rows.push_back(std::move(row));
    }
  std::size_t span_rank;
  if (base.rational) {
    QMatrix m(span_rows.size(), static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < span_rows.size(); ++i)
      for (std::size_t j = 0; j < span_rows[i].size(); ++j) m.at(i, j) = span_rows[i][j];
    span_rank = rank(std::move(m));
  } else {
    FpMatrix m(span_rows.size(), static_cast<std::size_t>(n) * n, base.p);
    for (std::size_t i = 0; i < span_rows.size(); ++i)
      for (std::size_t j = 0; j < span_rows[i].size(); ++j)
        m.at(i, j) = static_cast<unsigned long>(span_rows[i][j]);
    span_rank = rank(std::move(m));
  }
  cert.spans_matrix_algebra = (span_rank == static_cast<std::size_t>(n) * n);

  if (base.rational) {
    // infinitely many vectors; the matrix-algebra span settles generation:
    // pick any v != 0 and a coordinate v_h != 0, then E_{x,h} v spans
    cert.simple = cert.spans_matrix_algebra;
    cert.exhaustive = false;
    return cert;
  }

  // prime field: walk every nonzero vector
  double total_d = 1;
  for (int i = 0; i < n; ++i) total_d *= static_cast<double>(base.p);
  if (total_d - 1 > static_cast<double>(enumeration_budget))
    throw BudgetExceeded("vector enumeration exceeds budget");

  std::vector<Rat> v(n, Rat(0));
  std::vector<unsigned long> digits(n, 0);
  cert.simple = true;
  while (true) {
    // increment base-p counter
    int pos = 0;
    while (pos < n && digits[pos] == base.p - 1) digits[pos++] = 0;
    if (pos == n) break;
    ++digits[pos];
    for (int i = 0; i < n; ++i) v[i] = Rat(static_cast<long>(digits[i]));
    ++cert.vectors_checked;

    // span of the operator images of v
    FpMatrix images(static_cast<std::size_t>(n) * n, n, base.p);
    std::size_t r = 0;
    for (int gg = 0; gg < n; ++gg)
      for (int h = 0; h < n; ++h, ++r) {
        // E_{gg*h, h} v = v_h e_{gg*h}
        images.at(r, g.mul(gg, h)) = digits[h];
      }
    if (rank(std::move(images)) != static_cast<std::size_t>(n)) {
      cert.simple = false;
      cert.failing_vector = v;
      break;
    }
  }
  cert.exhaustive = true;
  return cert;
}

EndomorphismCheck endomorphism_check(const FiniteGroup& g, const std::vector<int>& subgroup,
                                     SmashBase base) {
  if (g.order > 12) throw BudgetExceeded("endomorphism check limited to order <= 12");
  const int n = g.order;
  auto cosets = left_cosets(g, subgroup);
  if (!is_normal_subgroup(g, subgroup))
    throw ConfigInvalid("coset functions need a normal subgroup");

  // unknowns M[y][x] (phi(e_x) = sum_y M[y][x] e_y), flattened y*n + x
  std::vector<std::vector<long>> rows;
  auto idx = [&](int y, int x) { return static_cast<std::size_t>(y) * n + x; };

  // commute with left translations: M[y][g0 x] = M[g0^{-1} y][x]
  for (int g0 = 0; g0 < n; ++g0) {
    if (g0 == g.identity) continue;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        std::vector<long> row(static_cast<std::size_t>(n) * n, 0);
        row[idx(y, g.mul(g0, x))] += 1;
        row[idx(g.mul(g.inverse[g0], y), x)] -= 1;
        if (std::any_of(row.begin(), row.end(), [](long v) { return v != 0; }))
          rows.push_back(std::move(row));
      }
  }
  // commute with coset projections: [y in C] M[y][x] = [x in C] M[y][x]
  for (const auto& coset : cosets) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        bool cy = std::binary_search(coset.begin(), coset.end(), y);
        bool cx = std::binary_search(coset.begin(), coset.end(), x);
        if (cy == cx) continue;
        std::vector<long> row(static_cast<std::size_t>(n) * n, 0);
        row[idx(y, x)] = 1;
        rows.push_back(std::move(row));
      }
  }
  if (rows.empty()) rows.push_back(std::vector<long>(static_cast<std::size_t>(n) * n, 0));

  auto kernel = base_kernel(rows, static_cast<std::size_t>(n) * n, base);
  EndomorphismCheck out;
  out.dim_end = kernel.size();
  out.dim_invariants = invariant_subalgebra(g, subgroup, base).size();

  // every solution should be right multiplication by phi(1)
  out.right_multiplications = true;
  for (const auto& sol : kernel) {
    // r = phi(e_identity); check M[y][x] = r[x^{-1} y]
    std::vector<Rat> r(n);
    for (int y = 0; y < n; ++y) r[y] = sol[idx(y, g.identity)];
    for (int x = 0; x < n && out.right_multiplications; ++x)
      for (int y = 0; y < n; ++y) {
        Rat want = r[g.mul(g.inverse[x], y)];
        Rat have = sol[idx(y, x)];
        Rat diff = want - have;
        if (!base.rational && diff != 0) diff = Rat(reduce_mod(diff, base.p, 1));
        if (diff != 0) {
          out.right_multiplications = false;
          break;
        }
      }
  }
  out.pass = (out.dim_end == out.dim_invariants) && out.right_multiplications;
  return out;
}

}  // namespace padiclie
