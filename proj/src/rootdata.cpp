#include "padiclie/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "padiclie/errors.hpp"
#include "padiclie/linalg.hpp"

namespace padiclie {

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'G': return Family::G;
    default: throw UnsupportedType(std::string("unknown family '") + c + "'");
  }
}

std::string RootDatum::label() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

long RootDatum::root_pairing(const std::vector<long>& root_coords, int j) const {
  long s = 0;
  for (int i = 0; i < rank; ++i) s += root_coords[i] * cartan[i][j];
  return s;
}

long RootDatum::root_height(int root_index) const {
  long h = 0;
  for (long c : positive_roots[root_index]) h += c;
  return h;
}

std::vector<long> RootDatum::root_to_weight_coords(const std::vector<long>& c) const {
  std::vector<long> w(rank, 0);
  for (int k = 0; k < rank; ++k)
    for (int i = 0; i < rank; ++i) w[k] += c[i] * cartan[i][k];
  return w;
}

std::vector<Rat> RootDatum::root_to_weight_coords(const std::vector<Rat>& c) const {
  std::vector<Rat> w(rank, Rat(0));
  for (int k = 0; k < rank; ++k)
    for (int i = 0; i < rank; ++i) w[k] += c[i] * Rat(cartan[i][k]);
  return w;
}

int RootDatum::index_of_root(const std::vector<long>& coords) const {
  for (int i = 0; i < num_positive(); ++i)
    if (positive_roots[i] == coords) return i;
  return -1;
}

namespace {

std::vector<std::vector<long>> cartan_matrix(Family family, int rank) {
  std::vector<std::vector<long>> c(rank, std::vector<long>(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  auto link = [&](int i, int j, long cij, long cji) {
    c[i][j] = cij;
    c[j][i] = cji;
  };
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1, -1, -1);
      break;
    case Family::B:
      // alpha_rank is the short root; alpha_{rank-1}(h_rank) = -2
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1, -1, -1);
      c[rank - 2][rank - 1] = -2;
      break;
    case Family::C:
      // alpha_rank is the long root; alpha_rank(h_{rank-1}) = -2
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1, -1, -1);
      c[rank - 1][rank - 2] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < rank; ++i) link(i, i + 1, -1, -1);
      link(rank - 3, rank - 1, -1, -1);
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long
      link(0, 1, -1, -3);
      break;
  }
  return c;
}

bool supported(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1 && rank <= 4;
    case Family::B: return rank == 2;
    case Family::C: return rank == 3;
    case Family::D: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

/// Positive roots by closure from the simple system: beta + alpha_i is a
/// root iff r - beta(h_i) > 0 where r is the number of times alpha_i can
/// be subtracted from beta while staying in the system.
std::vector<std::vector<long>> enumerate_positive_roots(const RootDatum& d) {
  std::set<std::vector<long>> roots;
  for (int i = 0; i < d.rank; ++i) {
    std::vector<long> a(d.rank, 0);
    a[i] = 1;
    roots.insert(a);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<long>> snapshot(roots.begin(), roots.end());
    for (const auto& beta : snapshot) {
      for (int i = 0; i < d.rank; ++i) {
        long r = 0;
        std::vector<long> down = beta;
        while (true) {
          down[i] -= 1;
          bool nonneg = std::all_of(down.begin(), down.end(), [](long x) { return x >= 0; });
          bool zero = std::all_of(down.begin(), down.end(), [](long x) { return x == 0; });
          if (!nonneg || zero || !roots.count(down)) break;
          ++r;
        }
        long pairing = 0;
        for (int j = 0; j < d.rank; ++j) pairing += beta[j] * d.cartan[j][i];
        if (r - pairing > 0) {
          std::vector<long> up = beta;
          up[i] += 1;
          if (roots.insert(up).second) grew = true;
        }
      }
    }
  }
  std::vector<std::vector<long>> out(roots.begin(), roots.end());
  // height ascending, then simple-root index order within a height level
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    long ha = 0, hb = 0;
    for (long x : a) ha += x;
    for (long x : b) hb += x;
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  return out;
}

}  // namespace

RootDatum build_root_datum(Family family, int rank) {
  if (!supported(family, rank))
    throw UnsupportedType("unsupported type " + std::string(1, static_cast<char>(family)) +
                          std::to_string(rank));
  RootDatum d;
  d.family = family;
  d.rank = rank;
  d.cartan = cartan_matrix(family, rank);

  QMatrix c(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) c.at(i, j) = d.cartan[i][j];
  d.det = determinant(c).get_si();
  QMatrix adj = adjugate(c);
  d.adjugate.assign(rank, std::vector<long>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (adj.at(i, j).get_den() != 1) throw Error("non-integer adjugate entry");
      d.adjugate[i][j] = adj.at(i, j).get_num().get_si();
    }
  d.positive_roots = enumerate_positive_roots(d);
  return d;
}

RootDatum build_root_datum(const std::string& label) {
  if (label.size() != 2) throw UnsupportedType("bad type label: " + label);
  return build_root_datum(family_from_char(label[0]), label[1] - '0');
}

std::vector<long> adjugate_weight_combination(const RootDatum& datum,
                                              const std::vector<long>& mu) {
  if (static_cast<int>(mu.size()) != datum.rank)
    throw DimensionMismatch("mu must have one entry per simple root");
  std::vector<long> out(datum.rank, 0);
  for (int j = 0; j < datum.rank; ++j)
    for (int i = 0; i < datum.rank; ++i) out[j] += mu[i] * datum.adjugate[i][j];
  return out;
}

std::vector<std::vector<long>> simple_reflection_matrix(const RootDatum& datum, int i) {
  // s_i(alpha_j) = alpha_j - C_ji alpha_i; columns are images of the basis.
  int n = datum.rank;
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (int j = 0; j < n; ++j) m[j][j] = 1;
  for (int j = 0; j < n; ++j) m[i][j] -= datum.cartan[j][i];
  return m;
}

namespace {
std::vector<std::vector<long>> mat_mul(const std::vector<std::vector<long>>& a,
                                       const std::vector<std::vector<long>>& b) {
  std::size_t n = a.size();
  std::vector<std::vector<long>> r(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}
}  // namespace

std::vector<long> apply_weyl(const WeylElement& w, const std::vector<long>& root_coords) {
  std::size_t n = w.matrix.size();
  std::vector<long> out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += w.matrix[i][j] * root_coords[j];
  return out;
}

WeylElement longest_element(const RootDatum& datum, std::size_t max_group_order) {
  int n = datum.rank;
  std::vector<std::vector<std::vector<long>>> gens(n);
  for (int i = 0; i < n; ++i) gens[i] = simple_reflection_matrix(datum, i);

  std::map<std::vector<std::vector<long>>, std::vector<int>> seen;
  std::vector<std::vector<long>> id(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  seen.emplace(id, std::vector<int>{});
  std::vector<std::vector<std::vector<long>>> frontier{id};
  WeylElement longest{{}, id};
  while (!frontier.empty()) {
    std::vector<std::vector<std::vector<long>>> next;
    for (const auto& m : frontier) {
      const auto& word = seen.at(m);
      for (int i = 0; i < n; ++i) {
        auto prod = mat_mul(gens[i], m);
        if (seen.count(prod)) continue;
        if (seen.size() >= max_group_order)
          throw SearchBudgetExceeded("Weyl group enumeration exceeded budget");
        std::vector<int> w = word;
        w.insert(w.begin(), i);
        seen.emplace(prod, w);
        next.push_back(prod);
        if (w.size() > longest.word.size()) longest = WeylElement{w, prod};
      }
    }
    frontier = std::move(next);
  }
  return longest;
}

Rat weight_pairing(const std::vector<Rat>& weight, int j) {
  if (j < 0 || static_cast<std::size_t>(j) >= weight.size())
    throw DimensionMismatch("coroot index out of range");
  return weight[j];
}

}  // namespace padiclie
