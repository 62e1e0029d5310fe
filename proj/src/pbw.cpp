#include "padiclie/pbw.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "padiclie/errors.hpp"
#include "padiclie/linalg.hpp"
#include "padiclie/runtime.hpp"

namespace padiclie {

long mono_degree(const Mono& m) {
  long d = 0;
  for (auto e : m) d += e;
  return d;
}

PBWElement PBWElement::unit(LiePtr lie) {
  PBWElement x(lie);
  x.terms_.emplace(Mono(lie->dim(), 0), Rat(1));
  return x;
}

PBWElement PBWElement::basis(LiePtr lie, int index) {
  if (index < 0 || index >= lie->dim()) throw DimensionMismatch("basis index out of range");
  PBWElement x(lie);
  Mono m(lie->dim(), 0);
  m[index] = 1;
  x.terms_.emplace(std::move(m), Rat(1));
  return x;
}

PBWElement PBWElement::monomial(LiePtr lie, const Mono& m, const Rat& c) {
  PBWElement x(std::move(lie));
  if (c != 0) x.terms_.emplace(m, c);
  return x;
}

Rat PBWElement::coefficient(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void PBWElement::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PBWElement PBWElement::operator+(const PBWElement& o) const {
  PBWElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

PBWElement PBWElement::operator-(const PBWElement& o) const {
  PBWElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

PBWElement PBWElement::operator-() const { return scaled(Rat(-1)); }

PBWElement PBWElement::scaled(const Rat& c) const {
  PBWElement r(lie_);
  if (c == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

namespace {

using Word = std::vector<std::uint8_t>;

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (auto b : w) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using TermMap = PBWElement::TermMap;
using Cache = std::unordered_map<Word, TermMap, WordHash>;

Mono word_to_mono(const Word& w, int dim) {
  Mono m(dim, 0);
  for (auto b : w) ++m[b];
  return m;
}

void accumulate(TermMap& into, const TermMap& from, const Rat& scale) {
  for (const auto& [m, c] : from) {
    Rat v = c * scale;
    auto [it, fresh] = into.emplace(m, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) into.erase(it);
    }
  }
}

/// Straighten an arbitrary word into the ordered-monomial basis:
/// ... x y ... = ... y x ... + ... [x,y] ... whenever x > y sit adjacent.
/// Both terms have strictly fewer inversions / lower degree, so the
/// recursion terminates; memoization keys on whole words.
const TermMap& straighten(const LieAlgebra& lie, const Word& w, Cache& cache,
                          Strategy strategy) {
  auto hit = cache.find(w);
  if (hit != cache.end()) return hit->second;

  long inv = -1;
  if (strategy == Strategy::LeftmostSwap) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) {
        inv = static_cast<long>(i);
        break;
      }
  } else {
    for (std::size_t i = w.size(); i-- > 1;)
      if (w[i - 1] > w[i]) {
        inv = static_cast<long>(i - 1);
        break;
      }
  }

  TermMap result;
  if (inv < 0) {
    result.emplace(word_to_mono(w, lie.dim()), Rat(1));
  } else {
    Word swapped = w;
    std::swap(swapped[inv], swapped[inv + 1]);
    accumulate(result, straighten(lie, swapped, cache, strategy), Rat(1));
    const auto& br = lie.bracket(w[inv], w[inv + 1]);
    if (!br.empty()) {
      Word shorter;
      shorter.reserve(w.size() - 1);
      shorter.assign(w.begin(), w.begin() + inv);
      shorter.push_back(0);  // placeholder
      shorter.insert(shorter.end(), w.begin() + inv + 2, w.end());
      for (const auto& [k, c] : br) {
        shorter[inv] = static_cast<std::uint8_t>(k);
        accumulate(result, straighten(lie, shorter, cache, strategy), c);
      }
    }
  }
  auto [it, fresh] = cache.emplace(w, std::move(result));
  (void)fresh;
  return it->second;
}

Word mono_to_word(const Mono& m) {
  Word w;
  for (std::size_t b = 0; b < m.size(); ++b)
    for (int k = 0; k < m[b]; ++k) w.push_back(static_cast<std::uint8_t>(b));
  return w;
}

struct Pair {
  const Mono* ma;
  const Rat* ca;
  const Mono* mb;
  const Rat* cb;
};

}  // namespace

PBWElement multiply(const PBWElement& a, const PBWElement& b, const MultiplyOptions& opt) {
  if (a.lie() != b.lie()) throw DimensionMismatch("product over different algebras");
  PBWElement out(a.lie());
  if (a.is_zero() || b.is_zero()) return out;
  const LieAlgebra& lie = *a.lie();

  std::vector<Pair> pairs;
  pairs.reserve(a.support_size() * b.support_size());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) pairs.push_back({&ma, &ca, &mb, &cb});

  const long cutoff = opt.truncate_degree;
  auto flush = [&](TermMap& into, const TermMap& terms, const Rat& scale) {
    for (const auto& [m, c] : terms) {
      if (cutoff >= 0 && mono_degree(m) > cutoff) continue;
      Rat v = c * scale;
      auto [it, fresh] = into.emplace(m, v);
      if (!fresh) {
        it->second += v;
        if (it->second == 0) into.erase(it);
      }
    }
  };

  bool parallel = opt.pair_parallel && !opt.serial && runtime::parallel_enabled() &&
                  pairs.size() >= 256;
  TermMap total;
  if (!parallel) {
    Cache cache;
    for (const auto& pr : pairs) {
      Word w = mono_to_word(*pr.ma);
      Word wb = mono_to_word(*pr.mb);
      w.insert(w.end(), wb.begin(), wb.end());
      flush(total, straighten(lie, w, cache, opt.strategy), *pr.ca * *pr.cb);
    }
  } else {
    std::vector<TermMap> partial;
#pragma omp parallel
    {
#pragma omp single
      partial.resize(static_cast<std::size_t>(
#ifdef _OPENMP
          omp_get_num_threads()
#else
          1
#endif
          ));
      Cache cache;
      TermMap local;
#pragma omp for schedule(dynamic, 4)
      for (long idx = 0; idx < static_cast<long>(pairs.size()); ++idx) {
        const auto& pr = pairs[static_cast<std::size_t>(idx)];
        Word w = mono_to_word(*pr.ma);
        Word wb = mono_to_word(*pr.mb);
        w.insert(w.end(), wb.begin(), wb.end());
        flush(local, straighten(lie, w, cache, opt.strategy), *pr.ca * *pr.cb);
      }
#ifdef _OPENMP
      partial[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
#else
      partial[0] = std::move(local);
#endif
    }
    for (auto& part : partial) flush(total, part, Rat(1));
  }

  PBWElement r(a.lie());
  for (auto& [m, c] : total) r.add_term(m, c);
  return r;
}

PBWElement multiply_serial(const PBWElement& a, const PBWElement& b) {
  MultiplyOptions opt;
  opt.serial = true;
  return multiply(a, b, opt);
}

PBWElement ad(const PBWElement& x, const PBWElement& a) {
  return multiply(x, a) - multiply(a, x);
}

long filtration_degree(const PBWElement& a) {
  if (a.is_zero()) throw ZeroElement("filtration degree of 0");
  long d = 0;
  for (const auto& [m, c] : a.terms()) d = std::max(d, mono_degree(m));
  return d;
}

Valuation gauge(const PBWElement& a, int n, unsigned long p) {
  // Valuation of a in the rescaled basis (p^n x)^beta: the coefficient
  // there is c / p^{n deg}. Nonnegative gauge == membership in the n-th
  // deformation lattice.
  Valuation g = Valuation::infinity();
  for (const auto& [m, c] : a.terms())
    g = min(g, Valuation::finite(valuation(c, p).v - static_cast<long>(n) * mono_degree(m)));
  return g;
}

PBWElement divided_ad_power(const PBWElement& a, int b_index, const Rat& r, int m) {
  if (m < 0) throw ConfigInvalid("divided power order must be >= 0");
  PBWElement x = PBWElement::basis(a.lie(), b_index).scaled(r);
  PBWElement t = a;
  for (int k = 1; k <= m; ++k) t = ad(x, t).scaled(Rat(1, k));
  return t;
}

PBWElement exp_adjoint(const PBWElement& a, int b_index, const Rat& r) {
  if (a.is_zero() || r == 0) return a;
  PBWElement x = PBWElement::basis(a.lie(), b_index).scaled(r);
  PBWElement sum = a;
  PBWElement t = a;
  long cap = 2 * filtration_degree(a) + 2;
  for (long k = 1; k <= cap + 1; ++k) {
    t = ad(x, t).scaled(Rat(1, k));
    if (t.is_zero()) return sum;
    if (k > cap) break;
    sum = sum + t;
  }
  throw Error("exp_adjoint: ad series failed to terminate (non-nilpotent direction?)");
}

PBWElement reduce_coeffs_mod(const PBWElement& a, unsigned long p, int M) {
  PBWElement r(a.lie());
  for (const auto& [m, c] : a.terms()) r.add_term(m, Rat(reduce_mod(c, p, M)));
  return r;
}

PBWElement casimir_element(const ChevalleyPtr& chev) {
  CasimirData data = quadratic_casimir(*chev);
  PBWElement out(chev->lie);
  int dim = chev->dim();
  for (const auto& [pair, c] : data.quadratic) {
    Mono m(dim, 0);
    ++m[pair.first];
    ++m[pair.second];
    out.add_term(m, c);
  }
  for (const auto& [k, c] : data.linear) {
    Mono m(dim, 0);
    ++m[k];
    out.add_term(m, c);
  }
  return out;
}

namespace {
void enumerate_monomials(int dim, long max_degree, Mono& current, int from,
                         const std::function<void(const Mono&)>& emit) {
  emit(current);
  if (max_degree == 0) return;
  for (int i = from; i < dim; ++i) {
    ++current[i];
    enumerate_monomials(dim, max_degree - 1, current, i, emit);
    --current[i];
  }
}
}  // namespace

CenterResult truncated_center(const ChevalleyPtr& chev, long D, unsigned long p, int N,
                              int deformation, std::size_t budget_columns) {
  const LiePtr& lie = chev->lie;
  const int dim = chev->dim();
  const int l = chev->rank();

  // ad(h_i)-weight of an ordered monomial is the sum of its factors'
  // weights; central elements are weight zero, so prune first.
  std::vector<Mono> cols;
  Mono cur(dim, 0);
  enumerate_monomials(dim, D, cur, 0, [&](const Mono& m) {
    for (int i = 0; i < l; ++i) {
      long w = 0;
      for (int b = 0; b < dim; ++b)
        if (m[b]) w += static_cast<long>(m[b]) * chev->weight_on(b, i);
      if (w != 0) return;
    }
    cols.push_back(m);
  });
  if (cols.size() > budget_columns)
    throw BudgetExceeded("truncated_center: " + std::to_string(cols.size()) +
                         " candidate monomials exceed budget");

  std::vector<int> generators;
  for (int i = 0; i < l; ++i) {
    generators.push_back(chev->e_index(i));
    generators.push_back(chev->f_index(i));
  }

  // rows indexed by (generator, result monomial)
  std::map<std::pair<int, Mono>, std::size_t> row_index;
  std::vector<std::map<std::size_t, Rat>> columns(cols.size());
  const long ncols = static_cast<long>(cols.size());
#pragma omp parallel for schedule(dynamic, 4) if (runtime::parallel_enabled() && ncols > 8)
  for (long j = 0; j < ncols; ++j) {
    Rat scale = 1;
    if (deformation > 0)
      scale = Rat(p_power(p, static_cast<unsigned long>(deformation) *
                                 static_cast<unsigned long>(mono_degree(cols[j]))));
    PBWElement z = PBWElement::monomial(lie, cols[j], scale);
    std::vector<std::pair<std::pair<int, Mono>, Rat>> entries;
    for (int g : generators) {
      MultiplyOptions opt;
      opt.serial = true;
      PBWElement gx = PBWElement::basis(lie, g);
      PBWElement br = multiply(gx, z, opt) - multiply(z, gx, opt);
      for (const auto& [m, c] : br.terms()) entries.push_back({{g, m}, c});
    }
#pragma omp critical
    {
      for (auto& [key, c] : entries) {
        auto it = row_index.find(key);
        std::size_t r;
        if (it == row_index.end()) {
          r = row_index.size();
          row_index.emplace(key, r);
        } else {
          r = it->second;
        }
        columns[static_cast<std::size_t>(j)][r] = c;
      }
    }
  }

  QMatrix mat(row_index.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, c] : columns[j]) mat.at(r, j) = c;

  CenterResult res;
  res.degree_bound = D;
  res.deformation = deformation;
  res.precision = N;
  res.p = p;
  res.lattice_monomials = cols.size();
  for (const auto& v : kernel_basis(mat)) {
    PBWElement z(lie);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (v[j] != 0) {
        Rat scale = 1;
        if (deformation > 0)
          scale = Rat(p_power(p, static_cast<unsigned long>(deformation) *
                                     static_cast<unsigned long>(mono_degree(cols[j]))));
        z.add_term(cols[j], v[j] * scale);
      }
    res.basis.push_back(z);
    res.basis_mod.push_back(reduce_coeffs_mod(z, p, N));
  }
  return res;
}

}  // namespace padiclie
