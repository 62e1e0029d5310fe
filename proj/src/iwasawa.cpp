#include "padiclie/iwasawa.hpp"

#include <algorithm>
#include <functional>

#include "padiclie/errors.hpp"
#include "padiclie/linalg.hpp"
#include "padiclie/runtime.hpp"

namespace padiclie {

std::string UniformGroupData::describe() const {
  return "uniform group of rank " + std::to_string(rank) + " over Z_" + std::to_string(p);
}

UniformGroupData make_uniform_group(unsigned long p, int rank,
                                    const std::vector<std::vector<Rat>>& brackets) {
  if (!is_prime(p) || p == 2) throw ConfigInvalid("p must be an odd prime");
  if (rank < 1) throw ConfigInvalid("rank must be >= 1");
  UniformGroupData g;
  g.p = p;
  g.rank = rank;
  std::vector<std::string> labels;
  for (int i = 0; i < rank; ++i) labels.push_back("y" + std::to_string(i + 1));
  auto lie = std::make_shared<LieAlgebra>(rank, labels);

  std::map<std::pair<int, int>, LieAlgebra::SparseVec> acc;
  for (const auto& row : brackets) {
    if (row.size() != 4) throw ConfigInvalid("bracket rows must be (i, j, k, coeff)");
    int i = static_cast<int>(row[0].get_num().get_si());
    int j = static_cast<int>(row[1].get_num().get_si());
    int k = static_cast<int>(row[2].get_num().get_si());
    const Rat& c = row[3];
    if (i < 0 || j < 0 || k < 0 || i >= rank || j >= rank || k >= rank || i >= j)
      throw ConfigInvalid("bracket indices must satisfy 0 <= i < j < rank");
    if (c.get_den() != 1) throw ConfigInvalid("L_G structure constants must be integers");
    Valuation v = valuation(c, p);
    if (v.is_finite() && v.v < 1)
      throw ConfigInvalid("uniformity requires structure constants divisible by p");
    acc[{i, j}].emplace_back(k, c / Rat(static_cast<long>(p)));  // y-basis constant c/p
    g.bracket_entries.push_back({i, j, k, static_cast<long>(c.get_num().get_si())});
  }
  for (auto& [ij, vec] : acc) lie->set_bracket(ij.first, ij.second, vec);
  for (int a = 0; a < rank; ++a)
    for (int b = a + 1; b < rank; ++b)
      for (int c = b + 1; c < rank; ++c)
        if (!lie->jacobi_holds(a, b, c)) throw ConfigInvalid("brackets violate the Jacobi identity");
  g.scaled = lie;
  return g;
}

UniformGroupData abelian_uniform_group(unsigned long p, int rank) {
  return make_uniform_group(p, rank, {});
}

UniformGroupData heisenberg_uniform_group(unsigned long p) {
  // [x1, x2] = p x3 in L_G
  return make_uniform_group(p, 3, {{Rat(0), Rat(1), Rat(2), Rat(static_cast<long>(p))}});
}

CongruenceKernelSetup congruence_kernel_setup(const ChevalleyPtr& chev, int deformation,
                                              unsigned long p) {
  if (deformation < 0) throw ConfigInvalid("deformation must be >= 0");
  // L_G = p^{n+1} * (Chevalley lattice): constants p^{n+1} gamma
  Int scale = p_power(p, static_cast<unsigned long>(deformation) + 1);
  std::vector<std::vector<Rat>> brackets;
  const LieAlgebra& lie = *chev->lie;
  for (int i = 0; i < lie.dim(); ++i)
    for (int j = i + 1; j < lie.dim(); ++j)
      for (const auto& [k, c] : lie.bracket(i, j))
        brackets.push_back({Rat(i), Rat(j), Rat(k), c * Rat(scale)});
  CongruenceKernelSetup s;
  s.chev = chev;
  s.deformation = deformation;
  s.group = make_uniform_group(p, lie.dim(), brackets);
  return s;
}

void IwasawaElement::add_term(const Alpha& a, const Rat& c) {
  if (group_ == nullptr) throw ConfigInvalid("element has no group attached");
  if (c == 0) return;
  if (static_cast<int>(a.size()) != group_->rank)
    throw DimensionMismatch("alpha length must equal the group rank");
  auto [it, fresh] = terms_.emplace(a, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<long> norm_exponent(const IwasawaElement& z) {
  if (z.is_zero()) return std::nullopt;
  bool first = true;
  long best = 0;
  for (const auto& [a, c] : z.terms()) {
    long len = 0;
    for (auto e : a) len += e;
    long exp = -valuation(c, z.group()->p).v - len;
    if (first || exp > best) best = exp;
    first = false;
  }
  return best;
}

namespace {
long legendre_vp_factorial(long k, unsigned long p) {
  long v = 0;
  long q = k;
  while (q > 0) {
    q /= static_cast<long>(p);
    v += q;
  }
  return v;
}
}  // namespace

long gauge_bound(long D, unsigned long p) {
  // min_{k > D} (k - v_p(k!)). Since v_p(k!) <= (k-1)/(p-1) and p >= 3,
  // every term with k > 2*best+1 exceeds the current minimum, so the scan
  // below is exhaustive.
  long best = (D + 1) - legendre_vp_factorial(D + 1, p);
  for (long k = D + 2; k <= 2 * best + 1; ++k) {
    long t = k - legendre_vp_factorial(k, p);
    if (t < best) best = t;
  }
  return best;
}

PBWElement embed_generator(const UniformGroupData& g, int i, long D) {
  if (i < 0 || i >= g.rank) throw DimensionMismatch("generator index");
  PBWElement out(g.scaled);
  Rat coeff(1);
  for (long k = 1; k <= D; ++k) {
    coeff *= Rat(static_cast<long>(g.p)) / Rat(k);  // p^k / k!
    Mono m(static_cast<std::size_t>(g.rank), 0);
    m[i] = static_cast<std::uint16_t>(k);
    out.add_term(m, coeff);
  }
  return out;
}

PBWElement embed_product(const UniformGroupData& g, const std::vector<int>& factors, long D) {
  MultiplyOptions opt;
  opt.truncate_degree = D;
  PBWElement acc = PBWElement::unit(g.scaled);
  for (int i : factors) acc = multiply(acc, embed_generator(g, i, D), opt);
  return acc;
}

PBWElement embed_monomial(const UniformGroupData& g, const IwasawaElement::Alpha& alpha, long D) {
  long total = 0;
  for (auto e : alpha) total += e;
  if (total > D) throw TruncationInsufficient("degree bound below the monomial length");
  std::vector<int> factors;
  for (int i = 0; i < g.rank; ++i)
    for (int k = 0; k < alpha[i]; ++k) factors.push_back(i);
  return embed_product(g, factors, D);
}

PBWElement embed_element(const IwasawaElement& z, long D) {
  const UniformGroupData& g = *z.group();
  PBWElement acc(g.scaled);
  for (const auto& [a, c] : z.terms()) acc = acc + embed_monomial(g, a, D).scaled(c);
  return acc;
}

RankCertificate injectivity_rank_test(const UniformGroupData& g, int A, int B, long D, int M) {
  if (A < 0 || B < 0 || D < 1 || M < 1) throw ConfigInvalid("injectivity budgets must be positive");

  // family rows: embed(b^alpha, D) * y^beta, |alpha| <= A, |beta| <= B
  std::vector<IwasawaElement::Alpha> alphas, betas;
  {
    std::function<void(IwasawaElement::Alpha&, int, int)> rec = [&](IwasawaElement::Alpha& cur,
                                                                    int from, int budget) {
      alphas.push_back(cur);
      for (int i = from; i < g.rank && budget > 0; ++i) {
        ++cur[i];
        rec(cur, i, budget - 1);
        --cur[i];
      }
    };
    IwasawaElement::Alpha cur(static_cast<std::size_t>(g.rank), 0);
    rec(cur, 0, A);
    std::sort(alphas.begin(), alphas.end());
    betas = alphas;
    if (B != A) {
      betas.clear();
      IwasawaElement::Alpha cur2(static_cast<std::size_t>(g.rank), 0);
      std::function<void(IwasawaElement::Alpha&, int, int)> rec2 =
          [&](IwasawaElement::Alpha& c2, int from, int budget) {
            betas.push_back(c2);
            for (int i = from; i < g.rank && budget > 0; ++i) {
              ++c2[i];
              rec2(c2, i, budget - 1);
              --c2[i];
            }
          };
      rec2(cur2, 0, B);
      std::sort(betas.begin(), betas.end());
    }
  }

  std::vector<PBWElement> rows;
  MultiplyOptions opt;
  opt.truncate_degree = D;
  for (const auto& a : alphas) {
    PBWElement ea = embed_monomial(g, a, D);
    for (const auto& b : betas) {
      PBWElement yb = PBWElement::monomial(g.scaled, Mono(b.begin(), b.end()), Rat(1));
      rows.push_back(multiply(ea, yb, opt));
    }
  }

  // gauge-normalize rows (unit content over Z_p) and record the spread
  long min_g = 0, max_g = 0;
  bool first = true;
  std::vector<long> row_gauge(rows.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Valuation gg = gauge(rows[r], 0, g.p);
    if (!gg.is_finite()) throw Error("zero row in the injectivity family");
    row_gauge[r] = gg.v;
    if (first || gg.v < min_g) min_g = gg.v;
    if (first || gg.v > max_g) max_g = gg.v;
    first = false;
  }

  RankCertificate cert;
  cert.rows = rows.size();
  cert.truncation = D;
  cert.precision = M;
  cert.gauge_bound_value = gauge_bound(D, g.p);
  cert.gauge_spread = max_g - min_g;
  if (cert.gauge_bound_value < M + cert.gauge_spread)
    throw TruncationInsufficient("gauge bound " + std::to_string(cert.gauge_bound_value) +
                                 " cannot certify precision " + std::to_string(M) +
                                 " with row spread " + std::to_string(cert.gauge_spread));

  std::map<Mono, std::size_t> col_index;
  for (const auto& row : rows)
    for (const auto& [m, c] : row.terms())
      col_index.emplace(m, 0);
  std::size_t next = 0;
  for (auto& [m, idx] : col_index) idx = next++;
  QMatrix mat(rows.size(), col_index.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Rat scale(1);
    if (row_gauge[r] > 0)
      scale = Rat(1) / Rat(p_power(g.p, static_cast<unsigned long>(row_gauge[r])));
    else if (row_gauge[r] < 0)
      scale = Rat(p_power(g.p, static_cast<unsigned long>(-row_gauge[r])));
    for (const auto& [m, c] : rows[r].terms()) mat.at(r, col_index[m]) = c * scale;
  }
  cert.cols = col_index.size();

  PadicElimination elim = padic_elementary_divisors(mat, g.p);
  cert.rank = elim.rank;
  cert.pivot_valuations = elim.pivot_valuations;
  cert.full_rank = (cert.rank == cert.rows);
  long max_pivot = elim.pivot_valuations.empty() ? 0 : elim.pivot_valuations.back();
  cert.certified = cert.full_rank && max_pivot < M;
  return cert;
}

RankCertificate injectivity_rank_auto(const UniformGroupData& g, int A, int B, long D, int M,
                                      long max_D) {
  for (long d = D; d <= max_D; d += 2) {
    try {
      return injectivity_rank_test(g, A, B, d, M);
    } catch (const TruncationInsufficient&) {
      if (d + 2 > max_D) throw;
    }
  }
  throw TruncationInsufficient("injectivity_rank_auto: exhausted degree budget");
}

Rat padic_log(const Rat& theta, unsigned long p, int M) {
  Rat t = theta - 1;
  Valuation vt = valuation(t, p);
  if (vt.is_finite() && vt.v < 1)
    throw ConvergenceDomain("log requires a value in 1 + pZ_p, got " + to_string(theta));
  if (!vt.is_finite()) return Rat(0);
  Rat sum(0), power(1);
  // v_p(t^k / k) >= k - log_p k grows without bound; stop once every later
  // term sits above p^M
  for (long k = 1;; ++k) {
    power *= t;
    Rat term = power / Rat(k);
    sum += (k % 2 == 1) ? term : Rat(-term);
    long lg = 0;
    for (long q = k + 1; q >= static_cast<long>(p); q /= static_cast<long>(p)) ++lg;
    if ((k + 1) - lg > M) break;
  }
  return sum;
}

Rat padic_exp(const Rat& lam, unsigned long p, int M) {
  Valuation vl = valuation(lam, p);
  if (vl.is_finite() && vl.v < 1)
    throw ConvergenceDomain("exp requires a value in pZ_p, got " + to_string(lam));
  Rat sum(1), term(1);
  if (!vl.is_finite()) return sum;
  // v_p(lam^k / k!) >= k - (k-1)/(p-1) >= (k+1)/2 for p >= 3, so terms
  // beyond k = 2M stay above p^M
  for (long k = 1; k <= 2 * M + 2; ++k) {
    term *= lam / Rat(k);
    sum += term;
  }
  return sum;
}

std::vector<Rat> theta_to_lambda(const std::vector<Rat>& theta_values, unsigned long p,
                                 int M) {
  std::vector<Rat> out;
  out.reserve(theta_values.size());
  for (const auto& v : theta_values) out.push_back(padic_log(v, p, M));
  return out;
}

std::vector<Rat> lambda_to_theta(const std::vector<Rat>& lambda_values, unsigned long p,
                                 int M) {
  std::vector<Rat> out;
  out.reserve(lambda_values.size());
  for (const auto& v : lambda_values) out.push_back(padic_exp(v, p, M));
  return out;
}

FaithfulnessReport faithfulness_witness(const CongruenceKernelSetup& setup,
                                        const IwasawaElement& zeta,
                                        const WeightCharacter& lambda, long D, int B, int M) {
  FaithfulnessReport rep;
  rep.D = D;
  rep.B = B;
  rep.M = M;
  if (zeta.is_zero()) throw ConfigInvalid("faithfulness witness needs a nonzero element");
  const unsigned long p = setup.group.p;
  const int n = setup.deformation;
  const int m = setup.chev->num_positive();

  // Witnesses are measured relative to the content of zeta (scaling zeta
  // by a power of p shifts every image valuation by the same amount and
  // cannot change kernel membership). Tails dropped by the truncation
  // carry relative lattice valuation >= gauge_bound(D), which must cover
  // the precision.
  long vmin = 0;
  bool first = true;
  for (const auto& [a, c] : zeta.terms()) {
    long v = valuation(c, p).v;
    if (first || v < vmin) vmin = v;
    first = false;
  }
  rep.sound = (M <= gauge_bound(D, p));

  // transfer the embedded element to the Chevalley PBW basis: y_i = p^n b_i
  PBWElement emb = embed_element(zeta, D);
  PBWElement u(setup.chev->lie);
  for (const auto& [mono, c] : emb.terms()) {
    Rat scale(p_power(p, static_cast<unsigned long>(n) *
                             static_cast<unsigned long>(mono_degree(mono))));
    u.add_term(mono, c * scale);
  }

  std::vector<VermaVector::Beta> candidates;
  VermaVector::Beta cur(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int from, int budget) {
    candidates.push_back(cur);
    for (int i = from; i < m && budget > 0; ++i) {
      ++cur[i];
      rec(i, budget - 1);
      --cur[i];
    }
  };
  rec(0, B);
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) {
              long da = 0, db = 0;
              for (auto x : a) da += x;
              for (auto x : b) db += x;
              if (da != db) return da < db;
              return a < b;
            });

  for (const auto& beta : candidates) {
    VermaVector w = VermaVector::basis_vector(setup.chev, lambda, beta);
    VermaVector img = act(u, w, p);
    // Truncation tails act on f^beta v with coefficient valuations at
    // least gauge_bound(D) + vmin, so any computed coefficient below
    // vmin + M survives in the untruncated image.
    Valuation lv = Valuation::infinity();
    for (const auto& [b2, c2] : img.terms()) lv = min(lv, valuation(c2, p));
    if (lv.is_finite() && lv.v - vmin < M) {
      rep.witness_found = true;
      rep.witness_beta = beta;
      rep.witness_valuation = lv.v - vmin;
      return rep;
    }
  }
  rep.inconclusive = true;
  return rep;
}

}  // namespace padiclie
