#include "padiclie/scalar.hpp"

#include <sstream>

namespace padiclie {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PadicContext::PadicContext(unsigned long p_, int precision_) : p(p_), precision(precision_) {
  if (!is_prime(p)) throw ConfigInvalid("p must be prime, got " + std::to_string(p));
  if (p == 2) throw ConfigInvalid("p must be odd");
  if (precision < 1) throw ConfigInvalid("precision exponent must be >= 1");
}

Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

Valuation valuation(const Int& x, unsigned long p) {
  if (x == 0) return Valuation::infinity();
  mpz_class q;
  mpz_class pz(static_cast<unsigned long>(p));
  unsigned long k = mpz_remove(q.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
  return Valuation::finite(static_cast<long>(k));
}

Valuation valuation(const Rat& x, unsigned long p) {
  if (x == 0) return Valuation::infinity();
  Valuation vn = valuation(Int(x.get_num()), p);
  Valuation vd = valuation(Int(x.get_den()), p);
  return Valuation::finite(vn.v - vd.v);
}

Int pow_ui(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int p_power(unsigned long p, unsigned long e) { return pow_ui(Int(p), e); }

Int reduce_mod(const Rat& x, unsigned long p, int M) {
  if (M < 1) throw ConfigInvalid("reduction exponent must be >= 1");
  Valuation v = valuation(x, p);
  if (v.is_finite() && v.v < 0)
    throw NegativeValuation("cannot reduce " + to_string(x) + " mod " + std::to_string(p) + "^" +
                            std::to_string(M));
  Int pm = p_power(p, static_cast<unsigned long>(M));
  Int num(x.get_num()), den(x.get_den());
  Int dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t()) == 0)
    throw NegativeValuation("denominator not invertible mod p^M");
  Int r = (num % pm) * dinv % pm;
  if (r < 0) r += pm;
  return r;
}

std::string to_string(const Rat& x) { return x.get_str(); }

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw ConfigInvalid("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

}  // namespace padiclie
