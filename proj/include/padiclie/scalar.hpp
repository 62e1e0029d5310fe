#ifndef PADICLIE_SCALAR_HPP
#define PADICLIE_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "padiclie/errors.hpp"

namespace padiclie {

/// Exact coefficient domain. All arithmetic in the workbench runs on
/// arbitrary-precision rationals; nothing is ever rounded. The p-adic
/// structure (valuation, norm, residue reduction) is layered on top as
/// queries, so precision parameters enter only where an operation
/// explicitly quotients by a power of p.
using Int = mpz_class;
using Rat = mpq_class;

/// Fixes the odd prime p and the working precision exponent N.
struct PadicContext {
  unsigned long p = 5;
  int precision = 6;  // N

  PadicContext() = default;
  PadicContext(unsigned long p_, int precision_);
};

bool is_prime(unsigned long n);

/// p-adic valuation value. v_p(0) is a dedicated +infinity that compares
/// above every finite value, so min/ultrametric laws are total.
struct Valuation {
  bool infinite = false;
  long v = 0;

  static Valuation infinity() { return Valuation{true, 0}; }
  static Valuation finite(long v) { return Valuation{false, v}; }

  bool is_finite() const { return !infinite; }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite == b.infinite && (a.infinite || a.v == b.v);
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite && b.infinite) return std::strong_ordering::equal;
    if (a.infinite) return std::strong_ordering::greater;
    if (b.infinite) return std::strong_ordering::less;
    return a.v <=> b.v;
  }
  Valuation operator+(const Valuation& o) const {
    if (infinite || o.infinite) return infinity();
    return finite(v + o.v);
  }
};

Valuation min(const Valuation& a, const Valuation& b);

/// v_p of an exact rational: v_p(num) - v_p(den).
Valuation valuation(const Rat& x, unsigned long p);
Valuation valuation(const Int& x, unsigned long p);

/// Canonical representative of x mod p^M in [0, p^M). Requires v_p(x) >= 0;
/// throws NegativeValuation otherwise (the residue ring sees only the
/// valuation-nonnegative subring).
Int reduce_mod(const Rat& x, unsigned long p, int M);

Int pow_ui(const Int& base, unsigned long e);
Int p_power(unsigned long p, unsigned long e);

std::string to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

}  // namespace padiclie

#endif
