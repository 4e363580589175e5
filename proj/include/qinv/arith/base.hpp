// qinv — exact invariants and reduction types of plane quartics.
//
// arith/base.hpp: exact integer/rational scalars (GMP-backed) and the
// small field-concept glue used by the generic polynomial and linear
// algebra code. Every algebraic routine in this library is exact; there
// is no floating point anywhere.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace qinv {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown on domain violations (unsupported characteristic, unstable input,
// malformed data). The CLI maps these to exit code 2; "no answer possible
// for this input" conditions map to exit code 1 at the call site instead.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_pow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& b, long e) {
  if (e == 0) return Rat(1);
  Rat r;
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num().get_mpz_t(), a);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den().get_mpz_t(), a);
  if (e < 0) {
    if (b == 0) throw domain_error("rat_pow: negative power of zero");
    Rat inv;
    mpq_inv(inv.get_mpq_t(), r.get_mpq_t());
    return inv;
  }
  r.canonicalize();
  return r;
}

// Exact p-adic valuation of a rational. Returns nullopt for x == 0
// (valuation +infinity); callers representing +infinity explicitly use
// the Valuation wrapper in arith/valuation.hpp.
inline std::optional<long> val_p_finite(const Rat& x, const Int& p) {
  if (x == 0) return std::nullopt;
  long v = 0;
  Int t = x.get_num();
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  t = x.get_den();
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    --v;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Field traits. The generic polynomial / matrix code is written against a
// minimal field concept: default-constructible to 0, +, -, *, unary -,
// inv(), is_zero(), ==, and construction from long. Rat satisfies it via
// the helpers below; Fp64 and FpExt (see fp.hpp / fpext.hpp) do likewise.
// ---------------------------------------------------------------------------

template <class K>
struct field_ops;  // specialized per field

template <>
struct field_ops<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_long(long v) { return Rat(v); }
  static bool is_zero(const Rat& x) { return x == 0; }
  static Rat inv(const Rat& x) {
    if (x == 0) throw domain_error("division by zero in Q");
    Rat r;
    mpq_inv(r.get_mpq_t(), x.get_mpq_t());
    return r;
  }
  static std::string to_string(const Rat& x) { return x.get_str(); }
};

}  // namespace qinv
