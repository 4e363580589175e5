// qinv — exact invariants and reduction types of plane quartics.
//
// arith/valuation.hpp: p-adic valuations of rationals, normalized valuation
// vectors for weighted tuples, exact equality in weighted projective space,
// and CRT / rational-number reconstruction used by modular computations.

#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "qinv/arith/base.hpp"
#include "qinv/arith/fpext.hpp"

namespace qinv {

// --- weighted projective equality -----------------------------------------

// Basis of the integer kernel lattice { c : sum c_i w_i = 0 } for a vector
// of positive weights. Built by the classical staircase construction: the
// k-th vector combines an extended-gcd expression for gcd(w_1..w_{k-1})
// against w_k. The resulting vectors form a genuine lattice basis.
inline std::vector<std::vector<Int>> weight_kernel_basis(const std::vector<Int>& w) {
  const size_t n = w.size();
  std::vector<std::vector<Int>> basis;
  if (n < 2) return basis;
  // u[k] holds coefficients with sum u[k][i]*w[i] = gcd(w[0..k]).
  std::vector<Int> u(n, 0);
  u[0] = 1;
  Int g = w[0];
  for (size_t k = 1; k < n; ++k) {
    Int s, t, g2;
    mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), w[k].get_mpz_t());
    // Kernel vector: (w_k/g2) * u[0..k-1], then -(g/g2) at slot k.
    std::vector<Int> v(n, 0);
    for (size_t i = 0; i < k; ++i) v[i] = u[i] * (w[k] / g2);
    v[k] = -(g / g2);
    basis.push_back(std::move(v));
    // Update gcd coefficients: g2 = s*g + t*w_k.
    for (size_t i = 0; i < k; ++i) u[i] *= s;
    u[k] = t;
    g = g2;
  }
  return basis;
}

template <class K>
K pow_field(const K& x, const Int& e) {
  if (e < 0) return pow_field(field_ops<K>::inv(x), Int(-e));
  K r = one_like(x);
  K b = x;
  Int m = e;
  while (m > 0) {
    if (mpz_odd_p(m.get_mpz_t())) r = r * b;
    b = b * b;
    m >>= 1;
  }
  return r;
}

// Equality of two weighted tuples in weighted projective space over the
// algebraic closure: zero patterns must agree, and every weight-zero
// character (generated by the kernel lattice of the weights restricted to
// the common support) must take the same value on both tuples.
template <class K>
bool wp_equal(const std::vector<K>& a, const std::vector<K>& b, const std::vector<int>& weights) {
  const size_t n = a.size();
  if (b.size() != n || weights.size() != n) throw domain_error("wp_equal: size mismatch");
  std::vector<size_t> support;
  for (size_t i = 0; i < n; ++i) {
    const bool za = field_ops<K>::is_zero(a[i]);
    const bool zb = field_ops<K>::is_zero(b[i]);
    if (za != zb) return false;
    if (!za) support.push_back(i);
  }
  if (support.size() <= 1) return true;  // single nonzero coordinate scales freely
  std::vector<Int> ws;
  ws.reserve(support.size());
  for (size_t i : support) ws.push_back(Int(weights[i]));
  for (const auto& c : weight_kernel_basis(ws)) {
    // Check prod (b_i/a_i)^{c_i} == 1, as prod with positive exponents on
    // both sides to stay in ring operations until the final compare.
    K lhs = one_like(a[support[0]]);
    K rhs = lhs;
    for (size_t t = 0; t < support.size(); ++t) {
      if (c[t] == 0) continue;
      const K& ai = a[support[t]];
      const K& bi = b[support[t]];
      if (c[t] > 0) {
        lhs = lhs * pow_field(bi, c[t]);
        rhs = rhs * pow_field(ai, c[t]);
      } else {
        lhs = lhs * pow_field(ai, Int(-c[t]));
        rhs = rhs * pow_field(bi, Int(-c[t]));
      }
    }
    if (!field_ops<K>::is_zero(lhs - rhs)) return false;
  }
  return true;
}

// --- normalized valuations --------------------------------------------------

// Extended valuation: nullopt encodes +infinity (valuation of zero).
using ExtVal = std::optional<Rat>;

inline bool ext_lt(const ExtVal& x, const ExtVal& y) {
  if (!x) return false;       // +inf < anything is false
  if (!y) return true;        // finite < +inf
  return *x < *y;
}

struct NormalizedValuations {
  Rat min_slope;                 // min over nonzero entries of val(a_i)/w_i
  std::vector<ExtVal> normalized;  // val(a_i)/w_i - min_slope; nullopt = +inf
};

// Normalized p-adic valuations of a weighted tuple. Requires at least one
// nonzero entry. The result is invariant under the weighted scaling action,
// so it only depends on the point in weighted projective space.
inline NormalizedValuations normalized_valuations(const std::vector<Rat>& a,
                                                  const std::vector<int>& weights,
                                                  const Int& p) {
  if (a.size() != weights.size()) throw domain_error("normalized_valuations: size mismatch");
  NormalizedValuations out;
  bool have = false;
  std::vector<ExtVal> slopes(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    auto v = val_p_finite(a[i], p);
    if (!v) continue;
    Rat s(*v, weights[i]);
    s.canonicalize();
    slopes[i] = s;
    if (!have || s < out.min_slope) {
      out.min_slope = s;
      have = true;
    }
  }
  if (!have) throw domain_error("normalized_valuations: all entries are zero");
  out.normalized.resize(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (!slopes[i]) continue;
    Rat d = *slopes[i] - out.min_slope;
    d.canonicalize();
    out.normalized[i] = d;
  }
  return out;
}

// --- CRT and rational reconstruction ---------------------------------------

// Combine x = r1 mod m1, x = r2 mod m2 (coprime moduli) into x mod m1*m2,
// with the representative in [0, m1*m2).
inline Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  if (g != 1) throw domain_error("crt_pair: moduli not coprime");
  Int m = m1 * m2;
  Int x = r1 + m1 * ((s * (r2 - r1)) % m2);
  x %= m;
  if (x < 0) x += m;
  return x;
}

// Reconstruct a rational n/d from its residue a mod m with |n| <= nbound and
// 0 < d <= dbound, nbound*dbound*2 <= m. Returns nullopt if no candidate in
// range exists or the candidate fails d*a = n (mod m).
inline std::optional<Rat> rational_reconstruct(Int a, const Int& m, const Int& nbound,
                                               const Int& dbound) {
  a %= m;
  if (a < 0) a += m;
  // Half-extended Euclid on (m, a): track r = s*m + t*a; stop when |r| <= nbound.
  Int r0 = m, r1 = a;
  Int t0 = 0, t1 = 1;
  while (r1 > nbound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  Int n = r1, d = t1;
  if (d < 0) { n = -n; d = -d; }
  if (d == 0 || d > dbound) return std::nullopt;
  Int g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) return std::nullopt;
  // Verify: n == d*a mod m.
  Int chk = (d * a - n) % m;
  if (chk != 0) return std::nullopt;
  Rat out(n, d);
  out.canonicalize();
  return out;
}

// Convenience: symmetric bounds sqrt(m/2) on numerator and denominator.
inline std::optional<Rat> rational_reconstruct(const Int& a, const Int& m) {
  Int b;
  Int half = m / 2;
  mpz_sqrt(b.get_mpz_t(), half.get_mpz_t());
  return rational_reconstruct(a, m, b, b);
}

}  // namespace qinv
