// qinv — exact invariants and reduction types of plane quartics.
//
// arith/upoly.hpp: finite-field machinery on top of UniPoly — squarefree
// parts, distinct/equal-degree factorization, root extraction, irreducible
// modulus generation, extension-field plumbing, Lagrange interpolation, and
// classical resultants.  Degrees in this project stay tiny (a few hundred at
// most), so schoolbook methods are used throughout.

#pragma once

#include <random>
#include <utility>
#include <vector>

#include "qinv/arith/base.hpp"
#include "qinv/arith/fp.hpp"
#include "qinv/arith/fpext.hpp"
#include "qinv/arith/poly.hpp"

namespace qinv {

// Multiply a field element by a small integer (derivatives, binomials).
template <class K>
K times_long(const K& c, long n) {
  if (field_ops<K>::is_zero(c)) return K();
  return from_long_like(c, n) * c;
}

// The monic linear polynomial x over the field of `sample` (nonzero).
template <class K>
UniPoly<K> poly_x(const K& sample) {
  return UniPoly<K>::monomial(one_like(sample), 1);
}

template <class K>
UniPoly<K> poly_mod(const UniPoly<K>& a, const UniPoly<K>& b) {
  return UniPoly<K>::divmod(a, b).second;
}

// Exact quotient; throws when the division leaves a remainder.
template <class K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
  auto [q, r] = UniPoly<K>::divmod(a, b);
  if (!r.is_zero()) throw domain_error("exact_div: inexact polynomial division");
  return q;
}

// --- field-size / randomness helpers ----------------------------------------

inline Int field_size(const Fp&) { return Int(Fp::modulus()); }
inline Int field_size(const FpExt& s) {
  if (!s.ctx()) throw domain_error("field_size(FpExt): sample has no context");
  return int_pow(Int(s.ctx()->p), static_cast<unsigned long>(s.ctx()->deg));
}
inline Int field_characteristic(const Fp&) { return Int(Fp::modulus()); }
inline Int field_characteristic(const FpExt& s) {
  if (!s.ctx()) throw domain_error("field_characteristic(FpExt): sample has no context");
  return Int(s.ctx()->p);
}

inline Fp random_like(std::mt19937_64& g, const Fp&) {
  std::uniform_int_distribution<uint64_t> d(0, Fp::modulus() - 1);
  return Fp(d(g));
}
inline FpExt random_like(std::mt19937_64& g, const FpExt& s) {
  if (!s.ctx()) throw domain_error("random_like(FpExt): sample has no context");
  std::uniform_int_distribution<uint64_t> d(0, s.ctx()->p - 1);
  std::vector<uint64_t> c(static_cast<size_t>(s.ctx()->deg));
  for (auto& x : c) x = d(g);
  return FpExt(s.ctx(), std::move(c));
}

// The p-th root of a field element (inverse Frobenius): a^(p^(k-1)).
inline Fp pth_root(const Fp& a) { return a; }
inline FpExt pth_root(const FpExt& a) {
  if (!a.ctx()) return a;
  Int e = int_pow(Int(a.ctx()->p), static_cast<unsigned long>(a.ctx()->deg - 1));
  return a.pow(e);
}

// --- squarefree part ---------------------------------------------------------

// f(x) = h(x)^p written as h from f in K[x^p] (all exponents divisible by p).
template <class K>
UniPoly<K> pth_root_poly(const UniPoly<K>& f, long p) {
  std::vector<K> r(static_cast<size_t>(f.degree() / p) + 1, K());
  for (int i = 0; i <= f.degree(); ++i) {
    K c = f.coeff(static_cast<size_t>(i));
    if (field_ops<K>::is_zero(c)) continue;
    if (i % p != 0) throw domain_error("pth_root_poly: exponent not divisible by p");
    r[static_cast<size_t>(i / p)] = pth_root(c);
  }
  return UniPoly<K>(std::move(r));
}

// Product of the distinct irreducible factors of f (monic), valid over any
// finite field in this library, including when deg f exceeds the
// characteristic.
template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& f) {
  if (f.is_zero()) throw domain_error("squarefree_part: zero polynomial");
  if (f.degree() <= 0) return UniPoly<K>::constant(one_like(f.leading()));
  UniPoly<K> g = f.monic();
  UniPoly<K> gp = g.derivative();
  if (gp.is_zero()) {
    long p = field_characteristic(f.leading()).get_si();
    return squarefree_part(pth_root_poly(g, p));
  }
  UniPoly<K> d = UniPoly<K>::gcd(g, gp);
  if (d.degree() == 0) return g;
  UniPoly<K> w = exact_div(g, d);  // factors with multiplicity prime to p
  // Strip every w-factor from g; what is left has all multiplicities
  // divisible by p and is handled recursively.
  UniPoly<K> u = g;
  for (;;) {
    UniPoly<K> c = UniPoly<K>::gcd(u, w);
    if (c.degree() == 0) break;
    u = exact_div(u, c);
  }
  if (u.degree() == 0) return w.monic();
  return (w * squarefree_part(u)).monic();
}

// --- factorization over finite fields ---------------------------------------

// Distinct-degree decomposition of a squarefree monic f: list of
// (product of all irreducible factors of degree d, d).
template <class K>
std::vector<std::pair<UniPoly<K>, int>> distinct_degree(const UniPoly<K>& f0) {
  UniPoly<K> f = f0.monic();
  const Int q = field_size(f.leading());
  std::vector<std::pair<UniPoly<K>, int>> out;
  UniPoly<K> h = poly_x(f.leading());
  const UniPoly<K> x = h;
  for (int d = 1; f.degree() >= 2 * d; ++d) {
    h = UniPoly<K>::pow_mod(h, q, f);
    UniPoly<K> g = UniPoly<K>::gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = exact_div(f, g);
      h = poly_mod(h, f);
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

// Cantor–Zassenhaus equal-degree splitting: f = product of irreducibles all
// of degree d. Field size must be odd (always true here).
template <class K>
void equal_degree(const UniPoly<K>& f, int d, std::mt19937_64& rng,
                  std::vector<UniPoly<K>>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const Int q = field_size(f.leading());
  Int e = (int_pow(q, static_cast<unsigned long>(d)) - 1) / 2;
  const UniPoly<K> one = UniPoly<K>::constant(one_like(f.leading()));
  for (;;) {
    std::vector<K> rc(static_cast<size_t>(f.degree()), K());
    for (auto& c : rc) c = random_like(rng, f.leading());
    UniPoly<K> r(std::move(rc));
    if (r.degree() < 1) continue;
    UniPoly<K> g = UniPoly<K>::gcd(r, f);
    if (g.degree() == 0) g = UniPoly<K>::gcd(UniPoly<K>::pow_mod(r, e, f) - one, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

// All monic irreducible factors of a squarefree monic polynomial.
template <class K>
std::vector<UniPoly<K>> factor_squarefree(const UniPoly<K>& f, std::mt19937_64& rng) {
  std::vector<UniPoly<K>> out;
  if (f.degree() <= 0) return out;
  for (const auto& [g, d] : distinct_degree(f)) equal_degree(g, d, rng, out);
  return out;
}

// Roots of f lying in its own coefficient field (f need not be squarefree).
template <class K>
std::vector<K> roots_in_field(const UniPoly<K>& f, std::mt19937_64& rng) {
  std::vector<K> roots;
  if (f.degree() < 1) return roots;
  const Int q = field_size(f.leading());
  UniPoly<K> x = poly_x(f.leading());
  UniPoly<K> g = UniPoly<K>::gcd(UniPoly<K>::pow_mod(x, q, f) - x, f);
  if (g.degree() < 1) return roots;
  std::vector<UniPoly<K>> lin;
  equal_degree(g, 1, rng, lin);
  for (const auto& l : lin) roots.push_back(-(l.coeff(0)));
  return roots;
}

template <class K>
bool is_irreducible(const UniPoly<K>& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const Int q = field_size(f.leading());
  const int k = f.degree();
  UniPoly<K> x = poly_x(f.leading());
  if (!(UniPoly<K>::pow_mod(x, int_pow(q, static_cast<unsigned long>(k)), f) - x).is_zero())
    return false;
  for (int l = 2; l <= k; ++l) {
    if (k % l != 0) continue;
    bool prime = true;
    for (int t = 2; t * t <= l; ++t)
      if (l % t == 0) prime = false;
    if (!prime) continue;
    UniPoly<K> h = UniPoly<K>::pow_mod(x, int_pow(q, static_cast<unsigned long>(k / l)), f);
    if (UniPoly<K>::gcd(h - x, f).degree() != 0) return false;
  }
  return true;
}

// Random monic irreducible of degree k over the current prime field.
inline UniPoly<Fp> random_irreducible(int k, std::mt19937_64& rng) {
  if (k < 1) throw domain_error("random_irreducible: degree must be >= 1");
  for (int tries = 0; tries < 4096; ++tries) {
    std::vector<Fp> c(static_cast<size_t>(k) + 1);
    for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = random_like(rng, Fp(1));
    c[static_cast<size_t>(k)] = Fp(1);
    UniPoly<Fp> f(std::move(c));
    if (is_irreducible(f)) return f;
  }
  throw domain_error("random_irreducible: no irreducible found (unreachable)");
}

// --- extension-field plumbing -------------------------------------------------

inline ExtCtxPtr ext_ctx_from_irreducible(const UniPoly<Fp>& m) {
  std::vector<uint64_t> mod(static_cast<size_t>(m.degree()) + 1);
  for (int i = 0; i <= m.degree(); ++i)
    mod[static_cast<size_t>(i)] = m.coeff(static_cast<size_t>(i)).value();
  return std::make_shared<const ExtCtx>(Fp::modulus(), std::move(mod));
}

inline FpExt to_ext(const ExtCtxPtr& ctx, const Fp& v) { return FpExt::embed(ctx, v); }

inline UniPoly<FpExt> lift_poly(const ExtCtxPtr& ctx, const UniPoly<Fp>& f) {
  std::vector<FpExt> c(static_cast<size_t>(f.degree()) + 1);
  for (int i = 0; i <= f.degree(); ++i)
    c[static_cast<size_t>(i)] = FpExt::embed(ctx, f.coeff(static_cast<size_t>(i)));
  return UniPoly<FpExt>(std::move(c));
}

// --- Lagrange interpolation ---------------------------------------------------

template <class K>
UniPoly<K> lagrange_interpolate(const std::vector<K>& xs, const std::vector<K>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw domain_error("lagrange_interpolate: mismatched or too few samples");
  // A zero element may carry no field context, so take the unit from a
  // nonzero node (distinct nodes leave at most one zero).
  K one = K();
  for (const K& x : xs)
    if (!field_ops<K>::is_zero(x)) {
      one = one_like(x);
      break;
    }
  if (field_ops<K>::is_zero(one))
    throw domain_error("lagrange_interpolate: nodes are not distinct");
  UniPoly<K> acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    UniPoly<K> num = UniPoly<K>::constant(one);
    K den = one;
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      num = num * UniPoly<K>(std::vector<K>{-xs[j], one});
      den = den * (xs[i] - xs[j]);
    }
    acc = acc + (ys[i] * field_ops<K>::inv(den)) * num;
  }
  return acc;
}

// Classical resultant of two univariate polynomials by the Euclidean
// remainder sequence.
template <class K>
K resultant(UniPoly<K> f, UniPoly<K> g) {
  if (f.is_zero() || g.is_zero()) return K();
  K r = one_like(f.leading());
  bool flip = false;
  while (g.degree() > 0) {
    UniPoly<K> rem = poly_mod(f, g);
    if (rem.is_zero()) return K();  // common factor
    if ((f.degree() & 1) && (g.degree() & 1)) flip = !flip;
    K lg = g.leading();
    int e = f.degree() - rem.degree();
    for (int t = 0; t < e; ++t) r = r * lg;
    f = std::move(g);
    g = std::move(rem);
  }
  // g is now a nonzero constant: Res(f, c) = c^deg f.
  K c = g.leading();
  for (int t = 0; t < f.degree(); ++t) r = r * c;
  return flip ? -r : r;
}

}  // namespace qinv
