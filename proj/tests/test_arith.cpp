// qinv — exact invariants and reduction types of plane quartics.
//
// test_arith.cpp: unit tests for the exact-arithmetic layer.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qinv/arith/base.hpp"
#include "qinv/arith/fp.hpp"
#include "qinv/arith/fpext.hpp"
#include "qinv/arith/linalg.hpp"
#include "qinv/arith/poly.hpp"
#include "qinv/arith/valuation.hpp"

using namespace qinv;

TEST_CASE("Fp arithmetic under the big working primes") {
  Fp::ScopedModulus guard(kWorkPrime1);
  const uint64_t p = kWorkPrime1;
  Fp a = Fp::of_long(-1);
  CHECK(a.value() == p - 1);
  CHECK((a * a).value() == 1);
  Fp b = Fp::of_long(123456789);
  Fp ib = field_ops<Fp>::inv(b);
  CHECK((b * ib).value() == 1);
  // Fermat: b^(p-1) = 1.
  CHECK(Fp(Fp::ctx().pow(b.value(), p - 1)).value() == 1);
  // Rationals reduce compatibly: (-7/144) * 144 = -7 mod p.
  Fp r = Fp::of_rat(Rat(-7, 144));
  CHECK((r * Fp::of_long(144)).value() == p - 7);
}

TEST_CASE("Fp modulus is scoped") {
  {
    Fp::ScopedModulus guard(11);
    CHECK(Fp::modulus() == 11);
    {
      Fp::ScopedModulus inner(13);
      CHECK(Fp::modulus() == 13);
    }
    CHECK(Fp::modulus() == 11);
  }
}

TEST_CASE("FpExt quadratic extension of F_11") {
  Fp::ScopedModulus guard(11);
  // T^2 - 2 is irreducible over F_11 (2 is a nonresidue mod 11).
  auto ctx = std::make_shared<const ExtCtx>(11, std::vector<uint64_t>{9, 0, 1});
  FpExt t = FpExt::gen(ctx);
  FpExt t2 = t * t;
  CHECK(t2.coeff(0) == 2);
  CHECK(t2.coeff(1) == 0);
  FpExt u = t + FpExt::embed(ctx, Fp(3));  // T + 3
  FpExt iu = u.inverse();
  FpExt prod = u * iu;
  CHECK(prod.coeff(0) == 1);
  CHECK(prod.coeff(1) == 0);
  // Multiplicative order divides 11^2 - 1 = 120.
  FpExt upow = u.pow(Int(120));
  CHECK(upow.coeff(0) == 1);
  CHECK(upow.coeff(1) == 0);
}

TEST_CASE("p-adic valuations of rationals") {
  CHECK(!val_p_finite(Rat(0), Int(11)).has_value());  // +infinity
  CHECK(val_p_finite(Rat(18), Int(3)).value() == 2);
  CHECK(val_p_finite(Rat(-7, 144), Int(2)).value() == -4);
  CHECK(val_p_finite(Rat(-7, 144), Int(3)).value() == -2);
  CHECK(val_p_finite(Rat(-7, 144), Int(7)).value() == 1);
  CHECK(val_p_finite(Rat(11, 5), Int(11)).value() == 1);
}

TEST_CASE("TriForm multiply, differentiate, evaluate, substitute") {
  // F = (x + y + z)^2 over Q.
  TriForm<Rat> l(1);
  l.at(1, 0) = Rat(1);
  l.at(0, 1) = Rat(1);
  l.at(0, 0) = Rat(1);
  TriForm<Rat> f = l * l;
  CHECK(f.degree() == 2);
  CHECK(f.at(2, 0) == Rat(1));
  CHECK(f.at(1, 1) == Rat(2));
  CHECK(f.at(0, 0) == Rat(1));
  CHECK(f.evaluate(Rat(1), Rat(2), Rat(3)) == Rat(36));

  TriForm<Rat> fx = f.derivative(0);  // 2(x+y+z)
  CHECK(fx.degree() == 1);
  CHECK(fx.at(1, 0) == Rat(2));
  CHECK(fx.at(0, 0) == Rat(2));

  // Swap x and z: symmetric form is fixed.
  std::array<Rat, 9> swap_xz = {Rat(0), Rat(0), Rat(1), Rat(0), Rat(1), Rat(0),
                                Rat(1), Rat(0), Rat(0)};
  TriForm<Rat> g = f.substitute(swap_xz);
  CHECK(g.at(2, 0) == Rat(1));
  CHECK(g.at(1, 1) == Rat(2));

  // Division by a variable power.
  TriForm<Rat> zf(3);
  zf.at(1, 1) = Rat(5);  // 5 x y z
  TriForm<Rat> q = zf.divide_by_var_pow(2, 1);
  CHECK(q.degree() == 2);
  CHECK(q.at(1, 1) == Rat(5));
  CHECK_THROWS_AS(f.divide_by_var_pow(0, 1), domain_error);
}

TEST_CASE("polar pairing differentiates correctly") {
  // P = v0^2, Q = v0^4: P(d) Q = 4*3 v0^2 = 12 v0^2.
  TriForm<Rat> P(2), Q(4);
  P.at(2, 0) = Rat(1);
  Q.at(4, 0) = Rat(1);
  TriForm<Rat> R = polar_pairing(P, Q);
  CHECK(R.degree() == 2);
  CHECK(R.at(2, 0) == Rat(12));
  // Mixed: P = v0 v1, Q = v0^2 v1^2 -> 2*2 v0 v1.
  TriForm<Rat> P2(2), Q2(4);
  P2.at(1, 1) = Rat(1);
  Q2.at(2, 2) = Rat(1);
  TriForm<Rat> R2 = polar_pairing(P2, Q2);
  CHECK(R2.at(1, 1) == Rat(4));
}

TEST_CASE("UniPoly division, gcd, evaluation") {
  // (x^2 - 1) = (x - 1)(x + 1)
  UniPoly<Rat> f(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});
  UniPoly<Rat> g(std::vector<Rat>{Rat(-1), Rat(1)});
  auto [q, r] = UniPoly<Rat>::divmod(f, g);
  CHECK(r.is_zero());
  CHECK(q.degree() == 1);
  CHECK(q.coeff(0) == Rat(1));
  CHECK(q.coeff(1) == Rat(1));
  UniPoly<Rat> h(std::vector<Rat>{Rat(1), Rat(2), Rat(1)});  // (x+1)^2
  UniPoly<Rat> d = UniPoly<Rat>::gcd(f, h);
  CHECK(d.degree() == 1);
  CHECK(d.coeff(0) == Rat(1));  // monic x + 1
  CHECK(f.evaluate(Rat(3)) == Rat(8));
  // Derivative.
  CHECK(f.derivative().coeff(1) == Rat(2));
}

TEST_CASE("UniPoly modular exponentiation over Fp") {
  Fp::ScopedModulus guard(11);
  // x^11 mod (x^2 - 2): x^11 = x*(x^2)^5 = x*2^5 = 32x = 10x mod 11.
  UniPoly<Fp> m(std::vector<Fp>{Fp(9), Fp(0), Fp(1)});  // T^2 + 9 = T^2 - 2
  UniPoly<Fp> x(std::vector<Fp>{Fp(0), Fp(1)});
  UniPoly<Fp> r = UniPoly<Fp>::pow_mod(x, Int(11), m);
  CHECK(r.degree() == 1);
  CHECK(r.coeff(0).value() == 0);
  CHECK(r.coeff(1).value() == 10);
}

TEST_CASE("linear algebra: rref, kernel, det, solve") {
  Mat<Rat> m(2, 3);
  m.at(0, 0) = Rat(1); m.at(0, 1) = Rat(2); m.at(0, 2) = Rat(3);
  m.at(1, 0) = Rat(2); m.at(1, 1) = Rat(4); m.at(1, 2) = Rat(7);
  auto ker = kernel_basis(m, Rat(1));
  REQUIRE(ker.size() == 1);
  // Kernel vector must satisfy both rows.
  CHECK(ker[0][0] * Rat(1) + ker[0][1] * Rat(2) + ker[0][2] * Rat(3) == Rat(0));
  CHECK(ker[0][0] * Rat(2) + ker[0][1] * Rat(4) + ker[0][2] * Rat(7) == Rat(0));

  Mat<Rat> sq(3, 3);
  int vals[9] = {2, 0, 1, 1, 3, 2, 1, 1, 1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sq.at(i, j) = Rat(vals[3 * i + j]);
  CHECK(det(sq) == Rat(2 * (3 - 2) - 0 + 1 * (1 - 3)));  // = 0? compute: 2*1 - 0 + 1*(-2) = 0
  // That matrix is singular; check a nonsingular one too.
  sq.at(2, 2) = Rat(5);
  // det = 2*(15-2) - 0*(5-2) + 1*(1-3) = 26 - 2 = 24.
  CHECK(det(sq) == Rat(24));

  std::vector<Rat> b = {Rat(1), Rat(2), Rat(3)};
  auto x = solve(sq, b);
  REQUIRE(x.has_value());
  for (int i = 0; i < 3; ++i) {
    Rat acc(0);
    for (int j = 0; j < 3; ++j) acc += sq.at(i, j) * (*x)[j];
    CHECK(acc == b[i]);
  }
}

TEST_CASE("weighted projective equality") {
  std::vector<int> w = {3, 6, 9};
  std::vector<Rat> A = {Rat(1), Rat(2), Rat(3)};
  // Scale by lambda = 2: (2^3, 2*2^6, 3*2^9).
  std::vector<Rat> B = {Rat(8), Rat(128), Rat(1536)};
  CHECK(wp_equal(A, B, w));
  B[2] += Rat(1);
  CHECK(!wp_equal(A, B, w));

  // Root-of-unity twist that pairwise ratio tests would miss: weights (6,12),
  // tuples (1,1) vs (1,-1) are NOT equal in weighted projective space.
  std::vector<int> w2 = {6, 12};
  std::vector<Rat> C = {Rat(1), Rat(1)};
  std::vector<Rat> D = {Rat(1), Rat(-1)};
  CHECK(!wp_equal(C, D, w2));
  // But (1,1) ~ (64, 4096) via lambda = 2.
  std::vector<Rat> E = {Rat(64), Rat(4096)};
  CHECK(wp_equal(C, E, w2));

  // Zero-pattern mismatch.
  std::vector<Rat> F = {Rat(0), Rat(1), Rat(1)};
  CHECK(!wp_equal(A, F, w));
  // All-zero tuples are equal (the degenerate case callers filter upstream).
  std::vector<Rat> Z = {Rat(0), Rat(0), Rat(0)};
  CHECK(wp_equal(Z, Z, w));
}

TEST_CASE("normalized valuations") {
  std::vector<int> w = {3, 6};
  std::vector<Rat> a = {Rat(121), Rat(161051)};  // 11^2, 11^5
  auto nv = normalized_valuations(a, w, Int(11));
  CHECK(nv.min_slope == Rat(2, 3));
  REQUIRE(nv.normalized[0].has_value());
  REQUIRE(nv.normalized[1].has_value());
  CHECK(*nv.normalized[0] == Rat(0));
  CHECK(*nv.normalized[1] == Rat(1, 6));

  // Zero entries normalize to +infinity (nullopt).
  std::vector<Rat> b = {Rat(11), Rat(0)};
  auto nb = normalized_valuations(b, w, Int(11));
  CHECK(!nb.normalized[1].has_value());
  CHECK(*nb.normalized[0] == Rat(0));

  // Scaling invariance: multiply by lambda^w with lambda = 11.
  std::vector<Rat> c = {a[0] * rat_pow(Rat(11), 3), a[1] * rat_pow(Rat(11), 6)};
  auto nc = normalized_valuations(c, w, Int(11));
  CHECK(*nc.normalized[0] == *nv.normalized[0]);
  CHECK(*nc.normalized[1] == *nv.normalized[1]);

  std::vector<Rat> zz = {Rat(0), Rat(0)};
  CHECK_THROWS_AS(normalized_valuations(zz, w, Int(11)), domain_error);
}

TEST_CASE("CRT and rational reconstruction") {
  Int p1(kWorkPrime1), p2(kWorkPrime2);
  Rat target(-7, 144);
  // Residue of target mod each prime.
  auto residue = [](const Rat& q, const Int& p) {
    FpCtx f(mpz_get_ui(p.get_mpz_t()));
    return Int(f.from_rat(q));
  };
  Int r1 = residue(target, p1);
  Int r2 = residue(target, p2);
  Int m = p1 * p2;
  Int r = crt_pair(r1, p1, r2, p2);
  CHECK(r % p1 == r1);
  CHECK(r % p2 == r2);
  auto rec = rational_reconstruct(r, m);
  REQUIRE(rec.has_value());
  CHECK(*rec == target);

  // A big random-ish rational round-trips too.
  Rat big(Int("123456789123456789"), Int("987654321987"));
  big.canonicalize();
  Int rr = crt_pair(residue(big, p1), p1, residue(big, p2), p2);
  auto rec2 = rational_reconstruct(rr, m);
  REQUIRE(rec2.has_value());
  CHECK(*rec2 == big);
}
