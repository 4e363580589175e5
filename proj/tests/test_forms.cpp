#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <random>
#include <vector>

#include "doctest.h"
#include "qinv/forms/quartic.hpp"

using namespace qinv;

namespace {

TernaryQuartic<Rat> random_quartic(std::mt19937_64& rng, int span = 9) {
  std::uniform_int_distribution<int> d(-span, span);
  std::vector<Rat> c(15);
  for (auto& x : c) x = Rat(d(rng));
  return TernaryQuartic<Rat>::from_coeffs(c);
}

LinearSubstitution<Rat> random_invertible(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  for (;;) {
    LinearSubstitution<Rat> A;
    for (auto& x : A.m) x = Rat(d(rng));
    if (A.det() != 0) return A;
  }
}

// xyz(x+y+z) = x^2yz + xy^2z + xyz^2
TernaryQuartic<Rat> four_lines() {
  TriForm<Rat> f(4);
  f.at(2, 1) = 1;
  f.at(1, 2) = 1;
  f.at(1, 1) = 1;
  return TernaryQuartic<Rat>(f);
}

}  // namespace

TEST_CASE("coefficient order is descending lex") {
  std::vector<Rat> c(15);
  for (int t = 0; t < 15; ++t) c[t] = Rat(t + 1);
  auto F = TernaryQuartic<Rat>::from_coeffs(c);
  CHECK(F.form().at(4, 0) == 1);   // x^4 first
  CHECK(F.form().at(3, 1) == 2);   // then x^3 y
  CHECK(F.form().at(2, 0) == 6);   // x^2 z^2
  CHECK(F.form().at(1, 1) == 9);   // x y z^2
  CHECK(F.form().at(0, 4) == 11);  // y^4
  CHECK(F.form().at(0, 0) == 15);  // z^4 last
  CHECK(F.coeffs() == c);
  CHECK_THROWS_AS(TernaryQuartic<Rat>::from_coeffs(std::vector<Rat>(14)),
                  domain_error);
}

TEST_CASE("act: identity, permutation, and the diagonal model change") {
  std::mt19937_64 rng(7);
  auto F = random_quartic(rng);
  CHECK(act(LinearSubstitution<Rat>::identity(), F) == F);

  // x -> y, y -> x turns x^4 into y^4.
  TriForm<Rat> x4(4);
  x4.at(4, 0) = 1;
  LinearSubstitution<Rat> swap_xy;
  swap_xy.at(0, 1) = 1;
  swap_xy.at(1, 0) = 1;
  swap_xy.at(2, 2) = 1;
  auto G = act(swap_xy, TernaryQuartic<Rat>(x4));
  CHECK(G.form().at(0, 4) == 1);
  CHECK(G.form().at(4, 0) == 0);

  // pi^5 z^4 + x^2 z^2 + pi^2 y^2 z^2 + pi y^3 z + y^4 + y x^3 under
  // diag(pi, 1, 1/pi) becomes pi z^4 + x^2 z^2 + y^2 z^2 + y^3 z + y^4
  // + pi^3 y x^3 (pi = 11).
  const Rat pi(11);
  TriForm<Rat> f1(4);
  f1.at(0, 0) = rat_pow(pi, 5);
  f1.at(2, 0) = 1;
  f1.at(0, 2) = pi * pi;
  f1.at(0, 3) = pi;
  f1.at(0, 4) = 1;
  f1.at(3, 1) = 1;
  LinearSubstitution<Rat> D;
  D.at(0, 0) = pi;
  D.at(1, 1) = 1;
  D.at(2, 2) = Rat(1) / pi;
  auto F2 = act(D, TernaryQuartic<Rat>(f1));
  TriForm<Rat> f2(4);
  f2.at(0, 0) = pi;
  f2.at(2, 0) = 1;
  f2.at(0, 2) = 1;
  f2.at(0, 3) = 1;
  f2.at(0, 4) = 1;
  f2.at(3, 1) = rat_pow(pi, 3);
  CHECK(F2 == TernaryQuartic<Rat>(f2));

  LinearSubstitution<Rat> sing;  // rank 1
  sing.at(0, 0) = 1;
  CHECK_THROWS_AS(act(sing, F), domain_error);
}

TEST_CASE("act composes and commutes with evaluation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 20; ++trial) {
    auto F = random_quartic(rng);
    auto A = random_invertible(rng);
    auto B = random_invertible(rng);
    CHECK(act(A * B, F) == act(B, act(A, F)));
    std::array<Rat, 3> p = {Rat(d(rng)), Rat(d(rng)), Rat(d(rng))};
    auto Ap = A.apply(p);
    CHECK(act(A, F).form().evaluate(p[0], p[1], p[2]) ==
          F.form().evaluate(Ap[0], Ap[1], Ap[2]));
  }
}

TEST_CASE("partials and the Euler relation") {
  TriForm<Rat> x4(4);
  x4.at(4, 0) = 1;
  auto P = partials(TernaryQuartic<Rat>(x4));
  CHECK(P[0].at(3, 0) == 4);
  CHECK(P[1].is_zero());
  CHECK(P[2].is_zero());

  auto F = four_lines();
  // F_x = 2xyz + y^2 z + y z^2
  auto Fx = F.form().derivative(0);
  CHECK(Fx.at(1, 1) == 2);
  CHECK(Fx.at(0, 2) == 1);
  CHECK(Fx.at(0, 1) == 1);

  std::mt19937_64 rng(13);
  auto G = random_quartic(rng);
  auto GP = partials(G);
  TriForm<Rat> xg(1), yg(1), zg(1);
  xg.at(1, 0) = 1;
  yg.at(0, 1) = 1;
  zg.at(0, 0) = 1;
  auto euler = xg * GP[0] + yg * GP[1] + zg * GP[2];
  auto four = Rat(4) * G.form();
  CHECK((euler - four).is_zero());
}

TEST_CASE("localize at a rational singular point") {
  // x^2 z^2 + y^4 + y x^3 at (0:0:1): exactly x^2 + y^4 + y x^3 in chart z.
  TriForm<Rat> f(4);
  f.at(2, 0) = 1;
  f.at(0, 4) = 1;
  f.at(3, 1) = 1;
  auto F = TernaryQuartic<Rat>(f);
  auto L = localize(F, {Rat(0), Rat(0), Rat(1)}, 12);
  CHECK(L.chart == 2);
  CHECK(L.series.at(0, 0) == 0);
  CHECK(L.series.at(1, 0) == 0);
  CHECK(L.series.at(0, 1) == 0);
  CHECK(L.series.at(2, 0) == 1);
  CHECK(L.series.at(0, 4) == 1);
  CHECK(L.series.at(3, 1) == 1);
  CHECK(L.series.degree() == 4);

  // Point not on the curve is rejected.
  CHECK_THROWS_AS(localize(F, {Rat(1), Rat(1), Rat(1)}, 12), domain_error);
}

TEST_CASE("localize the nodal normal form at (1:0:0)") {
  // y z^3 + (a y^2 + x^2) z^2 + (b y^3 + c y^2 x + y x^2) z + d y^4 + e y^3 x
  const Rat a(2), b(3), c(5), d(7), e(1);
  TriForm<Rat> f(4);
  f.at(0, 1) = 1;       // y z^3
  f.at(0, 2) = a;       // y^2 z^2
  f.at(2, 0) = 1;       // x^2 z^2
  f.at(0, 3) = b;       // y^3 z
  f.at(1, 2) = c;       // y^2 x z
  f.at(2, 1) = 1;       // y x^2 z
  f.at(0, 4) = d;       // y^4
  f.at(1, 3) = e;       // y^3 x
  auto L = localize(TernaryQuartic<Rat>(f), {Rat(1), Rat(0), Rat(0)}, 12);
  CHECK(L.chart == 0);
  // Local variables (u, v) = (y, z); the quadratic part is v^2 + u v,
  // a rank-2 (nodal) quadric.
  CHECK(L.series.at(0, 0) == 0);
  CHECK(L.series.at(1, 0) == 0);
  CHECK(L.series.at(0, 1) == 0);
  const Rat q20 = L.series.at(2, 0), q11 = L.series.at(1, 1),
            q02 = L.series.at(0, 2);
  CHECK(q20 == 0);
  CHECK(q11 == 1);
  CHECK(q02 == 1);
  CHECK(q11 * q11 - Rat(4) * q20 * q02 != 0);
}

TEST_CASE("localize over a quadratic extension round-trips evaluation") {
  Fp::ScopedModulus mod(11);
  auto ctx = std::make_shared<const ExtCtx>(11, std::vector<uint64_t>{9, 0, 1});

  TriForm<Rat> f(4);  // x^2 z^2 + y^4 + y x^3 again, now over F_121
  f.at(2, 0) = 1;
  f.at(0, 4) = 1;
  f.at(3, 1) = 1;
  auto Fq = to_ext(to_fp(TernaryQuartic<Rat>(f)), ctx);

  // Find a point on the curve in the chart z = 1 with x outside F_11.
  FpExt found_x, found_y;
  bool found = false;
  for (uint64_t xa = 0; xa < 11 && !found; ++xa)
    for (uint64_t xb = 1; xb < 11 && !found; ++xb)
      for (uint64_t ya = 0; ya < 11 && !found; ++ya)
        for (uint64_t yb = 0; yb < 11 && !found; ++yb) {
          FpExt x0(ctx, {xa, xb}), y0(ctx, {ya, yb});
          FpExt one = FpExt::embed(ctx, Fp(1));
          if (Fq.form().evaluate(x0, y0, one).is_zero()) {
            found_x = x0;
            found_y = y0;
            found = true;
          }
        }
  REQUIRE(found);

  FpExt one = FpExt::embed(ctx, Fp(1));
  auto L = localize(Fq, {found_x, found_y, one}, 12);
  CHECK(L.chart == 2);

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<uint64_t> d(0, 10);
  for (int t = 0; t < 20; ++t) {
    FpExt du(ctx, {d(rng), d(rng)}), dv(ctx, {d(rng), d(rng)});
    auto lhs = L.series.evaluate(du, dv);
    auto rhs = Fq.form().evaluate(found_x + du, found_y + dv, one);
    CHECK(lhs == rhs);
  }
}
