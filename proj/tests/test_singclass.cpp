#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "qinv/arith/upoly.hpp"
#include "qinv/invariants/do.hpp"
#include "qinv/singclass/singclass.hpp"

using namespace qinv;

namespace {

TernaryQuartic<Fp> quartic_fp(std::initializer_list<std::tuple<int, int, long>> terms) {
  TriForm<Fp> f(4);
  for (const auto& [i, j, c] : terms) f.at(i, j) = Fp::of_long(c);
  return TernaryQuartic<Fp>(f);
}

TernaryQuartic<Rat> quartic_rat(std::initializer_list<std::tuple<int, int, long, long>> terms) {
  TriForm<Rat> f(4);
  for (const auto& [i, j, n, d] : terms) f.at(i, j) = Rat(n, d);
  return TernaryQuartic<Rat>(f);
}

// Projective normalization of an extension-field point with base-field
// coordinates: scale the last nonzero coordinate to 1 and read off values.
std::array<uint64_t, 3> norm_point(const std::array<FpExt, 3>& P) {
  int piv = -1;
  for (int i = 2; i >= 0; --i)
    if (!P[i].is_zero()) {
      piv = i;
      break;
    }
  REQUIRE(piv >= 0);
  const FpExt inv = P[piv].inverse();
  std::array<uint64_t, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const FpExt v = P[i] * inv;
    for (size_t t = 1; t < v.coeffs().size(); ++t) REQUIRE(v.coeffs()[t] == 0);
    out[static_cast<size_t>(i)] = v.coeff(0);
  }
  return out;
}

}  // namespace

TEST_CASE("univariate kit: squarefree part, factorization, roots") {
  Fp::ScopedModulus guard(10007);
  const Fp one = Fp(1);
  auto lin = [&](long r) {  // x - r
    return UniPoly<Fp>(std::vector<Fp>{-Fp::of_long(r), one});
  };
  // (x-5)^2 (x-7)
  UniPoly<Fp> f = lin(5) * lin(5) * lin(7);
  UniPoly<Fp> sf = squarefree_part(f);
  CHECK(sf.degree() == 2);
  CHECK((sf - (lin(5) * lin(7))).is_zero());
  auto rng = std::mt19937_64(42);
  auto roots = roots_in_field(f, rng);
  std::set<uint64_t> rv;
  for (const Fp& r : roots) rv.insert(r.value());
  CHECK(rv == std::set<uint64_t>{5, 7});

  // x^2 + 1 is irreducible mod 10007 (p = 3 mod 4).
  UniPoly<Fp> x2p1(std::vector<Fp>{one, Fp(), one});
  CHECK(is_irreducible(x2p1));
  CHECK(!is_irreducible(lin(2) * lin(3)));

  // factor (x-1)(x-2)(x^2+1): degrees 1, 1, 2.
  UniPoly<Fp> g = lin(1) * lin(2) * x2p1;
  auto factors = factor_squarefree(squarefree_part(g), rng);
  std::multiset<int> degs;
  for (const auto& q : factors) degs.insert(q.degree());
  CHECK(degs == std::multiset<int>{1, 1, 2});

  // High multiplicities survive (exponent >= characteristic is impossible
  // here, but x^5 exercises the repeated-stripping loop).
  UniPoly<Fp> x5 = UniPoly<Fp>::monomial(one, 5);
  CHECK(squarefree_part(x5).degree() == 1);

  // Lagrange recovers a known polynomial from values.
  UniPoly<Fp> target(std::vector<Fp>{Fp::of_long(3), Fp::of_long(-2), one});  // x^2-2x+3
  std::vector<Fp> xs, ys;
  for (long t = 0; t < 5; ++t) {
    xs.push_back(Fp::of_long(t));
    ys.push_back(target.evaluate(Fp::of_long(t)));
  }
  CHECK((lagrange_interpolate(xs, ys) - target).is_zero());

  // Classical resultant: Res(x^2-1, x-3) = (1-3)(-1-3) = 8.
  UniPoly<Fp> f2(std::vector<Fp>{-one, Fp(), one});
  CHECK(resultant(f2, lin(3)) == Fp::of_long(8));

  // Random irreducibles have the advertised degree.
  UniPoly<Fp> m = random_irreducible(3, rng);
  CHECK(m.degree() == 3);
  CHECK(is_irreducible(m));
}

TEST_CASE("milnor numbers of basic germs") {
  Fp::ScopedModulus guard(10007);
  BiPoly<Fp> node(2);  // y^2 - x^2
  node.at(0, 2) = Fp(1);
  node.at(2, 0) = -Fp(1);
  CHECK(milnor_number(node) == 1);

  BiPoly<Fp> cusp(3);  // y^2 - x^3
  cusp.at(0, 2) = Fp(1);
  cusp.at(3, 0) = -Fp(1);
  CHECK(milnor_number(cusp) == 2);

  BiPoly<Fp> tac(4);  // y^2 - x^4
  tac.at(0, 2) = Fp(1);
  tac.at(4, 0) = -Fp(1);
  CHECK(milnor_number(tac) == 3);

  // Non-isolated: y^2 alone.
  BiPoly<Fp> dbl(2);
  dbl.at(0, 2) = Fp(1);
  CHECK(!milnor_number(dbl).has_value());

  // Over Q as well.
  BiPoly<Rat> cuspq(3);
  cuspq.at(0, 2) = Rat(1);
  cuspq.at(3, 0) = Rat(-1);
  CHECK(milnor_number(cuspq) == 2);
}

TEST_CASE("a degree-7 tangency germ jumps in characteristic 7") {
  // Chart at (0:0:1) of x^2 z^2 + 2 y^2 x z + y^4 - y x^3.
  auto germ = []() {
    BiPoly<Fp> g(4);
    g.at(2, 0) = Fp(1);
    g.at(1, 2) = Fp::of_long(2);
    g.at(0, 4) = Fp(1);
    g.at(3, 1) = -Fp(1);
    return g;
  };
  {
    Fp::ScopedModulus guard(11);
    CHECK(milnor_number(germ()) == 6);
  }
  {
    Fp::ScopedModulus guard(13);
    CHECK(milnor_number(germ()) == 6);
  }
  {
    Fp::ScopedModulus guard(7);
    CHECK(milnor_number(germ()) == 9);
  }
}

TEST_CASE("germ labels are invariant under unimodular chart changes") {
  Fp::ScopedModulus guard(10007);
  BiPoly<Fp> a3(4);  // y^2 + x^4
  a3.at(0, 2) = Fp(1);
  a3.at(4, 0) = Fp(1);
  CHECK(ade_classify(a3) == ADELabel{ADEFamily::A, 3});
  CHECK(ade_classify(a3.linear_sub(Fp::of_long(1), Fp::of_long(2), Fp::of_long(3),
                                   Fp::of_long(7))) == ADELabel{ADEFamily::A, 3});
  BiPoly<Fp> d4(3);  // x y (x + y)
  d4.at(2, 1) = Fp(1);
  d4.at(1, 2) = Fp(1);
  CHECK(ade_classify(d4) == ADELabel{ADEFamily::D, 4});
  CHECK(ade_classify(d4.linear_sub(Fp::of_long(2), Fp::of_long(5), Fp::of_long(1),
                                   Fp::of_long(3))) == ADELabel{ADEFamily::D, 4});
  BiPoly<Fp> e6(4);  // x^3 + y^4
  e6.at(3, 0) = Fp(1);
  e6.at(0, 4) = Fp(1);
  CHECK(ade_classify(e6) == ADELabel{ADEFamily::E, 6});
}

TEST_CASE("tacnodal quartic: locus, label, and full type") {
  Fp::ScopedModulus guard(10007);
  // x^2 z^2 + y^4 + y x^3
  const auto F = quartic_fp({{2, 0, 1}, {0, 4, 1}, {3, 1, 1}});
  auto pts = singular_points(F);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].multiplicity == 2);
  CHECK(norm_point(pts[0].point) == std::array<uint64_t, 3>{0, 0, 1});
  const auto type = quartic_singularity_type(F);
  CHECK(to_string(type) == "A3; irreducible; semistable");
}

TEST_CASE("tacnode plus node: locus and full type") {
  Fp::ScopedModulus guard(10007);
  // x^2 z^2 + y^4 + y^3 z + y^2 z^2
  const auto F = quartic_fp({{2, 0, 1}, {0, 4, 1}, {0, 3, 1}, {0, 2, 1}});
  auto pts = singular_points(F);
  REQUIRE(pts.size() == 2);
  std::set<std::array<uint64_t, 3>> locs;
  for (const auto& p : pts) locs.insert(norm_point(p.point));
  CHECK(locs == std::set<std::array<uint64_t, 3>>{{1, 0, 0}, {0, 0, 1}});
  const auto type = quartic_singularity_type(F);
  CHECK(to_string(type) == "A1 A3; irreducible; semistable");
}

TEST_CASE("smooth quartic classifies as smooth and stable") {
  Fp::ScopedModulus guard(10007);
  // x^3 y + y^3 z + z^3 x
  const auto F = quartic_fp({{3, 1, 1}, {0, 3, 1}, {1, 0, 1}});
  CHECK(singular_points(F).empty());
  CHECK(to_string(quartic_singularity_type(F)) == "smooth; irreducible; stable");
}

TEST_CASE("four concurrent lines: X9 point of multiplicity four") {
  Fp::ScopedModulus guard(10007);
  // y^4 + 3 y^2 x^2 + x^4
  const auto F = quartic_fp({{0, 4, 1}, {2, 2, 3}, {4, 0, 1}});
  auto pts = singular_points(F);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].multiplicity == 4);
  CHECK(norm_point(pts[0].point) == std::array<uint64_t, 3>{0, 0, 1});
  CHECK(to_string(quartic_singularity_type(F)) == "X9; reducible; unstable");
}

TEST_CASE("triple point, higher cusps, and tangential conics") {
  Fp::ScopedModulus guard(10007);
  // D4: (y^2 x + y x^2) z + y^4 + y^2 x^2 - x^4
  const auto d4 = quartic_fp({{1, 2, 1}, {2, 1, 1}, {0, 4, 1}, {2, 2, 1}, {4, 0, -1}});
  {
    auto pts = singular_points(d4);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].multiplicity == 3);
  }
  CHECK(to_string(quartic_singularity_type(d4)) == "D4; irreducible; unstable");

  // D5: y x^2 z - y^4 - x^4
  const auto d5 = quartic_fp({{2, 1, 1}, {0, 4, -1}, {4, 0, -1}});
  CHECK(to_string(quartic_singularity_type(d5)) == "D5; irreducible; unstable");

  // E6: x^3 z - y^4
  const auto e6 = quartic_fp({{3, 0, 1}, {0, 4, -1}});
  CHECK(to_string(quartic_singularity_type(e6)) == "E6; irreducible; unstable");

  // A6: x^2 z^2 + 2 y^2 x z + y^4 - y x^3
  const auto a6 = quartic_fp({{2, 0, 1}, {1, 2, 2}, {0, 4, 1}, {3, 1, -1}});
  CHECK(to_string(quartic_singularity_type(a6)) == "A6; irreducible; semistable");

  // Conic pair with one simple tangency: (z^2 + y x)(z^2 + y z + y x)
  const auto cc = quartic_fp({{0, 0, 1}, {0, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 2, 1}});
  CHECK(to_string(quartic_singularity_type(cc)) == "A1 A5; reducible; semistable");
}

TEST_CASE("four general lines and three cusps") {
  Fp::ScopedModulus guard(10007);
  // x y z (x + y + z)
  const auto lines = quartic_fp({{2, 1, 1}, {1, 2, 1}, {1, 1, 1}});
  CHECK(to_string(quartic_singularity_type(lines)) == "A1^6; reducible; stable");

  // (y^2 - 2yx + x^2) z^2 + (-2y^2 x - 2y x^2) z + y^2 x^2
  const auto cusps = quartic_fp(
      {{0, 2, 1}, {1, 1, -2}, {2, 0, 1}, {1, 2, -2}, {2, 1, -2}, {2, 2, 1}});
  CHECK(to_string(quartic_singularity_type(cusps)) == "A2^3; irreducible; stable");
}

TEST_CASE("a conjugate pair of nodes lands in one quadratic orbit") {
  Fp::ScopedModulus guard(10007);  // -1 is not a square mod 10007
  // y^2 z^2 - (x^2 + y^2)^2: nodes at (±i : 1 : 0), tacnode at (0:0:1).
  const auto F = quartic_fp({{0, 2, 1}, {4, 0, -1}, {2, 2, -2}, {0, 4, -1}});
  auto orbits = singular_orbits(F);
  std::multiset<std::pair<int, std::string>> shape;
  for (const auto& o : orbits)
    shape.insert({o.degree, to_string(ade_classify(o.local))});
  CHECK(shape == std::multiset<std::pair<int, std::string>>{{1, "A3"}, {2, "A1"}});
  CHECK(to_string(quartic_singularity_type(F)) == "A1^2 A3; reducible; semistable");
}

TEST_CASE("non-reduced quartics: all six shapes") {
  Fp::ScopedModulus guard(10007);
  // (z^2 + y x)^2
  const auto c2 = quartic_fp({{0, 0, 1}, {1, 1, 2}, {2, 2, 1}});
  CHECK(to_string(quartic_singularity_type(c2)) == "non-isolated c2; reducible; semistable");
  // x^2 z^2
  CHECK(to_string(quartic_singularity_type(quartic_fp({{2, 0, 1}}))) ==
        "non-isolated l2l2; reducible; unstable");
  // x z^3
  CHECK(to_string(quartic_singularity_type(quartic_fp({{1, 0, 1}}))) ==
        "non-isolated ll3; reducible; unstable");
  // z^4
  CHECK(to_string(quartic_singularity_type(quartic_fp({{0, 0, 1}}))) ==
        "non-isolated l4; reducible; unstable");
  // x y z^2
  CHECK(to_string(quartic_singularity_type(quartic_fp({{1, 1, 1}}))) ==
        "non-isolated lll2; reducible; unstable");
  // x^2 ((y + x) z + y x)
  const auto l2c = quartic_fp({{2, 1, 1}, {3, 0, 1}, {3, 1, 1}});
  CHECK(to_string(quartic_singularity_type(l2c)) == "non-isolated l2c; reducible; unstable");
}

TEST_CASE("vanishing of the degree-27 invariant matches the singular locus") {
  Fp::ScopedModulus guard(10007);
  std::mt19937_64 rng(20260816);
  std::uniform_int_distribution<uint64_t> d(0, 10006);
  for (int trial = 0; trial < 40; ++trial) {
    TriForm<Fp> f(4);
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; i + j <= 4; ++j) f.at(i, j) = Fp(d(rng));
    const TernaryQuartic<Fp> F(f);
    if (F.is_zero()) continue;
    const auto inv = dixmier_ohno(F);
    const bool disc_zero = (inv[12] == Fp());
    const bool has_sing = !singular_orbits(F).empty();
    CHECK(disc_zero == has_sing);
  }
}

TEST_CASE("classification runs over a 62-bit prime field") {
  Fp::ScopedModulus guard(kWorkPrime1);
  const auto F = quartic_fp({{2, 0, 1}, {0, 4, 1}, {3, 1, 1}});
  CHECK(to_string(quartic_singularity_type(F)) == "A3; irreducible; semistable");
}

TEST_CASE("classification over Q with denominators") {
  const auto F = quartic_rat({{2, 0, 1, 3}, {0, 4, 1, 3}, {3, 1, 1, 3}});
  CHECK(to_string(quartic_singularity_type(F)) == "A3; irreducible; semistable");
  // Klein quartic over Q.
  const auto K = quartic_rat({{3, 1, 1, 1}, {0, 3, 1, 1}, {1, 0, 1, 1}});
  CHECK(to_string(quartic_singularity_type(K)) == "smooth; irreducible; stable");
}

TEST_CASE("work-prime disagreement is reported, not guessed") {
  // Singular mod the first work prime only: the three reductions differ and
  // the classification must refuse to answer.
  TriForm<Rat> f(4);
  f.at(2, 0) = Rat(1);
  f.at(0, 4) = Rat(1);
  f.at(3, 1) = Rat(1);
  f.at(0, 0) = Rat(Int(kWorkPrime1));  // kills the tacnode except mod p1
  const TernaryQuartic<Rat> F(f);
  CHECK_THROWS_AS(quartic_singularity_type(F), indeterminate_error);
  try {
    quartic_singularity_type(F);
  } catch (const indeterminate_error& e) {
    CHECK(e.per_prime.size() == 3);
  }
}
