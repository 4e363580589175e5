#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qinv/arith/valuation.hpp"
#include "qinv/invariants/anchors.hpp"
#include "qinv/invariants/do.hpp"

using namespace qinv;

namespace {

TernaryQuartic<Rat> random_quartic(std::mt19937_64& rng, int lo = -9,
                                   int hi = 9) {
  std::uniform_int_distribution<int> cf(lo, hi);
  std::vector<Rat> c(15);
  bool nonzero = false;
  do {
    for (auto& x : c) x = Rat(cf(rng));
    for (const auto& x : c)
      if (x != 0) nonzero = true;
  } while (!nonzero);
  return TernaryQuartic<Rat>::from_coeffs(c);
}

LinearSubstitution<Rat> random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> off(-2, 2);
  auto u = LinearSubstitution<Rat>::identity();
  for (int s = 0; s < 6; ++s) {
    int r = static_cast<int>(rng() % 3);
    int c = (r + 1 + static_cast<int>(rng() % 2)) % 3;
    auto e = LinearSubstitution<Rat>::identity();
    e.at(r, c) = Rat(off(rng));
    u = u * e;
  }
  return u;
}

Rat pw(const Rat& x, int e) { return rat_pow(x, e); }

}  // namespace

TEST_CASE("calibration verifies every anchor and the reducible family") {
  auto rep = verify_calibration();
  for (const auto& m : rep.messages) {
    CAPTURE(m);
    CHECK(m.find("expected") == std::string::npos);
  }
  CHECK(rep.ok);
  // 11 anchors + 2 family points all report.
  CHECK(rep.messages.size() == 13);
}

TEST_CASE("four concurrent lines: exact values") {
  auto F = anchors::four_lines();
  auto v = dixmier_ohno(F);
  CHECK(v[0] == Rat(-1, 144));             // I3  = -1/(2^4 3^2)
  CHECK(v[1] == Rat(-1) / (pw(Rat(2), 12) * pw(Rat(3), 6)));
  CHECK(v[11] == Rat(7) / (pw(Rat(2), 32) * pw(Rat(3), 16)));
  CHECK(v[12] == 0);                       // the curve is singular
}

TEST_CASE("Klein quartic: discriminant pins to 7^7") {
  TriForm<Rat> k(4);
  k.at(3, 1) = Rat(1);  // x^3 y
  k.at(0, 3) = Rat(1);  // y^3 z
  k.at(1, 0) = Rat(1);  // z^3 x
  TernaryQuartic<Rat> K(k);
  CHECK(discriminant(K) == Rat(823543));  // 7^7
  auto v = dixmier_ohno(K);
  CHECK(v[12] == Rat(823543) / pw(Rat(2), 40));
}

TEST_CASE("unimodular substitutions leave every invariant fixed") {
  std::mt19937_64 rng(7001);
  for (int trial = 0; trial < 6; ++trial) {
    auto F = random_quartic(rng);
    auto U = random_unimodular(rng);
    auto a = dixmier_ohno(F);
    auto b = dixmier_ohno(act(U, F));
    for (int i = 0; i < 13; ++i) {
      CAPTURE(trial);
      CAPTURE(i);
      CHECK(a[i] == b[i]);
    }
  }
}

TEST_CASE("diagonal substitutions scale by det^(4w/3)") {
  std::mt19937_64 rng(7002);
  auto F = random_quartic(rng);
  LinearSubstitution<Rat> D;
  D.at(0, 0) = Rat(2);
  D.at(1, 1) = Rat(3);
  D.at(2, 2) = Rat(5);
  auto a = dixmier_ohno(F);
  auto b = dixmier_ohno(act(D, F));
  for (int i = 0; i < 13; ++i) {
    CAPTURE(i);
    CHECK(b[i] == pw(Rat(30), 4 * kDOWeights[i] / 3) * a[i]);
  }
}

TEST_CASE("scaling the form scales each invariant by its weight") {
  std::mt19937_64 rng(7003);
  auto F = random_quartic(rng);
  auto G = TernaryQuartic<Rat>(Rat(-3, 2) * F.form());
  auto a = dixmier_ohno(F);
  auto b = dixmier_ohno(G);
  for (int i = 0; i < 13; ++i) {
    CAPTURE(i);
    CHECK(b[i] == pw(Rat(-3, 2), kDOWeights[i]) * a[i]);
  }
  CHECK(wp_equal(std::vector<Rat>(a.begin(), a.end()),
                 std::vector<Rat>(b.begin(), b.end()),
                 std::vector<int>(kDOWeights.begin(), kDOWeights.end())));
}

TEST_CASE("reduction mod p commutes with evaluation") {
  std::mt19937_64 rng(7004);
  for (uint64_t p : {uint64_t(10007), kWorkPrime1}) {
    Fp::ScopedModulus sm(p);
    for (int trial = 0; trial < 3; ++trial) {
      auto F = random_quartic(rng);
      auto vq = dixmier_ohno(F);
      auto vp = dixmier_ohno(TernaryQuartic<Fp>(to_fp(F.form())));
      for (int i = 0; i < 13; ++i) {
        CAPTURE(p);
        CAPTURE(i);
        CHECK(Fp::of_rat(vq[i]) == vp[i]);
      }
    }
  }
}

TEST_CASE("characteristics 2, 3, 5, 7 are rejected") {
  // Characteristic 2 is rejected at the field level (odd primes only).
  CHECK_THROWS_AS(
      [] {
        Fp::ScopedModulus sm(2);
        return Fp::of_long(1);
      }(),
      domain_error);
  for (uint64_t p : {3ULL, 5ULL, 7ULL}) {
    Fp::ScopedModulus sm(p);
    TriForm<Fp> f(4);
    f.at(4, 0) = Fp::of_long(1);
    f.at(0, 4) = Fp::of_long(1);
    f.at(0, 0) = Fp::of_long(1);
    CHECK_THROWS_AS(dixmier_ohno(TernaryQuartic<Fp>(f)), domain_error);
  }
}

TEST_CASE("discriminant vanishes exactly on singular examples") {
  // Tacnodal quartic x^2 z^2 + y^4 + y x^3.
  TriForm<Rat> t(4);
  t.at(2, 0) = Rat(1);
  t.at(0, 4) = Rat(1);
  t.at(3, 1) = Rat(1);
  CHECK(dixmier_ohno(TernaryQuartic<Rat>(t))[12] == 0);
  // Double conic (z^2 + xy)^2.
  TriForm<Rat> c(4);
  c.at(0, 0) = Rat(1);   // z^4
  c.at(1, 1) = Rat(2);   // 2 x y z^2
  c.at(2, 2) = Rat(1);   // x^2 y^2
  CHECK(dixmier_ohno(TernaryQuartic<Rat>(c))[12] == 0);
  // A smooth Fermat quartic does not.
  TriForm<Rat> s(4);
  s.at(4, 0) = Rat(1);
  s.at(0, 4) = Rat(1);
  s.at(0, 0) = Rat(1);
  CHECK(dixmier_ohno(TernaryQuartic<Rat>(s))[12] != 0);
}
