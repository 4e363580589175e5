// Macaulay resultant of three ternary cubics, the calibrated invariant
// constants, and the anchor verification report.
#include "qinv/invariants/do.hpp"

#include <cstdint>
#include <random>
#include <sstream>

#include "qinv/arith/valuation.hpp"
#include "qinv/invariants/anchors.hpp"

namespace qinv {

namespace {

// ---------------------------------------------------------------------------
// Integer determinants by multi-modular reduction.

const std::vector<uint64_t>& work_primes(size_t need) {
  static std::vector<uint64_t> primes = {kWorkPrime1, kWorkPrime2, kWorkPrime3};
  static uint64_t cursor = kWorkPrime3;
  while (primes.size() < need) {
    Int c;
    do {
      cursor -= 2;
      c = Int(cursor);
    } while (mpz_probab_prime_p(c.get_mpz_t(), 30) == 0);
    primes.push_back(cursor);
  }
  return primes;
}

Int hadamard_bound(const std::vector<Int>& a, int n) {
  Int prod = 1;
  for (int i = 0; i < n; ++i) {
    Int s = 0;
    for (int j = 0; j < n; ++j) s += a[static_cast<size_t>(i) * n + j] * a[static_cast<size_t>(i) * n + j];
    if (s == 0) return Int(0);  // a zero row: det is 0
    Int r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    prod *= r + 1;
  }
  return prod;
}

// Exact determinant of an n x n integer matrix (row-major).
Int det_int(const std::vector<Int>& a, int n) {
  if (n == 0) throw domain_error("det_int: empty matrix");
  Int bound = hadamard_bound(a, n);
  if (bound == 0) return Int(0);
  // CRT modulus must exceed twice the bound (symmetric representative).
  Int need = 2 * bound + 1;
  Int mod = 1;
  Int value = 0;
  size_t used = 0;
  while (mod <= need) {
    uint64_t p = work_primes(used + 1)[used];
    ++used;
    Fp::ScopedModulus guard(p);
    Mat<Fp> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = Fp::of_int(a[static_cast<size_t>(i) * n + j]);
    Int dp = Int(det(m).value());
    if (used == 1) {
      value = dp;
      mod = Int(p);
    } else {
      value = crt_pair(value, mod, dp, Int(p));
      mod *= Int(p);
    }
  }
  if (value * 2 > mod) value -= mod;
  return value;
}

// ---------------------------------------------------------------------------
// Macaulay construction for three cubics (degree-7 monomial space).

struct MacaulayShape {
  // All 36 degree-7 exponent triples, indexed by tri_index(7, i, j).
  std::vector<std::array<int, 3>> mono;
  std::vector<int> dodu;  // indices divisible by >= 2 of x^3, y^3, z^3
  MacaulayShape() {
    mono.resize(tri_size(7));
    for (int i = 0; i <= 7; ++i)
      for (int j = 0; i + j <= 7; ++j) mono[tri_index(7, i, j)] = {i, j, 7 - i - j};
    for (size_t t = 0; t < mono.size(); ++t) {
      int big = (mono[t][0] >= 3) + (mono[t][1] >= 3) + (mono[t][2] >= 3);
      if (big >= 2) dodu.push_back(static_cast<int>(t));
    }
  }
};

const MacaulayShape& shape() {
  static const MacaulayShape s;
  return s;
}

// Fill the 36x36 Macaulay matrix over K. Row t: with m = mono[t], the row is
// (m / x^3) * G0 if x^3 | m, else (m / y^3) * G1 if y^3 | m, else
// (m / z^3) * G2.
template <typename K>
void fill_macaulay(const std::array<TriForm<K>, 3>& G, std::vector<K>& out) {
  const MacaulayShape& s = shape();
  const int n = static_cast<int>(s.mono.size());
  out.assign(static_cast<size_t>(n) * n, K());
  for (int t = 0; t < n; ++t) {
    const auto& m = s.mono[t];
    int which = (m[0] >= 3) ? 0 : (m[1] >= 3) ? 1 : 2;
    std::array<int, 3> sh = m;
    sh[which] -= 3;
    G[which].for_each([&](int i, int j, int k, const K& v) {
      (void)k;
      int col = tri_index(7, sh[0] + i, sh[1] + j);
      out[static_cast<size_t>(t) * n + col] += v;
    });
  }
}

template <typename K>
std::vector<K> dodu_minor(const std::vector<K>& full) {
  const MacaulayShape& s = shape();
  const int n = static_cast<int>(s.mono.size());
  const int k = static_cast<int>(s.dodu.size());
  std::vector<K> sub(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      sub[static_cast<size_t>(i) * k + j] =
          full[static_cast<size_t>(s.dodu[i]) * n + s.dodu[j]];
  return sub;
}

// Random determinant-one integer shear products, used to retry the Macaulay
// quotient when the minor degenerates.
template <typename K>
std::array<K, 9> random_shear(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2), off(-2, 2);
  std::array<long, 9> u = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  for (int step = 0; step < 6; ++step) {
    int r = pick(rng), c = pick(rng);
    if (r == c) continue;
    long f = off(rng);
    // row r += f * row c
    for (int j = 0; j < 3; ++j) u[3 * r + j] += f * u[3 * c + j];
  }
  std::array<K, 9> a;
  for (int t = 0; t < 9; ++t) a[t] = field_ops<K>::from_long(u[t]);
  return a;
}

// Exact zero certificate for the resultant. Three ternary cubics have a
// common projective zero over the algebraic closure if and only if their
// degree-7 multiples fail to span all 36 degree-7 monomials (the ideal of a
// zero-free system contains everything from degree (3-1)+(3-1)+(3-1)+1 = 7
// on, in any characteristic). Rank deficiency of the 45x36 multiplication
// matrix therefore proves Res = 0 even when every sheared Macaulay minor
// degenerates.
template <typename K>
bool cubics_share_zero(const std::array<TriForm<K>, 3>& G) {
  Mat<K> m(45, 36);
  int row = 0;
  for (int which = 0; which < 3; ++which)
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; a + b <= 4; ++b) {
        G[which].for_each([&](int i, int j, int k, const K& v) {
          (void)k;
          int col = tri_index(7, a + i, b + j);
          m.at(row, col) = m.at(row, col) + v;
        });
        ++row;
      }
  return rref(m) < 36;
}

}  // namespace

Rat macaulay_resultant_cubics(const std::array<TriForm<Rat>, 3>& G0) {
  // Clear denominators with one common scale d; Res picks up d^27.
  Int d = 1;
  for (const auto& g : G0)
    g.for_each([&](int, int, int, const Rat& v) {
      Int den = v.get_den();
      Int gg;
      mpz_gcd(gg.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
      d = d / gg * den;
    });
  std::array<TriForm<Rat>, 3> G = {Rat(d) * G0[0], Rat(d) * G0[1],
                                   Rat(d) * G0[2]};

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (int attempt = 0; attempt < 60; ++attempt) {
    std::array<TriForm<Rat>, 3> H = G;
    if (attempt > 0) {
      auto A = random_shear<Rat>(rng);
      for (auto& h : H) h = h.substitute(A);
    }
    std::vector<Int> full;
    {
      std::vector<Rat> fullq;
      fill_macaulay(H, fullq);
      full.reserve(fullq.size());
      for (const auto& q : fullq) {
        if (q.get_den() != 1)
          throw domain_error("macaulay: expected integral entries");
        full.push_back(q.get_num());
      }
    }
    const int n = static_cast<int>(shape().mono.size());
    const int k = static_cast<int>(shape().dodu.size());
    std::vector<Int> sub;
    sub.reserve(static_cast<size_t>(k) * k);
    {
      std::vector<Int> tmp(static_cast<size_t>(k) * k);
      const auto& dd = shape().dodu;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          tmp[static_cast<size_t>(i) * k + j] =
              full[static_cast<size_t>(dd[i]) * n + dd[j]];
      sub = std::move(tmp);
    }
    Int dm = det_int(sub, k);
    if (dm == 0) {
      // After a few degenerate draws, decide membership exactly: either the
      // system has a common zero (resultant is zero) or keep shearing.
      if (attempt == 7 && cubics_share_zero(G)) return Rat(0);
      continue;
    }
    Int dM = det_int(full, n);
    Int res;
    mpz_divexact(res.get_mpz_t(), dM.get_mpz_t(), dm.get_mpz_t());
    return Rat(res) / rat_pow(Rat(d), 27);
  }
  if (cubics_share_zero(G)) return Rat(0);
  throw domain_error("macaulay: minor stayed singular after retries");
}

Fp macaulay_resultant_cubics(const std::array<TriForm<Fp>, 3>& G) {
  std::mt19937_64 rng(0x2545f4914f6cdd1dULL);
  for (int attempt = 0; attempt < 60; ++attempt) {
    std::array<TriForm<Fp>, 3> H = G;
    if (attempt > 0) {
      auto A = random_shear<Fp>(rng);
      for (auto& h : H) h = h.substitute(A);
    }
    std::vector<Fp> full;
    fill_macaulay(H, full);
    std::vector<Fp> sub = dodu_minor(full);
    const int n = static_cast<int>(shape().mono.size());
    const int k = static_cast<int>(shape().dodu.size());
    Mat<Fp> msub(k, k), mfull(n, n);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) msub.at(i, j) = sub[static_cast<size_t>(i) * k + j];
    Fp dm = det(msub);
    if (dm.value() == 0) {
      if (attempt == 7 && cubics_share_zero(G)) return Fp(0);
      continue;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mfull.at(i, j) = full[static_cast<size_t>(i) * n + j];
    return det(mfull) * field_ops<Fp>::inv(dm);
  }
  if (cubics_share_zero(G)) return Fp(0);
  throw domain_error("macaulay: minor stayed singular after retries (mod p)");
}

Rat discriminant(const TernaryQuartic<Rat>& F) {
  const auto P = partials(F);
  const Rat res = macaulay_resultant_cubics({P[0], P[1], P[2]});
  return res / Rat(calibration().disc_content);
}

// ---------------------------------------------------------------------------
// Calibration.

namespace {
Rat rq(const char* s) {
  Rat x(s);
  x.canonicalize();
  return x;
}
}  // namespace

const CalibrationTable& calibration() {
  static const CalibrationTable tb = [] {
    CalibrationTable t;
    // Frozen output of tools/calibration_audit (exact rational solve against
    // the anchor curves; exit 0, every cross-check green).
    t.c3 = rq("1/864");
    t.c6 = rq("1/191102976");
    t.c9 = rq("1/185752092672");
    t.cj9_j = rq("95/10030613004288");
    t.cj9_i = rq("-7/1253826625536");
    t.cj9_m1 = rq("-128");
    t.cj9_m2 = rq("16/243");
    t.c12_i = rq("11/68248290881175552");
    t.c12_j = rq("17/60665147449933824");
    t.c12_m1 = rq("-262960/567");
    t.c12_m2 = rq("1/63");
    t.c12_m3 = rq("-37/567");
    t.c12_m4 = rq("-2657/1701");
    t.cj12 = rq("1/641959232274432");
    t.c15 = rq("1/3327916660110655488");
    t.cj15 = rq("1/26623333280885243904");
    t.c18 = rq("1/34503839932027276099584");
    t.cj18 = rq("1/138015359728109104398336");
    t.c21 = rq("1/79496847203390844133441536");
    t.cj21 = rq("1/158993694406781688266883072");
    t.disc_content = Int(16384);  // 2^14
    return t;
  }();
  return tb;
}

CalibrationReport verify_calibration() {
  CalibrationReport rep;
  const auto& list = anchors::all();
  for (size_t k = 0; k < list.size(); ++k) {
    const auto& an = list[k];
    std::array<Rat, 13> got;
    try {
      got = dixmier_ohno(an.F);
    } catch (const domain_error& e) {
      rep.ok = false;
      rep.messages.push_back("anchor " + an.name + ": evaluation failed: " + e.what());
      continue;
    }
    // Scale: lambda^3 inferred from the weight-3 coordinate (all weights are
    // multiples of 3, so lambda^w is determined by lambda^3 over Q).
    std::array<Rat, 13> want;
    if (k == 0) {
      want = an.tuple;  // absolute
    } else {
      if (got[0] == 0) {
        rep.ok = false;
        rep.messages.push_back("anchor " + an.name + ": I3 vanished");
        continue;
      }
      const Rat l3 = got[0] / an.tuple[0];
      for (int i = 0; i < 13; ++i)
        want[i] = rat_pow(l3, kDOWeights[i] / 3) * an.tuple[i];
    }
    bool all_ok = true;
    for (int i = 0; i < 13; ++i)
      if (got[i] != want[i]) {
        all_ok = false;
        rep.ok = false;
        rep.messages.push_back("anchor " + an.name + ": " + kDONames[i] +
                               " = " + got[i].get_str() + ", expected " +
                               want[i].get_str());
      }
    if (all_ok) rep.messages.push_back("anchor " + an.name + ": ok");
  }

  // Line-cubic family xyz(x+y+z) + t z^4: for every t the curve contains the
  // line z = 0, and two exact identities hold among the invariants.
  for (long t : {1L, 2L}) {
    TriForm<Rat> f(4);
    f.at(2, 1) = Rat(1);
    f.at(1, 2) = Rat(1);
    f.at(1, 1) = Rat(1);
    f.at(0, 0) = Rat(t);
    std::array<Rat, 13> v;
    try {
      v = dixmier_ohno(TernaryQuartic<Rat>(f));
    } catch (const domain_error& e) {
      rep.ok = false;
      rep.messages.push_back(std::string("family t=") + std::to_string(t) +
                             ": evaluation failed: " + e.what());
      continue;
    }
    const Rat g6 = Rat(144) * v[1] + v[0] * v[0];
    const Rat g12 = Rat(81) * v[4] + Rat(4) * rat_pow(v[0], 4);
    bool ok = true;
    if (g6 != 0) {
      ok = false;
      rep.ok = false;
      rep.messages.push_back("family t=" + std::to_string(t) +
                             ": 144*I6 + I3^2 = " + g6.get_str());
    }
    if (g12 != 0) {
      ok = false;
      rep.ok = false;
      rep.messages.push_back("family t=" + std::to_string(t) +
                             ": 81*I12 + 4*I3^4 = " + g12.get_str());
    }
    if (v[12] != 0) {
      ok = false;
      rep.ok = false;
      rep.messages.push_back("family t=" + std::to_string(t) +
                             ": I27 nonzero on a reducible curve");
    }
    if (ok)
      rep.messages.push_back("family t=" + std::to_string(t) + ": ok");
  }
  return rep;
}

}  // namespace qinv
