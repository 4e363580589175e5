// Dixmier–Ohno invariants of ternary quartics: the covariant/contravariant
// chain, raw scalar pairings, the calibrated 13-vector, and the quartic
// discriminant.
#pragma once

#include <array>
#include <string>
#include <type_traits>
#include <vector>

#include "qinv/arith/base.hpp"
#include "qinv/arith/fp.hpp"
#include "qinv/arith/linalg.hpp"
#include "qinv/arith/poly.hpp"
#include "qinv/forms/quartic.hpp"

namespace qinv {

inline constexpr std::array<int, 13> kDOWeights = {3,  6,  9,  9,  12, 12, 15,
                                                   15, 18, 18, 21, 21, 27};
inline constexpr std::array<const char*, 13> kDONames = {
    "I3", "I6", "I9", "J9", "I12", "J12", "I15",
    "J15", "I18", "J18", "I21", "J21", "I27"};

namespace dix {

inline long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

// n * f, with n minted coefficient-wise so the helper also works for fields
// whose one needs a sample (extension fields).
template <typename K>
TriForm<K> scl(long n, const TriForm<K>& f) {
  TriForm<K> r(f.degree());
  f.for_each([&](int i, int j, int k, const K& v) {
    (void)k;
    r.at(i, j) = from_long_like(v, n) * v;
  });
  return r;
}

template <typename K>
TriForm<K> hessian(const TriForm<K>& F) {
  std::array<std::array<TriForm<K>, 3>, 3> H;
  for (int r = 0; r < 3; ++r)
    for (int c = r; c < 3; ++c) H[r][c] = F.derivative(r).derivative(c);
  return H[0][0] * (H[1][1] * H[2][2] - H[1][2] * H[1][2]) -
         H[0][1] * (H[0][1] * H[2][2] - H[1][2] * H[0][2]) +
         H[0][2] * (H[0][1] * H[1][2] - H[1][1] * H[0][2]);
}

// Clebsch transfer: restrict F to the line u x + v y + w z = 0 parametrized
// by (x, y, z) = (w s, w t, -u s - v t); the coefficient of s^a t^(4-a) is a
// quartic form c_a(u, v, w).  The binary-quartic invariants of the
// restriction, divided by the extraneous power of w, are contravariants of F:
//   sigma = (12 c0 c4 - 3 c1 c3 + c2^2) / w^4          (class 4)
//   psi   = (72 c0 c2 c4 + 9 c1 c2 c3 - 27 c0 c3^2
//            - 27 c1^2 c4 - 2 c2^3) / w^6              (class 6)
template <typename K>
void clebsch_transfer(const TriForm<K>& F, TriForm<K>& sigma_out,
                      TriForm<K>& psi_out) {
  std::array<TriForm<K>, 5> c;
  for (auto& x : c) x = TriForm<K>(4);
  F.for_each([&](int i, int j, int k, const K& v) {
    for (int m = 0; m <= k; ++m) {  // m factors of (-u s) from (-u s - v t)^k
      const int a = i + m;
      if (a > 4) break;
      const long s = ((k % 2) ? -1L : 1L) * binom(k, m);
      c[a].at(m, k - m) += from_long_like(v, s) * v;  // u^m v^(k-m) w^(i+j)
    }
  });
  TriForm<K> S = scl(12, c[0] * c[4]) - scl(3, c[1] * c[3]) + c[2] * c[2];
  sigma_out = S.divide_by_var_pow(2, 4);
  TriForm<K> T = scl(72, c[0] * c[2] * c[4]) + scl(9, c[1] * c[2] * c[3]) -
                 scl(27, c[0] * (c[3] * c[3])) - scl(27, (c[1] * c[1]) * c[4]) -
                 scl(2, c[2] * c[2] * c[2]);
  psi_out = T.divide_by_var_pow(2, 6);
}

// det of the 6x6 matrix of fourth-order partials indexed by the degree-2
// monomials (the quartic's catalecticant, up to normalization).
template <typename K>
K catalecticant(const TriForm<K>& F) {
  static constexpr int kExps[6][3] = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                      {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  Mat<K> M(6, 6);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) {
      TriForm<K> g = F;
      for (int v = 0; v < 3; ++v)
        for (int t = 0; t < kExps[r][v] + kExps[c][v]; ++t) g = g.derivative(v);
      M.at(r, c) = g.at(0, 0);
    }
  return det(M);
}

// Doubled Gram matrix of a quadric form (row-major, symmetric; avoids any
// division by 2).
template <typename K>
std::array<K, 9> quadric_dmat(const TriForm<K>& q) {
  std::array<K, 9> D{};
  D[0] = q.at(2, 0) + q.at(2, 0);
  D[4] = q.at(0, 2) + q.at(0, 2);
  D[8] = q.at(0, 0) + q.at(0, 0);
  D[1] = D[3] = q.at(1, 1);
  D[2] = D[6] = q.at(1, 0);
  D[5] = D[7] = q.at(0, 1);
  return D;
}

template <typename K>
K det3(const std::array<K, 9>& A) {
  return A[0] * (A[4] * A[8] - A[5] * A[7]) -
         A[1] * (A[3] * A[8] - A[5] * A[6]) +
         A[2] * (A[3] * A[7] - A[4] * A[6]);
}

template <typename K>
std::array<K, 9> adj3(const std::array<K, 9>& A) {
  std::array<K, 9> B{};
  B[0] = A[4] * A[8] - A[5] * A[7];
  B[1] = A[2] * A[7] - A[1] * A[8];
  B[2] = A[1] * A[5] - A[2] * A[4];
  B[3] = A[5] * A[6] - A[3] * A[8];
  B[4] = A[0] * A[8] - A[2] * A[6];
  B[5] = A[2] * A[3] - A[0] * A[5];
  B[6] = A[3] * A[7] - A[4] * A[6];
  B[7] = A[1] * A[6] - A[0] * A[7];
  B[8] = A[0] * A[4] - A[1] * A[3];
  return B;
}

template <typename K>
K trace_prod(const std::array<K, 9>& A, const std::array<K, 9>& B) {
  K acc = A[0] * B[0];
  acc += A[1] * B[3];
  acc += A[2] * B[6];
  acc += A[3] * B[1];
  acc += A[4] * B[4];
  acc += A[5] * B[7];
  acc += A[6] * B[2];
  acc += A[7] * B[5];
  acc += A[8] * B[8];
  return acc;
}

// Uncalibrated scalar pairings from the chain.  Alternate candidates are kept
// alongside the primary ones; the calibration audit discriminates.
template <typename K>
struct RawScalars {
  K i03{}, i06_hepsi{}, i06_cat{};
  K i09{}, j09{}, i12{}, j12a{}, j12b{}, i15{}, j15{};
  K i18{}, j18{}, i21{}, j21{};
};

template <typename K>
RawScalars<K> raw_scalars(const TernaryQuartic<K>& Fq) {
  const TriForm<K>& F = Fq.form();
  TriForm<K> sig, psi;
  clebsch_transfer(F, sig, psi);
  const TriForm<K> He = hessian(F);
  const TriForm<K> rho = polar_pairing(F, psi);    // contravariant, class 2
  const TriForm<K> tau = polar_pairing(rho, F);    // covariant, order 2
  const TriForm<K> xi = polar_pairing(sig, He);    // covariant, order 2
  const TriForm<K> eta = polar_pairing(xi, sig);   // contravariant, class 2
  const TriForm<K> rhe = polar_pairing(rho, He);   // covariant, order 4
  const TriForm<K> nu = polar_pairing(eta, rhe);   // covariant, order 2

  const auto Dr = quadric_dmat(rho);
  const auto Dt = quadric_dmat(tau);
  const auto Dx = quadric_dmat(xi);
  const auto De = quadric_dmat(eta);
  const auto Dn = quadric_dmat(nu);

  RawScalars<K> r;
  r.i03 = polar_pairing(F, sig).at(0, 0);
  r.i06_hepsi = polar_pairing(He, psi).at(0, 0);
  r.i06_cat = catalecticant(F);
  r.i09 = trace_prod(Dt, Dr);
  r.j09 = trace_prod(Dx, Dr);
  r.i12 = det3(Dr);
  r.j12a = trace_prod(Dt, De);
  r.j12b = trace_prod(Dx, De);
  r.i15 = det3(Dt);
  r.j15 = det3(Dx);
  r.i18 = trace_prod(adj3(Dt), adj3(Dr));
  r.j18 = trace_prod(adj3(Dx), adj3(Dr));
  r.i21 = det3(De);
  r.j21 = trace_prod(Dn, De);
  return r;
}

}  // namespace dix

// Normalization constants pinned by the anchor curves (verify_calibration()).
// Most invariants are a fixed rational multiple of a single raw pairing; J9
// and I12 are fixed mixtures of raw pairings and lower-generator monomials.
struct CalibrationTable {
  // Pure multiples: I3, I6, I9, J12, I15, J15, I18, J18, I21, J21.
  Rat c3, c6, c9, cj12, c15, cj15, c18, cj18, c21, cj21;
  // J9 = cj9_j*j09 + cj9_i*i09 + cj9_m1*I3*I6 + cj9_m2*I3^3.
  Rat cj9_j, cj9_i, cj9_m1, cj9_m2;
  // I12 = c12_i*i12 + c12_j*j12a + c12_m1*I6^2 + c12_m2*I3*J9
  //     + c12_m3*I3*I9 + c12_m4*I3^2*I6.
  Rat c12_i, c12_j, c12_m1, c12_m2, c12_m3, c12_m4;
  Int disc_content;  // integer content of the raw Macaulay resultant
};
const CalibrationTable& calibration();

// Macaulay resultant of three ternary cubics (the degree-7 construction with
// the classical minor quotient; random unimodular retries on degeneracy).
Rat macaulay_resultant_cubics(const std::array<TriForm<Rat>, 3>& G);
Fp macaulay_resultant_cubics(const std::array<TriForm<Fp>, 3>& G);

// 2^40 * I27: the quartic discriminant.
Rat discriminant(const TernaryQuartic<Rat>& F);

namespace dix {
// I27 = res / (content * 2^40), in the field K.
inline Rat i27_from_resultant(const Rat& res, const CalibrationTable& tb) {
  return res / (Rat(tb.disc_content) * rat_pow(Rat(2), 40));
}
inline Fp i27_from_resultant(Fp res, const CalibrationTable& tb) {
  return res * Fp::of_rat(Rat(1) / (Rat(tb.disc_content) * rat_pow(Rat(2), 40)));
}
}  // namespace dix

template <typename K>
std::array<K, 13> dixmier_ohno(const TernaryQuartic<K>& F) {
  static_assert(std::is_same_v<K, Rat> || std::is_same_v<K, Fp>,
                "invariants are computed over Q or a prime field");
  if constexpr (std::is_same_v<K, Fp>) {
    const uint64_t p = Fp::modulus();
    if (p == 2 || p == 3 || p == 5 || p == 7)
      throw domain_error("dixmier_ohno: unsupported characteristic (2, 3, 5, 7)");
  }
  const CalibrationTable& tb = calibration();
  const auto cvt = [](const Rat& c) -> K {
    if constexpr (std::is_same_v<K, Rat>)
      return c;
    else
      return Fp::of_rat(c);
  };
  const dix::RawScalars<K> r = dix::raw_scalars(F);
  std::array<K, 13> out;
  out[0] = cvt(tb.c3) * r.i03;
  out[1] = cvt(tb.c6) * r.i06_cat;
  out[2] = cvt(tb.c9) * r.i09;
  out[3] = cvt(tb.cj9_j) * r.j09 + cvt(tb.cj9_i) * r.i09 +
           cvt(tb.cj9_m1) * out[0] * out[1] +
           cvt(tb.cj9_m2) * out[0] * out[0] * out[0];
  out[4] = cvt(tb.c12_i) * r.i12 + cvt(tb.c12_j) * r.j12a +
           cvt(tb.c12_m1) * out[1] * out[1] +
           cvt(tb.c12_m2) * out[0] * out[3] +
           cvt(tb.c12_m3) * out[0] * out[2] +
           cvt(tb.c12_m4) * out[0] * out[0] * out[1];
  out[5] = cvt(tb.cj12) * r.j12a;
  out[6] = cvt(tb.c15) * r.i15;
  out[7] = cvt(tb.cj15) * r.j15;
  out[8] = cvt(tb.c18) * r.i18;
  out[9] = cvt(tb.cj18) * r.j18;
  out[10] = cvt(tb.c21) * r.i21;
  out[11] = cvt(tb.cj21) * r.j21;
  const auto P = partials(F);
  out[12] = dix::i27_from_resultant(
      macaulay_resultant_cubics({P[0], P[1], P[2]}), tb);
  return out;
}

struct CalibrationReport {
  bool ok = true;
  std::vector<std::string> messages;  // one line per anchor checked
};

// Recomputes every anchor vector and confirms exact equality; failures name
// the offending anchor and invariant.
CalibrationReport verify_calibration();

}  // namespace qinv
