// Ternary quartic forms: the 15-coefficient interchange order, linear
// substitutions, partial derivatives, and affine-chart localization.
#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "qinv/arith/base.hpp"
#include "qinv/arith/fp.hpp"
#include "qinv/arith/fpext.hpp"
#include "qinv/arith/poly.hpp"

namespace qinv {

// Exponent pairs (i, j) with k = 4 - i - j implied, listed in descending
// lexicographic order on (i, j, k).  This fixed order is the interchange
// contract for every 15-entry coefficient vector in the project (files, CLI,
// and test fixtures all use it).
inline const std::array<std::pair<int, int>, 15>& quartic_exponents() {
  static const std::array<std::pair<int, int>, 15> table = {{
      {4, 0},  // x^4
      {3, 1},  // x^3 y
      {3, 0},  // x^3 z
      {2, 2},  // x^2 y^2
      {2, 1},  // x^2 y z
      {2, 0},  // x^2 z^2
      {1, 3},  // x y^3
      {1, 2},  // x y^2 z
      {1, 1},  // x y z^2
      {1, 0},  // x z^3
      {0, 4},  // y^4
      {0, 3},  // y^3 z
      {0, 2},  // y^2 z^2
      {0, 1},  // y z^3
      {0, 0},  // z^4
  }};
  return table;
}

template <typename K>
class TernaryQuartic {
 public:
  static constexpr std::size_t kNumCoeffs = 15;

  TernaryQuartic() : f_(4) {}
  explicit TernaryQuartic(TriForm<K> f) : f_(std::move(f)) {
    if (f_.degree() != 4)
      throw domain_error("TernaryQuartic: underlying form must have degree 4");
  }

  static TernaryQuartic from_coeffs(const std::vector<K>& c) {
    if (c.size() != kNumCoeffs)
      throw domain_error("TernaryQuartic: expected 15 coefficients");
    TernaryQuartic F;
    for (std::size_t t = 0; t < kNumCoeffs; ++t) {
      const auto& e = quartic_exponents()[t];
      F.f_.at(e.first, e.second) = c[t];
    }
    return F;
  }

  std::vector<K> coeffs() const {
    std::vector<K> c(kNumCoeffs);
    for (std::size_t t = 0; t < kNumCoeffs; ++t) {
      const auto& e = quartic_exponents()[t];
      c[t] = f_.at(e.first, e.second);
    }
    return c;
  }

  const TriForm<K>& form() const { return f_; }
  TriForm<K>& form() { return f_; }
  bool is_zero() const { return f_.is_zero(); }

  friend bool operator==(const TernaryQuartic& a, const TernaryQuartic& b) {
    return (a.f_ - b.f_).is_zero();
  }
  friend bool operator!=(const TernaryQuartic& a, const TernaryQuartic& b) {
    return !(a == b);
  }

 private:
  TriForm<K> f_;
};

// Row-major 3x3 matrix acting on forms by substitution of variables:
// act(A, F)(x) = F(A x).
template <typename K>
struct LinearSubstitution {
  std::array<K, 9> m{};

  const K& at(int i, int j) const { return m[3 * i + j]; }
  K& at(int i, int j) { return m[3 * i + j]; }

  static LinearSubstitution identity() {
    LinearSubstitution a;
    a.at(0, 0) = a.at(1, 1) = a.at(2, 2) = field_ops<K>::one();
    return a;
  }

  K det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  }

  friend LinearSubstitution operator*(const LinearSubstitution& a,
                                      const LinearSubstitution& b) {
    LinearSubstitution r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        K acc = a.at(i, 0) * b.at(0, j);
        acc += a.at(i, 1) * b.at(1, j);
        acc += a.at(i, 2) * b.at(2, j);
        r.at(i, j) = acc;
      }
    return r;
  }

  std::array<K, 3> apply(const std::array<K, 3>& p) const {
    std::array<K, 3> q;
    for (int i = 0; i < 3; ++i) {
      K acc = at(i, 0) * p[0];
      acc += at(i, 1) * p[1];
      acc += at(i, 2) * p[2];
      q[i] = acc;
    }
    return q;
  }
};

// F |-> F o A.  Composition side: act(A*B, F) = act(B, act(A, F)).
template <typename K>
TernaryQuartic<K> act(const LinearSubstitution<K>& A,
                      const TernaryQuartic<K>& F) {
  if (field_ops<K>::is_zero(A.det()))
    throw domain_error("act: substitution matrix is singular");
  return TernaryQuartic<K>(F.form().substitute(A.m));
}

template <typename K>
std::array<TriForm<K>, 3> partials(const TernaryQuartic<K>& F) {
  return {F.form().derivative(0), F.form().derivative(1),
          F.form().derivative(2)};
}

// Bivariate truncation of a quartic in an affine chart, recentered at a point
// of the curve.  `chart` is the index of the coordinate set to 1; the two
// remaining coordinates, in increasing index order, become the local
// variables (u, v).  series(u, v) = F at (center + (u, v)) in that chart.
template <typename K>
struct LocalForm {
  int chart = 2;
  std::array<K, 2> center{};
  BiPoly<K> series;
  int order = 0;
};

template <typename K>
LocalForm<K> localize(const TernaryQuartic<K>& F, const std::array<K, 3>& point,
                      int order) {
  if (order <= 0) throw domain_error("localize: order must be positive");
  // Chart: the largest index with a nonzero coordinate.
  int chart = -1;
  for (int i = 2; i >= 0; --i)
    if (!field_ops<K>::is_zero(point[i])) {
      chart = i;
      break;
    }
  if (chart < 0) throw domain_error("localize: zero point");
  if (!field_ops<K>::is_zero(F.form().evaluate(point[0], point[1], point[2])))
    throw domain_error("localize: point not on the curve");

  const K s = field_ops<K>::inv(point[chart]);
  const int u_var = (chart == 0) ? 1 : 0;
  const int v_var = (chart == 2) ? 1 : 2;

  BiPoly<K> dehom(4);
  F.form().for_each([&](int i, int j, int k, const K& val) {
    const int e[3] = {i, j, k};
    dehom.at(e[u_var], e[v_var]) += val;
  });

  LocalForm<K> L;
  L.chart = chart;
  L.center = {point[u_var] * s, point[v_var] * s};
  L.series = dehom.shift(L.center[0], L.center[1]).resized(std::min(order, 4));
  L.order = order;
  return L;
}

// Coefficient-wise field change.
template <typename KTo, typename KFrom, typename Fn>
TriForm<KTo> map_form(const TriForm<KFrom>& f, Fn&& fn) {
  TriForm<KTo> r(f.degree());
  f.for_each([&](int i, int j, int k, const KFrom& v) {
    (void)k;
    r.at(i, j) = fn(v);
  });
  return r;
}

inline TriForm<Fp> to_fp(const TriForm<Rat>& f) {
  return map_form<Fp>(f, [](const Rat& v) { return Fp::of_rat(v); });
}

inline TriForm<FpExt> to_ext(const TriForm<Fp>& f, const ExtCtxPtr& ctx) {
  return map_form<FpExt>(f, [&](Fp v) { return FpExt::embed(ctx, v); });
}

inline TernaryQuartic<Fp> to_fp(const TernaryQuartic<Rat>& F) {
  return TernaryQuartic<Fp>(to_fp(F.form()));
}

inline TernaryQuartic<FpExt> to_ext(const TernaryQuartic<Fp>& F,
                                    const ExtCtxPtr& ctx) {
  return TernaryQuartic<FpExt>(to_ext(F.form(), ctx));
}

}  // namespace qinv
