// qinv — exact invariants and reduction types of plane quartics.
//
// arith/poly.hpp: the three polynomial shapes the library needs.
//   TriForm<K>  — homogeneous trivariate forms (dense triangular storage);
//                 covariant/contravariant machinery lives on these.
//   BiPoly<K>   — bivariate polynomials (dense by total degree), used for
//                 affine charts and local singularity analysis.
//   UniPoly<K>  — dense univariate polynomials with divmod/gcd and
//                 finite-field factorization helpers.
// All arithmetic is exact over the field K.

#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <utility>
#include <vector>

#include "qinv/arith/fpext.hpp"

namespace qinv {

// ---------------------------------------------------------------------------
// TriForm
// ---------------------------------------------------------------------------

// Homogeneous form of fixed degree d in three variables. Monomial (i,j,k)
// with i+j+k == d is stored at tri_index(d,i,j). Variables are abstract
// slots 0,1,2; callers decide whether they mean (x,y,z) or dual (u,v,w).
inline int tri_size(int d) { return (d + 1) * (d + 2) / 2; }
inline int tri_index(int d, int i, int j) {
  // offset of row i (exponent of var0), then j (exponent of var1).
  return i * (2 * d + 3 - i) / 2 + j;
}

template <class K>
class TriForm {
 public:
  TriForm() : d_(0), c_(1, K()) {}
  explicit TriForm(int degree) : d_(degree), c_(tri_size(degree), K()) {}

  int degree() const { return d_; }
  const K& at(int i, int j) const { return c_[tri_index(d_, i, j)]; }
  K& at(int i, int j) { return c_[tri_index(d_, i, j)]; }
  const std::vector<K>& coeffs() const { return c_; }
  std::vector<K>& coeffs() { return c_; }

  bool is_zero() const {
    for (const K& x : c_)
      if (!field_ops<K>::is_zero(x)) return false;
    return true;
  }

  template <class F>
  void for_each(F&& fn) const {  // fn(i, j, k, coeff)
    for (int i = 0; i <= d_; ++i)
      for (int j = 0; j + i <= d_; ++j) {
        const K& v = c_[tri_index(d_, i, j)];
        if (!field_ops<K>::is_zero(v)) fn(i, j, d_ - i - j, v);
      }
  }

  friend TriForm operator+(const TriForm& a, const TriForm& b) {
    assert(a.d_ == b.d_);
    TriForm r(a.d_);
    for (size_t t = 0; t < r.c_.size(); ++t) r.c_[t] = a.c_[t] + b.c_[t];
    return r;
  }
  friend TriForm operator-(const TriForm& a, const TriForm& b) {
    assert(a.d_ == b.d_);
    TriForm r(a.d_);
    for (size_t t = 0; t < r.c_.size(); ++t) r.c_[t] = a.c_[t] - b.c_[t];
    return r;
  }
  TriForm operator-() const {
    TriForm r(d_);
    for (size_t t = 0; t < c_.size(); ++t) r.c_[t] = -c_[t];
    return r;
  }
  friend TriForm operator*(const K& s, const TriForm& a) {
    TriForm r(a.d_);
    for (size_t t = 0; t < a.c_.size(); ++t) r.c_[t] = s * a.c_[t];
    return r;
  }
  friend TriForm operator*(const TriForm& a, const TriForm& b) {
    TriForm r(a.d_ + b.d_);
    a.for_each([&](int i, int j, int k, const K& va) {
      (void)k;
      b.for_each([&](int bi, int bj, int bk, const K& vb) {
        (void)bk;
        r.at(i + bi, j + bj) += va * vb;
      });
    });
    return r;
  }

  // Partial derivative with respect to variable v in {0,1,2}.
  TriForm derivative(int v) const {
    if (d_ == 0) return TriForm(0);
    TriForm r(d_ - 1);
    for_each([&](int i, int j, int k, const K& val) {
      int e[3] = {i, j, k};
      if (e[v] == 0) return;
      K s = from_long_like(val, e[v]) * val;
      e[v] -= 1;
      r.at(e[0], e[1]) += s;
    });
    return r;
  }

  K evaluate(const K& x0, const K& x1, const K& x2) const {
    // Power tables keep this O(d^2) multiplies.
    std::vector<K> p0(d_ + 1), p1(d_ + 1), p2(d_ + 1);
    K one = one_like_or_default();
    p0[0] = p1[0] = p2[0] = one;
    for (int t = 1; t <= d_; ++t) {
      p0[t] = p0[t - 1] * x0;
      p1[t] = p1[t - 1] * x1;
      p2[t] = p2[t - 1] * x2;
    }
    K acc = K();
    for_each([&](int i, int j, int k, const K& v) { acc += v * p0[i] * p1[j] * p2[k]; });
    return acc;
  }

  // Linear substitution: result(x) = this(A x), A a 3x3 matrix (row major).
  TriForm substitute(const std::array<K, 9>& A) const {
    TriForm lin[3];
    for (int r = 0; r < 3; ++r) {
      // Degree-1 slots: (1,0,0) -> at(1,0), (0,1,0) -> at(0,1), (0,0,1) -> at(0,0).
      lin[r] = TriForm(1);
      lin[r].at(1, 0) = A[3 * r + 0];
      lin[r].at(0, 1) = A[3 * r + 1];
      lin[r].at(0, 0) = A[3 * r + 2];
    }
    // Precompute powers of the three linear forms up to d_.
    std::vector<TriForm> pw[3];
    for (int r = 0; r < 3; ++r) {
      pw[r].resize(d_ + 1);
      pw[r][0] = TriForm(0);
      pw[r][0].at(0, 0) = one_like_or_default();
      for (int t = 1; t <= d_; ++t) pw[r][t] = pw[r][t - 1] * lin[r];
    }
    TriForm out(d_);
    for_each([&](int i, int j, int k, const K& v) {
      TriForm term = pw[0][i] * pw[1][j] * pw[2][k];
      for (size_t t = 0; t < out.c_.size(); ++t) {
        // term has degree d_ as well
        out.c_[t] += v * term.c_[t];
      }
    });
    return out;
  }

  // Exact division by (variable v)^k; throws if not divisible.
  TriForm divide_by_var_pow(int v, int k) const {
    TriForm r(d_ - k);
    bool ok = true;
    for_each([&](int i, int j, int kk, const K& val) {
      int e[3] = {i, j, kk};
      if (e[v] < k) {
        ok = false;
        return;
      }
      e[v] -= k;
      r.at(e[0], e[1]) = val;
    });
    if (!ok) throw domain_error("TriForm: inexact division by variable power");
    return r;
  }

 private:
  int d_;
  std::vector<K> c_;

  K one_like_or_default() const {
    for (const K& x : c_)
      if (!field_ops<K>::is_zero(x)) return one_like(x);
    // All-zero form: a default K() works as 0; powers of it only multiply 0.
    // For Rat/Fp the default is fine; for FpExt the caller never evaluates
    // an all-zero form in a context-sensitive way.
    return safe_one(K());
  }
  static Rat safe_one(const Rat&) { return Rat(1); }
  static Fp safe_one(const Fp&) { return Fp(1); }
  static FpExt safe_one(const FpExt&) { return FpExt(); }
};

// Polarization pairing D(P, Q) = P(d/dv0, d/dv1, d/dv2) applied to Q.
// Requires deg P <= deg Q; result has degree deg Q - deg P.
template <class K>
TriForm<K> polar_pairing(const TriForm<K>& P, const TriForm<K>& Q) {
  assert(P.degree() <= Q.degree());
  TriForm<K> r(Q.degree() - P.degree());
  P.for_each([&](int a0, int a1, int a2, const K& pv) {
    Q.for_each([&](int b0, int b1, int b2, const K& qv) {
      if (b0 < a0 || b1 < a1 || b2 < a2) return;
      long f = 1;
      for (int t = 0; t < a0; ++t) f *= (b0 - t);
      for (int t = 0; t < a1; ++t) f *= (b1 - t);
      for (int t = 0; t < a2; ++t) f *= (b2 - t);
      r.at(b0 - a0, b1 - a1) += from_long_like(qv, f) * pv * qv;
    });
  });
  return r;
}

// ---------------------------------------------------------------------------
// BiPoly — dense bivariate polynomial, indexed by (i, j) up to total degree.
// ---------------------------------------------------------------------------

template <class K>
class BiPoly {
 public:
  BiPoly() : d_(0), c_(1, K()) {}
  explicit BiPoly(int maxdeg) : d_(maxdeg), c_(tri_size(maxdeg), K()) {}

  int max_degree() const { return d_; }
  const K& at(int i, int j) const { return c_[tri_index(d_, i, j)]; }
  K& at(int i, int j) { return c_[tri_index(d_, i, j)]; }

  bool is_zero() const {
    for (const K& x : c_)
      if (!field_ops<K>::is_zero(x)) return false;
    return true;
  }

  // Actual total degree (-1 for the zero polynomial).
  int degree() const {
    int best = -1;
    for_each([&](int i, int j, const K&) { best = std::max(best, i + j); });
    return best;
  }

  // Order of vanishing at the origin (multiplicity); -1 for zero poly.
  int order_at_origin() const {
    int best = -1;
    for_each([&](int i, int j, const K&) {
      if (best < 0 || i + j < best) best = i + j;
    });
    return best;
  }

  template <class F>
  void for_each(F&& fn) const {  // fn(i, j, coeff) over nonzero terms
    for (int i = 0; i <= d_; ++i)
      for (int j = 0; j + i <= d_; ++j) {
        const K& v = c_[tri_index(d_, i, j)];
        if (!field_ops<K>::is_zero(v)) fn(i, j, v);
      }
  }

  BiPoly resized(int newmax) const {
    BiPoly r(newmax);
    for_each([&](int i, int j, const K& v) {
      if (i + j <= newmax) r.at(i, j) = v;
    });
    return r;
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r(std::max(a.d_, b.d_));
    a.for_each([&](int i, int j, const K& v) { r.at(i, j) += v; });
    b.for_each([&](int i, int j, const K& v) { r.at(i, j) += v; });
    return r;
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r(std::max(a.d_, b.d_));
    a.for_each([&](int i, int j, const K& v) { r.at(i, j) += v; });
    b.for_each([&](int i, int j, const K& v) { r.at(i, j) -= v; });
    return r;
  }
  friend BiPoly operator*(const K& s, const BiPoly& a) {
    BiPoly r(a.d_);
    a.for_each([&](int i, int j, const K& v) { r.at(i, j) = s * v; });
    return r;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r(a.d_ + b.d_);
    a.for_each([&](int i, int j, const K& va) {
      b.for_each([&](int bi, int bj, const K& vb) { r.at(i + bi, j + bj) += va * vb; });
    });
    return r;
  }

  // Truncating product: drops all terms of total degree > cap.
  static BiPoly mul_trunc(const BiPoly& a, const BiPoly& b, int cap) {
    BiPoly r(cap);
    a.for_each([&](int i, int j, const K& va) {
      b.for_each([&](int bi, int bj, const K& vb) {
        if (i + bi + j + bj <= cap) r.at(i + bi, j + bj) += va * vb;
      });
    });
    return r;
  }

  BiPoly derivative(int v) const {  // v in {0,1}
    BiPoly r(std::max(0, d_ - 1));
    for_each([&](int i, int j, const K& val) {
      int e[2] = {i, j};
      if (e[v] == 0) return;
      K s = from_long_like(val, e[v]) * val;
      e[v] -= 1;
      if (e[0] + e[1] <= r.d_) r.at(e[0], e[1]) += s;
    });
    return r;
  }

  K evaluate(const K& x, const K& y) const {
    std::vector<K> px(d_ + 1), py(d_ + 1);
    K one = one_value();
    px[0] = py[0] = one;
    for (int t = 1; t <= d_; ++t) {
      px[t] = px[t - 1] * x;
      py[t] = py[t - 1] * y;
    }
    K acc = K();
    for_each([&](int i, int j, const K& v) { acc += v * px[i] * py[j]; });
    return acc;
  }

  // Substitution (x, y) -> (a x + b y, c x + d y) with optional translation
  // handled by the caller (translations are compositions with shift()).
  BiPoly linear_sub(const K& a, const K& b, const K& c, const K& d) const {
    BiPoly lx(1), ly(1);
    lx.at(1, 0) = a;
    lx.at(0, 1) = b;
    ly.at(1, 0) = c;
    ly.at(0, 1) = d;
    std::vector<BiPoly> px(d_ + 1), py(d_ + 1);
    px[0] = constant(one_value());
    py[0] = constant(one_value());
    for (int t = 1; t <= d_; ++t) {
      px[t] = px[t - 1] * lx;
      py[t] = py[t - 1] * ly;
    }
    BiPoly r(d_);
    for_each([&](int i, int j, const K& v) {
      BiPoly term = BiPoly::mul_trunc(px[i], py[j], d_);
      term.for_each([&](int ti, int tj, const K& tv) { r.at(ti, tj) += v * tv; });
    });
    return r;
  }

  // Shift (x, y) -> (x + x0, y + y0).
  BiPoly shift(const K& x0, const K& y0) const {
    BiPoly lx(1), ly(1);
    lx.at(1, 0) = one_value();
    lx.at(0, 0) = x0;
    ly.at(0, 1) = one_value();
    ly.at(0, 0) = y0;
    std::vector<BiPoly> px(d_ + 1), py(d_ + 1);
    px[0] = constant(one_value());
    py[0] = constant(one_value());
    for (int t = 1; t <= d_; ++t) {
      px[t] = px[t - 1] * lx;
      py[t] = py[t - 1] * ly;
    }
    BiPoly r(d_);
    for_each([&](int i, int j, const K& v) {
      BiPoly term = BiPoly::mul_trunc(px[i], py[j], d_);
      term.for_each([&](int ti, int tj, const K& tv) { r.at(ti, tj) += v * tv; });
    });
    return r;
  }

  static BiPoly constant(const K& v) {
    BiPoly r(0);
    r.at(0, 0) = v;
    return r;
  }

  K one_value() const {
    for (const K& x : c_)
      if (!field_ops<K>::is_zero(x)) return one_like(x);
    return one_fallback(K());
  }

 private:
  int d_;
  std::vector<K> c_;

  static Rat one_fallback(const Rat&) { return Rat(1); }
  static Fp one_fallback(const Fp&) { return Fp(1); }
  static FpExt one_fallback(const FpExt&) { return FpExt(); }
};

// ---------------------------------------------------------------------------
// UniPoly — dense univariate polynomial.
// ---------------------------------------------------------------------------

template <class K>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const K& v) {
    return field_ops<K>::is_zero(v) ? UniPoly() : UniPoly(std::vector<K>{v});
  }
  static UniPoly monomial(const K& v, int deg) {
    if (field_ops<K>::is_zero(v)) return UniPoly();
    std::vector<K> c(deg + 1, K());
    c[deg] = v;
    return UniPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const K& operator[](size_t i) const { return c_[i]; }
  K coeff(size_t i) const { return i < c_.size() ? c_[i] : K(); }
  const std::vector<K>& coeffs() const { return c_; }
  const K& leading() const { return c_.back(); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const K& s, const UniPoly& a) {
    std::vector<K> r(a.c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = s * a.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (field_ops<K>::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }

  // Euclidean division; denominator leading coefficient must be invertible.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw domain_error("UniPoly: division by zero polynomial");
    std::vector<K> n = num.c_;
    int dd = den.degree();
    K ilc = field_ops<K>::inv(den.leading());
    std::vector<K> q(n.size() > static_cast<size_t>(dd) ? n.size() - dd : 0, K());
    while (static_cast<int>(n.size()) - 1 >= dd && !n.empty()) {
      K coef = n.back() * ilc;
      size_t off = n.size() - 1 - dd;
      if (!field_ops<K>::is_zero(coef)) {
        q[off] = coef;
        for (int i = 0; i <= dd; ++i) n[off + i] = n[off + i] - coef * den.c_[i];
      }
      n.pop_back();
      while (!n.empty() && field_ops<K>::is_zero(n.back())) n.pop_back();
      if (static_cast<int>(n.size()) - 1 < dd) break;
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(n))};
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return field_ops<K>::inv(leading()) * *this;
  }

  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<K> r(c_.size() - 1, K());
    for (size_t i = 1; i < c_.size(); ++i) {
      // Skip zeros: a zero element cannot mint integers in its field.
      if (field_ops<K>::is_zero(c_[i])) continue;
      r[i - 1] = from_long_like(c_[i], static_cast<long>(i)) * c_[i];
    }
    return UniPoly(std::move(r));
  }

  K evaluate(const K& x) const {
    K acc = K();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // this(x) composed mod m: returns this(a) mod m where a is a polynomial.
  static UniPoly compose_mod(const UniPoly& f, const UniPoly& a, const UniPoly& m) {
    UniPoly acc;
    for (size_t i = f.c_.size(); i-- > 0;) {
      acc = divmod(acc * a, m).second;
      acc = acc + constant(f.c_[i]);
    }
    return acc;
  }

  static UniPoly pow_mod(UniPoly base, Int e, const UniPoly& m) {
    UniPoly r = constant(base.one_value_or(m));
    base = divmod(base, m).second;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = divmod(r * base, m).second;
      base = divmod(base * base, m).second;
      e >>= 1;
    }
    return r;
  }

  K one_value_or(const UniPoly& other) const {
    for (const K& x : c_)
      if (!field_ops<K>::is_zero(x)) return one_like(x);
    for (const K& x : other.c_)
      if (!field_ops<K>::is_zero(x)) return one_like(x);
    throw domain_error("UniPoly: cannot mint 1 from zero polynomials");
  }

 private:
  std::vector<K> c_;  // little-endian, trimmed

  void trim() {
    while (!c_.empty() && field_ops<K>::is_zero(c_.back())) c_.pop_back();
  }
};

}  // namespace qinv
