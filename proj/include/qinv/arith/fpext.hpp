// qinv — exact invariants and reduction types of plane quartics.
//
// arith/fpext.hpp: finite extension fields F_{p^k} = F_p[T]/(m(T)) with a
// per-element shared context (several extension degrees can be alive at
// once, e.g. singular points of one curve living in different extensions).
// Degrees here are tiny (k <= 12), so schoolbook arithmetic is used.

#pragma once

#include <memory>
#include <vector>

#include "qinv/arith/fp.hpp"

namespace qinv {

struct ExtCtx {
  uint64_t p;                    // base prime (must equal the thread's Fp modulus)
  std::vector<uint64_t> mod;     // monic irreducible modulus, coeffs of 1, T, ..., T^k
  int deg;                       // k = extension degree

  ExtCtx(uint64_t prime, std::vector<uint64_t> monic_modulus)
      : p(prime), mod(std::move(monic_modulus)), deg(static_cast<int>(mod.size()) - 1) {
    if (deg < 1 || mod.back() != 1)
      throw domain_error("ExtCtx: modulus must be monic of degree >= 1");
  }
};

using ExtCtxPtr = std::shared_ptr<const ExtCtx>;

// Element of F_{p^k}; a null context denotes the zero element of an
// unspecified extension (arithmetic adopts the peer's context).
class FpExt {
 public:
  FpExt() = default;
  FpExt(ExtCtxPtr ctx, std::vector<uint64_t> coeffs) : c_(std::move(ctx)), a_(std::move(coeffs)) {
    normalize();
  }
  static FpExt embed(const ExtCtxPtr& ctx, Fp x) {
    if (x.value() == 0) return FpExt();
    return FpExt(ctx, {x.value()});
  }
  static FpExt gen(const ExtCtxPtr& ctx) {  // the class of T
    if (ctx->deg == 1) {
      // T == -mod[0] in a degree-1 "extension".
      FpCtx f(ctx->p);
      return FpExt(ctx, {f.neg(ctx->mod[0])});
    }
    return FpExt(ctx, {0, 1});
  }

  const ExtCtxPtr& ctx() const { return c_; }
  bool is_zero() const { return a_.empty(); }
  const std::vector<uint64_t>& coeffs() const { return a_; }

  // Coefficient i as a base-field value (0 beyond stored length).
  uint64_t coeff(size_t i) const { return i < a_.size() ? a_[i] : 0; }

  friend FpExt operator+(const FpExt& x, const FpExt& y) {
    const ExtCtxPtr& c = x.c_ ? x.c_ : y.c_;
    if (!c) return FpExt();
    FpCtx f(c->p);
    std::vector<uint64_t> r(std::max(x.a_.size(), y.a_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = f.add(x.coeff(i), y.coeff(i));
    return FpExt(c, std::move(r));
  }
  friend FpExt operator-(const FpExt& x, const FpExt& y) {
    const ExtCtxPtr& c = x.c_ ? x.c_ : y.c_;
    if (!c) return FpExt();
    FpCtx f(c->p);
    std::vector<uint64_t> r(std::max(x.a_.size(), y.a_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = f.sub(x.coeff(i), y.coeff(i));
    return FpExt(c, std::move(r));
  }
  FpExt operator-() const {
    if (!c_) return FpExt();
    FpCtx f(c_->p);
    std::vector<uint64_t> r(a_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = f.neg(a_[i]);
    return FpExt(c_, std::move(r));
  }
  friend FpExt operator*(const FpExt& x, const FpExt& y) {
    if (x.is_zero() || y.is_zero()) return FpExt();
    const ExtCtxPtr& c = x.c_ ? x.c_ : y.c_;
    FpCtx f(c->p);
    std::vector<uint64_t> prod(x.a_.size() + y.a_.size() - 1, 0);
    for (size_t i = 0; i < x.a_.size(); ++i) {
      if (x.a_[i] == 0) continue;
      for (size_t j = 0; j < y.a_.size(); ++j)
        prod[i + j] = f.add(prod[i + j], f.mul(x.a_[i], y.a_[j]));
    }
    reduce(f, *c, prod);
    return FpExt(c, std::move(prod));
  }
  FpExt& operator+=(const FpExt& y) { return *this = *this + y; }
  FpExt& operator-=(const FpExt& y) { return *this = *this - y; }
  FpExt& operator*=(const FpExt& y) { return *this = *this * y; }
  friend bool operator==(const FpExt& x, const FpExt& y) {
    if (x.a_.size() != y.a_.size()) return false;
    for (size_t i = 0; i < x.a_.size(); ++i)
      if (x.a_[i] != y.a_[i]) return false;
    return true;
  }
  friend bool operator!=(const FpExt& x, const FpExt& y) { return !(x == y); }

  FpExt inverse() const {
    if (is_zero()) throw domain_error("division by zero in F_{p^k}");
    // Extended Euclid in F_p[T] against the modulus.
    FpCtx f(c_->p);
    std::vector<uint64_t> r0 = c_->mod, r1 = a_;
    std::vector<uint64_t> t0, t1 = {1};
    while (!r1.empty()) {
      auto [q, rem] = divmod(f, r0, r1);
      std::vector<uint64_t> t2 = polysub(f, t0, polymul(f, q, t1));
      r0 = std::move(r1);
      r1 = std::move(rem);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    // r0 = gcd (a unit since modulus irreducible); scale t0 by its inverse.
    if (r0.size() != 1) throw domain_error("FpExt: modulus not irreducible");
    uint64_t s = f.inv(r0[0]);
    for (auto& x : t0) x = f.mul(x, s);
    std::vector<uint64_t> red = std::move(t0);
    reduce(f, *c_, red);
    return FpExt(c_, std::move(red));
  }

  FpExt pow(Int e) const {
    if (e < 0) return inverse().pow(-e);
    FpExt base = *this;
    FpExt r;  // build 'one' lazily from context
    if (!c_) {
      if (e == 0) throw domain_error("FpExt: 0^0 with no context");
      return FpExt();
    }
    r = FpExt(c_, {1});
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

 private:
  ExtCtxPtr c_;
  std::vector<uint64_t> a_;  // little-endian, trimmed, size <= deg

  void normalize() {
    if (c_ && static_cast<int>(a_.size()) > c_->deg) {
      FpCtx f(c_->p);
      reduce(f, *c_, a_);
    }
    while (!a_.empty() && a_.back() == 0) a_.pop_back();
    if (a_.empty()) c_.reset();
  }
  static void reduce(const FpCtx& f, const ExtCtx& c, std::vector<uint64_t>& v) {
    while (v.size() > static_cast<size_t>(c.deg)) {
      uint64_t lead = v.back();
      size_t top = v.size() - 1;
      v.pop_back();
      if (lead == 0) continue;
      // v -= lead * T^(top-deg) * mod
      size_t off = top - c.deg;
      for (int i = 0; i <= c.deg; ++i)
        v[off + i] = f.sub(v[off + i], f.mul(lead, c.mod[i]));
    }
    while (!v.empty() && v.back() == 0) v.pop_back();
  }
  static std::pair<std::vector<uint64_t>, std::vector<uint64_t>> divmod(
      const FpCtx& f, std::vector<uint64_t> num, const std::vector<uint64_t>& den) {
    std::vector<uint64_t> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    uint64_t ilc = f.inv(den.back());
    while (num.size() >= den.size() && !num.empty()) {
      uint64_t coef = f.mul(num.back(), ilc);
      size_t off = num.size() - den.size();
      q[off] = coef;
      for (size_t i = 0; i < den.size(); ++i)
        num[off + i] = f.sub(num[off + i], f.mul(coef, den[i]));
      while (!num.empty() && num.back() == 0) num.pop_back();
    }
    return {q, num};
  }
  static std::vector<uint64_t> polymul(const FpCtx& f, const std::vector<uint64_t>& a,
                                       const std::vector<uint64_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j)
        r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    return r;
  }
  static std::vector<uint64_t> polysub(const FpCtx& f, const std::vector<uint64_t>& a,
                                       const std::vector<uint64_t>& b) {
    std::vector<uint64_t> r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
      r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
};

template <>
struct field_ops<FpExt> {
  static FpExt zero() { return FpExt(); }
  static bool is_zero(const FpExt& x) { return x.is_zero(); }
  static FpExt inv(const FpExt& x) { return x.inverse(); }
  static std::string to_string(const FpExt& x) {
    std::string s = "[";
    for (size_t i = 0; i < x.coeffs().size(); ++i) {
      if (i) s += ",";
      s += std::to_string(x.coeffs()[i]);
    }
    return s + "]";
  }
};

// Constant builders that work for every field in this library: derive the
// context from a sample element where one is needed.
inline Rat one_like(const Rat&) { return Rat(1); }
inline Fp one_like(const Fp&) { return Fp(1); }
inline FpExt one_like(const FpExt& s) {
  if (!s.ctx()) throw domain_error("one_like(FpExt): sample has no context");
  return FpExt(s.ctx(), {1});
}
inline Rat from_long_like(const Rat&, long v) { return Rat(v); }
inline Fp from_long_like(const Fp&, long v) { return Fp::of_long(v); }
inline FpExt from_long_like(const FpExt& s, long v) {
  if (!s.ctx()) throw domain_error("from_long_like(FpExt): sample has no context");
  FpCtx f(s.ctx()->p);
  uint64_t r = f.from_long(v);
  return r == 0 ? FpExt() : FpExt(s.ctx(), {r});
}

}  // namespace qinv
