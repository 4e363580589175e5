// qinv — exact invariants and reduction types of plane quartics.
//
// arith/fp.hpp: prime fields F_p for odd p < 2^63. The active modulus is
// thread-local (one prime at a time per thread, installed with
// Fp::ScopedModulus); elements are bare uint64_t values, so large matrices
// of them are flat arrays. Hot loops that want to avoid the thread-local
// read can use FpCtx directly.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qinv/arith/base.hpp"

namespace qinv {

// Plain modular arithmetic on uint64_t. p must be an odd prime < 2^63.
struct FpCtx {
  uint64_t p;

  explicit FpCtx(uint64_t prime) : p(prime) {
    if (prime < 3 || (prime & 1) == 0)
      throw domain_error("FpCtx: modulus must be an odd prime");
  }

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + (p - b); }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p - a; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const {
    if (a == 0) throw domain_error("division by zero in F_p");
    int64_t t = 0, nt = 1;
    uint64_t r = p, nr = a;
    while (nr != 0) {
      uint64_t q = r / nr;
      int64_t tmp = t - static_cast<int64_t>(q) * nt;
      t = nt;
      nt = tmp;
      uint64_t tr = r - q * nr;
      r = nr;
      nr = tr;
    }
    return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(p)) : static_cast<uint64_t>(t);
  }
  uint64_t from_int(const Int& v) const {
    Int m = v % Int(p);
    if (m < 0) m += Int(p);
    return m.get_ui();
  }
  uint64_t from_long(long v) const {
    long long m = static_cast<long long>(v) % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<uint64_t>(m);
  }
  uint64_t from_rat(const Rat& x) const {
    uint64_t den = from_int(x.get_den());
    if (den == 0) throw domain_error("rational has zero denominator mod p");
    return mul(from_int(x.get_num()), inv(den));
  }
};

// Regular value type over the thread's active prime.
class Fp {
 public:
  // RAII installer for the thread-local modulus.
  class ScopedModulus {
   public:
    explicit ScopedModulus(uint64_t p) : prev_(tl_ctx_) { tl_ctx_ = FpCtx(p); }
    ~ScopedModulus() { tl_ctx_ = prev_; }
    ScopedModulus(const ScopedModulus&) = delete;
    ScopedModulus& operator=(const ScopedModulus&) = delete;

   private:
    FpCtx prev_;
  };

  static const FpCtx& ctx() { return tl_ctx_; }
  static uint64_t modulus() { return tl_ctx_.p; }

  Fp() : v_(0) {}
  explicit Fp(uint64_t reduced) : v_(reduced) {}
  static Fp of_long(long v) { return Fp(ctx().from_long(v)); }
  static Fp of_int(const Int& v) { return Fp(ctx().from_int(v)); }
  static Fp of_rat(const Rat& v) { return Fp(ctx().from_rat(v)); }

  uint64_t value() const { return v_; }

  friend Fp operator+(Fp a, Fp b) { return Fp(ctx().add(a.v_, b.v_)); }
  friend Fp operator-(Fp a, Fp b) { return Fp(ctx().sub(a.v_, b.v_)); }
  friend Fp operator*(Fp a, Fp b) { return Fp(ctx().mul(a.v_, b.v_)); }
  Fp operator-() const { return Fp(ctx().neg(v_)); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

 private:
  uint64_t v_;
  static thread_local FpCtx tl_ctx_;
};

template <>
struct field_ops<Fp> {
  static Fp zero() { return Fp(); }
  static Fp one() { return Fp(1); }
  static Fp from_long(long v) { return Fp::of_long(v); }
  static bool is_zero(Fp x) { return x.value() == 0; }
  static Fp inv(Fp x) { return Fp(Fp::ctx().inv(x.value())); }
  static std::string to_string(Fp x) { return std::to_string(x.value()); }
};

// Fixed working primes for multi-modular reconstruction: three primes just
// below 2^62 (primality asserted in tests).
inline constexpr uint64_t kWorkPrime1 = 4611686018427387847ULL;
inline constexpr uint64_t kWorkPrime2 = 4611686018427387817ULL;
inline constexpr uint64_t kWorkPrime3 = 4611686018427387787ULL;

}  // namespace qinv
