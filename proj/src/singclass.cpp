// qinv — exact invariants and reduction types of plane quartics.
//
// singclass.cpp: singular locus extraction, Milnor numbers, A/D/E/X germ
// classification, reducibility over the algebraic closure, non-reduced shape
// analysis, and the full per-quartic classification over F_p and Q.
//
// Strategy notes:
//  * All elimination happens after a random unimodular coordinate change;
//    every candidate object (singular point, gcd, factor) is verified
//    exactly, so randomness affects only termination speed, never
//    correctness of a returned answer.  Reducibility is the one exception:
//    a "no factor found" verdict is accepted only after three independent
//    coordinate frames agree.
//  * Small primes (p = 11, 13, ...) do not carry enough evaluation points
//    for interpolation, so evaluation always happens in a small extension
//    field F_{p^e} and the results are projected back; for large p a
//    degree-1 extension keeps the code path uniform.

#include "qinv/singclass/singclass.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qinv/arith/linalg.hpp"
#include "qinv/arith/upoly.hpp"
#include "qinv/invariants/do.hpp"

namespace qinv {

// --- printing -------------------------------------------------------------

std::string to_string(const ADELabel& l) {
  const char* fam = "?";
  switch (l.family) {
    case ADEFamily::A: fam = "A"; break;
    case ADEFamily::D: fam = "D"; break;
    case ADEFamily::E: fam = "E"; break;
    case ADEFamily::X: fam = "X"; break;
  }
  return std::string(fam) + std::to_string(l.index);
}

std::string to_string(GitStatus s) {
  switch (s) {
    case GitStatus::Stable: return "stable";
    case GitStatus::Semistable: return "semistable";
    case GitStatus::Unstable: return "unstable";
  }
  return "?";
}

std::string to_string(NonIsolatedShape s) {
  switch (s) {
    case NonIsolatedShape::L2C: return "l2c";
    case NonIsolatedShape::LLL2: return "lll2";
    case NonIsolatedShape::C2: return "c2";
    case NonIsolatedShape::L2L2: return "l2l2";
    case NonIsolatedShape::LL3: return "ll3";
    case NonIsolatedShape::L4: return "l4";
  }
  return "?";
}

std::string to_string(const SingularityType& t) {
  std::ostringstream os;
  if (t.non_isolated) {
    os << "non-isolated " << to_string(*t.non_isolated);
  } else if (t.points.empty()) {
    os << "smooth";
  } else {
    // Grouped with exponents, e.g. "A1^2 A3".
    size_t i = 0;
    bool first = true;
    while (i < t.points.size()) {
      size_t j = i;
      while (j < t.points.size() && t.points[j] == t.points[i]) ++j;
      if (!first) os << ' ';
      os << to_string(t.points[i]);
      if (j - i > 1) os << '^' << (j - i);
      first = false;
      i = j;
    }
  }
  os << "; " << (t.reducible ? "reducible" : "irreducible");
  os << "; " << to_string(t.git_status);
  return os.str();
}

namespace {

// --- small generic helpers -------------------------------------------------

template <class K>
K safe_at(const BiPoly<K>& g, int i, int j) {
  if (i < 0 || j < 0 || i + j > g.max_degree()) return K();
  return g.at(i, j);
}

template <class K>
int degree_x(const BiPoly<K>& g) {
  int d = -1;
  g.for_each([&](int i, int, const K&) { d = std::max(d, i); });
  return d;
}

template <class K>
int degree_y(const BiPoly<K>& g) {
  int d = -1;
  g.for_each([&](int, int j, const K&) { d = std::max(d, j); });
  return d;
}

// Substitute x := x0, leaving a polynomial in y.  Safe when x0 is the zero
// element (which may carry no field context).
template <class K>
UniPoly<K> substitute_x(const BiPoly<K>& g, const K& x0) {
  const int d = g.max_degree();
  std::vector<K> xp(static_cast<size_t>(d) + 1, K());
  if (d >= 1) xp[1] = x0;
  for (int t = 2; t <= d; ++t) xp[static_cast<size_t>(t)] = xp[static_cast<size_t>(t - 1)] * x0;
  std::vector<K> out(static_cast<size_t>(d) + 1, K());
  g.for_each([&](int i, int j, const K& v) {
    if (i == 0)
      out[static_cast<size_t>(j)] = out[static_cast<size_t>(j)] + v;
    else
      out[static_cast<size_t>(j)] = out[static_cast<size_t>(j)] + v * xp[static_cast<size_t>(i)];
  });
  return UniPoly<K>(std::move(out));
}

// Substitute y := y0, leaving a polynomial in x.
template <class K>
UniPoly<K> substitute_y(const BiPoly<K>& g, const K& y0) {
  const int d = g.max_degree();
  std::vector<K> yp(static_cast<size_t>(d) + 1, K());
  if (d >= 1) yp[1] = y0;
  for (int t = 2; t <= d; ++t) yp[static_cast<size_t>(t)] = yp[static_cast<size_t>(t - 1)] * y0;
  std::vector<K> out(static_cast<size_t>(d) + 1, K());
  g.for_each([&](int i, int j, const K& v) {
    if (j == 0)
      out[static_cast<size_t>(i)] = out[static_cast<size_t>(i)] + v;
    else
      out[static_cast<size_t>(i)] = out[static_cast<size_t>(i)] + v * yp[static_cast<size_t>(j)];
  });
  return UniPoly<K>(std::move(out));
}

BiPoly<FpExt> lift_bipoly(const ExtCtxPtr& ctx, const BiPoly<Fp>& g) {
  BiPoly<FpExt> r(g.max_degree());
  g.for_each([&](int i, int j, const Fp& v) { r.at(i, j) = FpExt::embed(ctx, v); });
  return r;
}

// The affine chart z = 1 of a form of any degree.
template <class K>
BiPoly<K> chart_z(const TriForm<K>& f) {
  BiPoly<K> g(f.degree());
  f.for_each([&](int i, int j, int, const K& v) { g.at(i, j) = v; });
  return g;
}

// Homogenize a chart polynomial back to a form of the given degree.
TriForm<Fp> homogenize(const BiPoly<Fp>& g, int deg) {
  if (g.degree() > deg) throw domain_error("homogenize: degree bound too small");
  TriForm<Fp> f(deg);
  g.for_each([&](int i, int j, const Fp& v) { f.at(i, j) = v; });
  return f;
}

TriForm<Fp> form_mul(const TriForm<Fp>& a, const TriForm<Fp>& b) {
  TriForm<Fp> r(a.degree() + b.degree());
  a.for_each([&](int i, int j, int, const Fp& va) {
    b.for_each([&](int u, int v, int, const Fp& vb) {
      r.at(i + u, j + v) = r.at(i + u, j + v) + va * vb;
    });
  });
  return r;
}

// Is a == lambda * b for some nonzero scalar lambda?
bool proportional(const TriForm<Fp>& a, const TriForm<Fp>& b) {
  if (a.degree() != b.degree()) return false;
  Fp lambda;
  bool found = false;
  b.for_each([&](int i, int j, int, const Fp& v) {
    if (!found) {
      lambda = a.at(i, j) * field_ops<Fp>::inv(v);
      found = true;
    }
  });
  if (!found) return a.is_zero();
  TriForm<Fp> diff = a - lambda * b;
  return diff.is_zero();
}

// Exact quotient of forms (num = den * Q), via a linear solve on the
// coefficients of Q; nullopt when the division is not exact.
std::optional<TriForm<Fp>> form_quotient(const TriForm<Fp>& num, const TriForm<Fp>& den) {
  const int n = num.degree(), d = den.degree(), q = n - d;
  if (q < 0 || den.is_zero()) return std::nullopt;
  Mat<Fp> A(tri_size(n), tri_size(q));
  den.for_each([&](int a, int b, int, const Fp& v) {
    for (int i = 0; i <= q; ++i)
      for (int j = 0; i + j <= q; ++j) {
        Fp& cell = A.at(tri_index(n, a + i, b + j), tri_index(q, i, j));
        cell = cell + v;
      }
  });
  std::vector<Fp> rhs(static_cast<size_t>(tri_size(n)), Fp());
  num.for_each([&](int i, int j, int, const Fp& v) {
    rhs[static_cast<size_t>(tri_index(n, i, j))] = v;
  });
  auto sol = solve(A, rhs);
  if (!sol) return std::nullopt;
  TriForm<Fp> Q(q);
  for (int i = 0; i <= q; ++i)
    for (int j = 0; i + j <= q; ++j)
      Q.at(i, j) = (*sol)[static_cast<size_t>(tri_index(q, i, j))];
  // The solve can return a particular solution even for an inconsistent
  // sparse pattern only when rref said consistent, which is exact; still,
  // verify multiplication to be airtight.
  if (!(form_mul(den, Q) - num).is_zero()) return std::nullopt;
  return Q;
}

// Rank of the symmetric Gram matrix of a ternary quadratic (p odd).
int gram_rank(const TriForm<Fp>& q) {
  if (q.degree() != 2) throw domain_error("gram_rank: expected a quadratic form");
  const Fp h = field_ops<Fp>::inv(Fp::of_long(2));
  Mat<Fp> m(3, 3);
  m.at(0, 0) = q.at(2, 0);
  m.at(1, 1) = q.at(0, 2);
  m.at(2, 2) = q.at(0, 0);
  m.at(0, 1) = m.at(1, 0) = q.at(1, 1) * h;
  m.at(0, 2) = m.at(2, 0) = q.at(1, 0) * h;
  m.at(1, 2) = m.at(2, 1) = q.at(0, 1) * h;
  return rref(m);
}

// Extract a line L with W == lambda * L^2 from a rank-1 quadratic.
std::optional<TriForm<Fp>> line_from_rank1(const TriForm<Fp>& W) {
  const Fp h = field_ops<Fp>::inv(Fp::of_long(2));
  // Gram matrix rows are all proportional to the line's coefficient vector.
  std::array<std::array<Fp, 3>, 3> m{};
  m[0] = {W.at(2, 0), W.at(1, 1) * h, W.at(1, 0) * h};
  m[1] = {W.at(1, 1) * h, W.at(0, 2), W.at(0, 1) * h};
  m[2] = {W.at(1, 0) * h, W.at(0, 1) * h, W.at(0, 0)};
  for (int i = 0; i < 3; ++i) {
    bool nz = false;
    for (int j = 0; j < 3; ++j)
      if (m[i][j] != Fp()) nz = true;
    if (!nz) continue;
    TriForm<Fp> L(1);
    L.at(1, 0) = m[i][0];
    L.at(0, 1) = m[i][1];
    L.at(0, 0) = m[i][2];
    if (proportional(W, form_mul(L, L))) return L;
    return std::nullopt;
  }
  return std::nullopt;
}

LinearSubstitution<Fp> random_sl3(std::mt19937_64& rng) {
  std::uniform_int_distribution<uint64_t> d(0, Fp::modulus() - 1);
  LinearSubstitution<Fp> U = LinearSubstitution<Fp>::identity();
  U.at(0, 1) = Fp(d(rng));
  U.at(0, 2) = Fp(d(rng));
  U.at(1, 2) = Fp(d(rng));
  LinearSubstitution<Fp> L = LinearSubstitution<Fp>::identity();
  L.at(1, 0) = Fp(d(rng));
  L.at(2, 0) = Fp(d(rng));
  L.at(2, 1) = Fp(d(rng));
  return U * L;
}

// --- evaluation fields -------------------------------------------------------

// A fixed extension F_{p^e} with at least `min_nodes` + margin elements, so
// interpolation nodes exist even over tiny prime fields.  Node t is the
// element with base-p digits of t, distinct for distinct t.
class EvalField {
 public:
  EvalField(int min_nodes, std::mt19937_64& rng) {
    const uint64_t p = Fp::modulus();
    int e = 1;
    Int cap(p);
    while (cap < Int(min_nodes) + 8) {
      cap *= Int(p);
      ++e;
    }
    if (e == 1)
      ctx_ = std::make_shared<const ExtCtx>(p, std::vector<uint64_t>{0, 1});
    else
      ctx_ = ext_ctx_from_irreducible(random_irreducible(e, rng));
  }

  const ExtCtxPtr& ctx() const { return ctx_; }

  FpExt node(uint64_t t) const {
    const uint64_t p = ctx_->p;
    std::vector<uint64_t> digits;
    for (int i = 0; i < ctx_->deg; ++i) {
      digits.push_back(t % p);
      t /= p;
    }
    return FpExt(ctx_, std::move(digits));
  }

 private:
  ExtCtxPtr ctx_;
};

std::optional<Fp> ext_to_base(const FpExt& e) {
  for (size_t i = 1; i < e.coeffs().size(); ++i)
    if (e.coeffs()[i] != 0) return std::nullopt;
  return Fp(e.coeff(0));
}

// --- interpolated resultants ---------------------------------------------------

// Determinant of the Sylvester matrix of fa, fb padded to degrees (da, db).
FpExt sylvester_det(const UniPoly<FpExt>& fa, const UniPoly<FpExt>& fb, int da, int db) {
  const int n = da + db;
  Mat<FpExt> m(n, n);
  for (int r = 0; r < db; ++r)
    for (int t = 0; t <= da; ++t) m.at(r, r + t) = fa.coeff(da - t);
  for (int r = 0; r < da; ++r)
    for (int t = 0; t <= db; ++t) m.at(db + r, r + t) = fb.coeff(db - t);
  return det(m);
}

// Res_y(a, b) as a polynomial in x, by evaluation at generic-degree Sylvester
// determinants and interpolation.  Exact: the generic-size Sylvester
// determinant vanishes at x0 whenever a(x0, .) and b(x0, .) share a root,
// even when leading coefficients drop.
UniPoly<Fp> resultant_eliminate_y(const BiPoly<Fp>& a, const BiPoly<Fp>& b,
                                std::mt19937_64& rng) {
  if (a.is_zero() || b.is_zero()) return UniPoly<Fp>();
  const int dya = degree_y(a), dyb = degree_y(b);
  if (dya == 0 || dyb == 0) {
    // One operand is y-free: Res_y = (that operand)^(other's y-degree).
    const BiPoly<Fp>& c = (dya == 0) ? a : b;
    const int e = (dya == 0) ? dyb : dya;
    UniPoly<Fp> base = substitute_y(c, Fp());
    UniPoly<Fp> r = UniPoly<Fp>::constant(Fp(1));
    for (int t = 0; t < e; ++t) r = r * base;
    return r;
  }
  const int bound = degree_x(a) * dyb + degree_x(b) * dya;
  EvalField ef(bound + 1, rng);
  const BiPoly<FpExt> aE = lift_bipoly(ef.ctx(), a);
  const BiPoly<FpExt> bE = lift_bipoly(ef.ctx(), b);
  std::vector<FpExt> xs, ys;
  for (int t = 0; t <= std::max(bound, 1); ++t) {
    FpExt x0 = ef.node(static_cast<uint64_t>(t));
    xs.push_back(x0);
    ys.push_back(sylvester_det(substitute_x(aE, x0), substitute_x(bE, x0), dya, dyb));
  }
  UniPoly<FpExt> R = lagrange_interpolate(xs, ys);
  std::vector<Fp> out(static_cast<size_t>(R.degree()) + 1, Fp());
  for (int i = 0; i <= R.degree(); ++i) {
    auto proj = ext_to_base(R.coeff(i));
    if (!proj)
      throw std::logic_error("resultant_eliminate_y: interpolated value left the base field");
    out[static_cast<size_t>(i)] = *proj;
  }
  return UniPoly<Fp>(std::move(out));
}

// --- coordinate-frame admissibility -----------------------------------------

// True when the line z = 0 is not a component and carries no singular point.
bool infinity_clean(const TriForm<Fp>& T) {
  bool line_in_curve = true;
  for (int i = 0; i <= 4; ++i)
    if (T.at(i, 4 - i) != Fp()) {
      line_in_curve = false;
      break;
    }
  if (line_in_curve) return false;
  // Restrictions of the three partials to z = 0, as binary cubics.
  std::array<UniPoly<Fp>, 3> b;
  std::array<bool, 3> zero{};
  std::array<Fp, 3> lead{};
  for (int t = 0; t < 3; ++t) {
    TriForm<Fp> P = T.derivative(t);
    std::vector<Fp> c(4, Fp());
    for (int i = 0; i <= 3; ++i) c[static_cast<size_t>(i)] = P.at(i, 3 - i);
    lead[static_cast<size_t>(t)] = c[3];
    b[static_cast<size_t>(t)] = UniPoly<Fp>(std::move(c));
    zero[static_cast<size_t>(t)] = b[static_cast<size_t>(t)].is_zero();
  }
  if (zero[0] && zero[1] && zero[2]) return false;
  // Common zero with y != 0.
  UniPoly<Fp> g;
  for (int t = 0; t < 3; ++t)
    if (!zero[static_cast<size_t>(t)]) g = g.is_zero() ? b[static_cast<size_t>(t)].monic() : UniPoly<Fp>::gcd(g, b[static_cast<size_t>(t)]);
  if (g.degree() >= 1) return false;
  // The point (1 : 0 : 0) on z = 0: all three x^3 coefficients vanish there.
  if (lead[0] == Fp() && lead[1] == Fp() && lead[2] == Fp()) return false;
  return true;
}

}  // namespace

// --- singular locus -------------------------------------------------------------

std::vector<SingularOrbit> singular_orbits(const TernaryQuartic<Fp>& F) {
  const uint64_t p = Fp::modulus();
  if (p <= 7) throw domain_error("singular_orbits: characteristic must exceed 7");
  if (F.is_zero()) throw domain_error("singular_orbits: zero quartic");
  std::mt19937_64 rng(0x51A6C1A55ULL);
  for (int attempt = 0; attempt < 40; ++attempt) {
    const LinearSubstitution<Fp> A =
        attempt == 0 ? LinearSubstitution<Fp>::identity() : random_sl3(rng);
    const TernaryQuartic<Fp> G = act(A, F);
    const TriForm<Fp>& T = G.form();
    if (!infinity_clean(T)) continue;
    const BiPoly<Fp> g = chart_z(T);
    const BiPoly<Fp> gx = g.derivative(0);
    const BiPoly<Fp> gy = g.derivative(1);
    if (gx.is_zero() || gy.is_zero()) continue;
    const UniPoly<Fp> R = resultant_eliminate_y(gx, gy, rng);
    if (R.is_zero()) continue;  // common factor of the partials; new frame
    std::vector<SingularOrbit> orbits;
    if (R.degree() > 0) {
      const UniPoly<Fp> S = squarefree_part(R);
      bool good = true;
      for (const UniPoly<Fp>& q : factor_squarefree(S, rng)) {
        ExtCtxPtr ctx = ext_ctx_from_irreducible(q);
        const FpExt x0 = FpExt::gen(ctx);
        const BiPoly<FpExt> gE = lift_bipoly(ctx, g);
        const UniPoly<FpExt> hg = substitute_x(gE, x0);
        if (hg.is_zero()) {  // a whole fiber inside the curve; new frame
          good = false;
          break;
        }
        const UniPoly<FpExt> hx = substitute_x(lift_bipoly(ctx, gx), x0);
        const UniPoly<FpExt> hy = substitute_x(lift_bipoly(ctx, gy), x0);
        UniPoly<FpExt> h = hg;
        if (!hx.is_zero()) h = UniPoly<FpExt>::gcd(h, hx);
        if (!hy.is_zero()) h = UniPoly<FpExt>::gcd(h, hy);
        if (h.degree() <= 0) continue;  // critical values off the curve
        const UniPoly<FpExt> sq = squarefree_part(h);
        if (sq.degree() != 1) {  // several points above x0, or a larger field
          good = false;
          break;
        }
        const FpExt y0 = -sq.coeff(0);
        BiPoly<FpExt> local = gE.shift(x0, y0);
        const int mult = local.order_at_origin();
        if (mult < 2) {
          good = false;
          break;
        }
        // act(A, F)(v) = F(A v): a singular point v of G maps to A v on F.
        const std::array<FpExt, 3> v = {x0, y0, FpExt::embed(ctx, Fp(1))};
        std::array<FpExt, 3> P;
        for (int i = 0; i < 3; ++i) {
          FpExt acc = FpExt::embed(ctx, A.at(i, 0)) * v[0];
          acc += FpExt::embed(ctx, A.at(i, 1)) * v[1];
          acc += FpExt::embed(ctx, A.at(i, 2)) * v[2];
          P[i] = acc;
        }
        orbits.push_back(SingularOrbit{ctx, q.degree(), P, mult, std::move(local)});
      }
      if (!good) continue;
    }
    return orbits;
  }
  throw domain_error(
      "singular_orbits: exhausted coordinate frames (quartic may not be squarefree)");
}

std::vector<SingularPoint> singular_points(const TernaryQuartic<Fp>& F) {
  std::vector<SingularPoint> pts;
  const Int p(Fp::modulus());
  for (const SingularOrbit& o : singular_orbits(F)) {
    std::array<FpExt, 3> cur = o.representative;
    for (int t = 0; t < o.degree; ++t) {
      pts.push_back(SingularPoint{cur, o.multiplicity});
      if (t + 1 < o.degree)
        for (FpExt& c : cur) c = c.pow(p);
    }
  }
  return pts;
}

// --- Milnor numbers ---------------------------------------------------------------

template <class K>
std::optional<int> milnor_number(const BiPoly<K>& local) {
  if (!field_ops<K>::is_zero(safe_at(local, 0, 0)))
    throw domain_error("milnor_number: origin is not on the curve");
  const BiPoly<K> gu = local.derivative(0);
  const BiPoly<K> gv = local.derivative(1);
  if (!field_ops<K>::is_zero(safe_at(gu, 0, 0)) ||
      !field_ops<K>::is_zero(safe_at(gv, 0, 0)))
    throw domain_error("milnor_number: the origin is a smooth point");
  if (gu.is_zero() && gv.is_zero())
    throw domain_error("milnor_number: zero polynomial");
  // mu_N = dim K[u,v] / (Jacobian ideal + m^N), nondecreasing in N and equal
  // to the Milnor number once stabilized; three consecutive equal values are
  // accepted, a climb past the quartic-germ bound means non-isolated.
  int prev1 = -1, prev2 = -2;
  for (int N = 3; N <= 12; ++N) {
    const int T = N * (N + 1) / 2;
    auto col = [N](int a, int b) { return a * N - a * (a - 1) / 2 + b; };
    Mat<K> m(2 * T, T);
    int row = 0;
    for (int a = 0; a < N; ++a)
      for (int b = 0; a + b < N; ++b) {
        gu.for_each([&](int i, int j, const K& v) {
          if (a + i + b + j < N) {
            K& cell = m.at(row, col(a + i, b + j));
            cell = cell + v;
          }
        });
        ++row;
        gv.for_each([&](int i, int j, const K& v) {
          if (a + i + b + j < N) {
            K& cell = m.at(row, col(a + i, b + j));
            cell = cell + v;
          }
        });
        ++row;
      }
    const int mu = T - rref(m);
    if (mu == prev1 && mu == prev2) return mu;
    prev2 = prev1;
    prev1 = mu;
  }
  return std::nullopt;
}

template std::optional<int> milnor_number<Rat>(const BiPoly<Rat>&);
template std::optional<int> milnor_number<Fp>(const BiPoly<Fp>&);
template std::optional<int> milnor_number<FpExt>(const BiPoly<FpExt>&);

// --- A/D/E/X classification --------------------------------------------------------

template <class K>
ADELabel ade_classify(const BiPoly<K>& local) {
  const std::optional<int> mu_opt = milnor_number(local);
  if (!mu_opt)
    throw domain_error("ade_classify: the singularity is not isolated");
  const int mu = *mu_opt;
  const K q20 = safe_at(local, 2, 0), q11 = safe_at(local, 1, 1), q02 = safe_at(local, 0, 2);
  const bool q_zero = field_ops<K>::is_zero(q20) && field_ops<K>::is_zero(q11) &&
                      field_ops<K>::is_zero(q02);
  if (!q_zero) {
    const K disc2 = q11 * q11 - times_long<K>(q20 * q02, 4);
    if (!field_ops<K>::is_zero(disc2)) {
      if (mu != 1)
        throw domain_error("ade_classify: nondegenerate 2-jet with Milnor number != 1");
      return ADELabel{ADEFamily::A, 1};
    }
    if (mu < 2 || mu > 7)
      throw domain_error("ade_classify: corank-1 germ outside the A-series range");
    return ADELabel{ADEFamily::A, mu};
  }
  // Corank 2: decide by the cubic 3-jet.
  const K a = safe_at(local, 3, 0), b = safe_at(local, 2, 1), c = safe_at(local, 1, 2),
          d = safe_at(local, 0, 3);
  const bool cubic_zero = field_ops<K>::is_zero(a) && field_ops<K>::is_zero(b) &&
                          field_ops<K>::is_zero(c) && field_ops<K>::is_zero(d);
  if (cubic_zero) {
    if (mu == 9) return ADELabel{ADEFamily::X, 9};
    throw domain_error("ade_classify: vanishing 3-jet outside the X9 case");
  }
  const K disc3 = times_long<K>(a * b * c * d, 18) - times_long<K>(b * b * b * d, 4) +
                  b * b * c * c - times_long<K>(a * c * c * c, 4) -
                  times_long<K>(a * a * d * d, 27);
  if (!field_ops<K>::is_zero(disc3)) {
    if (mu != 4)
      throw domain_error("ade_classify: squarefree 3-jet with Milnor number != 4");
    return ADELabel{ADEFamily::D, 4};
  }
  // Repeated factor: Hessian of the cubic separates double line (D) from
  // triple line (E).
  const K h2 = times_long<K>(a * c, 12) - times_long<K>(b * b, 4);
  const K h1 = times_long<K>(a * d, 36) - times_long<K>(b * c, 4);
  const K h0 = times_long<K>(b * d, 12) - times_long<K>(c * c, 4);
  const bool hess_zero = field_ops<K>::is_zero(h2) && field_ops<K>::is_zero(h1) &&
                         field_ops<K>::is_zero(h0);
  if (!hess_zero) {
    if (mu != 5 && mu != 6)
      throw domain_error("ade_classify: D-type germ outside the D5/D6 range");
    return ADELabel{ADEFamily::D, mu};
  }
  if (mu != 6 && mu != 7)
    throw domain_error("ade_classify: E-type germ outside the E6/E7 range");
  return ADELabel{ADEFamily::E, mu};
}

template ADELabel ade_classify<Rat>(const BiPoly<Rat>&);
template ADELabel ade_classify<Fp>(const BiPoly<Fp>&);
template ADELabel ade_classify<FpExt>(const BiPoly<FpExt>&);

// --- non-reduced shapes ---------------------------------------------------------

namespace {

// Exact test that monic-in-x D divides f (long division in x over F_p[y]).
bool bi_divides(const BiPoly<Fp>& D, const BiPoly<Fp>& f) {
  if (f.is_zero()) return true;
  const int d = degree_x(D);
  const int dxf = degree_x(f);
  if (dxf < d) return false;
  auto cols = [](const BiPoly<Fp>& g, int upto) {
    std::vector<UniPoly<Fp>> v(static_cast<size_t>(upto) + 1);
    for (int i = 0; i <= upto; ++i) {
      std::vector<Fp> c(static_cast<size_t>(g.max_degree()) + 1, Fp());
      g.for_each([&](int gi, int gj, const Fp& val) {
        if (gi == i) c[static_cast<size_t>(gj)] = val;
      });
      v[static_cast<size_t>(i)] = UniPoly<Fp>(std::move(c));
    }
    return v;
  };
  std::vector<UniPoly<Fp>> Fv = cols(f, dxf), Dv = cols(D, d);
  for (int e = dxf; e >= d; --e) {
    UniPoly<Fp> c = Fv[static_cast<size_t>(e)];
    if (c.is_zero()) continue;
    for (int i = 0; i <= d; ++i)
      Fv[static_cast<size_t>(e - d + i)] =
          Fv[static_cast<size_t>(e - d + i)] - c * Dv[static_cast<size_t>(i)];
  }
  for (int i = 0; i < d; ++i)
    if (!Fv[static_cast<size_t>(i)].is_zero()) return false;
  return true;
}

// Monic-in-x gcd of several chart polynomials, by specializing y and
// interpolating; requires the first entry to have a constant nonzero leading
// x-coefficient.  Exactness is certified by trial division.  Returns nullopt
// when this coordinate frame fails.
std::optional<BiPoly<Fp>> interpolated_gcd_x(const std::vector<BiPoly<Fp>>& fs,
                                             std::mt19937_64& rng) {
  EvalField ef(24, rng);
  std::vector<BiPoly<FpExt>> lifted;
  lifted.reserve(fs.size());
  for (const auto& f : fs) lifted.push_back(lift_bipoly(ef.ctx(), f));
  struct Node {
    FpExt y0;
    UniPoly<FpExt> g;
  };
  std::vector<Node> nodes;
  int dmin = 1 << 20;
  for (uint64_t t = 0; t < 24; ++t) {
    const FpExt y0 = ef.node(t);
    UniPoly<FpExt> g;
    for (const auto& fE : lifted) {
      UniPoly<FpExt> u = substitute_y(fE, y0);
      if (u.is_zero()) continue;
      g = g.is_zero() ? u.monic() : UniPoly<FpExt>::gcd(g, u);
    }
    if (g.is_zero()) return std::nullopt;  // all inputs vanished on the fiber
    nodes.push_back(Node{y0, g});
    dmin = std::min(dmin, g.degree());
  }
  if (dmin == 0) {  // trivial gcd: the inputs are coprime
    BiPoly<Fp> one(0);
    one.at(0, 0) = Fp(1);
    return one;
  }
  std::vector<Node> good;
  for (auto& n : nodes)
    if (n.g.degree() == dmin) good.push_back(n);
  if (good.size() < 6) return std::nullopt;
  BiPoly<Fp> D(4);
  if (dmin > 4) return std::nullopt;
  D.at(dmin, 0) = Fp(1);
  for (int i = 0; i < dmin; ++i) {
    std::vector<FpExt> xs, ys;
    for (const auto& n : good) {
      xs.push_back(n.y0);
      ys.push_back(n.g.coeff(i));
    }
    const UniPoly<FpExt> ci = lagrange_interpolate(xs, ys);
    if (ci.degree() > 4 - i) return std::nullopt;
    for (int j = 0; j <= ci.degree(); ++j) {
      auto proj = ext_to_base(ci.coeff(j));
      if (!proj) return std::nullopt;
      if (i + j > 4) return std::nullopt;
      D.at(i, j) = *proj;
    }
  }
  for (const auto& f : fs)
    if (!bi_divides(D, f)) return std::nullopt;
  return D;
}

std::optional<NonIsolatedShape> classify_from_repeated_part(const TriForm<Fp>& G,
                                                            const BiPoly<Fp>& D) {
  const int d = degree_x(D);
  if (D.degree() != d) return std::nullopt;  // repeated part meets z = 0 badly
  const TriForm<Fp> W = homogenize(D, d);
  if (d == 1) {
    // G = W^2 * C with C a conic not divisible by W.
    auto C = form_quotient(G, form_mul(W, W));
    if (!C) return std::nullopt;
    const int r = gram_rank(*C);
    if (r == 3) return NonIsolatedShape::L2C;
    if (r == 2) return NonIsolatedShape::LLL2;
    return std::nullopt;
  }
  if (d == 2) {
    if (proportional(G, form_mul(W, W))) {
      const int r = gram_rank(W);
      if (r == 3) return NonIsolatedShape::C2;
      if (r == 2) return NonIsolatedShape::L2L2;
      return std::nullopt;
    }
    // Remaining option: W = L^2 and G = L^3 * M.
    if (gram_rank(W) != 1) return std::nullopt;
    auto L = line_from_rank1(W);
    if (!L) return std::nullopt;
    auto M = form_quotient(G, form_mul(form_mul(*L, *L), *L));
    if (!M) return std::nullopt;
    return NonIsolatedShape::LL3;
  }
  if (d == 3) {
    // W = L^3 and G = lambda * L^4.
    const Fp third = field_ops<Fp>::inv(Fp::of_long(3));
    BiPoly<Fp> L(1);
    L.at(1, 0) = Fp(1);
    L.at(0, 1) = safe_at(D, 2, 1) * third;
    L.at(0, 0) = safe_at(D, 2, 0) * third;
    if (!(L * L * L - D).is_zero()) return std::nullopt;
    const TriForm<Fp> Lf = homogenize(L, 1);
    if (proportional(G, form_mul(form_mul(Lf, Lf), form_mul(Lf, Lf))))
      return NonIsolatedShape::L4;
    return std::nullopt;
  }
  return std::nullopt;
}

// Non-reduced shape of a quartic, or nullopt when squarefree.
std::optional<NonIsolatedShape> nonreduced_shape(const TernaryQuartic<Fp>& F,
                                                 std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 24; ++attempt) {
    const LinearSubstitution<Fp> A =
        attempt == 0 ? LinearSubstitution<Fp>::identity() : random_sl3(rng);
    const TernaryQuartic<Fp> G = act(A, F);
    const TriForm<Fp>& T = G.form();
    if (T.at(4, 0) == Fp()) continue;  // need a constant leading x-coefficient
    const BiPoly<Fp> g = chart_z(T);
    std::vector<BiPoly<Fp>> fs = {g, g.derivative(0), g.derivative(1),
                                  chart_z(T.derivative(2))};
    fs.erase(std::remove_if(fs.begin(), fs.end(),
                            [](const BiPoly<Fp>& f) { return f.is_zero(); }),
             fs.end());
    auto D = interpolated_gcd_x(fs, rng);
    if (!D) continue;
    if (degree_x(*D) == 0) return std::nullopt;  // squarefree
    auto shape = classify_from_repeated_part(T, *D);
    if (shape) return shape;
  }
  throw domain_error("nonreduced_shape: exhausted coordinate frames");
}

// --- reducibility over the algebraic closure ------------------------------------

// Restriction system: G(x, y, u x + v y) = sum_i E_i(u, v) x^(4-i) y^i.
std::array<BiPoly<Fp>, 5> line_restriction(const TriForm<Fp>& G) {
  std::array<BiPoly<Fp>, 5> E;
  for (auto& e : E) e = BiPoly<Fp>(4);
  G.for_each([&](int a, int b, int m, const Fp& val) {
    long binom = 1;
    for (int t = 0; t <= m; ++t) {
      const int ey = b + m - t;
      Fp& cell = E[static_cast<size_t>(ey)].at(t, m - t);
      cell = cell + times_long(val, binom);
      binom = binom * (m - t) / (t + 1);
    }
  });
  return E;
}

enum class Probe { Found, NotFound, Degenerate };

// Does some line divide G?  Looks for factors z = u x + v y; lines missing
// that shape are handled by the surrounding random coordinate loop.
Probe probe_line_factor(const TriForm<Fp>& G, std::mt19937_64& rng) {
  const auto E = line_restriction(G);
  std::vector<Fp> e0c(5, Fp());
  for (int t = 0; t <= 4; ++t) e0c[static_cast<size_t>(t)] = safe_at(E[0], t, 0);
  const UniPoly<Fp> f0{std::vector<Fp>(e0c)};
  if (f0.is_zero()) return Probe::Found;  // y divides G
  if (f0.degree() < 1) return Probe::NotFound;
  bool suspicious = false;
  const UniPoly<Fp> S = squarefree_part(f0);
  for (const UniPoly<Fp>& q : factor_squarefree(S, rng)) {
    ExtCtxPtr ctx = ext_ctx_from_irreducible(q);
    const FpExt u0 = FpExt::gen(ctx);
    UniPoly<FpExt> h;
    bool all_zero = true;
    for (int i = 1; i <= 4; ++i) {
      UniPoly<FpExt> s = substitute_x(lift_bipoly(ctx, E[static_cast<size_t>(i)]), u0);
      if (s.is_zero()) continue;
      all_zero = false;
      h = h.is_zero() ? s.monic() : UniPoly<FpExt>::gcd(h, s);
    }
    if (all_zero) throw std::logic_error("probe_line_factor: restriction collapsed");
    if (h.degree() < 1) continue;
    const auto roots = roots_in_field(h, rng);
    if (roots.empty()) {
      suspicious = true;  // candidate root lives in a larger field
      continue;
    }
    for (const FpExt& v0 : roots) {
      bool ok = true;
      for (int i = 0; i <= 4 && ok; ++i) {
        const BiPoly<FpExt> Ei = lift_bipoly(ctx, E[static_cast<size_t>(i)]);
        if (!Ei.evaluate(u0, v0).is_zero()) ok = false;
      }
      if (ok) return Probe::Found;
    }
  }
  return suspicious ? Probe::Degenerate : Probe::NotFound;
}

// Binary forms with coefficients in a ring R, indexed by x-exponent.
template <class R>
std::vector<R> bv_mul(const std::vector<R>& A, const std::vector<R>& B) {
  std::vector<R> r(A.size() + B.size() - 1, R());
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < B.size(); ++j) r[i + j] = r[i + j] + A[i] * B[j];
  return r;
}

template <class R>
std::vector<R> bv_sub(const std::vector<R>& A, const std::vector<R>& B) {
  std::vector<R> r(std::max(A.size(), B.size()), R());
  for (size_t i = 0; i < r.size(); ++i) {
    R a = i < A.size() ? A[i] : R();
    R b = i < B.size() ? B[i] : R();
    r[i] = a - b;
  }
  return r;
}

// Quotient of a binary form by a nonzero linear form W = W[1] x + W[0] y;
// nullopt when the division is inexact.
std::optional<std::vector<FpExt>> bv_div_linear(const std::vector<FpExt>& N,
                                                const std::vector<FpExt>& W) {
  std::vector<FpExt> q(N.size() - 1, FpExt());
  if (!W[1].is_zero()) {
    std::vector<FpExt> rem = N;
    const FpExt inv = W[1].inverse();
    for (int i = static_cast<int>(N.size()) - 1; i >= 1; --i) {
      const FpExt c = rem[static_cast<size_t>(i)] * inv;
      q[static_cast<size_t>(i - 1)] = c;
      rem[static_cast<size_t>(i)] = FpExt();
      rem[static_cast<size_t>(i - 1)] = rem[static_cast<size_t>(i - 1)] - c * W[0];
    }
    if (!rem[0].is_zero()) return std::nullopt;
    return q;
  }
  if (W[0].is_zero()) return std::nullopt;
  if (!N.back().is_zero()) return std::nullopt;
  const FpExt inv = W[0].inverse();
  for (size_t i = 0; i + 1 < N.size(); ++i) q[i] = N[i] * inv;
  return q;
}

bool bv_equal(const std::vector<FpExt>& A, const std::vector<FpExt>& B) {
  for (size_t i = 0; i < std::max(A.size(), B.size()); ++i) {
    const FpExt a = i < A.size() ? A[i] : FpExt();
    const FpExt b = i < B.size() ? B[i] : FpExt();
    if (a != b) return false;
  }
  return true;
}

// Does G factor as a product of two conics z^2 + L_i z + q_i (after
// normalizing the z^4 coefficient)?  Assumes no line factor of the shape
// z = u x + v y (the line probe runs first).
Probe probe_conic_pair(const TriForm<Fp>& G, std::mt19937_64& rng) {
  if (G.at(0, 0) == Fp()) return Probe::Degenerate;  // need monic z^4
  const Fp s = field_ops<Fp>::inv(G.at(0, 0));
  // Binary coefficient forms of s*G = z^4 + c3 z^3 + c2 z^2 + c1 z + c0.
  auto cform = [&](int zdeg) {
    std::vector<BiPoly<Fp>> v(static_cast<size_t>(4 - zdeg) + 1);
    for (int i = 0; i <= 4 - zdeg; ++i)
      v[static_cast<size_t>(i)] = BiPoly<Fp>::constant(s * G.at(i, 4 - zdeg - i));
    return v;
  };
  const auto c3 = cform(3), c2 = cform(2), c1 = cform(1), c0 = cform(0);
  // Unknown L1 = u1 x + u2 y as polynomials in (u1, u2).
  BiPoly<Fp> u1(1), u2(1);
  u1.at(1, 0) = Fp(1);
  u2.at(0, 1) = Fp(1);
  const std::vector<BiPoly<Fp>> L1 = {u2, u1};
  const std::vector<BiPoly<Fp>> L2 = bv_sub(c3, L1);
  const std::vector<BiPoly<Fp>> W = bv_sub(L2, L1);
  const std::vector<BiPoly<Fp>> P = bv_mul(L1, L2);
  const std::vector<BiPoly<Fp>> c2mP = bv_sub(c2, P);
  const std::vector<BiPoly<Fp>> N = bv_sub(c1, bv_mul(L1, c2mP));
  // rho: remainder of N modulo the linear form W, evaluated at W's zero
  // direction (W[0], -W[1]).
  BiPoly<Fp> rho(0);
  {
    // powers of W[0] and -W[1]
    std::vector<BiPoly<Fp>> p0(4), p1(4);
    p0[0] = BiPoly<Fp>::constant(Fp(1));
    p1[0] = BiPoly<Fp>::constant(Fp(1));
    const BiPoly<Fp> negW1 = Fp(Fp::modulus() - 1) * W[1];
    for (int t = 1; t <= 3; ++t) {
      p0[static_cast<size_t>(t)] = p0[static_cast<size_t>(t - 1)] * W[0];
      p1[static_cast<size_t>(t)] = p1[static_cast<size_t>(t - 1)] * negW1;
    }
    for (int i = 0; i <= 3; ++i)
      rho = rho + N[static_cast<size_t>(i)] * p0[static_cast<size_t>(i)] *
                      p1[static_cast<size_t>(3 - i)];
  }
  // sigma: N * (W * (c2 - P) - N) - c0 * W^2 must vanish identically.
  const std::vector<BiPoly<Fp>> sigma =
      bv_sub(bv_mul(N, bv_sub(bv_mul(W, c2mP), N)), bv_mul(c0, bv_mul(W, W)));
  if (rho.is_zero()) return Probe::Degenerate;
  std::vector<UniPoly<Fp>> res;
  for (const auto& sj : sigma) {
    if (sj.is_zero()) continue;
    UniPoly<Fp> r = resultant_eliminate_y(rho, sj, rng);
    if (!r.is_zero()) res.push_back(r.monic());
  }
  if (res.empty()) return Probe::Degenerate;
  UniPoly<Fp> Gres = res[0];
  for (size_t i = 1; i < res.size(); ++i) Gres = UniPoly<Fp>::gcd(Gres, res[i]);
  if (Gres.degree() == 0) return Probe::NotFound;
  bool suspicious = false;
  const UniPoly<Fp> S = squarefree_part(Gres);
  for (const UniPoly<Fp>& q : factor_squarefree(S, rng)) {
    // Coefficients of a conic-pair factorization generate a field of degree
    // at most 6 over F_p; larger factors are spurious.
    if (q.degree() > 6) continue;
    ExtCtxPtr ctx = ext_ctx_from_irreducible(q);
    const FpExt u10 = FpExt::gen(ctx);
    UniPoly<FpExt> h;
    {
      UniPoly<FpExt> r0 = substitute_x(lift_bipoly(ctx, rho), u10);
      if (!r0.is_zero()) h = r0.monic();
      for (const auto& sj : sigma) {
        if (sj.is_zero()) continue;
        UniPoly<FpExt> sp = substitute_x(lift_bipoly(ctx, sj), u10);
        if (sp.is_zero()) continue;
        h = h.is_zero() ? sp.monic() : UniPoly<FpExt>::gcd(h, sp);
      }
    }
    if (h.degree() < 1) continue;
    const auto roots = roots_in_field(h, rng);
    if (roots.empty()) {
      suspicious = true;
      continue;
    }
    // Numeric verification of each candidate (u1, u2).
    auto lift_c = [&](const std::vector<BiPoly<Fp>>& cf) {
      std::vector<FpExt> v(cf.size());
      for (size_t i = 0; i < cf.size(); ++i)
        v[i] = FpExt::embed(ctx, safe_at(cf[i], 0, 0));
      return v;
    };
    const auto c3n = lift_c(c3), c2n = lift_c(c2), c1n = lift_c(c1), c0n = lift_c(c0);
    for (const FpExt& u20 : roots) {
      const std::vector<FpExt> L1n = {u20, u10};
      const std::vector<FpExt> L2n = bv_sub(c3n, L1n);
      const std::vector<FpExt> Wn = bv_sub(L2n, L1n);
      if (Wn[0].is_zero() && Wn[1].is_zero()) {
        suspicious = true;  // equal linear parts: undetectable in this frame
        continue;
      }
      const std::vector<FpExt> Pn = bv_mul(L1n, L2n);
      const std::vector<FpExt> c2mPn = bv_sub(c2n, Pn);
      const std::vector<FpExt> Nn = bv_sub(c1n, bv_mul(L1n, c2mPn));
      auto q1 = bv_div_linear(Nn, Wn);
      if (!q1) continue;
      const std::vector<FpExt> q2 = bv_sub(c2mPn, *q1);
      if (bv_equal(bv_mul(*q1, q2), c0n)) return Probe::Found;
    }
  }
  return suspicious ? Probe::Degenerate : Probe::NotFound;
}

// Reducibility over the algebraic closure, for squarefree singular quartics.
// A found factor is exact; a "no" requires three coordinate frames to agree.
bool quartic_reducible(const TernaryQuartic<Fp>& F, std::mt19937_64& rng) {
  int misses = 0;
  for (int attempt = 0; attempt < 24; ++attempt) {
    const LinearSubstitution<Fp> A = random_sl3(rng);
    const TriForm<Fp> T = act(A, F).form();
    const Probe line = probe_line_factor(T, rng);
    if (line == Probe::Found) return true;
    if (line == Probe::Degenerate) continue;
    const Probe conic = probe_conic_pair(T, rng);
    if (conic == Probe::Found) return true;
    if (conic == Probe::Degenerate) continue;
    if (++misses >= 3) return false;
  }
  throw domain_error("quartic_reducible: exhausted coordinate frames");
}

bool all_nodes_and_cusps(const std::vector<ADELabel>& pts) {
  for (const ADELabel& l : pts)
    if (!(l.family == ADEFamily::A && l.index <= 2)) return false;
  return true;
}

}  // namespace

// --- full classification -------------------------------------------------------

SingularityType quartic_singularity_type(const TernaryQuartic<Fp>& F) {
  const uint64_t p = Fp::modulus();
  if (p <= 7)
    throw domain_error("quartic_singularity_type: characteristic must exceed 7");
  if (F.is_zero()) throw domain_error("quartic_singularity_type: zero quartic");
  const std::array<Fp, 13> inv = dixmier_ohno(F);
  bool allzero = true;
  for (const Fp& v : inv)
    if (v != Fp()) allzero = false;
  std::mt19937_64 rng(0xC1A551F1EDULL);
  SingularityType out;
  const auto shape = nonreduced_shape(F, rng);
  if (shape) {
    out.reducible = true;
    out.non_isolated = shape;
    out.git_status = allzero ? GitStatus::Unstable : GitStatus::Semistable;
    return out;
  }
  const auto orbits = singular_orbits(F);
  if (orbits.empty()) {
    if (allzero)
      throw std::logic_error(
          "quartic_singularity_type: smooth quartic with vanishing invariants");
    out.git_status = GitStatus::Stable;
    return out;
  }
  for (const SingularOrbit& o : orbits) {
    const ADELabel l = ade_classify(o.local);
    for (int t = 0; t < o.degree; ++t) out.points.push_back(l);
  }
  std::sort(out.points.begin(), out.points.end());
  out.reducible = quartic_reducible(F, rng);
  const bool tame = all_nodes_and_cusps(out.points);
  if (allzero && tame)
    throw std::logic_error(
        "quartic_singularity_type: invariants vanish on a nodal/cuspidal quartic");
  out.git_status = allzero ? GitStatus::Unstable
                           : (tame ? GitStatus::Stable : GitStatus::Semistable);
  return out;
}

namespace {

// Scale a rational quartic to a primitive integral model (same projective
// curve, safe to reduce modulo any prime not dividing the content).
TernaryQuartic<Rat> primitive_model(const TernaryQuartic<Rat>& F) {
  Int den(1);
  F.form().for_each([&](int, int, int, const Rat& v) { den = lcm(den, v.get_den()); });
  Int cont(0);
  F.form().for_each([&](int, int, int, const Rat& v) {
    const Rat scaled = Rat(den) * v;
    cont = gcd(cont, Int(scaled.get_num()));
  });
  if (cont == 0) throw domain_error("quartic_singularity_type: zero quartic");
  const Rat s = Rat(den) / Rat(cont);
  return TernaryQuartic<Rat>(s * F.form());
}

}  // namespace

SingularityType quartic_singularity_type(const TernaryQuartic<Rat>& F) {
  if (F.is_zero()) throw domain_error("quartic_singularity_type: zero quartic");
  const TernaryQuartic<Rat> Fi = primitive_model(F);
  const std::array<Rat, 13> inv = dixmier_ohno(Fi);
  bool allzero = true;
  for (const Rat& v : inv)
    if (v != 0) allzero = false;
  const std::array<uint64_t, 3> primes = {kWorkPrime1, kWorkPrime2, kWorkPrime3};
  std::vector<SingularityType> per;
  for (uint64_t p : primes) {
    Fp::ScopedModulus guard(p);
    per.push_back(quartic_singularity_type(to_fp(Fi)));
  }
  // The per-prime GIT flag may differ at a bad prime; agreement is required
  // on the geometric data, and the final GIT status comes from Q.
  const bool agree = (per[0].points == per[1].points && per[1].points == per[2].points &&
                      per[0].reducible == per[1].reducible &&
                      per[1].reducible == per[2].reducible &&
                      per[0].non_isolated == per[1].non_isolated &&
                      per[1].non_isolated == per[2].non_isolated);
  if (!agree) {
    std::vector<std::string> answers;
    for (size_t i = 0; i < per.size(); ++i)
      answers.push_back("p=" + std::to_string(primes[i]) + ": " + to_string(per[i]));
    throw indeterminate_error(
        "quartic_singularity_type: work primes disagree on the singularity type",
        answers);
  }
  SingularityType out = per[0];
  const bool tame = !out.non_isolated && all_nodes_and_cusps(out.points) &&
                    !out.points.empty();
  if (out.points.empty() && !out.non_isolated) {
    // Smooth over every work prime: smooth over Q (the invariants agree).
    out.git_status = GitStatus::Stable;
    if (allzero)
      throw std::logic_error(
          "quartic_singularity_type: smooth quartic with vanishing invariants");
    return out;
  }
  out.git_status = allzero ? GitStatus::Unstable
                           : (tame ? GitStatus::Stable : GitStatus::Semistable);
  return out;
}

}  // namespace qinv
