// qinv — exact invariants and reduction types of plane quartics.
//
// strata.cpp: reconstruction of stratum ideals by evaluation-interpolation.
// The computation never holds a full sample matrix: evaluation rows stream
// through an incremental reduced-echelon structure whose rank stays small,
// and all stratum-side work happens in the quotient by the relations that
// hold on every quartic (so the reconstructed generators are automatically
// reduced against those relations and against lower-degree generators).

#include "qinv/strata/strata.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "qinv/huicatalog/huicatalog.hpp"
#include "qinv/invariants/anchors.hpp"

namespace qinv {
namespace {

// --- deterministic RNG (same scheme as the catalog sampler) --------------------

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t lim = ~0ull - ~0ull % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= lim);
    return v % n;
  }
};

std::uint64_t fnv1a(const char* s) {
  std::uint64_t h = 1469598103934665603ull;
  for (; *s; ++s) {
    h ^= static_cast<unsigned char>(*s);
    h *= 1099511628211ull;
  }
  return h;
}

// --- monomial helpers -----------------------------------------------------------

void enumerate_monomials(int var, int rem, InvariantMonomial& cur,
                         std::vector<InvariantMonomial>& out) {
  if (var == 13) {
    if (rem == 0) out.push_back(cur);
    return;
  }
  const int w = kDOWeights[var];
  for (int e = rem / w; e >= 0; --e) {
    cur.e[var] = static_cast<std::uint8_t>(e);
    enumerate_monomials(var + 1, rem - e * w, cur, out);
  }
  cur.e[var] = 0;
}

InvariantMonomial mono_product(const InvariantMonomial& a, const InvariantMonomial& b) {
  InvariantMonomial r;
  for (int i = 0; i < 13; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
  return r;
}

int column_of(const std::vector<InvariantMonomial>& monos, const InvariantMonomial& m) {
  const auto it = std::lower_bound(monos.begin(), monos.end(), m);
  if (it == monos.end() || !(*it == m))
    throw domain_error("strata: monomial lookup failed");
  return static_cast<int>(it - monos.begin());
}

// --- incremental reduced echelon over the active prime field --------------------

struct Echelon {
  int cols = 0;
  std::vector<std::vector<Fp>> rows;  // reduced echelon rows, pivots ascending
  std::vector<int> pivots;

  explicit Echelon(int c) : cols(c) {}
  int rank() const { return static_cast<int>(rows.size()); }

  // Reduce v in place against the current rows; returns the index of the
  // leading nonzero entry or -1 when v reduces to zero.
  int reduce(std::vector<Fp>& v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Fp c = v[static_cast<std::size_t>(pivots[i])];
      if (field_ops<Fp>::is_zero(c)) continue;
      const std::vector<Fp>& r = rows[i];
      for (int j = pivots[i]; j < cols; ++j) v[static_cast<std::size_t>(j)] =
          v[static_cast<std::size_t>(j)] - c * r[static_cast<std::size_t>(j)];
    }
    for (int j = 0; j < cols; ++j)
      if (!field_ops<Fp>::is_zero(v[static_cast<std::size_t>(j)])) return j;
    return -1;
  }

  // Insert a row, maintaining the reduced-echelon invariant (each row has 1
  // at its own pivot and 0 at every other pivot).  Returns the new pivot, or
  // -1 when the row was dependent.
  int insert(std::vector<Fp> v) {
    const int piv = reduce(v);
    if (piv < 0) return -1;
    const Fp ip = field_ops<Fp>::inv(v[static_cast<std::size_t>(piv)]);
    for (int j = piv; j < cols; ++j)
      v[static_cast<std::size_t>(j)] = ip * v[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Fp c = rows[i][static_cast<std::size_t>(piv)];
      if (field_ops<Fp>::is_zero(c)) continue;
      for (int j = piv; j < cols; ++j)
        rows[i][static_cast<std::size_t>(j)] =
            rows[i][static_cast<std::size_t>(j)] - c * v[static_cast<std::size_t>(j)];
    }
    const auto pos = std::upper_bound(pivots.begin(), pivots.end(), piv) - pivots.begin();
    rows.insert(rows.begin() + pos, std::move(v));
    pivots.insert(pivots.begin() + pos, piv);
    return piv;
  }

  // Coordinates of v over the echelon rows; false when v lies outside the
  // row space.
  bool coordinates(std::vector<Fp> v, std::vector<Fp>& coords) const {
    coords.assign(rows.size(), Fp());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Fp c = v[static_cast<std::size_t>(pivots[i])];
      coords[i] = c;
      if (field_ops<Fp>::is_zero(c)) continue;
      const std::vector<Fp>& r = rows[i];
      for (int j = pivots[i]; j < cols; ++j) v[static_cast<std::size_t>(j)] =
          v[static_cast<std::size_t>(j)] - c * r[static_cast<std::size_t>(j)];
    }
    for (const Fp& x : v)
      if (!field_ops<Fp>::is_zero(x)) return false;
    return true;
  }
};

// Canonical kernel basis of a reduced echelon (one vector per free column,
// ascending).
std::vector<std::vector<Fp>> kernel_vectors(const Echelon& E) {
  std::vector<int> prow(static_cast<std::size_t>(E.cols), -1);
  for (std::size_t i = 0; i < E.pivots.size(); ++i)
    prow[static_cast<std::size_t>(E.pivots[i])] = static_cast<int>(i);
  std::vector<std::vector<Fp>> ker;
  for (int j = 0; j < E.cols; ++j) {
    if (prow[static_cast<std::size_t>(j)] >= 0) continue;
    std::vector<Fp> v(static_cast<std::size_t>(E.cols), Fp());
    v[static_cast<std::size_t>(j)] = Fp::of_long(1);
    for (std::size_t i = 0; i < E.pivots.size(); ++i)
      v[static_cast<std::size_t>(E.pivots[i])] =
          Fp() - E.rows[i][static_cast<std::size_t>(j)];
    ker.push_back(std::move(v));
  }
  return ker;
}

// --- sample pools ----------------------------------------------------------------

using Tuple13 = std::array<Fp, 13>;

Tuple13 random_smooth_tuple(SplitMix& rng) {
  const std::uint64_t p = Fp::modulus();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Fp> c(TernaryQuartic<Fp>::kNumCoeffs);
    for (Fp& x : c) x = Fp::of_long(static_cast<long>(rng.below(p)));
    const auto F = TernaryQuartic<Fp>::from_coeffs(c);
    const auto I = dixmier_ohno(F);
    if (!field_ops<Fp>::is_zero(I[12])) return I;
  }
  throw domain_error("strata: failed to draw a generic smooth sample");
}

// Per-degree reduced basis of the evaluation functionals on generic smooth
// samples.  Forms in the kernel of these rows are exactly the degree-d
// relations holding on all quartics, so expressing everything in coordinates
// over these rows quotients those relations out.
struct SmoothBasis {
  std::vector<InvariantMonomial> monos;  // canonical order; columns
  std::vector<std::pair<int, int>> sparse_index;  // unused placeholder
  Echelon R{0};
  std::vector<InvariantMonomial> pivot_monos;
};

// All per-prime state for one reconstruction context.
struct PrimeWork {
  std::uint64_t prime = 0;
  SplitMix smooth_rng{0};
  std::vector<Tuple13> smooth;                      // shared generic pool
  std::map<std::string, std::vector<Tuple13>> strat;  // per catalog label
  std::uint64_t strat_seed = 0;
  std::map<int, SmoothBasis> bases;                 // per weighted degree

  void ensure_smooth(std::size_t n) {
    while (smooth.size() < n) smooth.push_back(random_smooth_tuple(smooth_rng));
  }
  void ensure_strat(const std::string& label, std::size_t n) {
    auto& pool = strat[label];
    while (pool.size() < n) {
      const auto F = sample_fp(label, strat_seed + pool.size());
      pool.push_back(dixmier_ohno(F));
    }
  }
};

struct WorkContext {
  PrimeWork pw[2];
  explicit WorkContext(std::uint64_t seed) {
    const std::uint64_t primes[2] = {kWorkPrime1, kWorkPrime2};
    for (int i = 0; i < 2; ++i) {
      pw[i].prime = primes[i];
      pw[i].smooth_rng.state = seed ^ fnv1a("strata-smooth-pool") ^ (primes[i] * 0x9E3779B97F4A7C15ull);
      pw[i].strat_seed = seed ^ fnv1a("strata-stratum-pool");
    }
  }
};

// Evaluation row of all degree-d monomials at one invariant tuple.
std::vector<Fp> evaluation_row(const std::vector<InvariantMonomial>& monos,
                               const Tuple13& t) {
  // Power tables up to the maximal exponent per variable.
  std::array<std::vector<Fp>, 13> pows;
  std::array<int, 13> emax{};
  for (const auto& m : monos)
    for (int i = 0; i < 13; ++i) emax[i] = std::max(emax[i], static_cast<int>(m.e[i]));
  for (int i = 0; i < 13; ++i) {
    pows[i].resize(static_cast<std::size_t>(emax[i]) + 1);
    pows[i][0] = Fp::of_long(1);
    for (int e = 1; e <= emax[i]; ++e) pows[i][static_cast<std::size_t>(e)] =
        pows[i][static_cast<std::size_t>(e - 1)] * t[i];
  }
  std::vector<Fp> row(monos.size());
  for (std::size_t k = 0; k < monos.size(); ++k) {
    Fp v = Fp::of_long(1);
    for (int i = 0; i < 13; ++i)
      if (monos[k].e[i] != 0) v = v * pows[i][monos[k].e[i]];
    row[k] = v;
  }
  return row;
}

// Class vector (coordinates over the smooth basis rows) of a polynomial
// given as sparse (column, coefficient) terms.
std::vector<Fp> class_of_terms(const SmoothBasis& B,
                               const std::vector<std::pair<int, Fp>>& terms) {
  std::vector<Fp> y(static_cast<std::size_t>(B.R.rank()), Fp());
  for (const auto& [col, c] : terms)
    for (std::size_t i = 0; i < y.size(); ++i)
      y[i] = y[i] + c * B.R.rows[i][static_cast<std::size_t>(col)];
  return y;
}

// Output of one per-prime degree pass.
struct DegreeOut {
  std::vector<InvariantMonomial> basis_monos;     // smooth pivot monomials
  std::vector<std::vector<Fp>> new_classes;       // canonical new generator classes
  std::vector<int> new_pivots;                    // pivot coordinate per class
  int monomials = 0, generic_rank = 0, stratum_rank = 0, old_rank = 0;
};

DegreeOut degree_pass(PrimeWork& pw, const std::string& rep_label,
                      const std::vector<StratumGenerator>& old_gens, int d,
                      int sample_count) {
  Fp::ScopedModulus guard(pw.prime);
  DegreeOut out;
  const std::vector<InvariantMonomial> monos = invariant_monomials(d);
  const int C = static_cast<int>(monos.size());
  out.monomials = C;

  // Smooth-side reduced basis (cached per degree).
  SmoothBasis& B = pw.bases.try_emplace(d).first->second;
  if (B.monos.empty()) {
    B.monos = monos;
    B.R = Echelon(C);
    const std::size_t n_s =
        sample_count > 0 ? static_cast<std::size_t>(sample_count)
                         : 3 * static_cast<std::size_t>(C) + 8;
    pw.ensure_smooth(n_s);
    for (std::size_t k = 0; k < n_s; ++k) B.R.insert(evaluation_row(monos, pw.smooth[k]));
    B.pivot_monos.clear();
    for (int piv : B.R.pivots) B.pivot_monos.push_back(monos[static_cast<std::size_t>(piv)]);
  }
  const int r_s = B.R.rank();
  out.generic_rank = r_s;
  out.basis_monos = B.pivot_monos;

  // Stratum rows, expressed as coordinates over the smooth basis.  Every
  // relation that holds on all quartics holds on the stratum, so the rows
  // must land inside the smooth row space.
  const std::size_t n_a = sample_count > 0
                              ? static_cast<std::size_t>(sample_count)
                              : 3 * static_cast<std::size_t>(r_s) + 16;
  pw.ensure_strat(rep_label, n_a);
  Echelon Ca(r_s);
  std::vector<Fp> coords;
  for (std::size_t k = 0; k < n_a; ++k) {
    if (!B.R.coordinates(evaluation_row(monos, pw.strat.at(rep_label)[k]), coords))
      throw domain_error("strata: smooth sample space not saturated at degree " +
                         std::to_string(d));
    Ca.insert(coords);
  }
  out.stratum_rank = Ca.rank();

  // Degree-d span of the generators already found (their classes vanish on
  // the stratum, so they sit inside the kernel computed below).
  Echelon BO(r_s);
  for (const StratumGenerator& g : old_gens) {
    if (g.degree >= d) continue;
    for (const InvariantMonomial& m : invariant_monomials(d - g.degree)) {
      std::vector<std::pair<int, Fp>> terms;
      terms.reserve(g.terms.size());
      for (const GeneratorTerm& t : g.terms)
        terms.emplace_back(column_of(monos, mono_product(m, t.mono)),
                           Fp::of_rat(t.coeff));
      BO.insert(class_of_terms(B, terms));
    }
  }
  out.old_rank = BO.rank();

  // New generator classes: kernel of the stratum evaluation modulo the old
  // span, reduced echelon form for a canonical choice.
  Echelon EA = BO;
  for (auto& v : kernel_vectors(Ca)) EA.insert(std::move(v));
  for (std::size_t i = 0; i < EA.rows.size(); ++i) {
    const int piv = EA.pivots[i];
    if (std::binary_search(BO.pivots.begin(), BO.pivots.end(), piv)) continue;
    out.new_classes.push_back(EA.rows[i]);
    out.new_pivots.push_back(piv);
  }
  return out;
}

// Lift matched per-prime classes to a rational generator in canonical
// primitive-integer form.
StratumGenerator lift_generator(const DegreeOut& o1, const DegreeOut& o2,
                                std::size_t idx, int degree,
                                std::uint64_t p1, std::uint64_t p2) {
  const Int m1(static_cast<unsigned long>(p1)), m2(static_cast<unsigned long>(p2));
  const Int M = m1 * m2;
  std::vector<Rat> coeffs(o1.new_classes[idx].size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const Int r1(static_cast<unsigned long>(o1.new_classes[idx][j].value()));
    const Int r2(static_cast<unsigned long>(o2.new_classes[idx][j].value()));
    const auto lifted = rational_reconstruct(crt_pair(r1, m1, r2, m2), M);
    if (!lifted)
      throw domain_error("strata: rational reconstruction failed at degree " +
                         std::to_string(degree));
    coeffs[j] = *lifted;
  }
  // Primitive integer scaling: clear denominators, divide by the content.
  Int L(1);
  for (const Rat& c : coeffs)
    if (c != 0) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den().get_mpz_t());
  Int G(0);
  std::vector<Int> ints(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    Rat scaled = coeffs[j] * Rat(L);
    scaled.canonicalize();
    ints[j] = scaled.get_num();
    mpz_gcd(G.get_mpz_t(), G.get_mpz_t(), ints[j].get_mpz_t());
  }
  StratumGenerator g;
  g.degree = degree;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (ints[j] == 0) continue;
    Rat c(ints[j] / G);
    c.canonicalize();
    g.terms.push_back(GeneratorTerm{c, o1.basis_monos[j]});
  }
  return g;
}

void verify_ideal(const StratumIdeal& S, const std::string& rep_label,
                  std::uint64_t seed) {
  Fp::ScopedModulus guard(kWorkPrime3);
  if (S.generators.empty())
    throw domain_error("strata: no generators found for " + S.label);
  // 50 fresh stratum samples: every generator must vanish.
  const std::uint64_t vseed = seed ^ fnv1a("strata-verify");
  for (std::uint64_t k = 0; k < 50; ++k) {
    const auto I = dixmier_ohno(sample_fp(rep_label, vseed + k));
    for (const StratumGenerator& g : S.generators)
      if (!field_ops<Fp>::is_zero(g.evaluate_fp(I)))
        throw domain_error("strata: generator of " + S.label +
                           " fails to vanish on a fresh stratum sample");
  }
  // 20 fresh generic smooth samples: the ideal must not vanish identically.
  SplitMix rng{seed ^ fnv1a("strata-verify-smooth") ^ kWorkPrime3};
  for (int k = 0; k < 20; ++k) {
    const Tuple13 I = random_smooth_tuple(rng);
    bool nonzero = false;
    for (const StratumGenerator& g : S.generators)
      if (!field_ops<Fp>::is_zero(g.evaluate_fp(I))) {
        nonzero = true;
        break;
      }
    if (!nonzero)
      throw domain_error("strata: ideal of " + S.label +
                         " vanishes on a generic smooth sample");
  }
}

const std::string& representative_of(const std::string& cls) {
  const auto& names = ideal_class_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == cls) return ideal_class_members(static_cast<int>(i))[0];
  throw domain_error("strata: unknown invariant class " + cls);
}

int class_dim(const std::string& cls) {
  const auto& names = ideal_class_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == cls) return ideal_class_dim(static_cast<int>(i));
  throw domain_error("strata: unknown invariant class " + cls);
}

StratumIdeal reconstruct_with_ctx(WorkContext& ctx, const std::string& cls,
                                  int degree_budget, int sample_count,
                                  std::uint64_t seed, ReconstructionReport* report) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string rep = representative_of(cls);
  StratumIdeal S;
  S.label = cls;
  S.dim = class_dim(cls);
  if (report) report->label = cls;

  for (int d = 3; d <= degree_budget; d += 3) {
    DegreeOut o1 = degree_pass(ctx.pw[0], rep, S.generators, d, sample_count);
    DegreeOut o2 = degree_pass(ctx.pw[1], rep, S.generators, d, sample_count);
    const bool agree = o1.generic_rank == o2.generic_rank &&
                       o1.stratum_rank == o2.stratum_rank &&
                       o1.old_rank == o2.old_rank &&
                       o1.basis_monos == o2.basis_monos &&
                       o1.new_pivots == o2.new_pivots;
    if (!agree)
      throw domain_error("strata: work primes disagree at degree " + std::to_string(d) +
                         " for " + cls);
    for (std::size_t i = 0; i < o1.new_classes.size(); ++i)
      S.generators.push_back(
          lift_generator(o1, o2, i, d, ctx.pw[0].prime, ctx.pw[1].prime));
    if (report)
      report->degrees.push_back(DegreeReport{d, o1.monomials, o1.generic_rank,
                                             o1.stratum_rank, o1.old_rank,
                                             static_cast<int>(o1.new_classes.size())});
  }

  verify_ideal(S, rep, seed);

  for (const auto& [label, profile] : expected_profiles()) {
    if (label != cls) continue;
    if (S.profile() != profile && report)
      report->warnings.push_back("profile differs from the expected table");
  }
  if (report)
    report->seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return S;
}

// --- pinned ideals -----------------------------------------------------------------

InvariantMonomial mono_single(int var, int exp) {
  InvariantMonomial m;
  m.e[var] = static_cast<std::uint8_t>(exp);
  return m;
}

StratumGenerator pinned_gen(int degree, std::vector<std::pair<long, InvariantMonomial>> t) {
  StratumGenerator g;
  g.degree = degree;
  for (auto& [c, m] : t) g.terms.push_back(GeneratorTerm{Rat(c), m});
  return g;
}

// The four-lines stratum: fixed reference generators with small integer
// coefficients, one pair per invariant beyond the leading one, kept verbatim
// so that downstream valuation profiles are reproducible.
StratumIdeal pinned_rA1p6() {
  StratumIdeal S;
  S.label = "rA1p6";
  S.dim = 0;
  const auto P3 = [](int k) { return mono_single(0, k); };  // I3^k
  S.generators = {
      pinned_gen(6, {{1, P3(2)}, {144, mono_single(1, 1)}}),
      pinned_gen(9, {{-1, P3(3)}, {9, mono_single(2, 1)}}),
      pinned_gen(9, {{1, P3(3)}, {3, mono_single(3, 1)}}),
      pinned_gen(12, {{4, P3(4)}, {81, mono_single(4, 1)}}),
      pinned_gen(12, {{1, P3(4)}, {18, mono_single(5, 1)}}),
      pinned_gen(15, {{1, P3(5)}, {972, mono_single(6, 1)}}),
      pinned_gen(15, {{-1, P3(5)}, {36, mono_single(7, 1)}}),
      pinned_gen(18, {{-1, P3(6)}, {243, mono_single(8, 1)}}),
      pinned_gen(18, {{-1, P3(6)}, {27, mono_single(9, 1)}}),
      pinned_gen(21, {{-1, P3(7)}, {162, mono_single(10, 1)}}),
      pinned_gen(21, {{7, P3(7)}, {144, mono_single(11, 1)}}),
      pinned_gen(27, {{1, mono_single(12, 1)}}),
  };
  return S;
}

StratumIdeal pinned_A1() {
  StratumIdeal S;
  S.label = "A1";
  S.dim = 5;
  S.generators = {pinned_gen(27, {{1, mono_single(12, 1)}})};
  return S;
}

}  // namespace

// --- public: monomials and generators ---------------------------------------------

std::vector<InvariantMonomial> invariant_monomials(int degree) {
  std::vector<InvariantMonomial> out;
  if (degree < 0) return out;
  InvariantMonomial cur;
  enumerate_monomials(0, degree, cur, out);
  return out;
}

Rat StratumGenerator::evaluate(const std::array<Rat, 13>& P) const {
  Rat total(0);
  for (const GeneratorTerm& t : terms) {
    Rat v = t.coeff;
    for (int i = 0; i < 13; ++i)
      if (t.mono.e[i] != 0) v *= rat_pow(P[i], t.mono.e[i]);
    total += v;
  }
  total.canonicalize();
  return total;
}

Fp StratumGenerator::evaluate_fp(const std::array<Fp, 13>& P) const {
  Fp total;
  for (const GeneratorTerm& t : terms) {
    Fp v = Fp::of_rat(t.coeff);
    for (int i = 0; i < 13; ++i)
      for (int k = 0; k < t.mono.e[i]; ++k) v = v * P[i];
    total = total + v;
  }
  return total;
}

std::string to_string(const StratumGenerator& g) {
  std::string s;
  for (const GeneratorTerm& t : g.terms) {
    const bool neg = t.coeff < 0;
    Rat mag = neg ? Rat(-t.coeff) : t.coeff;
    mag.canonicalize();
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (int i = 0; i < 13; ++i) {
      if (t.mono.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kDONames[i];
      if (t.mono.e[i] > 1) mono += "^" + std::to_string(t.mono.e[i]);
    }
    if (mono.empty()) {
      s += field_ops<Rat>::to_string(mag);
    } else {
      if (mag != 1) s += field_ops<Rat>::to_string(mag) + "*";
      s += mono;
    }
  }
  return s.empty() ? "0" : s;
}

std::vector<int> StratumIdeal::profile() const {
  std::vector<int> p;
  for (const StratumGenerator& g : generators) p.push_back(g.degree);
  std::sort(p.begin(), p.end());
  return p;
}

// --- public: membership and valuation gaps ------------------------------------------

std::array<Rat, 13> dim_zero_point(const std::string& cls) {
  if (cls == "rA1p6") return anchors::exact_four_lines();
  if (cls == "A2p3") return anchors::tuple_a2cubed();
  if (cls == "A4grp") return anchors::tuple_a4();
  if (cls == "rA1A3grp") return anchors::tuple_ra1a3();
  throw domain_error("dim_zero_point: " + cls + " is not a zero-dimensional class");
}

bool member(const std::array<Rat, 13>& P, const StratumIdeal& S) {
  if (S.dim == 0) {
    const auto Q = dim_zero_point(S.label);
    const std::vector<int> w(kDOWeights.begin(), kDOWeights.end());
    return wp_equal(std::vector<Rat>(P.begin(), P.end()),
                    std::vector<Rat>(Q.begin(), Q.end()), w);
  }
  for (const StratumGenerator& g : S.generators)
    if (g.evaluate(P) != 0) return false;
  return true;
}

std::vector<ExtVal> valuation_gap_profile(const std::array<Rat, 13>& I, const Int& p,
                                          const StratumIdeal& S) {
  if (p <= 7) throw domain_error("valuation gaps need a prime larger than 7");
  bool all_zero = true;
  for (const Rat& x : I) all_zero = all_zero && x == 0;
  if (all_zero)
    throw domain_error("valuation gaps are undefined for identically zero invariants");
  const std::vector<int> w(kDOWeights.begin(), kDOWeights.end());
  const Rat m =
      normalized_valuations(std::vector<Rat>(I.begin(), I.end()), w, p).min_slope;
  std::vector<ExtVal> gaps;
  gaps.reserve(S.generators.size());
  for (const StratumGenerator& g : S.generators) {
    const auto v = val_p_finite(g.evaluate(I), p);
    if (!v) {
      gaps.push_back(std::nullopt);
      continue;
    }
    Rat gap = Rat(*v) - Rat(g.degree) * m;
    gap.canonicalize();
    gaps.push_back(gap);
  }
  return gaps;
}

ExtVal valuation_gap(const std::array<Rat, 13>& I, const Int& p, const StratumIdeal& S) {
  ExtVal best;  // +inf
  for (const ExtVal& g : valuation_gap_profile(I, p, S))
    if (ext_lt(g, best)) best = g;
  return best;
}

ExtVal valuation_gap(const TernaryQuartic<Rat>& F, const Int& p, const StratumIdeal& S) {
  return valuation_gap(dixmier_ohno(F), p, S);
}

// --- public: reconstruction -----------------------------------------------------------

StratumIdeal reconstruct_ideal(const std::string& cls, int degree_budget,
                               int sample_count, std::uint64_t seed,
                               ReconstructionReport* report) {
  WorkContext ctx(seed);
  return reconstruct_with_ctx(ctx, cls, degree_budget, sample_count, seed, report);
}

int default_degree_budget(const std::string& cls) {
  static const std::map<std::string, int> budgets = {
      {"rA1p6", 27}, {"A2p3", 27},  {"A4grp", 27},  {"rA1A3grp", 27},
      {"rA1p5", 36}, {"rA1p3A2", 27}, {"A1A2p2", 27}, {"A3grp", 27},
      {"A1p2A2", 30}, {"A2p2", 30},  {"rA1p4a", 36}, {"rA1p4b", 36},
      {"A1p3", 39},  {"A1A2", 45},  {"rA1p3", 27},  {"A2", 27},
      {"A1p2", 42},  {"A1", 27},
  };
  const auto it = budgets.find(cls);
  if (it == budgets.end()) throw domain_error("strata: unknown invariant class " + cls);
  return it->second;
}

const std::vector<std::pair<std::string, std::vector<int>>>& expected_profiles() {
  static const std::vector<std::pair<std::string, std::vector<int>>> table = {
      {"rA1p6", {6, 9, 9, 12, 12, 15, 15, 18, 18, 21, 21, 27}},
      {"A2p3", {6, 9, 9, 12, 12, 15, 15, 18, 18, 21, 21, 27}},
      {"A4grp", {6, 9, 9, 12, 12, 15, 15, 18, 18, 21, 21, 27}},
      {"rA1A3grp", {6, 9, 9, 12, 12, 15, 15, 18, 18, 21, 21, 27}},
      {"rA1p5", {6, 9, 12, 15, 15, 18, 18, 21, 21, 21, 27, 27, 36}},
      {"rA1p3A2", {6, 9, 12, 12, 15, 15, 18, 18, 21, 21, 27}},
      {"A1A2p2", {12, 15, 15, 18, 18, 18, 18, 18, 21, 21, 21, 21, 24, 27}},
      {"A3grp", {9, 12, 12, 15, 15, 18, 18, 18, 21, 21, 27}},
      {"A1p2A2", {12, 15, 18, 18, 21, 21, 24, 24, 27, 27, 27, 30, 30}},
      {"A2p2", {12, 15, 18, 18, 18, 21, 21, 21, 24, 24, 27, 27, 30}},
      {"rA1p4a", {6, 9, 12, 15, 15, 18, 21, 21, 27, 36}},
      {"rA1p4b", {15, 18, 18, 18, 18, 21, 21, 21, 21, 21, 24,
                  24, 24, 24, 27, 27, 27, 27, 30, 30, 33, 36}},
      {"A1p3", {24, 24, 27, 27, 27, 27, 27, 30, 30, 30, 30, 30, 30,
                30, 33, 33, 33, 33, 33, 33, 36, 36, 36, 36, 36, 39}},
      {"A1A2", {12, 15, 18, 18, 21, 21, 24, 27, 45}},
      {"rA1p3", {6, 9, 12, 15, 15, 18, 21, 21, 27}},
      {"A2", {12, 15, 18, 18, 21, 21, 24, 27}},
      {"A1p2", {30, 33, 36, 36, 39, 42}},
      {"A1", {27}},
  };
  return table;
}

// --- public: catalog --------------------------------------------------------------------

const StratumIdeal& StrataCatalog::stratum(const std::string& label) const {
  for (const StratumIdeal& s : strata)
    if (s.label == label) return s;
  throw domain_error("strata catalog: no stratum named " + label);
}

bool StrataCatalog::has(const std::string& label) const {
  for (const StratumIdeal& s : strata)
    if (s.label == label) return true;
  return false;
}

std::string render_strata_catalog(const StrataCatalog& cat) {
  std::ostringstream out;
  out << "# qinv stratum-ideal catalog\n";
  out << "# record: stratum <label> dim <d> gens <n>, then n generator lines\n";
  out << "# generator: g <degree> <terms> then per term <coeff> and 13 exponents\n";
  out << "# exponent order: I3 I6 I9 J9 I12 J12 I15 J15 I18 J18 I21 J21 I27\n";
  out << "version " << cat.version << "\n";
  for (const StratumIdeal& s : cat.strata) {
    out << "\nstratum " << s.label << " dim " << s.dim << " gens "
        << s.generators.size() << "\n";
    for (const StratumGenerator& g : s.generators) {
      out << "# " << to_string(g) << "\n";
      out << "g " << g.degree << " " << g.terms.size();
      for (const GeneratorTerm& t : g.terms) {
        out << " " << field_ops<Rat>::to_string(t.coeff);
        for (int i = 0; i < 13; ++i) out << " " << static_cast<int>(t.mono.e[i]);
      }
      out << "\n";
    }
  }
  return out.str();
}

namespace {

Rat parse_rat_token(const std::string& tok) {
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), tok.c_str(), 10) != 0)
    throw domain_error("strata catalog: bad rational " + tok);
  r.canonicalize();
  return r;
}

}  // namespace

StrataCatalog parse_strata_catalog(const std::string& text) {
  // Strip comments, then read the token stream.
  std::string clean;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    clean += line;
    clean += '\n';
  }
  std::istringstream in(clean);
  std::string tok;
  StrataCatalog cat;
  if (!(in >> tok) || tok != "version" || !(in >> cat.version))
    throw domain_error("strata catalog: missing version header");
  while (in >> tok) {
    if (tok != "stratum") throw domain_error("strata catalog: expected 'stratum', got " + tok);
    StratumIdeal s;
    std::string kw;
    std::size_t ngens = 0;
    if (!(in >> s.label >> kw) || kw != "dim" || !(in >> s.dim) || !(in >> kw) ||
        kw != "gens" || !(in >> ngens))
      throw domain_error("strata catalog: malformed stratum header");
    for (std::size_t k = 0; k < ngens; ++k) {
      std::size_t nterms = 0;
      StratumGenerator g;
      if (!(in >> kw) || kw != "g" || !(in >> g.degree >> nterms))
        throw domain_error("strata catalog: malformed generator in " + s.label);
      for (std::size_t t = 0; t < nterms; ++t) {
        GeneratorTerm term;
        std::string ctok;
        if (!(in >> ctok)) throw domain_error("strata catalog: truncated generator");
        term.coeff = parse_rat_token(ctok);
        if (term.coeff == 0)
          throw domain_error("strata catalog: zero coefficient in " + s.label);
        for (int i = 0; i < 13; ++i) {
          int e = 0;
          if (!(in >> e) || e < 0) throw domain_error("strata catalog: bad exponent");
          term.mono.e[i] = static_cast<std::uint8_t>(e);
        }
        if (term.mono.weighted_degree() != g.degree)
          throw domain_error("strata catalog: term degree mismatch in " + s.label);
        g.terms.push_back(std::move(term));
      }
      s.generators.push_back(std::move(g));
    }
    if (cat.has(s.label))
      throw domain_error("strata catalog: duplicate stratum " + s.label);
    const auto& names = ideal_class_names();
    if (std::find(names.begin(), names.end(), s.label) == names.end())
      throw domain_error("strata catalog: unknown class " + s.label);
    cat.strata.push_back(std::move(s));
  }
  return cat;
}

StrataCatalog build_strata_catalog(std::uint64_t seed,
                                   std::vector<ReconstructionReport>* reports) {
  WorkContext ctx(seed);
  StrataCatalog cat;
  cat.version = 1;
  for (const std::string& cls : ideal_class_names()) {
    ReconstructionReport rep;
    rep.label = cls;
    if (cls == "rA1p6" || cls == "A1") {
      StratumIdeal S = cls == "rA1p6" ? pinned_rA1p6() : pinned_A1();
      verify_ideal(S, representative_of(cls), seed);
      cat.strata.push_back(std::move(S));
      rep.warnings.push_back("pinned reference ideal (not reconstructed)");
    } else {
      cat.strata.push_back(reconstruct_with_ctx(ctx, cls, default_degree_budget(cls),
                                                0, seed, &rep));
    }
    if (reports) reports->push_back(std::move(rep));
  }
  return cat;
}

std::string default_catalog_path() {
#ifdef QINV_SOURCE_DIR
  return std::string(QINV_SOURCE_DIR) + "/data/strata_catalog.txt";
#else
  return "data/strata_catalog.txt";
#endif
}

const StrataCatalog& shipped_strata_catalog() {
  static const StrataCatalog cat = [] {
    std::ifstream in(default_catalog_path());
    if (!in)
      throw domain_error("strata catalog file not found: " + default_catalog_path());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_strata_catalog(ss.str());
  }();
  return cat;
}

}  // namespace qinv
