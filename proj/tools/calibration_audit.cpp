// Development tool: solves the normalization constants of the 13 invariants
// from the anchor curves, cross-checks them overdetermined, probes
// SL3/GL3 equivariance of the raw chain, measures the integer content of the
// raw discriminant resultant, and prints a paste-ready constant block.
//
// Exit code 0 iff every invariant admits a combination that reproduces every
// anchor exactly and all structural probes pass.
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qinv/arith/linalg.hpp"
#include "qinv/invariants/anchors.hpp"
#include "qinv/invariants/do.hpp"

using namespace qinv;

namespace {

int g_failures = 0;

void fail(const std::string& msg) {
  std::printf("FAIL: %s\n", msg.c_str());
  ++g_failures;
}

struct AnchorData {
  std::string name;
  TernaryQuartic<Rat> F;
  dix::RawScalars<Rat> raw;
  std::array<Rat, 13> expected;  // exact values, filled once c3 is known
};

// Raw columns available per invariant index (primary first).
struct Basis {
  std::vector<std::string> names;                  // for reporting
  std::vector<std::vector<Rat>> columns;           // per anchor values
};

std::string rat_str(const Rat& x) { return x.get_str(); }

Rat raw_field(const dix::RawScalars<Rat>& r, const std::string& key) {
  if (key == "i03") return r.i03;
  if (key == "i06_hepsi") return r.i06_hepsi;
  if (key == "i06_cat") return r.i06_cat;
  if (key == "i09") return r.i09;
  if (key == "j09") return r.j09;
  if (key == "i12") return r.i12;
  if (key == "j12a") return r.j12a;
  if (key == "j12b") return r.j12b;
  if (key == "i15") return r.i15;
  if (key == "j15") return r.j15;
  if (key == "i18") return r.i18;
  if (key == "j18") return r.j18;
  if (key == "i21") return r.i21;
  if (key == "j21") return r.j21;
  throw domain_error("unknown raw key " + key);
}

// All monomials in the strictly-lower-weight invariants with total weight w.
void lower_monomials(int w, int max_idx_weight, std::vector<std::map<int, int>>& out) {
  // invariant indices 0..11 with weights kDOWeights; only weights < max_idx_weight
  std::vector<int> usable;
  for (int i = 0; i < 12; ++i)
    if (kDOWeights[i] < max_idx_weight) usable.push_back(i);
  std::map<int, int> cur;
  std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
    if (left == 0) {
      if (!cur.empty()) out.push_back(cur);
      return;
    }
    if (pos >= usable.size()) return;
    rec(pos + 1, left);
    int idx = usable[pos];
    if (kDOWeights[idx] <= left) {
      cur[idx]++;
      rec(pos, left - kDOWeights[idx]);
      cur[idx]--;
      if (cur[idx] == 0) cur.erase(idx);
    }
  };
  rec(0, w);
}

// Factor n = ±2^a 3^b rest; returns the {2,3}-free part and fills a, b.
Int part23(Int n, long& a, long& b) {
  a = b = 0;
  if (n == 0) return n;
  if (n < 0) n = -n;
  while (mpz_divisible_ui_p(n.get_mpz_t(), 2)) { n /= 2; ++a; }
  while (mpz_divisible_ui_p(n.get_mpz_t(), 3)) { n /= 3; ++b; }
  return n;
}

std::string factored23(const Int& n) {
  long a = 0, b = 0;
  Int rest = part23(n, a, b);
  std::string s = (n < 0 ? "-" : "");
  bool first = true;
  auto app = [&](const std::string& piece) {
    if (!first) s += "*";
    s += piece;
    first = false;
  };
  if (a) app("2^" + std::to_string(a));
  if (b) app("3^" + std::to_string(b));
  if (rest != 1 || first) app(rest.get_str());
  return s;
}

}  // namespace

int main() {
  const auto& list = anchors::all();
  std::vector<AnchorData> A;
  for (const auto& an : list) {
    AnchorData d;
    d.name = an.name;
    d.F = an.F;
    d.raw = dix::raw_scalars(an.F);
    A.push_back(std::move(d));
  }
  std::printf("anchors: %zu\n", A.size());

  // --- I3: one constant from the absolute anchor --------------------------
  const std::array<Rat, 13>& E0 = list[0].tuple;
  if (A[0].raw.i03 == 0) {
    fail("raw i03 vanishes on the absolute anchor");
    return 1;
  }
  const Rat c3 = E0[0] / A[0].raw.i03;
  std::printf("c3 = %s  (raw i03 at four-lines = %s)\n", rat_str(c3).c_str(),
              rat_str(A[0].raw.i03).c_str());

  // Expected exact vectors for every anchor.
  for (size_t k = 0; k < A.size(); ++k) {
    if (k == 0) {
      A[k].expected = E0;
      continue;
    }
    const Rat i3 = c3 * A[k].raw.i03;
    if (i3 == 0) {
      fail("I3 vanishes at anchor " + A[k].name);
      return 1;
    }
    const Rat l3 = i3 / list[k].tuple[0];
    for (int i = 0; i < 13; ++i)
      A[k].expected[i] = rat_pow(l3, kDOWeights[i] / 3) * list[k].tuple[i];
  }

  // --- line-cubic family F_t = xyz(x+y+z) + t z^4 --------------------------
  // Along this family two exact identities hold for every t:
  //   144 I6 + I3^2 = 0   and   81 I12 + 4 I3^4 = 0,
  // and the curve is singular (it contains the line z = 0), so each t supplies
  // an exact weight-12 equation at a fresh projective point.
  struct FamPoint {
    Rat t;
    TernaryQuartic<Rat> F;
    dix::RawScalars<Rat> raw;
  };
  auto family_curve = [](const Rat& t) {
    TriForm<Rat> f(4);
    f.at(2, 1) = Rat(1);  // x^2 y z
    f.at(1, 2) = Rat(1);  // x y^2 z
    f.at(1, 1) = Rat(1);  // x y z^2
    f.at(0, 0) = t;       // z^4
    return TernaryQuartic<Rat>(f);
  };
  std::vector<FamPoint> fam_solve, fam_check;
  for (long v : {1L, -1L, 2L}) {
    FamPoint fp{Rat(v), family_curve(Rat(v)), {}};
    fp.raw = dix::raw_scalars(fp.F);
    fam_solve.push_back(std::move(fp));
  }
  for (Rat v : {Rat(3), Rat(1, 2), Rat(-5)}) {
    FamPoint fp{v, family_curve(v), {}};
    fp.raw = dix::raw_scalars(fp.F);
    fam_check.push_back(std::move(fp));
  }

  // --- per-invariant solves ------------------------------------------------
  // raw candidates per invariant index (1..11)
  const std::vector<std::vector<std::string>> cand = {
      {"i06_hepsi", "i06_cat"},  // I6
      {"i09", "j09"},            // I9
      {"j09", "i09"},            // J9
      {"i12", "j12a"},           // I12
      {"j12a", "j12b"},          // J12
      {"i15", "j15"},            // I15
      {"j15", "i15"},            // J15
      {"i18", "j18"},            // I18
      {"j18", "i18"},            // J18
      {"i21"},                   // I21
      {"j21"},                   // J21
  };

  // Frozen combination per invariant: list of (kind, key-or-monomial, coeff).
  struct Term {
    bool is_raw;
    std::string raw_key;
    std::map<int, int> mono;  // invariant idx -> multiplicity
    Rat coeff;
  };
  std::vector<std::vector<Term>> frozen(13);
  frozen[0] = {Term{true, "i03", {}, c3}};

  // Evaluate the frozen combinations 0..upto on a raw-scalar record.
  auto eval_all = [&](const dix::RawScalars<Rat>& rw, int upto) {
    std::vector<Rat> vals(static_cast<size_t>(upto) + 1, Rat(0));
    for (int i = 0; i <= upto; ++i) {
      Rat acc(0);
      for (const auto& t : frozen[i]) {
        if (t.is_raw) {
          Rat x = t.coeff * raw_field(rw, t.raw_key);
          acc += x;
        } else {
          Rat x = t.coeff;
          for (const auto& [j, e] : t.mono) x *= rat_pow(vals[j], e);
          acc += x;
        }
      }
      vals[i] = acc;
    }
    return vals;
  };

  for (int idx = 1; idx <= 11; ++idx) {
    const int w = kDOWeights[idx];
    const auto& cands = cand[idx - 1];
    bool done = false;

    // Pure single-constant attempt per candidate.
    for (const auto& key : cands) {
      Rat raw0 = raw_field(A[0].raw, key);
      if (raw0 == 0) continue;
      Rat c = A[0].expected[idx] / raw0;
      bool ok = true;
      for (const auto& d : A)
        if (c * raw_field(d.raw, key) != d.expected[idx]) {
          ok = false;
          break;
        }
      if (ok) {
        std::printf("%s = %s * raw %s   [pure]\n", kDONames[idx],
                    rat_str(c).c_str(), key.c_str());
        frozen[idx] = {Term{true, key, {}, c}};
        done = true;
        break;
      }
    }
    if (done) continue;

    // Widened solve: all raw candidates of this weight plus monomials in
    // strictly-lower-weight invariants.
    Basis basis;
    for (const auto& key : cands) {
      basis.names.push_back("raw " + key);
      std::vector<Rat> col;
      for (const auto& d : A) col.push_back(raw_field(d.raw, key));
      basis.columns.push_back(std::move(col));
    }
    std::vector<std::map<int, int>> monos;
    lower_monomials(w, w, monos);
    for (const auto& mo : monos) {
      std::string nm;
      std::vector<Rat> col;
      for (const auto& d : A) {
        Rat v(1);
        for (const auto& [i, e] : mo) v *= rat_pow(d.expected[i], e);
        col.push_back(v);
      }
      for (const auto& [i, e] : mo) {
        nm += std::string(kDONames[i]);
        if (e > 1) nm += "^" + std::to_string(e);
        nm += " ";
      }
      basis.names.push_back(nm);
      basis.columns.push_back(std::move(col));
    }
    // Family rows for I12: on F_t the identity 81 I12 + 4 I3^4 = 0 holds, so
    // the combination must evaluate to -(4/81) I3(F_t)^4 there.
    std::vector<std::pair<const dix::RawScalars<Rat>*, Rat>> extra;
    if (std::string(kDONames[idx]) == "I12") {
      for (const auto& fp : fam_solve) {
        Rat i3 = c3 * fp.raw.i03;
        Rat rhs_v = Rat(-4, 81) * rat_pow(i3, 4);
        extra.emplace_back(&fp.raw, rhs_v);
      }
    }

    const int ncols = static_cast<int>(basis.columns.size());
    const int nrows = static_cast<int>(A.size()) + static_cast<int>(extra.size());
    Mat<Rat> M(nrows, ncols);
    std::vector<Rat> rhs(nrows);
    for (size_t r = 0; r < A.size(); ++r) {
      for (int cidx = 0; cidx < ncols; ++cidx)
        M.at(static_cast<int>(r), cidx) = basis.columns[cidx][r];
      rhs[r] = A[r].expected[idx];
    }
    for (size_t e = 0; e < extra.size(); ++e) {
      const int r = static_cast<int>(A.size() + e);
      std::vector<Rat> low = eval_all(*extra[e].first, idx - 1);
      for (int cidx = 0; cidx < ncols; ++cidx) {
        if (cidx < static_cast<int>(cands.size())) {
          M.at(r, cidx) = raw_field(*extra[e].first, cands[cidx]);
        } else {
          Rat v(1);
          for (const auto& [i, ex] : monos[cidx - cands.size()])
            v *= rat_pow(low[i], ex);
          M.at(r, cidx) = v;
        }
      }
      rhs[r] = extra[e].second;
    }
    auto sol = solve(M, rhs);
    if (!sol) {
      fail(std::string(kDONames[idx]) + ": no combination fits the anchors");
      continue;
    }
    // Uniqueness: kernel of the basis matrix.
    auto ker = kernel_basis(M, Rat(1));
    std::printf("%s = widened solve (basis %d, kernel dim %zu):\n",
                kDONames[idx], ncols, ker.size());
    if (ker.size() == 1) {
      // Inspect the kernel direction: if it is the zero function (a linear
      // relation among the basis columns as invariants), every solution
      // represents the same invariant and we may reduce to a canonical gauge.
      const auto& K = ker[0];
      std::printf("    kernel direction:");
      for (int cidx = 0; cidx < ncols; ++cidx)
        if (K[cidx] != 0)
          std::printf("  %s * %s", rat_str(K[cidx]).c_str(),
                      basis.names[cidx].c_str());
      std::printf("\n");
      std::mt19937_64 krng(987654321);
      std::uniform_int_distribution<int> kcf(-9, 9);
      bool functional_zero = true;
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rat> cc(15);
        for (auto& x : cc) x = Rat(kcf(krng));
        auto Fr = TernaryQuartic<Rat>::from_coeffs(cc);
        auto rr = dix::raw_scalars(Fr);
        std::vector<Rat> low = eval_all(rr, idx - 1);
        Rat kv(0);
        for (int cidx = 0; cidx < ncols; ++cidx) {
          if (K[cidx] == 0) continue;
          Rat colv;
          if (cidx < static_cast<int>(cands.size())) {
            colv = raw_field(rr, cands[cidx]);
          } else {
            colv = Rat(1);
            for (const auto& [i, ex] : monos[cidx - cands.size()])
              colv *= rat_pow(low[i], ex);
          }
          Rat term = K[cidx] * colv;
          kv += term;
        }
        if (kv != 0) functional_zero = false;
      }
      std::printf("    kernel combination is %s at random quartics\n",
                  functional_zero ? "identically zero" : "NONZERO");
      bool kernel_touches_raw = false;
      for (size_t cidx = 0; cidx < cands.size(); ++cidx)
        if (K[cidx] != 0) kernel_touches_raw = true;
      if (functional_zero) {
        // Canonical gauge: zero the highest-priority coefficient the kernel
        // can reach (prefer eliminating pure lower-invariant monomials).
        for (int cidx = ncols - 1; cidx >= 0; --cidx) {
          if (K[cidx] == 0) continue;
          Rat s = -(*sol)[cidx] / K[cidx];
          for (int j = 0; j < ncols; ++j) {
            Rat adj = s * K[j];
            (*sol)[j] += adj;
          }
          std::printf("    gauge: zeroed %s column\n", basis.names[cidx].c_str());
          break;
        }
      } else if (!kernel_touches_raw) {
        // The undetermined direction is a polynomial in strictly lower
        // generators: a generator-normalization freedom with no effect on any
        // value pinned by the oracles. Keep the reduced-echelon representative.
        std::printf(
            "    note: free direction is a lower-generator polynomial; "
            "keeping echelon gauge\n");
      } else {
        fail(std::string(kDONames[idx]) +
             ": ambiguous mixture of raw invariants (kernel touches raw columns)");
      }
    }
    std::vector<Term> terms;
    for (int cidx = 0; cidx < ncols; ++cidx) {
      if ((*sol)[cidx] == 0) continue;
      std::printf("    %s * %s\n", rat_str((*sol)[cidx]).c_str(),
                  basis.names[cidx].c_str());
      Term t;
      t.coeff = (*sol)[cidx];
      if (cidx < static_cast<int>(cands.size())) {
        t.is_raw = true;
        t.raw_key = cands[cidx];
      } else {
        t.is_raw = false;
        t.mono = monos[cidx - cands.size()];
      }
      terms.push_back(std::move(t));
    }
    if (ker.size() > 1)
      std::printf("    WARNING: solution not unique (anchor matrix rank-deficient)\n");
    // Re-verify.
    bool ok = true;
    for (int r = 0; r < nrows; ++r) {
      Rat v(0);
      for (int cidx = 0; cidx < ncols; ++cidx) v += (*sol)[cidx] * M.at(r, cidx);
      if (v != rhs[r]) ok = false;
    }
    if (!ok)
      fail(std::string(kDONames[idx]) + ": widened solution fails re-check");
    else
      frozen[idx] = std::move(terms);
  }

  // --- family corroboration -------------------------------------------------
  // Exact identities along F_t (held-out points included) and the generator
  // combinations that must be nonzero off t = 0.
  {
    bool all_frozen = true;
    for (int i = 0; i <= 11; ++i)
      if (frozen[i].empty()) all_frozen = false;
    if (!all_frozen) {
      fail("family corroboration skipped: some invariant has no combination");
    } else {
      std::vector<const FamPoint*> pts;
      for (const auto& fp : fam_solve) pts.push_back(&fp);
      for (const auto& fp : fam_check) pts.push_back(&fp);
      struct Gen {
        const char* name;
        std::function<Rat(const std::vector<Rat>&)> eval;
        bool always_zero;
      };
      auto p4 = [](const Rat& x) -> Rat { return rat_pow(x, 4); };
      std::vector<Gen> gens = {
          {"144*I6+I3^2",
           [](const std::vector<Rat>& v) -> Rat { return Rat(144) * v[1] + v[0] * v[0]; },
           true},
          {"9*I9-I3^3",
           [](const std::vector<Rat>& v) -> Rat { return Rat(9) * v[2] - rat_pow(v[0], 3); },
           false},
          {"3*J9+I3^3",
           [](const std::vector<Rat>& v) -> Rat { return Rat(3) * v[3] + rat_pow(v[0], 3); },
           false},
          {"81*I12+4*I3^4",
           [&p4](const std::vector<Rat>& v) -> Rat { return Rat(81) * v[4] + Rat(4) * p4(v[0]); },
           true},
          {"18*J12+I3^4",
           [&p4](const std::vector<Rat>& v) -> Rat { return Rat(18) * v[5] + p4(v[0]); },
           false},
          {"972*I15+I3^5",
           [](const std::vector<Rat>& v) -> Rat { return Rat(972) * v[6] + rat_pow(v[0], 5); },
           false},
          {"36*J15-I3^5",
           [](const std::vector<Rat>& v) -> Rat { return Rat(36) * v[7] - rat_pow(v[0], 5); },
           false},
          {"243*I18-I3^6",
           [](const std::vector<Rat>& v) -> Rat { return Rat(243) * v[8] - rat_pow(v[0], 6); },
           false},
          {"27*J18-I3^6",
           [](const std::vector<Rat>& v) -> Rat { return Rat(27) * v[9] - rat_pow(v[0], 6); },
           false},
          {"162*I21-I3^7",
           [](const std::vector<Rat>& v) -> Rat { return Rat(162) * v[10] - rat_pow(v[0], 7); },
           false},
          {"144*J21+7*I3^7",
           [](const std::vector<Rat>& v) -> Rat { return Rat(144) * v[11] + Rat(7) * rat_pow(v[0], 7); },
           false},
      };
      for (const auto& g : gens) {
        int nonzero_hits = 0;
        for (const auto* fp : pts) {
          std::vector<Rat> vals = eval_all(fp->raw, 11);
          Rat gv = g.eval(vals);
          if (g.always_zero) {
            if (gv != 0)
              fail(std::string("family identity ") + g.name + " violated at t=" +
                   rat_str(fp->t));
          } else if (gv != 0) {
            ++nonzero_hits;
          }
        }
        if (!g.always_zero && nonzero_hits == 0)
          fail(std::string("family combination ") + g.name +
               " vanished at every sample point");
      }
      // The family curve contains the line z = 0, so the resultant of the
      // partials must vanish identically.
      for (const auto* fp : {&fam_solve[0], &fam_solve[2]}) {
        auto pd = partials(fp->F);
        Rat r = macaulay_resultant_cubics({pd[0], pd[1], pd[2]});
        if (r != 0)
          fail("resultant nonzero on the singular family curve at t=" +
               rat_str(fp->t));
      }
      std::printf("family corroboration done (%zu points)\n", pts.size());
    }
  }

  // --- coefficient factorizations ------------------------------------------
  // Denominator primes beyond {2,3} matter for the finite-field path; print
  // the full factor structure of every frozen coefficient.
  auto factor_rest = [](Int rest) {
    std::string s;
    for (unsigned long p = 5; rest != 1 && p < 1000000; p += 2) {
      int e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        rest /= static_cast<long>(p);
        ++e;
      }
      if (e) s += " " + std::to_string(p) + "^" + std::to_string(e);
    }
    if (rest != 1) s += " * " + rest.get_str();
    return s.empty() ? std::string(" 1") : s;
  };
  std::printf("coefficient factor structure:\n");
  for (int i = 0; i <= 11; ++i) {
    for (const auto& t : frozen[i]) {
      long na = 0, nb = 0, da = 0, db = 0;
      Int nrest = part23(Int(t.coeff.get_num()), na, nb);
      Int drest = part23(Int(t.coeff.get_den()), da, db);
      std::printf("  %s [%s]: num 2^%ld 3^%ld *%s ; den 2^%ld 3^%ld *%s\n",
                  kDONames[i],
                  t.is_raw ? t.raw_key.c_str() : "mono",
                  na, nb, factor_rest(nrest).c_str(), da, db,
                  factor_rest(drest).c_str());
      // The finite-field path inverts denominators, so any prime beyond the
      // unsupported characteristics {2,3,5,7} would poison supported primes.
      Int d = drest;
      for (long p : {5L, 7L})
        while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)))
          d /= p;
      if (d != 1)
        fail(std::string(kDONames[i]) +
             ": coefficient denominator has a prime factor > 7: " +
             t.coeff.get_str());
    }
  }

  // --- empirical value gcd of each raw (content proxy) ---------------------
  {
    std::mt19937_64 crng(424242);
    std::uniform_int_distribution<int> ccf(-30, 30);
    const std::vector<std::string> keys = {"i03", "i06_hepsi", "i06_cat",
                                           "i09", "j09", "i12", "j12a",
                                           "j12b", "i15", "j15", "i18",
                                           "j18", "i21", "j21"};
    std::map<std::string, Int> g;
    int used = 0;
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Rat> cc(15);
      for (auto& x : cc) x = Rat(ccf(crng));
      auto Fr = TernaryQuartic<Rat>::from_coeffs(cc);
      auto rr = dix::raw_scalars(Fr);
      ++used;
      for (const auto& k : keys) {
        Rat v = raw_field(rr, k);
        Int num(v.get_num());
        if (v.get_den() != 1) num = 0;  // raws should be integral on Z inputs
        auto it = g.find(k);
        if (it == g.end())
          g[k] = abs(num);
        else
          it->second = gcd(it->second, abs(num));
      }
    }
    std::printf("raw value gcds over %d integer quartics:\n", used);
    for (const auto& k : keys) {
      long a = 0, b = 0;
      Int rest = part23(g[k], a, b);
      std::printf("  %s: 2^%ld 3^%ld *%s\n", k.c_str(), a, b,
                  factor_rest(rest).c_str());
    }
  }

  // --- structural probes on the raw chain ---------------------------------
  std::mt19937_64 rng(20260816);
  std::uniform_int_distribution<int> cf(-9, 9);
  auto rand_quartic = [&]() {
    std::vector<Rat> c(15);
    for (auto& x : c) x = Rat(cf(rng));
    return TernaryQuartic<Rat>::from_coeffs(c);
  };

  // GL3: diagonal scaling picks up det^(4w/3) per invariant of weight w.
  {
    auto F = rand_quartic();
    LinearSubstitution<Rat> D;
    D.at(0, 0) = 2;
    D.at(1, 1) = 3;
    D.at(2, 2) = 5;
    const Rat dd = Rat(30);
    auto r0 = dix::raw_scalars(F);
    auto r1 = dix::raw_scalars(act(D, F));
    auto chk = [&](const char* nm, const Rat& a, const Rat& b, int w) {
      if (a == 0 && b == 0) return;
      if (b != rat_pow(dd, 4 * w / 3) * a)
        fail(std::string("GL3 power check failed for raw ") + nm);
    };
    chk("i03", r0.i03, r1.i03, 3);
    chk("i06_hepsi", r0.i06_hepsi, r1.i06_hepsi, 6);
    chk("i06_cat", r0.i06_cat, r1.i06_cat, 6);
    chk("i09", r0.i09, r1.i09, 9);
    chk("j09", r0.j09, r1.j09, 9);
    chk("i12", r0.i12, r1.i12, 12);
    chk("j12a", r0.j12a, r1.j12a, 12);
    chk("j12b", r0.j12b, r1.j12b, 12);
    chk("i15", r0.i15, r1.i15, 15);
    chk("j15", r0.j15, r1.j15, 15);
    chk("i18", r0.i18, r1.i18, 18);
    chk("j18", r0.j18, r1.j18, 18);
    chk("i21", r0.i21, r1.i21, 21);
    chk("j21", r0.j21, r1.j21, 21);
    std::printf("GL3 diagonal power probe done\n");
  }

  // SL3: raws are strict invariants under integer shears of determinant 1.
  {
    std::uniform_int_distribution<int> off(-2, 2);
    for (int t = 0; t < 8; ++t) {
      auto F = rand_quartic();
      LinearSubstitution<Rat> U = LinearSubstitution<Rat>::identity();
      for (int s = 0; s < 5; ++s) {
        int r = (t + s) % 3, c = (r + 1 + (off(rng) > 0 ? 1 : 0)) % 3;
        LinearSubstitution<Rat> E = LinearSubstitution<Rat>::identity();
        E.at(r, c) = Rat(off(rng));
        U = U * E;
      }
      auto r0 = dix::raw_scalars(F);
      auto r1 = dix::raw_scalars(act(U, F));
      if (r0.i03 != r1.i03 || r0.i09 != r1.i09 || r0.i15 != r1.i15 ||
          r0.i21 != r1.i21 || r0.j21 != r1.j21 || r0.i18 != r1.i18) {
        fail("SL3 invariance probe failed");
        break;
      }
    }
    std::printf("SL3 shear probe done\n");
  }

  // --- discriminant content ------------------------------------------------
  {
    std::uniform_int_distribution<int> cfs(-20, 20);
    Int g = 0;
    Rat klein;
    for (int t = 0; t < 120; ++t) {
      std::vector<Rat> c(15);
      for (auto& x : c) x = Rat(cfs(rng));
      auto F = TernaryQuartic<Rat>::from_coeffs(c);
      auto P = partials(F);
      Rat res = macaulay_resultant_cubics({P[0], P[1], P[2]});
      if (res.get_den() != 1) {
        fail("integer quartic gave non-integer resultant");
        break;
      }
      Int n = res.get_num();
      if (n == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
      if (g == 1) break;
    }
    std::printf("discriminant raw content gcd = %s\n", g.get_str().c_str());
    Int rem = g;
    for (int p : {2, 3, 5, 7}) {
      int e = 0;
      while (rem % p == 0) {
        rem /= p;
        ++e;
      }
      if (e) std::printf("  content factor %d^%d\n", p, e);
    }
    if (rem != 1)
      std::printf("  WARNING: residual content %s has primes > 7\n",
                  rem.get_str().c_str());

    // Klein quartic x^3 y + y^3 z + z^3 x: record the raw resultant.
    TriForm<Rat> kf(4);
    kf.at(3, 1) = 1;
    kf.at(0, 3) = 1;
    kf.at(1, 0) = 1;
    auto KP = partials(TernaryQuartic<Rat>(kf));
    klein = macaulay_resultant_cubics({KP[0], KP[1], KP[2]});
    std::printf("klein raw resultant = %s\n", klein.get_num().get_str().c_str());
    Int kn = klein.get_num();
    for (int p : {2, 3, 5, 7, 11, 13}) {
      int e = 0;
      while (kn % p == 0 && kn != 0) {
        kn /= p;
        ++e;
      }
      if (e) std::printf("  klein factor %d^%d\n", p, e);
    }
    std::printf("  klein cofactor %s\n", kn.get_str().c_str());
  }

  // --- paste-ready block ----------------------------------------------------
  std::printf("\n----- frozen combinations -----\n");
  for (int idx = 0; idx < 12; ++idx) {
    std::printf("%s:", kDONames[idx]);
    for (const auto& t : frozen[idx]) {
      if (t.is_raw)
        std::printf("  %s * raw.%s", rat_str(t.coeff).c_str(), t.raw_key.c_str());
      else {
        std::printf("  %s *", rat_str(t.coeff).c_str());
        for (const auto& [i, e] : t.mono) std::printf(" %s^%d", kDONames[i], e);
      }
    }
    std::printf("\n");
  }

  std::printf("\n%s (%d failures)\n", g_failures ? "AUDIT FAILED" : "AUDIT OK",
              g_failures);
  return g_failures ? 1 : 0;
}
