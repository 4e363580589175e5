// qinv — exact invariants and reduction types of plane quartics.
//
// strata/strata.hpp: ideals of the singularity strata in the 13 fundamental
// invariants, reconstructed by evaluation-interpolation.  Per weighted
// degree, the linear forms in invariant monomials that vanish on certified
// stratum samples are computed modulo the relations holding on all quartics
// (measured on generic smooth samples) and modulo monomial multiples of the
// generators already found.  Kernels are computed over two word-size primes,
// lifted by CRT and rational reconstruction, and re-verified over a third
// prime on disjoint fresh samples.
//
// Zero-dimensional strata are additionally pinned by their exact invariant
// point; membership there is weighted-projective equality rather than a
// generator test.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qinv/arith/valuation.hpp"
#include "qinv/forms/quartic.hpp"
#include "qinv/invariants/do.hpp"

namespace qinv {

// --- monomials in the 13 invariants -----------------------------------------

struct InvariantMonomial {
  std::array<std::uint8_t, 13> e{};  // exponents, kDONames order

  int weighted_degree() const {
    int d = 0;
    for (int i = 0; i < 13; ++i) d += e[i] * kDOWeights[i];
    return d;
  }
  friend bool operator==(const InvariantMonomial& a, const InvariantMonomial& b) {
    return a.e == b.e;
  }
  // Descending-lex order used everywhere: a precedes b when a.e > b.e.
  friend bool operator<(const InvariantMonomial& a, const InvariantMonomial& b) {
    return a.e > b.e;
  }
};

// All monomials of the given weighted degree, in canonical order.
std::vector<InvariantMonomial> invariant_monomials(int degree);

// --- stratum ideals -----------------------------------------------------------

struct GeneratorTerm {
  Rat coeff;
  InvariantMonomial mono;
};

struct StratumGenerator {
  int degree = 0;
  std::vector<GeneratorTerm> terms;  // canonical order, nonzero coefficients

  Rat evaluate(const std::array<Rat, 13>& P) const;
  Fp evaluate_fp(const std::array<Fp, 13>& P) const;
};

std::string to_string(const StratumGenerator& g);

struct StratumIdeal {
  std::string label;  // invariant-class name
  int dim = -1;       // dimension of the cut locus in weighted projective space
  std::vector<StratumGenerator> generators;  // ascending degree

  std::vector<int> profile() const;  // sorted multiset of generator degrees
};

// Exact invariant tuple of a zero-dimensional class (rA1p6, A2p3, A4grp,
// rA1A3grp); throws for any other label.
std::array<Rat, 13> dim_zero_point(const std::string& cls);

// Does the invariant tuple P lie on the stratum?  Zero-dimensional strata
// compare against the pinned point in weighted projective space; positive-
// dimensional ones test that every generator vanishes.
bool member(const std::array<Rat, 13>& P, const StratumIdeal& S);

// --- normalized valuation gaps -------------------------------------------------
//
// For a prime p > 7 and a quartic with not-all-zero invariants, the gap of a
// generator g is  v_p(g(I)) - deg(g) * m  where m = min_w v_p(I_w)/w; the gap
// of the stratum is the minimum over its generators.  nullopt encodes +inf
// (the generator vanishes exactly).  A positive gap means the reduction of
// the invariant point mod p lies on the stratum.

std::vector<ExtVal> valuation_gap_profile(const std::array<Rat, 13>& I, const Int& p,
                                          const StratumIdeal& S);
ExtVal valuation_gap(const std::array<Rat, 13>& I, const Int& p, const StratumIdeal& S);
ExtVal valuation_gap(const TernaryQuartic<Rat>& F, const Int& p, const StratumIdeal& S);

// --- reconstruction -------------------------------------------------------------

struct DegreeReport {
  int degree = 0;
  int monomials = 0;      // dimension of the monomial space
  int generic_rank = 0;   // rank of evaluation on generic smooth samples
  int stratum_rank = 0;   // rank of evaluation on stratum samples
  int old_rank = 0;       // degree-d span of previously found generators
  int new_generators = 0;
};

struct ReconstructionReport {
  std::string label;
  std::vector<DegreeReport> degrees;
  std::vector<std::string> warnings;  // e.g. profile mismatch against expected
  double seconds = 0.0;
};

// Reconstruct the ideal of the named invariant class up to the weighted
// degree budget.  sample_count <= 0 selects the automatic rule (three sample
// rows per monomial column).  Throws domain_error when modular kernels
// disagree between the work primes, when a coefficient fails rational
// reconstruction, or when the third-prime verification on disjoint samples
// fails.  A profile mismatch against the expected table only warns.
StratumIdeal reconstruct_ideal(const std::string& cls, int degree_budget,
                               int sample_count, std::uint64_t seed,
                               ReconstructionReport* report = nullptr);

// Frozen expectations for the reconstruction.
int default_degree_budget(const std::string& cls);
const std::vector<std::pair<std::string, std::vector<int>>>& expected_profiles();

// --- catalog ---------------------------------------------------------------------

struct StrataCatalog {
  int version = 1;
  std::vector<StratumIdeal> strata;  // all 18 classes, search order

  const StratumIdeal& stratum(const std::string& label) const;
  bool has(const std::string& label) const;
};

std::string render_strata_catalog(const StrataCatalog& cat);
StrataCatalog parse_strata_catalog(const std::string& text);

// Full build: the pinned rA1p6 and A1 ideals plus sixteen reconstructions at
// their default budgets.  Reports, when requested, are appended per class.
StrataCatalog build_strata_catalog(std::uint64_t seed,
                                   std::vector<ReconstructionReport>* reports = nullptr);

// The catalog shipped with the source tree (data/strata_catalog.txt),
// parsed once and cached.  Throws if the file is missing or malformed.
const StrataCatalog& shipped_strata_catalog();
std::string default_catalog_path();

}  // namespace qinv
