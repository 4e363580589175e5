// qinv — exact invariants and reduction types of plane quartics.
//
// singclass/singclass.hpp: singularity analysis of plane quartics over
// finite prime fields of characteristic > 7 and over Q.
//
//  * singular_orbits / singular_points: the singular locus, computed by
//    elimination after a random coordinate change, with points grouped
//    into Frobenius orbits over extension fields.
//  * milnor_number: the Milnor number of an isolated plane curve germ,
//    by stabilized truncated Jacobian-quotient ranks.
//  * ade_classify: the A/D/E/X label of a germ from its Milnor number,
//    corank, and 3-jet.
//  * quartic_singularity_type: the full classification of a quartic —
//    configuration of simple singularities, reducibility, non-isolated
//    (non-reduced) shapes, and GIT stability.
//
// Over Q the classification is computed modulo three independent 62-bit
// primes and must agree; a disagreement surfaces as indeterminate_error
// carrying the per-prime answers.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qinv/arith/base.hpp"
#include "qinv/arith/fp.hpp"
#include "qinv/arith/fpext.hpp"
#include "qinv/arith/poly.hpp"
#include "qinv/forms/quartic.hpp"

namespace qinv {

// --- classification types -----------------------------------------------------

enum class ADEFamily { A, D, E, X };

struct ADELabel {
  ADEFamily family = ADEFamily::A;
  int index = 1;  // Milnor number: A_k, D_k, E_k, X_9

  friend bool operator==(const ADELabel& a, const ADELabel& b) {
    return a.family == b.family && a.index == b.index;
  }
  friend bool operator!=(const ADELabel& a, const ADELabel& b) { return !(a == b); }
  friend bool operator<(const ADELabel& a, const ADELabel& b) {
    if (a.family != b.family)
      return static_cast<int>(a.family) < static_cast<int>(b.family);
    return a.index < b.index;
  }
};

std::string to_string(const ADELabel& l);

enum class GitStatus { Stable, Semistable, Unstable };
std::string to_string(GitStatus s);

// Non-isolated (non-reduced) quartic shapes: double line + conic, double
// line + two lines, double conic, two double lines, line + triple line,
// quadruple line.
enum class NonIsolatedShape { L2C, LLL2, C2, L2L2, LL3, L4 };
std::string to_string(NonIsolatedShape s);

struct SingularityType {
  std::vector<ADELabel> points;  // sorted; empty for smooth / non-isolated
  bool reducible = false;
  std::optional<NonIsolatedShape> non_isolated;
  GitStatus git_status = GitStatus::Stable;

  friend bool operator==(const SingularityType& a, const SingularityType& b) {
    return a.points == b.points && a.reducible == b.reducible &&
           a.non_isolated == b.non_isolated && a.git_status == b.git_status;
  }
  friend bool operator!=(const SingularityType& a, const SingularityType& b) {
    return !(a == b);
  }
};

std::string to_string(const SingularityType& t);

// A Galois orbit of singular points of a quartic over F_p.
struct SingularOrbit {
  ExtCtxPtr field;                      // F_p[T]/(m); null for F_p itself
  int degree = 1;                       // orbit size = [residue field : F_p]
  std::array<FpExt, 3> representative;  // one point of the orbit
  int multiplicity = 2;                 // multiplicity of the point on the curve
  BiPoly<FpExt> local;                  // the curve around the point, recentered
};

// One singular point over an extension field.
struct SingularPoint {
  std::array<FpExt, 3> point;
  int multiplicity = 2;
};

// Thrown by the classification over Q when the work primes disagree.
struct indeterminate_error : domain_error {
  std::vector<std::string> per_prime;
  explicit indeterminate_error(std::string msg, std::vector<std::string> answers)
      : domain_error(std::move(msg)), per_prime(std::move(answers)) {}
};

// --- API ----------------------------------------------------------------------

// Galois orbits of singular points of a squarefree quartic over F_p, p > 7.
std::vector<SingularOrbit> singular_orbits(const TernaryQuartic<Fp>& F);

// All singular points individually (orbit representatives and their
// Frobenius conjugates).
std::vector<SingularPoint> singular_points(const TernaryQuartic<Fp>& F);

// Milnor number of the germ at the origin of a bivariate polynomial;
// std::nullopt means the singularity is not isolated there. The origin must
// be a singular point of the curve (otherwise a domain_error is thrown).
template <class K>
std::optional<int> milnor_number(const BiPoly<K>& local);

// A/D/E/X label of an isolated germ at the origin.
template <class K>
ADELabel ade_classify(const BiPoly<K>& local);

// Full classification over a prime field (p > 7) or over Q.
SingularityType quartic_singularity_type(const TernaryQuartic<Fp>& F);
SingularityType quartic_singularity_type(const TernaryQuartic<Rat>& F);

}  // namespace qinv
