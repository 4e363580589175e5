// qinv — exact invariants and reduction types of plane quartics.
//
// huicatalog/huicatalog.hpp: the catalog of normal forms for singular plane
// quartics — 55 strata (21 irreducible, 26 reducible, 8 non-reduced), each
// with its parameter count, GIT status, expected singularity configuration,
// a symbolic normal-form template, and excluded parameter loci.
//
//  * hui_catalog() / catalog_entry(): the rows.
//  * normal_form(): substitute explicit parameter values into a template.
//  * sample_q() / sample_fp(): deterministic certified sampling — parameters
//    are drawn uniformly (integers in [-40, 40] over Q, field elements over
//    F_p), excluded loci are skipped, and the result is certified by the
//    singularity classifier before it is returned.
//  * specializations(): labels strictly below a stratum in the
//    specialization partial order (at invariant-class granularity).
//  * catalog_text(): the versioned text rendering shipped in
//    data/hui_catalog.txt.
//
// Templates are affine-linear in up to six parameters a..f; entries are
// parsed once from the printed product form and expanded, so the shipped
// text file and the in-memory table share a single source.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qinv/arith/base.hpp"
#include "qinv/arith/fp.hpp"
#include "qinv/forms/quartic.hpp"
#include "qinv/singclass/singclass.hpp"

namespace qinv {

// One quartic coefficient of a template: c0 + sum_i coef[i] * param_i,
// with parameters indexed a=0, b=1, g=2, d=3, e=4, f=5.
struct TemplateCoeff {
  long c0 = 0;
  std::array<long, 6> coef{};
};

struct CatalogEntry {
  std::string name;   // canonical ASCII label, e.g. "rA1^4(conic)"
  int table = 1;      // 1 = irreducible, 2 = reducible, 3 = non-reduced
  int param_count = 0;      // stratum dimension (the tables' "#" column)
  int template_arity = 0;   // symbolic slots; may exceed param_count when the
                            // extra slot is a discrete 0/1 choice
  bool discrete01 = false;  // sampling draws the sole parameter from {0, 1}
  GitStatus git = GitStatus::Stable;
  bool reducible = false;
  std::vector<ADELabel> points;  // expected singular-point labels, sorted
  std::optional<NonIsolatedShape> non_isolated;
  std::string source;                      // printed product form of the template
  std::array<TemplateCoeff, 15> tmpl{};    // expanded, quartic_exponents() order
  std::vector<std::string> excluded;       // loci in a..f; zero value => reject
};

// All 55 rows in table order.
const std::vector<CatalogEntry>& hui_catalog();

// Row lookup; throws domain_error for an unknown label.
const CatalogEntry& catalog_entry(const std::string& name);
bool is_catalog_label(const std::string& name);

// The classification a certified sample of `label` must produce.
SingularityType expected_type(const std::string& label);

// Substitute parameter values; params.size() must equal the template arity.
template <class K>
TernaryQuartic<K> normal_form(const std::string& label, const std::vector<K>& params);

// Thrown when the certified-sampling retry budget is exhausted.
struct sampling_error : domain_error {
  using domain_error::domain_error;
};

// Deterministic certified samples. sample_fp uses the ambient F_p modulus
// and requires p > 7.
TernaryQuartic<Rat> sample_q(const std::string& label, std::uint64_t seed);
TernaryQuartic<Fp> sample_fp(const std::string& label, std::uint64_t seed);

// --- invariant-class structure --------------------------------------------------
//
// The 18 classes of the invariant-space stratification, in classification
// test order (dimension 0 upward).  Strata grouped into one class share the
// invariant locus of the class's smallest-dimension member and cannot be
// separated by invariants alone.

const std::vector<std::string>& ideal_class_names();
int ideal_class_count();
int ideal_class_of(const std::string& label);  // throws for unstable / Smooth
int ideal_class_dim(int cls);
const std::vector<std::string>& ideal_class_members(int cls);

// Classes strictly below `cls` in the derived specialization order.
const std::vector<int>& ideal_class_below(int cls);

// Labels strictly below `label` in the specialization partial order:
// the members of every class strictly below label's class.  Smooth is
// above everything; unstable labels are rejected with domain_error.
std::vector<std::string> specializations(const std::string& label);

// The versioned catalog text (the content of data/hui_catalog.txt).
std::string catalog_text();

}  // namespace qinv
