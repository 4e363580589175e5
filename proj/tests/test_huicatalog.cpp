// Tests for the normal-form catalog: template expansion, certified sampling,
// and the invariant-class tables.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qinv/huicatalog/huicatalog.hpp"
#include "qinv/invariants/do.hpp"

#include <set>

using namespace qinv;

namespace {

TernaryQuartic<Rat> quartic_q(const std::vector<long>& v) {
  std::vector<Rat> c;
  for (long x : v) c.emplace_back(x);
  return TernaryQuartic<Rat>::from_coeffs(c);
}

}  // namespace

TEST_CASE("catalog inventory") {
  const auto& rows = hui_catalog();
  CHECK(rows.size() == 55);
  int irreducible = 0, reducible = 0, nonreduced = 0;
  std::set<std::string> names;
  for (const auto& e : rows) {
    names.insert(e.name);
    if (e.table == 1) ++irreducible;
    if (e.table == 2) ++reducible;
    if (e.table == 3) ++nonreduced;
    CHECK(e.reducible == (e.table != 1));
    CHECK((e.table == 3) == e.non_isolated.has_value());
    if (e.table == 3) CHECK(e.points.empty());
  }
  CHECK(names.size() == 55);  // labels are unique
  CHECK(irreducible == 21);
  CHECK(reducible == 26);
  CHECK(nonreduced == 8);
  CHECK(is_catalog_label("rA1^4(conic)"));
  CHECK(!is_catalog_label("rA1^7"));
  CHECK_THROWS_AS(catalog_entry("rA1^7"), domain_error);
}

TEST_CASE("normal forms expand the printed templates") {
  // (y^2-2yx+x^2)z^2 + (-2y^2x-2yx^2)z + y^2x^2, coefficients in
  // descending-lex slot order x^4..y^0z^4.
  const auto cusps = normal_form<Rat>("A2^3", {});
  CHECK(cusps == quartic_q({0, 0, 0, 1, -2, 1, 0, -2, -2, 0, 0, 0, 1, 0, 0}));

  // xyz(z+y+x) = x^2yz + xy^2z + xyz^2.
  const auto braid = normal_form<Rat>("rA1^6", {});
  CHECK(braid == quartic_q({0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0}));

  // E6 at parameter 0: x^3z - y^4.
  const auto e6 = normal_form<Rat>("E6", {Rat(0)});
  CHECK(e6 == quartic_q({0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0}));

  // Smooth template at a=..=f=0: xz^3 + y^3z + y^4.
  const auto sm = normal_form<Rat>("Smooth",
                                   {Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
  CHECK(sm == quartic_q({0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0}));

  CHECK_THROWS_AS(normal_form<Rat>("A2^3", {Rat(1)}), domain_error);
  CHECK_THROWS_AS(normal_form<Rat>("Smooth", {Rat(1)}), domain_error);
}

TEST_CASE("expected types match the table data") {
  const auto braid = expected_type("rA1^6");
  CHECK(braid.points == std::vector<ADELabel>(6, ADELabel{ADEFamily::A, 1}));
  CHECK(braid.reducible);
  CHECK(braid.git_status == GitStatus::Stable);

  const auto cat = expected_type("A2A3");
  CHECK(cat.points ==
        std::vector<ADELabel>{{ADEFamily::A, 2}, {ADEFamily::A, 3}});
  CHECK(!cat.reducible);
  CHECK(cat.git_status == GitStatus::Semistable);

  const auto dc = expected_type("c2");
  CHECK(dc.points.empty());
  CHECK(dc.non_isolated == NonIsolatedShape::C2);
  CHECK(dc.git_status == GitStatus::Semistable);

  const auto x9 = expected_type("rX9");
  CHECK(x9.points == std::vector<ADELabel>{{ADEFamily::X, 9}});
  CHECK(x9.git_status == GitStatus::Unstable);
}

TEST_CASE("certified sampling over Q") {
  // A spread of labels covering every template shape: multi-parameter,
  // parameter-free, discrete, excluded-locus, and non-reduced rows.
  const char* labels[] = {"Smooth", "A1",          "A2",        "A3",
                          "A6",     "E6",          "A1^3",      "A1A2^2",
                          "A2^3",   "rX9",         "rA3^2",     "rA1^4(conic)",
                          "rA1^5",  "rA1^6",       "rA1D5",     "c2",
                          "l4",     "rA1A5(cubic)"};
  for (const char* label : labels) {
    CAPTURE(label);
    const auto F = sample_q(label, 12345);
    CHECK(quartic_singularity_type(F) == expected_type(label));
  }
}

TEST_CASE("certified sampling over F_p") {
  Fp::ScopedModulus guard(10007);
  const char* labels[] = {"Smooth", "A1",    "A4",          "D4",   "rE7",
                          "A1^2A2", "rA1^3", "rA1^3A2",     "ll3",  "rA7",
                          "A1A3",   "rA1A3", "rA1^2A3(conic)"};
  for (const char* label : labels) {
    CAPTURE(label);
    const auto F = sample_fp(label, 999);
    CHECK(quartic_singularity_type(F) == expected_type(label));
  }
}

TEST_CASE("sampling is deterministic in the seed") {
  const auto F1 = sample_q("A1A3", 77);
  const auto F2 = sample_q("A1A3", 77);
  const auto F3 = sample_q("A1A3", 78);
  CHECK(F1 == F2);
  CHECK(!(F1 == F3));  // overwhelmingly likely for a 2-parameter family
}

TEST_CASE("samples respect excluded loci") {
  // A1^3 rejects a = +-2 etc.; draw several seeds and re-check the loci by
  // recomputing the parameter values is not possible from the quartic alone,
  // so instead certify the stronger property: the type is exactly three nodes.
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    const auto F = sample_q("A1^3", seed);
    const auto t = quartic_singularity_type(F);
    CHECK(t.points == std::vector<ADELabel>(3, ADELabel{ADEFamily::A, 1}));
    CHECK(!t.reducible);
  }
}

TEST_CASE("node sample has one rational node") {
  Fp::ScopedModulus guard(10007);
  const auto F = sample_fp("A1", 4);
  const auto orbits = singular_orbits(F);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].degree == 1);
  CHECK(ade_classify(orbits[0].local) == ADELabel{ADEFamily::A, 1});
}

TEST_CASE("unstable samples have identically zero invariants") {
  const auto F = sample_q("l4", 1);
  const auto inv = dixmier_ohno<Rat>(F);
  for (const auto& v : inv) CHECK(v == 0);
  const auto G = sample_q("rD6", 1);
  const auto invG = dixmier_ohno<Rat>(G);
  for (const auto& v : invG) CHECK(v == 0);
}

TEST_CASE("small fields are rejected for sampling") {
  Fp::ScopedModulus guard(7);
  CHECK_THROWS_AS(sample_fp("A1", 1), domain_error);
}

TEST_CASE("invariant classes") {
  CHECK(ideal_class_count() == 18);
  const int braid = ideal_class_of("rA1^6");
  CHECK(ideal_class_names()[braid] == "rA1p6");
  CHECK(ideal_class_dim(braid) == 0);
  CHECK(ideal_class_members(braid) == std::vector<std::string>{"rA1^6"});

  const int a4 = ideal_class_of("c2");
  CHECK(ideal_class_names()[a4] == "A4grp");
  CHECK(ideal_class_members(a4).size() == 8);
  CHECK(ideal_class_of("rA1A5(conic)") == a4);
  CHECK_THROWS_AS(ideal_class_of("rA1A5(cubic)"), domain_error);  // unstable

  // Every non-unstable singular label belongs to exactly one class.
  std::set<std::string> covered;
  for (int c = 0; c < ideal_class_count(); ++c)
    for (const auto& m : ideal_class_members(c)) {
      CHECK(covered.insert(m).second);
      CHECK(catalog_entry(m).git != GitStatus::Unstable);
    }
  CHECK(covered.size() == 33);
  int expected = 0;
  for (const auto& e : hui_catalog())
    if (e.git != GitStatus::Unstable && e.name != "Smooth") ++expected;
  CHECK(expected == 33);
}

TEST_CASE("specializations") {
  CHECK(specializations("Smooth").size() == 33);
  CHECK_THROWS_AS(specializations("l4"), domain_error);
  CHECK_THROWS_AS(specializations("rE7"), domain_error);
  // rA1^6 sits at the bottom of its chain: nothing lies strictly below.
  CHECK(specializations("rA1^6").empty());
}

TEST_CASE("catalog text renders every row") {
  const std::string text = catalog_text();
  for (const auto& e : hui_catalog())
    CHECK(text.find("label: " + e.name + "\n") != std::string::npos);
  CHECK(text.find("[classes]") != std::string::npos);
  CHECK(text.find("[specializations]") != std::string::npos);
  CHECK(text.find("class: rA1p6 dim 0 members: rA1^6") != std::string::npos);
}
