// Anchor curves with pinned invariant vectors.  The first anchor's vector is
// absolute; every other anchor is weighted-projective, normalized against its
// weight-3 coordinate (all invariant weights are multiples of 3, so the
// scale is determined over Q once I3 is known).
#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qinv/forms/quartic.hpp"

namespace qinv::anchors {

inline TernaryQuartic<Rat> from_terms(
    const std::vector<std::pair<std::array<int, 2>, long>>& terms) {
  TriForm<Rat> f(4);
  for (const auto& t : terms) f.at(t.first[0], t.first[1]) += Rat(t.second);
  return TernaryQuartic<Rat>(f);
}

// x y z (x + y + z)
inline TernaryQuartic<Rat> four_lines() {
  return from_terms({{{2, 1}, 1}, {{1, 2}, 1}, {{1, 1}, 1}});
}

struct Anchor {
  std::string name;
  TernaryQuartic<Rat> F;
  std::array<Rat, 13> tuple;  // [0] != 0; absolute only for the first anchor
};

inline std::array<Rat, 13> rat_tuple(const std::array<const char*, 13>& s) {
  std::array<Rat, 13> t;
  for (int i = 0; i < 13; ++i) {
    t[i] = Rat(s[i]);
    t[i].canonicalize();
  }
  return t;
}

inline const std::array<Rat, 13>& tuple_a4() {
  static const std::array<Rat, 13> t = rat_tuple(
      {"1", "1/180", "49/36", "49/60", "343/1620", "49/36", "1715/3888",
       "343/3600", "2401/3888", "2401/10800", "343/1620", "2401/720", "0"});
  return t;
}

inline const std::array<Rat, 13>& tuple_ra1a3() {
  static const std::array<Rat, 13> t = rat_tuple(
      {"1", "-1/144", "7/36", "1/6", "-17/1296", "7/288", "625/31104",
       "-25/1152", "775/62208", "-35/2304", "-1/20736", "1/256", "0"});
  return t;
}

inline const std::array<Rat, 13>& tuple_a2cubed() {
  static const std::array<Rat, 13> t = rat_tuple(
      {"1", "-1/108", "97/324", "-121/324", "-325/2916", "-47/324",
       "121/11664", "7/1296", "1595/104976", "985/34992", "637/78732",
       "-1057/314928", "0"});
  return t;
}

inline const std::array<Rat, 13>& tuple_tacnode_printed() {
  static const std::array<Rat, 13> t = rat_tuple(
      {"18", "0", "1944", "648", "0", "11664", "0", "0", "0", "0", "0", "0",
       "0"});
  return t;
}

// The absolute vector for x y z (x + y + z).
inline const std::array<Rat, 13>& exact_four_lines() {
  static const std::array<Rat, 13> t = [] {
    auto p23 = [](int a, int b) -> Rat {
      return Rat(1) / (rat_pow(Rat(2), a) * rat_pow(Rat(3), b));
    };
    std::array<Rat, 13> v;
    v[0] = -p23(4, 2);
    v[1] = -p23(12, 6);
    v[2] = -p23(12, 8);
    v[3] = p23(12, 7);
    v[4] = -p23(14, 12);
    v[5] = -p23(17, 10);
    v[6] = p23(22, 15);
    v[7] = -p23(22, 12);
    v[8] = p23(24, 17);
    v[9] = p23(24, 15);
    v[10] = -p23(29, 18);
    v[11] = Rat(7) * p23(32, 16);
    v[12] = 0;
    return v;
  }();
  return t;
}

inline const std::vector<Anchor>& all() {
  static const std::vector<Anchor> list = [] {
    std::vector<Anchor> a;
    a.push_back({"four-lines", four_lines(), exact_four_lines()});
    // (y^2 - 2yx + x^2) z^2 + (-2y^2 x - 2y x^2) z + y^2 x^2
    a.push_back({"cusp-triple",
                 from_terms({{{0, 2}, 1},
                             {{1, 1}, -2},
                             {{2, 0}, 1},
                             {{1, 2}, -2},
                             {{2, 1}, -2},
                             {{2, 2}, 1}}),
                 tuple_a2cubed()});
    // x^2 z^2 + 2 y^2 x z + y^4 - y^3 x
    a.push_back(
        {"tacnode-cusp",
         from_terms({{{2, 0}, 1}, {{1, 2}, 2}, {{0, 4}, 1}, {{1, 3}, -1}}),
         tuple_a4()});
    // (z^2 + y x)^2
    a.push_back({"double-conic",
                 from_terms({{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}}),
                 tuple_a4()});
    // (y z + y^2 + x^2)(y z + x^2)
    a.push_back({"conic-pair-a7",
                 from_terms({{{0, 2}, 1},
                             {{2, 1}, 2},
                             {{0, 3}, 1},
                             {{2, 2}, 1},
                             {{4, 0}, 1}}),
                 tuple_a4()});
    // x^2 z^2 + 2 y^2 x z + y^4 + y^3 x
    a.push_back(
        {"tacnode-family-a",
         from_terms({{{2, 0}, 1}, {{1, 2}, 2}, {{0, 4}, 1}, {{1, 3}, 1}}),
         tuple_a4()});
    // y z ((y + x) z + x^2)
    a.push_back({"line-pair-conic-a",
                 from_terms({{{0, 2}, 1}, {{1, 1}, 1}, {{2, 1}, 1}}),
                 tuple_ra1a3()});
    // y z (y z + x^2)
    a.push_back({"line-pair-conic-b", from_terms({{{0, 2}, 1}, {{2, 1}, 1}}),
                 tuple_ra1a3()});
    // x (x z^2 + (y^2 + y x + x^2) z + y^2 x)
    a.push_back({"cuspidal-cubic-line",
                 from_terms({{{2, 0}, 1},
                             {{1, 2}, 1},
                             {{2, 1}, 1},
                             {{3, 0}, 1},
                             {{2, 2}, 1}}),
                 tuple_ra1a3()});
    // x^2 z^2 + y^4 + y x^3
    a.push_back({"tacnode-printed",
                 from_terms({{{2, 0}, 1}, {{0, 4}, 1}, {{3, 1}, 1}}),
                 tuple_tacnode_printed()});
    // x^2 z^2 + y^4 + y^3 z + y^2 z^2
    a.push_back(
        {"tacnode-node-printed",
         from_terms({{{2, 0}, 1}, {{0, 4}, 1}, {{0, 3}, 1}, {{0, 2}, 1}}),
         tuple_tacnode_printed()});
    return a;
  }();
  return list;
}

}  // namespace qinv::anchors
