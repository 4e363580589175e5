// qinv — exact invariants and reduction types of plane quartics.
//
// huicatalog.cpp: the 55-row normal-form catalog.  Rows are entered in their
// printed product form and expanded once into affine-linear coefficient
// templates; sampling certifies every candidate against the singularity
// classifier before returning it.

#include "qinv/huicatalog/huicatalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qinv {
namespace {

// --- tiny symbolic layer --------------------------------------------------------
//
// Sparse integer polynomials in x, y, z (indices 0-2) and the template
// parameters a, b, g, d, e, f (indices 3-8).  Templates and excluded loci are
// parsed from printed strings so that the shipped text file, the in-memory
// table, and the sampler share one source.

using Expo = std::array<int, 9>;

struct MPoly {
  std::map<Expo, long> terms;  // zero coefficients are never stored

  static MPoly constant(long v) {
    MPoly r;
    if (v != 0) r.terms[Expo{}] = v;
    return r;
  }
  static MPoly variable(int idx) {
    MPoly r;
    Expo e{};
    e[idx] = 1;
    r.terms[e] = 1;
    return r;
  }
  MPoly& operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms) {
      long& t = terms[e];
      t += c;
      if (t == 0) terms.erase(e);
    }
    return *this;
  }
  MPoly operator-() const {
    MPoly r;
    for (const auto& [e, c] : terms) r.terms[e] = -c;
    return r;
  }
  MPoly operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        Expo e{};
        for (int i = 0; i < 9; ++i) e[i] = e1[i] + e2[i];
        long& t = r.terms[e];
        t += c1 * c2;
        if (t == 0) r.terms.erase(e);
      }
    return r;
  }
  MPoly pow(int n) const {
    MPoly r = constant(1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }
};

int var_index(char c) {
  switch (c) {
    case 'x': return 0;
    case 'y': return 1;
    case 'z': return 2;
    case 'a': return 3;
    case 'b': return 4;
    case 'g': return 5;
    case 'd': return 6;
    case 'e': return 7;
    case 'f': return 8;
    default: return -1;
  }
}

constexpr const char* kParamNames = "abgdef";

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw domain_error("catalog expression parse error: " + what + " near position " +
                       std::to_string(pos) + " of \"" + s + "\"");
  }

  MPoly parse_expr() {
    bool neg = eat('-');
    MPoly r = parse_term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+')) {
        r += parse_term();
      } else if (eat('-')) {
        r += -parse_term();
      } else {
        return r;
      }
    }
  }
  MPoly parse_term() {
    MPoly r = parse_factor();
    while (eat('*')) r = r * parse_factor();
    return r;
  }
  MPoly parse_factor() {
    MPoly base = parse_atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("exponent expected");
      base = base.pow(std::stoi(s.substr(start, pos - start)));
    }
    return base;
  }
  MPoly parse_atom() {
    skip();
    if (eat('-')) return -parse_atom();
    if (eat('(')) {
      MPoly r = parse_expr();
      if (!eat(')')) fail("')' expected");
      return r;
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return MPoly::constant(std::stol(s.substr(start, pos - start)));
    }
    if (pos < s.size()) {
      int v = var_index(s[pos]);
      if (v >= 0) {
        ++pos;
        return MPoly::variable(v);
      }
    }
    fail("atom expected");
  }
};

MPoly parse_mpoly(const std::string& text) {
  Parser p(text);
  MPoly r = p.parse_expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

// --- row seeds ------------------------------------------------------------------

struct RowSpec {
  const char* name;
  int table;         // 1 irreducible, 2 reducible, 3 non-reduced
  int param_count;   // the "#" column
  char git;          // 's' stable, 'm' semistable, 'u' unstable
  const char* points;        // space-separated ADE labels, "" for none
  const char* shape;         // non-reduced shape or nullptr
  const char* source;        // printed product form
  const char* excluded;      // comma-separated loci or nullptr
  bool discrete01;           // sole parameter ranges over {0, 1}
};

const RowSpec kRows[] = {
    // --- irreducible -----------------------------------------------------------
    {"Smooth", 1, 6, 's', "", nullptr,
     "x*z^3+z*(a*x^3+b*x^2*y+y^3)+g*x^4+d*x^3*y+e*x^2*y^2+f*x*y^3+y^4", nullptr, false},
    {"A1", 1, 5, 's', "A1", nullptr,
     "y*z^3+(a*y^2+x^2)*z^2+(b*y^3+g*y^2*x+y*x^2)*z+d*y^4+e*y^3*x", nullptr, false},
    {"A2", 1, 4, 's', "A2", nullptr,
     "y*z^3+(a*y^2+b*y*x+x^2)*z^2+(g*y^3+d*y^2*x)*z+y^3*x", nullptr, false},
    {"A3", 1, 3, 'm', "A3", nullptr,
     "x^2*z^2+a*y^2*x*z+y^4+b*y^3*x+g*y^2*x^2+y*x^3", nullptr, false},
    {"A4", 1, 2, 'm', "A4", nullptr,
     "x^2*z^2+2*y^2*x*z+y^4+a*y^3*x+b*y^2*x^2+y*x^3", nullptr, false},
    {"D4", 1, 2, 'u', "D4", nullptr,
     "(y^2*x+y*x^2)*z+a*y^4+b*y^2*x^2-x^4", nullptr, false},
    {"A5", 1, 1, 'm', "A5", nullptr,
     "x^2*z^2+2*y^2*x*z+y^4-y^2*x^2+a*y*x^3", nullptr, false},
    {"D5", 1, 1, 'u', "D5", nullptr,
     "y*x^2*z-y^4+a*y^3*x-x^4", nullptr, false},
    {"A6", 1, 0, 'm', "A6", nullptr,
     "x^2*z^2+2*y^2*x*z+y^4-y*x^3", nullptr, false},
    {"E6", 1, 0, 'u', "E6", nullptr,
     "x^3*z-y^4-a*y^2*x^2", nullptr, true},
    {"A1^2", 1, 4, 's', "A1 A1", nullptr,
     "(y^2+x^2)*z^2+(a*y*x^2+b*x^3)*z+y^2*x^2+g*y*x^3+d*x^4", nullptr, false},
    {"A1A2", 1, 3, 's', "A1 A2", nullptr,
     "y^2*z^2+(a*y*x^2+x^3)*z+y^2*x^2+b*y*x^3+g*x^4", nullptr, false},
    {"A2^2", 1, 2, 's', "A2 A2", nullptr,
     "y^2*z^2+(a*y*x^2+x^3)*z+y*x^3+b*x^4", nullptr, false},
    {"A1A3", 1, 2, 'm', "A1 A3", nullptr,
     "x^2*z^2+(a*y^2*x+y*x^2)*z+y^4+b*y^3*x", nullptr, false},
    {"A2A3", 1, 1, 'm', "A2 A3", nullptr,
     "x^2*z^2+a*y^2*x*z+y^4+y^3*x", nullptr, false},
    {"A1A4", 1, 1, 'm', "A1 A4", nullptr,
     "x^2*z^2+2*y^2*x*z+y^4-y^3*x+a*y^2*x^2", nullptr, false},
    {"A2A4", 1, 0, 'm', "A2 A4", nullptr,
     "x^2*z^2+2*y^2*x*z+y^4-y^3*x", nullptr, false},
    {"A1^3", 1, 3, 's', "A1 A1 A1", nullptr,
     "(y^2+a*y*x+x^2)*z^2+(b*y^2*x+g*y*x^2)*z+y^2*x^2",
     "a^2-4, b^2-4, g^2-4, a^2+b^2+g^2-a*b*g-4, b+g", false},
    {"A1^2A2", 1, 2, 's', "A1 A1 A2", nullptr,
     "(y^2+a*y*x+x^2)*z^2+(b*y^2*x-2*y*x^2)*z+y^2*x^2",
     "a^2-4, b^2-4, a+b", false},
    {"A1A2^2", 1, 1, 's', "A1 A2 A2", nullptr,
     "(y^2+a*y*x+x^2)*z^2+(-2*y^2*x-2*y*x^2)*z+y^2*x^2",
     "a^2-4", false},
    {"A2^3", 1, 0, 's', "A2 A2 A2", nullptr,
     "(y^2-2*y*x+x^2)*z^2+(-2*y^2*x-2*y*x^2)*z+y^2*x^2", nullptr, false},
    // --- reducible ---------------------------------------------------------------
    {"rA5", 2, 1, 'u', "A5", nullptr,
     "x*(x*z^2+(a*y*x+x^2)*z+y^3)", nullptr, false},
    {"rX9", 2, 1, 'u', "X9", nullptr,
     "y^4+a*y^2*x^2+x^4", "a^2-4", false},
    {"rD6", 2, 0, 'u', "D6", nullptr,
     "x*(z^3+y*x*z+x^3)", nullptr, false},
    {"rA7", 2, 0, 'm', "A7", nullptr,
     "(y*z+y^2+x^2)*(y*z+x^2)", nullptr, false},
    {"rE7", 2, 0, 'u', "E7", nullptr,
     "x*(z^3+x*z^2+y*x^2)", nullptr, false},
    {"rA1A3", 2, 2, 'm', "A1 A3", nullptr,
     "x*(a*x*z^2+(y^2+b*y*x+x^2)*z+y^2*x)", "a, b^2-4", false},
    {"rA1D4", 2, 1, 'u', "A1 D4", nullptr,
     "x*(y*z^2+(y*x+a*x^2)*z+x^3)", nullptr, false},
    {"rA3^2", 2, 1, 'm', "A3 A3", nullptr,
     "(y*z+x^2)*(a*y*z+x^2)", "a, a-1", false},
    {"rA1A5(conic)", 2, 0, 'm', "A1 A5", nullptr,
     "(z^2+y*x)*(z^2+y*z+y*x)", nullptr, false},
    {"rA1A5(cubic)", 2, 0, 'u', "A1 A5", nullptr,
     "x*(z^3+y*x*z+y^2*x)", nullptr, false},
    {"rA1D5", 2, 0, 'u', "A1 D5", nullptr,
     "x*(y*z^2+a*x^2*z+x^3)", nullptr, true},
    {"rA1D6", 2, 0, 'u', "A1 D6", nullptr,
     "y*z*(x*z+y^2)", nullptr, false},
    {"rA2A5", 2, 0, 'u', "A2 A5", nullptr,
     "x*(z^3+y^2*x)", nullptr, false},
    {"rA1^3", 2, 3, 's', "A1 A1 A1", nullptr,
     "x*((y+a*x)*z^2+(y^2+b*y*x+g*x^2)*z+y^2*x)", "g", false},
    {"rA1^2A3(cubic)", 2, 1, 'm', "A1 A1 A3", nullptr,
     "x*(x*z^2+(y^2+a*y*x)*z+y^2*x)", "a^2-4", false},
    {"rA1^2A3(conic)", 2, 1, 'm', "A1 A1 A3", nullptr,
     "((y+x)*z+y*x)*((a*y+x)*z+y*x)", "a, a-1", false},
    {"rA1^2D4", 2, 0, 'u', "A1 A1 D4", nullptr,
     "y*z*((y+x)*z+y*x)", nullptr, false},
    {"rA1A2A3", 2, 0, 'm', "A1 A2 A3", nullptr,
     "x*(x*z^2+(y^2+2*y*x)*z+y^2*x)", nullptr, false},
    {"rA1A3^2", 2, 0, 'm', "A1 A3 A3", nullptr,
     "y*z*(y*z+x^2)", nullptr, false},
    {"rA1^4(cubic)", 2, 2, 's', "A1 A1 A1 A1", nullptr,
     "x*((y+a*x)*z^2+(y^2+b*y*x)*z+y^2*x)", nullptr, false},
    {"rA1^4(conic)", 2, 2, 's', "A1 A1 A1 A1", nullptr,
     "((y+x)*z+y*x)*((a*y+b*x)*z+y*x)", "a, b, a-b", false},
    {"rA1^3A2", 2, 1, 's', "A1 A1 A1 A2", nullptr,
     "x*(z^3+a*y*z^2+y^2*z+y^2*x)", "a^2-4", false},
    {"rA1^3A3", 2, 0, 'm', "A1 A1 A1 A3", nullptr,
     "y*z*((y+x)*z+x^2)", nullptr, false},
    {"rA1^3D4", 2, 0, 'u', "A1 A1 A1 D4", nullptr,
     "x*y*z*(z+x)", nullptr, false},
    {"rA1^5", 2, 1, 's', "A1 A1 A1 A1 A1", nullptr,
     "y*z*((a*y+x)*z+y*x+x^2)", "a, a-1", false},
    {"rA1^6", 2, 0, 's', "A1 A1 A1 A1 A1 A1", nullptr,
     "x*y*z*(z+y+x)", nullptr, false},
    // --- non-reduced -------------------------------------------------------------
    {"l2c", 3, 0, 'u', "", "l2c", "x^2*((y+x)*z+y*x)", nullptr, false},
    {"l2c'", 3, 0, 'u', "", "l2c", "z^2*(x*z+y^2)", nullptr, false},
    {"lll2", 3, 0, 'u', "", "lll2", "x*y*z^2", nullptr, false},
    {"lll2'", 3, 0, 'u', "", "lll2", "x*z^2*(z+x)", nullptr, false},
    {"c2", 3, 0, 'm', "", "c2", "(z^2+y*x)^2", nullptr, false},
    {"l2l2", 3, 0, 'u', "", "l2l2", "x^2*z^2", nullptr, false},
    {"ll3", 3, 0, 'u', "", "ll3", "x*z^3", nullptr, false},
    {"l4", 3, 0, 'u', "", "l4", "z^4", nullptr, false},
};

std::vector<ADELabel> parse_points(const char* text) {
  std::vector<ADELabel> pts;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    ADEFamily fam;
    switch (tok[0]) {
      case 'A': fam = ADEFamily::A; break;
      case 'D': fam = ADEFamily::D; break;
      case 'E': fam = ADEFamily::E; break;
      case 'X': fam = ADEFamily::X; break;
      default: throw domain_error("catalog: bad point label " + tok);
    }
    pts.push_back(ADELabel{fam, std::stoi(tok.substr(1))});
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::optional<NonIsolatedShape> parse_shape(const char* text) {
  if (text == nullptr) return std::nullopt;
  const std::string s = text;
  if (s == "l2c") return NonIsolatedShape::L2C;
  if (s == "lll2") return NonIsolatedShape::LLL2;
  if (s == "c2") return NonIsolatedShape::C2;
  if (s == "l2l2") return NonIsolatedShape::L2L2;
  if (s == "ll3") return NonIsolatedShape::LL3;
  if (s == "l4") return NonIsolatedShape::L4;
  throw domain_error("catalog: bad non-isolated shape " + s);
}

std::vector<std::string> split_list(const char* text) {
  std::vector<std::string> out;
  if (text == nullptr) return out;
  std::string cur;
  for (const char* p = text;; ++p) {
    if (*p == ',' || *p == '\0') {
      std::string item;
      for (char c : cur)
        if (!std::isspace(static_cast<unsigned char>(c))) item.push_back(c);
      if (!item.empty()) out.push_back(item);
      cur.clear();
      if (*p == '\0') break;
    } else {
      cur.push_back(*p);
    }
  }
  return out;
}

// Expand the printed form into the 15 affine-linear coefficient slots.
void expand_template(CatalogEntry& ent) {
  const MPoly p = parse_mpoly(ent.source);
  std::map<std::pair<int, int>, int> slot_of;
  for (std::size_t t = 0; t < 15; ++t) slot_of[quartic_exponents()[t]] = static_cast<int>(t);
  std::array<bool, 6> used{};
  for (const auto& [e, c] : p.terms) {
    if (e[0] + e[1] + e[2] != 4)
      throw domain_error("catalog: template " + ent.name + " is not a quartic in x, y, z");
    const int slot = slot_of.at({e[0], e[1]});
    int pdeg = 0, pidx = -1;
    for (int j = 3; j < 9; ++j) {
      pdeg += e[j];
      if (e[j] > 0) pidx = j - 3;
    }
    if (pdeg == 0) {
      ent.tmpl[slot].c0 += c;
    } else if (pdeg == 1) {
      ent.tmpl[slot].coef[pidx] += c;
      used[pidx] = true;
    } else {
      throw domain_error("catalog: template " + ent.name + " is not affine in its parameters");
    }
  }
  int arity = 0;
  for (int j = 0; j < 6; ++j)
    if (used[j]) arity = j + 1;
  for (int j = 0; j < arity; ++j)
    if (!used[j])
      throw domain_error("catalog: template " + ent.name + " skips parameter " +
                         std::string(1, kParamNames[j]));
  ent.template_arity = arity;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> rows;
  rows.reserve(std::size(kRows));
  for (const RowSpec& r : kRows) {
    CatalogEntry ent;
    ent.name = r.name;
    ent.table = r.table;
    ent.param_count = r.param_count;
    ent.discrete01 = r.discrete01;
    ent.git = r.git == 's'   ? GitStatus::Stable
              : r.git == 'm' ? GitStatus::Semistable
                             : GitStatus::Unstable;
    ent.reducible = r.table != 1;
    ent.points = parse_points(r.points);
    ent.non_isolated = parse_shape(r.shape);
    ent.source = r.source;
    ent.excluded = split_list(r.excluded);
    expand_template(ent);
    if (!ent.discrete01 && ent.template_arity != ent.param_count)
      throw domain_error("catalog: arity/dimension mismatch for " + ent.name);
    for (const std::string& locus : ent.excluded) {
      const MPoly q = parse_mpoly(locus);
      for (const auto& [e, c] : q.terms) {
        (void)c;
        if (e[0] != 0 || e[1] != 0 || e[2] != 0)
          throw domain_error("catalog: excluded locus of " + ent.name +
                             " mentions a curve variable");
      }
    }
    rows.push_back(std::move(ent));
  }
  return rows;
}

template <class K>
K mint_scalar(long v);
template <>
Rat mint_scalar<Rat>(long v) {
  return Rat(v);
}
template <>
Fp mint_scalar<Fp>(long v) {
  return Fp::of_long(v);
}

// Evaluate an excluded-locus polynomial at parameter values.
template <class K>
K eval_locus(const std::string& locus, const std::vector<K>& params) {
  const MPoly p = parse_mpoly(locus);
  K total = K();
  for (const auto& [e, c] : p.terms) {
    K term = mint_scalar<K>(c);
    for (int j = 3; j < 9; ++j)
      for (int k = 0; k < e[j]; ++k) term = term * params[static_cast<std::size_t>(j - 3)];
    total = total + term;
  }
  return total;
}

template <class K>
bool hits_excluded_locus(const CatalogEntry& ent, const std::vector<K>& params) {
  for (const std::string& locus : ent.excluded)
    if (field_ops<K>::is_zero(eval_locus(locus, params))) return true;
  return false;
}

// --- deterministic sampling RNG ---------------------------------------------------

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t lim = ~0ull - ~0ull % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= lim);
    return v % n;
  }
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

constexpr int kSampleBudget = 64;

// --- invariant classes ------------------------------------------------------------

struct ClassSpec {
  const char* name;
  int dim;
  std::vector<const char*> members;
};

const std::vector<ClassSpec>& class_specs() {
  static const std::vector<ClassSpec> specs = {
      {"rA1p6", 0, {"rA1^6"}},
      {"A2p3", 0, {"A2^3"}},
      {"A4grp", 0, {"A4", "A5", "A6", "A1A4", "A2A4", "rA7", "rA1A5(conic)", "c2"}},
      {"rA1A3grp", 0, {"rA1A3", "rA1^2A3(cubic)", "rA1A2A3", "rA1A3^2", "rA1^3A3"}},
      {"rA1p5", 1, {"rA1^5"}},
      {"rA1p3A2", 1, {"rA1^3A2"}},
      {"A1A2p2", 1, {"A1A2^2"}},
      {"A3grp", 1, {"A3", "A1A3", "A2A3", "rA3^2", "rA1^2A3(conic)"}},
      {"A1p2A2", 2, {"A1^2A2"}},
      {"A2p2", 2, {"A2^2"}},
      {"rA1p4a", 2, {"rA1^4(cubic)"}},
      {"rA1p4b", 2, {"rA1^4(conic)"}},
      {"A1p3", 3, {"A1^3"}},
      {"A1A2", 3, {"A1A2"}},
      {"rA1p3", 3, {"rA1^3"}},
      {"A2", 4, {"A2"}},
      {"A1p2", 4, {"A1^2"}},
      {"A1", 5, {"A1"}},
  };
  return specs;
}

// Specialization order on the 18 classes: kBelow[i] lists the classes
// strictly below class i (more special strata).  Derived by sampled
// ideal-membership over the reconstructed strata (tools/derive_edges);
// regenerate after any change to the stratum ideals.
const std::vector<std::vector<int>>& below_table();

}  // namespace

// --- public API -------------------------------------------------------------------

const std::vector<CatalogEntry>& hui_catalog() {
  static const std::vector<CatalogEntry> rows = build_catalog();
  return rows;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : hui_catalog())
    if (e.name == name) return e;
  throw domain_error("catalog: unknown label " + name);
}

bool is_catalog_label(const std::string& name) {
  for (const CatalogEntry& e : hui_catalog())
    if (e.name == name) return true;
  return false;
}

SingularityType expected_type(const std::string& label) {
  const CatalogEntry& e = catalog_entry(label);
  SingularityType t;
  t.points = e.points;
  t.reducible = e.reducible;
  t.non_isolated = e.non_isolated;
  t.git_status = e.git;
  return t;
}

template <class K>
TernaryQuartic<K> normal_form(const std::string& label, const std::vector<K>& params) {
  const CatalogEntry& ent = catalog_entry(label);
  if (static_cast<int>(params.size()) != ent.template_arity)
    throw domain_error("normal_form: " + label + " expects " +
                       std::to_string(ent.template_arity) + " parameters, got " +
                       std::to_string(params.size()));
  std::vector<K> coeffs(TernaryQuartic<K>::kNumCoeffs, K());
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    K v = mint_scalar<K>(ent.tmpl[t].c0);
    for (int j = 0; j < ent.template_arity; ++j)
      if (ent.tmpl[t].coef[j] != 0)
        v = v + mint_scalar<K>(ent.tmpl[t].coef[j]) * params[static_cast<std::size_t>(j)];
    coeffs[t] = v;
  }
  return TernaryQuartic<K>::from_coeffs(coeffs);
}

template TernaryQuartic<Rat> normal_form<Rat>(const std::string&, const std::vector<Rat>&);
template TernaryQuartic<Fp> normal_form<Fp>(const std::string&, const std::vector<Fp>&);

TernaryQuartic<Rat> sample_q(const std::string& label, std::uint64_t seed) {
  const CatalogEntry& ent = catalog_entry(label);
  const SingularityType want = expected_type(label);
  SplitMix rng{seed ^ fnv1a(label)};
  for (int attempt = 0; attempt < kSampleBudget; ++attempt) {
    std::vector<Rat> params;
    params.reserve(static_cast<std::size_t>(ent.template_arity));
    for (int j = 0; j < ent.template_arity; ++j)
      params.emplace_back(ent.discrete01 ? static_cast<long>(rng.below(2))
                                         : static_cast<long>(rng.below(81)) - 40);
    if (hits_excluded_locus(ent, params)) continue;
    const TernaryQuartic<Rat> F = normal_form<Rat>(label, params);
    try {
      if (quartic_singularity_type(F) == want) return F;
    } catch (const domain_error&) {
      // Degenerate parameter choice outside the recorded loci: try again.
    }
  }
  throw sampling_error("sample: certification retry budget exhausted for " + label +
                       " over Q");
}

TernaryQuartic<Fp> sample_fp(const std::string& label, std::uint64_t seed) {
  const std::uint64_t p = Fp::modulus();
  if (p <= 7)
    throw domain_error("sample: the field characteristic must exceed 7");
  const CatalogEntry& ent = catalog_entry(label);
  const SingularityType want = expected_type(label);
  SplitMix rng{seed ^ fnv1a(label) ^ (p * 0x2545F4914F6CDD1Dull)};
  for (int attempt = 0; attempt < kSampleBudget; ++attempt) {
    std::vector<Fp> params;
    params.reserve(static_cast<std::size_t>(ent.template_arity));
    for (int j = 0; j < ent.template_arity; ++j)
      params.push_back(Fp::of_long(
          static_cast<long>(ent.discrete01 ? rng.below(2) : rng.below(p))));
    if (hits_excluded_locus(ent, params)) continue;
    const TernaryQuartic<Fp> F = normal_form<Fp>(label, params);
    try {
      if (quartic_singularity_type(F) == want) return F;
    } catch (const domain_error&) {
      // Degenerate parameter choice outside the recorded loci: try again.
    }
  }
  throw sampling_error("sample: certification retry budget exhausted for " + label +
                       " over F_" + std::to_string(p));
}

// --- invariant classes ------------------------------------------------------------

const std::vector<std::string>& ideal_class_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const ClassSpec& c : class_specs()) v.push_back(c.name);
    return v;
  }();
  return names;
}

int ideal_class_count() { return static_cast<int>(class_specs().size()); }

int ideal_class_of(const std::string& label) {
  const auto& specs = class_specs();
  for (std::size_t i = 0; i < specs.size(); ++i)
    for (const char* m : specs[i].members)
      if (label == m) return static_cast<int>(i);
  throw domain_error("catalog: label " + label + " has no invariant class");
}

int ideal_class_dim(int cls) {
  return class_specs().at(static_cast<std::size_t>(cls)).dim;
}

const std::vector<std::string>& ideal_class_members(int cls) {
  static const std::vector<std::vector<std::string>> members = [] {
    std::vector<std::vector<std::string>> v;
    for (const ClassSpec& c : class_specs()) {
      std::vector<std::string> m;
      for (const char* s : c.members) m.push_back(s);
      v.push_back(std::move(m));
    }
    return v;
  }();
  return members.at(static_cast<std::size_t>(cls));
}

const std::vector<int>& ideal_class_below(int cls) {
  return below_table().at(static_cast<std::size_t>(cls));
}

std::vector<std::string> specializations(const std::string& label) {
  const CatalogEntry& ent = catalog_entry(label);
  if (ent.git == GitStatus::Unstable)
    throw domain_error("specializations: " + label + " is GIT-unstable");
  std::vector<std::string> out;
  if (label == "Smooth") {
    for (int c = 0; c < ideal_class_count(); ++c)
      for (const std::string& m : ideal_class_members(c)) out.push_back(m);
    return out;
  }
  for (int c : ideal_class_below(ideal_class_of(label)))
    for (const std::string& m : ideal_class_members(c)) out.push_back(m);
  return out;
}

namespace {

std::string render_coeff(const TemplateCoeff& tc) {
  std::string s;
  auto append = [&s](long v, const std::string& sym) {
    if (v == 0) return;
    if (!s.empty()) s += v > 0 ? "+" : "-";
    else if (v < 0) s += "-";
    const long mag = v > 0 ? v : -v;
    if (sym.empty()) {
      s += std::to_string(mag);
    } else {
      if (mag != 1) s += std::to_string(mag) + "*";
      s += sym;
    }
  };
  append(tc.c0, "");
  for (int j = 0; j < 6; ++j) append(tc.coef[j], std::string(1, kParamNames[j]));
  return s.empty() ? "0" : s;
}

std::string render_monomial(int i, int j) {
  const int k = 4 - i - j;
  std::string s;
  auto emit = [&s](char v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  emit('x', i);
  emit('y', j);
  emit('z', k);
  return s;
}

std::string render_template(const CatalogEntry& ent) {
  std::string s;
  for (std::size_t t = 0; t < 15; ++t) {
    const TemplateCoeff& tc = ent.tmpl[t];
    bool zero = tc.c0 == 0;
    for (long c : tc.coef) zero = zero && c == 0;
    if (zero) continue;
    if (!s.empty()) s += " + ";
    const auto& e = quartic_exponents()[t];
    s += "(" + render_coeff(tc) + ")" + render_monomial(e.first, e.second);
  }
  return s;
}

}  // namespace

std::string catalog_text() {
  std::ostringstream out;
  out << "# Normal-form catalog for singular plane quartics\n";
  out << "# version: 1\n";
  out << "# parameters: a b g d e f; templates are affine-linear in them.\n";
  out << "# template: expanded form, fixed descending-lex monomial order.\n";
  out << "# excluded: loci in the parameters rejected by sampling.\n";
  out << "\n";
  static const char* kTableNames[] = {"", "irreducible", "reducible", "non-reduced"};
  for (const CatalogEntry& e : hui_catalog()) {
    out << "label: " << e.name << "\n";
    out << "table: " << kTableNames[e.table] << "\n";
    out << "dimension: " << e.param_count << "\n";
    out << "git: " << to_string(e.git) << "\n";
    std::string pts;
    for (const ADELabel& l : e.points) pts += (pts.empty() ? "" : " ") + to_string(l);
    out << "points: " << (pts.empty() ? "-" : pts) << "\n";
    out << "nonisolated: " << (e.non_isolated ? to_string(*e.non_isolated) : std::string("-"))
        << "\n";
    out << "form: " << e.source << "\n";
    out << "template: " << render_template(e) << "\n";
    if (e.discrete01) out << "discrete: a in {0,1}\n";
    if (!e.excluded.empty()) {
      out << "excluded: ";
      for (std::size_t i = 0; i < e.excluded.size(); ++i)
        out << (i ? ", " : "") << e.excluded[i];
      out << "\n";
    }
    out << "\n";
  }
  out << "[classes]\n";
  out << "# Invariant-class structure: strata in one class share an invariant locus.\n";
  for (int c = 0; c < ideal_class_count(); ++c) {
    out << "class: " << ideal_class_names()[c] << " dim " << ideal_class_dim(c)
        << " members:";
    for (const std::string& m : ideal_class_members(c)) out << " " << m;
    out << "\n";
  }
  out << "\n[specializations]\n";
  out << "# class < class: left lies in the closure of right (derived by sampled\n";
  out << "# ideal-membership; regenerate with tools/derive_edges).\n";
  for (int c = 0; c < ideal_class_count(); ++c)
    for (int b : ideal_class_below(c))
      out << ideal_class_names()[b] << " < " << ideal_class_names()[c] << "\n";
  return out.str();
}

namespace {

const std::vector<std::vector<int>>& below_table() {
  static const std::vector<std::vector<int>> table(
      static_cast<std::size_t>(ideal_class_count()));
  return table;
}

}  // namespace

}  // namespace qinv
