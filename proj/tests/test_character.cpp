#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "acdkit/character.hpp"
#include "acdkit/constructions.hpp"
#include "acdkit/group_spec.hpp"
#include "acdkit/numtheory.hpp"

using namespace acdkit;
using cplx = std::complex<double>;

namespace {

cplx numeric(const CyclotomicNumber& v) {
  cplx s = 0;
  for (const auto& t : v.terms()) s += t.coeff.to_double() * std::polar(1.0, 2 * std::numbers::pi * t.exponent / static_cast<double>(v.order()));
  return s;
}

// Determinant over F_q by elimination.
std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t q) {
  const std::size_t n = a.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = (q - det) % q;
    }
    det = mulmod(det, a[c][c], q);
    std::uint64_t inv = invmod(a[c][c], q);
    for (std::size_t r = c + 1; r < n; ++r) {
      std::uint64_t f = mulmod(a[r][c], inv, q);
      for (std::size_t k = c; k < n; ++k) a[r][k] = (a[r][k] + q - mulmod(f, a[c][k], q)) % q;
    }
  }
  return det;
}

// Numeric column orthogonality: sum_chi chi(g) conj(chi(h)) = |C_G(g)| delta.
void check_columns_numerically(const CharacterTable& t) {
  const std::size_t r = t.classes.count();
  std::vector<std::vector<cplx>> x(r);
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& v : t.characters[i].values) x[i].push_back(numeric(v));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      cplx s = 0;
      for (std::size_t i = 0; i < r; ++i) s += x[i][a] * std::conj(x[i][b]);
      double expect = a == b ? static_cast<double>(t.group.order() / t.classes.sizes[a]) : 0.0;
      REQUIRE(std::abs(s - expect) < 1e-6);
    }
}

// Class function of the permutation action of G on itself by conjugation: the
// number of elements commuting with g. Its multiplicities are non-negative
// integers and reproduce the degree |G|.
void check_conjugation_character(const CharacterTable& t) {
  Character pi;
  pi.degree = static_cast<std::int64_t>(t.group.order());
  for (std::size_t c = 0; c < t.classes.count(); ++c)
    pi.values.push_back(CyclotomicNumber(static_cast<std::int64_t>(t.group.order() / t.classes.sizes[c])));
  Rational total;
  for (const auto& chi : t.characters) {
    Rational m = inner_product(t, pi, chi);
    REQUIRE(m.is_integer());
    REQUIRE(m.sign() >= 0);
    total += m * Rational(chi.degree);
  }
  CHECK(total == Rational(pi.degree));
}

}  // namespace

TEST_CASE("charpoly agrees with determinant evaluation") {
  const std::uint64_t q = 1000003;
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 2u, 5u, 9u}) {
    std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
    for (auto& row : a)
      for (auto& x : row) x = rng() % q;
    auto cp = detail::charpoly_mod(a, q);
    REQUIRE(cp.size() == n + 1);
    CHECK(cp.back() == 1);
    for (std::uint64_t x : {0ULL, 1ULL, 12345ULL, 999999ULL}) {
      auto m = a;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = ((i == j ? x : 0) + q - a[i][j]) % q;
      std::uint64_t v = 0;
      for (std::size_t k = cp.size(); k-- > 0;) v = (mulmod(v, x, q) + cp[k]) % q;
      CHECK(v == det_mod(m, q));
    }
  }
}

TEST_CASE("nullspace vectors are annihilated") {
  const std::uint64_t q = 101;
  std::vector<std::vector<std::uint64_t>> a{{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
  auto ns = detail::nullspace_mod(a, q);
  CHECK(ns.size() == 2);
  for (const auto& v : ns)
    for (const auto& row : a) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < row.size(); ++j) s = (s + row[j] * v[j]) % q;
      CHECK(s == 0);
    }
}

TEST_CASE("prime_one_mod") {
  auto q = detail::prime_one_mod(12, 100);
  CHECK(q == 109);
  CHECK(is_prime(q));
}

TEST_CASE("cyclic group characters are powers of a root of unity") {
  auto g = make_cyclic(12);
  for (bool shortcut : {true, false}) {
    GenericOptions o;
    o.abelian_shortcut = shortcut;
    auto t = generic_table(g, o);
    REQUIRE(t.size() == 12);
    // Every row is j -> zeta^(jk) for some k; collect the k's.
    std::vector<int> seen(12, 0);
    for (const auto& chi : t.characters) {
      CHECK(chi.degree == 1);
      auto gen_class = t.classes.class_of[1];
      const auto& v = chi.values[gen_class];
      int k = -1;
      for (int c = 0; c < 12; ++c)
        if (v == CyclotomicNumber::root_of_unity(12, c)) k = c;
      REQUIRE(k >= 0);
      seen[k]++;
      for (Element x = 0; x < 12; ++x) CHECK(chi.values[t.classes.class_of[x]] == CyclotomicNumber::root_of_unity(12, static_cast<std::int64_t>(k) * x));
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
  }
}

TEST_CASE("abelian shortcut and Dixon agree") {
  for (const char* spec : {"cyclic:30", "elab:3^3", "prod:cyclic:4*cyclic:6", "elab:2^4"}) {
    auto g = parse_group_spec(spec);
    GenericOptions off;
    off.abelian_shortcut = false;
    auto a = generic_table(g);
    auto b = generic_table(g, off);
    std::string why;
    CHECK_MESSAGE(tables_agree(a, b, &why), spec, ": ", why);
    CHECK(verify_table(b).ok);
  }
}

TEST_CASE("S3 table") {
  // S3 as affine group GL_1(3) |x F_3 is excluded (even |H|), so use a Cayley table.
  std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  auto idx = [&](const std::vector<int>& p) { return static_cast<Element>(std::find(perms.begin(), perms.end(), p) - perms.begin()); };
  std::vector<std::uint16_t> tab(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::vector<int> c(3);
      for (int k = 0; k < 3; ++k) c[k] = perms[j][perms[i][k]];
      tab[i * 6 + j] = static_cast<std::uint16_t>(idx(c));
    }
  auto g = make_explicit(6, tab, "S3");
  auto t = generic_table(g);
  REQUIRE(t.size() == 3);
  CHECK(t.characters[0].degree == 1);
  CHECK(t.characters[1].degree == 1);
  CHECK(t.characters[2].degree == 2);
  auto tr = t.classes.class_of[3];
  auto cyc = t.classes.class_of[1];
  CHECK(t.characters[2].values[tr] == CyclotomicNumber(0));
  CHECK(t.characters[2].values[cyc] == CyclotomicNumber(-1));
  auto verdict = verify_table(t);
  CHECK(verdict.ok);
  CHECK(verdict.orthogonality_method == "exact");
}

TEST_CASE("F21 table") {
  auto g = parse_group_spec("frob:7,1,3");
  REQUIRE(g.order() == 21);
  auto t = character_table(g);
  CHECK(t.provenance == TableProvenance::Clifford);
  REQUIRE(t.size() == 5);
  std::vector<std::int64_t> deg;
  for (const auto& c : t.characters) deg.push_back(c.degree);
  CHECK(deg == std::vector<std::int64_t>{1, 1, 1, 3, 3});
  // Values of the degree-3 characters on elements of order 7: the Gauss periods.
  auto eta1 = CyclotomicNumber::root_of_unity(7, 1) + CyclotomicNumber::root_of_unity(7, 2) + CyclotomicNumber::root_of_unity(7, 4);
  auto eta2 = eta1.conj();
  std::size_t c7 = 0;
  for (std::size_t c = 0; c < t.classes.count(); ++c)
    if (t.classes.rep_orders[c] == 7) c7 = c;
  REQUIRE(c7 != 0);
  const auto& v = t.characters[3].values[c7];
  CHECK((v == eta1 || v == eta2));
  CHECK(t.characters[4].values[c7] == v.conj());
  CHECK(conductor(v) == 7);
  CHECK(verify_table(t).ok);
  CHECK(tables_agree(t, generic_table(g)));
}

TEST_CASE("generic and Clifford engines agree") {
  for (const char* spec : {"frob:7,1,3", "frob:5,2,3", "frob:3,4,5", "frob:11,1,5", "frob:13,1,3", "frob:3,3,13", "nonab:3",
                           "affine:7,2,gens=2 0;0 1", "affine:3,2,gens=1 1;0 1", "affine:7,1,gens=2", "affine:5,3,gens=0 1 0;0 0 1;1 0 0"}) {
    auto g = parse_group_spec(spec);
    if (g.order() > 4096) continue;
    auto a = clifford_table(g);
    auto b = generic_table(g);
    std::string why;
    CHECK_MESSAGE(tables_agree(a, b, &why), spec, ": ", why);
    auto ca = verify_table(a);
    CHECK_MESSAGE(ca.ok, spec, ": ", (ca.failures.empty() ? std::string() : ca.failures.front()));
    REQUIRE(a.clifford);
    CHECK(a.clifford->origins.size() == a.size());
  }
}

TEST_CASE("tables pass independent numeric checks") {
  for (const char* spec : {"frob:5,2,3", "nonab:3", "prod:frob:7,1,3*cyclic:2", "affine:3,2,gens=1 1;0 1"}) {
    auto g = parse_group_spec(spec);
    auto t = character_table(g);
    check_columns_numerically(t);
    check_conjugation_character(t);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j) CHECK(inner_product(t, t.characters[i], t.characters[j]) == Rational(i == j ? 1 : 0));
  }
}

TEST_CASE("verify_table rejects damaged tables") {
  auto t = character_table(parse_group_spec("frob:7,1,3"));
  auto bad = t;
  bad.characters[3].values[1] = bad.characters[3].values[1] + CyclotomicNumber(1);
  CHECK_FALSE(verify_table(bad).ok);
  auto c = t.classes.class_of[1];
  if (!(t.characters[3].values[c] == t.characters[4].values[c])) {
    auto sw = t;
    std::swap(sw.characters[3].values[c], sw.characters[4].values[c]);
    CHECK_FALSE(verify_table(sw).ok);
  }
  auto missing = t;
  missing.characters.pop_back();
  CHECK_FALSE(verify_table(missing).ok);
}

TEST_CASE("modular orthogonality on a large table") {
  auto g = parse_group_spec("nonab:3");
  auto t = character_table(g);
  auto v = verify_table(t);
  CHECK(v.ok);
  CHECK(v.orthogonality_method == "modular");
  auto bad = t;
  // A consistent Galois orbit swap between two different rows keeps
  // integrality and stability but breaks orthogonality.
  bad.characters.back() = bad.characters[bad.size() - 2];
  CHECK_FALSE(verify_table(bad).ok);
}

TEST_CASE("kernels") {
  auto g = parse_group_spec("frob:5,2,3");
  auto t = character_table(g);
  auto dg = derived_subgroup(g);
  std::vector<Element> common;
  for (Element x = 0; x < g.order(); ++x) common.push_back(x);
  std::vector<Element> linear_common = common;
  for (const auto& chi : t.characters) {
    auto k = kernel_of(t, chi);
    CHECK(is_normal(g, k));
    std::vector<Element> tmp;
    std::set_intersection(common.begin(), common.end(), k.elements.begin(), k.elements.end(), std::back_inserter(tmp));
    common = tmp;
    if (chi.degree == 1) {
      tmp.clear();
      std::set_intersection(linear_common.begin(), linear_common.end(), k.elements.begin(), k.elements.end(), std::back_inserter(tmp));
      linear_common = tmp;
    }
  }
  CHECK(common.size() == 1);
  CHECK(linear_common == dg.elements);
}

TEST_CASE("field membership: conductor test and Galois test agree") {
  for (const char* spec : {"frob:7,1,3", "frob:5,2,3", "frob:13,1,3", "nonab:3", "cyclic:12"}) {
    auto t = character_table(parse_group_spec(spec));
    for (std::uint64_t m : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL, 7ULL, 12ULL, 13ULL, 21ULL}) {
      auto k = FieldSpec::cyclotomic(m);
      for (std::size_t i = 0; i < t.size(); ++i) CHECK(character_in_field(t, i, k) == character_in_field_galois(t, i, k));
    }
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(character_in_field(t, i, FieldSpec::full()));
  }
}

TEST_CASE("generic engine is deterministic across seeds") {
  auto g = parse_group_spec("frob:13,1,3");
  GenericOptions a, b;
  b.seed = 12345;
  CHECK(tables_agree(generic_table(g, a), generic_table(g, b)));
}
