#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "acdkit/constructions.hpp"
#include "acdkit/group_spec.hpp"
#include "acdkit/numtheory.hpp"
#include "acdkit/restricted.hpp"

using namespace acdkit;

namespace {

CharacterTable table_of(const std::string& spec) { return character_table(parse_group_spec(spec)); }

// t straight from its definition: lcm of the d | n with zeta_d in k.
std::uint64_t t_by_definition(std::uint64_t n, const FieldSpec& k) {
  std::uint64_t t = 1;
  for (auto d : divisors(n))
    if (lies_in_field(CyclotomicNumber::root_of_unity(d, 1), k)) t = lcm_u64(t, d);
  return t;
}

// Degree average over rows chosen by a predicate on (degree, values), without select().
Rational naive_average(const CharacterTable& t, std::optional<std::uint64_t> p, std::optional<std::uint64_t> m) {
  std::int64_t sum = 0, count = 0;
  for (const auto& chi : t.characters) {
    if (p && chi.degree % static_cast<std::int64_t>(*p) == 0 && chi.degree != 1) continue;
    bool in = true;
    if (m)
      for (const auto& v : chi.values) {
        // v in Q(zeta_m) iff v is fixed by every sigma_j with j = 1 mod lcm(2, m), j a unit mod the exponent.
        std::uint64_t e = t.classes.exponent;
        std::uint64_t r = lcm_u64(2, *m);
        for (std::uint64_t j = 1; j < 2 * e * r; j += 1) {
          if (gcd_u64(j, e) != 1 || j % r != 1 % r) continue;
          if (!(galois_apply(static_cast<std::int64_t>(j), v) == v)) in = false;
        }
      }
    if (!in && chi.degree != 1) continue;
    if (!in) continue;
    sum += chi.degree;
    ++count;
  }
  return Rational(sum, count);
}

}  // namespace

TEST_CASE("t matches its definition") {
  for (std::uint64_t n = 1; n <= 1000; n += 2)
    for (std::uint64_t m = 1; m <= 100; m += (n < 200 ? 1 : 7)) CHECK(compute_t(n, FieldSpec::cyclotomic(m)) == t_by_definition(n, FieldSpec::cyclotomic(m)));
  CHECK(compute_t(21, FieldSpec::cyclotomic(7)) == 7);
  CHECK(compute_t(21, FieldSpec::full()) == 21);
  CHECK(compute_t(351, FieldSpec::cyclotomic(39)) == 39);
}

TEST_CASE("selection on the order-21 group") {
  auto t = table_of("frob:7,1,3");
  RestrictedSelection by_p{3, std::nullopt};
  auto s = select(t, by_p);
  CHECK(s.size() == 3);
  for (auto i : s) CHECK(t.characters[i].degree == 1);
  RestrictedSelection by_k{std::nullopt, FieldSpec::cyclotomic(7)};
  auto sk = select(t, by_k);
  REQUIRE(sk.size() == 3);
  CHECK(t.characters[sk[0]].degree == 1);
  CHECK(t.characters[sk[1]].degree == 3);
  CHECK(t.characters[sk[2]].degree == 3);
  CHECK(select(t, {}).size() == t.size());
}

TEST_CASE("acd values") {
  auto f21 = table_of("frob:7,1,3");
  CHECK(acd(f21, {}).average == Rational(9, 5));
  auto r = acd(f21, {std::nullopt, FieldSpec::cyclotomic(7)});
  CHECK(r.average == Rational(7, 3));
  CHECK(r.average * Rational(static_cast<std::int64_t>(r.count)) == r.degree_sum);
  CHECK(r.t == 7);
  REQUIRE(r.l);
  CHECK(*r.l == 1);
  CHECK(acd(table_of("frob:11,1,5"), {}).average == Rational(15, 7));
  for (const char* spec : {"cyclic:15", "elab:3^3", "prod:cyclic:3*cyclic:9"}) CHECK(acd(table_of(spec), {}).average == Rational(1));
  auto j = to_json(r);
  CHECK(j["acd"] == "7/3");
  CHECK(j["count"] == 3);
}

TEST_CASE("selection agrees with a Galois-fixedness oracle") {
  for (const char* spec : {"frob:7,1,3", "frob:5,2,3", "frob:13,1,3", "prod:cyclic:3*frob:7,1,3"}) {
    auto t = table_of(spec);
    for (std::uint64_t m : {1, 3, 5, 7, 13, 21, 39}) {
      for (std::optional<std::uint64_t> p : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{3}, std::optional<std::uint64_t>{7}}) {
        RestrictedSelection sel{p, FieldSpec::cyclotomic(m)};
        CHECK_MESSAGE(acd(t, sel).average == naive_average(t, p, m), spec, " m=", m);
      }
    }
  }
}

TEST_CASE("Frobenius closed form") {
  CHECK(frobenius_acd_formula(3, 7, 1, 3) == Rational(9, 5));
  CHECK(frobenius_acd_formula(3, 7, 1, 1) == Rational(7, 3));
  CHECK(frobenius_acd_formula(13, 3, 3, 13) == Rational(13, 5));
  CHECK_THROWS(frobenius_acd_formula(4, 5, 1, 1));
  CHECK_THROWS(frobenius_acd_formula(3, 7, 1, 2));
  for (const char* spec : {"frob:7,1,3", "frob:5,2,3", "frob:13,1,3", "frob:3,3,13", "frob:31,1,5"}) {
    auto t = table_of(spec);
    const auto* A = t.group.affine();
    const auto h = A->h_order();
    for (std::uint64_t m : {1, 3, 5, 13, 15, 39}) {
      auto k = FieldSpec::cyclotomic(lcm_u64(m, A->p));
      auto l = gcd_u64(compute_t(t.group.order(), k), h);
      CHECK_MESSAGE(acd(t, {std::nullopt, k}).average == frobenius_acd_formula(h, A->p, A->a, l), spec, " m=", m);
      CHECK(acd(t, {A->p, k}).average == acd(t, {std::nullopt, k}).average);
    }
  }
}

TEST_CASE("A^k and A^p") {
  auto f21 = table_of("frob:7,1,3");
  CHECK(A_k(f21, FieldSpec::full()) == derived_subgroup(f21.group));
  CHECK(A_k(f21, FieldSpec::cyclotomic(7)).size() == 21);
  CHECK(A_k(table_of("cyclic:3"), FieldSpec::cyclotomic(3)).size() == 1);
  CHECK(A_p(f21, 3).size() == 7);
  CHECK(A_p(f21, 7).size() == 21);
  CHECK(A_p(table_of("elab:5^2"), 5).size() == 1);
  auto c9 = table_of("cyclic:9");
  CHECK(A_p(c9, 3) == A_p_direct(c9.group, 3));
  CHECK(A_p(c9, 3).size() == 3);
}

TEST_CASE("A^k identities") {
  for (const char* spec : {"frob:7,1,3", "cyclic:9", "frob:5,2,3", "prod:cyclic:3*frob:7,1,3", "affine:3,2,gens=1 1;0 1", "nonab:3"}) {
    auto rep = identity_checks(table_of(spec));
    for (const auto& it : rep.items) CHECK_MESSAGE(it.ok, spec, ": ", it.name, " ", it.detail);
  }
}

TEST_CASE("minimal normal subgroups") {
  auto g = parse_group_spec("prod:cyclic:3*frob:7,1,3");
  auto mins = minimal_normal_subgroups(g, conjugacy_classes(g));
  std::vector<std::uint64_t> sizes;
  for (const auto& m : mins) sizes.push_back(m.size());
  std::sort(sizes.begin(), sizes.end());
  // C3 x F21: the C3 factor, the C7 and the diagonal-free candidates of order 3 in the centre.
  CHECK(sizes.front() == 3);
  CHECK(sizes.back() == 7);
  for (const auto& m : mins) CHECK(is_normal(g, m));
}

TEST_CASE("quotient monotonicity") {
  {
    auto t = table_of("prod:cyclic:3*frob:7,1,3");
    auto rep = quotient_monotonicity_check(t, {3, std::nullopt});
    CHECK(rep.ok);
    CHECK_FALSE(rep.items.empty());
  }
  {
    auto t = table_of("prod:cyclic:5*frob:7,1,3");
    auto rep = quotient_monotonicity_check(t, {7, FieldSpec::cyclotomic(7)});
    CHECK(rep.ok);
    CHECK_FALSE(rep.items.empty());
  }
  {
    auto t = table_of("prod:cyclic:3*cyclic:9");
    auto rep = quotient_monotonicity_check(t, {3, std::nullopt});
    CHECK(rep.ok);
    for (const auto& it : rep.items) CHECK(it.detail.find("acd(G/K) = 1/1") != std::string::npos);
  }
}
