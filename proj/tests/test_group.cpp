#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "acdkit/constructions.hpp"
#include "acdkit/group.hpp"
#include "acdkit/group_spec.hpp"
#include "acdkit/numtheory.hpp"

using namespace acdkit;

namespace {

// Brute-force conjugacy classes: orbit of x under conjugation by every element.
std::set<std::set<Element>> naive_classes(const FiniteGroup& g) {
  std::set<std::set<Element>> out;
  for (Element x = 0; x < g.order(); ++x) {
    std::set<Element> c;
    for (Element y = 0; y < g.order(); ++y) c.insert(g.conj(x, y));
    out.insert(c);
  }
  return out;
}

std::set<std::set<Element>> engine_classes(const FiniteGroup& g) {
  auto cs = conjugacy_classes(g);
  std::set<std::set<Element>> out;
  for (const auto& m : cs.members()) out.insert(std::set<Element>(m.begin(), m.end()));
  return out;
}

// Affine product computed directly from the matrices.
Element affine_mul_oracle(const FiniteGroup& g, Element x, Element y) {
  const AffineData& A = *g.affine();
  auto h1 = g.affine_h_part(x), h2 = g.affine_h_part(y);
  auto v1 = A.digits(g.affine_v_part(x)), v2 = A.digits(g.affine_v_part(y));
  const Matrix& m1 = A.h_elements[h1];
  const Matrix& m2 = A.h_elements[h2];
  Matrix prod(A.a * A.a, 0);
  for (unsigned i = 0; i < A.a; ++i)
    for (unsigned j = 0; j < A.a; ++j) {
      std::uint64_t s = 0;
      for (unsigned k = 0; k < A.a; ++k) s += static_cast<std::uint64_t>(m1[i * A.a + k]) * m2[k * A.a + j];
      prod[i * A.a + j] = static_cast<std::uint32_t>(s % A.p);
    }
  auto hit = std::find(A.h_elements.begin(), A.h_elements.end(), prod);
  std::vector<std::uint32_t> w(A.a);
  for (unsigned j = 0; j < A.a; ++j) {
    std::uint64_t s = v2[j];
    for (unsigned i = 0; i < A.a; ++i) s += static_cast<std::uint64_t>(v1[i]) * m2[i * A.a + j];
    w[j] = static_cast<std::uint32_t>(s % A.p);
  }
  return g.affine_element(static_cast<std::uint32_t>(hit - A.h_elements.begin()), A.encode(w));
}

std::uint64_t pprime_part(std::uint64_t n, std::uint64_t p) { return coprime_part(n, p); }

}  // namespace

TEST_CASE("explicit constructors") {
  auto c6 = make_cyclic(9);
  CHECK(c6.order() == 9);
  CHECK(is_abelian(c6));
  CHECK(conjugacy_classes(c6).count() == 9);
  CHECK(exponent(c6) == 9);
  auto e = make_elementary_abelian(3, 2);
  CHECK(e.order() == 9);
  CHECK(exponent(e) == 3);
  auto prod = make_direct_product(make_cyclic(3), frobenius_cyclic(7, 1, 3));
  CHECK(prod.order() == 63);
  CHECK(conjugacy_classes(prod).count() == 15);
  CHECK_THROWS(make_explicit(2, {0, 1, 1, 1}, "bad"));
  CHECK_THROWS(make_direct_product(make_cyclic(100), make_cyclic(100)));
}

TEST_CASE("affine multiplication matches matrix arithmetic") {
  std::mt19937_64 rng(7);
  for (const char* spec : {"frob:7,1,3", "frob:5,2,3", "affine:3,2,gens=1 1;0 1", "nonab:3", "affine:7,2,gens=2 0;0 4"}) {
    auto g = parse_group_spec(spec);
    for (int t = 0; t < 300; ++t) {
      Element x = static_cast<Element>(rng() % g.order()), y = static_cast<Element>(rng() % g.order()), z = static_cast<Element>(rng() % g.order());
      CHECK(g.mul(x, y) == affine_mul_oracle(g, x, y));
      CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
      CHECK(g.mul(x, g.inv(x)) == 0);
      CHECK(g.mul(g.inv(x), x) == 0);
    }
    CHECK(generate_subgroup(g, g.generators()).size() == g.order());
  }
}

TEST_CASE("conjugacy classes agree with brute force") {
  for (const char* spec : {"frob:7,1,3", "frob:11,1,5", "frob:5,2,3", "affine:3,2,gens=1 1;0 1", "prod:cyclic:3*frob:7,1,3",
                           "affine:7,2,gens=2 0;0 1", "elab:3^3"}) {
    auto g = parse_group_spec(spec);
    CHECK_MESSAGE(engine_classes(g) == naive_classes(g), spec);
    auto cs = conjugacy_classes(g);
    CHECK(cs.representatives[0] == 0);
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < cs.count(); ++c) {
      total += cs.sizes[c];
      CHECK(g.order() % cs.sizes[c] == 0);
      CHECK(cs.rep_orders[c] == element_order(g, cs.representatives[c]));
      CHECK(cs.class_of[g.inv(cs.representatives[c])] == cs.inverse_class[c]);
      for (auto& [q, map] : cs.prime_power_maps) CHECK(map[c] == cs.class_of[g.pow(cs.representatives[c], static_cast<std::int64_t>(q))]);
    }
    CHECK(total == g.order());
    CHECK(cs.exponent == exponent(g));
  }
  auto f21 = frobenius_cyclic(7, 1, 3);
  auto cs = conjugacy_classes(f21);
  std::vector<std::uint64_t> sizes = cs.sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::uint64_t>{1, 3, 3, 7, 7});
}

TEST_CASE("derived subgroup, center, normality, quotient") {
  auto g = frobenius_cyclic(7, 1, 3);
  auto d = derived_subgroup(g);
  CHECK(d.size() == 7);
  // oracle: closure of all commutators
  std::vector<Element> comms;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) comms.push_back(g.commutator(x, y));
  CHECK(generate_subgroup(g, comms) == d);
  CHECK(is_normal(g, d));
  CHECK(center(g).size() == 1);
  auto q = quotient(g, d);
  CHECK(q.group.order() == 3);
  CHECK(is_abelian(q.group));
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); y += 5) CHECK(q.projection[g.mul(x, y)] == q.group.mul(q.projection[x], q.projection[y]));
  auto p = make_direct_product(make_cyclic(5), g);
  CHECK(center(p).size() == 5);
  CHECK(derived_subgroup(p).size() == 7);
  Subgroup h3 = generate_subgroup(g, {g.generators()[0]});
  CHECK(h3.size() == 3);
  CHECK_FALSE(is_normal(g, h3));
  CHECK_THROWS(quotient(g, h3));
  auto emb = subgroup_as_group(g, h3);
  CHECK(emb.group.order() == 3);
  CHECK(is_abelian(emb.group));
}

TEST_CASE("normal p-complements agree with the naive oracle") {
  for (const char* spec : {"frob:7,1,3", "frob:5,2,3", "frob:11,1,5", "prod:cyclic:3*frob:7,1,3", "affine:3,2,gens=1 1;0 1",
                           "affine:7,2,gens=2 0;0 1", "frob:3,3,13", "cyclic:15", "elab:5^2"}) {
    auto g = parse_group_spec(spec);
    auto cs = conjugacy_classes(g);
    for (auto p : prime_divisors(g.order())) {
      std::vector<Element> pprime;
      for (Element x = 0; x < g.order(); ++x)
        if (element_order(g, x) % p != 0) pprime.push_back(x);
      auto closure = generate_subgroup(g, pprime);
      bool oracle = closure.size() == pprime_part(g.order(), p);
      auto res = has_normal_p_complement(g, cs, p);
      CHECK_MESSAGE(res.has_value() == oracle, spec << " p=" << p);
      if (res) {
        CHECK(is_normal(g, *res));
        CHECK(is_subgroup(g, *res));
        CHECK(res->size() == pprime_part(g.order(), p));
      }
    }
  }
  auto f21 = frobenius_cyclic(7, 1, 3);
  CHECK(has_normal_p_complement(f21, 3).has_value());
  CHECK_FALSE(has_normal_p_complement(f21, 7).has_value());
  CHECK(has_normal_p_complement(f21, 5).has_value());
}

TEST_CASE("frobenius constructions") {
  for (auto [p, a, h] : std::vector<std::tuple<std::uint64_t, unsigned, std::uint64_t>>{{7, 1, 3}, {5, 2, 3}, {3, 3, 13}, {3, 4, 5}, {3, 5, 11}, {29, 2, 3}, {7, 3, 19}}) {
    auto g = frobenius_cyclic(p, a, h);
    const AffineData& A = *g.affine();
    CHECK(A.h_order() == h);
    CHECK(g.order() == h * ipow(p, a));
    // fixed-point-free: nontrivial h fixes only the zero vector
    for (std::uint32_t x = 1; x < A.h_order(); ++x)
      for (std::uint32_t v = 1; v < A.q; ++v) REQUIRE(A.apply(x, v) != v);
    CHECK(is_irreducible_module(p, a, A.h_generators));
  }
  CHECK_THROWS(frobenius_cyclic(7, 2, 3));   // reducible: 3 | 7 - 1
  CHECK_THROWS(frobenius_cyclic(7, 1, 2));   // even
  CHECK_THROWS(frobenius_cyclic(7, 1, 5));   // 5 does not divide 6
  CHECK_THROWS(example1(5));
  CHECK_THROWS(example2(7));
  CHECK_THROWS(example2(11));
  CHECK_THROWS(example3(5));
  CHECK(example1(13).order() == 39);
  CHECK(example2(17).order() == 867);
  CHECK(example3(23).order() == 253);
  CHECK_FALSE(is_irreducible_module(7, 2, {Matrix{2, 0, 0, 1}}));
}

TEST_CASE("affine validation") {
  auto c5 = make_affine(5, 1, {Matrix{1}}, AffineOptions{true, true});
  CHECK(c5.order() == 5);
  CHECK(is_abelian(c5));
  CHECK_THROWS(make_affine(3, 1, {Matrix{2}}));   // |H| = 2
  CHECK_THROWS(make_affine(2, 1, {}));
  CHECK_THROWS(make_affine(7, 2, {Matrix{2, 0, 0, 1}}, AffineOptions{true, false}));
  CHECK_THROWS(make_affine(7, 2, {Matrix{1, 1, 1, 1}}));
}

TEST_CASE("nonabelian F21 instances and dual orbits") {
  CHECK(nonabelian_H_instances(15308).empty());
  CHECK(nonabelian_H_instances(15309).size() == 1);
  auto g = nonabelian_f21(3);
  CHECK(g.order() == 15309);
  CHECK_FALSE(is_abelian(g.affine_h()));
  CHECK(is_irreducible_module(3, 6, g.affine()->h_generators));
  auto oa = orbit_analysis(g);
  std::size_t len7 = 0;
  for (const auto& o : oa.orbits) {
    if (o.length == 7) {
      ++len7;
      CHECK(o.stabilizer.size() == 3);
      CHECK(o.core_free);
      CHECK(o.coprime_to_p);
    }
  }
  CHECK(len7 == 8);
  CHECK(oa.regular_count() == 32);
  CHECK(orbit_analysis(g, DualConvention::Transpose).length_multiset() == oa.length_multiset());
  CHECK(orbit_analysis(g, DualConvention::Natural).length_multiset() == oa.length_multiset());
  CHECK(conjugacy_classes(g).count() == 61);
}

TEST_CASE("group spec grammar") {
  CHECK(parse_group_spec("cyclic:7").order() == 7);
  CHECK(parse_group_spec("elab:3^2").order() == 9);
  CHECK(parse_group_spec("frob:7,1,3").name() == "frob:7,1,3");
  CHECK(parse_group_spec("prod:cyclic:3*cyclic:5").order() == 15);
  CHECK(parse_group_spec("prod:cyclic:3*cyclic:5*cyclic:7").order() == 105);
  CHECK(parse_group_spec("affine:5,2,gens=1 1;0 1").order() == 125);
  CHECK(parse_group_spec("affine:5,1,gens=").order() == 5);
  CHECK_THROWS(parse_group_spec("cyclic"));
  CHECK_THROWS(parse_group_spec("frob:7,1"));
  CHECK_THROWS(parse_group_spec("bogus:3"));
  CHECK_THROWS(parse_group_spec("affine:5,2,gens=1 1;0"));
}
