#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "acdkit/bounds.hpp"
#include "acdkit/numtheory.hpp"

using namespace acdkit;

namespace {

// Dense floating-point scan of the interval, independent of the rational sweep.
double float_min(bool use_f, double q, double lo, double hi) {
  double best = 1e300;
  const int steps = 200000;
  for (int i = 0; i <= steps; ++i) {
    double x = lo + (hi - lo) * i / steps;
    double v = use_f ? x * (x + q - 1) / (x * x + q - 1) : x * q / (x + q - 1);
    best = std::min(best, v);
  }
  return best;
}

}  // namespace

TEST_CASE("f and g") {
  CHECK(f_val(Rational(3), 7, 1) == Rational(9, 5));
  CHECK(g_val(Rational(3), 11, 1) == Rational(33, 13));
  CHECK(f_val(Rational(1), 5, 2) == Rational(1));
  CHECK(g_val(Rational(1), 3, 3) == Rational(1));
  CHECK(f_val(Rational(5), 29, 1) == Rational(165, 53));
  CHECK(f_val(Rational(3), 3, 3) == Rational(87, 35));
}

TEST_CASE("interval minima") {
  auto r1 = verify_lemma_2_1(1, 7);
  CHECK(r1.ok());
  CHECK(r1.observed_min == Rational(9, 5));
  CHECK(r1.argmin == Rational(3));
  auto r4 = verify_lemma_2_1(4, 11);
  CHECK(r4.ok());
  CHECK(r4.observed_min == Rational(33, 13));
  auto r3 = verify_lemma_2_1(3, 29);
  CHECK(r3.ok());
  CHECK(r3.observed_min == Rational(165, 53));
  CHECK(r3.argmin == Rational(5));
  auto r2 = verify_lemma_2_1(2, 11);
  CHECK(r2.ok());
  CHECK(r2.argmin == Rational(5));
  CHECK(r2.claimed_min == Rational(15, 7));
  CHECK(verify_lemma_2_1(5, 11).ok());
  CHECK(r1.to_json()["ok"] == true);
}

TEST_CASE("interval minima against a floating-point scan") {
  for (int item = 1; item <= 5; ++item)
    for (std::uint64_t q : {7, 9, 11, 13, 25, 27, 29, 31, 49, 81, 121, 125, 243, 343}) {
      if (q < lemma_2_1_min_q(item)) continue;
      auto r = verify_lemma_2_1(item, q, 16);
      double hi = static_cast<double>(q - 1) / (item == 3 ? 4 : 2);
      double lo = (item == 1 || item == 4) ? 3 : 5;
      double fm = float_min(item <= 3, static_cast<double>(q), lo, hi);
      CHECK_MESSAGE(std::abs(fm - r.claimed_min.to_double()) < 1e-9, "item ", item, " q ", q);
      CHECK(r.ok());
    }
}

TEST_CASE("hypotheses are enforced") {
  CHECK_THROWS(verify_lemma_2_1(3, 27));
  CHECK_THROWS(verify_lemma_2_1(1, 5));
  CHECK_THROWS(verify_lemma_2_1(1, 15));
  CHECK_THROWS(verify_lemma_2_1(1, 16));
  CHECK_THROWS(verify_lemma_2_1(6, 31));
  CHECK_THROWS(verify_lemma_2_1(1, 7, 0));
}

TEST_CASE("monotone prime-power sequences") {
  CHECK(lemma_2_2_value('f', 5, 1) == Rational(21, 13));
  CHECK(lemma_2_2_value('g', 7, 1) == Rational(7, 3));
  CHECK(lemma_2_2_value('h', 11, 1) == Rational(15, 7));
  CHECK_THROWS(lemma_2_2_value('z', 5, 1));
  for (char w : {'f', 'g', 'h'})
    for (std::uint64_t p : {3, 5, 7, 11, 13, 101}) CHECK(verify_lemma_2_2(w, p).ok());
  CHECK_FALSE(verify_lemma_2_2('f', 5, 2, 4).min_matches);
  CHECK_THROWS(verify_lemma_2_2('f', 4));
}

TEST_CASE("threshold classification examples") {
  auto c7 = classify(7, FieldSpec::cyclotomic(7));
  REQUIRE(c7.size() == 1);
  CHECK(c7[0].id == 4);
  CHECK(c7[0].threshold == Rational(7, 3));
  auto c21 = classify(7, FieldSpec::cyclotomic(21));
  REQUIRE(c21.size() == 1);
  CHECK(c21[0].id == 1);
  CHECK(c21[0].threshold == Rational(9, 5));
  auto c11 = classify(11, FieldSpec::full());
  REQUIRE(c11.size() == 1);
  CHECK(c11[0].id == 3);
  CHECK(c11[0].threshold == Rational(15, 7));
  auto c5 = classify(5, FieldSpec::cyclotomic(5));
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].id == 5);
  CHECK(c5[0].threshold == Rational(25, 9));
  auto c15 = classify(5, FieldSpec::cyclotomic(15));
  REQUIRE(c15.size() == 1);
  CHECK(c15[0].id == 2);
  CHECK(c15[0].threshold == Rational(27, 11));
  auto c3 = classify(3, FieldSpec::cyclotomic(39));
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].id == 6);
  CHECK(c3[0].metric == Metric::AcdK3Prime);
  CHECK(classify(3, FieldSpec::cyclotomic(3))[0].threshold == Rational(182, 61));
  CHECK(c3[0].name() == "T5.1-6");
  CHECK_THROWS(classify(9, FieldSpec::full()));
  CHECK_THROWS(classify(2, FieldSpec::full()));
}

TEST_CASE("classification is total and single-valued") {
  for (std::uint64_t p = 3; p <= 200; p += 2) {
    if (!is_prime(p)) continue;
    for (std::uint64_t m = 1; m <= 120; ++m) {
      auto k = FieldSpec::cyclotomic(m);
      auto cs = classify(p, k);
      CHECK_MESSAGE(cs.size() == 1, "p ", p, " m ", m);
      auto eff = effective_threshold(cs);
      if (p == 3) {
        CHECK(eff.threshold < Rational(3));
        CHECK(eff.metric == Metric::AcdK3Prime);
      } else {
        CHECK(eff.metric == Metric::AcdK);
        CHECK(eff.threshold < Rational(3));
        CHECK(Rational(1) < eff.threshold);
      }
    }
    CHECK(classify(p, FieldSpec::full()).size() == 1);
  }
  CHECK_THROWS(effective_threshold({}));
}

TEST_CASE("conditions") {
  auto c = case_conditions(13, FieldSpec::cyclotomic(6));
  CHECK(c.p_mod_3 == 1);
  CHECK(c.half == 6);
  CHECK(c.contains_3);
  CHECK(c.contains_half);
  CHECK(c.half_even);
  CHECK_FALSE(c.contains_13);
}
