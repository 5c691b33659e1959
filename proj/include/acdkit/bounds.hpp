#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acdkit/cyclotomic.hpp"
#include "acdkit/rational.hpp"
#include "json.hpp"

namespace acdkit {

/// x (x + q - 1) / (x^2 + q - 1) with q = p^a.
Rational f_val(const Rational& x, std::uint64_t p, unsigned a);
/// x q / (x + q - 1) with q = p^a.
Rational g_val(const Rational& x, std::uint64_t p, unsigned a);

/// Sweep of one of the five interval minima for f and g over all rationals
/// with denominator <= D.
struct SweepReport {
  int item = 0;
  std::uint64_t q = 0;
  std::uint64_t denominator_bound = 0;
  Rational lo, hi;
  Rational claimed_min;
  Rational observed_min;
  Rational argmin;
  std::uint64_t samples = 0;
  bool attained = false;           // claimed value equals the function at the stated endpoint
  std::vector<std::string> violations;

  bool ok() const { return attained && violations.empty(); }
  nlohmann::json to_json() const;
};

/// Smallest q for which item 1..5 is stated.
std::uint64_t lemma_2_1_min_q(int item);
/// Throws std::invalid_argument when q is not an odd prime power or is below
/// the item's hypothesis.
SweepReport verify_lemma_2_1(int item, std::uint64_t q, std::uint64_t denominator_bound = 64);

/// 3(p^x+2)/(p^x+8), 3p^x/(p^x+2), 3(p^x-1)/(p^x+3).
Rational lemma_2_2_value(char which, std::uint64_t p, unsigned x);

struct MonotoneReport {
  char which = 'f';
  std::uint64_t p = 0;
  unsigned x_lo = 1, x_hi = 8;
  std::vector<Rational> values;
  Rational claimed_min;
  bool increasing = false;
  bool min_matches = false;

  bool ok() const { return increasing && min_matches; }
  nlohmann::json to_json() const;
};

MonotoneReport verify_lemma_2_2(char which, std::uint64_t p, unsigned x_lo = 1, unsigned x_hi = 8);

enum class Metric { AcdK, AcdK3Prime };
const char* to_string(Metric m);

/// Facts about (p, k) that decide which hypotheses apply.
struct CaseConditions {
  std::uint64_t p_mod_3 = 0;
  std::uint64_t half = 0;          // (p - 1) / 2
  bool contains_3 = false;
  bool contains_half = false;
  bool half_even = false;
  bool contains_13 = false;
};

struct ThresholdCase {
  int id = 0;  // 1..7
  Metric metric = Metric::AcdK;
  Rational threshold;
  CaseConditions conditions;

  std::string name() const;  // "T5.1-<id>"
};

CaseConditions case_conditions(std::uint64_t p, const FieldSpec& k);
/// Every applicable hypothesis for odd p and field k.
std::vector<ThresholdCase> classify(std::uint64_t p, const FieldSpec& k);
/// Largest threshold among the given cases; throws on an empty list.
ThresholdCase effective_threshold(const std::vector<ThresholdCase>& cases);

}  // namespace acdkit
