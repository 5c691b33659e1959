#include "acdkit/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "acdkit/numtheory.hpp"

namespace acdkit {

namespace {

Rational R(std::uint64_t v) { return Rational(static_cast<std::int64_t>(v)); }

bool is_odd_prime_power(std::uint64_t q) {
  if (q < 3 || q % 2 == 0) return false;
  return prime_divisors(q).size() == 1;
}

Rational f_q(const Rational& x, std::uint64_t q) { return x * (x + R(q - 1)) / (x * x + R(q - 1)); }
Rational g_q(const Rational& x, std::uint64_t q) { return x * R(q) / (x + R(q - 1)); }

}  // namespace

Rational f_val(const Rational& x, std::uint64_t p, unsigned a) { return f_q(x, ipow(p, a)); }
Rational g_val(const Rational& x, std::uint64_t p, unsigned a) { return g_q(x, ipow(p, a)); }

std::uint64_t lemma_2_1_min_q(int item) {
  switch (item) {
    case 1: return 7;
    case 2: return 11;
    case 3: return 29;
    case 4: return 11;
    case 5: return 11;
    default: throw std::invalid_argument("lemma 2.1: item must be 1..5");
  }
}

SweepReport verify_lemma_2_1(int item, std::uint64_t q, std::uint64_t denominator_bound) {
  const std::uint64_t min_q = lemma_2_1_min_q(item);
  if (!is_odd_prime_power(q)) throw std::invalid_argument("lemma 2.1: " + std::to_string(q) + " is not an odd prime power");
  if (q < min_q)
    throw std::invalid_argument("lemma 2.1 item " + std::to_string(item) + " needs p^a >= " + std::to_string(min_q) + ", got " +
                                std::to_string(q));
  if (denominator_bound == 0) throw std::invalid_argument("lemma 2.1: denominator bound must be positive");

  SweepReport r;
  r.item = item;
  r.q = q;
  r.denominator_bound = denominator_bound;
  const Rational Q = R(q);
  bool use_f = item <= 3;
  Rational endpoint;
  switch (item) {
    case 1:
      r.lo = 3, r.hi = Rational(static_cast<std::int64_t>(q - 1), 2);
      r.claimed_min = Rational(3) * (Q + 2) / (Q + 8);
      endpoint = r.lo;
      break;
    case 2:
      r.lo = 5, r.hi = Rational(static_cast<std::int64_t>(q - 1), 2);
      r.claimed_min = Rational(3) * (Q - 1) / (Q + 3);
      endpoint = r.hi;
      break;
    case 3:
      r.lo = 5, r.hi = Rational(static_cast<std::int64_t>(q - 1), 4);
      r.claimed_min = Rational(5) * (Q + 4) / (Q + 24);
      endpoint = r.lo;
      break;
    case 4:
      r.lo = 3, r.hi = Rational(static_cast<std::int64_t>(q - 1), 2);
      r.claimed_min = Rational(3) * Q / (Q + 2);
      endpoint = r.lo;
      break;
    default:
      r.lo = 5, r.hi = Rational(static_cast<std::int64_t>(q - 1), 2);
      r.claimed_min = Rational(5) * Q / (Q + 4);
      endpoint = r.lo;
      break;
  }
  auto fn = [&](const Rational& x) { return use_f ? f_q(x, q) : g_q(x, q); };
  r.attained = fn(endpoint) == r.claimed_min;

  bool first = true;
  auto consider = [&](const Rational& x) {
    Rational v = fn(x);
    ++r.samples;
    if (first || v < r.observed_min) {
      r.observed_min = v;
      r.argmin = x;
      first = false;
    }
    if (v < r.claimed_min && r.violations.size() < 10) r.violations.push_back("value " + v.fraction_str() + " at x = " + x.fraction_str());
  };
  // Both endpoints are sampled even when their denominators exceed D.
  consider(r.lo);
  consider(r.hi);
  for (std::uint64_t d = 1; d <= denominator_bound; ++d) {
    const auto dd = static_cast<std::int64_t>(d);
    Rational lo_scaled = r.lo * Rational(dd);
    Rational hi_scaled = r.hi * Rational(dd);
    // Numerators n with lo <= n/d <= hi and gcd(n, d) = 1.
    std::int64_t n0 = (lo_scaled.small_num() + lo_scaled.small_den() - 1) / lo_scaled.small_den();
    std::int64_t n1 = hi_scaled.small_num() / hi_scaled.small_den();
    for (std::int64_t n = n0; n <= n1; ++n)
      if (std::gcd(n, dd) == 1) consider(Rational(n, dd));
  }
  return r;
}

nlohmann::json SweepReport::to_json() const {
  nlohmann::json j;
  j["lemma"] = "2.1";
  j["item"] = item;
  j["pa"] = q;
  j["denominatorBound"] = denominator_bound;
  j["interval"] = {lo.fraction_str(), hi.fraction_str()};
  j["claimedMin"] = claimed_min.fraction_str();
  j["observedMin"] = observed_min.fraction_str();
  j["argmin"] = argmin.fraction_str();
  j["samples"] = samples;
  j["attained"] = attained;
  j["violations"] = violations;
  j["ok"] = ok();
  return j;
}

Rational lemma_2_2_value(char which, std::uint64_t p, unsigned x) {
  const Rational P = R(ipow(p, x));
  switch (which) {
    case 'f': return Rational(3) * (P + 2) / (P + 8);
    case 'g': return Rational(3) * P / (P + 2);
    case 'h': return Rational(3) * (P - 1) / (P + 3);
    default: throw std::invalid_argument(std::string("lemma 2.2: unknown function '") + which + "'");
  }
}

MonotoneReport verify_lemma_2_2(char which, std::uint64_t p, unsigned x_lo, unsigned x_hi) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("lemma 2.2: p must be an odd prime");
  if (x_lo < 1 || x_hi < x_lo) throw std::invalid_argument("lemma 2.2: bad exponent range");
  MonotoneReport r;
  r.which = which;
  r.p = p;
  r.x_lo = x_lo;
  r.x_hi = x_hi;
  for (unsigned x = x_lo; x <= x_hi; ++x) r.values.push_back(lemma_2_2_value(which, p, x));
  r.increasing = true;
  for (std::size_t i = 1; i < r.values.size(); ++i)
    if (!(r.values[i - 1] < r.values[i])) r.increasing = false;
  const Rational P = R(p);
  switch (which) {
    case 'f': r.claimed_min = Rational(3) * (P + 2) / (P + 8); break;
    case 'g': r.claimed_min = Rational(3) * P / (P + 2); break;
    default: r.claimed_min = Rational(3) * (P - 1) / (P + 3); break;
  }
  r.min_matches = x_lo == 1 && *std::min_element(r.values.begin(), r.values.end()) == r.claimed_min;
  return r;
}

nlohmann::json MonotoneReport::to_json() const {
  nlohmann::json j;
  j["lemma"] = "2.2";
  j["function"] = std::string(1, which);
  j["p"] = p;
  j["exponents"] = {x_lo, x_hi};
  std::vector<std::string> v;
  for (const auto& x : values) v.push_back(x.fraction_str());
  j["values"] = v;
  j["claimedMin"] = claimed_min.fraction_str();
  j["increasing"] = increasing;
  j["minMatches"] = min_matches;
  j["ok"] = ok();
  return j;
}

const char* to_string(Metric m) { return m == Metric::AcdK ? "acd_k" : "acd_k3'"; }

std::string ThresholdCase::name() const { return "T5.1-" + std::to_string(id); }

CaseConditions case_conditions(std::uint64_t p, const FieldSpec& k) {
  CaseConditions c;
  c.p_mod_3 = p % 3;
  c.half = (p - 1) / 2;
  c.contains_3 = k.contains_roots_of_unity(3);
  c.contains_half = k.contains_roots_of_unity(c.half);
  c.half_even = c.half % 2 == 0;
  c.contains_13 = k.contains_roots_of_unity(13);
  return c;
}

std::vector<ThresholdCase> classify(std::uint64_t p, const FieldSpec& k) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("classify: p must be an odd prime");
  const CaseConditions c = case_conditions(p, k);
  const Rational P = R(p), P2 = R(p * p);
  std::vector<ThresholdCase> out;
  auto push = [&](int id, Metric m, Rational th) { out.push_back({id, m, std::move(th), c}); };
  const bool half_clause = !c.contains_half || c.half_even;
  if (c.p_mod_3 == 1 && c.contains_3) push(1, Metric::AcdK, Rational(3) * (P + 2) / (P + 8));
  if (c.p_mod_3 == 2 && c.contains_3 && half_clause) push(2, Metric::AcdK, Rational(3) * (P2 + 2) / (P2 + 8));
  if (c.p_mod_3 == 2 && c.contains_half && !c.half_even) push(3, Metric::AcdK, Rational(3) * (P - 1) / (P + 3));
  if (c.p_mod_3 == 1 && !c.contains_3) push(4, Metric::AcdK, Rational(3) * P / (P + 2));
  if (c.p_mod_3 == 2 && !c.contains_3 && half_clause) push(5, Metric::AcdK, Rational(3) * P2 / (P2 + 2));
  if (p == 3 && c.contains_13) push(6, Metric::AcdK3Prime, Rational(13, 5));
  if (p == 3 && !c.contains_13) push(7, Metric::AcdK3Prime, Rational(182, 61));
  return out;
}

ThresholdCase effective_threshold(const std::vector<ThresholdCase>& cases) {
  if (cases.empty()) throw std::invalid_argument("effective_threshold: no applicable case");
  return *std::max_element(cases.begin(), cases.end(), [](const ThresholdCase& a, const ThresholdCase& b) { return a.threshold < b.threshold; });
}

}  // namespace acdkit
