#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "acdkit/rational.hpp"

namespace acdkit {

/// Coefficient of zeta_n^exponent in a canonical expansion.
struct CycloTerm {
  std::uint32_t exponent = 0;
  Rational coeff;

  friend bool operator==(const CycloTerm&, const CycloTerm&) = default;
};

/// Element of a cyclotomic field Q(zeta_n).
///
/// Values are always stored in canonical form: the expansion uses the
/// Zumbroich basis of Q(zeta_f) where f is the conductor of the value, so two
/// values are equal exactly when their orders and term lists agree. Mixed-order
/// arithmetic coerces through the lcm of the orders.
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;
  CyclotomicNumber(const Rational& r);  // NOLINT(google-explicit-constructor)
  CyclotomicNumber(std::int64_t r);     // NOLINT(google-explicit-constructor)

  /// zeta_n^k.
  static CyclotomicNumber root_of_unity(std::uint64_t n, std::int64_t k);

  /// Conductor of the value; 1 for rationals.
  std::uint64_t order() const noexcept { return order_; }
  std::span<const CycloTerm> terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept { return order_ == 1; }
  std::optional<Rational> as_rational() const;
  /// True when every coefficient is an integer (the value is an algebraic integer).
  bool is_integral() const;

  CyclotomicNumber conj() const;

  /// "n=7: z^1 + z^2 + z^4"; rationals render as "num/den" or "num".
  std::string str() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const Rational& r);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  /// Structural total order, used only to make sorts deterministic.
  friend bool structural_less(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  friend class CycloAccumulator;
  std::uint64_t order_ = 1;
  std::vector<CycloTerm> terms_;
};

/// Dense scratch space for building values at a fixed ambient order n.
///
/// Add terms (any exponents, reduced mod n), then take() the canonical value.
/// The buffer is reset by take() and can be reused.
class CycloAccumulator {
 public:
  explicit CycloAccumulator(std::uint64_t n);

  std::uint64_t order() const noexcept { return n_; }
  void add(std::int64_t exponent, const Rational& c);
  void add(std::int64_t exponent, std::int64_t c);
  /// Adds zeta_n^shift * v; v.order() must divide n.
  void add_shifted(const CyclotomicNumber& v, std::int64_t shift, const Rational& scale = Rational(1));

  /// Canonical expansion in the Zumbroich basis of Q(zeta_n), not reduced to
  /// the conductor. Resets the buffer.
  std::vector<CycloTerm> take_expansion();
  /// Canonical value. Resets the buffer.
  CyclotomicNumber take();

 private:
  void touch(std::uint64_t i);
  void basis_rewrite();

  std::uint64_t n_;
  std::vector<Rational> coef_;
  std::vector<char> touched_flag_;
  std::vector<std::uint32_t> touched_;
};

/// Canonicalises sum_i c_i zeta_n^{e_i}.
CyclotomicNumber normalize(std::uint64_t n, std::span<const std::pair<std::int64_t, Rational>> raw);
/// Canonicalises sum_k counts[k] zeta_n^k.
CyclotomicNumber from_exponent_counts(std::uint64_t n, std::span<const std::int64_t> counts);
/// Expansion of v in the Zumbroich basis of Q(zeta_n); v.order() must divide n.
std::vector<CycloTerm> expand_in_order(const CyclotomicNumber& v, std::uint64_t n);

/// True when zeta_n^k is a Zumbroich basis element of Q(zeta_n).
bool is_zumbroich_exponent(std::uint64_t n, std::uint64_t k);

/// The automorphism zeta -> zeta^exponent of Q(zeta_order).
class GaloisAutomorphism {
 public:
  GaloisAutomorphism(std::uint64_t order, std::int64_t exponent);
  std::uint64_t order() const noexcept { return order_; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  GaloisAutomorphism compose(const GaloisAutomorphism& other) const;

 private:
  std::uint64_t order_;
  std::uint64_t exponent_;
};

/// sigma(v); v.order() must divide sigma.order().
CyclotomicNumber galois_apply(const GaloisAutomorphism& sigma, const CyclotomicNumber& v);
/// Applies zeta -> zeta^j for any j coprime to v.order().
CyclotomicNumber galois_apply(std::int64_t j, const CyclotomicNumber& v);

/// Smallest f with v in Q(zeta_f).
std::uint64_t conductor(const CyclotomicNumber& v);

/// A field of character values: either C or a cyclotomic field Q(zeta_m).
struct FieldSpec {
  enum class Kind { FullComplex, Cyclotomic };
  Kind kind = Kind::FullComplex;
  std::uint64_t m = 1;

  static FieldSpec full() { return {Kind::FullComplex, 0}; }
  static FieldSpec cyclotomic(std::uint64_t m);
  /// "full" or a positive integer.
  static FieldSpec parse(const std::string& text);

  bool is_full() const noexcept { return kind == Kind::FullComplex; }
  /// Order of the root-of-unity group of k (lcm(2, m)); 0 for C.
  std::uint64_t root_order() const;
  /// Whether k contains the d-th roots of unity.
  bool contains_roots_of_unity(std::uint64_t d) const;
  std::string str() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool lies_in_field(const CyclotomicNumber& v, const FieldSpec& k);

}  // namespace acdkit
