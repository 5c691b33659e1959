#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace acdkit {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit comfortably in 63 bits are kept
/// inline; anything larger is promoted to a shared immutable GMP rational.
/// The representation is canonical, so equality is a field comparison.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_integer() const noexcept;
  bool is_small() const noexcept { return !big_; }
  int sign() const noexcept;

  /// Numerator and denominator as GMP integers.
  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;
  double to_double() const;

  /// Integer value; throws std::domain_error when not an integer or too large.
  std::int64_t to_int64() const;
  /// Inline numerator/denominator; only meaningful when is_small().
  std::int64_t small_num() const noexcept { return num_; }
  std::int64_t small_den() const noexcept { return den_; }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;
  /// Always "n/d", also for integers.
  std::string fraction_str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  void assign_big(mpq_class q);
  void assign_i128(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

Rational abs(const Rational& r);

}  // namespace acdkit
