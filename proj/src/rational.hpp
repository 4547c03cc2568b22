#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cg {

// Advisory abort bound for runaway denominator growth. 0 means unlimited.
// When set, any result whose denominator exceeds the bit count aborts with
// Errc::denominator_limit.
void set_denominator_limit_bits(unsigned long bits);
unsigned long denominator_limit_bits();

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Serialized form is "p" or "p/q".
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n, 1) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  explicit Rational(const mpq_class& q);

  static Rational parse(std::string_view s);

  std::string str() const;
  // Decimal approximation with the given number of significant digits,
  // round-to-nearest, ties away from zero.
  std::string decimal(int significant_digits) const;

  Rational operator+(const Rational& o) const { return checked(q_ + o.q_); }
  Rational operator-(const Rational& o) const { return checked(q_ - o.q_); }
  Rational operator*(const Rational& o) const { return checked(q_ * o.q_); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return mpq_cmp(q_.get_mpq_t(), o.q_.get_mpq_t()) == 0; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return mpq_cmp(q_.get_mpq_t(), o.q_.get_mpq_t()) < 0; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  int sign() const { return mpq_sgn(q_.get_mpq_t()); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return mpz_cmp_ui(q_.get_den().get_mpz_t(), 1) == 0; }

  std::string numerator_str() const { return q_.get_num().get_str(); }
  std::string denominator_str() const { return q_.get_den().get_str(); }

  const mpq_class& raw() const { return q_; }

  friend Rational abs(const Rational& r) { return Rational(mpq_class(::abs(r.q_))); }

private:
  static Rational checked(mpq_class q);
  mpq_class q_;
};

inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace cg
