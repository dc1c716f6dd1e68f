// Exact arithmetic in a real quadratic field Q(sqrt d).
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hypcox {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element (a + b*sqrt(d)) / c of Q(sqrt d). d == 0 denotes the rationals.
///
/// Values are normalized on construction: c > 0 and gcd(a, b, c) == 1, so two
/// values are equal exactly when their fields compare equal. A rational value
/// (d == 0) combines with any field; two irrational contexts with different d
/// never combine.
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  FieldScalar(const mpz_class& value) : a_(value) {}  // NOLINT
  FieldScalar(const mpq_class& value);  // NOLINT

  /// (a + b*sqrt(d)) / c. Throws FieldError for c == 0, a non-squarefree d,
  /// or d == 0 with b != 0.
  FieldScalar(mpz_class a, mpz_class b, mpz_class c, long d);

  static FieldScalar rational(long num, long den = 1);
  /// The field generator sqrt(d).
  static FieldScalar root(long d);

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }
  long d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  /// Exact sign of the real number, without floating point.
  int sign() const;

  FieldScalar conjugate() const;
  /// Field norm N(x) = x * conj(x), a rational number.
  mpq_class norm() const;
  mpq_class rational_value() const;  // requires is_rational()

  /// Floating evaluation with the given mantissa precision in bits.
  mpf_class to_mpf(unsigned bits = 256) const;
  double to_double() const { return to_mpf(128).get_d(); }

  /// "(a+b*r)/c" with r the field generator; simpler forms when b == 0 or c == 1.
  std::string to_string() const;
  /// Parses the output of to_string() for the field sqrt(d).
  static FieldScalar parse(const std::string& text, long d);

  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& y);
  FieldScalar& operator-=(const FieldScalar& y);
  FieldScalar& operator*=(const FieldScalar& y);
  FieldScalar& operator/=(const FieldScalar& y);

  friend FieldScalar operator+(FieldScalar x, const FieldScalar& y) { return x += y; }
  friend FieldScalar operator-(FieldScalar x, const FieldScalar& y) { return x -= y; }
  friend FieldScalar operator*(FieldScalar x, const FieldScalar& y) { return x *= y; }
  friend FieldScalar operator/(FieldScalar x, const FieldScalar& y) { return x /= y; }

  friend bool operator==(const FieldScalar& x, const FieldScalar& y);
  friend bool operator!=(const FieldScalar& x, const FieldScalar& y) { return !(x == y); }
  friend bool operator<(const FieldScalar& x, const FieldScalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const FieldScalar& x, const FieldScalar& y) { return y < x; }
  friend bool operator<=(const FieldScalar& x, const FieldScalar& y) { return !(y < x); }
  friend bool operator>=(const FieldScalar& x, const FieldScalar& y) { return !(x < y); }

 private:
  void normalize();
  static long join_fields(long d1, long d2);

  mpz_class a_{0};
  mpz_class b_{0};
  mpz_class c_{1};
  long d_ = 0;
};

/// True when d >= 2 and no square > 1 divides it.
bool is_squarefree_generator(long d);

}  // namespace hypcox
