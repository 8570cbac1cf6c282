#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace reinhardt {

class Interval;

/// Element a + b*sqrt(d) of a real quadratic field, or a plain rational when b == 0.
///
/// All arithmetic and comparisons are exact. Two irrational operands must share
/// the same radicand d; a rational operand combines with anything.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class q) : a_(std::move(q)) { a_.canonicalize(); }  // NOLINT
  Scalar(mpq_class a, mpq_class b, long d);

  /// Parses "p" or "p/q" with decimal integers and an optional leading '-'.
  static Scalar parse_rational(const std::string& text);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& irrational_part() const { return b_; }
  long radicand() const { return d_; }

  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_integer() const { return is_rational() && a_.get_den() == 1; }
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.is_rational() || x.d_ == y.d_);
  }
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  /// Integer power; negative exponents invert (the value must then be non-zero).
  Scalar pow(long e) const;
  /// Galois conjugate a - b*sqrt(d).
  Scalar conjugate() const;

  Interval to_interval(unsigned precision) const;
  double to_double() const;

  /// "p/q" for rationals, "a+b*sqrt(d)" otherwise.
  std::string to_string() const;

 private:
  void check_compatible(const Scalar& o) const;

  mpq_class a_{0};
  mpq_class b_{0};
  long d_ = 0;
};

using ExponentVector = std::vector<Scalar>;

/// Rounds towards -inf / +inf exactly; escalates interval precision for irrational values.
mpz_class floor(const Scalar& x);
mpz_class ceil(const Scalar& x);

Scalar dot(const ExponentVector& u, const ExponentVector& v);
bool is_zero_vector(const ExponentVector& v);
bool is_integer_vector(const ExponentVector& v);
std::string to_string(const ExponentVector& v);

/// True when d >= 2 has no square factor > 1.
bool is_square_free(long d);

}  // namespace reinhardt
