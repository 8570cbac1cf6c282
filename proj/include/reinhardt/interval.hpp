#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <vector>

#include "reinhardt/error.hpp"

namespace reinhardt {

/// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(unsigned precision);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(BigFloat o) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }

  friend void swap(BigFloat& x, BigFloat& y) noexcept;

 private:
  mpfr_t value_;
};

/// Closed interval [lower, upper] with outward (directed) rounding on every operation.
class Interval {
 public:
  explicit Interval(unsigned precision);
  static Interval point(const mpq_class& q, unsigned precision);
  static Interval point(long v, unsigned precision);
  static Interval pi(unsigned precision);
  static Interval sqrt_of(const mpq_class& q, unsigned precision);

  unsigned precision() const { return lo_.precision(); }
  mpfr_srcptr lower() const { return lo_.get(); }
  mpfr_srcptr upper() const { return hi_.get(); }

  Interval operator-() const;
  friend Interval operator+(const Interval& x, const Interval& y);
  friend Interval operator-(const Interval& x, const Interval& y);
  friend Interval operator*(const Interval& x, const Interval& y);
  /// The divisor must not contain zero.
  friend Interval operator/(const Interval& x, const Interval& y);
  Interval exp() const;
  /// The argument must be strictly positive.
  Interval log() const;
  Interval pow(long e) const;

  bool positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool contains_zero() const { return !positive() && !negative(); }

  double lower_double() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
  double upper_double() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
  double mid_double() const;

  /// Decimal renderings rounded outward to `digits` significant digits.
  std::string lower_string(int digits = 17) const;
  std::string upper_string(int digits = 17) const;

  /// floor(lower) == floor(upper) when the interval does not straddle an integer.
  bool floor_bounds(mpz_class& lo_floor, mpz_class& hi_floor) const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

/// Upper end of the precision ladder in bits. Defaults to 1024 or REINHARDT_PRECISION.
unsigned precision_cap();
void set_precision_cap(unsigned bits);
/// 64, 128, 256, ... doubling up to precision_cap().
std::vector<unsigned> precision_ladder();

/// Evaluates `eval(precision)` up the ladder until the interval excludes zero.
template <class Eval>
int resolve_sign(Eval&& eval, const std::string& what) {
  for (unsigned prec : precision_ladder()) {
    const Interval v = eval(prec);
    if (v.positive()) return 1;
    if (v.negative()) return -1;
  }
  fail(ErrorCode::boundary_indeterminate, "boundary-indeterminate: " + what);
}

}  // namespace reinhardt
