#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "reinhardt/interval.hpp"
#include "reinhardt/scalar.hpp"

namespace reinhardt {

/// Symbolic real  constant + sum_i coeff_i * log(atom_i)  with coefficients in the scalar field.
///
/// Atoms are positive integers, positive quadratic-field elements, or pi. When every
/// atom is an integer the zero test is exact: the atoms are refined to a pairwise
/// coprime base, whose logarithms together with 1 are linearly independent over the
/// algebraic numbers. Other atoms fall back to interval evaluation on the precision ladder.
class LogLinear {
 public:
  LogLinear() = default;
  LogLinear(Scalar constant) : constant_(std::move(constant)) {}  // NOLINT(google-explicit-constructor)

  /// log(c) for c > 0.
  static LogLinear log_of(const Scalar& c);
  static LogLinear log_pi();

  const Scalar& constant() const { return constant_; }
  bool has_logs() const { return !int_logs_.empty() || !other_logs_.empty(); }

  LogLinear operator-() const;
  LogLinear& operator+=(const LogLinear& o);
  LogLinear& operator-=(const LogLinear& o);
  LogLinear& operator*=(const Scalar& s);
  friend LogLinear operator+(LogLinear x, const LogLinear& y) { return x += y; }
  friend LogLinear operator-(LogLinear x, const LogLinear& y) { return x -= y; }
  friend LogLinear operator*(LogLinear x, const Scalar& s) { return x *= s; }
  friend LogLinear operator*(const Scalar& s, LogLinear x) { return x *= s; }
  friend LogLinear operator/(LogLinear x, const Scalar& s) { return x *= Scalar(1) / s; }

  /// True when the zero test can be done without intervals.
  bool exactly_decidable() const;
  bool is_zero() const;
  /// -1, 0, +1. Throws boundary_indeterminate when undecidable at the precision cap.
  int sign() const;

  Interval evaluate(unsigned precision) const;
  std::string to_string() const;

 private:
  void prune();

  Scalar constant_;
  std::map<mpz_class, Scalar> int_logs_;  // atom > 1 -> coefficient
  // rendered atom -> (atom value, coefficient); the pi atom uses key "pi".
  std::map<std::string, std::pair<Scalar, Scalar>> other_logs_;
};

/// Pairwise coprime base refinement: returns the base and, for each input, its exponent map.
std::pair<std::vector<mpz_class>, std::vector<std::map<mpz_class, long>>> coprime_base(
    const std::vector<mpz_class>& values);

}  // namespace reinhardt
