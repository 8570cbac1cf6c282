#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reinhardt/loglinear.hpp"
#include "reinhardt/scalar.hpp"

namespace reinhardt {

/// |z^alpha| < c
struct MonomialConstraint {
  ExponentVector alpha;
  Scalar c;
};

/// Moduli (|z_1|, ..., |z_n|); Reinhardt symmetry makes them sufficient for membership.
struct RadialPoint {
  std::vector<Scalar> radii;
};

/// A Reinhardt domain G = int of the intersection of {|z^alpha| < c} over a finite
/// constraint list. The list is kept verbatim: a constraint that is redundant for log G
/// can still exclude axis points.
class DomainSpec {
 public:
  /// Validates dimensions, c > 0, alpha != 0 and non-emptiness of the log-polyhedron.
  DomainSpec(size_t n, std::vector<MonomialConstraint> constraints, std::optional<long> quadratic_d = std::nullopt);

  size_t dim() const { return n_; }
  const std::vector<MonomialConstraint>& constraints() const { return constraints_; }
  std::optional<long> quadratic_d() const { return quadratic_d_; }
  /// G != C^n.
  bool proper_subset() const { return !constraints_.empty(); }
  bool has_integer_normals() const;

 private:
  size_t n_;
  std::vector<MonomialConstraint> constraints_;
  std::optional<long> quadratic_d_;
};

/// Parses the JSON spec document. Throws Error(invalid_input) on malformed input and
/// Error(empty_domain) when the log-polyhedron has no interior.
DomainSpec parse_spec(std::string_view text);
/// Canonical JSON rendering of a spec (same grammar parse_spec accepts).
std::string spec_to_json(const DomainSpec& spec);

/// { x : <alpha_i, x> < log c_i }, one half-space per constraint in order.
struct LogPolyhedron {
  size_t dim = 0;
  std::vector<ExponentVector> normals;
  std::vector<Scalar> thresholds;

  LogLinear offset(size_t i) const { return LogLinear::log_of(thresholds[i]); }
};

LogPolyhedron log_polyhedron(const DomainSpec& spec);

/// Strict membership of a symbolic point in the open log-polyhedron.
bool log_contains(const LogPolyhedron& poly, const std::vector<LogLinear>& x);

/// Membership with the axis rule: r_l = 0 is excluded by any constraint with alpha_l < 0,
/// and satisfies a constraint with alpha_l > 0 outright.
bool contains(const DomainSpec& spec, const RadialPoint& p);

bool is_bounded(const DomainSpec& spec);
/// Lebesgue volume of G is finite.
bool has_finite_volume(const DomainSpec& spec);

/// Floating-point membership filter with an exact fallback near the boundary, for sampling.
class FastMembership {
 public:
  explicit FastMembership(const DomainSpec& spec);
  bool operator()(std::span<const double> radii) const;

 private:
  const DomainSpec* spec_;
  std::vector<std::vector<double>> alpha_;
  std::vector<double> log_c_;
};

}  // namespace reinhardt
