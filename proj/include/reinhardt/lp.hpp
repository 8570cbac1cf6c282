#pragma once

#include <vector>

#include "reinhardt/loglinear.hpp"
#include "reinhardt/scalar.hpp"

namespace reinhardt {

/// coeffs . x <= rhs, with a right-hand side that may involve logarithms of thresholds.
struct LinearInequality {
  ExponentVector coeffs;
  LogLinear rhs;
};

/// maximize objective . x  subject to every row, x free.
struct LpProblem {
  size_t dim = 0;
  std::vector<LinearInequality> rows;
  ExponentVector objective;
};

enum class LpStatus { optimal, unbounded, infeasible };

const char* to_string(LpStatus s);

struct LpCertificate {
  LpStatus status = LpStatus::infeasible;
  /// optimal: an optimal vertex; unbounded: a feasible point the ray starts from.
  std::vector<LogLinear> primal_point;
  /// unbounded: A ray <= 0 and objective . ray > 0.
  ExponentVector ray;
  /// optimal: dual y >= 0 with A^T y = objective and b . y = optimum.
  /// infeasible: Farkas y >= 0 with A^T y = 0 and b . y < 0.
  std::vector<Scalar> multipliers;
  LogLinear objective;
};

/// Exact two-phase primal simplex with Bland's rule. Infeasible and unbounded are
/// statuses, not errors.
LpCertificate solve_lp(const LpProblem& problem);

/// Re-checks every claim of a certificate in exact arithmetic.
bool verify_certificate(const LpProblem& problem, const LpCertificate& cert);

}  // namespace reinhardt
