#pragma once

#include <complex>
#include <string>
#include <vector>

#include "reinhardt/norms.hpp"

namespace reinhardt {

/// N0 = max over j, |sigma| <= k+1, p >= 1 of T_j(sigma) + (2 pi / |det A|^(1/n) - T_j(2)) / p.
struct N0Bound {
  /// Integer part of the bound and the j attaining it, before the pi term.
  Scalar sigma_term;
  size_t j = 0;
  /// Whether the p-term is active (positive at p = 1) for the maximizing j.
  bool pi_term = false;
  Interval value{64};
  long n_min = 0;
  std::string symbolic;
};

/// Requires thresholds 1 (see normalized_frame).
N0Bound compute_n0(const SimplicialFrame& frame, long k);

/// The frame with every threshold replaced by 1. With w = z / t, t^{alpha_j} = c_j,
/// |w^{alpha_j}| < 1 describes the same domain.
SimplicialFrame normalized_frame(const SimplicialFrame& frame);

struct WitnessSpec {
  SimplicialFrame frame;
  long k = 0;
  RadialPoint exterior;
  size_t j0 = 0;
};

/// f_N(w) = w^{N alpha} / (w^{alpha_j0} - d) in normalized coordinates w^{alpha_j} = z^{alpha_j} / c_j.
struct WitnessFunction {
  long n = 0;
  ExponentVector alpha_sum;
  size_t j0 = 0;
  Scalar d;
  long k = 0;
  N0Bound n0;
  /// Rows and thresholds of the original frame, for reporting the rescaling.
  SimplicialFrame frame;
};

/// Needs integer normals and |b^{alpha_j0}| > c_j0.
WitnessFunction build_witness(const WitnessSpec& spec);

/// |sigma! binom(N alpha + mu alpha_j0, sigma)| <= (P + Q mu)^R for |sigma| <= k.
struct TailBound {
  long p = 1;
  long q = 1;
  long r = 0;
};

TailBound derive_tail_bound(const WitnessFunction& w, long k);
/// Exact check of the tail bound for every |sigma| <= k and mu in [0, mu_max].
bool spot_check_tail_bound(const WitnessFunction& w, const TailBound& tb, long k, long mu_max);

/// Point with moduli and arguments, in normalized coordinates.
struct ComplexPoint {
  std::vector<double> radii;
  std::vector<double> phases;
};

using Complex = std::complex<long double>;

/// Direct evaluation of the closed form (no domain check).
Complex eval_witness(const WitnessFunction& w, const ComplexPoint& z);

struct SeriesValue {
  Complex value;
  long terms = 0;
};

/// Sum of -sum_mu sigma! binom(N alpha + mu alpha_j0, sigma) w^{N alpha + mu alpha_j0 - sigma} / d^{mu+1},
/// truncated once the tail bound drops below tol. z must lie in the normalized frame domain.
SeriesValue eval_witness_derivative(const WitnessFunction& w, const std::vector<long>& sigma, const ComplexPoint& z,
                                    double tol);

/// A point on the singular set w^{alpha_j0} = d: `base` with one coordinate adjusted.
ComplexPoint singular_point(const WitnessFunction& w, const std::vector<double>& base);

struct WitnessCheck {
  std::string kind;  // "norm", "cone", "vanishing"
  std::vector<long> sigma;
  mpq_class p;
  long coord = -1;  // 0-based, vanishing checks only
  std::string detail;
  bool ok = false;
};

struct WitnessCertificate {
  bool valid = false;
  std::vector<WitnessCheck> checks;
  TailBound tail;
  bool tail_spot_check = false;
  /// Upper bound of sup over D of |d^sigma f_N| from the tail bound, for each |sigma| <= k.
  std::vector<double> derivative_bounds;
  std::string failure;
};

WitnessCertificate verify_witness_membership(const WitnessFunction& w, long k, const std::vector<mpq_class>& p_list);

/// All sigma in Z_+^n with |sigma| <= k, in graded lexicographic order.
std::vector<std::vector<long>> multi_indices(size_t n, long k);

}  // namespace reinhardt
