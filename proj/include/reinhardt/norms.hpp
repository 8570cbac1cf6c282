#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reinhardt/domain.hpp"
#include "reinhardt/linalg.hpp"

namespace reinhardt {

/// n independent constraints |z^{alpha_j}| < c_j. T(x) = x B with B = A^{-1}.
struct SimplicialFrame {
  Matrix a;
  Matrix b;
  Scalar det_abs;
  std::vector<Scalar> thresholds;

  /// Uses the listed constraint rows (0-based), or all of them when there are exactly n.
  static SimplicialFrame from_spec(const DomainSpec& spec, const std::vector<size_t>& rows = {});
  static SimplicialFrame from_rows(const Matrix& a, std::vector<Scalar> thresholds);

  size_t dim() const { return a.size(); }
  ExponentVector t(const ExponentVector& x) const { return row_times(x, b); }
};

/// coefficient * pi^pi_power * prod base^exponent.
struct ExactValue {
  Scalar coefficient;
  long pi_power = 0;
  std::vector<std::pair<Scalar, Scalar>> powers;

  /// Folds integer powers of rational bases into the coefficient and drops trivial factors.
  void normalize();
  /// log of the value (the coefficient must be positive).
  LogLinear log() const;
  Interval evaluate(unsigned precision) const;
  /// e.g. "pi^2/2", "3*pi^2/32*(2)^(1/2)".
  std::string symbolic() const;
  /// Sign of value - 1, decided exactly or on the precision ladder.
  int compare_one() const;
};

enum class NormKind { exact, estimate, infinite, zero_space };
const char* to_string(NormKind k);

struct NormResult {
  NormKind kind = NormKind::infinite;
  std::optional<ExactValue> exact;
  double estimate = 0;
  double stderr_ = 0;
  uint64_t samples = 0;
  uint64_t accepted = 0;
  uint64_t seed = 0;
};

/// z^nu is holomorphic on G: every negative exponent sits on a coordinate whose axis G avoids.
bool monomial_holomorphic(const DomainSpec& spec, const ExponentVector& nu);

/// sup over G of |z^nu| = exp(sup over log G of <nu, x>).
NormResult sup_norm_monomial(const DomainSpec& spec, const ExponentVector& nu);

/// Integral of |z^nu|^p over G is finite: <p nu + 2, d> < 0 on rec(log G) \ {0}.
bool lp_norm_finite(const DomainSpec& spec, const ExponentVector& nu, const mpq_class& p);

/// ||z^nu||_p^p over the frame domain:
/// (2 pi)^n prod c_j^{T_j(w)} / (|det A| prod T_j(w)), w = p nu + 2.
NormResult lp_norm_exact_simplicial(const SimplicialFrame& frame, const ExponentVector& nu, const mpq_class& p);

struct MonteCarloOptions {
  uint64_t samples = 1000000;
  uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Estimate of ||z^nu||_p^p by sampling the bounding polydisc with the area measure.
NormResult lp_norm_monte_carlo(const DomainSpec& spec, const ExponentVector& nu, const mpq_class& p,
                               const MonteCarloOptions& opts);

/// Radii of the smallest polydisc containing G (upper bounds).
std::vector<double> bounding_radii(const DomainSpec& spec);

/// Counter-based generator: value k of substream s is a pure function of (seed, s, k).
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {}
  uint64_t bits(uint64_t counter) const;
  /// Uniform in (0, 1).
  double uniform(uint64_t counter) const;

 private:
  uint64_t seed_;
  uint64_t stream_;
};

/// Samples per substream; substream s covers samples [s * kSubstreamSize, (s+1) * kSubstreamSize).
inline constexpr uint64_t kSubstreamSize = 65536;

struct LaurentTerm {
  IntVector nu;
  std::complex<double> coefficient;
};

struct TermCheck {
  IntVector nu;
  double estimate = 0;
  double stderr_ = 0;
  bool ok = false;
};

struct CoefficientCheck {
  double total = 0;
  double total_stderr = 0;
  std::vector<TermCheck> terms;
  bool pass = false;
};

/// Checks ||a_nu z^nu||_p^p <= ||f||_p^p for every term, on shared samples with random phases.
CoefficientCheck coefficient_inequality_check(const DomainSpec& spec, const std::vector<LaurentTerm>& poly,
                                              const mpq_class& p, const MonteCarloOptions& opts);

struct IntegrableMonomial {
  IntVector nu;
  mpq_class p;
};

/// A monomial with finite L^p norm, p in {1, 2}, or nothing when E(log G) != {0}.
std::optional<IntegrableMonomial> find_integrable_monomial(const DomainSpec& spec);

}  // namespace reinhardt
