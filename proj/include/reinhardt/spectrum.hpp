#pragma once

#include <string>
#include <vector>

#include "reinhardt/classify.hpp"

namespace reinhardt {

enum class Membership { yes, no, indeterminate };
const char* to_string(Membership m);

struct SpaceMembership {
  Membership verdict = Membership::indeterminate;
  std::string criterion;
  /// The derivative order or axis set that decided a "no", when one applies.
  std::vector<long> sigma;
  std::vector<int> axis_set;
};

/// Whether z^nu lies in the space. Spaces are characterised monomial by monomial:
/// Hinf by the sup LP, Lp by the recession test, k-spaces through every non-vanishing
/// derivative z^{nu - sigma}, A^k by axis continuity (sufficient conditions only).
/// S(G) has no per-monomial criterion here and is rejected.
SpaceMembership monomial_in_space(const DomainSpec& spec, const IntVector& nu, const FunctionSpace& space);

/// Every nu in [-R, R]^n with monomial_in_space == yes, sorted lexicographically.
std::vector<IntVector> spectrum_box(const DomainSpec& spec, const FunctionSpace& space, long radius);

struct OrthogonalityCheck {
  bool pass = false;
  size_t checked = 0;
  /// First offending exponent, when the check fails.
  IntVector counterexample;
};

/// Every bounded monomial is orthogonal to E(log G).
OrthogonalityCheck spectrum_orthogonality_check(const DomainSpec& spec, long radius);

}  // namespace reinhardt
