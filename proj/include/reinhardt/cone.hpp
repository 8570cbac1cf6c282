#pragma once

#include <optional>
#include <vector>

#include "reinhardt/domain.hpp"
#include "reinhardt/linalg.hpp"
#include "reinhardt/lp.hpp"

namespace reinhardt {

/// Linear subspace of R^n with an exact basis over the scalar field.
struct Subspace {
  size_t ambient = 0;
  std::vector<ExponentVector> basis;

  size_t dim() const { return basis.size(); }
  bool contains(const ExponentVector& v) const;
};

/// E(log G): the common kernel of the normals.
Subspace lineality_space(const LogPolyhedron& poly);

/// Orthogonal complement with respect to the standard dot product.
Subspace orthogonal_complement(const Subspace& f);

struct RationalTypeResult {
  bool rational = false;
  /// Integer basis of F intersected with Z^n.
  IntMatrix integer_basis;
};

/// F is spanned by its integer points.
RationalTypeResult rational_type(const Subspace& f);
inline bool is_rational_type(const Subspace& f) { return rational_type(f).rational; }

/// <alpha, dir> <= 0 for every normal.
bool recession_contains(const LogPolyhedron& poly, const ExponentVector& dir);

struct ApproachResult {
  bool approaches = false;
  /// Recession direction with d_j <= -1 on the set and d_j = 0 off it, when approaches.
  ExponentVector ray;
  LpProblem problem;
  LpCertificate certificate;
};

/// Whether log G contains a ray sending the coordinates in `coords` (0-based) to -inf
/// while the others stay fixed, i.e. the axis stratum with exactly those zeros meets the closure of G.
ApproachResult approach(const LogPolyhedron& poly, const std::vector<size_t>& coords);

/// G = D x C^{n-m} with E(log D) = {0}.
struct ProductSplit {
  std::vector<size_t> bounded_coords;
  std::vector<size_t> free_coords;
  size_t m = 0;
};

std::optional<ProductSplit> product_split(const DomainSpec& spec, const Subspace& lineality);

struct LpResult {
  LpProblem problem;
  LpCertificate certificate;
  /// Whether the supremum over the open polyhedron is attained.
  bool attained = false;
};

/// sup <objective, x> over the closure of log G (plus optional extra rows).
LpResult lp_optimize(const ExponentVector& objective, const LogPolyhedron& poly,
                     const std::vector<LinearInequality>& extra = {});

/// The open system <alpha_i, x> < log c_i has a solution.
bool has_interior(const LogPolyhedron& poly);

/// <w, d> < 0 for every non-zero d in the recession cone.
bool strictly_negative_on_recession(const LogPolyhedron& poly, const ExponentVector& w);
/// <w, d> <= 0 for every d in the recession cone (sup of <w, x> over log G is finite).
bool nonpositive_on_recession(const LogPolyhedron& poly, const ExponentVector& w);

}  // namespace reinhardt
