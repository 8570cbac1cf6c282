#include "reinhardt/cone.hpp"

#include "reinhardt/error.hpp"

namespace reinhardt {

namespace {

ExponentVector unit(size_t n, size_t j, long value = 1) {
  ExponentVector e(n, Scalar(0));
  e[j] = Scalar(value);
  return e;
}

std::vector<LinearInequality> recession_rows(const LogPolyhedron& poly) {
  std::vector<LinearInequality> rows;
  for (const auto& a : poly.normals) rows.push_back({a, LogLinear()});
  return rows;
}

}  // namespace

bool Subspace::contains(const ExponentVector& v) const {
  Matrix m = basis;
  const size_t r = rank(m, ambient);
  m.push_back(v);
  return rank(m, ambient) == r;
}

Subspace lineality_space(const LogPolyhedron& poly) {
  return Subspace{poly.dim, kernel_basis(poly.normals, poly.dim)};
}

Subspace orthogonal_complement(const Subspace& f) { return Subspace{f.ambient, kernel_basis(f.basis, f.ambient)}; }

RationalTypeResult rational_type(const Subspace& f) {
  RationalTypeResult result;
  const size_t n = f.ambient;
  // F = ker W where the rows of W span F-perp. An integer y lies in F iff both the
  // rational and the sqrt(d) parts of every row annihilate it.
  const Subspace perp = orthogonal_complement(f);
  IntMatrix system;
  for (const auto& w : perp.basis) {
    for (int part = 0; part < 2; ++part) {
      mpz_class lcm_den = 1;
      for (const auto& x : w) {
        const mpq_class& q = part == 0 ? x.rational_part() : x.irrational_part();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
      }
      IntVector row;
      bool nonzero = false;
      for (const auto& x : w) {
        const mpq_class q = (part == 0 ? x.rational_part() : x.irrational_part()) * lcm_den;
        row.push_back(q.get_num());
        nonzero = nonzero || row.back() != 0;
      }
      if (nonzero) system.push_back(std::move(row));
    }
  }
  result.integer_basis = integer_kernel(system, n);
  result.rational = result.integer_basis.size() == f.dim();
  return result;
}

bool recession_contains(const LogPolyhedron& poly, const ExponentVector& dir) {
  require(dir.size() == poly.dim, "direction has wrong dimension");
  for (const auto& a : poly.normals)
    if (dot(a, dir).sign() > 0) return false;
  return true;
}

ApproachResult approach(const LogPolyhedron& poly, const std::vector<size_t>& coords) {
  require(!coords.empty(), "approach needs a non-empty coordinate set");
  const size_t n = poly.dim;
  std::vector<bool> in_set(n, false);
  for (size_t j : coords) {
    require(j < n, "approach coordinate out of range");
    in_set[j] = true;
  }
  // Variables (d_1..d_n, t); maximize t.
  ApproachResult result;
  LpProblem& lp = result.problem;
  lp.dim = n + 1;
  lp.objective = unit(n + 1, n);
  for (const auto& a : poly.normals) {
    ExponentVector row = a;
    row.emplace_back(0);
    lp.rows.push_back({row, LogLinear()});
  }
  for (size_t j = 0; j < n; ++j) {
    if (in_set[j]) {
      ExponentVector row = unit(n + 1, j);
      row[n] = Scalar(1);
      lp.rows.push_back({row, LogLinear()});  // d_j + t <= 0
    } else {
      lp.rows.push_back({unit(n + 1, j), LogLinear()});
      lp.rows.push_back({unit(n + 1, j, -1), LogLinear()});
    }
  }
  lp.rows.push_back({unit(n + 1, n), LogLinear(Scalar(1))});
  lp.rows.push_back({unit(n + 1, n, -1), LogLinear()});
  result.certificate = solve_lp(lp);
  if (result.certificate.status != LpStatus::optimal) fail(ErrorCode::internal, "approach LP is not optimal");
  result.approaches = result.certificate.objective.sign() > 0;
  if (result.approaches) {
    const Scalar t = result.certificate.primal_point[n].constant();
    for (size_t j = 0; j < n; ++j) result.ray.push_back(result.certificate.primal_point[j].constant() / t);
  }
  return result;
}

std::optional<ProductSplit> product_split(const DomainSpec& spec, const Subspace& lineality) {
  ProductSplit split;
  for (size_t j = 0; j < spec.dim(); ++j) {
    bool free = true;
    for (const auto& con : spec.constraints())
      if (!con.alpha[j].is_zero()) free = false;
    (free ? split.free_coords : split.bounded_coords).push_back(j);
  }
  if (lineality.dim() != split.free_coords.size()) return std::nullopt;
  split.m = split.bounded_coords.size();
  return split;
}

LpResult lp_optimize(const ExponentVector& objective, const LogPolyhedron& poly,
                     const std::vector<LinearInequality>& extra) {
  require(objective.size() == poly.dim, "objective has wrong dimension");
  LpResult r;
  r.problem.dim = poly.dim;
  r.problem.objective = objective;
  for (size_t i = 0; i < poly.normals.size(); ++i) r.problem.rows.push_back({poly.normals[i], poly.offset(i)});
  for (const auto& row : extra) r.problem.rows.push_back(row);
  r.certificate = solve_lp(r.problem);
  // A non-constant linear functional never attains its supremum on an open set.
  r.attained = r.certificate.status == LpStatus::optimal && is_zero_vector(objective);
  return r;
}

bool has_interior(const LogPolyhedron& poly) {
  const size_t n = poly.dim;
  LpProblem lp;
  lp.dim = n + 1;
  lp.objective = unit(n + 1, n);
  for (size_t i = 0; i < poly.normals.size(); ++i) {
    ExponentVector row = poly.normals[i];
    row.emplace_back(1);
    lp.rows.push_back({row, poly.offset(i)});
  }
  lp.rows.push_back({unit(n + 1, n), LogLinear(Scalar(1))});
  lp.rows.push_back({unit(n + 1, n, -1), LogLinear()});
  const auto cert = solve_lp(lp);
  return cert.status == LpStatus::optimal && cert.objective.sign() > 0;
}

bool strictly_negative_on_recession(const LogPolyhedron& poly, const ExponentVector& w) {
  require(w.size() == poly.dim, "weight has wrong dimension");
  if (lineality_space(poly).dim() > 0) return false;
  // With trivial lineality, s = sum of normals is strictly negative on rec \ {0}, so
  // {d in rec : <s, d> = -1} is a compact base of the cone.
  ExponentVector s(poly.dim, Scalar(0));
  for (const auto& a : poly.normals)
    for (size_t j = 0; j < poly.dim; ++j) s[j] += a[j];
  LpProblem lp;
  lp.dim = poly.dim;
  lp.objective = w;
  lp.rows = recession_rows(poly);
  ExponentVector neg_s;
  for (const auto& x : s) neg_s.push_back(-x);
  lp.rows.push_back({s, LogLinear(Scalar(-1))});
  lp.rows.push_back({neg_s, LogLinear(Scalar(1))});
  const auto cert = solve_lp(lp);
  if (cert.status == LpStatus::infeasible) return true;  // rec = {0}
  return cert.status == LpStatus::optimal && cert.objective.sign() < 0;
}

bool nonpositive_on_recession(const LogPolyhedron& poly, const ExponentVector& w) {
  require(w.size() == poly.dim, "weight has wrong dimension");
  LpProblem lp;
  lp.dim = poly.dim;
  lp.objective = w;
  lp.rows = recession_rows(poly);
  for (size_t j = 0; j < poly.dim; ++j) {
    lp.rows.push_back({unit(poly.dim, j), LogLinear(Scalar(1))});
    lp.rows.push_back({unit(poly.dim, j, -1), LogLinear(Scalar(1))});
  }
  const auto cert = solve_lp(lp);
  return cert.status == LpStatus::optimal && cert.objective.sign() <= 0;
}

}  // namespace reinhardt
