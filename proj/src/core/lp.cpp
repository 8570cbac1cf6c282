#include "reinhardt/lp.hpp"

#include <optional>

#include "reinhardt/error.hpp"

namespace reinhardt {

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal:
      return "optimal";
    case LpStatus::unbounded:
      return "unbounded";
    case LpStatus::infeasible:
      return "infeasible";
  }
  return "?";
}

namespace {

// Standard form over z = (x+, x-, slack, artificial) >= 0. Row i reads
//   flip_i * (A_i x+ - A_i x- + s_i) + a_i = flip_i * b_i   with flip_i * b_i >= 0.
// The artificial block starts as the identity, so it always holds the current basis inverse.
class Tableau {
 public:
  explicit Tableau(const LpProblem& p) : n_(p.dim), m_(p.rows.size()) {
    cols_ = 2 * n_ + 2 * m_;
    t_.assign(m_, ExponentVector(cols_, Scalar(0)));
    rhs_.resize(m_);
    flip_.resize(m_);
    basis_.resize(m_);
    for (size_t i = 0; i < m_; ++i) {
      const auto& row = p.rows[i];
      require(row.coeffs.size() == n_, "LP row dimension mismatch");
      flip_[i] = row.rhs.sign() < 0 ? -1 : 1;
      const Scalar f(flip_[i]);
      for (size_t j = 0; j < n_; ++j) {
        t_[i][j] = f * row.coeffs[j];
        t_[i][n_ + j] = -t_[i][j];
      }
      t_[i][2 * n_ + i] = f;
      t_[i][art(i)] = Scalar(1);
      rhs_[i] = row.rhs * f;
      basis_[i] = art(i);
    }
  }

  size_t art(size_t i) const { return 2 * n_ + m_ + i; }
  bool is_art(size_t j) const { return j >= 2 * n_ + m_; }

  // Runs Bland's rule on the given costs. Returns the entering column of an unbounded
  // direction, or nullopt at optimality.
  std::optional<size_t> maximize(const ExponentVector& costs, bool allow_artificial) {
    for (;;) {
      std::vector<bool> basic(cols_, false);
      for (size_t b : basis_) basic[b] = true;
      std::optional<size_t> entering;
      for (size_t j = 0; j < cols_ && !entering; ++j) {
        if (basic[j] || (!allow_artificial && is_art(j))) continue;
        Scalar rc = costs[j];
        for (size_t i = 0; i < m_; ++i)
          if (!costs[basis_[i]].is_zero() && !t_[i][j].is_zero()) rc -= costs[basis_[i]] * t_[i][j];
        if (rc.sign() > 0) entering = j;
      }
      if (!entering) return std::nullopt;
      const size_t q = *entering;
      std::optional<size_t> leave;
      LogLinear best;
      for (size_t i = 0; i < m_; ++i) {
        if (t_[i][q].sign() <= 0) continue;
        LogLinear ratio = rhs_[i] / t_[i][q];
        if (!leave) {
          leave = i;
          best = std::move(ratio);
          continue;
        }
        const int cmp = (ratio - best).sign();
        if (cmp < 0 || (cmp == 0 && basis_[i] < basis_[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave) return q;
      pivot(*leave, q);
    }
  }

  void pivot(size_t r, size_t q) {
    const Scalar inv = Scalar(1) / t_[r][q];
    for (auto& x : t_[r]) x *= inv;
    rhs_[r] *= inv;
    for (size_t i = 0; i < m_; ++i) {
      if (i == r || t_[i][q].is_zero()) continue;
      const Scalar f = t_[i][q];
      for (size_t j = 0; j < cols_; ++j)
        if (!t_[r][j].is_zero()) t_[i][j] -= f * t_[r][j];
      rhs_[i] -= rhs_[r] * f;
    }
    basis_[r] = q;
  }

  // Pivots zero-level artificials out of the basis where a structural column allows it.
  void drive_out_artificials() {
    for (size_t i = 0; i < m_; ++i) {
      if (!is_art(basis_[i])) continue;
      for (size_t j = 0; j < 2 * n_ + m_; ++j) {
        if (!t_[i][j].is_zero()) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<LogLinear> levels() const {
    std::vector<LogLinear> z(cols_);
    for (size_t i = 0; i < m_; ++i) z[basis_[i]] = rhs_[i];
    return z;
  }

  std::vector<LogLinear> primal() const {
    const auto z = levels();
    std::vector<LogLinear> x(n_);
    for (size_t j = 0; j < n_; ++j) x[j] = z[j] - z[n_ + j];
    return x;
  }

  // c_B B^{-1}, read off the artificial block.
  std::vector<Scalar> simplex_multipliers(const ExponentVector& costs) const {
    std::vector<Scalar> pi(m_, Scalar(0));
    for (size_t k = 0; k < m_; ++k)
      for (size_t i = 0; i < m_; ++i)
        if (!costs[basis_[i]].is_zero()) pi[k] += costs[basis_[i]] * t_[i][art(k)];
    return pi;
  }

  ExponentVector ray(size_t q) const {
    std::vector<Scalar> z(cols_, Scalar(0));
    z[q] = Scalar(1);
    for (size_t i = 0; i < m_; ++i) z[basis_[i]] = -t_[i][q];
    ExponentVector d(n_);
    for (size_t j = 0; j < n_; ++j) d[j] = z[j] - z[n_ + j];
    return d;
  }

  LogLinear artificial_total() const {
    LogLinear s;
    for (size_t i = 0; i < m_; ++i)
      if (is_art(basis_[i])) s += rhs_[i];
    return s;
  }

  size_t cols() const { return cols_; }
  int flip(size_t i) const { return flip_[i]; }

 private:
  size_t n_, m_, cols_ = 0;
  std::vector<ExponentVector> t_;
  std::vector<LogLinear> rhs_;
  std::vector<int> flip_;
  std::vector<size_t> basis_;
};

}  // namespace

LpCertificate solve_lp(const LpProblem& problem) {
  require(problem.objective.size() == problem.dim, "LP objective dimension mismatch");
  const size_t n = problem.dim;
  const size_t m = problem.rows.size();
  Tableau tab(problem);
  LpCertificate cert;

  ExponentVector phase1(tab.cols(), Scalar(0));
  for (size_t i = 0; i < m; ++i) phase1[tab.art(i)] = Scalar(-1);
  tab.maximize(phase1, true);  // bounded below by zero; never unbounded
  if (tab.artificial_total().sign() > 0) {
    ExponentVector min_costs(tab.cols(), Scalar(0));
    for (size_t i = 0; i < m; ++i) min_costs[tab.art(i)] = Scalar(1);
    const auto u = tab.simplex_multipliers(min_costs);
    cert.status = LpStatus::infeasible;
    for (size_t i = 0; i < m; ++i) cert.multipliers.push_back(-Scalar(tab.flip(i)) * u[i]);
    return cert;
  }
  tab.drive_out_artificials();

  ExponentVector costs(tab.cols(), Scalar(0));
  for (size_t j = 0; j < n; ++j) {
    costs[j] = problem.objective[j];
    costs[n + j] = -problem.objective[j];
  }
  if (const auto q = tab.maximize(costs, false)) {
    cert.status = LpStatus::unbounded;
    cert.primal_point = tab.primal();
    cert.ray = tab.ray(*q);
    return cert;
  }
  cert.status = LpStatus::optimal;
  cert.primal_point = tab.primal();
  const auto pi = tab.simplex_multipliers(costs);
  for (size_t i = 0; i < m; ++i) cert.multipliers.push_back(Scalar(tab.flip(i)) * pi[i]);
  for (size_t j = 0; j < n; ++j) cert.objective += cert.primal_point[j] * problem.objective[j];
  return cert;
}

bool verify_certificate(const LpProblem& problem, const LpCertificate& cert) {
  const size_t n = problem.dim;
  const size_t m = problem.rows.size();
  auto primal_feasible = [&](const std::vector<LogLinear>& x) {
    if (x.size() != n) return false;
    for (const auto& row : problem.rows) {
      LogLinear slack = row.rhs;
      for (size_t j = 0; j < n; ++j) slack -= x[j] * row.coeffs[j];
      if (slack.sign() < 0) return false;
    }
    return true;
  };
  auto dual_combination = [&](const std::vector<Scalar>& y, ExponentVector& aty, LogLinear& bty) {
    if (y.size() != m) return false;
    aty.assign(n, Scalar(0));
    for (size_t i = 0; i < m; ++i) {
      if (y[i].sign() < 0) return false;
      for (size_t j = 0; j < n; ++j) aty[j] += y[i] * problem.rows[i].coeffs[j];
      bty += problem.rows[i].rhs * y[i];
    }
    return true;
  };
  switch (cert.status) {
    case LpStatus::optimal: {
      ExponentVector aty;
      LogLinear bty;
      if (!primal_feasible(cert.primal_point) || !dual_combination(cert.multipliers, aty, bty)) return false;
      if (aty != problem.objective) return false;
      LogLinear cx;
      for (size_t j = 0; j < n; ++j) cx += cert.primal_point[j] * problem.objective[j];
      return (bty - cx).is_zero() && (cert.objective - cx).is_zero();
    }
    case LpStatus::unbounded: {
      if (!primal_feasible(cert.primal_point) || cert.ray.size() != n) return false;
      for (const auto& row : problem.rows)
        if (dot(row.coeffs, cert.ray).sign() > 0) return false;
      return dot(problem.objective, cert.ray).sign() > 0;
    }
    case LpStatus::infeasible: {
      ExponentVector aty;
      LogLinear bty;
      if (!dual_combination(cert.multipliers, aty, bty)) return false;
      return is_zero_vector(aty) && bty.sign() < 0;
    }
  }
  return false;
}

}  // namespace reinhardt
