#include "reinhardt/linalg.hpp"

#include "reinhardt/error.hpp"

namespace reinhardt {

std::vector<size_t> rref(Matrix& m, size_t cols) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t piv = row;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const Scalar inv = Scalar(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Scalar f = m[r][col];
      for (size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t rank(Matrix m, size_t cols) { return rref(m, cols).size(); }

std::vector<ExponentVector> kernel_basis(const Matrix& m, size_t cols) {
  Matrix r = m;
  const auto pivots = rref(r, cols);
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<ExponentVector> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ExponentVector v(cols, Scalar(0));
    v[free] = Scalar(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(primitive(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const size_t n = m.size();
  Matrix aug(n, ExponentVector(2 * n, Scalar(0)));
  for (size_t i = 0; i < n; ++i) {
    require(m[i].size() == n, "inverse of a non-square matrix");
    for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Scalar(1);
  }
  const auto pivots = rref(aug, n);
  if (pivots.size() < n) return std::nullopt;
  Matrix inv(n, ExponentVector(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Scalar determinant(Matrix m) {
  const size_t n = m.size();
  Scalar det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Scalar f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Matrix transpose(const Matrix& m, size_t cols) {
  Matrix t(cols, ExponentVector(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

ExponentVector primitive(const ExponentVector& v) {
  for (const auto& x : v)
    if (!x.is_rational()) return v;
  mpz_class lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.rational_part().get_den_mpz_t());
  IntVector ints;
  mpz_class g = 0;
  for (const auto& x : v) {
    const mpq_class scaled = x.rational_part() * lcm_den;
    ints.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (g == 0) return v;
  ExponentVector out;
  for (const auto& z : ints) out.emplace_back(mpq_class(z / g));
  return out;
}

ExponentVector row_times(const ExponentVector& v, const Matrix& m) {
  require(v.size() == m.size(), "dimension mismatch in vector-matrix product");
  const size_t cols = m.empty() ? 0 : m[0].size();
  ExponentVector out(cols, Scalar(0));
  for (size_t l = 0; l < m.size(); ++l)
    for (size_t j = 0; j < cols; ++j) out[j] += v[l] * m[l][j];
  return out;
}

IntMatrix integer_kernel(IntMatrix m, size_t cols) {
  // Track the unimodular transform U with m_original * U = m_current.
  IntMatrix u(cols, IntVector(cols, 0));
  for (size_t i = 0; i < cols; ++i) u[i][i] = 1;
  auto combine = [&](size_t c1, size_t c2, const mpz_class& s, const mpz_class& t, const mpz_class& a,
                     const mpz_class& b) {
    // new c1 = s*c1 + t*c2 ; new c2 = -b*c1 + a*c2  (determinant s*a + t*b = 1)
    auto apply = [&](IntMatrix& mat) {
      for (auto& row : mat) {
        const mpz_class x = row[c1], y = row[c2];
        row[c1] = s * x + t * y;
        row[c2] = -b * x + a * y;
      }
    };
    apply(m);
    apply(u);
  };
  size_t col = 0;
  for (size_t row = 0; row < m.size() && col < cols; ++row) {
    for (size_t j = col + 1; j < cols; ++j) {
      if (m[row][j] == 0) continue;
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[row][col].get_mpz_t(), m[row][j].get_mpz_t());
      const mpz_class a = m[row][col] / g;
      const mpz_class b = m[row][j] / g;
      combine(col, j, s, t, a, b);
    }
    if (m[row][col] != 0) ++col;
  }
  IntMatrix kernel;
  for (size_t j = col; j < cols; ++j) {
    IntVector v(cols);
    for (size_t i = 0; i < cols; ++i) v[i] = u[i][j];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace reinhardt
