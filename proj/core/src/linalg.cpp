#include <cmath>
#include <numeric>

#include "mps/complex_matrix.hpp"

namespace mps {

Tolerance::Tolerance(double eps) : eps_(eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
}

ComplexMatrix::ComplexMatrix(CMatrix values) : values_(std::move(values)) {
  if (!values_.square() || values_.rows() == 0)
    throw Error(ErrorCode::InvalidArgument, "ComplexMatrix must be square with n >= 1");
  for (const auto& z : values_.values())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::InvalidArgument, "ComplexMatrix entries must be finite");
}

bool ComplexMatrix::is_real(double eps) const {
  for (const auto& z : values_.values())
    if (std::fabs(z.imag()) > eps) return false;
  return true;
}

double frobenius_norm(const CMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.values()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs(const CMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.values()) s = std::max(s, std::abs(z));
  return s;
}

CMatrix inverse(const CMatrix& m, double pivot_threshold) {
  if (!m.square()) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  CMatrix a = m;
  CMatrix inv = CMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) <= pivot_threshold) throw Error(ErrorCode::Singular, "matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const Complex scale = 1.0 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = a(r, col);
      if (f == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

PivotedRank pivoted_rank(const CMatrix& m, double threshold) {
  CMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> col_index(cols);
  std::iota(col_index.begin(), col_index.end(), 0);

  PivotedRank result;
  for (std::size_t step = 0; step < std::min(rows, cols); ++step) {
    std::size_t pr = step, pc = step;
    double best = -1.0;
    for (std::size_t r = step; r < rows; ++r)
      for (std::size_t c = step; c < cols; ++c)
        if (const double v = std::abs(a(r, c)); v > best) {
          best = v;
          pr = r;
          pc = c;
        }
    if (best <= threshold) break;
    if (pr != step)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(pr, j), a(step, j));
    if (pc != step) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, pc), a(i, step));
      std::swap(col_index[pc], col_index[step]);
    }
    result.pivot_columns.push_back(col_index[step]);
    ++result.rank;
    for (std::size_t r = step + 1; r < rows; ++r) {
      const Complex f = a(r, step) / a(step, step);
      if (f == Complex{}) continue;
      for (std::size_t c = step; c < cols; ++c) a(r, c) -= f * a(step, c);
    }
  }
  return result;
}

}  // namespace mps
