#pragma once

#include <cstddef>
#include <vector>

#include "mps/matrix.hpp"

namespace mps {

/// Absolute threshold used by entrywise tests and, scaled by n, by the
/// Frobenius unitarity test.
class Tolerance {
 public:
  constexpr Tolerance() = default;
  explicit Tolerance(double eps);
  double eps() const noexcept { return eps_; }

 private:
  double eps_ = 1e-9;
};

/// Square complex matrix of order n >= 1 with finite entries.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(CMatrix values);

  static ComplexMatrix identity(std::size_t n) { return ComplexMatrix(CMatrix::identity(n)); }

  std::size_t n() const noexcept { return values_.rows(); }
  const Complex& operator()(std::size_t i, std::size_t j) const { return values_(i, j); }
  const CMatrix& values() const noexcept { return values_; }

  bool is_real(double eps) const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  CMatrix values_;
};

double frobenius_norm(const CMatrix& m);
double max_abs(const CMatrix& m);

/// Inverse by Gauss-Jordan elimination with partial pivoting.
/// Throws Singular when a pivot falls below pivot_threshold.
CMatrix inverse(const CMatrix& m, double pivot_threshold = 1e-14);

/// Result of complete-pivoting elimination: the numerical rank and the
/// columns that were chosen as pivots, in the order they were picked.
struct PivotedRank {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Rank by Gaussian elimination with complete pivoting; elimination stops when
/// the largest remaining entry is <= threshold.
PivotedRank pivoted_rank(const CMatrix& m, double threshold);

}  // namespace mps
