#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mps/complex_matrix.hpp"
#include "mps/permutation.hpp"
#include "mps/rational.hpp"

namespace mps {

/// Exact real MPS matrix Q = sqrt(d^2 + n - 1) S, stored as d together with a
/// sign pattern: Q_jj = sign_jj d and Q_jk = sign_jk for j != k. The
/// constructor checks symmetry and Q Q^T = (d^2 + n - 1) I exactly. For d = 0
/// the diagonal signs are normalized to +1.
class IntegerMps {
 public:
  IntegerMps(Rational d, IntMatrix signs);

  std::size_t n() const noexcept { return signs_.rows(); }
  const Rational& d() const noexcept { return d_; }
  const IntMatrix& signs() const noexcept { return signs_; }
  int sign(std::size_t i, std::size_t j) const { return static_cast<int>(signs_(i, j)); }
  Rational entry(std::size_t i, std::size_t j) const;
  /// d^2 + n - 1.
  Rational norm_squared() const;
  /// den(d) * Q as an integer matrix.
  IntMatrix scaled() const;
  /// Number of diagonal entries equal to +d.
  std::size_t p() const noexcept;

  IntegerMps negated() const;
  ComplexMatrix to_complex() const;

  friend bool operator==(const IntegerMps&, const IntegerMps&) = default;

 private:
  Rational d_;
  IntMatrix signs_;
};

/// True iff (d, signs) define a valid IntegerMps.
bool is_integer_mps(const Rational& d, const IntMatrix& signs);

/// Reads a real MPS matrix exactly; d is snapped to a rational with
/// denominator dividing max_den. Returns none if the matrix is not real
/// within tol or fails the exact check.
std::optional<IntegerMps> integer_mps_from_real(const ComplexMatrix& s, Tolerance tol = {}, std::int64_t max_den = 2);

/// Dephases s (D s D^-1 with D_0 = 1 and D_j = s_0j / |s_0j|) so that the
/// first row is positive, then reads the result as an IntegerMps if it is real.
std::optional<IntegerMps> dephase_to_real(const ComplexMatrix& s, Tolerance tol = {}, std::int64_t max_den = 2);

/// Real equivalence: M2(P(i), P(j)) = global * signs[P(i)] * signs[P(j)] * M1(i, j).
struct EquivalenceWitness {
  Permutation perm;
  std::vector<int> signs;
  int global = 1;

  static EquivalenceWitness identity(std::size_t n);

  IntegerMps apply(const IntegerMps& m) const;
  EquivalenceWitness inverse() const;
  /// this ∘ first.
  EquivalenceWitness after(const EquivalenceWitness& first) const;

  /// Throws InvalidArgument on size mismatch or entries outside ±1.
  void validate() const;

  friend bool operator==(const EquivalenceWitness&, const EquivalenceWitness&) = default;
};

/// Witness that sends original index order[k] to position k.
EquivalenceWitness witness_from_order(const std::vector<std::size_t>& order, std::vector<int> signs, int global);

}  // namespace mps
