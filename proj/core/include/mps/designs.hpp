#pragma once

#include <cstddef>
#include <optional>

#include "mps/complex_matrix.hpp"
#include "mps/rational.hpp"

namespace mps {

/// Symmetric (v, k, lambda)-design given by its 0/1 incidence matrix.
/// The constructor verifies A A^T = (k - lambda) I + lambda J and A J = k J.
/// lambda = 0 (A a permutation matrix) is only accepted with allow_degenerate.
class SymmetricDesign {
 public:
  SymmetricDesign(IntMatrix incidence, long long v, long long k, long long lambda, bool allow_degenerate = false);

  long long v() const noexcept { return v_; }
  long long k() const noexcept { return k_; }
  long long lambda() const noexcept { return lambda_; }
  const IntMatrix& incidence() const noexcept { return a_; }
  bool degenerate() const noexcept { return lambda_ == 0; }

 private:
  IntMatrix a_;
  long long v_, k_, lambda_;
};

/// Real Hadamard matrix: entries ±1, H H^T = N I (checked exactly).
class RealHadamard {
 public:
  explicit RealHadamard(IntMatrix h);
  std::size_t order() const noexcept { return h_.rows(); }
  const IntMatrix& matrix() const noexcept { return h_; }

 private:
  IntMatrix h_;
};

/// Complex Hadamard matrix: unimodular entries, H H* = N I within tolerance.
class ComplexHadamard {
 public:
  explicit ComplexHadamard(CMatrix h, Tolerance tol = {});
  std::size_t order() const noexcept { return h_.rows(); }
  const CMatrix& matrix() const noexcept { return h_; }

 private:
  CMatrix h_;
};

/// Real conference matrix: zero diagonal, ±1 elsewhere, C C^T = (N-1) I (exact).
class ConferenceMatrix {
 public:
  explicit ConferenceMatrix(IntMatrix c);
  std::size_t order() const noexcept { return c_.rows(); }
  const IntMatrix& matrix() const noexcept { return c_; }
  bool symmetric() const;

 private:
  IntMatrix c_;
};

/// Hermitian conference matrix: zero diagonal, unimodular off-diagonal,
/// C = C*, C C* = (N-1) I within tolerance.
class HermitianConference {
 public:
  explicit HermitianConference(CMatrix c, Tolerance tol = {});
  std::size_t order() const noexcept { return c_.rows(); }
  const CMatrix& matrix() const noexcept { return c_; }

 private:
  CMatrix c_;
};

bool verify_design(const IntMatrix& a, long long v, long long k, long long lambda, bool allow_degenerate = false);
bool is_hadamard(const IntMatrix& h);
bool is_conference(const IntMatrix& c);

/// Sylvester construction; N must be a power of two. Throws BadOrder.
RealHadamard sylvester_hadamard(std::size_t order);

/// Paley conference matrix of order q + 1 for a prime q = 1 (mod 4):
/// C_0j = C_j0 = 1, C_ij = chi(i - j) on the residues. Throws BadOrder.
ConferenceMatrix paley_conference(std::size_t order);

/// H_jk = exp(2 pi i j k / N).
ComplexHadamard fourier_complex_hadamard(std::size_t order);

template <class M, class Core>
struct Normalized {
  M standard;
  Core core;
};

/// First row and column made all ones by row/column negations.
Normalized<RealHadamard, IntMatrix> normalize_to_standard(const RealHadamard& h);
/// Dephased: first row and column made all ones by unimodular scaling.
Normalized<ComplexHadamard, CMatrix> normalize_to_standard(const ComplexHadamard& h);
/// Off-diagonal first row and column made all ones by negations.
Normalized<ConferenceMatrix, IntMatrix> normalize_to_standard(const ConferenceMatrix& c);

struct DesignParams {
  long long q = 0;
  long long k = 0;
  long long lambda = 0;
};

/// Parameters (q, k, lambda) with q^2 = v + (v-1)(2d+2-v), v = n/2,
/// k = (v - q)/2 and lambda = (d - q + 1)/2; none unless all are integers
/// with v > k >= 1 and lambda >= 0.
std::optional<DesignParams> design_params_for(std::size_t n, const Rational& d);

/// (N-1, N/2-1, N/4-1)-design A = (J + K)/2 from the normalized core K.
/// N = 4 yields the degenerate (3, 1, 0) design. Throws BadOrder unless
/// N >= 4 and N = 0 (mod 4).
SymmetricDesign hadamard_to_design(const RealHadamard& h);

}  // namespace mps
