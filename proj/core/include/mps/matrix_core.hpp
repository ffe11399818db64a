#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "mps/complex_matrix.hpp"

namespace mps {

/// Measured MPS data of a Hermitian unitary matrix.
struct MpsProfile {
  std::size_t n = 0;
  double r = 0.0;  ///< common modulus of the diagonal
  double t = 0.0;  ///< common modulus of the off-diagonal entries
  double d = 0.0;  ///< r / t
  std::vector<int> diag_signs;  ///< +1 for non-negative real diagonal entries, -1 otherwise
  std::size_t p = 0;  ///< number of non-negative diagonal entries
  std::size_t m = 0;  ///< multiplicity of the eigenvalue +1
};

bool is_hermitian(const ComplexMatrix& m, Tolerance tol = {});

/// ||M M* - I||_F <= eps * n.
bool is_unitary(const ComplexMatrix& m, Tolerance tol = {});

/// Throws NotHermitianUnitary when m is not Hermitian unitary within tol and
/// NotMps when the diagonal or off-diagonal moduli are not constant (or the
/// off-diagonal modulus vanishes). A diagonal entry whose real part is within
/// eps of zero counts as non-negative.
MpsProfile mps_profile(const ComplexMatrix& m, Tolerance tol = {});

/// For n > 2 a Hermitian unitary MPS matrix has d <= n/2 - 1.
bool check_d_bound(std::size_t n, double d, Tolerance tol = {});

/// |(2m - n) - (2p - n) d / sqrt(d^2 + n - 1)| <= eps.
bool check_trace_identity(const MpsProfile& profile, Tolerance tol = {});

struct Balanced {
  friend bool operator==(Balanced, Balanced) = default;
};
struct Impossible {
  friend bool operator==(Impossible, Impossible) = default;
};
using DFromMp = std::variant<double, Balanced, Impossible>;

/// Ratio d forced by the eigenvalue multiplicity m and the diagonal sign count p.
DFromMp d_from_mp(std::size_t n, std::size_t m, std::size_t p);

/// Probabilities (|S_0j|^2, ..., |S_{n-1}j|^2) of leaving along each edge when
/// entering along edge j (zero-based). Requires a unitary S; throws
/// IndexOutOfRange for j >= n.
std::vector<double> scattering_probabilities(const ComplexMatrix& s, std::size_t edge, Tolerance tol = {});

}  // namespace mps
