#pragma once

#include <cstddef>

#include "mps/complex_matrix.hpp"
#include "mps/permutation.hpp"

namespace mps {

/// Free parameters of a Hermitian unitary matrix S != ±I:
///   S = -I + 2 P [I; T*] (I + T T*)^-1 [I  T] P^-1,
/// where m is the multiplicity of the eigenvalue +1 and T is m x (n-m).
struct HermitianUnitaryParam {
  std::size_t n = 0;
  std::size_t m = 0;
  CMatrix t;
  Permutation p;

  /// Throws InvalidArgument unless 1 <= m <= n-1, T is m x (n-m) and P has order n.
  void validate() const;
};

/// Parameters of a general unitary U != -I:
///   U = -I + 2 P [I; T*] (I + T T* + i S_h)^-1 [I  T] P^-1     (m < n)
///   U = -I + 2 (I + i S_h)^-1                                   (m = n)
/// with n - m the multiplicity of the eigenvalue -1 and S_h Hermitian.
struct UnitaryParam {
  std::size_t n = 0;
  std::size_t m = 0;
  CMatrix t;    ///< m x (n-m); empty when m == n
  CMatrix s_h;  ///< m x m, Hermitian
  Permutation p;

  void validate() const;
};

/// Coefficients of H^2 = a I + b H; requires 4a + b^2 > 0.
struct QuadraticSpec {
  double a = 1.0;
  double b = 0.0;
};

ComplexMatrix build_hermitian_unitary(const HermitianUnitaryParam& param);

/// Inverse of build_hermitian_unitary. m is read from the trace; P is the
/// identity whenever the leading m x m block of S + I is regular, otherwise it
/// moves the pivot columns of a complete-pivoting elimination of S + I to the
/// front. Throws TrivialMatrix for S = ±I and NotHermitianUnitary when the
/// input is not Hermitian unitary.
HermitianUnitaryParam decompose_hermitian_unitary(const ComplexMatrix& s, Tolerance tol = {});

struct Eigenbasis {
  CMatrix plus;   ///< n x m, columns are eigenvectors for +1
  CMatrix minus;  ///< n x (n-m), columns are eigenvectors for -1
};

Eigenbasis eigenbasis_from_param(const HermitianUnitaryParam& param);

ComplexMatrix build_unitary(const UnitaryParam& param);

/// m is rank(U + I) by complete-pivoting elimination with threshold eps.
/// Throws TrivialMatrix for U = -I and NotUnitary for non-unitary input.
UnitaryParam decompose_unitary(const ComplexMatrix& u, Tolerance tol = {});

/// Hermitian solution of H^2 = a I + b H with eigenvalue (b + sqrt(4a+b^2))/2
/// of multiplicity m and (b - sqrt(4a+b^2))/2 of multiplicity n - m.
/// Throws DegenerateSpec when 4a + b^2 <= 0.
ComplexMatrix build_quadratic_solution(const QuadraticSpec& spec, const HermitianUnitaryParam& param);

}  // namespace mps
