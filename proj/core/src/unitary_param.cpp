#include "mps/unitary_param.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mps/matrix_core.hpp"

namespace mps {

namespace {

void check_common(std::size_t n, std::size_t m, const CMatrix& t, const Permutation& p, bool allow_full) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  if (m < 1 || m > n || (!allow_full && m == n))
    throw Error(ErrorCode::InvalidArgument, "m = " + std::to_string(m) + " out of range for n = " + std::to_string(n));
  if (m < n && (t.rows() != m || t.cols() != n - m))
    throw Error(ErrorCode::InvalidArgument, "T must be m x (n-m)");
  if (p.size() != n) throw Error(ErrorCode::InvalidArgument, "permutation must have order n");
}

// [I; T*] stacked n x m.
CMatrix upper_frame(const CMatrix& t, std::size_t m) {
  const std::size_t k = t.cols();
  CMatrix x(m + k, m);
  x.set_block(0, 0, CMatrix::identity(m));
  x.set_block(m, 0, adjoint(t));
  return x;
}

// [I  T] m x n.
CMatrix row_frame(const CMatrix& t, std::size_t m) {
  CMatrix x(m, m + t.cols());
  x.set_block(0, 0, CMatrix::identity(m));
  x.set_block(0, m, t);
  return x;
}

// P [I; T*] K [I T] P^-1 for a given m x m core K.
CMatrix framed(const CMatrix& t, std::size_t m, const CMatrix& core, const Permutation& p) {
  return p.conjugate(upper_frame(t, m) * core * row_frame(t, m));
}

// Projector onto the +1 eigenspace: P [I; T*] (I + T T*)^-1 [I T] P^-1.
CMatrix plus_projector(const HermitianUnitaryParam& param) {
  const CMatrix gram = CMatrix::identity(param.m) + param.t * adjoint(param.t);
  return framed(param.t, param.m, inverse(gram), param.p);
}

// Leading block permutation: identity when the leading m x m block of B is
// regular, otherwise pivot columns first (in increasing order), rest after.
Permutation leading_block_permutation(const CMatrix& b, std::size_t m, double threshold) {
  const std::size_t n = b.rows();
  if (pivoted_rank(b.block(0, 0, m, m), threshold).rank == m) return Permutation::identity(n);
  PivotedRank pr = pivoted_rank(b, threshold);
  std::vector<bool> chosen(n, false);
  for (std::size_t k = 0; k < m && k < pr.pivot_columns.size(); ++k) chosen[pr.pivot_columns[k]] = true;
  // image(i) = original index placed at position i; P^-1 B P then has the
  // chosen indices leading.
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < n; ++k)
    if (chosen[k]) order.push_back(k);
  for (std::size_t k = 0; k < n; ++k)
    if (!chosen[k]) order.push_back(k);
  return Permutation(std::move(order));
}

}  // namespace

void HermitianUnitaryParam::validate() const { check_common(n, m, t, p, false); }

void UnitaryParam::validate() const {
  check_common(n, m, t, p, true);
  if (s_h.rows() != m || s_h.cols() != m) throw Error(ErrorCode::InvalidArgument, "S_h must be m x m");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (s_h(i, j) != std::conj(s_h(j, i))) throw Error(ErrorCode::InvalidArgument, "S_h must be Hermitian");
}

ComplexMatrix build_hermitian_unitary(const HermitianUnitaryParam& param) {
  param.validate();
  return ComplexMatrix(2.0 * plus_projector(param) - CMatrix::identity(param.n));
}

HermitianUnitaryParam decompose_hermitian_unitary(const ComplexMatrix& s, Tolerance tol) {
  if (!is_hermitian(s, tol) || !is_unitary(s, tol))
    throw Error(ErrorCode::NotHermitianUnitary, "input is not Hermitian unitary");
  const std::size_t n = s.n();
  double trace = 0.0;
  for (std::size_t j = 0; j < n; ++j) trace += s(j, j).real();
  const double half = std::round(0.5 * (static_cast<double>(n) + trace));
  const std::size_t m = static_cast<std::size_t>(std::max(0.0, half));
  if (m == 0 || m >= n) throw Error(ErrorCode::TrivialMatrix, "S = ±I has no parametrization");

  const CMatrix b_orig = s.values() + CMatrix::identity(n);
  Permutation p = leading_block_permutation(b_orig, m, tol.eps());
  // B = P^-1 (S + I) P = [M  M T; T* M  T* M T].
  const CMatrix b = p.inverse().conjugate(b_orig);
  const CMatrix lead = b.block(0, 0, m, m);
  const CMatrix t = inverse(lead) * b.block(0, m, m, n - m);
  return HermitianUnitaryParam{n, m, t, std::move(p)};
}

Eigenbasis eigenbasis_from_param(const HermitianUnitaryParam& param) {
  param.validate();
  const std::size_t m = param.m, k = param.n - param.m;
  CMatrix minus(param.n, k);
  minus.set_block(0, 0, -param.t);
  minus.set_block(m, 0, CMatrix::identity(k));
  return Eigenbasis{param.p.permute_rows(upper_frame(param.t, m)), param.p.permute_rows(minus)};
}

ComplexMatrix build_unitary(const UnitaryParam& param) {
  param.validate();
  const std::size_t n = param.n, m = param.m;
  const Complex i1(0.0, 1.0);
  if (m == n) {
    const CMatrix core = inverse(CMatrix::identity(m) + i1 * param.s_h);
    return ComplexMatrix(2.0 * core - CMatrix::identity(n));
  }
  const CMatrix core = inverse(CMatrix::identity(m) + param.t * adjoint(param.t) + i1 * param.s_h);
  return ComplexMatrix(2.0 * framed(param.t, m, core, param.p) - CMatrix::identity(n));
}

UnitaryParam decompose_unitary(const ComplexMatrix& u, Tolerance tol) {
  if (!is_unitary(u, tol)) throw Error(ErrorCode::NotUnitary, "input is not unitary");
  const std::size_t n = u.n();
  const CMatrix b_orig = u.values() + CMatrix::identity(n);
  const std::size_t m = pivoted_rank(b_orig, tol.eps()).rank;
  if (m == 0) throw Error(ErrorCode::TrivialMatrix, "U = -I has no parametrization");

  const Complex i1(0.0, 1.0);
  UnitaryParam param;
  param.n = n;
  param.m = m;
  CMatrix x;  // 2 M^-1 - I - T T* = i S_h
  if (m == n) {
    param.p = Permutation::identity(n);
    x = 2.0 * inverse(b_orig) - CMatrix::identity(n);
  } else {
    param.p = leading_block_permutation(b_orig, m, tol.eps());
    const CMatrix b = param.p.inverse().conjugate(b_orig);
    const CMatrix lead = b.block(0, 0, m, m);
    param.t = inverse(lead) * b.block(0, m, m, n - m);
    x = 2.0 * inverse(lead) - CMatrix::identity(m) - param.t * adjoint(param.t);
  }
  const CMatrix xa = adjoint(x);
  const CMatrix herm_part = 0.5 * (x + xa);
  if (max_abs(herm_part) > tol.eps() * static_cast<double>(n))
    throw Error(ErrorCode::NotUnitary, "Hermitian residual of 2M^-1 - I - TT* exceeds tolerance");
  CMatrix s_h = (x - xa) * Complex(0.0, -0.5);  // (X - X*) / (2i)
  // Store exactly Hermitian.
  for (std::size_t i = 0; i < m; ++i) {
    s_h(i, i) = Complex(s_h(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < m; ++j) s_h(j, i) = std::conj(s_h(i, j));
  }
  param.s_h = std::move(s_h);
  return param;
}

ComplexMatrix build_quadratic_solution(const QuadraticSpec& spec, const HermitianUnitaryParam& param) {
  const double disc = 4.0 * spec.a + spec.b * spec.b;
  if (!(disc > 0.0)) throw Error(ErrorCode::DegenerateSpec, "4a + b^2 must be positive");
  param.validate();
  const double root = std::sqrt(disc);
  return ComplexMatrix(root * plus_projector(param) + (0.5 * (spec.b - root)) * CMatrix::identity(param.n));
}

}  // namespace mps
