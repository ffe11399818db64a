#include "mps/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mps {

bool is_hermitian(const ComplexMatrix& m, Tolerance tol) {
  const std::size_t n = m.n();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k)
      if (std::abs(m(j, k) - std::conj(m(k, j))) > tol.eps()) return false;
  return true;
}

bool is_unitary(const ComplexMatrix& m, Tolerance tol) {
  const std::size_t n = m.n();
  const CMatrix residual = m.values() * adjoint(m.values()) - CMatrix::identity(n);
  return frobenius_norm(residual) <= tol.eps() * static_cast<double>(n);
}

MpsProfile mps_profile(const ComplexMatrix& m, Tolerance tol) {
  if (!is_hermitian(m, tol) || !is_unitary(m, tol))
    throw Error(ErrorCode::NotHermitianUnitary, "matrix is not Hermitian unitary within tolerance");
  const std::size_t n = m.n();
  if (n == 1) throw Error(ErrorCode::NotMps, "order 1 has no off-diagonal entries");
  const double eps = tol.eps();

  MpsProfile prof;
  prof.n = n;
  prof.diag_signs.resize(n);

  double rmin = INFINITY, rmax = 0.0, trace = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = m(j, j).real();  // imaginary part <= eps by hermiticity
    rmin = std::min(rmin, std::fabs(x));
    rmax = std::max(rmax, std::fabs(x));
    trace += x;
    prof.diag_signs[j] = x >= -eps ? 1 : -1;
  }
  if (rmax - rmin > eps) throw Error(ErrorCode::NotMps, "diagonal moduli are not constant");

  double tmin = INFINITY, tmax = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      const double a = std::abs(m(j, k));
      tmin = std::min(tmin, a);
      tmax = std::max(tmax, a);
    }
  if (tmax - tmin > eps) throw Error(ErrorCode::NotMps, "off-diagonal moduli are not constant");
  prof.r = 0.5 * (rmin + rmax);
  prof.t = 0.5 * (tmin + tmax);
  if (prof.t <= eps) throw Error(ErrorCode::NotMps, "off-diagonal modulus vanishes");
  prof.d = prof.r / prof.t;

  prof.p = static_cast<std::size_t>(std::count(prof.diag_signs.begin(), prof.diag_signs.end(), 1));
  const double half = 0.5 * (static_cast<double>(n) + trace);
  const double rounded = std::round(half);
  if (std::fabs(half - rounded) > eps * static_cast<double>(n))
    throw Error(ErrorCode::NotHermitianUnitary, "trace is inconsistent with spectrum {-1, 1}");
  prof.m = static_cast<std::size_t>(std::clamp(rounded, 0.0, static_cast<double>(n)));
  return prof;
}

bool check_d_bound(std::size_t n, double d, Tolerance tol) {
  return n <= 2 || d <= static_cast<double>(n) / 2.0 - 1.0 + tol.eps();
}

bool check_trace_identity(const MpsProfile& profile, Tolerance tol) {
  const double n = static_cast<double>(profile.n);
  const double lhs = 2.0 * static_cast<double>(profile.m) - n;
  const double rhs = (2.0 * static_cast<double>(profile.p) - n) * profile.d / std::sqrt(profile.d * profile.d + n - 1.0);
  return std::fabs(lhs - rhs) <= tol.eps();
}

DFromMp d_from_mp(std::size_t n, std::size_t m, std::size_t p) {
  if (m > n || p > n) throw Error(ErrorCode::InvalidArgument, "m and p must lie in [0, n]");
  // Work with doubled quantities so n/2 stays integral.
  const long long n_ = static_cast<long long>(n);
  const long long m2 = 2 * static_cast<long long>(m);
  const long long p2 = 2 * static_cast<long long>(p);
  if (m2 == n_ && p2 == n_) return Balanced{};
  const bool below = p2 < m2 && m2 < n_;
  const bool above = p2 > m2 && m2 > n_;
  if (!below && !above) return Impossible{};
  const double mm = static_cast<double>(m), pp = static_cast<double>(p), nn = static_cast<double>(n);
  return std::fabs(mm - nn / 2.0) * std::sqrt((nn - 1.0) / ((pp - mm) * (pp + mm - nn)));
}

std::vector<double> scattering_probabilities(const ComplexMatrix& s, std::size_t edge, Tolerance tol) {
  if (edge >= s.n())
    throw Error(ErrorCode::IndexOutOfRange, "edge " + std::to_string(edge) + " outside order " + std::to_string(s.n()));
  if (!is_unitary(s, tol)) throw Error(ErrorCode::NotUnitary, "scattering matrix must be unitary");
  std::vector<double> probs(s.n());
  for (std::size_t k = 0; k < s.n(); ++k) probs[k] = std::norm(s(k, edge));
  return probs;
}

}  // namespace mps
