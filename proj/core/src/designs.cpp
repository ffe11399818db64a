#include "mps/designs.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace mps {

namespace {

IntMatrix gram(const IntMatrix& a) {
  const std::size_t n = a.rows();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      long long s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * a(j, k);
      g(i, j) = g(j, i) = s;
    }
  return g;
}

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t f = 2; f * f <= q; ++f)
    if (q % f == 0) return false;
  return true;
}

long long isqrt_exact(long long x) {
  if (x < 0) return -1;
  auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(x))));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x ? r : -1;
}

// Row/column scaling that makes the first row and column of `a` all ones
// (entry (0,0) is left as is): row i by r_i, column j by c_j.
template <class T, class Scale>
Matrix<T> dephase(const Matrix<T>& a, Scale unit_inverse) {
  const std::size_t n = a.rows();
  std::vector<T> r(n, T{1}), c(n, T{1});
  if (a(0, 0) != T{}) r[0] = unit_inverse(a(0, 0));
  for (std::size_t i = 1; i < n; ++i) r[i] = unit_inverse(a(i, 0));
  for (std::size_t j = 1; j < n; ++j) c[j] = unit_inverse(r[0] * a(0, j));
  Matrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r[i] * a(i, j) * c[j];
  return out;
}

}  // namespace

bool verify_design(const IntMatrix& a, long long v, long long k, long long lambda, bool allow_degenerate) {
  if (v < 1 || a.rows() != static_cast<std::size_t>(v) || a.cols() != static_cast<std::size_t>(v)) return false;
  if (!(v > k && k > lambda && lambda >= 0)) return false;
  if (lambda == 0 && !allow_degenerate) return false;
  for (const long long x : a.values())
    if (x != 0 && x != 1) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    long long row = 0, col = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      row += a(i, j);
      col += a(j, i);
    }
    if (row != k || col != k) return false;
  }
  const IntMatrix g = gram(a);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (g(i, j) != (i == j ? k : lambda)) return false;
  return true;
}

bool is_hadamard(const IntMatrix& h) {
  if (!h.square() || h.empty()) return false;
  for (const long long x : h.values())
    if (x != 1 && x != -1) return false;
  const IntMatrix g = gram(h);
  const auto n = static_cast<long long>(h.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (g(i, j) != (i == j ? n : 0)) return false;
  return true;
}

bool is_conference(const IntMatrix& c) {
  if (!c.square() || c.empty()) return false;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      const long long x = c(i, j);
      if (i == j ? x != 0 : (x != 1 && x != -1)) return false;
    }
  const IntMatrix g = gram(c);
  const auto n1 = static_cast<long long>(c.rows()) - 1;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (g(i, j) != (i == j ? n1 : 0)) return false;
  return true;
}

SymmetricDesign::SymmetricDesign(IntMatrix incidence, long long v, long long k, long long lambda, bool allow_degenerate)
    : a_(std::move(incidence)), v_(v), k_(k), lambda_(lambda) {
  if (!verify_design(a_, v, k, lambda, allow_degenerate))
    throw Error(ErrorCode::DesignInvalid, "incidence matrix is not a symmetric (" + std::to_string(v) + "," +
                                              std::to_string(k) + "," + std::to_string(lambda) + ")-design");
}

RealHadamard::RealHadamard(IntMatrix h) : h_(std::move(h)) {
  if (!is_hadamard(h_)) throw Error(ErrorCode::NotHadamard, "H H^T != N I or entries not ±1");
}

ComplexHadamard::ComplexHadamard(CMatrix h, Tolerance tol) : h_(std::move(h)) {
  if (!h_.square() || h_.empty()) throw Error(ErrorCode::NotHadamard, "complex Hadamard matrix must be square");
  for (const auto& z : h_.values())
    if (std::fabs(std::abs(z) - 1.0) > tol.eps()) throw Error(ErrorCode::NotHadamard, "entries must be unimodular");
  const auto n = static_cast<double>(h_.rows());
  if (frobenius_norm(h_ * adjoint(h_) - n * CMatrix::identity(h_.rows())) > tol.eps() * n)
    throw Error(ErrorCode::NotHadamard, "H H* != N I");
}

ConferenceMatrix::ConferenceMatrix(IntMatrix c) : c_(std::move(c)) {
  if (!is_conference(c_)) throw Error(ErrorCode::NotConference, "not a conference matrix");
}

bool ConferenceMatrix::symmetric() const { return c_ == c_.transpose(); }

HermitianConference::HermitianConference(CMatrix c, Tolerance tol) : c_(std::move(c)) {
  const std::size_t n = c_.rows();
  if (!c_.square() || n == 0) throw Error(ErrorCode::NotHermitianConference, "must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex z = c_(i, j);
      if (i == j ? std::abs(z) > tol.eps() : std::fabs(std::abs(z) - 1.0) > tol.eps())
        throw Error(ErrorCode::NotHermitianConference, "needs zero diagonal and unimodular off-diagonal entries");
      if (std::abs(z - std::conj(c_(j, i))) > tol.eps())
        throw Error(ErrorCode::NotHermitianConference, "not Hermitian");
    }
  const auto n1 = static_cast<double>(n) - 1.0;
  if (frobenius_norm(c_ * adjoint(c_) - n1 * CMatrix::identity(n)) > tol.eps() * static_cast<double>(n))
    throw Error(ErrorCode::NotHermitianConference, "C C* != (N-1) I");
}

RealHadamard sylvester_hadamard(std::size_t order) {
  if (order == 0 || (order & (order - 1)) != 0)
    throw Error(ErrorCode::BadOrder, "Sylvester order must be a power of two, got " + std::to_string(order));
  IntMatrix h{{1}};
  while (h.rows() < order) {
    const std::size_t m = h.rows();
    IntMatrix next(2 * m, 2 * m);
    next.set_block(0, 0, h);
    next.set_block(0, m, h);
    next.set_block(m, 0, h);
    next.set_block(m, m, -h);
    h = std::move(next);
  }
  return RealHadamard(std::move(h));
}

ConferenceMatrix paley_conference(std::size_t order) {
  const std::size_t q = order == 0 ? 0 : order - 1;
  if (!is_prime(q) || q % 4 != 1)
    throw Error(ErrorCode::BadOrder, "Paley conference order must be q+1 with prime q = 1 mod 4, got " +
                                         std::to_string(order));
  std::vector<long long> chi(q, -1);
  chi[0] = 0;
  for (std::size_t x = 1; x < q; ++x) chi[(x * x) % q] = 1;
  IntMatrix c(order, order);
  for (std::size_t j = 1; j < order; ++j) c(0, j) = c(j, 0) = 1;
  for (std::size_t i = 1; i < order; ++i)
    for (std::size_t j = 1; j < order; ++j) c(i, j) = chi[(i - j + q) % q];
  return ConferenceMatrix(std::move(c));
}

ComplexHadamard fourier_complex_hadamard(std::size_t order) {
  if (order == 0) throw Error(ErrorCode::BadOrder, "order must be positive");
  CMatrix h(order, order);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(order);
  for (std::size_t j = 0; j < order; ++j)
    for (std::size_t k = 0; k < order; ++k) {
      const std::size_t e = (j * k) % order;
      h(j, k) = std::polar(1.0, w * static_cast<double>(e));
    }
  return ComplexHadamard(std::move(h));
}

Normalized<RealHadamard, IntMatrix> normalize_to_standard(const RealHadamard& h) {
  IntMatrix s = dephase(h.matrix(), [](long long x) { return x; });
  const std::size_t n = s.rows();
  IntMatrix core = s.block(1, 1, n - 1, n - 1);
  return {RealHadamard(std::move(s)), std::move(core)};
}

Normalized<ComplexHadamard, CMatrix> normalize_to_standard(const ComplexHadamard& h) {
  CMatrix s = dephase(h.matrix(), [](Complex z) { return std::conj(z) / std::norm(z); });
  const std::size_t n = s.rows();
  CMatrix core = s.block(1, 1, n - 1, n - 1);
  return {ComplexHadamard(std::move(s)), std::move(core)};
}

Normalized<ConferenceMatrix, IntMatrix> normalize_to_standard(const ConferenceMatrix& c) {
  // The diagonal is zero, so negations always reach the standard form.
  IntMatrix s = dephase(c.matrix(), [](long long x) { return x; });
  const std::size_t n = s.rows();
  IntMatrix core = s.block(1, 1, n - 1, n - 1);
  return {ConferenceMatrix(std::move(s)), std::move(core)};
}

std::optional<DesignParams> design_params_for(std::size_t n, const Rational& d) {
  if (n < 6 || n % 2 != 0 || !d.is_integer() || d.num() < 0) return std::nullopt;
  const auto v = static_cast<long long>(n / 2);
  const long long dd = d.num();
  const long long q = isqrt_exact(v + (v - 1) * (2 * dd + 2 - v));
  if (q < 0) return std::nullopt;
  if ((v - q) % 2 != 0 || (dd - q + 1) % 2 != 0) return std::nullopt;
  const long long k = (v - q) / 2;
  const long long lambda = (dd - q + 1) / 2;
  if (!(v > k && k >= 1 && lambda >= 0)) return std::nullopt;
  return DesignParams{q, k, lambda};
}

SymmetricDesign hadamard_to_design(const RealHadamard& h) {
  const std::size_t big_n = h.order();
  if (big_n < 4 || big_n % 4 != 0)
    throw Error(ErrorCode::BadOrder, "Hadamard order must be a multiple of 4, got " + std::to_string(big_n));
  const IntMatrix core = normalize_to_standard(h).core;
  IntMatrix a(core.rows(), core.cols());
  for (std::size_t i = 0; i < core.rows(); ++i)
    for (std::size_t j = 0; j < core.cols(); ++j) a(i, j) = (1 + core(i, j)) / 2;
  const auto nn = static_cast<long long>(big_n);
  return SymmetricDesign(std::move(a), nn - 1, nn / 2 - 1, nn / 4 - 1, true);
}

}  // namespace mps
