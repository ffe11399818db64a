#include "mps/integer_mps.hpp"

#include <cmath>
#include <string>

#include "mps/matrix_core.hpp"

namespace mps {

namespace {

bool pattern_ok(const IntMatrix& s) {
  if (!s.square() || s.rows() == 0) return false;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      const long long x = s(i, j);
      if (x != 1 && x != -1) return false;
      if (s(j, i) != x) return false;
    }
  return true;
}

bool orthogonal(const Rational& d, const IntMatrix& s) {
  const std::size_t n = s.rows();
  const long long num = d.num(), den = d.den();
  // Rows of den * Q.
  std::vector<long long> q(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i * n + j] = s(i, j) * (i == j ? num : den);
  const long long target = num * num + den * den * static_cast<long long>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      long long acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += q[i * n + k] * q[j * n + k];
      if (acc != (i == j ? target : 0)) return false;
    }
  return true;
}

IntMatrix normalized(const Rational& d, IntMatrix s) {
  if (d.num() == 0)
    for (std::size_t i = 0; i < s.rows(); ++i) s(i, i) = 1;
  return s;
}

}  // namespace

bool is_integer_mps(const Rational& d, const IntMatrix& signs) {
  if (d.num() < 0 || !pattern_ok(signs)) return false;
  return orthogonal(d, normalized(d, signs));
}

IntegerMps::IntegerMps(Rational d, IntMatrix signs) : d_(d), signs_(normalized(d, std::move(signs))) {
  if (d_.num() < 0) throw Error(ErrorCode::InvalidArgument, "d must be non-negative");
  if (!pattern_ok(signs_)) throw Error(ErrorCode::NotMps, "sign pattern must be a symmetric ±1 matrix");
  if (!orthogonal(d_, signs_))
    throw Error(ErrorCode::NotHermitianUnitary, "Q Q^T != (d^2 + n - 1) I for d = " + d_.str());
}

Rational IntegerMps::entry(std::size_t i, std::size_t j) const {
  return i == j ? Rational(signs_(i, j)) * d_ : Rational(signs_(i, j));
}

Rational IntegerMps::norm_squared() const { return d_ * d_ + Rational(static_cast<std::int64_t>(n()) - 1); }

IntMatrix IntegerMps::scaled() const {
  IntMatrix q(n(), n());
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) q(i, j) = signs_(i, j) * (i == j ? d_.num() : d_.den());
  return q;
}

std::size_t IntegerMps::p() const noexcept {
  std::size_t p = 0;
  for (std::size_t i = 0; i < n(); ++i) p += signs_(i, i) > 0 ? 1 : 0;
  return p;
}

IntegerMps IntegerMps::negated() const { return IntegerMps(d_, -signs_); }

ComplexMatrix IntegerMps::to_complex() const {
  const double scale = 1.0 / std::sqrt(norm_squared().to_double());
  const double dd = d_.to_double();
  CMatrix s(n(), n());
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j)
      s(i, j) = Complex(static_cast<double>(signs_(i, j)) * (i == j ? dd : 1.0) * scale, 0.0);
  return ComplexMatrix(std::move(s));
}

std::optional<IntegerMps> integer_mps_from_real(const ComplexMatrix& s, Tolerance tol, std::int64_t max_den) {
  if (!s.is_real(tol.eps())) return std::nullopt;
  MpsProfile prof;
  try {
    prof = mps_profile(s, tol);
  } catch (const Error&) {
    return std::nullopt;
  }
  Rational d;
  if (!Rational::try_snap(prof.d, max_den, 1e3 * tol.eps(), d)) return std::nullopt;
  const std::size_t n = s.n();
  IntMatrix signs(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      signs(i, j) = i == j ? prof.diag_signs[i] : (s(i, j).real() < 0.0 ? -1 : 1);
  if (!is_integer_mps(d, signs)) return std::nullopt;
  return IntegerMps(d, std::move(signs));
}

std::optional<IntegerMps> dephase_to_real(const ComplexMatrix& s, Tolerance tol, std::int64_t max_den) {
  const std::size_t n = s.n();
  std::vector<Complex> phase(n, Complex(1.0, 0.0));
  for (std::size_t j = 1; j < n; ++j) {
    const double r = std::abs(s(0, j));
    if (r <= tol.eps()) return std::nullopt;
    phase[j] = s(0, j) / r;
  }
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = phase[i] * s(i, j) * std::conj(phase[j]);
  return integer_mps_from_real(ComplexMatrix(std::move(out)), tol, max_den);
}

EquivalenceWitness EquivalenceWitness::identity(std::size_t n) {
  return EquivalenceWitness{Permutation::identity(n), std::vector<int>(n, 1), 1};
}

void EquivalenceWitness::validate() const {
  if (signs.size() != perm.size()) throw Error(ErrorCode::InvalidArgument, "witness signs and permutation differ in size");
  for (const int s : signs)
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidArgument, "witness signs must be ±1");
  if (global != 1 && global != -1) throw Error(ErrorCode::InvalidArgument, "witness global sign must be ±1");
}

IntegerMps EquivalenceWitness::apply(const IntegerMps& m) const {
  validate();
  if (perm.size() != m.n()) throw Error(ErrorCode::InvalidArgument, "witness size does not match matrix");
  const std::size_t n = m.n();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t a = perm(i), b = perm(j);
      out(a, b) = global * signs[a] * signs[b] * m.signs()(i, j);
    }
  return IntegerMps(m.d(), std::move(out));
}

EquivalenceWitness EquivalenceWitness::inverse() const {
  validate();
  std::vector<int> s(signs.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = signs[perm(i)];
  return EquivalenceWitness{perm.inverse(), std::move(s), global};
}

EquivalenceWitness EquivalenceWitness::after(const EquivalenceWitness& first) const {
  validate();
  first.validate();
  if (first.perm.size() != perm.size()) throw Error(ErrorCode::InvalidArgument, "witness sizes differ");
  const Permutation inv = perm.inverse();
  std::vector<int> s(signs.size());
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = signs[k] * first.signs[inv(k)];
  return EquivalenceWitness{perm.after(first.perm), std::move(s), global * first.global};
}

EquivalenceWitness witness_from_order(const std::vector<std::size_t>& order, std::vector<int> signs, int global) {
  std::vector<std::size_t> image(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) image.at(order[k]) = k;
  return EquivalenceWitness{Permutation(std::move(image)), std::move(signs), global};
}

}  // namespace mps
