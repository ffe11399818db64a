#include "mps/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace mps {

namespace {

constexpr double kSlack = 1e-12;

std::string fmt(double x) {
  std::string s = std::to_string(x);
  return s;
}

void require_in(double d, double lo, double hi, const char* family) {
  if (!(d >= lo - kSlack && d <= hi + kSlack))
    throw Error(ErrorCode::OutOfRange, std::string(family) + ": d = " + fmt(d) + " outside [" + fmt(lo) + ", " +
                                           fmt(hi) + "]");
}

void require_even(std::size_t n, std::size_t min_n, const char* family) {
  if (n % 2 != 0 || n < min_n)
    throw Error(ErrorCode::OutOfRange,
                std::string(family) + ": n must be even and >= " + std::to_string(min_n) + ", got " + std::to_string(n));
}

// (1/sqrt(d^2+n-1)) [[(d+1)I - J, G], [G*, -(d+1)I + J]].
ComplexMatrix great_d_assembly(double d, const CMatrix& g) {
  const std::size_t m = g.rows();
  const std::size_t n = 2 * m;
  const CMatrix f = (d + 1.0) * CMatrix::identity(m) - CMatrix::ones(m, m);
  CMatrix s(n, n);
  s.set_block(0, 0, f);
  s.set_block(0, m, g);
  s.set_block(m, 0, adjoint(g));
  s.set_block(m, m, -f);
  return ComplexMatrix(s * Complex(1.0 / std::sqrt(d * d + static_cast<double>(n) - 1.0), 0.0));
}

CMatrix exp_i(double alpha, const IntMatrix& k) {
  CMatrix g(k.rows(), k.cols());
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) g(i, j) = std::polar(1.0, alpha * static_cast<double>(k(i, j)));
  return g;
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

bool power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

// d = n/2 - 1 - (k - lambda)(1 - cos 2 alpha), cut off at 0.
double design_floor(std::size_t n, const SymmetricDesign& design) {
  return std::max(0.0, static_cast<double>(n) / 2.0 - 1.0 - 2.0 * static_cast<double>(design.k() - design.lambda()));
}

double conference_floor(double n) { return std::max(0.0, n / 4.0 - 1.5 - 1.0 / (n - 2.0)); }

void require_design_order(std::size_t n, const SymmetricDesign& design) {
  if (n % 2 != 0 || static_cast<long long>(n / 2) != design.v())
    throw Error(ErrorCode::DesignInvalid, "design must have v = n/2");
}

// Rational d -> IntegerMps when the matrix is real and the sign pattern checks out exactly.
std::optional<IntegerMps> exact_if_real(const ComplexMatrix& s, const Rational& d) {
  if (!s.is_real(1e-12)) return std::nullopt;
  const std::size_t n = s.n();
  IntMatrix signs(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) signs(i, j) = s(i, j).real() < -1e-12 ? -1 : 1;
  if (!is_integer_mps(d, signs)) return std::nullopt;
  return IntegerMps(d, std::move(signs));
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::full_j: return "full_j";
    case Family::n2: return "n2";
    case Family::upper_interval: return "upper_interval";
    case Family::hadamard_core: return "hadamard_core";
    case Family::conference_core: return "conference_core";
    case Family::complex_core: return "complex_core";
    case Family::conference_block: return "conference_block";
    case Family::design_complex: return "design_complex";
    case Family::design_real: return "design_real";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (const Family f : kAllFamilies)
    if (family_name(f) == name) return f;
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

ComplexMatrix full_j_matrix(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::OutOfRange, "full_j: n must be >= 2");
  const double c = 2.0 / static_cast<double>(n);
  return ComplexMatrix(CMatrix::identity(n) - Complex(c, 0.0) * CMatrix::ones(n, n));
}

IntegerMps full_j_exact(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::OutOfRange, "full_j: n must be >= 2");
  IntMatrix signs(n, n, -1);
  for (std::size_t i = 0; i < n; ++i) signs(i, i) = 1;
  return IntegerMps(Rational(static_cast<std::int64_t>(n) - 2, 2), std::move(signs));
}

ComplexMatrix n2_matrix(double d) {
  if (!(d >= 0.0) || !std::isfinite(d)) throw Error(ErrorCode::OutOfRange, "n2: d must be >= 0");
  const double s = 1.0 / std::sqrt(d * d + 1.0);
  return ComplexMatrix(CMatrix{{d * s, s}, {s, -d * s}});
}

ComplexMatrix upper_interval(std::size_t n, double d) {
  require_even(n, 4, "upper_interval");
  const double half = static_cast<double>(n) / 2.0;
  require_in(d, std::max(0.0, half - 3.0), half - 1.0, "upper_interval");
  const double alpha = std::acos(clamp_unit(d + 2.0 - half));
  const std::size_t m = n / 2;
  const CMatrix g = (std::polar(1.0, alpha) - 1.0) * CMatrix::identity(m) + CMatrix::ones(m, m);
  return great_d_assembly(d, g);
}

ComplexMatrix hadamard_core_family(std::size_t n, double d, const RealHadamard& h) {
  require_even(n, 6, "hadamard_core");
  if (h.order() != n / 2 + 1)
    throw Error(ErrorCode::BadOrder, "hadamard_core: Hadamard order must be n/2 + 1 = " + std::to_string(n / 2 + 1));
  const double nn = static_cast<double>(n);
  require_in(d, nn / 4.0 - 1.5, nn / 2.0 - 1.0, "hadamard_core");
  const double cos2 = std::clamp(4.0 * (d + 2.0) / (nn + 2.0) - 1.0, 0.0, 1.0);
  const double alpha = std::acos(std::sqrt(cos2));
  return great_d_assembly(d, exp_i(alpha, normalize_to_standard(h).core));
}

ComplexMatrix conference_core_family(std::size_t n, double d, const ConferenceMatrix& c) {
  require_even(n, 6, "conference_core");
  if (c.order() != n / 2 + 1)
    throw Error(ErrorCode::BadOrder, "conference_core: conference order must be n/2 + 1 = " + std::to_string(n / 2 + 1));
  if (!c.symmetric()) throw Error(ErrorCode::NotConference, "conference_core: conference matrix must be symmetric");
  const double nn = static_cast<double>(n);
  require_in(d, conference_floor(nn), nn / 2.0 - 1.0, "conference_core");
  const double c0 = (nn - 6.0) / 4.0 - d;
  double disc = 1.0 - (nn - 2.0) * c0;
  if (disc < 0.0) {
    if (disc < -1e-9) throw Error(ErrorCode::NoRealRoot, "conference_core: no real cos(alpha)");
    disc = 0.0;
  }
  const double x = clamp_unit(-2.0 * c0 / (1.0 + std::sqrt(disc)));
  return great_d_assembly(d, exp_i(std::acos(x), normalize_to_standard(c).core));
}

ComplexMatrix complex_core_matrix(std::size_t n) {
  require_even(n, 6, "complex_core");
  const double d = static_cast<double>(n) / 4.0 - 1.5;
  return great_d_assembly(d, normalize_to_standard(fourier_complex_hadamard(n / 2 + 1)).core);
}

ComplexMatrix conference_block_family(std::size_t n, double d, const HermitianConference& c) {
  require_even(n, 4, "conference_block");
  if (c.order() != n / 2)
    throw Error(ErrorCode::BadOrder, "conference_block: conference order must be n/2 = " + std::to_string(n / 2));
  require_in(d, 0.0, 1.0, "conference_block");
  const double dd = std::clamp(d, 0.0, 1.0);
  const Complex e = std::polar(1.0, std::acos(dd));
  const std::size_t m = n / 2;
  const CMatrix id = CMatrix::identity(m);
  const CMatrix top = Complex(dd, 0.0) * id + c.matrix();
  CMatrix s(n, n);
  s.set_block(0, 0, top);
  s.set_block(0, m, c.matrix() - e * id);
  s.set_block(m, 0, c.matrix() - std::conj(e) * id);
  s.set_block(m, m, -top);
  return ComplexMatrix(s * Complex(1.0 / std::sqrt(dd * dd + static_cast<double>(n) - 1.0), 0.0));
}

double design_family_ratio(std::size_t n, const SymmetricDesign& design, double alpha) {
  require_design_order(n, design);
  return static_cast<double>(n) / 2.0 - 1.0 -
         static_cast<double>(design.k() - design.lambda()) * (1.0 - std::cos(2.0 * alpha));
}

double design_family_alpha(std::size_t n, const SymmetricDesign& design, double d) {
  require_design_order(n, design);
  const double top = static_cast<double>(n) / 2.0 - 1.0;
  require_in(d, design_floor(n, design), top, "design_complex");
  const double cos2a = 1.0 - (top - d) / static_cast<double>(design.k() - design.lambda());
  return 0.5 * std::acos(clamp_unit(cos2a));
}

ComplexMatrix design_family(std::size_t n, const SymmetricDesign& design, double alpha) {
  require_design_order(n, design);
  if (!std::isfinite(alpha)) throw Error(ErrorCode::OutOfRange, "design_complex: alpha must be finite");
  const IntMatrix& a = design.incidence();
  IntMatrix k(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) k(i, j) = 2 * a(i, j) - 1;
  const double d = design_family_ratio(n, design, alpha);
  return great_d_assembly(d, exp_i(alpha, k));
}

IntegerMps real_from_design(std::size_t n, const Rational& d, const SymmetricDesign& design) {
  if (n % 2 != 0 || !d.is_integer())
    throw Error(ErrorCode::ParameterMismatch, "real_from_design needs even n and integer d");
  const auto params = design_params_for(n, d);
  if (!params || static_cast<long long>(n / 2) != design.v() || params->k != design.k() ||
      params->lambda != design.lambda())
    throw Error(ErrorCode::ParameterMismatch,
                "design (" + std::to_string(design.v()) + "," + std::to_string(design.k()) + "," +
                    std::to_string(design.lambda()) + ") does not match n = " + std::to_string(n) + ", d = " + d.str());
  const std::size_t m = n / 2;
  IntMatrix signs(n, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      signs(i, j) = i == j ? 1 : -1;
      signs(m + i, m + j) = i == j ? -1 : 1;
      const long long g = 2 * design.incidence()(i, j) - 1;
      signs(i, m + j) = g;
      signs(m + j, i) = g;
    }
  return IntegerMps(d, std::move(signs));
}

std::optional<RealHadamard> default_hadamard(std::size_t order) {
  if (!power_of_two(order)) return std::nullopt;
  return sylvester_hadamard(order);
}

std::optional<ConferenceMatrix> default_symmetric_conference(std::size_t order) {
  try {
    return paley_conference(order);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<HermitianConference> default_hermitian_conference(std::size_t order) {
  if (order == 2) return HermitianConference(CMatrix{{0.0, 1.0}, {1.0, 0.0}});
  const auto c = default_symmetric_conference(order);
  if (!c) return std::nullopt;
  return HermitianConference(to_complex(c->matrix()));
}

std::optional<SymmetricDesign> default_design(long long v, long long k, long long lambda) {
  if (v < 2) return std::nullopt;
  if (k == 1 && lambda == 0) return SymmetricDesign(IntMatrix::identity(static_cast<std::size_t>(v)), v, 1, 0, true);
  const auto big_n = static_cast<std::size_t>(v + 1);
  if (big_n >= 8 && power_of_two(big_n) && k == v / 2 && 4 * (lambda + 1) == v + 1) {
    return hadamard_to_design(sylvester_hadamard(big_n));
  }
  return std::nullopt;
}

FamilyAux with_default_aux(Family family, std::size_t n, const std::optional<Rational>& d, FamilyAux aux) {
  switch (family) {
    case Family::hadamard_core:
      if (!aux.hadamard) aux.hadamard = default_hadamard(n / 2 + 1);
      break;
    case Family::conference_core:
      if (!aux.conference) aux.conference = default_symmetric_conference(n / 2 + 1);
      break;
    case Family::conference_block:
      if (!aux.hermitian_conference && aux.conference) aux.hermitian_conference = HermitianConference(to_complex(aux.conference->matrix()));
      if (!aux.hermitian_conference) aux.hermitian_conference = default_hermitian_conference(n / 2);
      break;
    case Family::design_complex:
      if (!aux.design && n % 2 == 0) {
        const auto v = static_cast<long long>(n / 2);
        aux.design = default_design(v, v / 2, (v + 1) / 4 - 1);
        if (!aux.design) aux.design = default_design(v, 1, 0);
      }
      break;
    case Family::design_real:
      if (!aux.design && d) {
        if (const auto params = design_params_for(n, *d))
          aux.design = default_design(static_cast<long long>(n / 2), params->k, params->lambda);
      }
      break;
    default:
      break;
  }
  return aux;
}

std::optional<Interval> admissible_interval(Family family, std::size_t n, const FamilyAux& aux) {
  const double nn = static_cast<double>(n);
  const double top = nn / 2.0 - 1.0;
  const bool even = n % 2 == 0;
  switch (family) {
    case Family::full_j:
      if (n < 2) return std::nullopt;
      return Interval{top, top};
    case Family::n2:
      if (n != 2) return std::nullopt;
      return Interval{0.0, 10.0};
    case Family::upper_interval:
      if (!even || n < 4) return std::nullopt;
      return Interval{std::max(0.0, top - 2.0), top};
    case Family::hadamard_core:
      if (!even || n < 6 || !aux.hadamard || aux.hadamard->order() != n / 2 + 1) return std::nullopt;
      return Interval{nn / 4.0 - 1.5, top};
    case Family::conference_core:
      if (!even || n < 6 || !aux.conference || aux.conference->order() != n / 2 + 1 || !aux.conference->symmetric())
        return std::nullopt;
      return Interval{conference_floor(nn), top};
    case Family::complex_core:
      if (!even || n < 6) return std::nullopt;
      return Interval{nn / 4.0 - 1.5, nn / 4.0 - 1.5};
    case Family::conference_block:
      if (!even || n < 4 || !aux.hermitian_conference || aux.hermitian_conference->order() != n / 2)
        return std::nullopt;
      return Interval{0.0, 1.0};
    case Family::design_complex:
      if (!even || !aux.design || aux.design->v() != static_cast<long long>(n / 2)) return std::nullopt;
      return Interval{design_floor(n, *aux.design), top};
    case Family::design_real:
      if (!even || !aux.design || aux.design->v() != static_cast<long long>(n / 2)) return std::nullopt;
      {
        // d = 2 lambda + q - 1 with q = v - 2k.
        const double d = static_cast<double>(2 * aux.design->lambda() + aux.design->v() - 2 * aux.design->k() - 1);
        return Interval{d, d};
      }
  }
  return std::nullopt;
}

Constructed construct(const FamilySpec& spec, const FamilyAux& given) {
  const std::size_t n = spec.n;
  const FamilyAux aux = with_default_aux(spec.family, n, spec.d, given);
  const char* name = family_name(spec.family).data();
  if (spec.d && *spec.d < Rational(0)) throw Error(ErrorCode::InvalidArgument, std::string(name) + ": d must be >= 0");
  auto need_d = [&]() -> double {
    if (!spec.d) throw Error(ErrorCode::InvalidArgument, std::string(name) + " requires d");
    return spec.d->to_double();
  };
  auto check_fixed = [&](const Rational& fixed) {
    if (spec.d && *spec.d != fixed)
      throw Error(ErrorCode::OutOfRange, std::string(name) + " at n = " + std::to_string(n) + " has d = " + fixed.str());
  };
  auto missing = [&](const char* what) {
    return Error(ErrorCode::InvalidArgument,
                 std::string(name) + ": no " + what + " available for n = " + std::to_string(n) + "; supply one");
  };

  switch (spec.family) {
    case Family::full_j: {
      if (n < 2) throw Error(ErrorCode::OutOfRange, "full_j: n must be >= 2");
      const Rational d(static_cast<std::int64_t>(n) - 2, 2);
      check_fixed(d);
      IntegerMps exact = full_j_exact(n);
      return Constructed{full_j_matrix(n), d.to_double(), std::move(exact), false};
    }
    case Family::n2: {
      if (n != 2) throw Error(ErrorCode::OutOfRange, "n2: n must be 2");
      const double d = need_d();
      ComplexMatrix s = n2_matrix(d);
      auto exact = exact_if_real(s, *spec.d);
      return Constructed{std::move(s), d, std::move(exact), false};
    }
    case Family::upper_interval: {
      const double d = need_d();
      ComplexMatrix s = upper_interval(n, d);
      auto exact = exact_if_real(s, *spec.d);
      return Constructed{std::move(s), d, std::move(exact), false};
    }
    case Family::hadamard_core: {
      const double d = need_d();
      if (!aux.hadamard) throw missing("Hadamard matrix of order n/2 + 1");
      ComplexMatrix s = hadamard_core_family(n, d, *aux.hadamard);
      auto exact = exact_if_real(s, *spec.d);
      return Constructed{std::move(s), d, std::move(exact), false};
    }
    case Family::conference_core: {
      const double d = need_d();
      if (!aux.conference) throw missing("symmetric conference matrix of order n/2 + 1");
      ComplexMatrix s = conference_core_family(n, d, *aux.conference);
      auto exact = exact_if_real(s, *spec.d);
      return Constructed{std::move(s), d, std::move(exact), false};
    }
    case Family::complex_core: {
      require_even(n, 6, "complex_core");
      const Rational d(static_cast<std::int64_t>(n) - 6, 4);
      check_fixed(d);
      ComplexMatrix s = complex_core_matrix(n);
      auto exact = exact_if_real(s, d);
      return Constructed{std::move(s), d.to_double(), std::move(exact), false};
    }
    case Family::conference_block: {
      const double d = need_d();
      if (!aux.hermitian_conference) throw missing("Hermitian conference matrix of order n/2");
      ComplexMatrix s = conference_block_family(n, d, *aux.hermitian_conference);
      auto exact = exact_if_real(s, *spec.d);
      return Constructed{std::move(s), d, std::move(exact), false};
    }
    case Family::design_complex: {
      if (!aux.design) throw missing("symmetric design with v = n/2");
      const double alpha = spec.alpha ? *spec.alpha : design_family_alpha(n, *aux.design, need_d());
      const double d = design_family_ratio(n, *aux.design, alpha);
      if (d < -1e-12) throw Error(ErrorCode::OutOfRange, "design_complex: alpha gives negative d = " + fmt(d));
      if (spec.alpha && spec.d && std::fabs(d - spec.d->to_double()) > 1e-9)
        throw Error(ErrorCode::OutOfRange, "design_complex: alpha gives d = " + fmt(d) + ", not " + spec.d->str());
      ComplexMatrix s = design_family(n, *aux.design, alpha);
      std::optional<IntegerMps> exact;
      if (spec.d) exact = exact_if_real(s, *spec.d);
      return Constructed{std::move(s), d, std::move(exact), aux.design->degenerate()};
    }
    case Family::design_real: {
      if (!spec.d) throw Error(ErrorCode::InvalidArgument, "design_real requires d");
      if (!aux.design) throw missing("symmetric design with matching parameters");
      IntegerMps exact = real_from_design(n, *spec.d, *aux.design);
      ComplexMatrix s = exact.to_complex();
      return Constructed{std::move(s), spec.d->to_double(), std::move(exact), aux.design->degenerate()};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

}  // namespace mps
