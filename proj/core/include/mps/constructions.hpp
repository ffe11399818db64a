#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "mps/complex_matrix.hpp"
#include "mps/designs.hpp"
#include "mps/integer_mps.hpp"
#include "mps/rational.hpp"

namespace mps {

enum class Family {
  full_j,
  n2,
  upper_interval,
  hadamard_core,
  conference_core,
  complex_core,
  conference_block,
  design_complex,
  design_real,
};

inline constexpr Family kAllFamilies[] = {
    Family::full_j,          Family::n2,           Family::upper_interval,
    Family::hadamard_core,   Family::conference_core, Family::complex_core,
    Family::conference_block, Family::design_complex, Family::design_real,
};

std::string_view family_name(Family f) noexcept;
/// Throws InvalidArgument for unknown names.
Family parse_family(std::string_view name);

// Individual families. All return S (not Q) and throw OutOfRange when d lies
// outside the family's closed interval (with a 1e-12 slack).

/// I - (2/n) J, ratio n/2 - 1.
ComplexMatrix full_j_matrix(std::size_t n);
IntegerMps full_j_exact(std::size_t n);

/// (1/sqrt(d^2+1)) [[d, 1], [1, -d]].
ComplexMatrix n2_matrix(double d);

/// Block form with G = (e^{i alpha} - 1) I + J, cos alpha = d + 2 - n/2;
/// n even, d in [max(0, n/2 - 3), n/2 - 1].
ComplexMatrix upper_interval(std::size_t n, double d);

/// G = exp(i alpha K) from the core K of a real Hadamard matrix of order
/// n/2 + 1, cos^2 alpha = 4(d+2)/(n+2) - 1; d in [n/4 - 3/2, n/2 - 1].
ComplexMatrix hadamard_core_family(std::size_t n, double d, const RealHadamard& h);

/// G = exp(i alpha K) from the core K of a symmetric conference matrix of
/// order n/2 + 1, with cos alpha the larger root of
/// ((n-2)/4) x^2 + x + ((n-6)/4 - d) = 0; d in [max(0, n/4 - 3/2 - 1/(n-2)), n/2 - 1].
ComplexMatrix conference_core_family(std::size_t n, double d, const ConferenceMatrix& c);

/// G = core of the dephased Fourier matrix of order n/2 + 1; ratio n/4 - 3/2, n >= 6 even.
ComplexMatrix complex_core_matrix(std::size_t n);

/// [[d I + C, C - e^{i alpha} I], [C - e^{-i alpha} I, -(d I + C)]] with
/// cos alpha = d in [0, 1] and C a Hermitian conference matrix of order n/2.
ComplexMatrix conference_block_family(std::size_t n, double d, const HermitianConference& c);

/// G = exp(i alpha (2A - J)) from a symmetric (n/2, k, lambda)-design;
/// ratio n/2 - 1 - (k - lambda)(1 - cos 2 alpha); only alpha with a non-negative ratio is admissible.
ComplexMatrix design_family(std::size_t n, const SymmetricDesign& design, double alpha);
double design_family_ratio(std::size_t n, const SymmetricDesign& design, double alpha);
/// alpha in [0, pi/2] reaching ratio d; throws OutOfRange if unreachable.
double design_family_alpha(std::size_t n, const SymmetricDesign& design, double d);

/// Exact real matrix [[(d+1)I - J, G], [G^T, -(d+1)I + J]] with G = 2A - J.
/// Throws ParameterMismatch unless (v, k, lambda) match design_params_for(n, d).
IntegerMps real_from_design(std::size_t n, const Rational& d, const SymmetricDesign& design);

/// Closed interval of admissible d.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Auxiliary inputs; missing ones are filled from the default providers.
struct FamilyAux {
  std::optional<RealHadamard> hadamard;
  std::optional<ConferenceMatrix> conference;
  std::optional<HermitianConference> hermitian_conference;
  std::optional<SymmetricDesign> design;
};

struct FamilySpec {
  Family family = Family::full_j;
  std::size_t n = 0;
  /// Required except for full_j and complex_core (where it must match if given)
  /// and design_complex with alpha.
  std::optional<Rational> d;
  std::optional<double> alpha;  ///< design_complex only
};

struct Constructed {
  ComplexMatrix matrix;
  double d = 0.0;
  std::optional<IntegerMps> exact;  ///< present when the output is real with rational d
  bool degenerate = false;          ///< built from a lambda = 0 design
};

/// Admissible interval of d for the family at order n; none when the family
/// does not apply at n or a required auxiliary matrix is unavailable.
std::optional<Interval> admissible_interval(Family family, std::size_t n, const FamilyAux& aux = {});

/// Fills the auxiliary inputs the family needs at order n from the providers
/// (Sylvester, Paley, Sylvester-derived or degenerate designs) when absent.
/// design_real needs d to pick design parameters.
FamilyAux with_default_aux(Family family, std::size_t n, const std::optional<Rational>& d, FamilyAux aux);

Constructed construct(const FamilySpec& spec, const FamilyAux& aux = {});

// Default providers; none when the order is not covered.
std::optional<RealHadamard> default_hadamard(std::size_t order);
std::optional<ConferenceMatrix> default_symmetric_conference(std::size_t order);
std::optional<HermitianConference> default_hermitian_conference(std::size_t order);
std::optional<SymmetricDesign> default_design(long long v, long long k, long long lambda);

}  // namespace mps
