#include <cmath>
#include <numbers>

#include "doctest.h"
#include "eigen_oracle.hpp"
#include "mps/constructions.hpp"
#include "mps/matrix_core.hpp"
#include "oracles.hpp"

using namespace mps;

namespace {

// Membership checked through the eigen oracle rather than the library predicates.
void check_member(const ComplexMatrix& s, double d) {
  CHECK(oracle::hermiticity_defect(s.values()) < 1e-9);
  CHECK(oracle::unitarity_defect(s.values()) < 1e-9);
  const double n = static_cast<double>(s.n());
  const double r = d / std::sqrt(d * d + n - 1.0), t = 1.0 / std::sqrt(d * d + n - 1.0);
  for (std::size_t i = 0; i < s.n(); ++i)
    for (std::size_t j = 0; j < s.n(); ++j) CHECK(std::abs(s(i, j)) == doctest::Approx(i == j ? r : t).epsilon(1e-9));
}

}  // namespace

TEST_CASE("family names") {
  for (Family f : kAllFamilies) CHECK(parse_family(family_name(f)) == f);
  CHECK_THROWS_AS(parse_family("nope"), Error);
}

TEST_CASE("full_j") {
  CHECK(max_abs(full_j_matrix(2).values() - CMatrix{{0, -1}, {-1, 0}}) < 1e-12);
  const IntegerMps q6 = full_j_exact(6);
  CHECK(q6.d() == Rational(2));
  CHECK(q6.scaled() * q6.scaled().transpose() == IntMatrix::identity(6) * 9LL);
  CHECK(max_abs(full_j_matrix(6).values() * Complex(3.0) - to_complex(q6.scaled())) < 1e-12);
  CHECK(full_j_exact(3).d() == Rational(1, 2));
  check_member(full_j_matrix(7), 2.5);
}

TEST_CASE("n2") {
  CHECK(max_abs(n2_matrix(0).values() - CMatrix{{0, 1}, {1, 0}}) < 1e-12);
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(max_abs(n2_matrix(1).values() - CMatrix{{h, h}, {h, -h}}) < 1e-12);
  const ComplexMatrix s = n2_matrix(3);
  CHECK(std::abs(s(0, 0)) == doctest::Approx(3.0 / std::sqrt(10.0)));
  CHECK(std::abs(s(0, 1)) == doctest::Approx(1.0 / std::sqrt(10.0)));
}

TEST_CASE("upper interval family") {
  const ComplexMatrix a = upper_interval(6, 2.0);
  CHECK(a.is_real(1e-12));
  check_member(a, 2.0);
  const ComplexMatrix b = upper_interval(6, 0.0);
  CHECK(b.is_real(1e-12));
  check_member(b, 0.0);
  check_member(upper_interval(8, 2.5), 2.5);
  CHECK_FALSE(upper_interval(8, 2.5).is_real(1e-6));
  CHECK_THROWS_AS(upper_interval(8, 0.5), Error);
  CHECK_THROWS_AS(upper_interval(8, 3.5), Error);
}

TEST_CASE("hadamard core family") {
  const RealHadamard h4 = sylvester_hadamard(4);
  check_member(hadamard_core_family(6, 2.0, h4), 2.0);
  check_member(hadamard_core_family(6, 0.0, h4), 0.0);
  check_member(hadamard_core_family(6, 1.3, h4), 1.3);
  const RealHadamard h12(oracle::paley_hadamard(11));
  check_member(hadamard_core_family(22, 5.0, h12), 5.0);
  check_member(hadamard_core_family(22, 4.0, h12), 4.0);
  CHECK_THROWS_AS(hadamard_core_family(22, 3.9, h12), Error);
  CHECK_THROWS_AS(hadamard_core_family(8, 2.0, h4), Error);
}

TEST_CASE("conference core family") {
  const ConferenceMatrix c6 = paley_conference(6);
  check_member(conference_core_family(10, 4.0, c6), 4.0);
  check_member(conference_core_family(10, 7.0 / 8.0, c6), 7.0 / 8.0);
  check_member(conference_core_family(10, 2.0, c6), 2.0);
  CHECK_THROWS_AS(conference_core_family(10, 0.8, c6), Error);
  check_member(conference_core_family(26, 5.5, paley_conference(14)), 5.5);
}

TEST_CASE("complex core") {
  check_member(complex_core_matrix(6), 0.0);
  check_member(complex_core_matrix(8), 0.5);
  check_member(complex_core_matrix(14), 2.0);
  CHECK_THROWS_AS(complex_core_matrix(4), Error);
}

TEST_CASE("conference block family") {
  const HermitianConference c(to_complex(paley_conference(6).matrix()));
  const ComplexMatrix one = conference_block_family(12, 1.0, c);
  CHECK(one.is_real(1e-12));
  check_member(one, 1.0);
  check_member(conference_block_family(12, 0.0, c), 0.0);
  check_member(conference_block_family(12, 0.5, c), 0.5);
  const auto c2 = default_hermitian_conference(2);
  REQUIRE(c2);
  check_member(conference_block_family(4, 0.25, *c2), 0.25);
  CHECK_THROWS_AS(conference_block_family(12, 1.5, c), Error);
}

TEST_CASE("design family") {
  const SymmetricDesign fano(oracle::fano(), 7, 3, 1);
  CHECK(design_family_ratio(14, fano, 0.0) == doctest::Approx(6.0));
  CHECK(design_family_ratio(14, fano, std::numbers::pi / 2) == doctest::Approx(2.0));
  check_member(design_family(14, fano, std::numbers::pi / 2), 2.0);
  check_member(design_family(14, fano, 0.0), 6.0);
  check_member(design_family(14, fano, 0.4), design_family_ratio(14, fano, 0.4));
  const double alpha = design_family_alpha(14, fano, 3.3);
  CHECK(design_family_ratio(14, fano, alpha) == doctest::Approx(3.3));
  CHECK_THROWS_AS(design_family_alpha(14, fano, 1.9), Error);

  // With A = (J + K)/2 from a Hadamard core both families coincide.
  const RealHadamard h8 = sylvester_hadamard(8);
  const SymmetricDesign d8 = hadamard_to_design(h8);
  for (double d : {2.0, 3.5, 6.0}) {
    const ComplexMatrix a = hadamard_core_family(14, d, h8);
    const ComplexMatrix b = design_family(14, d8, design_family_alpha(14, d8, d));
    CHECK(max_abs(a.values() - b.values()) < 1e-9);
  }
}

TEST_CASE("real matrices from designs") {
  const SymmetricDesign fano(oracle::fano(), 7, 3, 1);
  const IntegerMps m = real_from_design(14, Rational(2), fano);
  CHECK(m.d() == Rational(2));
  CHECK(m.scaled() * m.scaled().transpose() == IntMatrix::identity(14) * 17LL);
  CHECK(oracle::is_exact_scaled_orthogonal(m));

  const SymmetricDesign i5(IntMatrix::identity(5), 5, 1, 0, true);
  const IntegerMps m10 = real_from_design(10, Rational(2), i5);
  const IntMatrix g = m10.scaled().block(0, 5, 5, 5);
  CHECK(g * g.transpose() == IntMatrix::identity(5) * 4LL + IntMatrix::ones(5, 5));

  const SymmetricDesign i4(IntMatrix::identity(4), 4, 1, 0, true);
  const IntegerMps m8 = real_from_design(8, Rational(1), i4);
  CHECK(m8.scaled() * m8.scaled().transpose() == IntMatrix::identity(8) * 8LL);
  CHECK(m8.scaled() == m8.scaled().transpose());

  CHECK_THROWS_AS(real_from_design(14, Rational(3), fano), Error);
}

TEST_CASE("construct dispatch and defaults") {
  Constructed a = construct({Family::full_j, 6, std::nullopt, std::nullopt});
  REQUIRE(a.exact);
  CHECK(a.exact->d() == Rational(2));
  CHECK_THROWS_AS(construct({Family::full_j, 6, Rational(1), std::nullopt}), Error);

  Constructed b = construct({Family::hadamard_core, 14, Rational(3), std::nullopt});
  check_member(b.matrix, 3.0);
  CHECK_THROWS_AS(construct({Family::hadamard_core, 22, Rational(5), std::nullopt}), Error);
  FamilyAux aux;
  aux.hadamard = RealHadamard(oracle::paley_hadamard(11));
  check_member(construct({Family::hadamard_core, 22, Rational(5), std::nullopt}, aux).matrix, 5.0);

  Constructed c = construct({Family::design_real, 10, Rational(2), std::nullopt});
  CHECK(c.degenerate);
  REQUIRE(c.exact);

  Constructed e = construct({Family::design_complex, 14, std::nullopt, std::numbers::pi / 2});
  CHECK(e.d == doctest::Approx(2.0));

  Constructed u = construct({Family::upper_interval, 6, Rational(0), std::nullopt});
  REQUIRE(u.exact);
  CHECK(u.exact->d() == Rational(0));

  const auto iv = admissible_interval(Family::conference_core, 10, with_default_aux(Family::conference_core, 10, {}, {}));
  REQUIRE(iv);
  CHECK(iv->lo == doctest::Approx(7.0 / 8.0));
  CHECK(iv->hi == doctest::Approx(4.0));
  CHECK_FALSE(admissible_interval(Family::n2, 4));
}
