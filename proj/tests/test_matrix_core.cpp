#include <cmath>
#include <random>

#include "doctest.h"
#include "eigen_oracle.hpp"
#include "mps/constructions.hpp"
#include "mps/matrix_core.hpp"
#include "mps/permutation.hpp"
#include "mps/rational.hpp"

using namespace mps;

namespace {

ComplexMatrix full_j_numeric(std::size_t n) {
  CMatrix m = CMatrix::identity(n) - CMatrix::ones(n, n) * Complex(2.0 / static_cast<double>(n));
  return ComplexMatrix(m);
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(4, 3) == Rational(2, 3));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational::parse("5/2") == Rational(5, 2));
  CHECK(Rational::parse("2.5") == Rational(5, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational(2).str() == "2/1");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  Rational r;
  CHECK(Rational::try_snap(1.5000000001, 2, 1e-6, r));
  CHECK(r == Rational(3, 2));
  CHECK_FALSE(Rational::try_snap(1.3, 2, 1e-6, r));
}

TEST_CASE("permutation conjugation convention") {
  const Permutation p({2, 0, 1});
  IntMatrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  const IntMatrix b = p.conjugate(a);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(b(p(i), p(j)) == a(i, j));
  CHECK(p.inverse().conjugate(b) == a);
  CHECK(p.after(p.inverse()).is_identity());
  const std::vector<long long> one{3, 1, 2};
  CHECK(Permutation::from_one_based(one) == p);
  CHECK(p.to_one_based() == one);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
}

TEST_CASE("linear algebra against the eigen oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const CMatrix a = oracle::random_cmatrix(n, n, rng);
    const CMatrix inv = inverse(a);
    const Eigen::MatrixXcd ref = oracle::to_eigen(a).inverse();
    CHECK((oracle::to_eigen(inv) - ref).norm() < 1e-9 * (1.0 + ref.norm()));
  }
  CHECK_THROWS_AS(inverse(CMatrix(2, 2)), Error);
  CMatrix low(3, 3);
  low(0, 1) = 1.0;
  low(2, 1) = 2.0;
  CHECK(pivoted_rank(low, 1e-12).rank == 1);
  CHECK(pivoted_rank(CMatrix::identity(4), 1e-12).rank == 4);
}

TEST_CASE("hermiticity and unitarity predicates") {
  CHECK(is_hermitian(ComplexMatrix::identity(5)));
  CMatrix skew{{0.0, Complex(0, 1)}, {Complex(0, 1), 0.0}};
  CHECK_FALSE(is_hermitian(ComplexMatrix(skew)));
  CHECK(is_hermitian(full_j_numeric(6)));
  CHECK(is_unitary(ComplexMatrix::identity(3)));
  CHECK(is_unitary(full_j_numeric(6)));
  CHECK_FALSE(is_unitary(ComplexMatrix(CMatrix::identity(3) * Complex(2.0))));
}

TEST_CASE("mps profile examples") {
  const MpsProfile p4 = mps_profile(full_j_numeric(4));
  CHECK(p4.n == 4);
  CHECK(p4.d == doctest::Approx(1.0));
  CHECK(p4.p == 4);
  CHECK(p4.m == 3);

  // Symmetric order-4 Hadamard matrix with all-plus diagonal.
  const CMatrix h{{1, -1, -1, -1}, {-1, 1, -1, -1}, {-1, -1, 1, -1}, {-1, -1, -1, 1}};
  const MpsProfile ph = mps_profile(ComplexMatrix(h * Complex(0.5)));
  CHECK(ph.d == doctest::Approx(1.0));
  CHECK(ph.p == 4);
  CHECK(ph.m == 3);

  const CMatrix diag{{1, 0}, {0, -1}};
  CHECK_THROWS_AS(mps_profile(ComplexMatrix(diag)), Error);
  try {
    (void)mps_profile(ComplexMatrix(diag));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMps);
  }
  CHECK_THROWS_AS(mps_profile(ComplexMatrix(CMatrix::identity(2) * Complex(2.0))), Error);
}

TEST_CASE("multiplicity m agrees with the eigen oracle") {
  for (std::size_t n = 3; n <= 10; ++n) {
    const ComplexMatrix s = full_j_numeric(n);
    const auto spec = oracle::hermitian_spectrum(s.values());
    std::size_t plus = 0;
    for (double x : spec) plus += x > 0.0;
    CHECK(mps_profile(s).m == plus);
  }
}

TEST_CASE("d bound") {
  CHECK(check_d_bound(2, 100.0));
  CHECK(check_d_bound(6, 2.0));
  CHECK_FALSE(check_d_bound(6, 2.01));
}

TEST_CASE("trace identity") {
  CHECK(check_trace_identity(MpsProfile{4, 0.5, 0.5, 1.0, {1, 1, 1, 1}, 4, 3}));
  MpsProfile balanced{6, 0.0, 1.0 / std::sqrt(5.0), 0.0, {}, 2, 3};
  CHECK(check_trace_identity(balanced));
  CHECK(check_trace_identity(MpsProfile{6, 2.0 / 3.0, 1.0 / 3.0, 2.0, {}, 0, 1}));
  CHECK_FALSE(check_trace_identity(MpsProfile{6, 2.0 / 3.0, 1.0 / 3.0, 2.0, {}, 6, 1}));
}

TEST_CASE("d from m and p") {
  const DFromMp a = d_from_mp(4, 3, 4);
  REQUIRE(std::holds_alternative<double>(a));
  CHECK(std::get<double>(a) == doctest::Approx(1.0));
  CHECK(std::holds_alternative<Balanced>(d_from_mp(6, 3, 3)));
  CHECK(std::holds_alternative<Impossible>(d_from_mp(6, 3, 4)));
  const DFromMp b = d_from_mp(6, 1, 0);
  REQUIRE(std::holds_alternative<double>(b));
  CHECK(std::get<double>(b) == doctest::Approx(2.0));
  CHECK_THROWS_AS(d_from_mp(4, 5, 1), Error);
}

TEST_CASE("scattering probabilities") {
  const auto p = scattering_probabilities(full_j_numeric(4), 0);
  REQUIRE(p.size() == 4);
  for (double x : p) CHECK(x == doctest::Approx(0.25));
  const auto q = scattering_probabilities(n2_matrix(0.0), 0);
  CHECK(q[0] == doctest::Approx(0.0));
  CHECK(q[1] == doctest::Approx(1.0));
  CHECK_THROWS_AS(scattering_probabilities(full_j_numeric(4), 4), Error);
  for (std::size_t n = 3; n <= 9; ++n) {
    const ComplexMatrix s = full_j_numeric(n);
    const double d = static_cast<double>(n) / 2.0 - 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const auto pr = scattering_probabilities(s, j);
      CHECK(pr[j] == doctest::Approx(d * d / (d * d + static_cast<double>(n) - 1.0)));
    }
  }
}
