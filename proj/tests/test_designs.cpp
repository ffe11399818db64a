#include "doctest.h"
#include "eigen_oracle.hpp"
#include "mps/designs.hpp"
#include "oracles.hpp"

using namespace mps;

TEST_CASE("symmetric designs") {
  CHECK(verify_design(oracle::fano(), 7, 3, 1));
  const SymmetricDesign f(oracle::fano(), 7, 3, 1);
  CHECK(f.k() == 3);
  CHECK_FALSE(f.degenerate());
  CHECK(verify_design(IntMatrix::identity(5), 5, 1, 0, true));
  CHECK_FALSE(verify_design(IntMatrix::identity(5), 5, 1, 0, false));
  CHECK_FALSE(verify_design(IntMatrix::ones(4, 4), 4, 4, 4));
  IntMatrix broken = oracle::fano();
  broken(0, 0) = 1 - broken(0, 0);
  CHECK_FALSE(verify_design(broken, 7, 3, 1));
  CHECK_THROWS_AS(SymmetricDesign(broken, 7, 3, 1), Error);
  CHECK_THROWS_AS(SymmetricDesign(IntMatrix::identity(5), 5, 1, 0), Error);
}

TEST_CASE("sylvester hadamard matrices") {
  CHECK(sylvester_hadamard(1).matrix() == IntMatrix{{1}});
  CHECK(sylvester_hadamard(2).matrix() == IntMatrix{{1, 1}, {1, -1}});
  for (std::size_t n : {4u, 8u, 16u, 32u}) {
    const IntMatrix h = sylvester_hadamard(n).matrix();
    CHECK(h * h.transpose() == IntMatrix::identity(n) * static_cast<long long>(n));
  }
  CHECK_THROWS_AS(sylvester_hadamard(12), Error);
  CHECK(is_hadamard(oracle::paley_hadamard(11)));
  CHECK_NOTHROW(RealHadamard(oracle::paley_hadamard(19)));
  CHECK_THROWS_AS(RealHadamard(IntMatrix{{1, 1}, {1, 1}}), Error);
}

TEST_CASE("paley conference matrices") {
  for (std::size_t n : {6u, 14u, 18u, 30u}) {
    const ConferenceMatrix c = paley_conference(n);
    const IntMatrix& m = c.matrix();
    CHECK(m * m.transpose() == IntMatrix::identity(n) * static_cast<long long>(n - 1));
    CHECK(c.symmetric());
    for (std::size_t i = 0; i < n; ++i) CHECK(m(i, i) == 0);
  }
  CHECK_THROWS_AS(paley_conference(4), Error);
  CHECK_THROWS_AS(paley_conference(10), Error);
  CHECK_FALSE(is_conference(IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
}

TEST_CASE("fourier matrices") {
  CHECK(max_abs(fourier_complex_hadamard(1).matrix() - CMatrix{{1}}) < 1e-12);
  CHECK(max_abs(fourier_complex_hadamard(2).matrix() - CMatrix{{1, 1}, {1, -1}}) < 1e-12);
  const CMatrix f3 = fourier_complex_hadamard(3).matrix();
  CHECK(max_abs(f3 * adjoint(f3) - CMatrix::identity(3) * Complex(3.0)) < 1e-12);
  const Complex w = std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0);
  CHECK(std::abs(f3(1, 1) - w) < 1e-12);
  CHECK(std::abs(f3(1, 2) - w * w) < 1e-12);
  CHECK_THROWS_AS(ComplexHadamard(CMatrix{{1, 1}, {1, 1}}), Error);
}

TEST_CASE("normalization to standard form") {
  const auto s4 = normalize_to_standard(sylvester_hadamard(4));
  CHECK(s4.core == IntMatrix{{-1, 1, -1}, {1, -1, -1}, {-1, -1, 1}});
  CHECK(normalize_to_standard(s4.standard).standard.matrix() == s4.standard.matrix());

  const auto p6 = normalize_to_standard(paley_conference(6));
  const IntMatrix& k = p6.core;
  REQUIRE(k.rows() == 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(k(i, j) == k((i + 1) % 5, (j + 1) % 5));
  CHECK(k * k.transpose() == IntMatrix::identity(5) * 5LL - IntMatrix::ones(5, 5));

  const RealHadamard scrambled(IntMatrix{{-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}});
  const auto sc = normalize_to_standard(scrambled);
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(sc.standard.matrix()(0, j) == 1);
    CHECK(sc.standard.matrix()(j, 0) == 1);
  }

  CMatrix f4 = fourier_complex_hadamard(4).matrix();
  const double phase[] = {0.3, -1.2, 2.0, 0.7};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) f4(i, j) *= std::polar(1.0, phase[i] - 2.0 * phase[j]);
  const auto fn = normalize_to_standard(ComplexHadamard(f4));
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(std::abs(fn.standard.matrix()(0, j) - Complex(1.0)) < 1e-12);
    CHECK(std::abs(fn.standard.matrix()(j, 0) - Complex(1.0)) < 1e-12);
  }
  CHECK(max_abs(fn.core - fourier_complex_hadamard(4).matrix().block(1, 1, 3, 3)) < 1e-12);
}

TEST_CASE("design parameters for (n, d)") {
  const auto a = design_params_for(14, Rational(2));
  REQUIRE(a);
  CHECK(a->q == 1);
  CHECK(a->k == 3);
  CHECK(a->lambda == 1);
  const auto b = design_params_for(10, Rational(2));
  REQUIRE(b);
  CHECK(b->q == 3);
  CHECK(b->k == 1);
  CHECK(b->lambda == 0);
  CHECK_FALSE(design_params_for(12, Rational(1)));
}

TEST_CASE("designs from hadamard matrices") {
  const SymmetricDesign d4 = hadamard_to_design(sylvester_hadamard(4));
  CHECK(d4.v() == 3);
  CHECK(d4.k() == 1);
  CHECK(d4.lambda() == 0);
  CHECK(d4.degenerate());
  const SymmetricDesign d8 = hadamard_to_design(sylvester_hadamard(8));
  CHECK(d8.v() == 7);
  CHECK(d8.k() == 3);
  CHECK(d8.lambda() == 1);
  const SymmetricDesign d12 = hadamard_to_design(RealHadamard(oracle::paley_hadamard(11)));
  CHECK(verify_design(d12.incidence(), 11, 5, 2));
  CHECK_THROWS_AS(hadamard_to_design(sylvester_hadamard(2)), Error);
}
