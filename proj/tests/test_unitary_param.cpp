#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>
#include <random>

#include "doctest.h"
#include "eigen_oracle.hpp"
#include "mps/matrix_core.hpp"
#include "mps/unitary_param.hpp"

using namespace mps;

namespace {

double dist(const CMatrix& a, const CMatrix& b) { return frobenius_norm(a - b); }

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

CMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const CMatrix a = oracle::random_cmatrix(n, n, rng);
  return (a + adjoint(a)) * Complex(0.5);
}

}  // namespace

TEST_CASE("hermitian parametrization examples") {
  const ComplexMatrix x = build_hermitian_unitary({2, 1, CMatrix{{1.0}}, Permutation::identity(2)});
  CHECK(dist(x.values(), CMatrix{{0, 1}, {1, 0}}) < 1e-12);
  const ComplexMatrix z = build_hermitian_unitary({2, 1, CMatrix{{0.0}}, Permutation::identity(2)});
  CHECK(dist(z.values(), CMatrix{{1, 0}, {0, -1}}) < 1e-12);
  const ComplexMatrix s3 = build_hermitian_unitary({3, 1, CMatrix{{1.0, 1.0}}, Permutation::identity(3)});
  CHECK(s3(0, 0).real() == doctest::Approx(-1.0 / 3.0));
  CHECK(s3(0, 1).real() == doctest::Approx(2.0 / 3.0));
  CHECK(s3(0, 2).real() == doctest::Approx(2.0 / 3.0));
  CHECK(is_hermitian(s3));
  CHECK(is_unitary(s3));
  CHECK(mps_profile(s3).m == 1);
}

TEST_CASE("hermitian decomposition examples") {
  const HermitianUnitaryParam p = decompose_hermitian_unitary(ComplexMatrix(CMatrix{{0, 1}, {1, 0}}));
  CHECK(p.m == 1);
  CHECK(p.p.is_identity());
  CHECK(std::abs(p.t(0, 0) - Complex(1.0)) < 1e-12);
  const HermitianUnitaryParam q = decompose_hermitian_unitary(ComplexMatrix(CMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
  CHECK(q.m == 1);
  CHECK(q.p.is_identity());
  CHECK(max_abs(q.t) < 1e-12);
  CHECK_THROWS_AS(decompose_hermitian_unitary(ComplexMatrix::identity(3)), Error);
  CHECK_THROWS_AS(decompose_hermitian_unitary(ComplexMatrix(CMatrix::identity(2) * Complex(-1.0))), Error);
  CHECK_THROWS_AS(decompose_hermitian_unitary(ComplexMatrix(CMatrix{{0, 2}, {2, 0}})), Error);
}

TEST_CASE("hermitian parametrization round trip with a fixed permutation") {
  std::mt19937_64 rng(11);
  const HermitianUnitaryParam in{4, 2, oracle::random_cmatrix(2, 2, rng), Permutation({0, 2, 1, 3})};
  const ComplexMatrix s = build_hermitian_unitary(in);
  CHECK(oracle::unitarity_defect(s.values()) < 1e-10);
  CHECK(oracle::hermiticity_defect(s.values()) < 1e-10);
  const ComplexMatrix back = build_hermitian_unitary(decompose_hermitian_unitary(s));
  CHECK(dist(back.values(), s.values()) < 1e-9);
}

TEST_CASE("hermitian parametrization spectrum agrees with the eigen oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const std::size_t m = 1 + static_cast<std::size_t>(rng() % (n - 1));
    const HermitianUnitaryParam prm{n, m, oracle::random_cmatrix(m, n - m, rng), random_perm(n, rng)};
    const auto spec = oracle::hermitian_spectrum(build_hermitian_unitary(prm).values());
    for (std::size_t k = 0; k < n; ++k) CHECK(spec[k] == doctest::Approx(k < n - m ? -1.0 : 1.0).epsilon(1e-9));
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_hermitian_unitary({2, 0, CMatrix(0, 2), Permutation::identity(2)}), Error);
  CHECK_THROWS_AS(build_hermitian_unitary({3, 1, CMatrix(1, 1), Permutation::identity(3)}), Error);
  CHECK_THROWS_AS(build_hermitian_unitary({3, 1, CMatrix(1, 2), Permutation::identity(2)}), Error);
  UnitaryParam bad{2, 1, CMatrix(1, 1), CMatrix{{Complex(0, 1)}}, Permutation::identity(2)};
  CHECK_THROWS_AS(build_unitary(bad), Error);
}

TEST_CASE("eigenbasis") {
  const Eigenbasis e = eigenbasis_from_param({2, 1, CMatrix{{1.0}}, Permutation::identity(2)});
  REQUIRE(e.plus.cols() == 1);
  REQUIRE(e.minus.cols() == 1);
  CHECK(std::abs(e.plus(0, 0) - e.plus(1, 0)) < 1e-12);
  CHECK(std::abs(e.minus(0, 0) + e.minus(1, 0)) < 1e-12);
  CHECK(std::abs(e.plus(0, 0)) > 1e-12);

  const Eigenbasis z = eigenbasis_from_param({3, 1, CMatrix(1, 2), Permutation::identity(3)});
  CHECK(dist(z.plus, CMatrix{{1}, {0}, {0}}) < 1e-12);
  CHECK(dist(z.minus, CMatrix{{0, 0}, {1, 0}, {0, 1}}) < 1e-12);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const std::size_t m = 1 + static_cast<std::size_t>(rng() % (n - 1));
    const HermitianUnitaryParam prm{n, m, oracle::random_cmatrix(m, n - m, rng), random_perm(n, rng)};
    const ComplexMatrix s = build_hermitian_unitary(prm);
    const Eigenbasis b = eigenbasis_from_param(prm);
    CHECK(dist(s.values() * b.plus, b.plus) < 1e-9);
    CHECK(dist(s.values() * b.minus, -b.minus) < 1e-9);
    CHECK(frobenius_norm(adjoint(b.plus) * b.minus) < 1e-9);
    CMatrix x(n, n);
    x.set_block(0, 0, b.plus);
    x.set_block(0, m, b.minus);
    CMatrix z_diag = CMatrix::identity(n);
    for (std::size_t k = m; k < n; ++k) z_diag(k, k) = -1.0;
    CHECK(dist(x * z_diag * inverse(x), s.values()) < 1e-9);
  }
}

TEST_CASE("general unitary parametrization examples") {
  const ComplexMatrix i3 = build_unitary({3, 3, CMatrix(3, 0), CMatrix(3, 3), Permutation::identity(3)});
  CHECK(dist(i3.values(), CMatrix::identity(3)) < 1e-12);
  const double s = 0.7;
  const ComplexMatrix u1 = build_unitary({1, 1, CMatrix(1, 0), CMatrix{{s}}, Permutation::identity(1)});
  CHECK(std::abs(u1(0, 0) - (Complex(1, -s) / Complex(1, s))) < 1e-12);
  CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) < 1e-12);
  const ComplexMatrix x = build_unitary({2, 1, CMatrix{{1.0}}, CMatrix{{0.0}}, Permutation::identity(2)});
  CHECK(dist(x.values(), CMatrix{{0, 1}, {1, 0}}) < 1e-12);

  const UnitaryParam id = decompose_unitary(ComplexMatrix::identity(4));
  CHECK(id.m == 4);
  CHECK(max_abs(id.s_h) < 1e-12);

  const double a = std::numbers::pi / 3.0;
  const ComplexMatrix u(CMatrix{{std::polar(1.0, a), 0.0}, {0.0, -1.0}});
  const UnitaryParam d = decompose_unitary(u);
  CHECK(d.m == 1);
  CHECK(max_abs(d.t) < 1e-12);
  CHECK(d.s_h(0, 0).real() == doctest::Approx(-std::tan(std::numbers::pi / 6.0)));
  CHECK(dist(build_unitary(d).values(), u.values()) < 1e-9);

  CHECK_THROWS_AS(decompose_unitary(ComplexMatrix(CMatrix::identity(3) * Complex(-1.0))), Error);
  CHECK_THROWS_AS(decompose_unitary(ComplexMatrix(CMatrix{{1, 1}, {0, 1}})), Error);
}

TEST_CASE("general unitary round trips") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const std::size_t m = 1 + static_cast<std::size_t>(rng() % n);
    const UnitaryParam prm{n, m, oracle::random_cmatrix(m, n - m, rng), random_hermitian(m, rng), random_perm(n, rng)};
    const ComplexMatrix u = build_unitary(prm);
    CHECK(oracle::unitarity_defect(u.values()) < 1e-9);
    const ComplexMatrix back = build_unitary(decompose_unitary(u));
    CHECK(dist(back.values(), u.values()) < 1e-9);
  }
  // Haar-random unitaries never have -1 as an eigenvalue in practice.
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix u = oracle::random_unitary(2 + trial % 6, rng);
    const UnitaryParam d = decompose_unitary(ComplexMatrix(u));
    CHECK(d.m == u.rows());
    CHECK(dist(build_unitary(d).values(), u) < 1e-9);
  }
}

TEST_CASE("quadratic matrix equation") {
  std::mt19937_64 rng(23);
  const HermitianUnitaryParam prm{4, 2, oracle::random_cmatrix(2, 2, rng), random_perm(4, rng)};
  CHECK(dist(build_quadratic_solution({1.0, 0.0}, prm).values(), build_hermitian_unitary(prm).values()) < 1e-12);

  const ComplexMatrix proj = build_quadratic_solution({0.0, 1.0}, {2, 1, CMatrix{{0.0}}, Permutation::identity(2)});
  CHECK(dist(proj.values(), CMatrix{{1, 0}, {0, 0}}) < 1e-12);

  const HermitianUnitaryParam p3{3, 2, oracle::random_cmatrix(2, 1, rng), Permutation::identity(3)};
  const auto spec = oracle::hermitian_spectrum(build_quadratic_solution({2.0, 1.0}, p3).values());
  CHECK(spec[0] == doctest::Approx(-1.0));
  CHECK(spec[1] == doctest::Approx(2.0));
  CHECK(spec[2] == doctest::Approx(2.0));

  CHECK_THROWS_AS(build_quadratic_solution({-1.0, 0.0}, p3), Error);
}
