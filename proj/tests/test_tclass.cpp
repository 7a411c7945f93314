#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include <phimat/errors.hpp>
#include <phimat/mat2.hpp>
#include <phimat/tclass.hpp>

using phimat::cplx;
using phimat::Mat2c;
using phimat::TMatrix;

TEST_CASE("generator layout", "[tclass]") {
  const Mat2c f = phimat::phi(2.0);
  CHECK(f.e11 == cplx{});
  CHECK(f.e12 == cplx{0.0, 1.0});
  CHECK(f.e21 == cplx{0.0, 4.0});
  CHECK(f.e22 == cplx{});

  const Mat2c p = phimat::psi(2.0);
  CHECK(p.e11 == cplx{});
  CHECK(p.e12 == cplx{1.0});
  CHECK(p.e21 == cplx{4.0});
  CHECK(p.e22 == cplx{});

  // psi(1) is the symmetric Pauli matrix
  CHECK(phimat::psi(1.0) == Mat2c{cplx{}, cplx{1.0}, cplx{1.0}, cplx{}});

  CHECK_THROWS_AS(phimat::phi(0.0), phimat::zero_alpha);
  CHECK_THROWS_AS(phimat::psi(0.0), phimat::zero_alpha);
}

TEST_CASE("phi squares to -alpha^2 I", "[tclass]") {
  for (double alpha : {0.5, 1.0, 2.0, 5.0}) {
    const Mat2c sq = phimat::phi(alpha) * phimat::phi(alpha);
    CHECK(max_abs_diff(sq, cplx{-alpha * alpha} * Mat2c::identity()) == 0.0);
  }
}

TEST_CASE("dense form and determinant", "[tclass]") {
  const TMatrix t(1.0, 1.0, 2.0);
  const Mat2c d = t.dense();
  CHECK(d.e11 == cplx{1.0});
  CHECK(d.e12 == cplx{0.0, 1.0});
  CHECK(d.e21 == cplx{0.0, 4.0});
  CHECK(d.e22 == cplx{1.0});

  CHECK(t.det() == 5.0);
  CHECK(det(d) == cplx{5.0});

  CHECK_THROWS_AS(TMatrix(1.0, 1.0, 0.0), phimat::zero_alpha);
}

TEST_CASE("product stays in the class", "[tclass]") {
  const TMatrix p = TMatrix(1.0, 2.0, 3.0) * TMatrix(4.0, 5.0, 3.0);
  // (1*4 - 9*2*5, 1*5 + 4*2) = (-86, 13)
  CHECK(p.a() == -86.0);
  CHECK(p.b() == 13.0);
  CHECK(p.alpha() == 3.0);

  CHECK_THROWS_AS(TMatrix(1.0, 2.0, 3.0) * TMatrix(1.0, 2.0, 3.5), phimat::alpha_mismatch);
}

TEST_CASE("product matches the dense product", "[tclass]") {
  std::mt19937_64 rng(201);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> al(0.5, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 300; ++i) {
    const double alpha = al(rng);
    const TMatrix x(coef(rng), coef(rng), alpha);
    const TMatrix y(coef(rng), coef(rng), alpha);
    worst = std::max(worst, max_abs_diff((x * y).dense(), x.dense() * y.dense()));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("product commutes exactly", "[tclass]") {
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> al(0.5, 2.0);
  for (int i = 0; i < 300; ++i) {
    const double alpha = al(rng);
    const TMatrix x(coef(rng), coef(rng), alpha);
    const TMatrix y(coef(rng), coef(rng), alpha);
    const TMatrix xy = x * y;
    const TMatrix yx = y * x;
    REQUIRE(xy.a() == yx.a());
    REQUIRE(xy.b() == yx.b());
  }
}

TEST_CASE("inverse", "[tclass]") {
  const TMatrix t(1.0, 1.0, 2.0);
  const TMatrix inv = t.inverse();
  CHECK(inv.a() == 0.2);
  CHECK(inv.b() == -0.2);
  CHECK(inv.alpha() == 2.0);

  const TMatrix prod = t * inv;
  CHECK_THAT(prod.a(), Catch::Matchers::WithinAbs(1.0, 1e-15));
  CHECK_THAT(prod.b(), Catch::Matchers::WithinAbs(0.0, 1e-15));

  // det = a^2 + alpha^2 b^2 = 0 only at the origin for real coefficients
  CHECK_THROWS_AS(TMatrix(0.0, 0.0, 1.0).inverse(), phimat::singular_matrix);

  const double huge = std::numeric_limits<double>::max();
  CHECK_THROWS_AS(TMatrix(huge, huge, 2.0).inverse(), phimat::overflow);
}

TEST_CASE("inverse round trip", "[tclass]") {
  std::mt19937_64 rng(203);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> al(0.5, 2.0);
  double worst = 0.0;
  int kept = 0;
  for (int i = 0; i < 400 && kept < 300; ++i) {
    const TMatrix x(coef(rng), coef(rng), al(rng));
    if (x.det() < 1e-6) continue;
    ++kept;
    worst = std::max(worst, max_abs_diff((x * x.inverse()).dense(), Mat2c::identity()));
  }
  REQUIRE(kept == 300);
  CHECK(worst <= 1e-12);
}

TEST_CASE("psi powers collapse by parity", "[tclass]") {
  SECTION("frozen example") {
    const Mat2c p3 = phimat::psi_pow(2.0, 3);
    CHECK(p3.e11 == cplx{});
    CHECK(p3.e12 == cplx{4.0});
    CHECK(p3.e21 == cplx{16.0});
    CHECK(p3.e22 == cplx{});
  }
  SECTION("trivial exponents") {
    CHECK(phimat::psi_pow(3.0, 0) == Mat2c::identity());
    CHECK(phimat::psi_pow(3.0, 1) == phimat::psi(3.0));
  }
  SECTION("even exponent is a scalar matrix") {
    const Mat2c p4 = phimat::psi_pow(2.0, 4);
    CHECK(p4 == cplx{16.0} * Mat2c::identity());
  }
  SECTION("matches repeated multiplication") {
    for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
      for (std::uint64_t n = 0; n <= 40; ++n) {
        const double scale = std::max(1.0, std::pow(alpha, static_cast<double>(n)));
        const double dev = max_abs_diff(phimat::psi_pow(alpha, n), phimat::psi_pow_naive(alpha, n));
        REQUIRE(dev <= 1e-9 * scale);
      }
    }
  }
  SECTION("overflow throws") {
    CHECK_THROWS_AS(phimat::psi_pow(10.0, 400), phimat::overflow);
  }
  SECTION("zero alpha throws") {
    CHECK_THROWS_AS(phimat::psi_pow(0.0, 2), phimat::zero_alpha);
  }
}
