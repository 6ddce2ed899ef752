#include "doctest.h"

#include <random>

#include "implode/linalg.hpp"
#include "implode/lp.hpp"

using namespace implode;

TEST_SUITE("linalg") {
  TEST_CASE("exact rank agrees with floating rank on small integer matrices") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
      IntMatrix m(3, 3);
      for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = d(rng);
      Eigen::FullPivLU<RMatrix> lu(m.cast<double>());
      CHECK(linalg::exact_rank(m) == lu.rank());
    }
  }

  TEST_CASE("integer kernel of the A2 columns") {
    IntMatrix m(2, 3);
    m << 1, 0, 1, 0, 1, 1;
    const IntMatrix k = linalg::integer_kernel(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).isZero());
    CHECK(std::abs(k(0, 0)) == 1);
    CHECK(std::abs(k(2, 0)) == 1);
  }

  TEST_CASE("primitive vectors and proportionality") {
    IntVector v(3);
    v << 4, -6, 2;
    CHECK(linalg::content(v) == 2);
    IntVector p(3);
    p << 2, -3, 1;
    CHECK(linalg::primitive(v) == p);
    CHECK(linalg::proportional(v, -p));
  }

  TEST_CASE("hermitian square root and exponential") {
    CMatrix h(2, 2);
    h << 2.0, cplx(0, 1), cplx(0, -1), 3.0;
    const CMatrix s = linalg::hermitian_sqrt(h);
    CHECK((s * s - h).norm() < 1e-12);
    const CMatrix e = linalg::hermitian_exp(h, 0.5);
    CHECK((e * e - linalg::hermitian_exp(h, 1.0)).norm() < 1e-12);
  }

  TEST_CASE("lp finds interior points or reports infeasibility") {
    RMatrix a(2, 1);
    a << 1, -1;
    CHECK_FALSE(lp::find_point(a, RVector::Ones(2)).has_value());
    RMatrix b(3, 2);
    b << 1, 0, 0, 1, -1, -1;
    RVector rhs(3);
    rhs << 1, 1, -5;
    const auto x = lp::find_point(b, rhs);
    REQUIRE(x.has_value());
    CHECK(((b * *x - rhs).array() >= -1e-9).all());
  }
}
