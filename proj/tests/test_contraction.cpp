#include "doctest.h"

#include <cmath>
#include <random>

#include "implode/contraction.hpp"
#include "implode/error.hpp"

using namespace implode;
using contraction::CotangentPoint;

namespace {

const cplx I(0.0, 1.0);

CMatrix2 diag(cplx a, cplx b) {
  CMatrix2 m = CMatrix2::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

CMatrix2 jmat() {
  CMatrix2 j;
  j << 0.0, 1.0, -1.0, 0.0;
  return j;
}

// Polar form from the SVD: B = U S V^*, result U diag(sqrt(s1^2 - s2^2), 0) V^*.
CMatrix2 svd_oracle(const CMatrix2& b) {
  Eigen::JacobiSVD<CMatrix2> svd(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto s = svd.singularValues();
  return svd.matrixU() * diag(std::sqrt(std::max(0.0, s(0) * s(0) - s(1) * s(1))), 0.0) * svd.matrixV().adjoint();
}

// M = k (lam I - i v), with lam the eigenvalue modulus of v.
CMatrix2 phi_oracle(const CotangentPoint& x) {
  const double lam = std::sqrt(std::max(0.0, x.v.determinant().real()));
  return x.k * (lam * CMatrix2::Identity() - I * x.v);
}

H2Point h2(cplx a1, cplx a2, cplx b1, cplx b2) {
  H2Point p;
  p.alpha << a1, a2;
  p.beta << b1, b2;
  return p;
}

}  // namespace

TEST_SUITE("contraction") {
  TEST_CASE("closed form on diagonal matrices") {
    CHECK((contraction::su2_flow_closed_form(diag(2.0, 0.5)) - diag(std::sqrt(3.75), 0.0)).norm() < 1e-12);
    CHECK((contraction::su2_flow_closed_form(diag(0.5, 2.0)) - diag(0.0, std::sqrt(3.75))).norm() < 1e-12);
    CHECK(std::abs(contraction::su2_flow_closed_form(diag(2.0, 0.5))(0, 0).real() - 1.9364916) < 1e-7);
    CHECK_THROWS_WITH(contraction::su2_flow_closed_form(diag(2.0, 2.0)), "non-unit determinant");
  }

  TEST_CASE("closed form agrees with the SVD oracle") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 100; ++t) {
      const CMatrix2 b = contraction::random_sl2(rng);
      CHECK((contraction::su2_flow_closed_form(b) - svd_oracle(b)).norm() < 1e-9);
    }
    for (int t = 0; t < 20; ++t) CHECK(contraction::su2_flow_closed_form(contraction::random_su2(rng)).norm() < 1e-9);
  }

  TEST_CASE("vector field decreases the determinant at unit speed") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
      const CMatrix2 b = contraction::random_sl2(rng);
      const CMatrix2 f = contraction::gradient_hamiltonian_field(b);
      const double h = 1e-6;
      const cplx d = ((b + h * f).determinant() - (b - h * f).determinant()) / (2 * h);
      CHECK(std::abs(d - cplx(-1.0, 0.0)) < 1e-6);
    }
  }

  TEST_CASE("numerical flow") {
    const auto r = contraction::gh_flow_numeric(diag(1.2, 1.0 / 1.2));
    CHECK(std::abs(r.end(0, 0) - std::sqrt(1.44 - 1.0 / 1.44)) < 1e-6);
    CHECK(std::abs(r.end(0, 0) - 0.863456) < 1e-5);
    CHECK(r.max_im_det_drift < 1e-6);
    CHECK(r.max_re_det_error < 1e-6);
    CHECK((contraction::gh_flow_numeric(diag(2.0, 0.5)).end - contraction::su2_flow_closed_form(diag(2.0, 0.5))).norm() < 1e-4);
    CHECK_THROWS_WITH(contraction::gh_flow_numeric(CMatrix2::Identity()), "flow enters degenerate locus");
    contraction::FlowOptions opts;
    opts.keep_trajectory = true;
    const auto traj = contraction::gh_flow_numeric(diag(2.0, 0.5), opts).trajectory;
    REQUIRE(traj.size() > 2);
    for (const auto& s : traj) CHECK(std::abs(s.b.determinant() - cplx(1.0 - s.t, 0.0)) < 1e-6);
  }

  TEST_CASE("implosion of SU(2)") {
    CHECK(contraction::implode_su2(jmat(), 0.0).norm() == 0.0);
    CHECK((contraction::implode_su2(CMatrix2::Identity(), 0.5) - Eigen::Vector2cd(1.0, 0.0)).norm() < 1e-15);
    const double th = 0.4;
    const auto z = contraction::implode_su2(diag(std::polar(1.0, th), std::polar(1.0, -th)), 2.0);
    CHECK((z - Eigen::Vector2cd(2.0 * std::polar(1.0, th), 0.0)).norm() < 1e-14);
    CHECK_THROWS_AS(contraction::implode_su2(CMatrix2::Identity(), -1.0), PreconditionError);
  }

  TEST_CASE("phi examples and oracle") {
    const CMatrix2 v = diag(0.5 * I, -0.5 * I);
    CMatrix2 e11 = CMatrix2::Zero();
    e11(0, 0) = 1.0;
    CHECK((contraction::phi({CMatrix2::Identity(), v}) - e11).norm() < 1e-14);
    CMatrix2 e21 = CMatrix2::Zero();
    e21(1, 0) = -1.0;
    CHECK((contraction::phi({jmat(), v}) - e21).norm() < 1e-14);
    CHECK(contraction::phi({jmat(), CMatrix2::Zero()}).norm() == 0.0);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; ++t) {
      const CotangentPoint x{contraction::random_su2(rng), contraction::random_traceless_antihermitian(rng)};
      const CMatrix2 m = contraction::phi(x);
      CHECK((m - phi_oracle(x)).norm() < 1e-10);
      CHECK(std::abs(m.determinant()) < 1e-12);
    }
  }

  TEST_CASE("equivalence") {
    std::mt19937_64 rng(12);
    const CotangentPoint x{contraction::random_su2(rng), contraction::random_traceless_antihermitian(rng)};
    CHECK(contraction::equivalent(x, x));
    CHECK(contraction::equivalent({contraction::random_su2(rng), CMatrix2::Zero()}, {contraction::random_su2(rng), CMatrix2::Zero()}));
    const CMatrix2 v = diag(I, -I);
    CHECK_FALSE(contraction::equivalent({CMatrix2::Identity(), v}, {diag(std::polar(1.0, 0.3), std::polar(1.0, -0.3)), v}));
    CHECK_THROWS_AS(contraction::phi({2.0 * CMatrix2::Identity(), v}), PreconditionError);
  }

  TEST_CASE("complex invariants") {
    const auto inv = contraction::complex_invariants(h2(1, 0, 0, 1), h2(0, 1, 1, 0));
    CHECK(inv.v == Eigen::Vector4cd(1, 0, 1, 0));
    CHECK(inv.w == Eigen::Vector4cd(0, 1, 0, 1));
    CHECK(std::abs(inv.m.trace()) == 0.0);
    CHECK((inv.m * inv.m).norm() == 0.0);
    CHECK_THROWS_WITH(contraction::complex_invariants(h2(1, 0, 1, 0), H2Point{}), "torus moment level nonzero");
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
      const auto [p1, p2] = contraction::random_zero_level_pair(rng);
      const auto m = contraction::complex_invariants(p1, p2).m;
      CHECK(Eigen::FullPivLU<CMatrix4>(m).setThreshold(1e-10).rank() <= 1);
      CHECK(std::abs(m.trace()) < 1e-10);
      CHECK((m * m).norm() < 1e-10);
    }
    // beta-only data lands in one 2x2 block satisfying the quadric.
    const auto real = contraction::complex_invariants(h2(0, 0, 1, 2), h2(0, 0, 3, -1)).m;
    CHECK(real.norm() > 0.0);
    CHECK(std::abs(real.block<2, 2>(2, 0).determinant()) < 1e-14);
    CHECK(real.norm() == doctest::Approx(real.block<2, 2>(2, 0).norm()));
  }

  TEST_CASE("psi") {
    const CMatrix2 v = diag(1.0, -1.0);
    const auto r = contraction::psi_sl2(CMatrix2::Identity(), v, Eigen::Vector2cd(1.0, 0.0));
    CHECK((r.h - CMatrix2::Identity()).norm() < 1e-14);
    CMatrix2 nil = CMatrix2::Zero();
    nil(0, 1) = 1.0;
    CHECK_NOTHROW(contraction::psi_sl2_with(CMatrix2::Identity(), nil, CMatrix2::Identity()));
    CHECK_THROWS_WITH(contraction::psi_sl2(CMatrix2::Identity(), nil, Eigen::Vector2cd(0.0, 1.0)), "vector not in chosen Borel");
    std::mt19937_64 rng(14);
    const CMatrix2 g = contraction::random_sl2(rng);
    const auto base = contraction::psi_sl2(g, v, Eigen::Vector2cd(1.0, 0.0));
    CMatrix2 u = CMatrix2::Identity();
    u(0, 1) = cplx(0.7, -2.0);
    const auto other = contraction::psi_sl2_with(g, v, u * base.h);
    CHECK((other.invariants.m - base.invariants.m).norm() < 1e-9);
    CHECK(contraction::max_minor(base.invariants.m) < 1e-10);
    CHECK(std::abs(base.invariants.m.trace()) < 1e-10);
  }

  TEST_CASE("Swann involution and Q circle") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 20; ++t) {
      CMatrix4 m = CMatrix4::Random() + I * CMatrix4::Random();
      const CMatrix4 s = contraction::swann_weyl(m);
      CHECK((contraction::swann_weyl(s) - m).norm() < 1e-14);
      CHECK(std::abs(s.trace() + m.trace()) < 1e-14);
      const auto [p1, p2] = contraction::random_zero_level_pair(rng);
      const CMatrix4 r1 = contraction::complex_invariants(p1, p2).m;
      CHECK(contraction::max_minor(contraction::swann_weyl(r1)) < 1e-10);
    }
    CHECK(contraction::q_circ_membership(h2(1, 0, 1, 0)));
    CHECK_FALSE(contraction::q_circ_membership(h2(1, 0, 0, 1)));
    CHECK_FALSE(contraction::q_circ_membership(H2Point{}));
  }
}
