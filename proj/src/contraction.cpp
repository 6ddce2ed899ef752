#include "implode/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "implode/error.hpp"

namespace implode::contraction {

namespace {

const cplx kI(0.0, 1.0);

CMatrix2 cofactor(const CMatrix2& b) {
  CMatrix2 c;
  c << b(1, 1), -b(1, 0), -b(0, 1), b(0, 0);
  return c;
}

CMatrix2 rk4_step(const CMatrix2& y, double h) {
  const CMatrix2 k1 = gradient_hamiltonian_field(y);
  const CMatrix2 k2 = gradient_hamiltonian_field(y + 0.5 * h * k1);
  const CMatrix2 k3 = gradient_hamiltonian_field(y + 0.5 * h * k2);
  const CMatrix2 k4 = gradient_hamiltonian_field(y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

CMatrix2 random_gaussian2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

}  // namespace

void check_sl2(const CMatrix2& b, double tol) {
  if (!b.allFinite() || std::abs(b.determinant() - 1.0) >= tol)
    throw PreconditionError("non_unit_determinant", "non-unit determinant");
}

void check_cotangent(const CotangentPoint& x, double tol) {
  if ((x.k.adjoint() * x.k - CMatrix2::Identity()).norm() >= tol || std::abs(x.k.determinant() - 1.0) >= tol)
    throw PreconditionError("not_special_unitary", "k is not in SU(2)");
  if (std::abs(x.v.trace()) >= tol || (x.v + x.v.adjoint()).norm() >= tol)
    throw PreconditionError("not_in_su2", "v is not traceless anti-Hermitian");
}

CMatrix2 su2_flow_closed_form(const CMatrix2& b, double tol) {
  check_sl2(b, tol);
  Eigen::SelfAdjointEigenSolver<CMatrix2> es(b.adjoint() * b);
  const Eigen::Vector2d ev = es.eigenvalues().cwiseMax(0.0);
  const CMatrix2& q = es.eigenvectors();
  const double gamma = ev(0);
  Eigen::Vector2cd inv_sqrt(1.0 / std::sqrt(ev(0)), 1.0 / std::sqrt(ev(1)));
  const CMatrix2 unitary = b * q * inv_sqrt.asDiagonal() * q.adjoint();
  Eigen::Vector2cd shifted(0.0, std::sqrt(std::max(0.0, ev(1) - gamma)));
  return unitary * q * shifted.asDiagonal() * q.adjoint();
}

CMatrix2 gradient_hamiltonian_field(const CMatrix2& b) {
  // grad Re(det) = conj(cofactor) and |grad|^2 = |B|_F^2.
  return -cofactor(b).conjugate() / b.squaredNorm();
}

FlowResult gh_flow_numeric(const CMatrix2& b, const FlowOptions& opts, double tol) {
  check_sl2(b, tol);
  const Eigen::JacobiSVD<CMatrix2> svd(b);
  const double s1 = svd.singularValues()(0);
  const double s2 = svd.singularValues()(1);
  // |B(1)|_F^2 = s1^2 - s2^2 is the smallest gradient norm along the path.
  if (s1 * s1 - s2 * s2 < opts.degenerate_norm)
    throw NumericalError("degenerate_flow", "flow enters degenerate locus");

  FlowResult res;
  const cplx det0 = b.determinant();
  CMatrix2 y = b;
  double t = 0.0;
  double h = 1e-2;
  if (opts.keep_trajectory) res.trajectory.push_back({t, y});
  while (t < 1.0) {
    h = std::min(h, 1.0 - t);
    const CMatrix2 full = rk4_step(y, h);
    const CMatrix2 half = rk4_step(rk4_step(y, 0.5 * h), 0.5 * h);
    const double err = (half - full).norm() / 15.0;
    if (err > opts.step_tol && h > 1e-12) {
      h *= std::max(0.2, 0.9 * std::pow(opts.step_tol / err, 0.2));
      ++res.rejected;
      continue;
    }
    y = half + (half - full) / 15.0;
    t = (1.0 - t - h <= 1e-15) ? 1.0 : t + h;
    ++res.steps;
    if (y.squaredNorm() < opts.degenerate_norm || !y.allFinite())
      throw NumericalError("degenerate_flow", "flow enters degenerate locus");
    const cplx det = y.determinant();
    res.max_im_det_drift = std::max(res.max_im_det_drift, std::abs(det.imag() - det0.imag()));
    res.max_re_det_error = std::max(res.max_re_det_error, std::abs(det.real() - (det0.real() - t)));
    if (opts.keep_trajectory) res.trajectory.push_back({t, y});
    const double grow = err > 0.0 ? 0.9 * std::pow(opts.step_tol / err, 0.2) : 4.0;
    h *= std::clamp(grow, 0.2, 4.0);
  }
  res.end = y;
  return res;
}

Eigen::Vector2cd implode_su2(const CMatrix2& k, double lam) {
  if (!(lam >= 0.0)) throw PreconditionError("negative_level", "chamber coordinate must be nonnegative");
  return std::sqrt(2.0 * lam) * k.col(0);
}

Diagonalization diagonalize(const CMatrix2& v) {
  // -i v is Hermitian with eigenvalues -lam <= lam.
  Eigen::SelfAdjointEigenSolver<CMatrix2> es(-kI * v);
  Diagonalization d;
  d.lam = std::max(0.0, 0.5 * (es.eigenvalues()(1) - es.eigenvalues()(0)));
  if (d.lam == 0.0) return d;
  CMatrix2 cols;
  cols.col(0) = es.eigenvectors().col(1);
  cols.col(1) = es.eigenvectors().col(0);
  const cplx det = cols.determinant();
  cols.col(1) /= det / std::abs(det);
  d.h = cols.adjoint();
  return d;
}

CMatrix2 phi(const CotangentPoint& x, double tol) {
  check_cotangent(x, tol);
  const Diagonalization d = diagonalize(x.v);
  const Eigen::Vector2cd z = implode_su2(x.k * d.h.adjoint(), d.lam);
  const Eigen::RowVector2cd w = std::sqrt(2.0 * d.lam) * d.h.row(0);
  return z * w;
}

bool equivalent(const CotangentPoint& x, const CotangentPoint& y, double tol) {
  if ((x.v - y.v).norm() > tol) return false;
  if (x.v.norm() <= tol) return true;
  return (x.k - y.k).norm() <= tol;
}

Invariants4 complex_invariants(const H2Point& p1, const H2Point& p2, double tol) {
  Invariants4 out;
  out.v << p1.alpha(0), p1.alpha(1), p2.beta(0), p2.beta(1);
  out.w << p1.beta(0), p1.beta(1), p2.alpha(0), p2.alpha(1);
  const cplx level = out.v.transpose() * out.w;
  if (std::abs(level) >= tol * std::max(1.0, out.v.norm() * out.w.norm()))
    throw PreconditionError("nonzero_torus_level", "torus moment level nonzero");
  out.m = out.v * out.w.transpose();
  return out;
}

PsiResult psi_sl2_with(const CMatrix2& g, const CMatrix2& v, const CMatrix2& h, double tol) {
  check_sl2(g, tol);
  check_sl2(h, tol);
  if (std::abs(v.trace()) >= tol) throw PreconditionError("not_traceless", "v must be traceless");
  const CMatrix2 h_inv = h.inverse();
  const CMatrix2 x = h * v * h_inv;
  if (std::abs(x(1, 0)) >= tol * std::max(1.0, v.norm()))
    throw PreconditionError("not_in_borel", "vector not in chosen Borel");

  PsiResult r;
  r.h = h;
  r.right_g = g * h_inv;
  r.right_x = x;
  r.left_g = h;
  r.left_v = v;
  // Right implosion (G x b) // U: alpha = g' e_1, beta = e_1^T (x - x_22) g'^{-1}.
  const CMatrix2 xs = x - x(1, 1) * CMatrix2::Identity();
  r.right.alpha = r.right_g.col(0);
  r.right.beta = xs.row(0) * h * g.inverse();
  // Left implosion through (h, v) -> (h^{-1}, -h.v), written with transposed
  // roles so that its torus weights are opposite to the right copy.
  const CMatrix2 y = -x;
  const CMatrix2 ys = y - y(1, 1) * CMatrix2::Identity();
  r.left.alpha = (ys.row(0) * h).transpose();
  r.left.beta = h_inv.col(0).transpose();
  r.invariants = complex_invariants(r.right, r.left, tol);
  return r;
}

PsiResult psi_sl2(const CMatrix2& g, const CMatrix2& v, const Eigen::Vector2cd& line, double tol) {
  const double len = line.norm();
  if (!(len > 0.0)) throw PreconditionError("degenerate_line", "line must be nonzero");
  const Eigen::Vector2cd u = line / len;
  const Eigen::Vector2cd vu = v * u;
  if ((vu - (u.adjoint() * vu)(0) * u).norm() >= tol * std::max(1.0, v.norm()))
    throw PreconditionError("not_in_borel", "vector not in chosen Borel");
  // h^{-1} = [u, u_perp] in SU(2), so h u = e_1.
  CMatrix2 h_inv;
  h_inv << u(0), -std::conj(u(1)), u(1), std::conj(u(0));
  return psi_sl2_with(g, v, h_inv.adjoint(), tol);
}

CMatrix4 swann_weyl(const CMatrix4& m) {
  CMatrix4 jt = CMatrix4::Zero();
  jt.topLeftCorner<2, 2>() = linalg::symplectic_j();
  jt.bottomRightCorner<2, 2>() = linalg::symplectic_j();
  return jt * m.transpose() * jt;
}

bool q_circ_membership(const H2Point& p, double tol) {
  const cplx ba = p.beta * p.alpha;
  return std::abs(ba) > tol;
}

double max_minor(const CMatrix4& m) {
  double worst = 0.0;
  for (int r1 = 0; r1 < 4; ++r1)
    for (int r2 = r1 + 1; r2 < 4; ++r2)
      for (int c1 = 0; c1 < 4; ++c1)
        for (int c2 = c1 + 1; c2 < 4; ++c2)
          worst = std::max(worst, std::abs(m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)));
  return worst;
}

double max_minor(const CMatrix2& m) { return std::abs(m.determinant()); }

CMatrix2 random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Vector4d q(g(rng), g(rng), g(rng), g(rng));
  q.normalize();
  CMatrix2 k;
  const cplx a(q(0), q(1));
  const cplx b(q(2), q(3));
  k << a, -std::conj(b), b, std::conj(a);
  return k;
}

CMatrix2 random_traceless_antihermitian(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> g;
  const double x = g(rng), y = g(rng), z = g(rng);
  CMatrix2 v;
  v << kI * x, cplx(y, z), cplx(-y, z), -kI * x;
  return scale * v;
}

CMatrix2 random_sl2_with_gap(std::mt19937_64& rng, double min_gap) {
  // x - 1/x = gap has root x = (gap + sqrt(gap^2 + 4)) / 2.
  std::uniform_real_distribution<double> u(min_gap, 3.0);
  const double gap = u(rng);
  const double x = 0.5 * (gap + std::sqrt(gap * gap + 4.0));
  Eigen::Vector2cd d(x, 1.0 / x);
  return random_su2(rng) * d.asDiagonal() * random_su2(rng);
}

CMatrix2 random_sl2(std::mt19937_64& rng) {
  CMatrix2 m = random_gaussian2(rng);
  return m / std::sqrt(m.determinant());
}

H2Point random_h2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  H2Point p;
  p.alpha << cplx(g(rng), g(rng)), cplx(g(rng), g(rng));
  p.beta << cplx(g(rng), g(rng)), cplx(g(rng), g(rng));
  return p;
}

std::pair<H2Point, H2Point> random_zero_level_pair(std::mt19937_64& rng) {
  const H2Point p1 = random_h2(rng);
  H2Point p2 = random_h2(rng);
  // Shift beta_2 along alpha_2^* so that beta_2 alpha_2 = -beta_1 alpha_1.
  const cplx target = -(p1.beta * p1.alpha)(0);
  const cplx current = (p2.beta * p2.alpha)(0);
  p2.beta += ((target - current) / p2.alpha.squaredNorm()) * p2.alpha.adjoint();
  return {p1, p2};
}

CMatrix2 random_borel(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const cplx tau = std::polar(std::exp(0.5 * g(rng)), g(rng));
  CMatrix2 b;
  b << tau, cplx(g(rng), g(rng)), 0.0, 1.0 / tau;
  return b;
}

}  // namespace implode::contraction
