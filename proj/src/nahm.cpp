#include "implode/nahm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "implode/error.hpp"

namespace implode::nahm {

namespace {

const cplx kI(0.0, 1.0);

CMatrix bracket(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

// Weights of the derivative at x0 of the Lagrange interpolant through nodes.
std::vector<double> derivative_weights(const std::vector<double>& nodes, double x0) {
  const std::size_t m = nodes.size();
  std::vector<double> w(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = 0; l < m; ++l) {
      if (l == j) continue;
      double term = 1.0 / (nodes[j] - nodes[l]);
      for (std::size_t q = 0; q < m; ++q) {
        if (q == j || q == l) continue;
        term *= (x0 - nodes[q]) / (nodes[j] - nodes[q]);
      }
      w[j] += term;
    }
  }
  return w;
}

std::vector<double> lagrange_weights(const std::vector<double>& nodes, double x0) {
  std::vector<double> w(nodes.size(), 1.0);
  for (std::size_t j = 0; j < nodes.size(); ++j)
    for (std::size_t q = 0; q < nodes.size(); ++q)
      if (q != j) w[j] *= (x0 - nodes[q]) / (nodes[j] - nodes[q]);
  return w;
}

// First index of a window of `width` samples around k, clamped to the grid.
std::size_t window_start(std::size_t k, std::size_t width, std::size_t n) {
  const std::size_t half = width / 2;
  std::size_t s = k >= half ? k - half : 0;
  return std::min(s, n - width);
}

void check_quadruple(const Quadruple& q) {
  const Eigen::Index d = q[0].rows();
  for (const auto& m : q) {
    if (m.rows() != d || m.cols() != d)
      throw PreconditionError("shape_mismatch", "Nahm matrices must share one square size");
    if (!m.allFinite()) throw PreconditionError("non_finite", "Nahm matrices must be finite");
    if ((m + m.adjoint()).norm() > kAntiHermitianTol * std::max(1.0, m.norm()))
      throw PreconditionError("not_anti_hermitian", "Nahm matrices must be anti-Hermitian");
  }
}

double max_norm(const Quadruple& q) {
  double m = 0.0;
  for (const auto& x : q) m = std::max(m, x.norm());
  return m;
}

void guard_pole(const Quadruple& q, double t) {
  const double m = max_norm(q);
  if (!(m <= kPoleNorm))
    throw NumericalError("pole_encountered", "pole encountered near t = " + std::to_string(t));
}

Quadruple axpy(const Quadruple& y, double h, const Quadruple& k) {
  Quadruple out;
  for (int c = 0; c < 4; ++c) out[c] = y[c] + h * k[c];
  return out;
}

}  // namespace

void validate(const NahmData& data) {
  for (int c = 0; c < 4; ++c)
    if (data.t[c].size() != data.grid.size())
      throw PreconditionError("shape_mismatch", "each component needs one matrix per grid point");
  for (std::size_t k = 1; k < data.grid.size(); ++k)
    if (!(data.grid[k] > data.grid[k - 1]))
      throw PreconditionError("grid_not_increasing", "grid must be strictly increasing");
  for (std::size_t k = 0; k < data.grid.size(); ++k)
    check_quadruple({data.t[0][k], data.t[1][k], data.t[2][k], data.t[3][k]});
}

Quadruple rhs(const Quadruple& t) {
  Quadruple d;
  d[0] = CMatrix::Zero(t[0].rows(), t[0].cols());
  for (int i = 1; i <= 3; ++i) {
    const int j = i % 3 + 1;
    const int k = j % 3 + 1;
    d[i] = bracket(t[j], t[k]) - bracket(t[0], t[i]);
  }
  return d;
}

double residual(const NahmData& data) {
  validate(data);
  const std::size_t n = data.size();
  if (n < 3) throw PreconditionError("grid_too_short", "grid too short");
  const std::size_t width = n >= 5 ? 5 : 3;
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const std::size_t s = window_start(k, width, n);
    const std::vector<double> nodes(data.grid.begin() + s, data.grid.begin() + s + width);
    const auto w = derivative_weights(nodes, data.grid[k]);
    const Quadruple here{data.t[0][k], data.t[1][k], data.t[2][k], data.t[3][k]};
    const Quadruple f = rhs(here);
    for (int i = 1; i <= 3; ++i) {
      CMatrix deriv = CMatrix::Zero(data.dim(), data.dim());
      for (std::size_t q = 0; q < width; ++q) deriv += w[q] * data.t[i][s + q];
      worst = std::max(worst, (deriv - f[i]).norm());
    }
  }
  return worst;
}

NahmData integrate(const Quadruple& initial, double t_start, double t_end, int steps) {
  check_quadruple(initial);
  if (steps < 16) throw PreconditionError("too_few_steps", "integration needs at least 16 steps");
  if (!(t_end != t_start)) throw PreconditionError("empty_interval", "interval must have positive length");
  const double h = (t_end - t_start) / steps;
  std::vector<double> times(steps + 1);
  std::vector<Quadruple> states(steps + 1);
  times[0] = t_start;
  states[0] = initial;
  for (int s = 0; s < steps; ++s) {
    const Quadruple& y = states[s];
    const Quadruple k1 = rhs(y);
    const Quadruple y2 = axpy(y, 0.5 * h, k1);
    guard_pole(y2, times[s] + 0.5 * h);
    const Quadruple k2 = rhs(y2);
    const Quadruple y3 = axpy(y, 0.5 * h, k2);
    guard_pole(y3, times[s] + 0.5 * h);
    const Quadruple k3 = rhs(y3);
    const Quadruple y4 = axpy(y, h, k3);
    guard_pole(y4, times[s] + h);
    const Quadruple k4 = rhs(y4);
    Quadruple next;
    for (int c = 0; c < 4; ++c) next[c] = y[c] + (h / 6.0) * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    times[s + 1] = s + 1 == steps ? t_end : t_start + (s + 1) * h;
    guard_pole(next, times[s + 1]);
    // A step that more than doubles the norm is not resolving the solution.
    const double before = max_norm(y);
    if (before > 0.0 && max_norm(next) > kMaxStepGrowth * before)
      throw NumericalError("pole_encountered", "pole encountered near t = " + std::to_string(times[s + 1]));
    states[s + 1] = std::move(next);
  }
  // Store on an increasing grid regardless of the direction of integration.
  if (h < 0) {
    std::reverse(times.begin(), times.end());
    std::reverse(states.begin(), states.end());
  }
  NahmData out;
  out.grid = std::move(times);
  for (auto& q : states)
    for (int c = 0; c < 4; ++c) out.t[c].push_back(std::move(q[c]));
  return out;
}

NahmData symmetry_transform(const NahmData& data, const Symmetry& sym,
                            const std::optional<std::vector<double>>& target) {
  validate(data);
  NahmData out;
  if (sym.kind == SymmetryKind::Reflect) {
    const std::size_t n = data.size();
    for (std::size_t k = 0; k < n; ++k) {
      out.grid.push_back(-data.grid[n - 1 - k]);
      for (int c = 0; c < 4; ++c) out.t[c].push_back(-data.t[c][n - 1 - k]);
    }
    return out;
  }
  if (!(sym.c > 0.0)) throw PreconditionError("invalid_scale", "scale factor must be positive");
  const double c = sym.c;
  if (!target) {
    for (std::size_t k = 0; k < data.size(); ++k) {
      out.grid.push_back(data.grid[k] / c);
      for (int q = 0; q < 4; ++q) out.t[q].push_back(c * data.t[q][k]);
    }
    return out;
  }
  const std::size_t n = data.size();
  if (n < 4) throw PreconditionError("grid_too_short", "interpolation needs at least 4 samples");
  const double lo = data.grid.front();
  const double hi = data.grid.back();
  const double slack = 1e-12 * std::max(1.0, std::abs(hi - lo));
  for (double s : *target) {
    const double x = c * s;
    if (x < lo - slack || x > hi + slack)
      throw PreconditionError("interpolation_out_of_range", "interpolation out of range at t = " + std::to_string(s));
    const std::size_t upper = static_cast<std::size_t>(
        std::lower_bound(data.grid.begin(), data.grid.end(), x) - data.grid.begin());
    const std::size_t start = window_start(std::min(upper, n - 1), 4, n);
    const std::vector<double> nodes(data.grid.begin() + start, data.grid.begin() + start + 4);
    const auto w = lagrange_weights(nodes, x);
    out.grid.push_back(s);
    for (int q = 0; q < 4; ++q) {
      CMatrix v = CMatrix::Zero(data.dim(), data.dim());
      for (std::size_t j = 0; j < 4; ++j) v += w[j] * data.t[q][start + j];
      out.t[q].push_back(c * v);
    }
  }
  return out;
}

std::array<CMatrix, 3> su2_basis() {
  CMatrix s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0.0, 1.0, 1.0, 0.0;
  s2 << 0.0, -kI, kI, 0.0;
  s3 << 1.0, 0.0, 0.0, -1.0;
  return {-0.5 * kI * s1, -0.5 * kI * s2, -0.5 * kI * s3};
}

NahmData exact_pole_solution(const std::vector<double>& grid) {
  const auto e = su2_basis();
  NahmData d;
  d.grid = grid;
  for (double t : grid) {
    d.t[0].push_back(CMatrix::Zero(2, 2));
    for (int i = 0; i < 3; ++i) d.t[i + 1].push_back(-e[i] / t);
  }
  return d;
}

std::vector<double> uniform_grid(double a, double b, int samples) {
  std::vector<double> g(samples);
  for (int k = 0; k < samples; ++k) g[k] = k + 1 == samples ? b : a + (b - a) * k / (samples - 1);
  return g;
}

double anti_hermitian_defect(const NahmData& data) {
  double worst = 0.0;
  for (int c = 0; c < 4; ++c)
    for (const auto& m : data.t[c]) worst = std::max(worst, (m + m.adjoint()).norm());
  return worst;
}

double max_difference(const NahmData& a, const NahmData& b) {
  if (a.size() != b.size()) throw PreconditionError("shape_mismatch", "grids differ in length");
  double worst = 0.0;
  for (int c = 0; c < 4; ++c)
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, (a.t[c][k] - b.t[c][k]).norm());
  return worst;
}

}  // namespace implode::nahm
