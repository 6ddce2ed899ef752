#include "implode/quiver.hpp"

#include <cmath>
#include <string>

#include "implode/error.hpp"

namespace implode::quiver {

namespace {

void check_matrix(const CMatrix& m, Eigen::Index rows, Eigen::Index cols, const char* what, int i) {
  if (m.rows() != rows || m.cols() != cols)
    throw PreconditionError("shape_mismatch", std::string(what) + "_" + std::to_string(i) +
                                                  " must be " + std::to_string(rows) + "x" +
                                                  std::to_string(cols));
  if (!m.allFinite()) throw PreconditionError("non_finite", "quiver entries must be finite");
}

// Terms entering vertex i (1-based): a_{i-1}, b_{i-1} from below and
// a_i, b_i towards i+1. Missing ones are empty.
struct Neighbourhood {
  CMatrix in_alpha, in_beta, out_alpha, out_beta;
};

Neighbourhood around(const QuiverRep& rep, int i) {
  Neighbourhood nb;
  if (i >= 2) {
    nb.in_alpha = rep.alphas[i - 2];
    nb.in_beta = rep.betas[i - 2];
  }
  nb.out_alpha = rep.alphas[i - 1];
  nb.out_beta = rep.betas[i - 1];
  return nb;
}

CMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

}  // namespace

QuiverRep QuiverRep::zero(int n) {
  if (n < 2) throw PreconditionError("invalid_length", "flag length must be at least 2");
  QuiverRep rep;
  rep.n = n;
  for (int i = 1; i < n; ++i) {
    rep.alphas.push_back(CMatrix::Zero(i + 1, i));
    rep.betas.push_back(CMatrix::Zero(i, i + 1));
  }
  return rep;
}

void validate(const QuiverRep& rep) {
  if (rep.n < 2) throw PreconditionError("invalid_length", "flag length must be at least 2");
  if (static_cast<int>(rep.alphas.size()) != rep.n - 1 || static_cast<int>(rep.betas.size()) != rep.n - 1)
    throw PreconditionError("shape_mismatch", "expected n-1 alphas and betas");
  for (int i = 1; i < rep.n; ++i) {
    check_matrix(rep.alphas[i - 1], i + 1, i, "alpha", i);
    check_matrix(rep.betas[i - 1], i, i + 1, "beta", i);
  }
}

CMatrix complex_moment_matrix(const QuiverRep& rep, int i) {
  const Neighbourhood nb = around(rep, i);
  CMatrix m = -nb.out_beta * nb.out_alpha;
  if (i >= 2) m += nb.in_alpha * nb.in_beta;
  return m;
}

ComplexMoment complex_moment(const QuiverRep& rep) {
  validate(rep);
  ComplexMoment cm{CVector::Zero(rep.n - 1), RVector::Zero(rep.n - 1)};
  for (int i = 1; i < rep.n; ++i) {
    const CMatrix m = complex_moment_matrix(rep, i);
    cm.lambdas(i - 1) = m.trace() / static_cast<double>(i);
    cm.residuals(i - 1) = linalg::traceless_part(m).norm();
  }
  return cm;
}

QuiverRep act(const QuiverRep& rep, const std::vector<CMatrix>& g) {
  validate(rep);
  if (static_cast<int>(g.size()) != rep.n - 1)
    throw PreconditionError("shape_mismatch", "gauge tuple must have n-1 factors");
  std::vector<CMatrix> inv(g.size());
  for (int i = 1; i < rep.n; ++i) {
    check_matrix(g[i - 1], i, i, "g", i);
    Eigen::FullPivLU<CMatrix> lu(g[i - 1]);
    if (!lu.isInvertible()) throw PreconditionError("singular_gauge", "singular gauge element g_" + std::to_string(i));
    inv[i - 1] = lu.inverse();
  }
  QuiverRep out = rep;
  for (int i = 1; i < rep.n; ++i) {
    const bool last = i == rep.n - 1;
    const CMatrix& gi = g[i - 1];
    const CMatrix& gi_inv = inv[i - 1];
    if (last) {
      out.alphas[i - 1] = rep.alphas[i - 1] * gi_inv;
      out.betas[i - 1] = gi * rep.betas[i - 1];
    } else {
      out.alphas[i - 1] = g[i] * rep.alphas[i - 1] * gi_inv;
      out.betas[i - 1] = gi * rep.betas[i - 1] * inv[i];
    }
  }
  return out;
}

std::vector<VertexMoment> real_moment(const QuiverRep& rep, Gauge mode) {
  validate(rep);
  std::vector<VertexMoment> out;
  for (int i = (mode == Gauge::SU ? 2 : 1); i < rep.n; ++i) {
    const Neighbourhood nb = around(rep, i);
    CMatrix mu = -nb.out_alpha.adjoint() * nb.out_alpha + nb.out_beta * nb.out_beta.adjoint();
    if (i >= 2) mu += nb.in_alpha * nb.in_alpha.adjoint() - nb.in_beta.adjoint() * nb.in_beta;
    if (mode == Gauge::SU) mu = linalg::traceless_part(mu);
    const double r = mu.norm();
    out.push_back({i, std::move(mu), r});
  }
  return out;
}

double real_objective(const QuiverRep& rep, Gauge mode) {
  double f = 0.0;
  for (const auto& vm : real_moment(rep, mode)) f += vm.residual * vm.residual;
  return f;
}

SolveResult descend_real_moment(const QuiverRep& rep, Gauge mode, int max_iter, double tol) {
  SolveResult res;
  res.rep = rep;
  double f = real_objective(rep, mode);
  double step = 0.25;
  constexpr int kMaxHalvings = 60;
  while (std::sqrt(f) >= tol && res.iterations < max_iter) {
    const auto moments = real_moment(res.rep, mode);
    bool accepted = false;
    for (int h = 0; h < kMaxHalvings && !accepted; ++h, step *= 0.5) {
      std::vector<CMatrix> g;
      for (int i = 1; i < rep.n; ++i) g.push_back(CMatrix::Identity(i, i));
      // exp(-s mu_i) descends sum |mu_i|^2 along the imaginary gauge directions.
      for (const auto& vm : moments) g[vm.vertex - 1] = linalg::hermitian_exp(vm.mu, -step);
      QuiverRep trial = act(res.rep, g);
      const double ft = real_objective(trial, mode);
      if (ft < f) {
        res.rep = std::move(trial);
        f = ft;
        accepted = true;
        res.objective.push_back(f);
      }
    }
    ++res.iterations;
    if (!accepted) break;
    step = std::min(4.0 * step, 1.0);
  }
  res.residual = std::sqrt(f);
  res.converged = res.residual < tol;
  return res;
}

SolveResult solve_real_moment(const QuiverRep& rep, Gauge mode, int max_iter, double tol) {
  SolveResult res = descend_real_moment(rep, mode, max_iter, tol);
  if (!res.converged)
    throw NumericalError("no_convergence", "no convergence: residual " + std::to_string(res.residual) +
                                               " after " + std::to_string(res.iterations) + " iterations");
  return res;
}

Nilpotency end_matrix_nilpotency(const QuiverRep& rep, double tol) {
  const ComplexMoment cm = complex_moment(rep);
  if ((rep.n > 1 && cm.residuals.maxCoeff() >= tol) || cm.lambdas.cwiseAbs().maxCoeff() >= tol)
    throw PreconditionError("not_on_zero_level", "complex moment map not at lambda = 0");
  Nilpotency out;
  out.x = rep.alphas.back() * rep.betas.back();
  CMatrix power = CMatrix::Identity(rep.n, rep.n);
  for (int k = 0; k < rep.n; ++k) power = power * out.x;
  out.power_norm = power.norm();
  const double xn = out.x.norm();
  out.nilpotent = xn == 0.0 || out.power_norm < tol * std::pow(xn, rep.n - 1);
  return out;
}

H2Point sl2_gamma(const H2Point& p) {
  const CMatrix2 j = linalg::symplectic_j();
  H2Point out;
  out.alpha = (p.beta * j).transpose();
  out.beta = (j * p.alpha).transpose();
  return out;
}

QuiverRep regular_nilpotent_rep(int n, cplx alpha_scale, cplx beta_scale) {
  QuiverRep rep = QuiverRep::zero(n);
  for (int i = 1; i < n; ++i) {
    CMatrix shift = CMatrix::Zero(i + 1, i + 1);
    for (int k = 0; k < i; ++k) shift(k, k + 1) = 1.0;
    rep.alphas[i - 1] = alpha_scale * CMatrix::Identity(i + 1, i);
    rep.betas[i - 1] = beta_scale * shift.topRows(i);
  }
  return rep;
}

QuiverRep flag_example_n3(cplx c) {
  QuiverRep rep = QuiverRep::zero(3);
  rep.alphas[0](0, 0) = 1.0;
  rep.betas[0](0, 0) = c;
  rep.alphas[1] = CMatrix::Identity(3, 2);
  rep.betas[1](0, 2) = 1.0;
  return rep;
}

std::vector<CMatrix> random_sl_tuple(int n, double spread, std::mt19937_64& rng) {
  std::vector<CMatrix> g;
  for (int i = 1; i < n; ++i) {
    CMatrix m = CMatrix::Identity(i, i) + spread * random_gaussian(i, i, rng);
    const cplx det = m.determinant();
    m /= std::pow(det, 1.0 / static_cast<double>(i));
    g.push_back(std::move(m));
  }
  return g;
}

std::vector<CMatrix> random_unitary_tuple(int n, std::mt19937_64& rng) {
  std::vector<CMatrix> g;
  for (int i = 1; i < n; ++i) {
    Eigen::HouseholderQR<CMatrix> qr(random_gaussian(i, i, rng));
    CMatrix q = qr.householderQ();
    g.push_back(std::move(q));
  }
  return g;
}

}  // namespace implode::quiver
