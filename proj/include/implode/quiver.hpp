#pragma once

#include <random>
#include <vector>

#include "implode/h2.hpp"
#include "implode/linalg.hpp"

namespace implode::quiver {

// Full flag quiver 0 <-> C <-> C^2 <-> ... <-> C^n. alphas[i-1] is
// alpha_i : C^i -> C^{i+1} ((i+1) x i) and betas[i-1] is beta_i : C^{i+1} -> C^i.
// alpha_0 = beta_0 = 0 are implicit.
struct QuiverRep {
  int n = 2;
  std::vector<CMatrix> alphas;
  std::vector<CMatrix> betas;

  static QuiverRep zero(int n);
};

struct ComplexMoment {
  CVector lambdas;     // lambda_i, i = 1..n-1
  RVector residuals;   // Frobenius norm of the traceless part at vertex i
};

enum class Gauge { SU, U };

struct VertexMoment {
  int vertex = 0;  // 1-based
  CMatrix mu;
  double residual = 0.0;
};

struct SolveResult {
  QuiverRep rep;
  int iterations = 0;
  double residual = 0.0;  // sqrt of sum_i |mu_i|^2
  bool converged = false;
  std::vector<double> objective;  // sum_i |mu_i|^2 after each accepted step
};

struct Nilpotency {
  CMatrix x;          // alpha_{n-1} beta_{n-1}
  double power_norm;  // |X^n|
  bool nilpotent;
};

inline constexpr double kMomentTol = 1e-8;

void validate(const QuiverRep& rep);

// alpha_{i-1} beta_{i-1} - beta_i alpha_i at vertex i (1-based).
CMatrix complex_moment_matrix(const QuiverRep& rep, int vertex);
ComplexMoment complex_moment(const QuiverRep& rep);

// alpha_i -> g_{i+1} alpha_i g_i^{-1}, beta_i -> g_i beta_i g_{i+1}^{-1},
// g_n = identity. g[i-1] is the i x i factor.
QuiverRep act(const QuiverRep& rep, const std::vector<CMatrix>& g);

// mu_i = a_{i-1} a_{i-1}^* - a_i^* a_i + b_i b_i^* - b_{i-1}^* b_{i-1}.
// SU mode reports traceless parts at vertices 2..n-1 (SU(1) is trivial);
// U mode reports full matrices at vertices 1..n-1.
std::vector<VertexMoment> real_moment(const QuiverRep& rep, Gauge mode);
double real_objective(const QuiverRep& rep, Gauge mode);

// Gradient descent along the complexified gauge orbit with step halving.
// Never throws on non-convergence; see solve_real_moment for that.
SolveResult descend_real_moment(const QuiverRep& rep, Gauge mode, int max_iter, double tol);

// Throws NumericalError("no_convergence") when max_iter is exhausted.
SolveResult solve_real_moment(const QuiverRep& rep, Gauge mode, int max_iter, double tol);

// Requires vanishing complex residuals and lambda; then X^n telescopes to 0.
Nilpotency end_matrix_nilpotency(const QuiverRep& rep, double tol = kMomentTol);

// gamma.(alpha, beta) = ((beta J)^T, (J alpha)^T).
H2Point sl2_gamma(const H2Point& p);

// alpha_i = inclusion of the first i coordinates, beta_i = first i rows of the
// (i+1) x (i+1) upper shift, both scaled. Satisfies the complex equations with
// lambda = 0 and X = regular nilpotent.
QuiverRep regular_nilpotent_rep(int n, cplx alpha_scale = 1.0, cplx beta_scale = 1.0);

// The n = 3 example: alpha_1 = e_1, beta_1 = c e_1^T, alpha_2 = [e_1 e_2],
// beta_2 = E_13.
QuiverRep flag_example_n3(cplx c = 0.0);

// Random element of prod_i SL(i, C) (identity plus Gaussian noise, det
// normalised to one).
std::vector<CMatrix> random_sl_tuple(int n, double spread, std::mt19937_64& rng);
std::vector<CMatrix> random_unitary_tuple(int n, std::mt19937_64& rng);

}  // namespace implode::quiver
