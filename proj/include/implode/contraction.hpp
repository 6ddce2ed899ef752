#pragma once

#include <random>
#include <utility>
#include <vector>

#include "implode/h2.hpp"
#include "implode/linalg.hpp"

namespace implode::contraction {

// A point of T^*SU(2) = SU(2) x su(2): k unitary with det 1, v traceless
// anti-Hermitian (the right moment map value).
struct CotangentPoint {
  CMatrix2 k = CMatrix2::Identity();
  CMatrix2 v = CMatrix2::Zero();
};

// h in SU(2) with h v h^* = lam diag(i, -i), lam >= 0.
struct Diagonalization {
  CMatrix2 h = CMatrix2::Identity();
  double lam = 0.0;
};

// v (x) w for a pair of H^2 points regrouped by torus weight:
// v = (alpha_1, beta_2^T), w = (beta_1, alpha_2^T).
struct Invariants4 {
  Eigen::Vector4cd v;
  Eigen::Vector4cd w;
  CMatrix4 m;
};

struct FlowSample {
  double t = 0.0;
  CMatrix2 b;
};

struct FlowResult {
  CMatrix2 end;
  std::vector<FlowSample> trajectory;
  int steps = 0;
  int rejected = 0;
  double max_im_det_drift = 0.0;
  double max_re_det_error = 0.0;  // |Re det B(t) - (Re det B(0) - t)|
};

struct FlowOptions {
  double step_tol = 1e-12;        // local error per step (step doubling)
  double degenerate_norm = 1e-6;  // lower bound on |grad Re det|^2 = |B|_F^2
  bool keep_trajectory = false;
};

struct PsiResult {
  CMatrix2 h;
  CMatrix2 right_g, right_x;  // (g h^{-1}, h.v) in the right implosion
  CMatrix2 left_g, left_v;    // (h, v) in the left implosion
  H2Point right;
  H2Point left;
  Invariants4 invariants;
};

inline constexpr double kTol = 1e-9;

// |det B - 1| < tol.
void check_sl2(const CMatrix2& b, double tol = kTol);
void check_cotangent(const CotangentPoint& x, double tol = kTol);

// B = U sqrt(B^*B) -> U sqrt(B^*B - gamma I), gamma the smallest eigenvalue of B^*B.
CMatrix2 su2_flow_closed_form(const CMatrix2& b, double tol = kTol);

// Unit-time flow of -grad Re(det) / |grad Re(det)|^2, adaptive RK4.
FlowResult gh_flow_numeric(const CMatrix2& b, const FlowOptions& opts = {}, double tol = kTol);

// The vector field itself, exposed for tests.
CMatrix2 gradient_hamiltonian_field(const CMatrix2& b);

// z = sqrt(2 lam) k e_1.
Eigen::Vector2cd implode_su2(const CMatrix2& k, double lam);

Diagonalization diagonalize(const CMatrix2& v);

CMatrix2 phi(const CotangentPoint& x, double tol = kTol);

bool equivalent(const CotangentPoint& x, const CotangentPoint& y, double tol = kTol);

Invariants4 complex_invariants(const H2Point& p1, const H2Point& p2, double tol = kTol);

// Chooses h in SU(2) sending the line to the e_1-line.
PsiResult psi_sl2(const CMatrix2& g, const CMatrix2& v, const Eigen::Vector2cd& line, double tol = kTol);

// Same with a caller-supplied h; h v h^{-1} must be upper triangular.
PsiResult psi_sl2_with(const CMatrix2& g, const CMatrix2& v, const CMatrix2& h, double tol = kTol);

// A -> J~ A^T J~ with J~ = diag(J, J). Involutive and rank preserving; negates the trace.
CMatrix4 swann_weyl(const CMatrix4& m);

bool q_circ_membership(const H2Point& p, double tol = kTol);

// Largest modulus among all 2x2 minors.
double max_minor(const CMatrix4& m);
double max_minor(const CMatrix2& m);

// Samplers for the seeded property suites.
CMatrix2 random_su2(std::mt19937_64& rng);
CMatrix2 random_traceless_antihermitian(std::mt19937_64& rng, double scale = 1.0);
// k1 diag(x, 1/x) k2 with x drawn so that x - 1/x >= min_gap.
CMatrix2 random_sl2_with_gap(std::mt19937_64& rng, double min_gap);
CMatrix2 random_sl2(std::mt19937_64& rng);
H2Point random_h2(std::mt19937_64& rng);
// Two H^2 points whose torus moment maps beta alpha sum to zero.
std::pair<H2Point, H2Point> random_zero_level_pair(std::mt19937_64& rng);
// Upper triangular with determinant one.
CMatrix2 random_borel(std::mt19937_64& rng);

}  // namespace implode::contraction
