#pragma once

#include <array>
#include <optional>
#include <vector>

#include "implode/linalg.hpp"

namespace implode::nahm {

// Samples of (T_0, T_1, T_2, T_3) on an increasing grid; t[c][k] is T_c at grid[k].
struct NahmData {
  std::vector<double> grid;
  std::array<std::vector<CMatrix>, 4> t;

  std::size_t size() const { return grid.size(); }
  Eigen::Index dim() const { return t[0].empty() ? 0 : t[0].front().rows(); }
};

using Quadruple = std::array<CMatrix, 4>;

enum class SymmetryKind { Scale, Reflect };

struct Symmetry {
  SymmetryKind kind = SymmetryKind::Scale;
  double c = 1.0;
};

inline constexpr double kPoleNorm = 1e6;
inline constexpr double kMaxStepGrowth = 2.0;
inline constexpr double kAntiHermitianTol = 1e-9;

void validate(const NahmData& data);

// dT_i/dt = [T_j, T_k] - [T_0, T_i], (ijk) cyclic.
Quadruple rhs(const Quadruple& t);

// max over interior samples and i of |dT_i/dt + [T_0,T_i] - [T_j,T_k]|_F,
// derivatives from a five-point finite-difference stencil (three points on
// grids shorter than five).
double residual(const NahmData& data);

// Fixed-step classical RK4 from `initial` at t_start to t_end (either
// direction); T_0 is held constant. Throws NumericalError("pole_encountered")
// when a norm exceeds kPoleNorm or grows by more than kMaxStepGrowth in one
// step.
NahmData integrate(const Quadruple& initial, double t_start, double t_end, int steps);

// scale(c): T_i(t) -> c T_i(c t) on the grid t_k / c, or resampled onto
// `target` by cubic interpolation. reflect: T_i(t) -> -T_i(-t) on the
// mirrored grid. Both act on all four components.
NahmData symmetry_transform(const NahmData& data, const Symmetry& sym,
                            const std::optional<std::vector<double>>& target = std::nullopt);

// e_i = -i sigma_i / 2, satisfying [e_1, e_2] = e_3 cyclically.
std::array<CMatrix, 3> su2_basis();

// T_0 = 0, T_i = -e_i / t.
NahmData exact_pole_solution(const std::vector<double>& grid);

std::vector<double> uniform_grid(double a, double b, int samples);

// Largest |T + T^*| over all samples and components.
double anti_hermitian_defect(const NahmData& data);

// Largest |T_c(t_k) - U_c(t_k)|_F, on identical grids.
double max_difference(const NahmData& a, const NahmData& b);

}  // namespace implode::nahm
