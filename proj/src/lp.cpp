#include "implode/lp.hpp"

#include <limits>
#include <vector>

namespace implode::lp {

std::optional<RVector> find_point(const RMatrix& a, const RVector& b, double tol) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (m == 0) return RVector::Zero(n);

  // Columns: x+ (n), x- (n), surplus (m), artificial (m), rhs.
  // Rows with negative rhs are negated so the artificial basis is feasible.
  const Eigen::Index cols = 2 * n + 2 * m;
  RMatrix t = RMatrix::Zero(m + 1, cols + 1);
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double sgn = b(i) < 0 ? -1.0 : 1.0;
    t.block(i, 0, 1, n) = sgn * a.row(i);
    t.block(i, n, 1, n) = -sgn * a.row(i);
    t(i, 2 * n + i) = -sgn;
    t(i, 2 * n + m + i) = 1.0;
    t(i, cols) = sgn * b(i);
    basis[i] = 2 * n + m + i;
  }
  // Phase-one objective: minimise the sum of artificials, stored as reduced costs.
  for (Eigen::Index i = 0; i < m; ++i) t.row(m) -= t.row(i);
  for (Eigen::Index i = 0; i < m; ++i) t(m, 2 * n + m + i) = 0.0;

  const int max_pivots = 50 * static_cast<int>(cols + m);
  for (int it = 0; it < max_pivots; ++it) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (t(m, j) < -tol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter) <= tol) continue;
      const double ratio = t(i, cols) / t(i, enter);
      if (ratio < best - tol || (ratio < best + tol && leave >= 0 && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) break;  // unbounded direction cannot occur in phase one
    t.row(leave) /= t(leave, enter);
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leave || t(i, enter) == 0.0) continue;
      t.row(i) -= t(i, enter) * t.row(leave);
    }
    basis[leave] = enter;
  }

  if (-t(m, cols) > tol * std::max<double>(1.0, b.cwiseAbs().maxCoeff())) return std::nullopt;

  RVector x = RVector::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[i] < n) x(basis[i]) += t(i, cols);
    else if (basis[i] < 2 * n) x(basis[i] - n) -= t(i, cols);
  }
  return x;
}

}  // namespace implode::lp
