#pragma once

#include <optional>

#include "implode/linalg.hpp"

namespace implode::lp {

// Returns some x with a * x >= b componentwise (x unrestricted in sign), or
// nullopt when the system is infeasible. Dense two-phase simplex with
// Bland's rule; intended for the handful of constraints arising from small
// hyperplane arrangements.
std::optional<RVector> find_point(const RMatrix& a, const RVector& b, double tol = 1e-9);

}  // namespace implode::lp
