#pragma once

#include <Eigen/Dense>

namespace implode {

// A point of H^2 = Hom(C, C^2) + Hom(C^2, C): a column alpha and a row beta.
struct H2Point {
  Eigen::Vector2cd alpha = Eigen::Vector2cd::Zero();
  Eigen::RowVector2cd beta = Eigen::RowVector2cd::Zero();
};

}  // namespace implode
