#pragma once

#include "implode/linalg.hpp"

namespace implode::hypertoric {

// A point of C^{2N} written as N pairs (a_i, b_i).
struct HypertoricPoint {
  CVector a;
  CVector b;

  Eigen::Index size() const { return a.size(); }
  static HypertoricPoint zero(Eigen::Index n) { return {CVector::Zero(n), CVector::Zero(n)}; }
};

}  // namespace implode::hypertoric
