#pragma once

#include <span>
#include <string>
#include <vector>

#include "implode/linalg.hpp"

namespace implode::rootsys {

// A crystallographic root system of small rank. All roots are integer
// coefficient vectors in the simple-root basis; simple roots come first in
// `positive_roots`.
struct RootSystem {
  char family = 'A';
  int rank = 0;
  std::vector<IntVector> simple_roots;
  std::vector<IntVector> positive_roots;
  // Standard Cartan matrix a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
  IntMatrix cartan;
  // Gram matrix of the simple roots for the invariant inner product.
  IntMatrix gram;

  int num_positive() const { return static_cast<int>(positive_roots.size()); }
  std::string name() const { return std::string(1, family) + std::to_string(rank); }
};

// A Weyl group element together with its signed-permutation action on the
// positive roots: matrix * alpha_i = signs[i] * alpha_{sigma[i]}.
// `sigma` is 0-based here; the JSON layer prints it 1-based.
struct WeylElement {
  IntMatrix matrix;
  std::vector<int> sigma;
  std::vector<int> signs;
  // Simple-reflection indices (0-based), shortest found by breadth-first
  // search. Not guaranteed reduced in the Coxeter sense.
  std::vector<int> word;
};

inline constexpr double kChamberTol = 1e-10;

// Supported: A1..A4, B2, C2, G2. Throws PreconditionError otherwise.
RootSystem build_root_system(char family, int rank);

// Matrix of the simple reflection s_j in the simple-root basis.
IntMatrix simple_reflection(const RootSystem& rs, int j);

// Whole Weyl group, identity first, in breadth-first order.
std::vector<WeylElement> weyl_elements(const RootSystem& rs);

// Signed permutation of the positive roots induced by an arbitrary Weyl
// matrix. Throws if the matrix does not permute the roots up to sign.
WeylElement make_element(const RootSystem& rs, const IntMatrix& matrix, std::vector<int> word = {});

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b);

// xi is given by its values on the simple roots, xi_k = alpha_k(xi).
bool chamber_membership(const RootSystem& rs, std::span<const double> xi, bool closed,
                        double tol = kChamberTol);

// Value of xi on an arbitrary root given by simple-root coefficients.
template <typename Vec>
typename Vec::Scalar pair(const IntVector& root, const Vec& xi) {
  typename Vec::Scalar s(0);
  for (Eigen::Index k = 0; k < root.size(); ++k) s += static_cast<double>(root(k)) * xi(k);
  return s;
}

// (w . xi)(beta) = xi(w^{-1} beta), returned in simple-root value coordinates.
RVector act(const WeylElement& w, const RVector& xi);
CVector act(const WeylElement& w, const CVector& xi);

}  // namespace implode::rootsys
