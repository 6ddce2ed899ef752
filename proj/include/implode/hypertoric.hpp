#pragma once

#include <random>
#include <vector>

#include "implode/arrangement.hpp"
#include "implode/h2.hpp"
#include "implode/hypertoric_point.hpp"
#include "implode/rootsys.hpp"

namespace implode::hypertoric {

// Integer basis of L = ker(Z^N -> Z^r, e_i -> alpha_i).
struct KernelLattice {
  std::vector<IntVector> basis;
};

struct LResiduals {
  CVector complex;  // sum_i l_i a_i b_i per generator l
  RVector real;     // sum_i l_i (|a_i|^2 - |b_i|^2) / 2
};

// Residual torus moment maps, as values on the simple roots.
struct TMoment {
  CVector xi_complex;
  RVector xi_real;
};

// Chart-level record of the map into (t*_C + g*) x prod_w X_G. Components
// are indexed like rootsys::weyl_elements(rs).
struct EmbeddingRecord {
  CVector mu_complex;
  RVector mu_real;
  std::vector<HypertoricPoint> components;
};

inline constexpr double kConsistencyTol = 1e-9;
inline constexpr double kChartTol = 1e-12;

KernelLattice kernel_lattice(const arrangement::Arrangement& arr);

LResiduals l_moment_residuals(const arrangement::Arrangement& arr, const HypertoricPoint& p);

TMoment t_moment(const arrangement::Arrangement& arr, const HypertoricPoint& p,
                 double tol = kConsistencyTol);

// Permutes the pairs by sigma(w); where the sign is -1 the pair (a, b) becomes
// (b, -a). The square of a reflection is therefore the torus element -1.
HypertoricPoint weyl_act(const rootsys::RootSystem& rs, const arrangement::Arrangement& arr,
                         const rootsys::WeylElement& w, const HypertoricPoint& p);

// Projection of the cotangent chart of X(V) onto X(V): b_i = 0 on V, a_j = 0 off V.
HypertoricPoint core_projection(const arrangement::Arrangement& arr, const arrangement::BroadSet& v,
                                const HypertoricPoint& p, double tol = kChartTol);

EmbeddingRecord universal_components(const rootsys::RootSystem& rs,
                                     const arrangement::Arrangement& arr, const HypertoricPoint& p);

// Functions of a record that are constant on L_C-orbits of the input point:
// the moment values followed by, for each component and each simple
// coordinate k, the monomial prod_i a_i^{alpha_i[k]}.
CVector record_invariants(const arrangement::Arrangement& arr, const EmbeddingRecord& rec);

// (a, b) on A1 into Q_SL(2): ((a, 0)^T, (b, 0)).
H2Point sl2_embed_quiver(const arrangement::Arrangement& arr, const HypertoricPoint& p);

// Point on the zero L-level with prescribed residual moment values.
HypertoricPoint point_with_moments(const arrangement::Arrangement& arr, const CVector& xi_complex,
                                   const RVector& xi_real, std::mt19937_64& rng);

// Seeded zero-level point with Gaussian moment values; generic, so it lies
// in the open stratum with probability one.
HypertoricPoint random_zero_level_point(const arrangement::Arrangement& arr, std::mt19937_64& rng);

// Acts by a unit-modulus element of L_C given by one angle per generator.
HypertoricPoint l_act(const KernelLattice& lat, const HypertoricPoint& p, const RVector& angles);

}  // namespace implode::hypertoric
