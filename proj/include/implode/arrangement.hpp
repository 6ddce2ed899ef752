#pragma once

#include <utility>
#include <vector>

#include "implode/hypertoric_point.hpp"
#include "implode/linalg.hpp"
#include "implode/parallel.hpp"
#include "implode/rootsys.hpp"

namespace implode::arrangement {

// Central arrangement of N distinct hyperplanes H_i = {x : normals[i] . x = 0}
// in a rank-r space; normals are primitive and pairwise non-proportional.
struct Arrangement {
  int rank = 0;
  std::vector<IntVector> normals;

  int size() const { return static_cast<int>(normals.size()); }
};

// Index sets are 0-based and sorted. subspace_dim = dim of the common
// intersection H_F.
struct Flat {
  std::vector<int> indices;
  int subspace_dim = 0;

  friend bool operator==(const Flat&, const Flat&) = default;
};

struct BroadSet {
  std::vector<int> indices;

  friend bool operator==(const BroadSet&, const BroadSet&) = default;
};

struct Stratum {
  Flat flat;
  std::vector<int> zero_pairs;  // {i : a_i = b_i = 0}
  bool in_mg = false;           // at most one vanishing pair
  bool in_open_stratum = false; // no vanishing pair
  int complex_codim = 0;        // 2 * rank of the flat's normals
};

inline constexpr int kMaxExhaustive = 24;
inline constexpr double kPairZeroTol = 1e-12;

Arrangement from_normals(int rank, const std::vector<IntVector>& vectors);

// Hyperplanes orthogonal to the positive roots, normals in simple-root
// coordinates.
Arrangement from_root_system(const rootsys::RootSystem& rs);

// Closure {i : H_i contains H_S} of an arbitrary index set.
Flat closure(const Arrangement& arr, const std::vector<int>& subset);
bool is_flat(const Arrangement& arr, const std::vector<int>& subset);

// All flats, sorted by (size, lexicographic).
std::vector<Flat> flats(const Arrangement& arr, Exec exec = Exec::Parallel);

// All broad subsets V: the cone {alpha_i >= 0 on V, <= 0 off V} has interior.
std::vector<BroadSet> broad_subsets(const Arrangement& arr, Exec exec = Exec::Parallel);

// True iff V is broad; when `witness` is non-null it receives an interior
// point with margin 1.
bool is_broad(const Arrangement& arr, const std::vector<int>& subset, RVector* witness = nullptr);

Stratum stratum_of(const Arrangement& arr, const hypertoric::HypertoricPoint& p,
                   double tol = kPairZeroTol);

// (A^F on H_F, A_F on the quotient by H_F).
std::pair<Arrangement, Arrangement> restriction_localization(const Arrangement& arr, const Flat& f);

}  // namespace implode::arrangement
