#include "implode/arrangement.hpp"

#include <algorithm>
#include <cstdint>

#include "implode/error.hpp"
#include "implode/lp.hpp"

namespace implode::arrangement {

namespace {

IntMatrix rows_of(const Arrangement& arr, const std::vector<int>& subset) {
  IntMatrix m(subset.size(), arr.rank);
  for (std::size_t k = 0; k < subset.size(); ++k) m.row(k) = arr.normals[subset[k]].transpose();
  return m;
}

std::vector<int> subset_of_mask(std::uint64_t mask, int n) {
  std::vector<int> s;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1u) s.push_back(i);
  return s;
}

void guard_size(const Arrangement& arr) {
  if (arr.size() > kMaxExhaustive)
    throw PreconditionError("arrangement_too_large", "arrangement too large for exhaustive enumeration");
}

bool flat_less(const Flat& a, const Flat& b) {
  if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
  return a.indices < b.indices;
}

// Merge proportional normals (either orientation) keeping first occurrences.
std::vector<IntVector> dedupe(const std::vector<IntVector>& vs) {
  std::vector<IntVector> out;
  for (const auto& v : vs) {
    const bool dup = std::any_of(out.begin(), out.end(),
                                 [&](const IntVector& u) { return linalg::proportional(u, v); });
    if (!dup) out.push_back(v);
  }
  return out;
}

}  // namespace

Arrangement from_normals(int rank, const std::vector<IntVector>& vectors) {
  if (rank < 0) throw PreconditionError("invalid_rank", "rank must be nonnegative");
  Arrangement arr;
  arr.rank = rank;
  for (const auto& v : vectors) {
    if (v.size() != rank) throw PreconditionError("dimension_mismatch", "normal has wrong length");
    if (linalg::content(v) == 0) throw PreconditionError("degenerate_normal", "degenerate normal");
    const IntVector p = linalg::primitive(v);
    for (const auto& u : arr.normals)
      if (linalg::proportional(u, p)) throw PreconditionError("repeated_hyperplane", "repeated hyperplane");
    arr.normals.push_back(p);
  }
  return arr;
}

Arrangement from_root_system(const rootsys::RootSystem& rs) {
  return from_normals(rs.rank, rs.positive_roots);
}

Flat closure(const Arrangement& arr, const std::vector<int>& subset) {
  const IntMatrix base = rows_of(arr, subset);
  const int base_rank = linalg::exact_rank(base);
  Flat f;
  f.subspace_dim = arr.rank - base_rank;
  IntMatrix extended(base.rows() + 1, arr.rank);
  if (base.rows() > 0) extended.topRows(base.rows()) = base;
  for (int i = 0; i < arr.size(); ++i) {
    extended.row(base.rows()) = arr.normals[i].transpose();
    if (linalg::exact_rank(extended) == base_rank) f.indices.push_back(i);
  }
  return f;
}

bool is_flat(const Arrangement& arr, const std::vector<int>& subset) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  return closure(arr, sorted).indices == sorted;
}

std::vector<Flat> flats(const Arrangement& arr, Exec exec) {
  guard_size(arr);
  const int n = arr.size();
  const std::size_t count = std::size_t{1} << n;
  auto closures = map_indices<Flat>(count, exec, [&](std::size_t mask) {
    return closure(arr, subset_of_mask(mask, n));
  });
  std::sort(closures.begin(), closures.end(), flat_less);
  closures.erase(std::unique(closures.begin(), closures.end()), closures.end());
  return closures;
}

bool is_broad(const Arrangement& arr, const std::vector<int>& subset, RVector* witness) {
  // Feasibility of alpha_i(x) >= 1 on V and -alpha_i(x) >= 1 off V.
  std::vector<char> in(arr.size(), 0);
  for (int i : subset) in.at(i) = 1;
  RMatrix a(arr.size(), arr.rank);
  for (int i = 0; i < arr.size(); ++i) {
    const double sgn = in[i] ? 1.0 : -1.0;
    a.row(i) = sgn * arr.normals[i].cast<double>().transpose();
  }
  const auto x = lp::find_point(a, RVector::Ones(arr.size()));
  if (x && witness) *witness = *x;
  return x.has_value();
}

std::vector<BroadSet> broad_subsets(const Arrangement& arr, Exec exec) {
  guard_size(arr);
  const int n = arr.size();
  const std::size_t count = std::size_t{1} << n;
  const auto broad = map_indices<char>(count, exec, [&](std::size_t mask) -> char {
    return is_broad(arr, subset_of_mask(mask, n)) ? 1 : 0;
  });
  std::vector<BroadSet> out;
  for (std::size_t mask = 0; mask < count; ++mask)
    if (broad[mask]) out.push_back({subset_of_mask(mask, n)});
  std::sort(out.begin(), out.end(), [](const BroadSet& a, const BroadSet& b) {
    if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
    return a.indices < b.indices;
  });
  return out;
}

Stratum stratum_of(const Arrangement& arr, const hypertoric::HypertoricPoint& p, double tol) {
  if (p.a.size() != arr.size() || p.b.size() != arr.size())
    throw PreconditionError("size_mismatch", "point has wrong number of coordinate pairs");
  Stratum s;
  for (int i = 0; i < arr.size(); ++i)
    if (std::abs(p.a(i)) <= tol && std::abs(p.b(i)) <= tol) s.zero_pairs.push_back(i);
  s.flat = closure(arr, s.zero_pairs);
  s.in_mg = s.zero_pairs.size() <= 1;
  s.in_open_stratum = s.zero_pairs.empty();
  s.complex_codim = 2 * (arr.rank - s.flat.subspace_dim);
  return s;
}

std::pair<Arrangement, Arrangement> restriction_localization(const Arrangement& arr, const Flat& f) {
  if (!is_flat(arr, f.indices)) throw PreconditionError("not_a_flat", "index set is not a flat");
  std::vector<char> in(arr.size(), 0);
  for (int i : f.indices) in[i] = 1;

  const IntMatrix f_rows = rows_of(arr, f.indices);
  // Columns span the lattice points of H_F.
  const IntMatrix h_basis = f.indices.empty() ? IntMatrix(IntMatrix::Identity(arr.rank, arr.rank))
                                              : linalg::integer_kernel(f_rows);

  std::vector<IntVector> restricted;
  for (int i = 0; i < arr.size(); ++i) {
    if (in[i]) continue;
    restricted.push_back(linalg::primitive(h_basis.transpose() * arr.normals[i]));
  }
  Arrangement upper;
  upper.rank = static_cast<int>(h_basis.cols());
  upper.normals = dedupe(restricted);

  // Saturated basis of the functionals vanishing on H_F.
  Arrangement lower;
  if (!f.indices.empty()) {
    const IntMatrix annihilator =
        h_basis.cols() == 0 ? IntMatrix(IntMatrix::Identity(arr.rank, arr.rank))
                            : linalg::integer_kernel(h_basis.transpose());
    lower.rank = static_cast<int>(annihilator.cols());
    const IntMatrix basis_rows = annihilator.transpose();
    for (int i : f.indices)
      lower.normals.push_back(linalg::rational_coordinates_primitive(basis_rows, arr.normals[i]));
    lower.normals = dedupe(lower.normals);
  }
  return {upper, lower};
}

}  // namespace implode::arrangement
