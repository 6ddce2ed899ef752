#include "implode/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "implode/error.hpp"

namespace implode::rootsys {

namespace {

IntMatrix gram_for(char family, int rank) {
  IntMatrix g = IntMatrix::Zero(rank, rank);
  switch (family) {
    case 'A':
      for (int i = 0; i < rank; ++i) {
        g(i, i) = 2;
        if (i + 1 < rank) g(i, i + 1) = g(i + 1, i) = -1;
      }
      return g;
    case 'B':
      g << 2, -1, -1, 1;
      return g;
    case 'C':
      g << 2, -2, -2, 4;
      return g;
    case 'G':
      g << 2, -3, -3, 6;
      return g;
    default:
      break;
  }
  throw PreconditionError("unsupported_root_system", "unsupported root system");
}

std::vector<std::int64_t> key_of(const IntMatrix& m) {
  return {m.data(), m.data() + m.size()};
}

bool nonnegative(const IntVector& v) { return (v.array() >= 0).all(); }

int height(const IntVector& v) { return static_cast<int>(v.sum()); }

}  // namespace

RootSystem build_root_system(char family, int rank) {
  const bool supported = (family == 'A' && rank >= 1 && rank <= 4) ||
                         ((family == 'B' || family == 'C' || family == 'G') && rank == 2);
  if (!supported) throw PreconditionError("unsupported_root_system", "unsupported root system");

  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.gram = gram_for(family, rank);
  rs.cartan = IntMatrix(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.cartan(i, j) = 2 * rs.gram(i, j) / rs.gram(i, i);
  for (int i = 0; i < rank; ++i) rs.simple_roots.push_back(IntVector::Unit(rank, i));

  // Closure of the simple roots under the simple reflections gives every root.
  std::vector<IntMatrix> reflections;
  for (int j = 0; j < rank; ++j) reflections.push_back(simple_reflection(rs, j));
  std::map<std::vector<std::int64_t>, IntVector> seen;
  std::deque<IntVector> queue(rs.simple_roots.begin(), rs.simple_roots.end());
  for (const auto& r : queue) seen.emplace(key_of(r), r);
  while (!queue.empty()) {
    IntVector r = queue.front();
    queue.pop_front();
    for (const auto& s : reflections) {
      IntVector image = s * r;
      if (seen.emplace(key_of(image), image).second) queue.push_back(image);
    }
  }
  std::vector<IntVector> others;
  for (const auto& [key, r] : seen) {
    if (!nonnegative(r) || height(r) == 1) continue;
    others.push_back(r);
  }
  std::sort(others.begin(), others.end(), [](const IntVector& a, const IntVector& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(), a.data() + a.size());
  });
  rs.positive_roots = rs.simple_roots;
  rs.positive_roots.insert(rs.positive_roots.end(), others.begin(), others.end());
  return rs;
}

IntMatrix simple_reflection(const RootSystem& rs, int j) {
  // s_j(alpha_i) = alpha_i - <alpha_j^vee, alpha_i> alpha_j = alpha_i - a_ji alpha_j.
  IntMatrix s = IntMatrix::Identity(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i) s(j, i) -= rs.cartan(j, i);
  return s;
}

WeylElement make_element(const RootSystem& rs, const IntMatrix& matrix, std::vector<int> word) {
  WeylElement w;
  w.matrix = matrix;
  w.word = std::move(word);
  const int n = rs.num_positive();
  w.sigma.assign(n, -1);
  w.signs.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    const IntVector image = matrix * rs.positive_roots[i];
    for (int k = 0; k < n; ++k) {
      if (image == rs.positive_roots[k]) {
        w.sigma[i] = k;
        w.signs[i] = 1;
      } else if (image == -rs.positive_roots[k]) {
        w.sigma[i] = k;
        w.signs[i] = -1;
      }
    }
    if (w.sigma[i] < 0)
      throw PreconditionError("not_weyl_element", "matrix does not permute the roots");
  }
  return w;
}

std::vector<WeylElement> weyl_elements(const RootSystem& rs) {
  std::vector<IntMatrix> reflections;
  for (int j = 0; j < rs.rank; ++j) reflections.push_back(simple_reflection(rs, j));

  std::vector<WeylElement> out;
  std::map<std::vector<std::int64_t>, std::size_t> index;
  const IntMatrix id = IntMatrix::Identity(rs.rank, rs.rank);
  out.push_back(make_element(rs, id));
  index.emplace(key_of(id), 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int j = 0; j < rs.rank; ++j) {
      IntMatrix m = out[head].matrix * reflections[j];
      if (index.count(key_of(m))) continue;
      std::vector<int> word = out[head].word;
      word.push_back(j);
      index.emplace(key_of(m), out.size());
      out.push_back(make_element(rs, m, std::move(word)));
    }
  }
  return out;
}

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  std::vector<int> word = a.word;
  word.insert(word.end(), b.word.begin(), b.word.end());
  return make_element(rs, a.matrix * b.matrix, std::move(word));
}

bool chamber_membership(const RootSystem& rs, std::span<const double> xi, bool closed, double tol) {
  if (static_cast<int>(xi.size()) != rs.rank)
    throw PreconditionError("dimension_mismatch", "dimension mismatch");
  for (double x : xi) {
    if (closed ? x < -tol : x <= tol) return false;
  }
  return true;
}

namespace {

template <typename Vec>
Vec act_impl(const WeylElement& w, const Vec& xi) {
  const IntMatrix inv = linalg::unimodular_inverse(w.matrix);
  Vec out = Vec::Zero(xi.size());
  for (Eigen::Index k = 0; k < xi.size(); ++k)
    for (Eigen::Index j = 0; j < xi.size(); ++j) out(k) += static_cast<double>(inv(j, k)) * xi(j);
  return out;
}

}  // namespace

RVector act(const WeylElement& w, const RVector& xi) { return act_impl(w, xi); }
CVector act(const WeylElement& w, const CVector& xi) { return act_impl(w, xi); }

}  // namespace implode::rootsys
