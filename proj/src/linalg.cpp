#include "implode/linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include <boost/rational.hpp>

namespace implode::linalg {

namespace {

using Rational = boost::rational<std::int64_t>;
using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), std::vector<Rational>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = Rational(m(i, j));
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].numerator() == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].numerator() == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

}  // namespace

int exact_rank(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto a = to_rational(m);
  return static_cast<int>(rref(a).size());
}

std::int64_t content(const IntVector& v) {
  std::int64_t g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, abs64(v(i)));
  return g;
}

IntVector primitive(const IntVector& v) {
  const std::int64_t g = content(v);
  if (g == 0) return v;
  IntVector out = v;
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) /= g;
  return out;
}

bool proportional(const IntVector& u, const IntVector& v) {
  if (u.size() != v.size()) return false;
  IntMatrix m(2, u.size());
  m.row(0) = u.transpose();
  m.row(1) = v.transpose();
  return exact_rank(m) < 2;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index n = m.cols();
  IntMatrix b = m;
  IntMatrix u = IntMatrix::Identity(n, n);
  Eigen::Index pivot = 0;
  for (Eigen::Index i = 0; i < rows && pivot < n; ++i) {
    // Euclid on columns pivot..n-1 of row i until only column `pivot` is nonzero.
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index j = pivot; j < n; ++j)
        if (b(i, j) != 0 && (best < 0 || abs64(b(i, j)) < abs64(b(i, best)))) best = j;
      if (best < 0) break;
      if (best != pivot) {
        b.col(best).swap(b.col(pivot));
        u.col(best).swap(u.col(pivot));
      }
      bool done = true;
      for (Eigen::Index j = pivot + 1; j < n; ++j) {
        if (b(i, j) == 0) continue;
        const std::int64_t q = b(i, j) / b(i, pivot);
        b.col(j) -= q * b.col(pivot);
        u.col(j) -= q * u.col(pivot);
        if (b(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (b(i, pivot) != 0) ++pivot;
  }
  IntMatrix kernel(n, n - pivot);
  for (Eigen::Index j = pivot; j < n; ++j) {
    IntVector col = u.col(j);
    for (Eigen::Index k = 0; k < n; ++k) {
      if (col(k) == 0) continue;
      if (col(k) < 0) col = -col;
      break;
    }
    kernel.col(j - pivot) = col;
  }
  return kernel;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("unimodular_inverse: matrix not square");
  RationalMatrix a(n, std::vector<Rational>(2 * n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = 1;
  }
  const auto pivots = rref(a);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots.back() >= static_cast<std::size_t>(n))
    throw std::invalid_argument("unimodular_inverse: singular matrix");
  IntMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Rational& x = a[i][n + j];
      if (x.denominator() != 1) throw std::invalid_argument("unimodular_inverse: not unimodular");
      out(i, j) = x.numerator();
    }
  return out;
}

IntVector rational_coordinates_primitive(const IntMatrix& rows, const IntVector& rhs) {
  // Solve sum_k x_k rows(k,:) = rhs, i.e. rows^T x = rhs.
  const Eigen::Index k = rows.rows();
  const Eigen::Index n = rows.cols();
  RationalMatrix a(n, std::vector<Rational>(k + 1));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) a[i][j] = Rational(rows(j, i));
    a[i][k] = Rational(rhs(i));
  }
  const auto pivots = rref(a);
  for (auto p : pivots)
    if (p == static_cast<std::size_t>(k))
      throw std::invalid_argument("rational_coordinates: vector outside row span");
  std::vector<Rational> x(k, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][k];
  std::int64_t denom = 1;
  for (const auto& q : x) denom = std::lcm(denom, q.denominator());
  IntVector out(k);
  for (Eigen::Index j = 0; j < k; ++j)
    out(j) = x[j].numerator() * (denom / x[j].denominator());
  return primitive(out);
}

CMatrix hermitian_sqrt(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  RVector ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix hermitian_exp(const CMatrix& h, double scale) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  RVector ev = (scale * es.eigenvalues()).array().exp();
  return es.eigenvectors() * ev.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix traceless_part(const CMatrix& m) {
  if (m.rows() == 0) return m;
  return m - (m.trace() / static_cast<double>(m.rows())) * CMatrix::Identity(m.rows(), m.cols());
}

CMatrix2 symplectic_j() {
  CMatrix2 j;
  j << 0.0, 1.0, -1.0, 0.0;
  return j;
}

}  // namespace implode::linalg
