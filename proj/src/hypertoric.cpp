#include "implode/hypertoric.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "implode/error.hpp"

namespace implode::hypertoric {

namespace {

using arrangement::Arrangement;

void check_size(const Arrangement& arr, const HypertoricPoint& p) {
  if (p.a.size() != arr.size() || p.b.size() != arr.size())
    throw PreconditionError("size_mismatch", "point has wrong number of coordinate pairs");
}

RMatrix normal_matrix(const Arrangement& arr) {
  RMatrix m(arr.size(), arr.rank);
  for (int i = 0; i < arr.size(); ++i) m.row(i) = arr.normals[i].cast<double>().transpose();
  return m;
}

void check_weyl_arrangement(const rootsys::RootSystem& rs, const Arrangement& arr) {
  bool ok = arr.rank == rs.rank && arr.size() == rs.num_positive();
  for (int i = 0; ok && i < arr.size(); ++i) ok = arr.normals[i] == rs.positive_roots[i];
  if (!ok)
    throw PreconditionError("arrangement_mismatch", "arrangement is not the Weyl arrangement of " + rs.name());
}

std::string word_string(const rootsys::WeylElement& w) {
  if (w.word.empty()) return "e";
  std::string s;
  for (int j : w.word) s += "s" + std::to_string(j + 1);
  return s;
}

}  // namespace

KernelLattice kernel_lattice(const Arrangement& arr) {
  IntMatrix columns(arr.rank, arr.size());
  for (int i = 0; i < arr.size(); ++i) columns.col(i) = arr.normals[i];
  if (linalg::exact_rank(columns) != arr.rank)
    throw PreconditionError("torus_map_not_surjective", "torus map not surjective");
  const IntMatrix k = linalg::integer_kernel(columns);
  KernelLattice lat;
  for (Eigen::Index j = 0; j < k.cols(); ++j) lat.basis.push_back(k.col(j));
  return lat;
}

LResiduals l_moment_residuals(const Arrangement& arr, const HypertoricPoint& p) {
  check_size(arr, p);
  const KernelLattice lat = kernel_lattice(arr);
  LResiduals r{CVector::Zero(lat.basis.size()), RVector::Zero(lat.basis.size())};
  for (std::size_t g = 0; g < lat.basis.size(); ++g) {
    for (int i = 0; i < arr.size(); ++i) {
      const double l = static_cast<double>(lat.basis[g](i));
      r.complex(g) += l * p.a(i) * p.b(i);
      r.real(g) += l * 0.5 * (std::norm(p.a(i)) - std::norm(p.b(i)));
    }
  }
  return r;
}

TMoment t_moment(const Arrangement& arr, const HypertoricPoint& p, double tol) {
  check_size(arr, p);
  const RMatrix a = normal_matrix(arr);
  CVector zc(arr.size());
  RVector zr(arr.size());
  for (int i = 0; i < arr.size(); ++i) {
    zc(i) = p.a(i) * p.b(i);
    zr(i) = 0.5 * (std::norm(p.a(i)) - std::norm(p.b(i)));
  }
  TMoment m;
  const Eigen::ColPivHouseholderQR<RMatrix> qr(a);
  m.xi_real = qr.solve(zr);
  m.xi_complex = qr.solve(zc.real()).cast<cplx>() + cplx(0, 1) * qr.solve(zc.imag()).cast<cplx>();
  const double err_c = (a.cast<cplx>() * m.xi_complex - zc).norm();
  const double err_r = (a * m.xi_real - zr).norm();
  if (err_c > tol * std::max(1.0, zc.norm()) || err_r > tol * std::max(1.0, zr.norm()))
    throw PreconditionError("off_zero_level", "point not on zero L-level");
  return m;
}

HypertoricPoint weyl_act(const rootsys::RootSystem& rs, const Arrangement& arr,
                         const rootsys::WeylElement& w, const HypertoricPoint& p) {
  check_weyl_arrangement(rs, arr);
  check_size(arr, p);
  HypertoricPoint out = HypertoricPoint::zero(arr.size());
  for (int i = 0; i < arr.size(); ++i) {
    const int k = w.sigma[i];
    if (w.signs[i] > 0) {
      out.a(k) = p.a(i);
      out.b(k) = p.b(i);
    } else {
      out.a(k) = p.b(i);
      out.b(k) = -p.a(i);
    }
  }
  return out;
}

HypertoricPoint core_projection(const Arrangement& arr, const arrangement::BroadSet& v,
                                const HypertoricPoint& p, double tol) {
  check_size(arr, p);
  std::vector<char> in(arr.size(), 0);
  for (int i : v.indices) in.at(i) = 1;
  int zeros = 0;
  for (int i = 0; i < arr.size(); ++i) {
    const cplx kept = in[i] ? p.a(i) : p.b(i);
    if (std::abs(kept) <= tol) ++zeros;
  }
  if (zeros > 1) throw PreconditionError("outside_chart", "point outside cotangent chart");
  HypertoricPoint out = p;
  for (int i = 0; i < arr.size(); ++i) {
    if (in[i]) out.b(i) = 0.0;
    else out.a(i) = 0.0;
  }
  return out;
}

EmbeddingRecord universal_components(const rootsys::RootSystem& rs, const Arrangement& arr,
                                     const HypertoricPoint& p) {
  check_weyl_arrangement(rs, arr);
  const TMoment m = t_moment(arr, p);
  EmbeddingRecord rec{m.xi_complex, m.xi_real, {}};
  arrangement::BroadSet omega;
  for (int i = 0; i < arr.size(); ++i) omega.indices.push_back(i);
  for (const auto& w : rootsys::weyl_elements(rs)) {
    const HypertoricPoint moved = weyl_act(rs, arr, w, p);
    try {
      rec.components.push_back(core_projection(arr, omega, moved));
    } catch (const PreconditionError&) {
      throw PreconditionError("outside_chart",
                              "point outside cotangent chart at Weyl element " + word_string(w));
    }
  }
  return rec;
}

CVector record_invariants(const Arrangement& arr, const EmbeddingRecord& rec) {
  const Eigen::Index r = arr.rank;
  CVector out(2 * r + static_cast<Eigen::Index>(rec.components.size()) * r);
  out.head(r) = rec.mu_complex;
  out.segment(r, r) = rec.mu_real.cast<cplx>();
  Eigen::Index pos = 2 * r;
  for (const auto& c : rec.components) {
    for (Eigen::Index k = 0; k < r; ++k) {
      cplx mono(1.0);
      for (int i = 0; i < arr.size(); ++i) {
        const auto e = arr.normals[i](k);
        for (std::int64_t t = 0; t < std::abs(e); ++t) mono = e > 0 ? mono * c.a(i) : mono / c.a(i);
      }
      out(pos++) = mono;
    }
  }
  return out;
}

H2Point sl2_embed_quiver(const Arrangement& arr, const HypertoricPoint& p) {
  if (arr.rank != 1 || arr.size() != 1 || arr.normals[0](0) != 1)
    throw PreconditionError("arrangement_mismatch", "embedding into Q_SL(2) needs the A1 arrangement");
  check_size(arr, p);
  H2Point q;
  q.alpha << p.a(0), 0.0;
  q.beta << p.b(0), 0.0;
  return q;
}

HypertoricPoint point_with_moments(const Arrangement& arr, const CVector& xi_complex,
                                   const RVector& xi_real, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  HypertoricPoint p = HypertoricPoint::zero(arr.size());
  for (int i = 0; i < arr.size(); ++i) {
    const cplx z = rootsys::pair(arr.normals[i], xi_complex);
    const double x = rootsys::pair(arr.normals[i], xi_real);
    const double s = std::hypot(x, std::abs(z));
    const double abs_a = std::sqrt(std::max(0.0, x + s));
    const double theta = angle(rng);
    if (abs_a > 0.0) {
      p.a(i) = std::polar(abs_a, theta);
      p.b(i) = z / p.a(i);
    } else {
      p.b(i) = std::polar(std::sqrt(std::max(0.0, s - x)), theta);
    }
  }
  return p;
}

HypertoricPoint random_zero_level_point(const Arrangement& arr, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector xc(arr.rank);
  RVector xr(arr.rank);
  for (int k = 0; k < arr.rank; ++k) {
    xc(k) = cplx(g(rng), g(rng));
    xr(k) = g(rng);
  }
  return point_with_moments(arr, xc, xr, rng);
}

HypertoricPoint l_act(const KernelLattice& lat, const HypertoricPoint& p, const RVector& angles) {
  HypertoricPoint out = p;
  for (std::size_t g = 0; g < lat.basis.size(); ++g) {
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      const cplx t = std::polar(1.0, angles(g) * static_cast<double>(lat.basis[g](i)));
      out.a(i) *= t;
      out.b(i) /= t;
    }
  }
  return out;
}

}  // namespace implode::hypertoric
