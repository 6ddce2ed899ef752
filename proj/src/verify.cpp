#include "implode/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include "implode/arrangement.hpp"
#include "implode/contraction.hpp"
#include "implode/error.hpp"
#include "implode/hypertoric.hpp"
#include "implode/mtcat.hpp"
#include "implode/nahm.hpp"
#include "implode/quiver.hpp"
#include "implode/rootsys.hpp"

namespace implode::verify {

namespace {

constexpr double kFail = std::numeric_limits<double>::infinity();

using SampleFn = std::function<double(std::mt19937_64&, std::size_t)>;

// Evaluates fn on `samples` independent seeded streams and keeps the largest
// deviation. A thrown error counts as a failed sample.
PropertyResult sampled(std::string name, std::size_t samples, std::uint64_t seed, Exec exec,
                       double threshold, const SampleFn& fn) {
  const auto devs = map_indices<double>(samples, exec, [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    try {
      return fn(rng, i);
    } catch (const std::exception&) {
      return kFail;
    }
  });
  PropertyResult r;
  r.name = std::move(name);
  r.samples = samples;
  r.threshold = threshold;
  r.max_deviation = 0.0;
  std::size_t failures = 0;
  for (double d : devs) {
    if (!(d <= threshold)) ++failures;
    if (std::isnan(d)) r.max_deviation = kFail;
    else r.max_deviation = std::max(r.max_deviation, d);
  }
  r.passed = failures == 0;
  if (failures) r.detail = std::to_string(failures) + " failing samples";
  return r;
}

PropertyResult exact(std::string name, double deviation, double threshold, std::string detail = {}) {
  PropertyResult r;
  r.name = std::move(name);
  r.samples = 1;
  r.threshold = threshold;
  r.max_deviation = deviation;
  r.passed = deviation <= threshold;
  r.detail = std::move(detail);
  return r;
}

double flag(bool ok) { return ok ? 0.0 : kFail; }

double point_distance(const hypertoric::HypertoricPoint& p, const hypertoric::HypertoricPoint& q) {
  return std::max((p.a - q.a).cwiseAbs().maxCoeff(), (p.b - q.b).cwiseAbs().maxCoeff());
}

struct WeylCase {
  char family;
  int rank;
};

const std::vector<WeylCase> kWeylCases = {{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}};

// --- root systems -----------------------------------------------------------

SuiteReport suite_rootsys(std::uint64_t seed, Exec) {
  SuiteReport rep{"rootsys", seed, {}};
  const std::map<std::string, int> orders = {{"A1", 2}, {"A2", 6}, {"A3", 24}, {"A4", 120},
                                             {"B2", 8}, {"C2", 8}, {"G2", 12}};
  for (const auto& [name, order] : orders) {
    const auto rs = rootsys::build_root_system(name[0], name[1] - '0');
    const auto ws = rootsys::weyl_elements(rs);
    rep.properties.push_back(exact("weyl-order-" + name, std::abs(double(ws.size()) - order), 0.0));
    double cocycle = 0.0;
    for (const auto& w1 : ws) {
      for (const auto& w2 : ws) {
        const auto w12 = rootsys::compose(rs, w1, w2);
        for (int i = 0; i < rs.num_positive(); ++i) {
          const int via = w2.sigma[i];
          if (w12.sigma[i] != w1.sigma[via] || w12.signs[i] != w1.signs[via] * w2.signs[i]) cocycle = kFail;
        }
      }
      for (int i = 0; i < rs.num_positive(); ++i) {
        const IntVector lhs = w1.matrix * rs.positive_roots[i];
        const IntVector rhs = w1.signs[i] * rs.positive_roots[w1.sigma[i]];
        if (lhs != rhs) cocycle = kFail;
      }
      if ((w1.matrix.transpose() * rs.gram * w1.matrix - rs.gram).cwiseAbs().maxCoeff() != 0) cocycle = kFail;
    }
    rep.properties.push_back(exact("cocycle-" + name, cocycle, 0.0));
  }
  return rep;
}

// --- arrangements ---------------------------------------------------------

SuiteReport suite_arrangement(std::uint64_t seed, Exec exec) {
  SuiteReport rep{"arrangement", seed, {}};
  for (const auto& c : kWeylCases) {
    const auto rs = rootsys::build_root_system(c.family, c.rank);
    const auto arr = arrangement::from_root_system(rs);
    const auto broad = arrangement::broad_subsets(arr, exec);
    const auto order = rootsys::weyl_elements(rs).size();
    rep.properties.push_back(exact("broad-equals-weyl-order-" + rs.name(),
                                   std::abs(double(broad.size()) - double(order)), 0.0));
    bool complement = true;
    for (const auto& v : broad) {
      std::vector<int> rest;
      for (int i = 0; i < arr.size(); ++i)
        if (!std::binary_search(v.indices.begin(), v.indices.end(), i)) rest.push_back(i);
      complement = complement && arrangement::is_broad(arr, rest);
    }
    rep.properties.push_back(exact("broad-complement-" + rs.name(), flag(complement), 0.0));
    const auto fl = arrangement::flats(arr, exec);
    bool joins = true;
    for (const auto& f1 : fl)
      for (const auto& f2 : fl) {
        std::vector<int> u = f1.indices;
        u.insert(u.end(), f2.indices.begin(), f2.indices.end());
        const auto j = arrangement::closure(arr, u);
        joins = joins && std::find(fl.begin(), fl.end(), j) != fl.end();
      }
    rep.properties.push_back(exact("flat-joins-" + rs.name(), flag(joins), 0.0));
  }
  const auto a2 = arrangement::from_root_system(rootsys::build_root_system('A', 2));
  rep.properties.push_back(exact("a2-flat-count", std::abs(double(arrangement::flats(a2, exec).size()) - 5.0), 0.0));
  return rep;
}

// --- hypertoric -----------------------------------------------------------

SuiteReport suite_weyl_equivariance(std::uint64_t seed, Exec exec) {
  SuiteReport rep{"weyl-equivariance", seed, {}};
  for (const auto& c : kWeylCases) {
    const auto rs = rootsys::build_root_system(c.family, c.rank);
    const auto arr = arrangement::from_root_system(rs);
    const auto ws = rootsys::weyl_elements(rs);
    rep.properties.push_back(sampled("moment-equivariance-" + rs.name(), 100, seed, exec, 1e-10,
                                     [&](std::mt19937_64& rng, std::size_t) {
      const auto p = hypertoric::random_zero_level_point(arr, rng);
      const auto m = hypertoric::t_moment(arr, p);
      double dev = 0.0;
      for (const auto& w : ws) {
        const auto q = hypertoric::weyl_act(rs, arr, w, p);
        const auto mq = hypertoric::t_moment(arr, q);
        dev = std::max(dev, (mq.xi_complex - rootsys::act(w, m.xi_complex)).cwiseAbs().maxCoeff());
        dev = std::max(dev, (mq.xi_real - rootsys::act(w, m.xi_real)).cwiseAbs().maxCoeff());
      }
      return dev;
    }));
    rep.properties.push_back(sampled("l-level-preserved-" + rs.name(), 100, seed + 1, exec, 1e-9,
                                     [&](std::mt19937_64& rng, std::size_t) {
      const auto p = hypertoric::random_zero_level_point(arr, rng);
      double dev = 0.0;
      for (const auto& w : ws) {
        const auto r = hypertoric::l_moment_residuals(arr, hypertoric::weyl_act(rs, arr, w, p));
        if (r.complex.size()) dev = std::max({dev, r.complex.cwiseAbs().maxCoeff(), r.real.cwiseAbs().maxCoeff()});
      }
      return dev;
    }));
  }
  const auto a1 = rootsys::build_root_system('A', 1);
  const auto arr1 = arrangement::from_root_system(a1);
  const auto gamma = rootsys::weyl_elements(a1).at(1);
  rep.properties.push_back(sampled("gamma-squared-is-minus-one", 100, seed + 2, exec, 0.0,
                                   [&](std::mt19937_64& rng, std::size_t) {
    const auto p = hypertoric::random_zero_level_point(arr1, rng);
    const auto q = hypertoric::weyl_act(a1, arr1, gamma, hypertoric::weyl_act(a1, arr1, gamma, p));
    return point_distance(q, {-p.a, -p.b});
  }));
  return rep;
}

SuiteReport suite_core(std::uint64_t seed, Exec exec) {
  SuiteReport rep{"extended-core", seed, {}};
  for (const auto& c : kWeylCases) {
    const auto rs = rootsys::build_root_system(c.family, c.rank);
    const auto arr = arrangement::from_root_system(rs);
    const auto broad = arrangement::broad_subsets(arr, Exec::Serial);
    rep.properties.push_back(sampled("projection-idempotent-" + rs.name(), 100, seed, exec, 0.0,
                                     [&](std::mt19937_64& rng, std::size_t i) {
      const auto& v = broad[i % broad.size()];
      const auto p = hypertoric::random_zero_level_point(arr, rng);
      const auto once = hypertoric::core_projection(arr, v, p);
      return point_distance(once, hypertoric::core_projection(arr, v, once));
    }));
    rep.properties.push_back(sampled("real-moment-in-cone-" + rs.name(), 100, seed + 1, exec, 1e-10,
                                     [&](std::mt19937_64& rng, std::size_t i) {
      const auto& v = broad[i % broad.size()];
      RVector x;
      arrangement::is_broad(arr, v.indices, &x);
      std::uniform_real_distribution<double> u(0.1, 2.0);
      const RVector xi = u(rng) * x;
      auto p = hypertoric::point_with_moments(arr, CVector::Zero(arr.rank), xi, rng);
      p = hypertoric::core_projection(arr, v, p);
      const auto m = hypertoric::t_moment(arr, p);
      double worst = 0.0;
      for (int k = 0; k < arr.size(); ++k) {
        const double val = rootsys::pair(arr.normals[k], m.xi_real);
        const bool in = std::binary_search(v.indices.begin(), v.indices.end(), k);
        worst = std::max(worst, in ? -val : val);
      }
      return std::max(0.0, worst);
    }));
    const auto lat = hypertoric::kernel_lattice(arr);
    rep.properties.push_back(sampled("components-separate-points-" + rs.name(), 100, seed + 2, exec, 0.0,
                                     [&](std::mt19937_64& rng, std::size_t) {
      const auto p = hypertoric::random_zero_level_point(arr, rng);
      const auto q = hypertoric::random_zero_level_point(arr, rng);
      std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
      RVector angles(lat.basis.size());
      for (Eigen::Index g = 0; g < angles.size(); ++g) angles(g) = ang(rng);
      const auto p_moved = hypertoric::l_act(lat, p, angles);
      const CVector ip = hypertoric::record_invariants(arr, hypertoric::universal_components(rs, arr, p));
      const CVector im = hypertoric::record_invariants(arr, hypertoric::universal_components(rs, arr, p_moved));
      const CVector iq = hypertoric::record_invariants(arr, hypertoric::universal_components(rs, arr, q));
      const double scale = std::max(1.0, ip.cwiseAbs().maxCoeff());
      const bool same_ok = (ip - im).cwiseAbs().maxCoeff() <= 1e-9 * scale;
      const bool differ_ok = (ip - iq).cwiseAbs().maxCoeff() > 1e-6 * scale;
      return flag(same_ok && differ_ok);
    }));
  }
  return rep;
}

// --- quiver ---------------------------------------------------------------

quiver::QuiverRep handcrafted_rep(std::mt19937_64& rng, std::size_t i) {
  const int n = 2 + static_cast<int>(i % 4);
  std::normal_distribution<double> g;
  if (n == 3 && i % 8 == 1) return quiver::flag_example_n3(0.0);
  const cplx s(g(rng), g(rng));
  const cplx t(g(rng), g(rng));
  return quiver::regular_nilpotent_rep(n, s, t);
}

SuiteReport suite_nilpotent(std::uint64_t seed, Exec exec) {
  SuiteReport rep{"nilpotent-cone", seed, {}};
  rep.properties.push_back(sampled("end-matrix-nilpotent", 200, seed, exec, 1e-8,
                                   [](std::mt19937_64& rng, std::size_t i) {
    const auto base = handcrafted_rep(rng, i);
    const auto moved = quiver::act(base, quiver::random_sl_tuple(base.n, 0.3, rng));
    const auto cm = quiver::complex_moment(moved);
    if (cm.residuals.maxCoeff() >= 1e-10 || cm.lambdas.cwiseAbs().maxCoeff() >= 1e-10) return kFail;
    const auto nil = quiver::end_matrix_nilpotency(moved);
    return nil.nilpotent ? nil.power_norm : kFail;
  }));
  rep.properties.push_back(sampled("unitary-preserves-real-moment", 100, seed + 1, exec, 1e-10,
                                   [](std::mt19937_64& rng, std::size_t i) {
    const int n = 2 + static_cast<int>(i % 4);
    quiver::QuiverRep r = quiver::QuiverRep::zero(n);
    std::normal_distribution<double> g;
    for (auto& m : r.alphas) m = CMatrix::NullaryExpr(m.rows(), m.cols(), [&] { return cplx(g(rng), g(rng)); });
    for (auto& m : r.betas) m = CMatrix::NullaryExpr(m.rows(), m.cols(), [&] { return cplx(g(rng), g(rng)); });
    const auto moved = quiver::act(r, quiver::random_unitary_tuple(n, rng));
    const auto a = quiver::real_moment(r, quiver::Gauge::U);
    const auto b = quiver::real_moment(moved, quiver::Gauge::U);
    double dev = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) dev = std::max(dev, std::abs(a[k].residual - b[k].residual));
    return dev;
  }));
  rep.properties.push_back(sampled("special-linear-preserves-lambda", 100, seed + 2, exec, 1e-9,
                                   [](std::mt19937_64& rng, std::size_t i) {
    const int n = 2 + static_cast<int>(i % 4);
    quiver::QuiverRep r = quiver::QuiverRep::zero(n);
    std::normal_distribution<double> g;
    for (auto& m : r.alphas) m = CMatrix::NullaryExpr(m.rows(), m.cols(), [&] { return cplx(g(rng), g(rng)); });
    for (auto& m : r.betas) m = CMatrix::NullaryExpr(m.rows(), m.cols(), [&] { return cplx(g(rng), g(rng)); });
    const auto before = quiver::complex_moment(r);
    const auto after = quiver::complex_moment(quiver::act(r, quiver::random_sl_tuple(n, 0.3, rng)));
    return (before.lambdas - after.lambdas).cwiseAbs().maxCoeff();
  }));
  rep.properties.push_back(sampled("gamma-involution-and-moments", 100, seed + 3, exec, 1e-12,
                                   [](std::mt19937_64& rng, std::size_t) {
    const H2Point p = contraction::random_h2(rng);
    const H2Point q = quiver::sl2_gamma(p);
    const H2Point back = quiver::sl2_gamma(q);
    double dev = std::max((back.alpha - p.alpha).norm(), (back.beta - p.beta).norm());
    dev = std::max(dev, std::abs((q.beta * q.alpha)(0) + (p.beta * p.alpha)(0)));
    const CMatrix t0 = linalg::traceless_part(p.alpha * p.beta);
    const CMatrix t1 = linalg::traceless_part(q.alpha * q.beta);
    return std::max(dev, (t0 - t1).norm());
  }));
  return rep;
}

SuiteReport suite_real_moment(std::uint64_t seed, Exec) {
  SuiteReport rep{"real-moment-solver", seed, {}};
  const auto start = quiver::flag_example_n3(0.0);
  const auto res = quiver::descend_real_moment(start, quiver::Gauge::SU, 10000, 1e-8);
  rep.properties.push_back(exact("n3-example-converges", res.residual, 1e-8,
                                 std::to_string(res.iterations) + " iterations"));
  const auto before = quiver::complex_moment(start);
  const auto after = quiver::complex_moment(res.rep);
  const double drift = std::max((before.lambdas - after.lambdas).cwiseAbs().maxCoeff(),
                                (before.residuals - after.residuals).cwiseAbs().maxCoeff());
  rep.properties.push_back(exact("n3-example-complex-preserved", drift, 1e-9));
  bool monotone = true;
  double prev = quiver::real_objective(start, quiver::Gauge::SU);
  for (double f : res.objective) {
    monotone = monotone && f <= prev;
    prev = f;
  }
  rep.properties.push_back(exact("objective-non-increasing", flag(monotone), 0.0));
  return rep;
}

// --- contraction ----------------------------------------------------------

SuiteReport suite_flow(std::uint64_t seed, Exec exec) {
  SuiteReport rep{"contraction-flow", seed, {}};
  double diag_dev = 0.0;
  for (double x : {1.0, 1.2, 2.0, 5.0, 1.0 / 1.2, 0.5, 0.2}) {
    CMatrix2 b = CMatrix2::Zero();
    b(0, 0) = x;
    b(1, 1) = 1.0 / x;
    CMatrix2 expect = CMatrix2::Zero();
    if (x >= 1.0) expect(0, 0) = std::sqrt(x * x - 1.0 / (x * x));
    else expect(1, 1) = std::sqrt(1.0 / (x * x) - x * x);
    diag_dev = std::max(diag_dev, (contraction::su2_flow_closed_form(b) - expect).cwiseAbs().maxCoeff());
  }
  rep.properties.push_back(exact("closed-form-diagonal", diag_dev, 1e-9));
  rep.properties.push_back(sampled("su2-collapses", 100, seed, exec, 1e-9, [](std::mt19937_64& rng, std::size_t) {
    return contraction::su2_flow_closed_form(contraction::random_su2(rng)).cwiseAbs().maxCoeff();
  }));
  rep.properties.push_back(sampled("closed-form-equivariant", 100, seed + 1, exec, 1e-8,
                                   [](std::mt19937_64& rng, std::size_t) {
    const CMatrix2 b = contraction::random_sl2(rng);
    const CMatrix2 k1 = contraction::random_su2(rng);
    const CMatrix2 k2 = contraction::random_su2(rng);
    const CMatrix2 lhs = contraction::su2_flow_closed_form(k1 * b * k2);
    const CMatrix2 rhs = k1 * contraction::su2_flow_closed_form(b) * k2;
    return (lhs - rhs).cwiseAbs().maxCoeff();
  }));
  rep.properties.push_back(sampled("closed-form-singular", 100, seed + 2, exec, 1e-9,
                                   [](std::mt19937_64& rng, std::size_t) {
    return std::abs(contraction::su2_flow_closed_form(contraction::random_sl2(rng)).determinant());
  }));
  rep.properties.push_back(sampled("numeric-matches-closed-form", 50, seed + 3, exec, 1e-4,
                                   [](std::mt19937_64& rng, std::size_t) {
    const CMatrix2 b = contraction::random_sl2_with_gap(rng, 0.1);
    const auto flow = contraction::gh_flow_numeric(b);
    if (flow.max_im_det_drift >= 1e-6) return kFail;
    return (flow.end - contraction::su2_flow_closed_form(b)).cwiseAbs().maxCoeff();
  }));
  return rep;
}

contraction::CotangentPoint random_cotangent(std::mt19937_64& rng, int kind) {
  contraction::CotangentPoint x;
  x.k = contraction::random_su2(rng);
  x.v = kind == 0 ? CMatrix2::Zero() : contraction::random_traceless_antihermitian(rng);
  return x;
}

SuiteReport suite_phi(std::uint64_t seed, Exec exec) {
  SuiteReport rep{"phi-separation", seed, {}};
  rep.properties.push_back(sampled("phi-equal-iff-equivalent", 500, seed, exec, 0.0,
                                   [](std::mt19937_64& rng, std::size_t i) {
    contraction::CotangentPoint x = random_cotangent(rng, i % 5 == 0 ? 0 : 1);
    contraction::CotangentPoint y;
    switch (i % 4) {
      case 0:
        y = x;
        break;
      case 1: {  // same v, k moved along the torus of v
        const auto d = contraction::diagonalize(x.v);
        std::uniform_real_distribution<double> u(0.1, 3.0);
        const cplx ph = std::polar(1.0, u(rng));
        CMatrix2 t = CMatrix2::Zero();
        t(0, 0) = ph;
        t(1, 1) = std::conj(ph);
        y.v = x.v;
        y.k = x.k * d.h.adjoint() * t * d.h;
        break;
      }
      case 2:  // same v, unrelated k
        y.v = x.v;
        y.k = contraction::random_su2(rng);
        break;
      default:
        y = random_cotangent(rng, 1);
    }
    const double dm = (contraction::phi(x) - contraction::phi(y)).cwiseAbs().maxCoeff();
    const bool same_image = dm <= 1e-9;
    return flag(same_image == contraction::equivalent(x, y));
  }));
  rep.properties.push_back(sampled("phi-rank-one", 500, seed + 1, exec, 1e-12,
                                   [](std::mt19937_64& rng, std::size_t i) {
    return contraction::max_minor(contraction::phi(random_cotangent(rng, i % 7 == 0 ? 0 : 1)));
  }));
  return rep;
}

SuiteReport suite_quadric(std::uint64_t seed, Exec exec) {
  SuiteReport rep{"quadric", seed, {}};
  rep.properties.push_back(sampled("minimal-orbit", 500, seed, exec, 1e-10, [](std::mt19937_64& rng, std::size_t) {
    const auto [p1, p2] = contraction::random_zero_level_pair(rng);
    const auto inv = contraction::complex_invariants(p1, p2);
    return std::max({contraction::max_minor(inv.m), std::abs(inv.m.trace()), (inv.m * inv.m).cwiseAbs().maxCoeff()});
  }));
  rep.properties.push_back(sampled("swann-involution", 100, seed + 1, exec, 1e-12, [](std::mt19937_64& rng, std::size_t) {
    const auto [p1, p2] = contraction::random_zero_level_pair(rng);
    const CMatrix4 m = contraction::complex_invariants(p1, p2).m;
    const CMatrix4 s = contraction::swann_weyl(m);
    return std::max((contraction::swann_weyl(s) - m).cwiseAbs().maxCoeff(), std::abs(s.trace() + m.trace()));
  }));
  rep.properties.push_back(sampled("real-inside-complex", 100, seed + 2, exec, 1e-12, [](std::mt19937_64& rng, std::size_t) {
    H2Point p1 = contraction::random_h2(rng), p2 = contraction::random_h2(rng);
    p1.alpha.setZero();
    p2.alpha.setZero();
    const CMatrix4 m = contraction::complex_invariants(p1, p2).m;
    CMatrix4 outside = m;
    outside.bottomLeftCorner<2, 2>().setZero();
    const CMatrix2 block = m.bottomLeftCorner<2, 2>();
    return std::max(outside.cwiseAbs().maxCoeff(), std::abs(block.determinant()));
  }));
  return rep;
}

SuiteReport suite_psi(std::uint64_t seed, Exec exec) {
  SuiteReport rep{"psi-well-defined", seed, {}};
  rep.properties.push_back(sampled("borel-reambiguation", 50, seed, exec, 1e-9, [](std::mt19937_64& rng, std::size_t i) {
    const CMatrix2 g = contraction::random_sl2(rng);
    CMatrix2 v;
    Eigen::Vector2cd line;
    if (i % 5 == 4) {  // nilpotent v, line = its kernel
      const CMatrix2 c = contraction::random_sl2(rng);
      CMatrix2 e = CMatrix2::Zero();
      e(0, 1) = 1.0;
      v = c * e * c.inverse();
      line = c.col(0);
    } else {
      std::normal_distribution<double> nd;
      CMatrix2 a;
      a << cplx(nd(rng), nd(rng)), cplx(nd(rng), nd(rng)), cplx(nd(rng), nd(rng)), cplx(nd(rng), nd(rng));
      v = linalg::traceless_part(a);
      Eigen::ComplexEigenSolver<CMatrix2> es(v);
      line = es.eigenvectors().col(0);
    }
    const auto base = contraction::psi_sl2(g, v, line);
    const double scale = std::max(1.0, base.invariants.m.cwiseAbs().maxCoeff());
    double dev = 0.0;
    for (int k = 0; k < 100; ++k) {
      const auto other = contraction::psi_sl2_with(g, v, contraction::random_borel(rng) * base.h);
      dev = std::max(dev, (other.invariants.m - base.invariants.m).cwiseAbs().maxCoeff() / scale);
    }
    return dev;
  }));
  return rep;
}

// --- Moore-Tachikawa ------------------------------------------------------

SuiteReport suite_mt(std::uint64_t seed, Exec exec) {
  SuiteReport rep{"mt-dimension", seed, {}};
  const auto sl2 = mtcat::sl(2);
  const auto cat = mtcat::catalog(sl2);
  rep.properties.push_back(exact("sl2-implosion-dim", std::abs(cat[1].complex_dimension - 4.0), 0.0));
  rep.properties.push_back(exact("sl2-contraction-dim", std::abs(cat[3].complex_dimension - 6.0), 0.0));
  rep.properties.push_back(sampled("contraction-preserves-dimension", 20, seed, exec, 0.0,
                                   [](std::mt19937_64& rng, std::size_t) {
    std::uniform_int_distribution<int> pick_n(2, 5), pick_dim(0, 40), pick_len(1, 5), pick_step(0, 2);
    const auto g = mtcat::sl(pick_n(rng));
    mtcat::MTMorphism m{"M", mtcat::trivial_group(), g, pick_dim(rng), {}, false, false};
    mtcat::MTMorphism chain = m;
    const int len = pick_len(rng);
    for (int s = 0; s < len; ++s) {
      switch (pick_step(rng)) {
        case 0:
          chain = mtcat::compose(chain, mtcat::universal_contraction(g));
          break;
        case 1:
          chain = mtcat::compose(mtcat::compose(chain, mtcat::right_implosion(g)), mtcat::left_implosion(g));
          break;
        default:
          chain = mtcat::compose(chain, mtcat::identity(g));
      }
    }
    return std::abs(double(chain.complex_dimension - m.complex_dimension));
  }));
  return rep;
}

// --- Nahm -----------------------------------------------------------------

SuiteReport suite_nahm(std::uint64_t seed, Exec) {
  SuiteReport rep{"nahm", seed, {}};
  const auto e = nahm::su2_basis();
  const nahm::Quadruple start{CMatrix::Zero(2, 2), -e[0], -e[1], -e[2]};
  const auto run200 = nahm::integrate(start, 1.0, 2.0, 200);
  const auto exact_sol = nahm::exact_pole_solution(run200.grid);
  rep.properties.push_back(exact("exact-solution-error", nahm::max_difference(run200, exact_sol), 1e-6));
  const double r100 = nahm::residual(nahm::integrate(start, 1.0, 2.0, 100));
  const double r200 = nahm::residual(run200);
  rep.properties.push_back(exact("step-halving-reduction", r100 > 0 ? 8.0 * r200 / r100 : 0.0, 1.0,
                                 "ratio " + std::to_string(r100 / r200)));
  rep.properties.push_back(exact("anti-hermitian-preserved", nahm::anti_hermitian_defect(run200), 1e-8));
  const double eps = nahm::residual(run200);
  double scale_dev = 0.0;
  for (double c : {0.5, 0.8, 1.0, 1.5}) {
    const double r = nahm::residual(nahm::symmetry_transform(run200, {nahm::SymmetryKind::Scale, c}));
    scale_dev = std::max(scale_dev, r / (2.0 * c * c * std::max(eps, 1e-300)));
  }
  rep.properties.push_back(exact("scaling-symmetry", scale_dev, 1.0));
  const auto twice = nahm::symmetry_transform(nahm::symmetry_transform(run200, {nahm::SymmetryKind::Reflect, 1.0}),
                                              {nahm::SymmetryKind::Reflect, 1.0});
  rep.properties.push_back(exact("reflection-involution", nahm::max_difference(twice, run200), 0.0));
  return rep;
}

using SuiteFn = SuiteReport (*)(std::uint64_t, Exec);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"rootsys", suite_rootsys},
      {"arrangement", suite_arrangement},
      {"weyl-equivariance", suite_weyl_equivariance},
      {"extended-core", suite_core},
      {"nilpotent-cone", suite_nilpotent},
      {"real-moment-solver", suite_real_moment},
      {"contraction-flow", suite_flow},
      {"phi-separation", suite_phi},
      {"quadric", suite_quadric},
      {"psi-well-defined", suite_psi},
      {"mt-dimension", suite_mt},
      {"nahm", suite_nahm},
  };
  return r;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed; });
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

std::vector<SuiteReport> run(const std::string& suite, std::uint64_t seed, Exec exec) {
  std::vector<SuiteReport> out;
  for (const auto& [name, fn] : registry())
    if (suite == "all" || suite == name) out.push_back(fn(seed, exec));
  if (out.empty()) throw PreconditionError("unknown_suite", "unknown suite: " + suite);
  return out;
}

}  // namespace implode::verify
