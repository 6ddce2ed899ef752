// Acceptance criteria 1-11: one PASS/FAIL line each, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "implode/arrangement.hpp"
#include "implode/cli.hpp"
#include "implode/contraction.hpp"
#include "implode/hypertoric.hpp"
#include "implode/mtcat.hpp"
#include "implode/nahm.hpp"
#include "implode/parallel.hpp"
#include "implode/quiver.hpp"
#include "implode/rootsys.hpp"

using namespace implode;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Verdict {
  bool ok;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CMatrix2 diag(double a, double b) {
  CMatrix2 m = CMatrix2::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

Verdict closed_form() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (double x : {1.0, 1.2, 2.0, 5.0}) {
    for (double y : {x, 1.0 / x}) {
      // Run through the command dispatcher, as a user would.
      cli::RunConfig cfg;
      cfg.command = "contract";
      cfg.action = "flow";
      json_io::Json row0 = json_io::Json::array({json_io::complex_json(y), json_io::complex_json(0.0)});
      json_io::Json row1 = json_io::Json::array({json_io::complex_json(0.0), json_io::complex_json(1.0 / y)});
      cfg.document = json_io::Json{{"B", json_io::Json::array({row0, row1})}};
      const auto out = cli::dispatch(cfg);
      if (out.status != 0) return {false, "dispatch failed"};
      const CMatrix got = json_io::read_cmatrix(out.document["result"], "result");
      const double g = std::sqrt(std::abs(y * y - 1.0 / (y * y)));
      const CMatrix2 expect = y >= 1.0 ? diag(g, 0.0) : diag(0.0, g);
      worst = std::max(worst, (got - expect).cwiseAbs().maxCoeff());
    }
  }
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 200; ++i)
    worst = std::max(worst, contraction::su2_flow_closed_form(contraction::random_su2(rng)).cwiseAbs().maxCoeff());
  const double secs = seconds_since(t0);
  return {worst < 1e-9 && secs < 1.0, fmt("max error %.3g, %.3f s", worst, secs)};
}

Verdict numerical_flow() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = map_indices<std::pair<double, double>>(50, Exec::Parallel, [](std::size_t i) {
    auto rng = sample_rng(kSeed, i);
    const CMatrix2 b = contraction::random_sl2_with_gap(rng, 0.1);
    const auto flow = contraction::gh_flow_numeric(b);
    return std::make_pair((flow.end - contraction::su2_flow_closed_form(b)).cwiseAbs().maxCoeff(), flow.max_im_det_drift);
  });
  double err = 0.0, drift = 0.0;
  for (auto [e, d] : res) {
    err = std::max(err, e);
    drift = std::max(drift, d);
  }
  const double secs = seconds_since(t0);
  return {err < 1e-4 && drift < 1e-6 && secs < 30.0,
          fmt("max deviation %.3g, Im det drift %.3g, %.2f s", err, drift, secs)};
}

Verdict phi_separation() {
  int counter = 0, eq = 0, neq = 0;
  double minor = 0.0;
  for (std::size_t i = 0; i < 500; ++i) {
    auto rng = sample_rng(kSeed, i);
    contraction::CotangentPoint x{contraction::random_su2(rng),
                                  i % 5 == 0 ? CMatrix2::Zero().eval() : contraction::random_traceless_antihermitian(rng)};
    contraction::CotangentPoint y;
    switch (i % 4) {
      case 0: y = x; break;
      case 1: {
        const auto d = contraction::diagonalize(x.v);
        std::uniform_real_distribution<double> u(0.1, 3.0);
        const cplx ph = std::polar(1.0, u(rng));
        CMatrix2 t = CMatrix2::Zero();
        t(0, 0) = ph;
        t(1, 1) = std::conj(ph);
        y = {x.k * d.h.adjoint() * t * d.h, x.v};
        break;
      }
      case 2: y = {contraction::random_su2(rng), x.v}; break;
      default: y = {contraction::random_su2(rng), contraction::random_traceless_antihermitian(rng)};
    }
    const CMatrix2 px = contraction::phi(x), py = contraction::phi(y);
    minor = std::max({minor, std::abs(px.determinant()), std::abs(py.determinant())});
    const bool same = (px - py).cwiseAbs().maxCoeff() <= 1e-9;
    const bool e = contraction::equivalent(x, y);
    (e ? eq : neq)++;
    if (same != e) ++counter;
  }
  return {counter == 0 && minor < 1e-12,
          fmt("%.0f counterexamples (%.0f equivalent pairs), max |XW-YZ| %.3g", counter, eq, minor)};
}

Verdict quadric() {
  double minor = 0.0, tr = 0.0, sq = 0.0;
  for (std::size_t i = 0; i < 500; ++i) {
    auto rng = sample_rng(kSeed, i);
    const auto [p1, p2] = contraction::random_zero_level_pair(rng);
    const CMatrix4 m = contraction::complex_invariants(p1, p2).m;
    minor = std::max(minor, contraction::max_minor(m));
    tr = std::max(tr, std::abs(m.trace()));
    sq = std::max(sq, (m * m).norm());
  }
  return {minor < 1e-10 && tr < 1e-10 && sq < 1e-10, fmt("minors %.3g, |tr| %.3g, |M^2| %.3g", minor, tr, sq)};
}

Verdict combinatorics() {
  const auto arr = [](char f, int r) { return arrangement::from_root_system(rootsys::build_root_system(f, r)); };
  const auto a2_flats = arrangement::flats(arr('A', 2)).size();
  const auto a2_broad = arrangement::broad_subsets(arr('A', 2)).size();
  const auto b2_broad = arrangement::broad_subsets(arr('B', 2)).size();
  bool weyl = true;
  for (auto [f, r] : {std::pair{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}})
    weyl = weyl && arrangement::broad_subsets(arr(f, r)).size() ==
                       rootsys::weyl_elements(rootsys::build_root_system(f, r)).size();
  return {a2_flats == 5 && a2_broad == 6 && b2_broad == 8 && weyl,
          fmt("A2: %.0f flats, %.0f broad; B2: %.0f broad", double(a2_flats), double(a2_broad), double(b2_broad)) +
              (weyl ? "; |broad| = |W| for A1 A2 B2 G2" : "; |broad| != |W|")};
}

Verdict equivariance() {
  double worst = 0.0;
  for (auto [f, r] : {std::pair{'A', 1}, {'A', 2}}) {
    const auto rs = rootsys::build_root_system(f, r);
    const auto arr = arrangement::from_root_system(rs);
    const auto ws = rootsys::weyl_elements(rs);
    for (std::size_t i = 0; i < 100; ++i) {
      auto rng = sample_rng(kSeed, i);
      const auto p = hypertoric::random_zero_level_point(arr, rng);
      const auto m = hypertoric::t_moment(arr, p);
      for (const auto& w : ws) {
        const auto mw = hypertoric::t_moment(arr, hypertoric::weyl_act(rs, arr, w, p));
        worst = std::max(worst, (mw.xi_complex - rootsys::act(w, m.xi_complex)).cwiseAbs().maxCoeff());
        worst = std::max(worst, (mw.xi_real - rootsys::act(w, m.xi_real)).cwiseAbs().maxCoeff());
      }
    }
  }
  const auto a1 = rootsys::build_root_system('A', 1);
  const auto arr1 = arrangement::from_root_system(a1);
  const auto gamma = rootsys::weyl_elements(a1)[1];
  bool exact = true;
  for (std::size_t i = 0; i < 100; ++i) {
    auto rng = sample_rng(kSeed, i);
    const auto p = hypertoric::random_zero_level_point(arr1, rng);
    const auto q = hypertoric::weyl_act(a1, arr1, gamma, hypertoric::weyl_act(a1, arr1, gamma, p));
    exact = exact && q.a == -p.a && q.b == -p.b;
  }
  return {worst < 1e-10 && exact, fmt("max deviation %.3g", worst) + (exact ? ", gamma^2 = -1 exactly" : ", gamma^2 != -1")};
}

Verdict nilpotent() {
  double worst = 0.0;
  int accepted = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    auto rng = sample_rng(kSeed, i);
    const int n = 2 + static_cast<int>(i % 4);
    std::normal_distribution<double> g;
    const cplx s(g(rng), g(rng)), t(g(rng), g(rng));
    const auto base = (n == 3 && i % 8 == 1) ? quiver::flag_example_n3(0.0) : quiver::regular_nilpotent_rep(n, s, t);
    const auto rep = quiver::act(base, quiver::random_sl_tuple(n, 0.3, rng));
    const auto cm = quiver::complex_moment(rep);
    if (cm.residuals.maxCoeff() >= 1e-10 || cm.lambdas.cwiseAbs().maxCoeff() >= 1e-10) continue;
    ++accepted;
    const auto r = quiver::end_matrix_nilpotency(rep);
    CMatrix p = CMatrix::Identity(n, n);
    for (int k = 0; k < n; ++k) p = p * r.x;
    worst = std::max(worst, p.norm());
  }
  return {accepted == 200 && worst < 1e-8, fmt("%.0f/200 reps on the level set, max |X^n| %.3g", accepted, worst)};
}

Verdict solver() {
  const auto start = quiver::flag_example_n3(0.0);
  const auto res = quiver::descend_real_moment(start, quiver::Gauge::SU, 10000, 1e-8);
  const auto a = quiver::complex_moment(start), b = quiver::complex_moment(res.rep);
  const double drift = std::max((a.lambdas - b.lambdas).cwiseAbs().maxCoeff(), (a.residuals - b.residuals).cwiseAbs().maxCoeff());
  return {res.residual < 1e-8 && res.iterations <= 10000 && drift < 1e-9,
          fmt("residual %.3g after %.0f iterations, complex drift %.3g", res.residual, res.iterations, drift)};
}

Verdict dimensions() {
  const auto cat = mtcat::catalog(mtcat::sl(2));
  bool ok = cat[1].complex_dimension == 4 && cat[3].complex_dimension == 6;
  int bad = 0;
  for (std::size_t i = 0; i < 20; ++i) {
    auto rng = sample_rng(kSeed, i);
    std::uniform_int_distribution<int> pick_n(2, 5), pick_dim(0, 40), pick_len(1, 5), pick_step(0, 2);
    const auto g = mtcat::sl(pick_n(rng));
    const mtcat::MTMorphism m{"M", mtcat::trivial_group(), g, pick_dim(rng), {}, false, false};
    auto chain = m;
    for (int s = 0, len = pick_len(rng); s < len; ++s) {
      switch (pick_step(rng)) {
        case 0: chain = mtcat::compose(chain, mtcat::universal_contraction(g)); break;
        case 1: chain = mtcat::compose(mtcat::compose(chain, mtcat::right_implosion(g)), mtcat::left_implosion(g)); break;
        default: chain = mtcat::compose(chain, mtcat::identity(g));
      }
    }
    if (chain.complex_dimension != m.complex_dimension) ++bad;
  }
  ok = ok && bad == 0;
  return {ok, fmt("SL(2): implosion %.0f, contraction %.0f; %.0f/20 chains changed dimension",
                  cat[1].complex_dimension, cat[3].complex_dimension, bad)};
}

Verdict nahm_integration() {
  const auto e = nahm::su2_basis();
  const nahm::Quadruple start{CMatrix::Zero(2, 2), -e[0], -e[1], -e[2]};
  const auto d200 = nahm::integrate(start, 1.0, 2.0, 200);
  const double err = nahm::max_difference(d200, nahm::exact_pole_solution(d200.grid));
  const double r100 = nahm::residual(nahm::integrate(start, 1.0, 2.0, 100));
  const double r200 = nahm::residual(d200);
  const double ratio = r100 / r200;
  double scale = 0.0;
  for (double c : {0.5, 0.8, 1.5, 2.0})
    scale = std::max(scale, nahm::residual(nahm::symmetry_transform(d200, {nahm::SymmetryKind::Scale, c})) / (2.0 * c * c * r200));
  return {err < 1e-6 && ratio >= 8.0 && scale <= 1.0,
          fmt("max error %.3g, halving ratio %.2f, scaled/(2c^2 eps) <= %.3f", err, ratio, scale)};
}

Verdict psi() {
  double worst = 0.0;
  for (std::size_t i = 0; i < 50; ++i) {
    auto rng = sample_rng(kSeed, i);
    const CMatrix2 g = contraction::random_sl2(rng);
    std::normal_distribution<double> nd;
    CMatrix2 v;
    Eigen::Vector2cd line;
    if (i % 5 == 4) {
      const CMatrix2 c = contraction::random_sl2(rng);
      CMatrix2 n = CMatrix2::Zero();
      n(0, 1) = 1.0;
      v = c * n * c.inverse();
      line = c.col(0);
    } else {
      CMatrix2 a;
      a << cplx(nd(rng), nd(rng)), cplx(nd(rng), nd(rng)), cplx(nd(rng), nd(rng)), cplx(nd(rng), nd(rng));
      v = linalg::traceless_part(a);
      line = Eigen::ComplexEigenSolver<CMatrix2>(v).eigenvectors().col(0);
    }
    const auto base = contraction::psi_sl2(g, v, line);
    const double s = std::max(1.0, base.invariants.m.cwiseAbs().maxCoeff());
    for (int k = 0; k < 100; ++k) {
      const auto other = contraction::psi_sl2_with(g, v, contraction::random_borel(rng) * base.h);
      worst = std::max(worst, (other.invariants.m - base.invariants.m).cwiseAbs().maxCoeff() / s);
    }
  }
  return {worst < 1e-9, fmt("max relative change %.3g over 5000 reambiguations", worst)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"closed-form contraction", closed_form},
      {"numerical vs closed-form flow", numerical_flow},
      {"phi separation", phi_separation},
      {"quadric and minimal orbit", quadric},
      {"Weyl arrangement combinatorics", combinatorics},
      {"moment map equivariance", equivariance},
      {"nilpotent cone", nilpotent},
      {"real moment solver", solver},
      {"dimension arithmetic", dimensions},
      {"Nahm integration", nahm_integration},
      {"well-definedness of Psi", psi},
  };
  int failures = 0, k = 0;
  for (const auto& [name, fn] : criteria) {
    ++k;
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    if (!v.ok) ++failures;
    std::printf("%s %2d %s: %s\n", v.ok ? "PASS" : "FAIL", k, name, v.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", k - failures, k);
  return failures ? 1 : 0;
}
