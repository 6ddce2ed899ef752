#include "implode/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "implode/error.hpp"

namespace implode::cli {

using json_io::Json;
using namespace json_io;

namespace {

struct Context {
  const RunConfig& cfg;
  Json in;
  double tol(double fallback) const { return cfg.tol.value_or(fallback); }
};

Json load_input(const RunConfig& cfg) {
  if (cfg.document) return *cfg.document;
  if (cfg.input) {
    std::ifstream f(*cfg.input);
    if (!f) throw PreconditionError("input_unreadable", "cannot read input file " + *cfg.input);
    try {
      return Json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
      throw SchemaError("invalid_json", std::string("input is not valid JSON: ") + e.what());
    }
  }
  Json j = Json::object();
  if (cfg.family) j["family"] = *cfg.family;
  if (cfg.rank) j["rank"] = *cfg.rank;
  return j;
}

// --- rootsys --------------------------------------------------------------

Json rootsys_build(Context& c) { return root_system_json(read_root_system(c.in, "$")); }

Json rootsys_weyl(Context& c) {
  const auto rs = read_root_system(c.in, "$");
  Json els = Json::array();
  for (const auto& w : rootsys::weyl_elements(rs)) els.push_back(weyl_element_json(w));
  return Json{{"root_system", rs.name()}, {"order", els.size()}, {"elements", els}};
}

Json rootsys_chamber(Context& c) {
  const auto rs = read_root_system(c.in, "$");
  const RVector xi = read_rvector(field(c.in, "xi", "$"), "$.xi");
  const bool closed = has(c.in, "closed") ? read_bool(c.in["closed"], "$.closed") : true;
  const bool in = rootsys::chamber_membership(rs, std::span<const double>(xi.data(), xi.size()), closed,
                                              c.tol(rootsys::kChamberTol));
  return Json{{"root_system", rs.name()}, {"closed", closed}, {"member", in}};
}

// --- arrangement ----------------------------------------------------------

Exec exec_of(const Context& c) { return c.cfg.serial ? Exec::Serial : Exec::Parallel; }

Json arrangement_flats(Context& c) {
  const auto arr = read_arrangement(c.in, "$");
  Json out = Json::array();
  for (const auto& f : arrangement::flats(arr, exec_of(c))) out.push_back(flat_json(f));
  return Json{{"arrangement", arrangement_json(arr)}, {"count", out.size()}, {"flats", out}};
}

Json arrangement_broad(Context& c) {
  const auto arr = read_arrangement(c.in, "$");
  Json out = Json::array();
  for (const auto& v : arrangement::broad_subsets(arr, exec_of(c))) out.push_back(broad_json(v));
  return Json{{"arrangement", arrangement_json(arr)}, {"count", out.size()}, {"broad_subsets", out}};
}

Json arrangement_stratum(Context& c) {
  const auto arr = read_arrangement(c.in, "$");
  const auto p = read_point(field(c.in, "point", "$"), arr.size(), "$.point");
  return stratum_json(arrangement::stratum_of(arr, p, c.tol(arrangement::kPairZeroTol)));
}

Json arrangement_restrict(Context& c) {
  const auto arr = read_arrangement(c.in, "$");
  arrangement::Flat f;
  f.indices = read_index_list(field(c.in, "flat", "$"), "$.flat");
  for (int i : f.indices)
    if (i >= arr.size()) throw PreconditionError("not_a_flat", "flat index out of range");
  std::sort(f.indices.begin(), f.indices.end());
  f.subspace_dim = arrangement::closure(arr, f.indices).subspace_dim;
  const auto [restriction, localization] = arrangement::restriction_localization(arr, f);
  return Json{{"restriction", arrangement_json(restriction)}, {"localization", arrangement_json(localization)}};
}

// --- hypertoric -----------------------------------------------------------

Json hypertoric_lattice(Context& c) {
  const auto arr = read_arrangement(c.in, "$");
  Json basis = Json::array();
  for (const auto& l : hypertoric::kernel_lattice(arr).basis) basis.push_back(vector_json(l));
  return Json{{"rank", basis.size()}, {"basis", basis}};
}

Json hypertoric_residuals(Context& c) {
  const auto arr = read_arrangement(c.in, "$");
  const auto p = read_point(field(c.in, "point", "$"), arr.size(), "$.point");
  const auto r = hypertoric::l_moment_residuals(arr, p);
  return Json{{"complex", vector_json(r.complex)}, {"real", vector_json(r.real)}};
}

Json hypertoric_tmoment(Context& c) {
  const auto arr = read_arrangement(c.in, "$");
  const auto p = read_point(field(c.in, "point", "$"), arr.size(), "$.point");
  const auto m = hypertoric::t_moment(arr, p, c.tol(hypertoric::kConsistencyTol));
  return Json{{"xi_complex", vector_json(m.xi_complex)}, {"xi_real", vector_json(m.xi_real)}};
}

Json hypertoric_weylact(Context& c) {
  const auto rs = read_root_system(c.in, "$");
  const auto arr = arrangement::from_root_system(rs);
  const auto p = read_point(field(c.in, "point", "$"), arr.size(), "$.point");
  const auto w = read_weyl_word(rs, c.in, "$");
  return Json{{"element", weyl_element_json(w)}, {"point", point_json(hypertoric::weyl_act(rs, arr, w, p))}};
}

Json hypertoric_project(Context& c) {
  const auto arr = read_arrangement(c.in, "$");
  const auto p = read_point(field(c.in, "point", "$"), arr.size(), "$.point");
  arrangement::BroadSet v{read_index_list(field(c.in, "broad", "$"), "$.broad")};
  std::sort(v.indices.begin(), v.indices.end());
  if (!arrangement::is_broad(arr, v.indices)) throw PreconditionError("not_broad", "subset is not broad");
  return Json{{"point", point_json(hypertoric::core_projection(arr, v, p, c.tol(hypertoric::kChartTol)))}};
}

Json hypertoric_components(Context& c) {
  const auto rs = read_root_system(c.in, "$");
  const auto arr = arrangement::from_root_system(rs);
  const auto p = read_point(field(c.in, "point", "$"), arr.size(), "$.point");
  const auto rec = hypertoric::universal_components(rs, arr, p);
  const auto ws = rootsys::weyl_elements(rs);
  Json comps = Json::array();
  for (std::size_t i = 0; i < rec.components.size(); ++i) {
    Json word = Json::array();
    for (int s : ws[i].word) word.push_back(s + 1);
    comps.push_back(Json{{"word", word}, {"point", point_json(rec.components[i])}});
  }
  return Json{{"mu_complex", vector_json(rec.mu_complex)}, {"mu_real", vector_json(rec.mu_real)}, {"components", comps}};
}

Json hypertoric_embed(Context& c) {
  const auto arr = read_arrangement(c.in, "$");
  const auto p = read_point(field(c.in, "point", "$"), arr.size(), "$.point");
  return h2_json(hypertoric::sl2_embed_quiver(arr, p));
}

// --- quiver ---------------------------------------------------------------

Json quiver_moment(Context& c) {
  const auto rep = read_quiver_rep(c.in, "$");
  const auto m = quiver::complex_moment(rep);
  return Json{{"lambdas", vector_json(m.lambdas)}, {"residuals", vector_json(m.residuals)}};
}

Json quiver_act(Context& c) {
  const auto rep = read_quiver_rep(c.in, "$");
  const auto& arr = field(c.in, "g", "$");
  if (!arr.is_array() || arr.size() != static_cast<std::size_t>(rep.n - 1))
    throw SchemaError("schema_violation", "$.g: expected n-1 matrices");
  std::vector<CMatrix> g;
  for (std::size_t i = 0; i < arr.size(); ++i)
    g.push_back(read_square(arr[i], static_cast<int>(i) + 1, "$.g[" + std::to_string(i) + "]"));
  return quiver_rep_json(quiver::act(rep, g));
}

Json moments_json(const std::vector<quiver::VertexMoment>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(Json{{"vertex", m.vertex}, {"mu", matrix_json(m.mu)}, {"residual", m.residual}});
  return out;
}

Json quiver_realmoment(Context& c) {
  const auto rep = read_quiver_rep(c.in, "$");
  return Json{{"vertices", moments_json(quiver::real_moment(rep, read_gauge(c.in, "$")))}};
}

Json quiver_solve(Context& c) {
  const auto rep = read_quiver_rep(c.in, "$");
  const auto mode = read_gauge(c.in, "$");
  const long long max_iter = has(c.in, "max_iter") ? read_int(c.in["max_iter"], "$.max_iter") : 10000;
  if (max_iter < 1) throw PreconditionError("bad_max_iter", "max_iter must be positive");
  const auto res = quiver::solve_real_moment(rep, mode, static_cast<int>(std::min(max_iter, 100000000LL)),
                                             c.tol(quiver::kMomentTol));
  const auto before = quiver::complex_moment(rep);
  const auto after = quiver::complex_moment(res.rep);
  return Json{{"iterations", res.iterations},
              {"residual", res.residual},
              {"complex_drift", std::max((before.lambdas - after.lambdas).cwiseAbs().maxCoeff(),
                                         (before.residuals - after.residuals).cwiseAbs().maxCoeff())},
              {"rep", quiver_rep_json(res.rep)},
              {"vertices", moments_json(quiver::real_moment(res.rep, mode))}};
}

Json quiver_nilpotent(Context& c) {
  const auto rep = read_quiver_rep(c.in, "$");
  const auto r = quiver::end_matrix_nilpotency(rep, c.tol(quiver::kMomentTol));
  return Json{{"x", matrix_json(r.x)}, {"power_norm", r.power_norm}, {"nilpotent", r.nilpotent}};
}

Json quiver_gamma(Context& c) { return h2_json(quiver::sl2_gamma(read_h2(c.in, "$"))); }

// --- contraction ----------------------------------------------------------

Json contract_flow(Context& c) {
  const CMatrix2 b = read_square(field(c.in, "B", "$"), 2, "$.B");
  const CMatrix2 out = contraction::su2_flow_closed_form(b, c.tol(contraction::kTol));
  return Json{{"result", matrix_json(out)}, {"det", complex_json(out.determinant())}};
}

Json contract_ghflow(Context& c) {
  const CMatrix2 b = read_square(field(c.in, "B", "$"), 2, "$.B");
  contraction::FlowOptions opts;
  if (has(c.in, "step_tol")) opts.step_tol = read_double(c.in["step_tol"], "$.step_tol");
  if (opts.step_tol <= 0) throw PreconditionError("bad_tolerance", "step_tol must be positive");
  opts.keep_trajectory = c.cfg.csv.has_value();
  const auto r = contraction::gh_flow_numeric(b, opts, c.tol(contraction::kTol));
  if (c.cfg.csv) {
    std::ofstream f(*c.cfg.csv);
    if (!f) throw PreconditionError("output_unwritable", "cannot write " + *c.cfg.csv);
    f << std::setprecision(17) << "t,b11_re,b11_im,b12_re,b12_im,b21_re,b21_im,b22_re,b22_im\n";
    for (const auto& s : r.trajectory) {
      f << s.t;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) f << ',' << s.b(i, j).real() << ',' << s.b(i, j).imag();
      f << '\n';
    }
  }
  const CMatrix2 closed = contraction::su2_flow_closed_form(b, c.tol(contraction::kTol));
  return Json{{"result", matrix_json(r.end)},
              {"closed_form", matrix_json(closed)},
              {"deviation", (r.end - closed).cwiseAbs().maxCoeff()},
              {"steps", r.steps},
              {"rejected", r.rejected},
              {"max_im_det_drift", r.max_im_det_drift},
              {"max_re_det_error", r.max_re_det_error}};
}

Json contract_implode(Context& c) {
  const CMatrix2 k = read_square(field(c.in, "k", "$"), 2, "$.k");
  const double lam = read_double(field(c.in, "lam", "$"), "$.lam");
  return Json{{"z", vector_json(CVector(contraction::implode_su2(k, lam)))}};
}

Json contract_phi(Context& c) {
  const auto x = read_cotangent(c.in, "$");
  const CMatrix2 m = contraction::phi(x, c.tol(contraction::kTol));
  return Json{{"M", matrix_json(m)}, {"minor", std::abs(m.determinant())}};
}

Json contract_equiv(Context& c) {
  const auto x = read_cotangent(field(c.in, "x", "$"), "$.x");
  const auto y = read_cotangent(field(c.in, "y", "$"), "$.y");
  return Json{{"equivalent", contraction::equivalent(x, y, c.tol(contraction::kTol))}};
}

Json invariants_json(const contraction::Invariants4& inv) {
  return Json{{"v", vector_json(CVector(inv.v))},
              {"w", vector_json(CVector(inv.w))},
              {"M", matrix_json(inv.m)},
              {"trace", complex_json(inv.m.trace())},
              {"max_minor", contraction::max_minor(inv.m)},
              {"square_norm", (inv.m * inv.m).norm()}};
}

Json contract_invariants(Context& c) {
  const H2Point p1 = read_h2(field(c.in, "p1", "$"), "$.p1");
  const H2Point p2 = read_h2(field(c.in, "p2", "$"), "$.p2");
  return invariants_json(contraction::complex_invariants(p1, p2, c.tol(contraction::kTol)));
}

Json contract_psi(Context& c) {
  const CMatrix2 g = read_square(field(c.in, "g", "$"), 2, "$.g");
  const CMatrix2 v = read_square(field(c.in, "v", "$"), 2, "$.v");
  const double tol = c.tol(contraction::kTol);
  contraction::PsiResult r;
  if (has(c.in, "h")) {
    r = contraction::psi_sl2_with(g, v, read_square(c.in["h"], 2, "$.h"), tol);
  } else {
    const CVector line = read_cvector(field(c.in, "line", "$"), "$.line");
    if (line.size() != 2) throw SchemaError("schema_violation", "$.line: expected 2 entries");
    r = contraction::psi_sl2(g, v, line, tol);
  }
  return Json{{"h", matrix_json(r.h)},
              {"right", Json{{"g", matrix_json(r.right_g)}, {"x", matrix_json(r.right_x)}, {"h2", h2_json(r.right)}}},
              {"left", Json{{"g", matrix_json(r.left_g)}, {"v", matrix_json(r.left_v)}, {"h2", h2_json(r.left)}}},
              {"invariants", invariants_json(r.invariants)}};
}

Json contract_swann(Context& c) {
  return Json{{"M", matrix_json(contraction::swann_weyl(read_square(field(c.in, "M", "$"), 4, "$.M")))}};
}

Json contract_qcirc(Context& c) {
  return Json{{"member", contraction::q_circ_membership(read_h2(c.in, "$"), c.tol(contraction::kTol))}};
}

// --- Moore-Tachikawa ------------------------------------------------------

mtcat::MTMorphism step_morphism(const Json& s, const mtcat::GroupObject& g, const std::string& path) {
  if (s.is_object()) return read_morphism(s, path);
  const std::string name = read_string(s, path);
  if (name == "identity") return mtcat::identity(g);
  if (name == "right_implosion" || name == "implode") return mtcat::right_implosion(g);
  if (name == "left_implosion") return mtcat::left_implosion(g);
  if (name == "contraction") return mtcat::universal_contraction(g);
  if (name == "point") return mtcat::point_morphism();
  throw SchemaError("schema_violation", path + ": unknown step \"" + name + "\"");
}

Json mt_compose(Context& c) {
  const auto g = read_group(field(c.in, "group", "$"), "$.group");
  mtcat::MTMorphism cur = read_morphism(field(c.in, "start", "$"), "$.start");
  const int start_dim = cur.complex_dimension;
  const auto& steps = field(c.in, "steps", "$");
  if (!steps.is_array()) throw SchemaError("schema_violation", "$.steps: expected an array");
  Json tree = Json::array();
  tree.push_back(Json{{"step", 0}, {"applied", cur.label}, {"complex_dimension", cur.complex_dimension}});
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto m = step_morphism(steps[i], g, "$.steps[" + std::to_string(i) + "]");
    cur = mtcat::compose(cur, m);
    tree.push_back(Json{{"step", i + 1},
                        {"applied", m.label},
                        {"applied_dimension", m.complex_dimension},
                        {"middle", group_json(m.source)},
                        {"complex_dimension", cur.complex_dimension},
                        {"degenerate", cur.degenerate}});
  }
  return Json{{"derivation", tree},
              {"result", morphism_json(cur)},
              {"dimension_preserved", cur.complex_dimension == start_dim}};
}

Json mt_tensor(Context& c) {
  const auto x = read_morphism(field(c.in, "x", "$"), "$.x");
  const auto y = read_morphism(field(c.in, "y", "$"), "$.y");
  return morphism_json(mtcat::tensor(x, y));
}

Json mt_catalog(Context& c) {
  const auto g = read_group(field(c.in, "group", "$"), "$.group");
  Json out = Json::array();
  for (const auto& m : mtcat::catalog(g)) out.push_back(morphism_json(m));
  return Json{{"group", group_json(g)}, {"morphisms", out}};
}

// --- Nahm -----------------------------------------------------------------

Json nahm_integrate(Context& c) {
  const auto& init = field(c.in, "initial", "$");
  if (!init.is_array() || init.size() != 4) throw SchemaError("schema_violation", "$.initial: expected T0..T3");
  nahm::Quadruple q;
  for (std::size_t i = 0; i < 4; ++i) q[i] = read_cmatrix(init[i], "$.initial[" + std::to_string(i) + "]");
  const double a = read_double(field(c.in, "t_start", "$"), "$.t_start");
  const double b = read_double(field(c.in, "t_end", "$"), "$.t_end");
  const long long steps = read_int(field(c.in, "steps", "$"), "$.steps");
  if (steps < 16 || steps > 10000000) throw PreconditionError("bad_steps", "steps must lie in [16, 1e7]");
  const auto d = nahm::integrate(q, a, b, static_cast<int>(steps));
  return Json{{"residual", nahm::residual(d)}, {"data", nahm_json(d)}};
}

Json nahm_residual(Context& c) {
  return Json{{"residual", nahm::residual(read_nahm(field(c.in, "data", "$"), "$.data"))}};
}

Json nahm_transform(Context& c) {
  const auto d = read_nahm(field(c.in, "data", "$"), "$.data");
  const std::string kind = read_string(field(c.in, "kind", "$"), "$.kind");
  nahm::Symmetry sym;
  if (kind == "scale") {
    sym.kind = nahm::SymmetryKind::Scale;
    sym.c = read_double(field(c.in, "c", "$"), "$.c");
  } else if (kind == "reflect") {
    sym.kind = nahm::SymmetryKind::Reflect;
  } else {
    throw SchemaError("schema_violation", "$.kind: expected \"scale\" or \"reflect\"");
  }
  std::optional<std::vector<double>> target;
  if (has(c.in, "target")) {
    const RVector t = read_rvector(c.in["target"], "$.target");
    target = std::vector<double>(t.data(), t.data() + t.size());
  }
  const auto out = nahm::symmetry_transform(d, sym, target);
  return Json{{"residual_before", nahm::residual(d)}, {"residual", nahm::residual(out)}, {"data", nahm_json(out)}};
}

using Handler = std::function<Json(Context&)>;

const std::map<std::string, std::map<std::string, Handler>>& handlers() {
  static const std::map<std::string, std::map<std::string, Handler>> h = {
      {"rootsys", {{"build", rootsys_build}, {"weyl", rootsys_weyl}, {"chamber", rootsys_chamber}}},
      {"arrangement",
       {{"flats", arrangement_flats},
        {"broad", arrangement_broad},
        {"stratum", arrangement_stratum},
        {"restrict", arrangement_restrict}}},
      {"hypertoric",
       {{"lattice", hypertoric_lattice},
        {"residuals", hypertoric_residuals},
        {"tmoment", hypertoric_tmoment},
        {"weylact", hypertoric_weylact},
        {"project", hypertoric_project},
        {"components", hypertoric_components},
        {"embed", hypertoric_embed}}},
      {"quiver",
       {{"moment", quiver_moment},
        {"act", quiver_act},
        {"realmoment", quiver_realmoment},
        {"solve", quiver_solve},
        {"nilpotent", quiver_nilpotent},
        {"gamma", quiver_gamma}}},
      {"contract",
       {{"flow", contract_flow},
        {"ghflow", contract_ghflow},
        {"implode", contract_implode},
        {"phi", contract_phi},
        {"equiv", contract_equiv},
        {"invariants", contract_invariants},
        {"psi", contract_psi},
        {"swann", contract_swann},
        {"qcirc", contract_qcirc}}},
      {"mt", {{"compose", mt_compose}, {"tensor", mt_tensor}, {"catalog", mt_catalog}}},
      {"nahm", {{"integrate", nahm_integrate}, {"residual", nahm_residual}, {"transform", nahm_transform}}},
  };
  return h;
}

Json error_doc(const Error& e) {
  static const char* kinds[] = {"", "", "precondition", "schema", "numerical"};
  return Json{{"error", Json{{"kind", kinds[e.exit_status()]}, {"code", e.code()}, {"message", e.what()}}}};
}

Outcome run_verify(const RunConfig& cfg) {
  const auto reports = verify::run(cfg.action, cfg.seed, cfg.serial ? Exec::Serial : Exec::Parallel);
  Json suites = Json::array();
  bool ok = true;
  for (const auto& r : reports) {
    suites.push_back(report_json(r));
    ok = ok && r.passed();
  }
  return {ok ? 0 : static_cast<int>(ErrorKind::Numerical), Json{{"passed", ok}, {"suites", suites}}};
}

}  // namespace

const std::vector<std::pair<std::string, std::vector<std::string>>>& commands() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> list = [] {
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    for (const auto& [cmd, actions] : handlers()) {
      std::vector<std::string> names;
      for (const auto& [name, fn] : actions) names.push_back(name);
      out.emplace_back(cmd, names);
    }
    std::vector<std::string> suites = verify::suite_names();
    suites.insert(suites.begin(), "all");
    out.emplace_back("verify", suites);
    return out;
  }();
  return list;
}

Outcome dispatch(const RunConfig& cfg) {
  try {
    if (cfg.tol && !(*cfg.tol > 0.0))
      throw PreconditionError("bad_tolerance", "tolerance must be positive");
    if (cfg.command == "verify") return run_verify(cfg);
    const auto cmd = handlers().find(cfg.command);
    if (cmd == handlers().end()) throw PreconditionError("unknown_command", "unknown command: " + cfg.command);
    const auto act = cmd->second.find(cfg.action);
    if (act == cmd->second.end())
      throw PreconditionError("unknown_action", "unknown action for " + cfg.command + ": " + cfg.action);
    Context ctx{cfg, load_input(cfg)};
    return {0, act->second(ctx)};
  } catch (const Error& e) {
    return {e.exit_status(), error_doc(e)};
  } catch (const nlohmann::json::exception& e) {
    const SchemaError se("schema_violation", e.what());
    return {se.exit_status(), error_doc(se)};
  }
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace implode::cli
