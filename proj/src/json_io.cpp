#include "implode/json_io.hpp"

#include <cmath>

#include "implode/error.hpp"

namespace implode::json_io {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw SchemaError("schema_violation", path + ": " + what);
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& array_of(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

}  // namespace

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json vector_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
  return out;
}

Json vector_json(const RVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json matrix_json(const CMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

bool has(const Json& j, const std::string& key) { return j.is_object() && j.contains(key); }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(path, "missing field \"" + key + "\"");
  return *it;
}

double read_double(const Json& j, const std::string& path) {
  if (!j.is_number()) bad(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) bad(path, "non-finite number");
  return x;
}

long long read_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<long long>();
}

std::string read_string(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

bool read_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) bad(path, "expected a boolean");
  return j.get<bool>();
}

cplx read_complex(const Json& j, const std::string& path) {
  if (j.is_number()) return {read_double(j, path), 0.0};
  if (!j.is_array() || j.size() != 2) bad(path, "expected a complex number [re, im]");
  return {read_double(j[0], at(path, 0)), read_double(j[1], at(path, 1))};
}

CVector read_cvector(const Json& j, const std::string& path) {
  array_of(j, path);
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = read_complex(j[i], at(path, i));
  return v;
}

RVector read_rvector(const Json& j, const std::string& path) {
  array_of(j, path);
  RVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = read_double(j[i], at(path, i));
  return v;
}

IntVector read_ivector(const Json& j, const std::string& path) {
  array_of(j, path);
  IntVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = read_int(j[i], at(path, i));
  return v;
}

CMatrix read_cmatrix(const Json& j, const std::string& path) {
  array_of(j, path);
  if (j.empty()) bad(path, "empty matrix");
  const std::size_t cols = array_of(j[0], at(path, 0)).size();
  CMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto& row = array_of(j[r], at(path, r));
    if (row.size() != cols) bad(at(path, r), "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = read_complex(row[c], at(at(path, r), c));
  }
  return m;
}

CMatrix read_square(const Json& j, int n, const std::string& path) {
  CMatrix m = read_cmatrix(j, path);
  if (m.rows() != n || m.cols() != n) bad(path, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  return m;
}

std::vector<int> read_index_list(const Json& j, const std::string& path) {
  array_of(j, path);
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const long long k = read_int(j[i], at(path, i));
    if (k < 1) bad(at(path, i), "indices are 1-based");
    out.push_back(static_cast<int>(k - 1));
  }
  return out;
}

// --- root systems ---------------------------------------------------------

Json root_system_json(const rootsys::RootSystem& rs) {
  Json roots = Json::array();
  for (const auto& r : rs.positive_roots) roots.push_back(vector_json(r));
  return Json{{"name", rs.name()},
              {"family", std::string(1, rs.family)},
              {"rank", rs.rank},
              {"num_positive", rs.num_positive()},
              {"positive_roots", roots},
              {"cartan", matrix_json(rs.cartan)},
              {"gram", matrix_json(rs.gram)}};
}

Json weyl_element_json(const rootsys::WeylElement& w) {
  Json sigma = Json::array(), word = Json::array();
  for (int s : w.sigma) sigma.push_back(s + 1);
  for (int s : w.word) word.push_back(s + 1);
  return Json{{"word", word}, {"matrix", matrix_json(w.matrix)}, {"sigma", sigma}, {"signs", w.signs}};
}

rootsys::RootSystem read_root_system(const Json& j, const std::string& path) {
  const std::string fam = read_string(field(j, "family", path), path + ".family");
  if (fam.size() != 1) bad(path + ".family", "expected a single letter");
  const long long rank = read_int(field(j, "rank", path), path + ".rank");
  if (rank < 1 || rank > 64) throw PreconditionError("unsupported_root_system", "unsupported root system");
  return rootsys::build_root_system(fam[0], static_cast<int>(rank));
}

rootsys::WeylElement read_weyl_word(const rootsys::RootSystem& rs, const Json& j, const std::string& path) {
  IntMatrix m = IntMatrix::Identity(rs.rank, rs.rank);
  std::vector<int> word;
  if (has(j, "word")) word = read_index_list(j["word"], path + ".word");
  for (int s : word) {
    if (s >= rs.rank) throw PreconditionError("bad_reflection", "simple reflection index out of range");
    m = m * rootsys::simple_reflection(rs, s);
  }
  return rootsys::make_element(rs, m, word);
}

// --- arrangements ---------------------------------------------------------

arrangement::Arrangement read_arrangement(const Json& j, const std::string& path) {
  if (has(j, "normals")) {
    const long long rank = read_int(field(j, "rank", path), path + ".rank");
    if (rank < 1) throw PreconditionError("bad_rank", "rank must be positive");
    std::vector<IntVector> normals;
    const auto& arr = array_of(j["normals"], path + ".normals");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      normals.push_back(read_ivector(arr[i], at(path + ".normals", i)));
      if (normals.back().size() != rank) bad(at(path + ".normals", i), "length differs from rank");
    }
    return arrangement::from_normals(static_cast<int>(rank), normals);
  }
  return arrangement::from_root_system(read_root_system(j, path));
}

Json arrangement_json(const arrangement::Arrangement& arr) {
  Json normals = Json::array();
  for (const auto& n : arr.normals) normals.push_back(vector_json(n));
  return Json{{"rank", arr.rank}, {"normals", normals}};
}

namespace {
Json one_based(const std::vector<int>& idx) {
  Json out = Json::array();
  for (int i : idx) out.push_back(i + 1);
  return out;
}
}  // namespace

Json flat_json(const arrangement::Flat& f) {
  return Json{{"indices", one_based(f.indices)}, {"subspace_dim", f.subspace_dim}};
}

Json broad_json(const arrangement::BroadSet& v) { return one_based(v.indices); }

Json stratum_json(const arrangement::Stratum& s) {
  return Json{{"flat", flat_json(s.flat)},
              {"zero_pairs", one_based(s.zero_pairs)},
              {"in_mg", s.in_mg},
              {"in_open_stratum", s.in_open_stratum},
              {"complex_codim", s.complex_codim}};
}

// --- points ---------------------------------------------------------------

hypertoric::HypertoricPoint read_point(const Json& j, int n, const std::string& path) {
  hypertoric::HypertoricPoint p{read_cvector(field(j, "a", path), path + ".a"),
                                read_cvector(field(j, "b", path), path + ".b")};
  if (p.a.size() != n || p.b.size() != n)
    bad(path, "expected " + std::to_string(n) + " coordinates in a and b");
  return p;
}

Json point_json(const hypertoric::HypertoricPoint& p) {
  return Json{{"a", vector_json(p.a)}, {"b", vector_json(p.b)}};
}

H2Point read_h2(const Json& j, const std::string& path) {
  const CVector a = read_cvector(field(j, "alpha", path), path + ".alpha");
  const CVector b = read_cvector(field(j, "beta", path), path + ".beta");
  if (a.size() != 2) bad(path + ".alpha", "expected 2 entries");
  if (b.size() != 2) bad(path + ".beta", "expected 2 entries");
  H2Point p;
  p.alpha = a;
  p.beta = b.transpose();
  return p;
}

Json h2_json(const H2Point& p) {
  return Json{{"alpha", vector_json(CVector(p.alpha))}, {"beta", vector_json(CVector(p.beta.transpose()))}};
}

// --- quiver ---------------------------------------------------------------

quiver::QuiverRep read_quiver_rep(const Json& j, const std::string& path) {
  const long long n = read_int(field(j, "n", path), path + ".n");
  if (n < 2 || n > 32) throw PreconditionError("bad_quiver_size", "n must lie in [2, 32]");
  quiver::QuiverRep rep = quiver::QuiverRep::zero(static_cast<int>(n));
  for (const char* key : {"alphas", "betas"}) {
    const std::string p = path + "." + key;
    const auto& arr = array_of(field(j, key, path), p);
    if (arr.size() != static_cast<std::size_t>(n - 1)) bad(p, "expected n-1 matrices");
    auto& dst = std::string(key) == "alphas" ? rep.alphas : rep.betas;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      CMatrix m = read_cmatrix(arr[i], at(p, i));
      if (m.rows() != dst[i].rows() || m.cols() != dst[i].cols())
        bad(at(p, i), "expected shape " + std::to_string(dst[i].rows()) + "x" + std::to_string(dst[i].cols()));
      dst[i] = std::move(m);
    }
  }
  return rep;
}

Json quiver_rep_json(const quiver::QuiverRep& rep) {
  Json a = Json::array(), b = Json::array();
  for (const auto& m : rep.alphas) a.push_back(matrix_json(m));
  for (const auto& m : rep.betas) b.push_back(matrix_json(m));
  return Json{{"n", rep.n}, {"alphas", a}, {"betas", b}};
}

quiver::Gauge read_gauge(const Json& j, const std::string& path) {
  if (!has(j, "mode")) return quiver::Gauge::SU;
  const std::string m = read_string(j["mode"], path + ".mode");
  if (m == "SU") return quiver::Gauge::SU;
  if (m == "U") return quiver::Gauge::U;
  bad(path + ".mode", "expected \"SU\" or \"U\"");
}

contraction::CotangentPoint read_cotangent(const Json& j, const std::string& path) {
  contraction::CotangentPoint x;
  x.k = read_square(field(j, "k", path), 2, path + ".k");
  x.v = read_square(field(j, "v", path), 2, path + ".v");
  return x;
}

// --- Moore-Tachikawa ------------------------------------------------------

mtcat::GroupObject read_group(const Json& j, const std::string& path) {
  if (has(j, "sl")) {
    const long long n = read_int(j["sl"], path + ".sl");
    if (n < 1 || n > 1000) throw PreconditionError("invalid_group", "SL(n) needs 1 <= n <= 1000");
    return mtcat::sl(static_cast<int>(n));
  }
  if (has(j, "torus")) {
    const long long r = read_int(j["torus"], path + ".torus");
    if (r < 0 || r > 100000) throw PreconditionError("invalid_group", "torus rank out of range");
    return r == 0 ? mtcat::trivial_group() : mtcat::torus(static_cast<int>(r));
  }
  if (j.is_string() && j.get<std::string>() == "trivial") return mtcat::trivial_group();
  const auto dim = read_int(field(j, "complex_dimension", path), path + ".complex_dimension");
  const auto rank = read_int(field(j, "rank", path), path + ".rank");
  const bool ab = has(j, "abelian") && read_bool(j["abelian"], path + ".abelian");
  if (dim < 0 || dim > 1000000) throw PreconditionError("invalid_group", "dimension out of range");
  const std::string name = read_string(field(j, "name", path), path + ".name");
  if (dim == 0) return mtcat::trivial_group();
  return mtcat::group(name, static_cast<int>(dim), static_cast<int>(rank), ab);
}

Json group_json(const mtcat::GroupObject& g) {
  return Json{{"name", g.name}, {"complex_dimension", g.complex_dimension}, {"rank", g.rank}, {"abelian", g.abelian}};
}

mtcat::MTMorphism read_morphism(const Json& j, const std::string& path) {
  mtcat::MTMorphism m;
  m.label = has(j, "label") ? read_string(j["label"], path + ".label") : "M";
  m.source = has(j, "source") ? read_group(j["source"], path + ".source") : mtcat::trivial_group();
  m.target = has(j, "target") ? read_group(j["target"], path + ".target") : mtcat::trivial_group();
  const auto dim = read_int(field(j, "complex_dimension", path), path + ".complex_dimension");
  if (dim < 0 || dim > 1000000) throw PreconditionError("bad_dimension", "morphism dimension out of range");
  m.complex_dimension = static_cast<int>(dim);
  if (has(j, "extra_actions")) {
    const auto& arr = array_of(j["extra_actions"], path + ".extra_actions");
    for (std::size_t i = 0; i < arr.size(); ++i) m.extra_actions.push_back(read_group(arr[i], at(path + ".extra_actions", i)));
  }
  return m;
}

Json morphism_json(const mtcat::MTMorphism& m) {
  Json extra = Json::array();
  for (const auto& g : m.extra_actions) extra.push_back(group_json(g));
  return Json{{"label", m.label},
              {"source", group_json(m.source)},
              {"target", group_json(m.target)},
              {"complex_dimension", m.complex_dimension},
              {"extra_actions", extra},
              {"degenerate", m.degenerate}};
}

// --- Nahm -----------------------------------------------------------------

nahm::NahmData read_nahm(const Json& j, const std::string& path) {
  nahm::NahmData d;
  d.grid = std::vector<double>();
  const auto& grid = array_of(field(j, "grid", path), path + ".grid");
  for (std::size_t i = 0; i < grid.size(); ++i) d.grid.push_back(read_double(grid[i], at(path + ".grid", i)));
  const auto& t = array_of(field(j, "T", path), path + ".T");
  if (t.size() != 4) bad(path + ".T", "expected four components T0..T3");
  for (std::size_t c = 0; c < 4; ++c) {
    const std::string pc = at(path + ".T", c);
    const auto& samples = array_of(t[c], pc);
    if (samples.size() != d.grid.size()) bad(pc, "one matrix per grid point expected");
    for (std::size_t k = 0; k < samples.size(); ++k) d.t[c].push_back(read_cmatrix(samples[k], at(pc, k)));
  }
  for (const auto& comp : d.t)
    for (const auto& m : comp)
      if (m.rows() != m.cols() || m.rows() != d.dim()) bad(path + ".T", "matrices must be square of one size");
  nahm::validate(d);
  return d;
}

Json nahm_json(const nahm::NahmData& d) {
  Json t = Json::array();
  for (const auto& comp : d.t) {
    Json samples = Json::array();
    for (const auto& m : comp) samples.push_back(matrix_json(m));
    t.push_back(std::move(samples));
  }
  return Json{{"grid", d.grid}, {"T", t}};
}

Json report_json(const verify::SuiteReport& r) {
  Json props = Json::array();
  for (const auto& p : r.properties) {
    Json dev = std::isfinite(p.max_deviation) ? Json(p.max_deviation) : Json("inf");
    Json o{{"name", p.name},
           {"passed", p.passed},
           {"max_deviation", dev},
           {"threshold", p.threshold},
           {"samples", p.samples}};
    if (!p.detail.empty()) o["detail"] = p.detail;
    props.push_back(std::move(o));
  }
  return Json{{"suite", r.suite}, {"seed", r.seed}, {"passed", r.passed()}, {"properties", props}};
}

}  // namespace implode::json_io
