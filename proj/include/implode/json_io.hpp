#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "implode/arrangement.hpp"
#include "implode/contraction.hpp"
#include "implode/h2.hpp"
#include "implode/hypertoric.hpp"
#include "implode/mtcat.hpp"
#include "implode/nahm.hpp"
#include "implode/quiver.hpp"
#include "implode/rootsys.hpp"
#include "implode/verify.hpp"

// JSON encoding shared by the command line and its tests. Complex numbers are
// [re, im] pairs, matrices are row-major arrays of rows. Every reader throws
// SchemaError with the offending path on malformed input.
namespace implode::json_io {

using Json = nlohmann::ordered_json;

Json complex_json(cplx z);
Json vector_json(const CVector& v);
Json vector_json(const RVector& v);
Json vector_json(const IntVector& v);
Json matrix_json(const CMatrix& m);
Json matrix_json(const IntMatrix& m);
inline Json matrix_json(const CMatrix2& m) { return matrix_json(CMatrix(m)); }
inline Json matrix_json(const CMatrix4& m) { return matrix_json(CMatrix(m)); }

// Field access with schema errors. `path` names the enclosing object.
const Json& field(const Json& j, const std::string& key, const std::string& path);
bool has(const Json& j, const std::string& key);

cplx read_complex(const Json& j, const std::string& path);
CVector read_cvector(const Json& j, const std::string& path);
RVector read_rvector(const Json& j, const std::string& path);
IntVector read_ivector(const Json& j, const std::string& path);
CMatrix read_cmatrix(const Json& j, const std::string& path);
CMatrix read_square(const Json& j, int n, const std::string& path);
double read_double(const Json& j, const std::string& path);
long long read_int(const Json& j, const std::string& path);
std::string read_string(const Json& j, const std::string& path);
bool read_bool(const Json& j, const std::string& path);
std::vector<int> read_index_list(const Json& j, const std::string& path);

Json root_system_json(const rootsys::RootSystem& rs);
Json weyl_element_json(const rootsys::WeylElement& w);
rootsys::RootSystem read_root_system(const Json& j, const std::string& path);
// Composite of 1-based simple reflections from "word"; empty word = identity.
rootsys::WeylElement read_weyl_word(const rootsys::RootSystem& rs, const Json& j, const std::string& path);

// {"family","rank"} (Weyl arrangement) or {"rank","normals"}.
arrangement::Arrangement read_arrangement(const Json& j, const std::string& path);
Json arrangement_json(const arrangement::Arrangement& arr);
Json flat_json(const arrangement::Flat& f);
Json broad_json(const arrangement::BroadSet& v);
Json stratum_json(const arrangement::Stratum& s);

hypertoric::HypertoricPoint read_point(const Json& j, int n, const std::string& path);
Json point_json(const hypertoric::HypertoricPoint& p);

H2Point read_h2(const Json& j, const std::string& path);
Json h2_json(const H2Point& p);

quiver::QuiverRep read_quiver_rep(const Json& j, const std::string& path);
Json quiver_rep_json(const quiver::QuiverRep& rep);
quiver::Gauge read_gauge(const Json& j, const std::string& path);

contraction::CotangentPoint read_cotangent(const Json& j, const std::string& path);

mtcat::GroupObject read_group(const Json& j, const std::string& path);
Json group_json(const mtcat::GroupObject& g);
mtcat::MTMorphism read_morphism(const Json& j, const std::string& path);
Json morphism_json(const mtcat::MTMorphism& m);

nahm::NahmData read_nahm(const Json& j, const std::string& path);
Json nahm_json(const nahm::NahmData& d);

Json report_json(const verify::SuiteReport& r);

}  // namespace implode::json_io
