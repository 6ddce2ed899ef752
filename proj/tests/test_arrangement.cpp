#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "implode/arrangement.hpp"
#include "implode/error.hpp"

using namespace implode;
using arrangement::Arrangement;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

Arrangement coordinate_lines() { return arrangement::from_normals(2, {iv({1, 0}), iv({0, 1})}); }

Arrangement weyl(char f, int r) { return arrangement::from_root_system(rootsys::build_root_system(f, r)); }

// Flats by floating-point rank: S is a flat when adding any other normal
// raises the rank.
std::set<std::vector<int>> float_flats(const Arrangement& arr) {
  std::set<std::vector<int>> out;
  const int n = arr.size();
  auto rank_of = [&](const std::vector<int>& s) {
    if (s.empty()) return 0;
    RMatrix m(s.size(), arr.rank);
    for (std::size_t k = 0; k < s.size(); ++k) m.row(k) = arr.normals[s[k]].cast<double>().transpose();
    return static_cast<int>(Eigen::JacobiSVD<RMatrix>(m).setThreshold(1e-9).rank());
  };
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    const int r = rank_of(s);
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      if (mask >> i & 1) continue;
      auto t = s;
      t.push_back(i);
      closed = rank_of(t) > r;
    }
    if (closed) out.insert(s);
  }
  return out;
}

// Sign patterns of random points: every chamber is hit with high probability.
std::set<std::vector<int>> sampled_chambers(const Arrangement& arr) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  std::set<std::vector<int>> out;
  for (int t = 0; t < 20000; ++t) {
    RVector x(arr.rank);
    for (int k = 0; k < arr.rank; ++k) x(k) = g(rng);
    std::vector<int> v;
    for (int i = 0; i < arr.size(); ++i)
      if (arr.normals[i].cast<double>().dot(x) > 0) v.push_back(i);
    out.insert(v);
  }
  return out;
}

}  // namespace

TEST_SUITE("arrangement") {
  TEST_CASE("normals are reduced and validated") {
    CHECK(arrangement::from_normals(1, {iv({2})}).normals[0] == iv({1}));
    CHECK_THROWS_WITH(arrangement::from_normals(2, {iv({1, 0}), iv({2, 0})}), "repeated hyperplane");
    CHECK_THROWS_WITH(arrangement::from_normals(2, {iv({0, 0})}), "degenerate normal");
    const auto a2 = weyl('A', 2);
    REQUIRE(a2.size() == 3);
    CHECK(a2.normals[2] == iv({1, 1}));
  }

  TEST_CASE("flats match the floating-point oracle") {
    for (const auto& arr : {weyl('A', 1), weyl('A', 2), weyl('B', 2), weyl('G', 2), weyl('A', 3), coordinate_lines()}) {
      std::set<std::vector<int>> got;
      for (const auto& f : arrangement::flats(arr)) got.insert(f.indices);
      CHECK(got == float_flats(arr));
    }
    CHECK(arrangement::flats(weyl('A', 2)).size() == 5);
    CHECK(arrangement::flats(coordinate_lines()).size() == 4);
    CHECK(arrangement::closure(weyl('A', 2), {0, 1}).indices == std::vector<int>{0, 1, 2});
  }

  TEST_CASE("broad subsets match sampled chambers") {
    for (const auto& arr : {weyl('A', 1), weyl('A', 2), weyl('B', 2), weyl('C', 2), weyl('G', 2), weyl('A', 3), coordinate_lines()}) {
      std::set<std::vector<int>> got;
      for (const auto& v : arrangement::broad_subsets(arr)) got.insert(v.indices);
      CHECK(got == sampled_chambers(arr));
    }
    CHECK(arrangement::broad_subsets(weyl('A', 2)).size() == 6);
    CHECK(arrangement::broad_subsets(weyl('B', 2)).size() == 8);
    CHECK(arrangement::broad_subsets(coordinate_lines()).size() == 4);
  }

  TEST_CASE("witness lies strictly inside the cone") {
    const auto arr = weyl('G', 2);
    for (const auto& v : arrangement::broad_subsets(arr)) {
      RVector x;
      REQUIRE(arrangement::is_broad(arr, v.indices, &x));
      for (int i = 0; i < arr.size(); ++i) {
        const bool in = std::binary_search(v.indices.begin(), v.indices.end(), i);
        CHECK((in ? 1.0 : -1.0) * arr.normals[i].cast<double>().dot(x) >= 1.0 - 1e-9);
      }
    }
  }

  TEST_CASE("strata") {
    const auto a2 = weyl('A', 2);
    hypertoric::HypertoricPoint p{CVector(3), CVector(3)};
    p.a << 1.0, 0.0, 2.0;
    p.b << 1.0, 0.0, 1.0;
    auto s = arrangement::stratum_of(a2, p);
    CHECK(s.flat.indices == std::vector<int>{1});
    CHECK(s.in_mg);
    CHECK_FALSE(s.in_open_stratum);
    CHECK(s.complex_codim == 2);
    s = arrangement::stratum_of(a2, hypertoric::HypertoricPoint::zero(3));
    CHECK(s.flat.indices == std::vector<int>{0, 1, 2});
    CHECK_FALSE(s.in_mg);
    p.a << 1.0, 2.0, 3.0;
    CHECK(arrangement::stratum_of(a2, p).in_open_stratum);
    CHECK_THROWS_AS(arrangement::stratum_of(a2, hypertoric::HypertoricPoint::zero(2)), PreconditionError);
  }

  TEST_CASE("restriction and localization") {
    const auto a2 = weyl('A', 2);
    auto [res, loc] = arrangement::restriction_localization(a2, {{}, 2});
    CHECK(res.size() == 3);
    CHECK(loc.size() == 0);
    std::tie(res, loc) = arrangement::restriction_localization(a2, {{0, 1, 2}, 0});
    CHECK(res.size() == 0);
    CHECK(loc.size() == 3);
    std::tie(res, loc) = arrangement::restriction_localization(a2, {{1}, 1});
    CHECK(res.rank == 1);
    CHECK(res.size() <= 2);
    CHECK(res.size() >= 1);
    CHECK(loc.size() == 1);
    CHECK_THROWS_AS(arrangement::restriction_localization(a2, {{0, 1}, 0}), PreconditionError);
  }

  TEST_CASE("size guard") {
    std::vector<IntVector> many;
    for (int i = 1; i <= 25; ++i) many.push_back(iv({1, i}));
    const auto big = arrangement::from_normals(2, many);
    CHECK_THROWS_WITH(arrangement::flats(big), "arrangement too large for exhaustive enumeration");
  }
}
