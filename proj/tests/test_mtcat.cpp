#include "doctest.h"

#include "implode/error.hpp"
#include "implode/mtcat.hpp"

using namespace implode;
using namespace implode::mtcat;

TEST_SUITE("mtcat") {
  TEST_CASE("catalog dimensions") {
    const auto c = catalog(sl(2));
    REQUIRE(c.size() == 4);
    CHECK(c[0].complex_dimension == 6);
    CHECK(c[1].complex_dimension == 4);
    CHECK(c[2].complex_dimension == 4);
    CHECK(c[3].complex_dimension == 6);
    REQUIRE(c[3].extra_actions.size() == 1);
    CHECK(c[3].extra_actions[0].abelian);
    for (int n = 2; n <= 6; ++n) {
      const auto g = sl(n);
      CHECK(right_implosion(g).complex_dimension == n * n - 1 + n - 1);
      CHECK(universal_contraction(g).complex_dimension == 2 * (n * n - 1));
    }
    const auto t = torus(3);
    CHECK(right_implosion(t).complex_dimension == identity(t).complex_dimension);
  }

  TEST_CASE("composition arithmetic") {
    const auto g = sl(3);
    const MTMorphism m{"M", trivial_group(), g, 20, {}, false, false};
    CHECK(compose(m, identity(g)).complex_dimension == 20);
    CHECK(compose(identity(trivial_group()), m).complex_dimension == 20);
    CHECK(compose(m, right_implosion(g)).complex_dimension == 20 + g.rank - g.complex_dimension);
    const auto twice = compose(compose(m, right_implosion(g)), left_implosion(g));
    CHECK(twice.complex_dimension == 20);
    CHECK(twice.extra_actions.size() == 1);
    CHECK(compose(m, universal_contraction(g)).complex_dimension == 20);
    CHECK_THROWS_AS(compose(m, identity(sl(2))), PreconditionError);
    const MTMorphism small{"S", trivial_group(), g, 1, {}, false, false};
    CHECK(compose(small, right_implosion(g)).degenerate);
  }

  TEST_CASE("associativity and identities") {
    const auto g = sl(2);
    const auto t = maximal_torus(g);
    const MTMorphism x{"X", trivial_group(), g, 12, {}, false, false};
    const auto y = right_implosion(g);
    const auto z = left_implosion(g);
    CHECK(compose(compose(x, y), z).complex_dimension == compose(x, compose(y, z)).complex_dimension);
    const auto xy = compose(x, y);
    const auto with_id = compose(xy, identity(t));
    CHECK(with_id.complex_dimension == xy.complex_dimension);
    CHECK(with_id.extra_actions.size() == xy.extra_actions.size());
    // Abelian middle: exactly one extra action more than the inputs carry.
    const auto back = compose(xy, z);
    CHECK(back.extra_actions.size() == xy.extra_actions.size() + z.extra_actions.size() + 1);
  }

  TEST_CASE("tensor products") {
    const auto g = sl(2), h = sl(3);
    CHECK(tensor(identity(g), identity(h)).complex_dimension == 2 * (3 + 8));
    CHECK(tensor(right_implosion(g), right_implosion(g)).complex_dimension == 2 * (3 + 1));
    const auto with_point = tensor(right_implosion(g), point_morphism());
    CHECK(with_point.complex_dimension == 4);
    CHECK(with_point.source == g);
  }

  TEST_CASE("group validation") {
    CHECK_THROWS_AS(group("bad", 2, 3), PreconditionError);
    CHECK_THROWS_AS(group("bad", 3, 1, true), PreconditionError);
  }
}
