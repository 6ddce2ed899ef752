#include "implode/mtcat.hpp"

#include <algorithm>

#include "implode/error.hpp"

namespace implode::mtcat {

GroupObject group(std::string name, int complex_dimension, int rank, bool abelian) {
  GroupObject g{std::move(name), complex_dimension, rank, abelian};
  validate(g);
  return g;
}

void validate(const GroupObject& g) {
  if (g.rank < 0 || g.rank > g.complex_dimension)
    throw PreconditionError("invalid_group", "group " + g.name + ": need 0 <= rank <= dimension");
  if (g.abelian && g.rank != g.complex_dimension)
    throw PreconditionError("invalid_group", "group " + g.name + ": abelian groups have rank = dimension");
}

GroupObject trivial_group() { return {"1", 0, 0, true}; }

GroupObject torus(int rank) {
  return group(rank == 1 ? "T_C" : "T_C^" + std::to_string(rank), rank, rank, true);
}

GroupObject maximal_torus(const GroupObject& g) {
  if (g.abelian) return g;
  GroupObject t = torus(g.rank);
  t.name = "T_C(" + g.name + ")";
  return t;
}

GroupObject sl(int n) { return group("SL(" + std::to_string(n) + ")", n * n - 1, n - 1); }

GroupObject product(const GroupObject& a, const GroupObject& b) {
  if (a.complex_dimension == 0) return b;
  if (b.complex_dimension == 0) return a;
  return {a.name + "x" + b.name, a.complex_dimension + b.complex_dimension, a.rank + b.rank,
          a.abelian && b.abelian};
}

MTMorphism compose(const MTMorphism& x, const MTMorphism& y) {
  if (!(x.target == y.source))
    throw PreconditionError("object_mismatch",
                            "cannot compose: " + x.label + " ends at " + x.target.name + " but " +
                                y.label + " starts at " + y.source.name);
  if (x.is_identity) return y;
  if (y.is_identity) return x;
  const GroupObject& middle = x.target;
  MTMorphism out;
  out.label = "(" + y.label + " o " + x.label + ")";
  out.source = x.source;
  out.target = y.target;
  out.complex_dimension = x.complex_dimension + y.complex_dimension - 2 * middle.complex_dimension;
  out.extra_actions = x.extra_actions;
  out.extra_actions.insert(out.extra_actions.end(), y.extra_actions.begin(), y.extra_actions.end());
  // The anti-diagonal copy of an abelian middle group survives the reduction.
  if (middle.abelian && middle.complex_dimension > 0) out.extra_actions.push_back(middle);
  out.degenerate = x.degenerate || y.degenerate || out.complex_dimension < 0;
  return out;
}

MTMorphism tensor(const MTMorphism& x, const MTMorphism& y) {
  MTMorphism out;
  out.label = "(" + x.label + " (x) " + y.label + ")";
  out.source = product(x.source, y.source);
  out.target = product(x.target, y.target);
  out.complex_dimension = x.complex_dimension + y.complex_dimension;
  out.extra_actions = x.extra_actions;
  out.extra_actions.insert(out.extra_actions.end(), y.extra_actions.begin(), y.extra_actions.end());
  out.degenerate = x.degenerate || y.degenerate;
  return out;
}

MTMorphism identity(const GroupObject& g) {
  validate(g);
  return {"T*" + g.name, g, g, 2 * g.complex_dimension, {}, false, true};
}

MTMorphism right_implosion(const GroupObject& g) {
  validate(g);
  return {"Q^R_" + g.name, g, maximal_torus(g), g.complex_dimension + g.rank, {}, false};
}

MTMorphism left_implosion(const GroupObject& g) {
  validate(g);
  return {"Q^L_" + g.name, maximal_torus(g), g, g.complex_dimension + g.rank, {}, false};
}

MTMorphism universal_contraction(const GroupObject& g) {
  MTMorphism c = compose(right_implosion(g), left_implosion(g));
  c.label = "(T*" + g.name + ")_contr";
  return c;
}

MTMorphism point_morphism() {
  return {"pt", trivial_group(), trivial_group(), 0, {}, false};
}

std::vector<MTMorphism> catalog(const GroupObject& g) {
  return {identity(g), right_implosion(g), left_implosion(g), universal_contraction(g)};
}

}  // namespace implode::mtcat
