#pragma once

#include <string>
#include <vector>

namespace implode::mtcat {

// An object of the Moore-Tachikawa category: a complex reductive group,
// recorded by its dimension and rank only.
struct GroupObject {
  std::string name;
  int complex_dimension = 0;
  int rank = 0;
  bool abelian = false;

  friend bool operator==(const GroupObject&, const GroupObject&) = default;
};

// A morphism source -> target: a complex symplectic variety with commuting
// source and target actions, tracked through dimension and extra actions.
struct MTMorphism {
  std::string label;
  GroupObject source;
  GroupObject target;
  int complex_dimension = 0;
  std::vector<GroupObject> extra_actions;
  bool degenerate = false;  // set when a composition comes out negative
  bool is_identity = false; // T^*G; composing with it returns the other factor
};

GroupObject group(std::string name, int complex_dimension, int rank, bool abelian = false);
GroupObject trivial_group();
GroupObject torus(int rank);       // (C^*)^rank, named "T_C" or "T_C^r"
GroupObject maximal_torus(const GroupObject& g);
GroupObject sl(int n);             // SL(n, C)
GroupObject product(const GroupObject& a, const GroupObject& b);

void validate(const GroupObject& g);

// Y o X = (X x Y) /// Delta G_2 for X : G1 -> G2 and Y : G2 -> G3. When G_2 is
// abelian the anti-diagonal G_2 survives as an extra action, except when one
// side is the identity T^*G_2, whose anti-diagonal action is the target action.
MTMorphism compose(const MTMorphism& x, const MTMorphism& y);
MTMorphism tensor(const MTMorphism& x, const MTMorphism& y);

MTMorphism identity(const GroupObject& g);              // T^*G, dim 2 dim G
MTMorphism right_implosion(const GroupObject& g);       // G -> T_C, dim G + rank G
MTMorphism left_implosion(const GroupObject& g);        // T_C -> G
MTMorphism universal_contraction(const GroupObject& g); // G -> G with extra T_C
MTMorphism point_morphism();                            // 1 -> 1, dim 0

// identity, right implosion, left implosion, universal contraction.
std::vector<MTMorphism> catalog(const GroupObject& g);

}  // namespace implode::mtcat
