#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psbck/algebra.hpp"
#include "psbck/maps.hpp"

namespace psbck {

// Contains 1 and is closed under modus ponens for both implications.
bool is_deductive_system(const FiniteAlgebra& a, const Subset& d);
// x->y in D iff x~>y in D, for all x, y.
bool is_normal(const FiniteAlgebra& a, const Subset& d);
bool is_normal_deductive_system(const FiniteAlgebra& a, const Subset& d);
// Deductive system with v(D) contained in D.
bool is_v_deductive_system(const UnaryMap& v, const Subset& d);

// Least deductive system containing `seed`.
Subset generate_deductive_system(const FiniteAlgebra& a, Subset seed);

// Listings are ordered by (cardinality, bit pattern). They throw
// kCarrierTooLarge above limits().subset_enumeration.
std::vector<Subset> enumerate_ds(const FiniteAlgebra& a);
std::vector<Subset> enumerate_ds_n(const FiniteAlgebra& a);
std::vector<Subset> enumerate_ds_v(const UnaryMap& v);
std::vector<Subset> enumerate_ds_nv(const UnaryMap& v);

// A/H for a normal deductive system H. Classes are numbered by their least
// member; the class of x is named "[x]" after that member.
struct Quotient {
  AlgebraRef source;
  Subset kernel;
  std::vector<Element> class_of;         // source id -> class id
  std::vector<Element> representatives;  // class id -> least source id
  AlgebraRef algebra;

  Element project(Element x) const { return class_of[x]; }
  Subset members(Element cls) const;
  std::size_t class_count() const { return representatives.size(); }
};

// Builds the congruence (x,y) ~ (x->y in H and y->x in H) and the quotient
// algebra, checking that the induced tables do not depend on
// representatives. Throws kNotNormal when H is not a normal deductive system.
Quotient congruence_from(const AlgebraRef& a, const Subset& h, std::string label = {});

// One quotient per normal deductive system, in enumerate_ds_n order.
std::vector<Quotient> enumerate_congruences(const AlgebraRef& a);

// [x] -> [v(x)] on A/H. Throws kNotVds unless v(H) is inside H, kNotNormal
// unless H is normal, kWellDefinednessFailure if the map is not constant on
// classes.
LiftedOperator lift_vto_to_quotient(const Quotient& q, const UnaryMap& v);

// Every congruence of A is compatible with v: (x,y) in Theta_H implies
// (v(x),v(y)) in Theta_H for all normal H. This can fail when H is not
// mapped into itself by v; the globalization of a chain with a proper
// filter above 0 is the smallest counterexample.
bool vto_congruence_check(const UnaryMap& v);
// The same, restricted to normal H with v(H) inside H, where it always holds.
bool vds_congruence_check(const UnaryMap& v);

// First normal H and pair (x, y) in Theta_H with (v(x), v(y)) outside it.
struct CongruenceViolation {
  Subset h;
  Element x = 0;
  Element y = 0;
};
std::optional<CongruenceViolation> congruence_violation(const UnaryMap& v, bool only_v_systems);

}  // namespace psbck
