#pragma once

#include <vector>

#include "psbck/algebra.hpp"
#include "psbck/maps.hpp"

namespace psbck {

// Decreasing, monotone, idempotent (IO1..IO3).
Verdict is_interior(const UnaryMap& f);
// Increasing, monotone, idempotent.
Verdict is_closure(const UnaryMap& f);
// VT1..VT4: v(1)=1, v(x)<=x, v(x)<=v(v(x)), and v(x->y) <= v(x)->v(y) with
// the same for ~>.
Verdict is_vto(const UnaryMap& f);

bool is_monotone(const UnaryMap& f);
bool is_idempotent(const UnaryMap& f);

// Exhaustive enumerations, sorted lexicographically by image vector. Throw
// kCarrierTooLarge above limits().operator_enumeration.
std::vector<UnaryMap> enumerate_interior(const AlgebraRef& a);
std::vector<UnaryMap> enumerate_closure(const AlgebraRef& a);
std::vector<UnaryMap> enumerate_vto(const AlgebraRef& a);

// (f o g)(x) = f(g(x)). Throws kParentMismatch for maps on different algebras.
UnaryMap compose(const UnaryMap& f, const UnaryMap& g);

Subset fix_points(const UnaryMap& f);
Subset image_set(const UnaryMap& f);
Subset kernel(const UnaryMap& f);

// 1 -> 1, everything else -> 0.
UnaryMap globalization(const AlgebraRef& a);

enum class OperatorKind { kInterior, kVeryTrue };

// x -> f(x)^{-~} on the subalgebra of regular elements. Requires a bounded,
// good algebra with the Glivenko property (kGlivenkoRequired otherwise) and a
// certified operator of the given kind (kInvalidMap otherwise).
LiftedOperator lift_to_reg(const UnaryMap& f, OperatorKind kind);

// [x] -> [f(x)] on the quotient by the dense elements. Same preconditions as
// lift_to_reg; a class on which f is not constant modulo Den(A) raises
// kWellDefinednessFailure.
LiftedOperator lift_to_den_quotient(const UnaryMap& f, OperatorKind kind);

struct SigmaHedges {
  UnaryMap first;   // x -> v(x^-)^~
  UnaryMap second;  // x -> v(x^~)^-
};

// Canonical truth-depressing pair of a very true operator on a bounded
// algebra.
SigmaHedges sigma_hedges(const UnaryMap& v);

struct VtstStructure {
  UnaryMap v;
  UnaryMap s1;
  UnaryMap s2;
};

// ST1: s1(0)=s2(0)=0; ST2: x<=s1(x), x<=s2(x);
// ST3: v(x->y) <= s1(x)->s1(y) and v(x~>y) <= s2(x)~>s2(y).
// Also fails (with the VT axiom) when v is not a very true operator.
Verdict is_vtst(const UnaryMap& v, const UnaryMap& s1, const UnaryMap& s2);
Verdict is_vtst(const VtstStructure& s);

// Every s with s(0)=0 and x<=s(x) satisfying the ST3 half for `v` that uses
// -> (first = true) or ~> (first = false). The admissible s1 and s2 are
// independent, so their product is the set of all truth-depressing pairs.
std::vector<UnaryMap> enumerate_st_components(const UnaryMap& v, bool first);

// Monotone maps with s(0)=0 and x<=s(x): the inputs accepted for
// globalization on linearly ordered algebras.
std::vector<UnaryMap> enumerate_monotone_st_inputs(const AlgebraRef& a);

}  // namespace psbck
