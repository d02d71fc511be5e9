#pragma once

#include <optional>
#include <vector>

#include "psbck/algebra.hpp"
#include "psbck/deduction.hpp"
#include "psbck/maps.hpp"

namespace psbck {

// A map between the carriers of two certified algebras. Not necessarily a
// homomorphism; is_hom decides.
struct Homomorphism {
  AlgebraRef source;
  AlgebraRef target;
  std::vector<Element> map;  // target id per source id

  Element operator()(Element x) const { return map[x]; }
  friend bool operator==(const Homomorphism& a, const Homomorphism& b);
};

// Throws kInvalidMap unless `map` has one in-range target id per source element.
Homomorphism make_hom(const AlgebraRef& source, const AlgebraRef& target,
                      std::vector<Element> map);

// f(x->y) = f(x)->f(y) and f(x~>y) = f(x)~>f(y); the witness is the least
// offending pair.
Verdict is_hom(const Homomorphism& f);

// All homomorphisms A -> B in lexicographic order of image vectors. Throws
// kCarrierTooLarge when either side exceeds limits().endomorphism_enumeration.
std::vector<Homomorphism> enumerate_hom(const AlgebraRef& a, const AlgebraRef& b);

struct VtHomomorphism {
  Homomorphism base;
  UnaryMap v;  // on base.source
  UnaryMap u;  // on base.target
};

// is_hom plus f(v(x)) = u(f(x)). Throws kParentMismatch when v or u live on
// the wrong algebra.
Verdict is_vthom(const VtHomomorphism& f);

// Homomorphisms (A,v) -> (B,u) intertwining the operators; a sublist of
// enumerate_hom(A, B).
std::vector<Homomorphism> enumerate_vthom(const UnaryMap& v, const UnaryMap& u);

Subset hom_kernel(const Homomorphism& f);
Subset hom_image(const Homomorphism& f);
Subset image_of(const Homomorphism& f, const Subset& s);
Subset preimage_of(const Homomorphism& f, const Subset& s);
bool is_surjective(const Homomorphism& f);
bool is_injective(const Homomorphism& f);

// Contains 1, closed under both implications and mapped into itself by v.
bool is_very_true_subalgebra(const UnaryMap& v, const Subset& s);
std::vector<Subset> enumerate_very_true_subalgebras(const UnaryMap& v);

// f(D) for a surjective f. Throws kSurjectivityRequired otherwise.
Subset pushforward(const Homomorphism& f, const Subset& d);

// Every structural statement about kernels, images and preimages of a VT
// homomorphism, each evaluated exhaustively. Statements needing surjectivity
// are left out (and `surjective` is false) when f is not onto.
struct TransportReport {
  bool surjective = false;
  std::vector<LawCheck> checks;

  bool passed() const;
  const LawCheck* first_failure() const;
};

TransportReport transport(const VtHomomorphism& f);

// Factorization of f through A/H. `commutes`, `unique`, `image_matches` and
// `kernel_matches` are evaluated, not assumed.
struct Factorization {
  Quotient quotient;
  LiftedOperator v_hat;          // lifted operator on the quotient
  VtHomomorphism induced;        // A/H -> B
  Verdict induced_verdict;       // is_vthom of `induced`
  bool commutes = false;         // induced o projection = f
  bool unique = false;           // no other VT hom on A/H composes to f
  bool image_matches = false;    // Im(induced) = Im(f)
  bool kernel_matches = false;   // Ker(induced) = Ker(f)/H

  bool ok() const {
    return induced_verdict.ok && v_hat.verdict.ok && commutes && unique && image_matches &&
           kernel_matches;
  }
};

// Throws kKernelContainmentViolated unless H is inside Ker(f); kNotNormal and
// kNotVds come from the quotient lift.
Factorization factor(const VtHomomorphism& f, const Subset& h);

// A/Ker(f) against the image of f with u restricted to it.
struct FirstIsomorphism {
  Factorization factorization;
  Subalgebra image;
  UnaryMap u_on_image;
  VtHomomorphism iso;  // A/Ker(f) -> Im(f)
  Verdict iso_verdict;
  bool bijective = false;

  bool ok() const { return factorization.ok() && iso_verdict.ok && bijective; }
};

FirstIsomorphism first_isomorphism(const VtHomomorphism& f);

// A bijective homomorphism A -> B, if one exists.
std::optional<Homomorphism> find_isomorphism(const AlgebraRef& a, const AlgebraRef& b);

// The projection x -> [x] as a homomorphism onto the quotient.
Homomorphism projection(const Quotient& q);

}  // namespace psbck
