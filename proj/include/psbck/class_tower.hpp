#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psbck/algebra.hpp"
#include "psbck/maps.hpp"

namespace psbck {

// x.y = min{z | x <= y->z}, together with lattice tables when the derived
// order is a lattice. Tables are flat n*n, row-major.
struct ProductStructure {
  std::size_t n = 0;
  std::vector<Element> odot;
  std::optional<std::vector<Element>> meet;
  std::optional<std::vector<Element>> join;

  Element product(Element x, Element y) const { return odot[x * n + y]; }
  Element meet_of(Element x, Element y) const { return (*meet)[x * n + y]; }
  Element join_of(Element x, Element y) const { return (*join)[x * n + y]; }
  bool lattice() const { return meet.has_value() && join.has_value(); }
};

struct ProductResult {
  std::optional<ProductStructure> structure;
  std::vector<Element> failing_pair;  // set when structure is absent
  std::string reason;
};

// Both defining sets are computed from the order for every pair; the product
// exists iff each has a least element and the two agree.
ProductResult pseudo_product(const FiniteAlgebra& a);

// Cells where `declared` disagrees with the derived product, as (x, y)
// pairs; an empty result means the tables agree. Throws kPPRequired when the
// algebra has no product.
std::vector<std::pair<Element, Element>> product_mismatches(
    const FiniteAlgebra& a, const std::vector<std::vector<Element>>& declared);

struct ClassLevel {
  std::string name;
  bool holds = false;
  std::vector<Element> witness;
  std::string reason;  // failed identity, or the missing lower level
};

struct ClassificationReport {
  std::optional<ProductStructure> product;
  ClassLevel bounded{"bounded", false, {}, {}};
  ClassLevel pp{"pP", false, {}, {}};
  ClassLevel lattice{"lattice", false, {}, {}};
  ClassLevel flw{"FLw", false, {}, {}};
  ClassLevel mtl{"pseudo-MTL", false, {}, {}};
  ClassLevel divisible{"divisible", false, {}, {}};
  ClassLevel bl{"pseudo-BL", false, {}, {}};
  ClassLevel mv{"pseudo-MV", false, {}, {}};
  // x v y = (x->y)~>y = (x~>y)->y for all x, y; evaluated whenever the
  // algebra is FLw, independently of the involutive route taken by `mv`.
  std::optional<bool> mv_identities;

  std::vector<const ClassLevel*> levels() const;
};

ClassificationReport classify(const FiniteAlgebra& a);

// Throws kPPRequired / kNotFLw. Returns the product on success.
ProductStructure require_pp(const FiniteAlgebra& a);
ProductStructure require_flw(const FiniteAlgebra& a);

// Product inequalities for a very true operator on a pP algebra and the
// three formulations of the implication axiom, each evaluated separately.
LawReport vt_pp_suite(const UnaryMap& v);

// Values of the three implication-axiom formulations for an arbitrary map.
struct ImplicationForms {
  bool plain = false;     // v(x->y) <= v(x)->v(y), same for ~>
  bool with_z = false;    // v(x->y) <= v(x)->(v(z)->v(y)), same for ~>
  bool product = false;   // v(x).v(y) <= v(x.y)
};
ImplicationForms implication_forms(const UnaryMap& f, const ProductStructure& p);

// VT1..VT4 plus v(x v y) <= v(x) v v(y). When that holds the equality
// v(x v y) = v(x) v v(y) is asserted too. Throws kNotFLw.
Verdict is_vto_flw(const UnaryMap& v);
std::vector<UnaryMap> enumerate_vto_flw(const AlgebraRef& a);

// v(x->y) v v(y->x) = 1 and v(x~>y) v v(y~>x) = 1.
Verdict check_vt5_prime(const UnaryMap& v, const ProductStructure& p);

// Two sides of a class characterization, evaluated independently.
struct Agreement {
  bool left = false;
  bool right = false;
  bool agree() const { return left == right; }
};

// left: every very true FLw operator satisfies the prelinearity form above;
// right: the algebra is pseudo-MTL. Throws kNotFLw.
Agreement mtl_characterization(const AlgebraRef& a);
// left: every very true FLw operator turns joins into (v(x)->v(y))~>v(y) and
// (v(x)~>v(y))->v(y); right: the algebra is pseudo-MV. Throws kNotFLw.
Agreement mv_characterization(const AlgebraRef& a);

// Product and lattice identities of pP algebras, and of FLw algebras when
// the algebra is one. Throws kPPRequired.
LawReport product_law_suite(const FiniteAlgebra& a);

struct SmarandacheCandidate {
  Subset q;
  Subalgebra sub;
  ClassificationReport report;
};

// Proper subsets Q with 0, 1 in Q, |Q| >= 3, closed under both implications,
// whose induced structure is pseudo-MTL. Ordered like deductive systems.
// Throws kUnboundedAlgebra and kCarrierTooLarge (limits().smarandache_search).
std::vector<SmarandacheCandidate> smarandache_search(const AlgebraRef& a);

// The candidate for one given Q, or kNotSmarandache.
SmarandacheCandidate smarandache_substructure(const AlgebraRef& a, const Subset& q);

// Very true FLw operators of the induced structure on Q, as maps on Q.
std::vector<UnaryMap> svto(const AlgebraRef& a, const Subset& q);

struct Restriction {
  std::optional<UnaryMap> map;  // on the Q subalgebra
  std::string reason;           // why there is none
};

// v restricted to Q, if v maps Q into Q and the restriction is a very true
// FLw operator there.
Restriction restrict_vto(const UnaryMap& v, const Subset& q);

}  // namespace psbck
