#pragma once

#include <string>
#include <vector>

#include "psbck/algebra.hpp"

namespace psbck {

// A total self-map of a certified algebra, stored as its image vector.
struct UnaryMap {
  AlgebraRef parent;
  std::vector<Element> image;

  Element operator()(Element x) const { return image[x]; }
  std::size_t size() const { return image.size(); }

  friend bool operator==(const UnaryMap& a, const UnaryMap& b);
};

// Throws kInvalidMap unless `image` has one in-range entry per element.
UnaryMap make_map(const AlgebraRef& parent, std::vector<Element> image);

UnaryMap identity_map(const AlgebraRef& a);
UnaryMap constant_map(const AlgebraRef& a, Element value);

// Result of checking an axiom family; on failure names the first violated
// axiom and its lexicographically least witness tuple.
struct Verdict {
  bool ok = true;
  std::string axiom;
  std::vector<Element> witness;

  explicit operator bool() const { return ok; }

  static Verdict pass() { return {}; }
  static Verdict fail(std::string axiom, std::vector<Element> witness) {
    return {false, std::move(axiom), std::move(witness)};
  }
};

// An operator transported to a derived algebra, together with the check that
// it is again an operator of the same kind there.
struct LiftedOperator {
  AlgebraRef algebra;
  UnaryMap map;
  Verdict verdict;
};

// "<axiom> at (x, y)" using the element names of `a`, or "ok".
std::string describe(const Verdict& v, const FiniteAlgebra& a);

bool same_parent(const UnaryMap& f, const UnaryMap& g);

// f(x) <= g(x) for every x.
bool pointwise_leq(const UnaryMap& f, const UnaryMap& g);

}  // namespace psbck
