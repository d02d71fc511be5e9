#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "psbck/algebra.hpp"
#include "psbck/maps.hpp"

namespace psbck {

using Rational = boost::rational<std::int64_t>;

// Exact rational value per element id.
struct PseudoValuation {
  AlgebraRef parent;
  std::vector<Rational> values;

  const Rational& operator()(Element x) const { return values[x]; }
  friend bool operator==(const PseudoValuation& a, const PseudoValuation& b) {
    return a.values == b.values;
  }
};

// Throws kInvalidMap unless there is one value per element.
PseudoValuation make_valuation(const AlgebraRef& a, std::vector<Rational> values);

// phi(1) = 0 and phi(y) - phi(x) <= min(phi(x->y), phi(x~>y)). On success the
// derived facts (order reversing, nonnegative) are checked too and reported
// as failures of their own if they ever break.
Verdict is_pseudo_valuation(const PseudoValuation& phi);
// Additionally phi(x) = 0 only at x = 1.
Verdict is_valuation(const PseudoValuation& phi);

// x -> phi(v(x)).
PseudoValuation compose_with_vto(const PseudoValuation& phi, const UnaryMap& v);

// "p/q", "p" or "-p/q". Throws kParseError.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

}  // namespace psbck
