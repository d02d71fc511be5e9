#include <doctest.h>

#include "fixtures.hpp"
#include "psbck/error.hpp"
#include "psbck/operators.hpp"
#include "psbck/valuations.hpp"

using namespace psbck;

namespace {

PseudoValuation phi_of(const AlgebraRef& a, std::vector<std::int64_t> v) {
  std::vector<Rational> r;
  for (auto x : v) r.emplace_back(x);
  return make_valuation(a, r);
}

}  // namespace

TEST_CASE("pseudo-valuation on the four-element algebra") {
  auto a = fixtures::ex4();
  auto phi = phi_of(a, {0, 3, 1, 2});
  CHECK(is_pseudo_valuation(phi));
  CHECK(is_valuation(phi));
  auto v = fixtures::map(a, "1 a b a");
  auto composed = compose_with_vto(phi, v);
  CHECK(composed.values == phi_of(a, {0, 3, 1, 3}).values);
  CHECK(is_pseudo_valuation(composed));
  CHECK(compose_with_vto(phi, identity_map(a)) == phi);
}

TEST_CASE("pv2 violation is reported") {
  auto a = fixtures::ex4();
  Verdict v = is_pseudo_valuation(phi_of(a, {0, 3, 4, 2}));
  CHECK_FALSE(v.ok);
  CHECK(v.axiom == "pv2");
}

TEST_CASE("zero valuation") {
  auto a = fixtures::ex6();
  auto zero = phi_of(a, std::vector<std::int64_t>(a->size(), 0));
  CHECK(is_pseudo_valuation(zero));
  CHECK(is_valuation(zero).axiom == "pv3");
  for (const auto& v : enumerate_vto(a)) CHECK(compose_with_vto(zero, v) == zero);
}

TEST_CASE("composition keeps pseudo-valuations on every operator") {
  // rational-valued scan over small value grids
  for (const auto& a : {fixtures::ex4(), fixtures::goedel(3), fixtures::chain2()}) {
    const auto n = a->size();
    std::vector<Rational> grid = {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2)};
    fixtures::for_each_map(n, grid.size(), [&](const std::vector<Element>& idx) {
      std::vector<Rational> vals;
      for (auto i : idx) vals.push_back(grid[i]);
      auto phi = make_valuation(a, vals);
      if (!is_pseudo_valuation(phi)) return;
      for (const auto& v : enumerate_vto(a)) CHECK(is_pseudo_valuation(compose_with_vto(phi, v)));
    });
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(format_rational(Rational(4, 6)) == "2/3");
  CHECK(format_rational(Rational(-2)) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), WorkbenchError);
  CHECK_THROWS_AS(parse_rational("x"), WorkbenchError);
  CHECK_THROWS_AS(parse_rational("1/"), WorkbenchError);
}
