#include <doctest.h>

#include "fixtures.hpp"
#include "psbck/error.hpp"
#include "psbck/morphisms.hpp"
#include "psbck/operators.hpp"

using namespace psbck;
using fixtures::map;
using fixtures::subset;

namespace {

std::vector<std::vector<Element>> images(const std::vector<Homomorphism>& hs) {
  std::vector<std::vector<Element>> out;
  for (const auto& h : hs) out.push_back(h.map);
  return out;
}

}  // namespace

TEST_CASE("endomorphisms of the six-element algebra") {
  auto a = fixtures::ex6();
  auto homs = enumerate_hom(a, a);
  const auto psi1 = fixtures::ids(a, "1 1 1 1 1 1");
  const auto psi2 = fixtures::ids(a, "1 a b c d e");
  const auto psi3 = fixtures::ids(a, "1 b a d c e");
  std::vector<std::vector<Element>> expected = {psi1, psi2, psi3};
  std::sort(expected.begin(), expected.end());
  CHECK(images(homs) == expected);

  auto vtos = enumerate_vto(a);
  REQUIRE(vtos.size() == 10);
  for (std::size_t i = 0; i < vtos.size(); ++i) {
    CAPTURE(i);
    auto vh = images(enumerate_vthom(vtos[i], vtos[i]));
    std::vector<std::vector<Element>> want = {psi1, psi2};
    // the identity operator commutes with every endomorphism
    if (vtos[i] == map(a, "1 e e e e e") || vtos[i] == identity_map(a)) want.push_back(psi3);
    std::sort(want.begin(), want.end());
    CHECK(vh == want);
  }
}

TEST_CASE("homomorphism search matches brute force") {
  const std::vector<AlgebraRef> algebras = {fixtures::ex4(), fixtures::chain2(), fixtures::trivial(),
                                            fixtures::goedel(3), fixtures::boolean4(),
                                            fixtures::lukasiewicz(3)};
  for (const auto& a : algebras)
    for (const auto& b : algebras) {
      CAPTURE(a->label());
      CAPTURE(b->label());
      CHECK(images(enumerate_hom(a, b)) == fixtures::oracle_hom(*a, *b));
    }
}

TEST_CASE("constant one and identity are always VT endomorphisms") {
  for (const auto& a : {fixtures::ex4(), fixtures::ex6b(), fixtures::goedel(4)}) {
    for (const auto& v : enumerate_vto(a)) {
      Homomorphism one{a, a, std::vector<Element>(a->size(), a->one())};
      Homomorphism id{a, a, identity_map(a).image};
      CHECK(is_vthom({one, v, v}));
      CHECK(is_vthom({id, v, v}));
    }
  }
}

TEST_CASE("transport along VT homomorphisms") {
  auto a = fixtures::ex6();
  auto v10 = map(a, "1 e e e e e");
  Homomorphism psi3 = make_hom(a, a, fixtures::ids(a, "1 b a d c e"));
  TransportReport r = transport({psi3, v10, v10});
  CHECK(r.surjective);
  CHECK(r.passed());
  CHECK(hom_kernel(psi3) == subset(a, "1"));

  Homomorphism one{a, a, std::vector<Element>(a->size(), a->one())};
  TransportReport r1 = transport({one, v10, v10});
  CHECK_FALSE(r1.surjective);
  CHECK(r1.passed());
  CHECK(hom_kernel(one).is_full());
  CHECK(hom_image(one) == subset(a, "1"));
  CHECK_THROWS_AS(pushforward(one, a->full_set()), WorkbenchError);
}

TEST_CASE("factor theorem") {
  auto a = fixtures::ex6();
  for (const auto& v : enumerate_vto(a)) {
    for (const auto& h : enumerate_vthom(v, v)) {
      VtHomomorphism f{h, v, v};
      Factorization fx = factor(f, subset(a, "1"));
      CHECK(fx.ok());
      CHECK(find_isomorphism(fx.quotient.algebra, a).has_value());
      FirstIsomorphism iso = first_isomorphism(f);
      CHECK(iso.ok());
    }
  }
  Homomorphism one{a, a, std::vector<Element>(a->size(), a->one())};
  auto v = identity_map(a);
  Factorization fx = factor({one, v, v}, a->full_set());
  CHECK(fx.quotient.class_count() == 1);
  CHECK(fx.ok());

  Homomorphism id{a, a, identity_map(a).image};
  try {
    factor({id, v, v}, a->full_set());
    FAIL("expected KernelContainmentViolated");
  } catch (const WorkbenchError& e) {
    CHECK(e.code() == ErrorCode::kKernelContainmentViolated);
  }
}

TEST_CASE("isomorphism search") {
  auto a = fixtures::ex4();
  auto self = find_isomorphism(a, a);
  REQUIRE(self);
  CHECK(self->map == identity_map(a).image);
  CHECK_FALSE(find_isomorphism(a, fixtures::ex6()));
  CHECK_FALSE(find_isomorphism(fixtures::goedel(4), fixtures::lukasiewicz(4)));
  CHECK_FALSE(find_isomorphism(fixtures::goedel(4), fixtures::boolean4()));
}

TEST_CASE("homomorphism cap") {
  CHECK_THROWS_AS(enumerate_hom(fixtures::goedel(9), fixtures::goedel(9)), WorkbenchError);
}
