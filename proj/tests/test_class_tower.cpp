#include <doctest.h>

#include "fixtures.hpp"
#include "psbck/class_tower.hpp"
#include "psbck/error.hpp"
#include "psbck/operators.hpp"

using namespace psbck;
using fixtures::map;
using fixtures::subset;

namespace {

// Least z with x <= y->z, found by scanning against the order directly.
Element oracle_product(const FiniteAlgebra& a, Element x, Element y) {
  std::vector<Element> candidates;
  for (Element z = 0; z < a.size(); ++z)
    if (fixtures::le(a, x, a.arrow(y, z))) candidates.push_back(z);
  for (Element z : candidates) {
    bool least = true;
    for (Element w : candidates) least = least && fixtures::le(a, z, w);
    if (least) return z;
  }
  throw std::runtime_error("no product");
}

}  // namespace

TEST_CASE("products agree with the residuation oracle") {
  for (const auto& a : {fixtures::ex6(), fixtures::chain2(), fixtures::goedel(4),
                        fixtures::lukasiewicz(5), fixtures::boolean4()}) {
    CAPTURE(a->label());
    ProductResult r = pseudo_product(*a);
    REQUIRE(r.structure);
    for (Element x = 0; x < a->size(); ++x)
      for (Element y = 0; y < a->size(); ++y)
        CHECK(r.structure->product(x, y) == oracle_product(*a, x, y));
    CHECK(product_law_suite(*a).passed());
  }
}

TEST_CASE("missing products are reported with a pair") {
  // a.a would have to be below both 0-free candidates d and a
  auto a = fixtures::ex6b();
  ProductResult r = pseudo_product(*a);
  CHECK_FALSE(r.structure);
  CHECK(r.failing_pair == std::vector<Element>{1, 1});
  CHECK_THROWS_AS(vt_pp_suite(identity_map(a)), WorkbenchError);
  // involutive but not a lattice
  ClassificationReport six = classify(*fixtures::ex6());
  CHECK(six.pp.holds);
  CHECK_FALSE(six.lattice.holds);
  CHECK_FALSE(six.flw.holds);
}

TEST_CASE("two-element chain is Boolean") {
  auto a = fixtures::chain2();
  ClassificationReport r = classify(*a);
  for (const auto* level : r.levels()) {
    CAPTURE(level->name);
    CHECK(level->holds);
  }
  CHECK(r.mv_identities == true);
  // classical conjunction
  CHECK(r.product->product(1, 1) == 1);
  CHECK(r.product->product(0, 1) == 0);
  CHECK(mtl_characterization(a).left);
  CHECK(mtl_characterization(a).agree());
  CHECK(mv_characterization(a).right);
  CHECK(mv_characterization(a).agree());
}

TEST_CASE("standard chains sit where expected") {
  ClassificationReport g = classify(*fixtures::goedel(4));
  CHECK(g.bl.holds);
  CHECK_FALSE(g.mv.holds);
  CHECK(g.mv_identities == false);
  ClassificationReport l = classify(*fixtures::lukasiewicz(5));
  CHECK(l.mv.holds);
  CHECK(l.mv_identities == true);
  auto agree = mv_characterization(fixtures::goedel(4));
  CHECK_FALSE(agree.left);
  CHECK(agree.agree());
}

TEST_CASE("the Q substructure of the six-element algebra") {
  auto a = fixtures::ex6b();
  auto found = smarandache_search(a);
  Subset q = subset(a, "0 c d 1");
  bool present = false;
  for (const auto& c : found) present = present || c.q == q;
  CHECK(present);

  SmarandacheCandidate c = smarandache_substructure(a, q);
  const auto& sub = *c.sub.algebra;
  REQUIRE(c.report.product);
  const auto& p = *c.report.product;
  auto id = [&](const char* n) { return *sub.find(n); };
  // rows of d and c, columns 0 c d 1
  std::vector<Element> row_d, row_c;
  for (const char* col : {"0", "c", "d", "1"}) {
    row_d.push_back(p.product(id("d"), id(col)));
    row_c.push_back(p.product(id("c"), id(col)));
  }
  CHECK(row_d == std::vector<Element>{id("0"), id("d"), id("d"), id("d")});
  CHECK(row_c == std::vector<Element>{id("0"), id("d"), id("d"), id("c")});
  CHECK(c.report.mtl.holds);

  auto maps = svto(a, q);
  REQUIRE(maps.size() == 3);
  auto qmap = [&](const char* names) { return fixtures::map(c.sub.algebra, names); };
  CHECK(maps[0] == qmap("0 0 0 1"));
  CHECK(maps[1] == qmap("0 c d 1"));
  CHECK(maps[2] == qmap("0 d d 1"));

  auto vs = enumerate_vto(a);
  REQUIRE(vs.size() == 5);
  CHECK(restrict_vto(vs[0], q).map == maps[0]);
  CHECK(restrict_vto(vs[1], q).map == maps[1]);
  CHECK(restrict_vto(vs[2], q).map == maps[2]);
  CHECK(restrict_vto(vs[3], q).map == maps[1]);
  CHECK(restrict_vto(vs[4], q).map == maps[1]);
}

TEST_CASE("Smarandache edge cases") {
  CHECK(smarandache_search(fixtures::chain2()).empty());
  auto a = fixtures::ex6b();
  try {
    svto(a, subset(a, "0 a d 1"));
    FAIL("expected NotSmarandache");
  } catch (const WorkbenchError& e) {
    CHECK(e.code() == ErrorCode::kNotSmarandache);
  }
  Restriction r = restrict_vto(identity_map(a), subset(a, "0 1"));
  CHECK_FALSE(r.map);
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("very true operators with the product") {
  auto a = fixtures::ex6();
  for (const auto& v : enumerate_vto(a)) CHECK(vt_pp_suite(v).passed());
  auto g = fixtures::goedel(5);
  CHECK(vt_pp_suite(globalization(g)).passed());
  CHECK(is_vto_flw(globalization(g)));
  CHECK(is_vto_flw(identity_map(g)));
}

TEST_CASE("VT5 fails for globalization on the Boolean square") {
  auto b = fixtures::boolean4();
  Verdict v = is_vto_flw(globalization(b));
  CHECK_FALSE(v.ok);
  CHECK(v.axiom == "VT5");
  CHECK(v.witness == std::vector<Element>{1, 2});
}

TEST_CASE("FLw is required") {
  // unbounded two-element algebra
  auto a = certify(fixtures::raw("u", "a 1", "1", "", {"1 1", "a 1"}, {"1 1", "a 1"}));
  CHECK_THROWS_AS(mtl_characterization(a), WorkbenchError);
  CHECK_THROWS_AS(is_vto_flw(identity_map(a)), WorkbenchError);
}
