#include <doctest.h>

#include "fixtures.hpp"
#include "psbck/deduction.hpp"
#include "psbck/error.hpp"
#include "psbck/operators.hpp"

using namespace psbck;
using fixtures::map;
using fixtures::subset;

namespace {

std::vector<std::uint64_t> bits(const std::vector<Subset>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& s : v) out.push_back(s.bits());
  return out;
}

std::vector<std::uint64_t> sorted_by_size(std::vector<std::uint64_t> v, std::size_t n) {
  std::vector<Subset> s;
  for (auto b : v) s.push_back(Subset::from_bits(n, b));
  std::sort(s.begin(), s.end());
  return bits(s);
}

}  // namespace

TEST_CASE("deductive systems of the four-element algebra") {
  auto a = fixtures::ex4();
  std::vector<Subset> expected = {subset(a, "1"), subset(a, "1 b"), a->full_set()};
  CHECK(enumerate_ds(*a) == expected);

  const std::vector<Subset> small = {subset(a, "1"), a->full_set()};
  CHECK(enumerate_ds_v(map(a, "1 a a a")) == small);
  CHECK(enumerate_ds_v(map(a, "1 a c c")) == small);
  CHECK(enumerate_ds_v(map(a, "1 a b a")) == expected);
  CHECK(enumerate_ds_v(map(a, "1 a b c")) == expected);
}

TEST_CASE("enumeration matches brute force") {
  for (const auto& a : {fixtures::ex4(), fixtures::ex6(), fixtures::ex6b(), fixtures::goedel(5),
                        fixtures::lukasiewicz(5), fixtures::boolean4(), fixtures::trivial()}) {
    CAPTURE(a->label());
    CHECK(bits(enumerate_ds(*a)) == sorted_by_size(fixtures::oracle_ds(*a), a->size()));
  }
}

TEST_CASE("closure completion path agrees with the scan") {
  // 13 elements forces the lectic enumeration
  auto a = fixtures::goedel(13);
  auto ds = enumerate_ds(*a);
  CHECK(bits(ds) == sorted_by_size(fixtures::oracle_ds(*a), a->size()));
  // every up-set of a Goedel chain is a deductive system
  CHECK(ds.size() == 13);
}

TEST_CASE("generated systems are the least ones containing the seed") {
  auto a = fixtures::ex6b();
  for (const auto& d : enumerate_ds(*a)) {
    CHECK(generate_deductive_system(*a, d) == d);
  }
  Subset g = generate_deductive_system(*a, subset(a, "b"));
  for (const auto& d : enumerate_ds(*a))
    if (d.contains(*a->find("b"))) CHECK(g.is_subset_of(d));
}

TEST_CASE("quotients") {
  auto a = fixtures::ex4();
  SUBCASE("by the trivial system") {
    Quotient q = congruence_from(a, subset(a, "1"));
    CHECK(q.class_count() == 4);
    CHECK(q.algebra->names() == std::vector<std::string>{"[1]", "[a]", "[b]", "[c]"});
  }
  SUBCASE("by everything") {
    Quotient q = congruence_from(a, a->full_set());
    CHECK(q.class_count() == 1);
  }
  SUBCASE("{1, b} is a deductive system but not normal") {
    Subset h = subset(a, "1 b");
    CHECK(is_deductive_system(*a, h));
    // c->a = b lies in H while c~>a = c does not
    CHECK_FALSE(is_normal(*a, h));
    CHECK(enumerate_ds_n(*a) == std::vector<Subset>{subset(a, "1"), a->full_set()});
    CHECK_THROWS_AS(congruence_from(a, h), WorkbenchError);
  }
  SUBCASE("three classes on a Goedel chain") {
    auto g = fixtures::goedel(4);
    Subset h = subset(g, "g2 g3");
    Quotient q = congruence_from(g, h);
    CHECK(q.class_count() == 3);
    CHECK(q.project(2) == q.project(3));
    Subset ker(g->size());
    for (Element x = 0; x < g->size(); ++x)
      if (q.project(x) == q.algebra->one()) ker.insert(x);
    CHECK(ker == h);
    LiftedOperator l = lift_vto_to_quotient(q, map(g, "g0 g0 g2 g3"));
    CHECK(l.verdict.ok);
    try {
      lift_vto_to_quotient(q, globalization(g));
      FAIL("expected NotVds");
    } catch (const WorkbenchError& e) {
      CHECK(e.code() == ErrorCode::kNotVds);
    }
  }
  SUBCASE("non-deductive subsets are rejected") {
    try {
      congruence_from(a, subset(a, "1 a"));
      FAIL("expected NotNormal");
    } catch (const WorkbenchError& e) {
      CHECK(e.code() == ErrorCode::kNotNormal);
    }
  }
}

TEST_CASE("one congruence per normal deductive system") {
  for (const auto& a : {fixtures::ex4(), fixtures::ex6(), fixtures::trivial()}) {
    auto qs = enumerate_congruences(a);
    CHECK(qs.size() == enumerate_ds_n(*a).size());
    for (const auto& q : qs) {
      // projection preserves both implications
      for (Element x = 0; x < a->size(); ++x)
        for (Element y = 0; y < a->size(); ++y) {
          CHECK(q.project(a->arrow(x, y)) == q.algebra->arrow(q.project(x), q.project(y)));
          CHECK(q.project(a->squig(x, y)) == q.algebra->squig(q.project(x), q.project(y)));
        }
    }
  }
  CHECK(enumerate_congruences(fixtures::trivial()).size() == 1);
}

TEST_CASE("v-deductive systems contain the kernel family") {
  for (const auto& a : {fixtures::ex4(), fixtures::ex6(), fixtures::ex6b()}) {
    for (const auto& v : enumerate_vto(a)) {
      auto dsv = enumerate_ds_v(v);
      auto has = [&](const Subset& s) { return std::find(dsv.begin(), dsv.end(), s) != dsv.end(); };
      CHECK(has(Subset::of(a->size(), {a->one()})));
      CHECK(has(a->full_set()));
      CHECK(has(kernel(v)));
      CHECK(vds_congruence_check(v));
    }
  }
}

TEST_CASE("congruences not stable under v") {
  auto a = fixtures::ex6b();
  auto g = globalization(a);
  auto bad = congruence_violation(g, false);
  REQUIRE(bad);
  // a ~ 1 modulo {a,b,c,d,1}, but v(a) = 0 and v(1) = 1 are not related
  CHECK(bad->h == subset(a, "a b c d 1"));
  CHECK_FALSE(vto_congruence_check(g));
  CHECK(vds_congruence_check(g));
  for (const auto& v : enumerate_vto(fixtures::ex6())) CHECK(vto_congruence_check(v));
  for (const auto& v : enumerate_vto(fixtures::ex4())) CHECK(vto_congruence_check(v));
}

TEST_CASE("dense elements form a normal system on Glivenko algebras") {
  auto a = fixtures::goedel(5);
  REQUIRE(is_glivenko(*a));
  CHECK(is_normal_deductive_system(*a, dense_elements(*a)));
}
