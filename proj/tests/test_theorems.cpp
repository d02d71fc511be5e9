#include <doctest.h>

#include <iostream>

#include "fixtures.hpp"
#include "psbck/generator.hpp"
#include "psbck/theorems.hpp"

using namespace psbck;

namespace {

void print(const SuiteReport& r) {
  for (const auto& f : r.families)
    if (!f.clean() || f.cases == 0)
      MESSAGE(f.name << ": " << f.cases << " cases on " << f.algebras << ", " << f.violations
                     << " violations; " << f.first_violation);
}

}  // namespace

TEST_CASE("suite over the hand-built algebras") {
  SuiteReport r = run_suite({fixtures::ex4(), fixtures::ex6(), fixtures::ex6b(), fixtures::chain2(),
                             fixtures::trivial(), fixtures::goedel(4), fixtures::lukasiewicz(5),
                             fixtures::boolean4()});
  print(r);
  CHECK(r.passed());
  CHECK(r.skipped.empty());
  // the unrestricted congruence statement has a counterexample among these
  CHECK_FALSE(r.family("congruence-compatibility").clean());
  CHECK(r.family("vds-congruence-compatibility").clean());
  CHECK_FALSE(r.family("den-lift").clean());
  // v2.v4 = v1 on the four-element algebra although v2 and v4 do not commute
  CHECK_FALSE(r.family("vto-composition-commuting").clean());
  CHECK(r.family("vto-composition-both-ways").clean());
}

TEST_CASE("suite over generated algebras") {
  SuiteReport r = run_suite(generate_algebras(2024, 120));
  print(r);
  CHECK(r.passed());
  for (const auto& f : r.families) {
    CAPTURE(f.name);
    CHECK(f.cases > 0);
  }
}
