#pragma once

#include <string>
#include <vector>

#include "psbck/algebra.hpp"

namespace psbck {

// kHolds families must never produce a violation on a certified algebra.
// kKnownFalse families encode statements with known finite counterexamples;
// their violations are findings and do not fail the suite.
enum class Expectation { kHolds, kKnownFalse };

struct FamilyResult {
  std::string name;
  std::string statement;
  Expectation expectation = Expectation::kHolds;
  std::size_t algebras = 0;  // algebras on which the family applied
  std::size_t cases = 0;     // individual instances checked
  std::size_t violations = 0;
  std::string first_violation;

  bool clean() const { return violations == 0; }
};

struct SuiteReport {
  std::vector<FamilyResult> families;  // fixed order, see family_catalog()
  std::vector<std::string> algebras;   // labels, in the order checked
  std::vector<std::string> skipped;    // "label: reason" for enumeration caps

  // Every kHolds family is clean.
  bool passed() const;
  const FamilyResult& family(const std::string& name) const;
};

// Names, statements and expectations of every family, in report order.
const std::vector<FamilyResult>& family_catalog();

SuiteReport empty_suite_report();
// Adds one algebra's instances to `report`. Families that need structure the
// algebra lacks (zero, product, lattice, ...) are silently not applicable.
void run_suite_on(const AlgebraRef& a, SuiteReport& report);
SuiteReport run_suite(const std::vector<AlgebraRef>& algebras);

}  // namespace psbck
