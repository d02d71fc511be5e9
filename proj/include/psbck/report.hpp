#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "psbck/algebra.hpp"
#include "psbck/maps.hpp"
#include "psbck/theorems.hpp"

namespace psbck {

// Key order is insertion order so JSON output is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchema = 1;

// "(1 a b a)"
std::string format_image(const FiniteAlgebra& a, const std::vector<Element>& image);
std::string format_map(const UnaryMap& m);
// "{1, b}"
std::string format_subset(const FiniteAlgebra& a, const Subset& s);
// "(a, b)" or "" for an empty witness
std::string format_witness(const FiniteAlgebra& a, const std::vector<Element>& w);

Json names_json(const FiniteAlgebra& a, const std::vector<Element>& ids);
Json subset_json(const FiniteAlgebra& a, const Subset& s);
Json verdict_json(const Verdict& v, const FiniteAlgebra& a);
Json table_json(const FiniteAlgebra& a, bool squig);

// Aligned "name  status  cases  violations" lines plus first violations.
std::string format_suite(const SuiteReport& r);
Json suite_json(const SuiteReport& r);
// "ok", "refuted" (known-false family with a counterexample), "FAILED".
std::string family_status(const FamilyResult& f);

}  // namespace psbck
