#include "psbck/report.hpp"

#include <algorithm>

namespace psbck {

std::string format_image(const FiniteAlgebra& a, const std::vector<Element>& image) {
  std::string out = "(";
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i) out += ' ';
    out += a.name(image[i]);
  }
  return out + ")";
}

std::string format_map(const UnaryMap& m) { return format_image(*m.parent, m.image); }

std::string format_subset(const FiniteAlgebra& a, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s.elements()) {
    if (!first) out += ", ";
    first = false;
    out += a.name(x);
  }
  return out + "}";
}

std::string format_witness(const FiniteAlgebra& a, const std::vector<Element>& w) {
  if (w.empty()) return {};
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += a.name(w[i]);
  }
  return out + ")";
}

Json names_json(const FiniteAlgebra& a, const std::vector<Element>& ids) {
  Json j = Json::array();
  for (Element x : ids) j.push_back(a.name(x));
  return j;
}

Json subset_json(const FiniteAlgebra& a, const Subset& s) { return names_json(a, s.elements()); }

Json verdict_json(const Verdict& v, const FiniteAlgebra& a) {
  Json j;
  j["ok"] = v.ok;
  if (!v.ok) {
    j["axiom"] = v.axiom;
    j["witness"] = names_json(a, v.witness);
  }
  return j;
}

Json table_json(const FiniteAlgebra& a, bool squig) {
  Json rows = Json::array();
  for (Element x = 0; x < a.size(); ++x) {
    std::vector<Element> row;
    for (Element y = 0; y < a.size(); ++y) row.push_back(squig ? a.squig(x, y) : a.arrow(x, y));
    rows.push_back(names_json(a, row));
  }
  return rows;
}

std::string family_status(const FamilyResult& f) {
  if (f.clean()) return f.cases == 0 ? "n/a" : "ok";
  return f.expectation == Expectation::kKnownFalse ? "refuted" : "FAILED";
}

std::string format_suite(const SuiteReport& r) {
  std::size_t w = 0;
  for (const auto& f : r.families) w = std::max(w, f.name.size());
  std::string out = "suite: " + std::to_string(r.algebras.size()) + " algebras, " +
                    std::to_string(r.skipped.size()) + " skipped\n";
  for (const auto& f : r.families) {
    std::string line = "  " + f.name + std::string(w - f.name.size() + 2, ' ');
    std::string status = family_status(f);
    line += status + std::string(9 - std::min<std::size_t>(8, status.size()), ' ');
    line += std::to_string(f.cases) + " cases";
    if (f.violations) line += ", " + std::to_string(f.violations) + " violations";
    out += line + "\n";
    if (f.violations) out += "      first: " + f.first_violation + "\n";
  }
  for (const auto& s : r.skipped) out += "  skipped " + s + "\n";
  std::size_t refuted = 0;
  for (const auto& f : r.families)
    if (!f.clean() && f.expectation == Expectation::kKnownFalse) ++refuted;
  out += r.passed() ? "result: pass" : "result: FAIL";
  if (refuted) out += " (" + std::to_string(refuted) + " known-false families refuted)";
  return out + "\n";
}

Json suite_json(const SuiteReport& r) {
  Json j;
  j["algebras"] = r.algebras;
  j["skipped"] = r.skipped;
  Json fams = Json::array();
  for (const auto& f : r.families) {
    Json fj;
    fj["name"] = f.name;
    fj["statement"] = f.statement;
    fj["expected"] = f.expectation == Expectation::kHolds ? "holds" : "known-false";
    fj["status"] = family_status(f);
    fj["algebras"] = f.algebras;
    fj["cases"] = f.cases;
    fj["violations"] = f.violations;
    if (f.violations) fj["first_violation"] = f.first_violation;
    fams.push_back(fj);
  }
  j["families"] = fams;
  j["passed"] = r.passed();
  return j;
}

}  // namespace psbck
