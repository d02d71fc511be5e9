// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Expected tables are typed in from the published examples;
// derived values come from the brute-force oracles below, not the library.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "psbck/algebra.hpp"
#include "psbck/class_tower.hpp"
#include "psbck/deduction.hpp"
#include "psbck/document.hpp"
#include "psbck/generator.hpp"
#include "psbck/morphisms.hpp"
#include "psbck/operators.hpp"
#include "psbck/theorems.hpp"
#include "psbck/valuations.hpp"
#include "psbck/workbench.hpp"

using namespace psbck;

namespace {

using Clock = std::chrono::steady_clock;

std::string corpus(const std::string& f) { return std::string(PSBCK_ROOT_DIR) + "/corpus/" + f; }

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::vector<Element> ids(const FiniteAlgebra& a, const std::string& names) {
  std::vector<Element> out;
  for (const auto& w : words(names)) out.push_back(*a.find(w));
  return out;
}

std::string show(const FiniteAlgebra& a, const std::vector<Element>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + a.name(v[i]);
  return s + ")";
}

// Collects sub-claims of one criterion.
struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  Clock::time_point start = Clock::now();
  double limit_s = 0;  // 0: no runtime bound

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  bool report() {
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_s > 0 && s >= limit_s) failures.push_back("runtime " + std::to_string(s) + " s over the bound");
    const bool ok = failures.empty();
    std::printf("%s %d %s (%.2f s)\n", ok ? "PASS" : "FAIL", number, title.c_str(), s);
    for (const auto& f : failures) std::printf("       - %s\n", f.c_str());
    for (const auto& n : notes) std::printf("       note: %s\n", n.c_str());
    std::fflush(stdout);
    return ok;
  }
};

std::vector<std::vector<Element>> images(const std::vector<UnaryMap>& maps) {
  std::vector<std::vector<Element>> out;
  for (const auto& m : maps) out.push_back(m.image);
  return out;
}

std::vector<std::vector<Element>> rows(const FiniteAlgebra& a, const std::vector<std::string>& table) {
  std::vector<std::vector<Element>> out;
  for (const auto& r : table) out.push_back(ids(a, r));
  return out;
}

bool c1() {
  Criterion c{1, "golden enumeration: interior and very true operators of the four-element algebra"};
  c.limit_s = 1.0;
  const Document d = load_document(corpus("ex_2_5.alg"));
  const AlgebraRef a = d.algebra("A");
  const auto into = rows(*a, {"1 a a a", "1 a b a", "1 a b c", "1 a c c", "a a a a", "b a b a", "b a b c",
                              "c a c c"});
  const auto vto = rows(*a, {"1 a a a", "1 a b a", "1 a b c", "1 a c c"});
  c.expect(images(enumerate_interior(a)) == into, "interior operators differ from the 8 tabulated maps");
  c.expect(images(enumerate_vto(a)) == vto, "very true operators differ from the 4 tabulated maps");
  return c.report();
}

bool c2() {
  Criterion c{2, "golden composition: v1.v2 = v2.v1 = v1 very true; v4.v2 != v2.v4 and v4.v2 not very true"};
  const Document d = load_document(corpus("ex_2_5.alg"));
  const UnaryMap &v1 = d.map("v1"), &v2 = d.map("v2"), &v4 = d.map("v4");
  const FiniteAlgebra& a = *v1.parent;
  // (f.g)(x) = f(g(x)), computed here by hand
  auto comp = [&](const UnaryMap& f, const UnaryMap& g) {
    std::vector<Element> out;
    for (Element x = 0; x < a.size(); ++x) out.push_back(f(g(x)));
    return out;
  };
  c.expect(compose(v1, v2).image == comp(v1, v2) && compose(v4, v2).image == comp(v4, v2),
           "compose disagrees with pointwise composition");
  c.expect(comp(v1, v2) == v1.image && comp(v2, v1) == v1.image, "v1.v2 or v2.v1 is not v1");
  c.expect(is_vto(compose(v1, v2)).ok, "v1.v2 is not certified very true");
  c.expect(comp(v4, v2) != comp(v2, v4), "v4.v2 = v2.v4");
  c.expect(!is_vto(compose(v4, v2)).ok, "v4.v2 " + show(a, comp(v4, v2)) + " passes as very true");
  return c.report();
}

bool c3() {
  Criterion c{3, "golden deduction: DS = {{1},{1,b},A}; DS^v1 = DS^v4 = {{1},A}; DS^v2 = DS^v3 = DS"};
  const Document d = load_document(corpus("ex_2_5.alg"));
  const AlgebraRef a = d.algebra("A");
  auto set = [&](const std::string& names) {
    Subset s(a->size());
    for (Element x : ids(*a, names)) s.insert(x);
    return s;
  };
  const std::vector<Subset> all = {set("1"), set("1 b"), set("1 a b c")};
  const std::vector<Subset> trivial = {set("1"), set("1 a b c")};
  c.expect(enumerate_ds(*a) == all, "DS(A) differs");
  c.expect(enumerate_ds_v(d.map("v1")) == trivial, "DS^v1 differs");
  c.expect(enumerate_ds_v(d.map("v4")) == trivial, "DS^v4 differs");
  c.expect(enumerate_ds_v(d.map("v2")) == all, "DS^v2 differs");
  c.expect(enumerate_ds_v(d.map("v3")) == all, "DS^v3 differs");
  return c.report();
}

bool c4() {
  Criterion c{4, "golden morphisms: 10 operators, HOM = {psi1,psi2,psi3}, VHOM = {psi1,psi2} for v1..v9, all for v10"};
  c.limit_s = 10.0;
  const Document d = load_document(corpus("ex_2_6.alg"));
  const AlgebraRef a = d.algebra("A");
  const auto vto = rows(*a, {"1 a b c d e", "1 a e a a e", "1 a e a d e", "1 a e c a e", "1 e b b b e",
                             "1 e b b d e", "1 e b c b e", "1 e e c e e", "1 e e e d e", "1 e e e e e"});
  c.expect(images(enumerate_vto(a)) == vto, "very true operators differ from the 10 tabulated maps");
  const auto psi = rows(*a, {"1 1 1 1 1 1", "1 a b c d e", "1 b a d c e"});
  std::vector<std::vector<Element>> homs;
  for (const auto& h : enumerate_hom(a, a)) homs.push_back(h.map);
  c.expect(homs == psi, "HOM(A,A) differs from {psi1,psi2,psi3}");
  for (int i = 1; i <= 10; ++i) {
    const UnaryMap& v = d.map("v" + std::to_string(i));
    std::vector<std::vector<Element>> got;
    for (const auto& h : enumerate_vthom(v, v)) got.push_back(h.map);
    // independent check: psi commutes with v pointwise
    std::vector<std::vector<Element>> oracle;
    for (const auto& p : psi) {
      bool ok = true;
      for (Element x = 0; x < a->size(); ++x) ok = ok && p[v(x)] == v(p[x]);
      if (ok) oracle.push_back(p);
    }
    c.expect(got == oracle, "VHOM for v" + std::to_string(i) + " disagrees with the commutation oracle");
    const auto claimed = i == 10 ? psi : std::vector<std::vector<Element>>{psi[0], psi[1]};
    if (got != claimed) {
      std::string names;
      for (std::size_t k = 0; k < psi.size(); ++k)
        if (std::find(got.begin(), got.end(), psi[k]) != got.end()) names += (names.empty() ? "psi" : ", psi") + std::to_string(k + 1);
      c.expect(false, "VHOM for v" + std::to_string(i) + " is {" + names + "}, claimed {" +
                          (i == 10 ? "psi1, psi2, psi3" : "psi1, psi2") + "}");
    }
  }
  if (!c.failures.empty())
    c.notes.push_back("v1 is the identity, which every homomorphism commutes with; the claimed set for v1 is wrong");
  return c.report();
}

bool c5() {
  Criterion c{5, "golden valuation: phi.v = (0,3,1,3) and is a pseudo-valuation"};
  const Document d = load_document(corpus("ex_2_5.alg"));
  const PseudoValuation& phi = d.valuation("phi");
  const PseudoValuation pv = compose_with_vto(phi, d.map("v2"));
  const std::vector<Rational> want = {Rational(0), Rational(3), Rational(1), Rational(3)};
  c.expect(pv.values == want, "phi.v differs from (0,3,1,3)");
  c.expect(is_pseudo_valuation(phi).ok, "phi is not a pseudo-valuation");
  c.expect(is_pseudo_valuation(pv).ok, "phi.v is not a pseudo-valuation");
  // independent check of the defining inequality with exact rationals
  const FiniteAlgebra& a = *pv.parent;
  bool ok = pv(a.one()) == Rational(0);
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      ok = ok && pv(y) - pv(x) <= std::min(pv(a.arrow(x, y)), pv(a.squig(x, y)));
  c.expect(ok, "oracle finds phi.v violating the valuation inequality");
  return c.report();
}

bool c6() {
  Criterion c{6, "golden Smarandache: 5 operators, Q = {0,c,d,1} found, SVTO = {v'1,v'2,v'3}, restrictions, product table"};
  const Document d = load_document(corpus("ex_6_8.alg"));
  const AlgebraRef a = d.algebra("A");
  const auto vto = rows(*a, {"0 0 0 0 0 1", "0 0 0 c d 1", "0 0 0 d d 1", "0 a a c d 1", "0 a b c d 1"});
  c.expect(images(enumerate_vto(a)) == vto, "very true operators differ from the 5 tabulated maps");

  const Subset q = d.subset("Q").value;
  bool found = false;
  for (const auto& cand : smarandache_search(a)) found = found || cand.q == q;
  c.expect(found, "search does not find Q = {0,c,d,1}");

  const AlgebraRef qa = make_subalgebra(a, q).algebra;
  const auto primes = rows(*qa, {"0 0 0 1", "0 c d 1", "0 d d 1"});
  const auto sv = svto(a, q);
  c.expect(images(sv) == primes, "SVTO on Q differs from {v'1, v'2, v'3}");
  auto restricted = [&](const std::string& v) -> std::vector<Element> {
    const Restriction r = restrict_vto(d.map(v), q);
    return r.map ? r.map->image : std::vector<Element>{};
  };
  c.expect(restricted("v1") == primes[0], "v'1 != v1|Q");
  c.expect(restricted("v2") == primes[1] && restricted("v4") == primes[1] && restricted("v5") == primes[1],
           "v'2 != v2|Q = v4|Q = v5|Q");
  c.expect(restricted("v3") == primes[2], "v'3 != v3|Q");

  // residuation oracle: x.y = least z with x <= y->z
  const FiniteAlgebra& Q = *qa;
  std::vector<std::vector<Element>> oracle(Q.size(), std::vector<Element>(Q.size()));
  for (Element x = 0; x < Q.size(); ++x)
    for (Element y = 0; y < Q.size(); ++y) {
      std::vector<Element> cands;
      for (Element z = 0; z < Q.size(); ++z)
        if (Q.leq(x, Q.arrow(y, z))) cands.push_back(z);
      Element least = cands.front();
      for (Element z : cands)
        if (Q.leq(z, least)) least = z;
      oracle[x][y] = least;
    }
  const ProductStructure p = require_pp(Q);
  bool same = true;
  for (Element x = 0; x < Q.size(); ++x)
    for (Element y = 0; y < Q.size(); ++y) same = same && p.product(x, y) == oracle[x][y];
  c.expect(same, "library product differs from the residuation oracle");
  const AlgebraEntry& aq = d.entry("AQ");
  c.expect(*d.algebra("AQ") == Q, "corpus Q algebra differs from the induced subalgebra");
  c.expect(aq.declared_product && product_mismatches(Q, *aq.declared_product).empty(),
           "corpus product table differs from the residuation oracle");
  // the printed table read with its own row labels (rows 0, d, c, 1)
  const auto printed_as_labelled = rows(Q, {"0 0 0 0", "0 d d d", "0 d d c", "0 c d 1"});
  const auto mism = product_mismatches(Q, printed_as_labelled);
  c.expect(mism.size() == 2, "printed table should disagree in exactly the two swapped cells");
  c.notes.push_back("printed product table with its own row labels disagrees at " + std::to_string(mism.size()) +
                    " cells (rows c and d swapped); x.1 = x fixes the labels");
  return c.report();
}

std::vector<AlgebraRef> corpus_algebras() {
  std::vector<AlgebraRef> out;
  for (const char* f : {"ex_1_element.alg", "chain_2.alg", "goedel_4.alg", "ex_2_5.alg", "ex_2_6.alg", "ex_6_8.alg"}) {
    const Document d = load_document(corpus(f));
    for (const auto& e : d.algebras) {
      RawAlgebra raw = e.raw;
      raw.name = std::string(f) + ":" + e.name;
      out.push_back(certify(raw));
    }
  }
  return out;
}

bool c7() {
  Criterion c{7, "property suites over corpus and generated algebras: zero violations"};
  std::vector<AlgebraRef> algebras = corpus_algebras();
  const auto generated = generate_algebras(2024, 120, 6);
  algebras.insert(algebras.end(), generated.begin(), generated.end());
  const SuiteReport r = run_suite(algebras);
  c.expect(generated.size() >= 100, "fewer than 100 generated algebras");
  c.expect(r.skipped.empty(), std::to_string(r.skipped.size()) + " algebras skipped");
  // lifting through the dense elements is not among the listed statements
  for (const FamilyResult& f : r.families) {
    if (f.name == "den-lift") continue;
    c.expect(f.cases > 0, f.name + ": no instances");
    if (f.violations)
      c.expect(false, f.name + ": " + std::to_string(f.violations) + " violations in " + std::to_string(f.cases) +
                          " cases; first " + f.first_violation);
  }
  std::size_t total = 0;
  for (const FamilyResult& f : r.families) total += f.cases;
  c.notes.push_back(std::to_string(algebras.size()) + " algebras (" + std::to_string(generated.size()) +
                    " generated), " + std::to_string(r.families.size()) + " families, " + std::to_string(total) +
                    " cases");
  if (!c.failures.empty())
    c.notes.push_back("the failing families are statements with explicit finite counterexamples; their corrected "
                      "forms (vto-composition-both-ways, vds-congruence-compatibility) are clean");
  return c.report();
}

bool c8() {
  Criterion c{8, "derived laws hold on every corpus and generated algebra"};
  std::vector<AlgebraRef> algebras = corpus_algebras();
  const auto generated = generate_algebras(2024, 120, 6);
  algebras.insert(algebras.end(), generated.begin(), generated.end());
  for (const auto& a : algebras) {
    const LawReport r = derived_law_suite(*a);
    if (const LawCheck* bad = r.first_failure()) c.expect(false, a->label() + ": " + bad->law);
  }
  c.notes.push_back(std::to_string(algebras.size()) + " algebras");
  return c.report();
}

bool c9() {
  Criterion c{9, "determinism: every corpus command gives byte-identical output twice"};
  std::filesystem::current_path(PSBCK_ROOT_DIR);
  std::ifstream in("corpus/commands.txt");
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    auto w = words(line);
    if (w.empty() || w[0][0] == '#') continue;
    // rebuild a Request the way the CLI would
    Request r;
    std::size_t i = 2;
    r.command = w[i++];
    if (r.command == "enum" || r.command == "valuation") r.kind = w[i++];
    for (; i < w.size(); ++i) {
      const std::string& t = w[i];
      auto val = [&]() -> std::string { return w[++i]; };
      if (t == "--json") r.json = true;
      else if (t == "--algebra") r.algebra = val();
      else if (t == "--vto") r.vto = val();
      else if (t == "--u") r.u = val();
      else if (t == "--ds") r.ds = val();
      else if (t == "--q") r.q = val();
      else if (t == "--phi") r.phi = val();
      else if (t == "--hom") r.hom = val();
      else if (t == "--to") r.to = val();
      else if (t == "--seed") r.seed = std::stoull(val());
      else if (t == "--generated") r.generated = std::stoul(val());
      else r.files.push_back(t);
    }
    const Outcome a = run(r), b = run(r);
    c.expect(a.out == b.out && a.err == b.err && a.exit_code == b.exit_code, w[0] + ": outputs differ");
    c.expect(std::to_string(a.exit_code) == w[1], w[0] + ": exit " + std::to_string(a.exit_code) + ", expected " + w[1]);
    ++n;
  }
  c.expect(n > 0, "no corpus commands found");
  c.notes.push_back(std::to_string(n) + " commands");
  return c.report();
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria = {c1, c2, c3, c4, c5, c6, c7, c8, c9};
  int failed = 0;
  for (const auto& crit : criteria) {
    try {
      if (!crit()) ++failed;
    } catch (const std::exception& e) {
      std::printf("FAIL (exception) %s\n", e.what());
      ++failed;
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
