#include "psbck/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "psbck/class_tower.hpp"
#include "psbck/deduction.hpp"
#include "psbck/error.hpp"
#include "psbck/limits.hpp"
#include "psbck/morphisms.hpp"
#include "psbck/operators.hpp"
#include "psbck/valuations.hpp"

namespace psbck {
namespace {

constexpr auto kHolds = Expectation::kHolds;
constexpr auto kKnownFalse = Expectation::kKnownFalse;

FamilyResult family(std::string name, std::string statement, Expectation e = kHolds) {
  FamilyResult f;
  f.name = std::move(name);
  f.statement = std::move(statement);
  f.expectation = e;
  return f;
}

std::string show(const FiniteAlgebra& a, Element x) { return a.name(x); }

std::string show(const UnaryMap& m) {
  std::string out = "(";
  for (Element x = 0; x < m.size(); ++x) {
    if (x) out += ' ';
    out += m.parent->name(m(x));
  }
  return out + ")";
}

std::string show(const FiniteAlgebra& a, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s.elements()) {
    if (!first) out += ',';
    out += a.name(x);
    first = false;
  }
  return out + "}";
}

std::string show(const Homomorphism& h) {
  std::string out = "(";
  for (Element x = 0; x < h.map.size(); ++x) {
    if (x) out += ' ';
    out += h.target->name(h.map[x]);
  }
  return out + ")";
}

// Records outcomes for one algebra.
class Recorder {
 public:
  Recorder(const AlgebraRef& a, SuiteReport& r) : a_(a), report_(r) {}

  // One instance of `name`; `detail` is only built on a violation.
  void check(const std::string& name, bool ok, const std::function<std::string()>& detail) {
    FamilyResult& f = find(name);
    if (touched_.insert(name).second) ++f.algebras;
    ++f.cases;
    if (ok) return;
    if (f.violations++ == 0) f.first_violation = a_->label() + ": " + detail();
  }

  void verdict(const std::string& name, const Verdict& v, const FiniteAlgebra& on,
               const std::string& context) {
    check(name, v.ok, [&] { return context + " fails " + describe(v, on); });
  }

  void laws(const std::string& name, const LawReport& r, const FiniteAlgebra& on,
            const std::string& context = {}) {
    const LawCheck* bad = r.first_failure();
    check(name, bad == nullptr, [&] {
      std::string w;
      for (Element x : bad->witness) w += (w.empty() ? "" : ", ") + on.name(x);
      return (context.empty() ? "" : context + " ") + bad->law + " at (" + w + ")";
    });
  }

 private:
  FamilyResult& find(const std::string& name) {
    for (auto& f : report_.families)
      if (f.name == name) return f;
    throw std::logic_error("unknown family " + name);
  }

  AlgebraRef a_;
  SuiteReport& report_;
  std::set<std::string> touched_;
};

bool contains(const std::vector<Subset>& list, const Subset& s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

bool contains(const std::vector<UnaryMap>& list, const UnaryMap& m) {
  return std::find(list.begin(), list.end(), m) != list.end();
}

// ---- interior operators ---------------------------------------------------

void interior_families(const AlgebraRef& a, const std::vector<UnaryMap>& into, Recorder& rec) {
  for (const auto& phi : into) {
    for (const auto& psi : into) {
      const UnaryMap pp = compose(phi, psi), qp = compose(psi, phi);
      rec.check("interior-order-composition", pointwise_leq(phi, psi) == (pp == phi),
                [&] { return "phi=" + show(phi) + " psi=" + show(psi); });

      const bool commute = pp == qp;
      const bool interior = is_interior(pp).ok && is_interior(qp).ok;
      const bool doubled = compose(pp, pp) == pp && compose(qp, qp) == qp;
      rec.check("interior-commutation", commute == interior && interior == doubled, [&] {
        return "phi=" + show(phi) + " psi=" + show(psi) + " commute=" + std::to_string(commute) +
               " interior=" + std::to_string(interior) + " idempotent=" + std::to_string(doubled);
      });

      if (fix_points(phi) == fix_points(psi))
        rec.check("interior-fixpoints-determine", phi == psi,
                  [&] { return "phi=" + show(phi) + " psi=" + show(psi); });
    }

    // arithmetic inequalities
    const FiniteAlgebra& A = *a;
    bool ok = true;
    std::string where;
    auto fail = [&](const std::string& what, Element x, Element y) {
      if (ok) where = "phi=" + show(phi) + " " + what + " at (" + show(A, x) + ", " + show(A, y) + ")";
      ok = false;
    };
    for (Element x = 0; x < A.size(); ++x)
      for (Element y = 0; y < A.size(); ++y) {
        if (!A.leq(A.arrow(x, phi(y)), A.arrow(phi(x), y)) || !A.leq(A.squig(x, phi(y)), A.squig(phi(x), y)))
          fail("x->phi(y) <= phi(x)->y", x, y);
        if (!A.leq(phi(A.arrow(x, y)), A.arrow(phi(x), y)) || !A.leq(phi(A.squig(x, y)), A.squig(phi(x), y)))
          fail("phi(x->y) <= phi(x)->y", x, y);
        if (!A.bounded()) continue;
        const Element z = *A.zero();
        auto mi = [&](Element t) { return A.arrow(t, z); };
        auto si = [&](Element t) { return A.squig(t, z); };
        if (phi(z) != z) fail("phi(0) = 0", z, z);
        if (!A.leq(phi(mi(x)), mi(phi(x))) || !A.leq(phi(si(x)), si(phi(x)))) fail("phi(x^-) <= phi(x)^-", x, x);
        if (!A.leq(x, si(phi(mi(x)))) || !A.leq(x, mi(phi(si(x))))) fail("x <= phi(x^-)^~", x, x);
        if (!A.leq(phi(A.arrow(x, y)), A.squig(mi(y), mi(x))) ||
            !A.leq(phi(A.squig(x, y)), A.arrow(si(y), si(x))))
          fail("phi(x->y) <= y^- ~> x^-", x, y);
      }
    rec.check("interior-arithmetic", ok, [&] { return where; });
  }
}

// ---- very true operators --------------------------------------------------

void vto_families(const AlgebraRef& a, const std::vector<UnaryMap>& into, const std::vector<UnaryMap>& vto,
                  Recorder& rec) {
  const FiniteAlgebra& A = *a;
  for (const auto& v : vto) {
    rec.check("vto-inside-interior", contains(into, v), [&] { return "v=" + show(v); });

    bool ok = true;
    std::string where;
    auto fail = [&](const std::string& what) {
      if (ok) where = "v=" + show(v) + " " + what;
      ok = false;
    };
    for (Element x = 0; x < A.size(); ++x) {
      if ((v(x) == A.one()) != (x == A.one())) fail("v(x)=1 iff x=1 at " + show(A, x));
      if (v(v(x)) != v(x)) fail("vv(x)=v(x) at " + show(A, x));
      for (Element y = 0; y < A.size(); ++y) {
        if (A.leq(x, y) && !A.leq(v(x), v(y))) fail("monotone at (" + show(A, x) + ", " + show(A, y) + ")");
        if (A.leq(v(x), y) != A.leq(v(x), v(y)))
          fail("v(x)<=y iff v(x)<=v(y) at (" + show(A, x) + ", " + show(A, y) + ")");
      }
    }
    if (image_set(v) != fix_points(v)) fail("Im(v) = Fix(v)");
    if (image_set(v).is_full() && v != identity_map(a)) fail("surjective but not the identity");
    if (kernel(v) != Subset::of(A.size(), {A.one()})) fail("Ker(v) = {1}");
    if (!is_deductive_system(A, kernel(v))) fail("Ker(v) is a deductive system");
    rec.check("vto-basic-facts", ok, [&] { return where; });

    for (const auto& u : vto) {
      if (image_set(v) == image_set(u))
        rec.check("vto-images-determine", v == u, [&] { return "v=" + show(v) + " w=" + show(u); });
      const UnaryMap c = compose(v, u), d = compose(u, v);
      const bool is_very_true = is_vto(c).ok;
      const bool both = is_very_true && is_vto(d).ok;
      const bool commute = c == d;
      rec.check("vto-composition-commuting", is_very_true == commute, [&] {
        return "v=" + show(v) + " w=" + show(u) + ": v.w is " + (is_very_true ? "" : "not ") +
               "very true but v.w " + (commute ? "=" : "!=") + " w.v";
      });
      rec.check("vto-composition-both-ways", both == commute, [&] {
        return "v=" + show(v) + " w=" + show(u) + ": both composites very true=" + std::to_string(both) +
               " commute=" + std::to_string(commute);
      });
    }
  }
}

void hedge_families(const AlgebraRef& a, const std::vector<UnaryMap>& vto, Recorder& rec) {
  if (!a->bounded()) return;
  for (const auto& v : vto) {
    SigmaHedges s = sigma_hedges(v);
    Verdict c1 = is_closure(s.first), c2 = is_closure(s.second);
    Verdict st = is_vtst(v, s.first, s.second);
    Verdict idst = is_vtst(v, identity_map(a), identity_map(a));
    rec.check("sigma-hedges", c1.ok && c2.ok && st.ok && idst.ok, [&] {
      if (!c1.ok) return "v=" + show(v) + " first hedge not closure: " + describe(c1, *a);
      if (!c2.ok) return "v=" + show(v) + " second hedge not closure: " + describe(c2, *a);
      if (!st.ok) return "v=" + show(v) + " canonical pair: " + describe(st, *a);
      return "v=" + show(v) + " identity pair: " + describe(idst, *a);
    });

    const UnaryMap id = identity_map(a);
    for (const auto& s1 : enumerate_st_components(v, true))
      rec.check("hedge-sandwich", pointwise_leq(id, s1) && pointwise_leq(s1, s.first),
                [&] { return "v=" + show(v) + " s1=" + show(s1); });
    for (const auto& s2 : enumerate_st_components(v, false))
      rec.check("hedge-sandwich", pointwise_leq(id, s2) && pointwise_leq(s2, s.second),
                [&] { return "v=" + show(v) + " s2=" + show(s2); });
  }

  if (is_linear(*a)) {
    const UnaryMap g = globalization(a);
    const auto inputs = enumerate_monotone_st_inputs(a);
    for (const auto& s1 : inputs)
      for (const auto& s2 : inputs)
        rec.verdict("globalization-chain-hedges", is_vtst(g, s1, s2), *a,
                    "s1=" + show(s1) + " s2=" + show(s2));
  }
}

std::vector<PseudoValuation> sample_valuations(const AlgebraRef& a, const std::vector<Subset>& ds) {
  const std::size_t n = a->size();
  std::vector<PseudoValuation> out;
  out.push_back(make_valuation(a, std::vector<Rational>(n, Rational(0))));
  // c times the indicator of the complement of a deductive system, and sums
  // of two of them with different weights
  std::vector<std::vector<Rational>> indicators;
  for (const auto& d : ds) {
    std::vector<Rational> vals(n, Rational(0));
    for (Element x = 0; x < n; ++x)
      if (!d.contains(x)) vals[x] = Rational(1);
    indicators.push_back(vals);
  }
  for (std::size_t i = 0; i < indicators.size(); ++i) {
    std::vector<Rational> vals = indicators[i];
    for (auto& r : vals) r *= Rational(static_cast<std::int64_t>(i + 2), 3);
    out.push_back(make_valuation(a, vals));
    for (std::size_t j = i + 1; j < indicators.size(); ++j) {
      std::vector<Rational> sum(n);
      for (Element x = 0; x < n; ++x) sum[x] = indicators[i][x] + Rational(1, 2) * indicators[j][x];
      out.push_back(make_valuation(a, sum));
    }
  }
  return out;
}

void valuation_families(const AlgebraRef& a, const std::vector<UnaryMap>& vto, const std::vector<Subset>& ds,
                        Recorder& rec) {
  for (const auto& phi : sample_valuations(a, ds)) {
    rec.verdict("valuation-samples", is_pseudo_valuation(phi), *a, "sample valuation");
    for (const auto& v : vto)
      rec.verdict("valuation-composition", is_pseudo_valuation(compose_with_vto(phi, v)), *a, "v=" + show(v));
  }
}

// ---- deductive systems and quotients ---------------------------------------

void deduction_families(const AlgebraRef& a, const std::vector<UnaryMap>& vto, const std::vector<Subset>& ds,
                        const std::vector<Subset>& dsn, Recorder& rec) {
  const FiniteAlgebra& A = *a;
  for (const auto& h : dsn)
    rec.check("ds-inclusions", contains(ds, h), [&] { return "normal " + show(A, h) + " missing from DS"; });
  if (A.bounded() && is_glivenko(A))
    rec.check("dense-normal", contains(dsn, dense_elements(A)),
              [&] { return "Den(A)=" + show(A, dense_elements(A)) + " not normal"; });

  for (const auto& v : vto) {
    const auto dsv = enumerate_ds_v(v);
    const auto dsnv = enumerate_ds_nv(v);
    bool ok = true;
    std::string where;
    for (const auto& d : dsv)
      if (!contains(ds, d)) ok = false, where = show(A, d) + " in DS^v but not DS";
    for (const auto& d : dsnv)
      if (!contains(dsn, d)) ok = false, where = show(A, d) + " in DS_n^v but not DS_n";
    for (const Subset& d : {Subset::of(A.size(), {A.one()}), A.full_set(), kernel(v)})
      if (!contains(dsv, d)) ok = false, where = show(A, d) + " missing from DS^v";
    rec.check("ds-inclusions", ok, [&] { return "v=" + show(v) + " " + where; });

    for (const auto& h : dsnv) {
      Quotient q = congruence_from(a, h);
      LiftedOperator l = lift_vto_to_quotient(q, v);
      rec.verdict("quotient-lift", l.verdict, *q.algebra, "v=" + show(v) + " H=" + show(A, h));

      // projection facts
      Homomorphism pi = projection(q);
      Verdict vh = is_vthom({pi, v, l.map});
      Subset ker_pi = hom_kernel(pi);
      Subset pre = preimage_of(pi, kernel(l.map));
      Subset v_pre_h(A.size());
      for (Element x = 0; x < A.size(); ++x)
        if (h.contains(v(x))) v_pre_h.insert(x);
      Subset img = image_of(pi, kernel(v));
      rec.check("projection-facts",
                vh.ok && ker_pi == h && pre.is_subset_of(v_pre_h) && img.is_subset_of(kernel(l.map)),
                [&] { return "v=" + show(v) + " H=" + show(A, h); });
    }

    auto bad = congruence_violation(v, false);
    rec.check("congruence-compatibility", !bad, [&] {
      return "v=" + show(v) + " H=" + show(A, bad->h) + " relates " + show(A, bad->x) + " and " +
             show(A, bad->y) + " but not " + show(A, v(bad->x)) + " and " + show(A, v(bad->y));
    });
    auto bad_v = congruence_violation(v, true);
    rec.check("vds-congruence-compatibility", !bad_v, [&] {
      return "v=" + show(v) + " H=" + show(A, bad_v->h) + " at (" + show(A, bad_v->x) + ", " +
             show(A, bad_v->y) + ")";
    });
  }
}

void lift_families(const AlgebraRef& a, const std::vector<UnaryMap>& into, const std::vector<UnaryMap>& vto,
                   Recorder& rec) {
  if (!a->bounded() || !is_glivenko(*a)) return;
  auto run = [&](const UnaryMap& f, OperatorKind kind, const char* what) {
    LiftedOperator reg = lift_to_reg(f, kind);
    rec.verdict("reg-lift", reg.verdict, *reg.algebra, std::string(what) + "=" + show(f));
    std::string failure;
    try {
      LiftedOperator den = lift_to_den_quotient(f, kind);
      if (!den.verdict.ok) failure = describe(den.verdict, *den.algebra);
    } catch (const WorkbenchError& e) {
      if (e.code() != ErrorCode::kWellDefinednessFailure) throw;
      failure = e.what();
    }
    rec.check("den-lift", failure.empty(), [&] { return std::string(what) + "=" + show(f) + ": " + failure; });
  };
  for (const auto& f : into) run(f, OperatorKind::kInterior, "phi");
  for (const auto& v : vto) run(v, OperatorKind::kVeryTrue, "v");
}

// ---- homomorphisms ----------------------------------------------------------

void morphism_families(const AlgebraRef& a, const std::vector<UnaryMap>& vto, Recorder& rec) {
  if (a->size() > limits().endomorphism_enumeration) return;
  const auto homs = enumerate_hom(a, a);
  auto check_vthom = [&](const VtHomomorphism& f, const std::string& context) {
    TransportReport t = transport(f);
    const LawCheck* bad = t.first_failure();
    rec.check("transport", bad == nullptr, [&] { return context + " " + bad->law; });

    const Subset ker = hom_kernel(f.base);
    for (const auto& h : enumerate_ds_nv(f.v)) {
      if (!h.is_subset_of(ker)) continue;
      Factorization fx = factor(f, h);
      rec.check("factorization", fx.ok(), [&] {
        return context + " H=" + show(*a, h) + " commutes=" + std::to_string(fx.commutes) +
               " unique=" + std::to_string(fx.unique) + " image=" + std::to_string(fx.image_matches) +
               " kernel=" + std::to_string(fx.kernel_matches);
      });
    }
    FirstIsomorphism iso = first_isomorphism(f);
    rec.check("first-isomorphism", iso.ok(), [&] { return context; });
  };

  for (const auto& v : vto)
    for (const auto& u : vto)
      for (const auto& h : homs) {
        VtHomomorphism f{h, v, u};
        if (!is_vthom(f)) continue;
        check_vthom(f, "psi=" + show(h) + " v=" + show(v) + " u=" + show(u));
      }
  // projections onto quotients give surjective VT homomorphisms that are not
  // endomorphisms
  for (const auto& v : vto)
    for (const auto& h : enumerate_ds_nv(v)) {
      Quotient q = congruence_from(a, h);
      LiftedOperator l = lift_vto_to_quotient(q, v);
      check_vthom({projection(q), v, l.map}, "projection H=" + show(*a, h) + " v=" + show(v));
    }
}

// ---- class tower --------------------------------------------------------------

void class_families(const AlgebraRef& a, const std::vector<UnaryMap>& into, const std::vector<UnaryMap>& vto,
                    Recorder& rec) {
  const FiniteAlgebra& A = *a;
  ClassificationReport r = classify(A);
  {
    std::string broken;
    if (r.mv.holds && !r.bl.holds) broken = "pseudo-MV but not pseudo-BL";
    if (r.bl.holds && !(r.mtl.holds && r.divisible.holds)) broken = "pseudo-BL but not pseudo-MTL and divisible";
    if ((r.mtl.holds || r.divisible.holds) && !r.flw.holds) broken = "pseudo-MTL or divisible but not FLw";
    if (r.flw.holds && !(r.pp.holds && r.lattice.holds && r.bounded.holds)) broken = "FLw without its parts";
    rec.check("class-inclusions", broken.empty(), [&] { return broken; });
  }
  if (!r.pp.holds) return;
  const ProductStructure& p = *r.product;
  rec.laws("product-laws", product_law_suite(A), A);

  for (const auto& v : vto) rec.laws("vt-product-inequalities", vt_pp_suite(v), A, "v=" + show(v));
  // interior maps fixing 1 satisfy VT1-VT3, so VT4 is the only axiom in play
  for (const auto& f : into) {
    if (f(A.one()) != A.one()) continue;
    ImplicationForms forms = implication_forms(f, p);
    rec.check("implication-forms-agree", forms.plain == forms.with_z && forms.plain == forms.product, [&] {
      return "f=" + show(f) + " plain=" + std::to_string(forms.plain) + " with z=" +
             std::to_string(forms.with_z) + " product=" + std::to_string(forms.product);
    });
  }

  if (!r.flw.holds) return;
  rec.check("mv-identities", r.mv_identities && *r.mv_identities == r.mv.holds,
            [&] { return "identities and pseudo-MV disagree"; });

  for (const auto& v : enumerate_vto_flw(a)) {
    bool ok = true;
    std::string where;
    for (Element x = 0; x < A.size() && ok; ++x)
      for (Element y = 0; y < A.size() && ok; ++y) {
        const Element m = v(p.meet_of(x, y));
        const Element mm = p.meet_of(v(x), v(y));
        if (!A.leq(p.product(v(A.arrow(x, y)), v(x)), m) || !A.leq(p.product(v(x), v(A.squig(x, y))), m) ||
            !A.leq(m, mm)) {
          ok = false;
          where = "v=" + show(v) + " at (" + show(A, x) + ", " + show(A, y) + ")";
        }
      }
    rec.check("flw-meet-bounds", ok, [&] { return where; });
  }

  if (r.mtl.holds) {
    for (const auto& v : vto) {
      const bool vt5 = is_vto_flw(v).ok;
      const bool prime = check_vt5_prime(v, p).ok;
      rec.check("vt5-prelinear-form", vt5 == prime, [&] {
        return "v=" + show(v) + " VT5=" + std::to_string(vt5) + " prelinear form=" + std::to_string(prime);
      });
    }
  }
  Agreement mtl = mtl_characterization(a);
  rec.check("mtl-characterization", mtl.agree(), [&] {
    return "operators side " + std::to_string(mtl.left) + ", class side " + std::to_string(mtl.right);
  });
  Agreement mv = mv_characterization(a);
  rec.check("mv-characterization", mv.agree(), [&] {
    return "operators side " + std::to_string(mv.left) + ", class side " + std::to_string(mv.right);
  });
}

void smarandache_families(const AlgebraRef& a, const std::vector<UnaryMap>& vto, Recorder& rec) {
  if (!a->bounded() || a->size() > limits().smarandache_search) return;
  const auto found = smarandache_search(a);
  std::map<std::uint64_t, std::vector<UnaryMap>> maps;
  for (const auto& c : found) maps[c.q.bits()] = svto(a, c.q);

  for (const auto& big : found)
    for (const auto& small : found) {
      if (big.q == small.q || !small.q.is_subset_of(big.q)) continue;
      const auto& over_small = maps[small.q.bits()];
      for (const auto& m : maps[big.q.bits()]) {
        // m lives on the big subalgebra; move it to parent ids and back down
        bool stays = true;
        std::vector<Element> image(small.sub.embedding.size());
        for (std::size_t i = 0; i < image.size(); ++i) {
          const Element parent_x = small.sub.embedding[i];
          const Element parent_y = big.sub.embedding[m(big.sub.to_sub(parent_x))];
          if (!small.sub.index[parent_y]) {
            stays = false;
            break;
          }
          image[i] = *small.sub.index[parent_y];
        }
        if (!stays) continue;
        UnaryMap restricted{small.sub.algebra, image};
        rec.check("svto-antitone", contains(over_small, restricted), [&] {
          return "Q1=" + show(*a, small.q) + " Q2=" + show(*a, big.q) + " map " + show(m);
        });
      }
    }

  if (!is_linear(*a)) return;
  for (const auto& c : found)
    for (const auto& v : vto) {
      bool maps_in = true;
      for (Element x : c.q.elements()) maps_in = maps_in && c.q.contains(v(x));
      if (!maps_in) continue;
      Restriction r = restrict_vto(v, c.q);
      rec.check("linear-restriction", r.map.has_value(),
                [&] { return "v=" + show(v) + " Q=" + show(*a, c.q) + ": " + r.reason; });
    }
}

}  // namespace

const std::vector<FamilyResult>& family_catalog() {
  static const std::vector<FamilyResult> catalog = {
      family("derived-laws", "exchange, monotonicity, prefixing and negation laws of the axioms"),
      family("interior-order-composition", "phi <= psi iff phi.psi = phi, over all interior pairs"),
      family("interior-commutation",
             "phi.psi = psi.phi iff both composites are interior iff both composites are idempotent"),
      family("interior-fixpoints-determine", "interior operators with the same fixed points are equal"),
      family("interior-arithmetic",
             "x->phi(y) <= phi(x)->y, phi(x->y) <= phi(x)->y; bounded: phi(0)=0, phi(x^-) <= phi(x)^-, "
             "x <= phi(x^-)^~, phi(x->y) <= y^- ~> x^- (and mirrors)"),
      family("vto-inside-interior", "every very true operator is an interior operator"),
      family("vto-basic-facts",
             "v(x)=1 iff x=1, monotone, idempotent, v(x)<=y iff v(x)<=v(y), Im=Fix, onto implies identity, "
             "Ker={1} is a deductive system"),
      family("vto-images-determine", "very true operators with the same image are equal"),
      family("vto-composition-commuting", "v.w is very true iff v.w = w.v", kKnownFalse),
      family("vto-composition-both-ways", "v.w and w.v are both very true iff v.w = w.v"),
      family("sigma-hedges",
             "x -> v(x^-)^~ and x -> v(x^~)^- are closure operators forming a truth-depressing pair with v, "
             "as does (Id, Id)"),
      family("hedge-sandwich", "every truth-depressing component lies between Id and the canonical one"),
      family("globalization-chain-hedges",
             "on chains globalization accepts every monotone pair with s(0)=0 and x<=s(x)"),
      family("valuation-samples", "sampled deductive-system valuations are pseudo-valuations"),
      family("valuation-composition", "phi.v is a pseudo-valuation for every sample phi and operator v"),
      family("ds-inclusions",
             "DS_n in DS, DS^v in DS, DS_n^v in DS_n; {1}, A and Ker(v) are v-deductive systems"),
      family("dense-normal", "dense elements form a normal deductive system on Glivenko algebras"),
      family("quotient-lift", "v lifts to a very true operator on A/H for every normal v-deductive H"),
      family("projection-facts",
             "projection is a VT homomorphism with kernel H, pi^-1(Ker v^) in v^-1(H), pi(Ker v) in Ker v^"),
      family("congruence-compatibility",
             "every congruence of A is compatible with v (all normal deductive systems)", kKnownFalse),
      family("vds-congruence-compatibility", "congruences of normal v-deductive systems are compatible with v"),
      family("transport",
             "images of VT subalgebras, kernels, images and preimages of v-deductive systems transport along "
             "VT homomorphisms"),
      family("factorization",
             "a VT homomorphism factors uniquely through A/H for H inside its kernel, with matching image "
             "and kernel"),
      family("first-isomorphism", "A/Ker(f) is VT-isomorphic to the image of f"),
      family("reg-lift", "x -> f(x)^{-~} is again interior or very true on the regular elements"),
      family("den-lift", "[x] -> [f(x)] is well defined and of the same kind on A/Den(A)", kKnownFalse),
      family("class-inclusions", "pseudo-MV in pseudo-BL in (pseudo-MTL and divisible) in FLw in pP"),
      family("product-laws", "product and lattice identities of pP and FLw algebras"),
      family("vt-product-inequalities",
             "x.y <= z gives v(x).v(y) <= v(z), v(x).v(y) <= v(x.y), and the three implication forms agree"),
      family("implication-forms-agree",
             "for interior maps fixing 1, the plain, the z-extended and the product forms of the implication "
             "axiom agree"),
      family("flw-meet-bounds", "v(x->y).v(x) <= v(x^y) <= v(x)^v(y) and the mirror on FLw algebras"),
      family("mv-identities", "x v y = (x->y)~>y = (x~>y)->y holds exactly on pseudo-MV algebras"),
      family("vt5-prelinear-form",
             "on pseudo-MTL algebras the join axiom is equivalent to v(x->y) v v(y->x) = 1 and its mirror"),
      family("mtl-characterization",
             "all FLw very true operators satisfy the prelinear form iff the algebra is pseudo-MTL"),
      family("mv-characterization",
             "all FLw very true operators satisfy the join identities iff the algebra is pseudo-MV"),
      family("svto-antitone",
             "for nested substructures, operators on the larger one that keep the smaller restrict to it"),
      family("linear-restriction",
             "on linearly ordered algebras every very true operator keeping Q restricts to Q"),
  };
  return catalog;
}

bool SuiteReport::passed() const {
  for (const auto& f : families)
    if (f.expectation == Expectation::kHolds && !f.clean()) return false;
  return true;
}

const FamilyResult& SuiteReport::family(const std::string& name) const {
  for (const auto& f : families)
    if (f.name == name) return f;
  throw std::out_of_range("no family " + name);
}

SuiteReport empty_suite_report() {
  SuiteReport r;
  r.families = family_catalog();
  return r;
}

void run_suite_on(const AlgebraRef& a, SuiteReport& report) {
  report.algebras.push_back(a->label());
  Recorder rec(a, report);
  rec.laws("derived-laws", derived_law_suite(*a), *a);

  const Limits& lim = limits();
  if (a->size() > lim.operator_enumeration || a->size() > lim.subset_enumeration) {
    report.skipped.push_back(a->label() + ": carrier above the enumeration caps");
    return;
  }
  const auto into = enumerate_interior(a);
  const auto vto = enumerate_vto(a);
  const auto ds = enumerate_ds(*a);
  const auto dsn = enumerate_ds_n(*a);

  interior_families(a, into, rec);
  vto_families(a, into, vto, rec);
  hedge_families(a, vto, rec);
  valuation_families(a, vto, ds, rec);
  deduction_families(a, vto, ds, dsn, rec);
  lift_families(a, into, vto, rec);
  morphism_families(a, vto, rec);
  class_families(a, into, vto, rec);
  smarandache_families(a, vto, rec);
}

SuiteReport run_suite(const std::vector<AlgebraRef>& algebras) {
  SuiteReport r = empty_suite_report();
  for (const auto& a : algebras) run_suite_on(a, r);
  return r;
}

}  // namespace psbck
