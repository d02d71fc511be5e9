#include "psbck/workbench.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>

#include "psbck/class_tower.hpp"
#include "psbck/deduction.hpp"
#include "psbck/document.hpp"
#include "psbck/error.hpp"
#include "psbck/generator.hpp"
#include "psbck/morphisms.hpp"
#include "psbck/operators.hpp"
#include "psbck/report.hpp"
#include "psbck/theorems.hpp"
#include "psbck/valuations.hpp"

namespace psbck {
namespace {

[[noreturn]] void usage(const std::string& msg) { throw WorkbenchError(ErrorCode::kUsage, msg); }

struct Ctx {
  const Request& req;
  Document doc;
  Json j;
  std::string text;
  int exit_code = 0;

  void line(const std::string& s) { text += s + "\n"; }
  void fail_property() { exit_code = 1; }
};

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) usage(std::string("missing ") + flag);
  return value;
}

std::string algebra_name(const Document& d, const AlgebraRef& a) {
  for (const auto& e : d.algebras)
    if (e.validation.algebra == a) return e.name;
  return a->label();
}

// The algebra a command works on: --algebra, else the one --vto, --q or
// --ds lives on, else the first algebra in the document.
AlgebraRef pick_algebra(Ctx& c) {
  if (c.req.algebra.empty()) {
    if (!c.req.vto.empty()) return c.doc.map(c.req.vto).parent;
    if (!c.req.q.empty()) return c.doc.algebra(c.doc.subset(c.req.q).on);
    if (!c.req.ds.empty()) return c.doc.algebra(c.doc.subset(c.req.ds).on);
  }
  return c.doc.algebra_or_first(c.req.algebra);
}

const UnaryMap& vto_on(Ctx& c, const AlgebraRef& a) {
  const UnaryMap& v = c.doc.map(need(c.req.vto, "--vto"));
  if (v.parent != a) throw WorkbenchError(ErrorCode::kParentMismatch, "map '" + c.req.vto + "' is not on this algebra");
  return v;
}

Subset subset_on(Ctx& c, const std::string& name, const char* flag, const AlgebraRef& a) {
  const Named<Subset>& s = c.doc.subset(need(name, flag));
  if (c.doc.algebra(s.on) != a)
    throw WorkbenchError(ErrorCode::kParentMismatch, "subset '" + name + "' is not on this algebra");
  return s.value;
}

std::vector<std::string> map_names(const Document& d, const UnaryMap& m) {
  std::vector<std::string> out;
  for (const auto& n : d.maps)
    if (n.value == m) out.push_back(n.name);
  return out;
}

std::string count_of(std::size_t n, const std::string& one, const std::string& many) {
  return std::to_string(n) + " " + (n == 1 ? one : many);
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

void begin(Ctx& c, const AlgebraRef& a) {
  c.j["algebra"] = algebra_name(c.doc, a);
}

Json map_json(const Document& d, const UnaryMap& m) {
  Json j;
  j["image"] = names_json(*m.parent, m.image);
  j["names"] = map_names(d, m);
  return j;
}

void list_maps(Ctx& c, const std::vector<UnaryMap>& maps, const std::string& what) {
  const AlgebraRef& a = pick_algebra(c);
  c.line("algebra " + algebra_name(c.doc, a) + ": " + std::to_string(maps.size()) + " " + what);
  Json items = Json::array();
  for (const UnaryMap& m : maps) {
    const auto names = map_names(c.doc, m);
    c.line("  " + format_map(m) + (names.empty() ? "" : "  = " + join_names(names)));
    items.push_back(map_json(c.doc, m));
  }
  c.j["count"] = maps.size();
  c.j["items"] = items;
}

void list_subsets(Ctx& c, const FiniteAlgebra& a, const std::vector<Subset>& sets, const std::string& what) {
  c.line("algebra " + algebra_name(c.doc, pick_algebra(c)) + ": " + std::to_string(sets.size()) + " " + what);
  Json items = Json::array();
  for (const Subset& s : sets) {
    std::vector<std::string> names;
    for (const auto& n : c.doc.subsets)
      if (n.value == s) names.push_back(n.name);
    c.line("  " + format_subset(a, s) + (names.empty() ? "" : "  = " + join_names(names)));
    items.push_back(subset_json(a, s));
  }
  c.j["count"] = sets.size();
  c.j["items"] = items;
}

void quotient_lines(Ctx& c, const Quotient& q, Json& out) {
  Json classes = Json::array();
  for (Element k = 0; k < q.class_count(); ++k) {
    c.line("  " + q.algebra->name(k) + " = " + format_subset(*q.source, q.members(k)));
    Json cj;
    cj["class"] = q.algebra->name(k);
    cj["members"] = subset_json(*q.source, q.members(k));
    classes.push_back(cj);
  }
  out["kernel"] = subset_json(*q.source, q.kernel);
  out["classes"] = classes;
}

// ---- commands ----

void cmd_validate(Ctx& c) {
  Json algs = Json::array();
  for (const AlgebraEntry& e : c.doc.algebras) {
    if (!c.req.algebra.empty() && e.name != c.req.algebra) continue;
    Json aj;
    aj["name"] = e.name;
    aj["size"] = e.raw.element_names.size();
    if (e.validation.ok()) {
      const LawReport laws = derived_law_suite(*e.validation.algebra);
      const LawCheck* bad = laws.first_failure();
      c.line("algebra " + e.name + ": certified pseudo-BCK algebra, " + std::to_string(e.raw.element_names.size()) +
             " elements");
      c.line("  derived laws: " + (bad ? bad->law + " fails at " + format_witness(*e.validation.algebra, bad->witness)
                                       : std::to_string(laws.checks.size()) + " hold"));
      aj["certified"] = true;
      aj["derived_laws"] = bad == nullptr;
      if (bad) c.fail_property();
    } else {
      c.line("algebra " + e.name + ": not a pseudo-BCK algebra");
      Json diags = Json::array();
      for (const Diagnostic& d : e.validation.diagnostics) {
        c.line("  " + d.rule + ": " + d.message);
        Json dj;
        dj["rule"] = d.rule;
        dj["message"] = d.message;
        diags.push_back(dj);
      }
      aj["certified"] = false;
      aj["diagnostics"] = diags;
      c.fail_property();
    }
    algs.push_back(aj);
  }
  if (algs.empty()) c.doc.entry(c.req.algebra);  // raises the unknown-name error
  c.j["algebras"] = algs;
}

void cmd_props(Ctx& c) {
  const AlgebraRef a = pick_algebra(c);
  const FiniteAlgebra& A = *a;
  begin(c, a);
  c.line("algebra " + algebra_name(c.doc, a) + ": " + std::to_string(A.size()) + " elements, one = " +
         A.name(A.one()) + (A.zero() ? ", zero = " + A.name(*A.zero()) : ""));

  std::string covers;
  Json cj = Json::array();
  for (Element x = 0; x < A.size(); ++x)
    for (Element y = 0; y < A.size(); ++y) {
      if (x == y || !A.leq(x, y)) continue;
      bool cover = true;
      for (Element z = 0; z < A.size() && cover; ++z)
        if (z != x && z != y && A.leq(x, z) && A.leq(z, y)) cover = false;
      if (!cover) continue;
      covers += (covers.empty() ? "" : ", ") + A.name(x) + " < " + A.name(y);
      cj.push_back(Json::array({A.name(x), A.name(y)}));
    }
  c.line("covers: " + covers);
  c.j["covers"] = cj;

  auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
  Json flags;
  flags["bounded"] = A.bounded();
  flags["linear"] = is_linear(A);
  std::string fl = "bounded: " + yes(A.bounded()) + ", linear: " + yes(is_linear(A));
  if (A.bounded()) {
    flags["good"] = is_good(A);
    flags["involutive"] = is_involutive(A);
    flags["glivenko"] = is_glivenko(A);
    fl += ", good: " + yes(is_good(A)) + ", involutive: " + yes(is_involutive(A)) +
          ", glivenko: " + yes(is_glivenko(A));
  }
  c.line(fl);
  c.j["flags"] = flags;
  if (A.bounded()) {
    c.line("regular: " + format_subset(A, regular_elements(A)));
    c.line("dense: " + format_subset(A, dense_elements(A)));
    c.j["regular"] = subset_json(A, regular_elements(A));
    c.j["dense"] = subset_json(A, dense_elements(A));
  }

  const ClassificationReport r = classify(A);
  c.line("classes:");
  Json levels = Json::array();
  for (const ClassLevel* l : r.levels()) {
    std::string s = "  " + l->name + std::string(12 - std::min<std::size_t>(11, l->name.size()), ' ') + yes(l->holds);
    if (!l->holds && !l->reason.empty()) s += "  (" + l->reason + ")";
    if (!l->holds && !l->witness.empty()) s += " at " + format_witness(A, l->witness);
    c.line(s);
    Json lj;
    lj["name"] = l->name;
    lj["holds"] = l->holds;
    if (!l->holds) {
      lj["reason"] = l->reason;
      lj["witness"] = names_json(A, l->witness);
    }
    levels.push_back(lj);
  }
  c.j["classes"] = levels;

  if (r.product) {
    c.line("product:");
    Json rows = Json::array();
    for (Element x = 0; x < A.size(); ++x) {
      std::vector<Element> row;
      for (Element y = 0; y < A.size(); ++y) row.push_back(r.product->product(x, y));
      c.line("  " + A.name(x) + " | " + format_image(A, row).substr(1, format_image(A, row).size() - 2));
      rows.push_back(names_json(A, row));
    }
    c.j["product"] = rows;
  }
  const AlgebraEntry& e = c.doc.entry(algebra_name(c.doc, a));
  if (e.declared_product) {
    if (!r.product) {
      c.line("declared product: algebra has no product");
      c.j["declared_product_matches"] = false;
      c.fail_property();
    } else {
      const auto bad = product_mismatches(A, *e.declared_product);
      std::string s = "declared product: ";
      if (bad.empty()) {
        s += "matches";
      } else {
        s += std::to_string(bad.size()) + " mismatches";
        for (auto [x, y] : bad) s += " (" + A.name(x) + ", " + A.name(y) + ")";
        c.fail_property();
      }
      c.line(s);
      c.j["declared_product_matches"] = bad.empty();
    }
  }
}

void cmd_enum(Ctx& c) {
  const std::string& kind = need(c.req.kind, "enum kind");
  const AlgebraRef a = pick_algebra(c);
  begin(c, a);
  c.j["kind"] = kind;
  if (kind == "into") return list_maps(c, enumerate_interior(a), "interior operators");
  if (kind == "clo") return list_maps(c, enumerate_closure(a), "closure operators");
  if (kind == "vto") return list_maps(c, enumerate_vto(a), "very true operators");
  if (kind == "ds") return list_subsets(c, *a, enumerate_ds(*a), "deductive systems");
  if (kind == "dsn") return list_subsets(c, *a, enumerate_ds_n(*a), "normal deductive systems");
  if (kind == "dsv" || kind == "dsnv") {
    const UnaryMap& v = vto_on(c, a);
    if (const Verdict vv = is_vto(v); !vv)
      throw WorkbenchError(ErrorCode::kInvalidMap, "'" + c.req.vto + "' is not a very true operator: " + describe(vv, *a));
    c.j["vto"] = c.req.vto;
    return kind == "dsv" ? list_subsets(c, *a, enumerate_ds_v(v), "deductive systems closed under " + c.req.vto)
                         : list_subsets(c, *a, enumerate_ds_nv(v), "normal deductive systems closed under " + c.req.vto);
  }
  if (kind == "hom" || kind == "vthom") {
    std::vector<Homomorphism> homs;
    AlgebraRef b = a;
    if (kind == "hom") {
      if (!c.req.to.empty()) b = c.doc.algebra(c.req.to);
      homs = enumerate_hom(a, b);
    } else {
      const UnaryMap& v = vto_on(c, a);
      const UnaryMap& u = c.req.u.empty() ? v : c.doc.map(c.req.u);
      b = u.parent;
      homs = enumerate_vthom(v, u);
      c.j["vto"] = c.req.vto;
      c.j["u"] = c.req.u.empty() ? c.req.vto : c.req.u;
    }
    c.j["target"] = algebra_name(c.doc, b);
    c.line("algebra " + algebra_name(c.doc, a) + " -> " + algebra_name(c.doc, b) + ": " + std::to_string(homs.size()) +
           (kind == "hom" ? " homomorphisms" : " very true homomorphisms"));
    Json items = Json::array();
    for (const Homomorphism& h : homs) {
      std::vector<std::string> names;
      for (const auto& n : c.doc.homs)
        if (n.value.map == h.map && n.value.source == a && n.value.target == b) names.push_back(n.name);
      c.line("  " + format_image(*b, h.map) + (names.empty() ? "" : "  = " + join_names(names)));
      Json hj;
      hj["image"] = names_json(*b, h.map);
      hj["names"] = names;
      items.push_back(hj);
    }
    c.j["count"] = homs.size();
    c.j["items"] = items;
    return;
  }
  if (kind == "cong") {
    const auto qs = enumerate_congruences(a);
    c.line("algebra " + algebra_name(c.doc, a) + ": " + std::to_string(qs.size()) + " congruences");
    Json items = Json::array();
    for (const Quotient& q : qs) {
      c.line("H = " + format_subset(*a, q.kernel) + ": " + count_of(q.class_count(), "class", "classes"));
      Json qj;
      quotient_lines(c, q, qj);
      items.push_back(qj);
    }
    c.j["count"] = qs.size();
    c.j["items"] = items;
    return;
  }
  if (kind == "smarandache") {
    const auto cands = smarandache_search(a);
    c.line("algebra " + algebra_name(c.doc, a) + ": " + std::to_string(cands.size()) + " Smarandache substructures");
    Json items = Json::array();
    for (const SmarandacheCandidate& s : cands) {
      std::string top;
      for (const ClassLevel* l : s.report.levels())
        if (l->holds) top = l->name;
      c.line("  Q = " + format_subset(*a, s.q) + "  (" + top + ")");
      Json sj;
      sj["q"] = subset_json(*a, s.q);
      sj["strongest_class"] = top;
      items.push_back(sj);
    }
    c.j["count"] = cands.size();
    c.j["items"] = items;
    return;
  }
  if (kind == "svto") {
    const Subset q = subset_on(c, c.req.q, "--q", a);
    const auto maps = svto(a, q);
    c.j["q"] = subset_json(*a, q);
    c.line("algebra " + algebra_name(c.doc, a) + ", Q = " + format_subset(*a, q) + ": " + std::to_string(maps.size()) +
           " very true operators on Q");
    Json items = Json::array();
    for (const UnaryMap& m : maps) {
      c.line("  " + format_map(m));
      items.push_back(names_json(*m.parent, m.image));
    }
    c.j["count"] = maps.size();
    c.j["items"] = items;
    // how the operators of A restrict to Q
    c.line("restrictions:");
    Json rs = Json::array();
    for (const UnaryMap& v : enumerate_vto(a)) {
      const Restriction r = restrict_vto(v, q);
      const auto names = map_names(c.doc, v);
      std::string label = names.empty() ? format_map(v) : join_names(names);
      std::string s = "  " + label + " -> ";
      Json rj;
      rj["operator"] = names_json(*a, v.image);
      rj["names"] = names;
      if (r.map) {
        const auto it = std::find_if(maps.begin(), maps.end(), [&](const UnaryMap& m) { return m.image == r.map->image; });
        s += format_map(*r.map) + "  (operator " + std::to_string(it - maps.begin() + 1) + " on Q)";
        rj["restriction"] = names_json(*r.map->parent, r.map->image);
        rj["index"] = it - maps.begin() + 1;
      } else {
        s += "none: " + r.reason;
        rj["restriction"] = nullptr;
        rj["reason"] = r.reason;
      }
      c.line(s);
      rs.push_back(rj);
    }
    c.j["restrictions"] = rs;
    return;
  }
  usage("unknown enum kind '" + kind + "'");
}

void cmd_quotient(Ctx& c) {
  const Named<Subset>& h = c.doc.subset(need(c.req.ds, "--ds"));
  const AlgebraRef a = c.doc.algebra(h.on);
  begin(c, a);
  const std::string qname = h.on + "/" + h.name;
  const Quotient q = congruence_from(a, h.value, qname);
  c.j["ds"] = h.name;
  c.j["quotient"] = qname;
  std::string saved;
  std::swap(saved, c.text);
  quotient_lines(c, q, c.j);
  std::swap(saved, c.text);  // class lines are part of the serialized text below
  c.j["elements"] = q.algebra->names();
  c.j["arrow"] = table_json(*q.algebra, false);
  c.j["squig"] = table_json(*q.algebra, true);
  c.text += "# " + count_of(q.class_count(), "class", "classes") + " of " + h.on + " modulo " + format_subset(*a, h.value) + "\n";
  c.text += serialize_algebra(*a, h.on) + serialize_quotient(q, qname, h.on);
}

void cmd_lift(Ctx& c) {
  const AlgebraRef a = pick_algebra(c);
  begin(c, a);
  const UnaryMap& v = vto_on(c, a);
  const Subset h = subset_on(c, c.req.ds, "--ds", a);
  const std::string qname = algebra_name(c.doc, a) + "/" + c.req.ds;
  const Quotient q = congruence_from(a, h, qname);
  const LiftedOperator l = lift_vto_to_quotient(q, v);
  c.line("quotient " + qname + ": " + count_of(q.class_count(), "class", "classes"));
  quotient_lines(c, q, c.j);
  c.line("lifted " + c.req.vto + ": " + format_map(l.map));
  c.line("very true on the quotient: " + describe(l.verdict, *q.algebra));
  c.j["vto"] = c.req.vto;
  c.j["lifted"] = names_json(*q.algebra, l.map.image);
  c.j["verdict"] = verdict_json(l.verdict, *q.algebra);
  if (!l.verdict) c.fail_property();
}

void cmd_hedges(Ctx& c) {
  const AlgebraRef a = pick_algebra(c);
  begin(c, a);
  const UnaryMap& v = vto_on(c, a);
  if (const Verdict vv = is_vto(v); !vv)
    throw WorkbenchError(ErrorCode::kInvalidMap, "'" + c.req.vto + "' is not a very true operator: " + describe(vv, *a));
  const SigmaHedges s = sigma_hedges(v);
  const Verdict st = is_vtst(v, s.first, s.second);
  const Verdict triv = is_vtst(v, identity_map(a), identity_map(a));
  c.line("operator " + c.req.vto + " = " + format_map(v));
  c.line("s1 = " + format_map(s.first) + "   x -> v(x->0)~>0");
  c.line("s2 = " + format_map(s.second) + "   x -> v(x~>0)->0");
  c.line("(v, s1, s2) truth-depressing pair: " + describe(st, *a));
  c.line("(v, Id, Id) truth-depressing pair: " + describe(triv, *a));
  c.j["vto"] = c.req.vto;
  c.j["s1"] = names_json(*a, s.first.image);
  c.j["s2"] = names_json(*a, s.second.image);
  c.j["vtst"] = verdict_json(st, *a);
  c.j["vtst_identity"] = verdict_json(triv, *a);
  if (!st || !triv) c.fail_property();
}

void cmd_factor(Ctx& c) {
  const Homomorphism& h = c.doc.hom(need(c.req.hom, "--hom"));
  const AlgebraRef a = h.source;
  begin(c, a);
  c.j["hom"] = c.req.hom;
  auto op = [&](const std::string& name, const AlgebraRef& on) {
    if (name.empty()) return identity_map(on);
    const UnaryMap& m = c.doc.map(name);
    if (m.parent != on) throw WorkbenchError(ErrorCode::kParentMismatch, "map '" + name + "' is on the wrong algebra");
    return m;
  };
  const VtHomomorphism f{h, op(c.req.vto, h.source), op(c.req.u, h.target)};
  c.j["vto"] = c.req.vto.empty() ? "Id" : c.req.vto;
  c.j["u"] = c.req.u.empty() ? "Id" : c.req.u;
  const Verdict fv = is_vthom(f);
  c.line("map " + c.req.hom + " = " + format_image(*h.target, h.map) + ": " +
         (fv ? "very true homomorphism" : "not a very true homomorphism, " + describe(fv, *a)));
  c.j["vthom"] = verdict_json(fv, *a);
  if (!fv) {
    c.fail_property();
    return;
  }
  auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
  auto show = [&](const Factorization& fz) {
    const Quotient& q = fz.quotient;
    c.line("quotient by " + format_subset(*a, q.kernel) + ": " + count_of(q.class_count(), "class", "classes"));
    quotient_lines(c, q, c.j);
    c.line("lifted operator: " + format_map(fz.v_hat.map) + " (" + describe(fz.v_hat.verdict, *q.algebra) + ")");
    c.line("induced map: " + format_image(*h.target, fz.induced.base.map) + " (" +
           describe(fz.induced_verdict, *q.algebra) + ")");
    c.line("commutes: " + yes(fz.commutes) + ", unique: " + yes(fz.unique) + ", image matches: " +
           yes(fz.image_matches) + ", kernel matches: " + yes(fz.kernel_matches));
    c.j["lifted"] = names_json(*q.algebra, fz.v_hat.map.image);
    c.j["induced"] = names_json(*h.target, fz.induced.base.map);
    c.j["commutes"] = fz.commutes;
    c.j["unique"] = fz.unique;
    c.j["image_matches"] = fz.image_matches;
    c.j["kernel_matches"] = fz.kernel_matches;
  };
  if (!c.req.ds.empty()) {
    const Factorization fz = factor(f, subset_on(c, c.req.ds, "--ds", a));
    show(fz);
    c.j["ok"] = fz.ok();
    if (!fz.ok()) c.fail_property();
    return;
  }
  const FirstIsomorphism fi = first_isomorphism(f);
  show(fi.factorization);
  c.line("image: " + format_subset(*h.target, hom_image(h)));
  c.line("quotient by the kernel is isomorphic to the image: " + yes(fi.ok()));
  c.j["image"] = subset_json(*h.target, hom_image(h));
  c.j["isomorphic"] = fi.ok();
  c.j["ok"] = fi.ok();
  if (!fi.ok()) c.fail_property();
}

void cmd_valuation(Ctx& c) {
  const std::string& action = need(c.req.kind, "valuation action (check|compose)");
  const PseudoValuation& phi = c.doc.valuation(need(c.req.phi, "--phi"));
  const AlgebraRef a = phi.parent;
  begin(c, a);
  c.j["action"] = action;
  c.j["phi"] = c.req.phi;
  auto values = [&](const PseudoValuation& p) {
    std::string s;
    Json j;
    for (Element x = 0; x < a->size(); ++x) {
      s += (x ? " " : "") + a->name(x) + "=" + format_rational(p(x));
      j[a->name(x)] = format_rational(p(x));
    }
    return std::pair{s, j};
  };
  const PseudoValuation* target = &phi;
  PseudoValuation composed;
  if (action == "compose") {
    composed = compose_with_vto(phi, vto_on(c, a));
    target = &composed;
    c.j["vto"] = c.req.vto;
    auto [s, j] = values(composed);
    c.line(c.req.phi + " o " + c.req.vto + ": " + s);
    c.j["values"] = j;
  } else if (action == "check") {
    auto [s, j] = values(phi);
    c.line(c.req.phi + ": " + s);
    c.j["values"] = j;
  } else {
    usage("unknown valuation action '" + action + "'");
  }
  const Verdict pv = is_pseudo_valuation(*target);
  const Verdict val = is_valuation(*target);
  c.line("pseudo-valuation: " + describe(pv, *a));
  c.line("valuation: " + describe(val, *a));
  c.j["pseudo_valuation"] = verdict_json(pv, *a);
  c.j["valuation"] = verdict_json(val, *a);
  if (!pv) c.fail_property();
}

void cmd_suite(Ctx& c, const std::vector<Document>& docs) {
  std::vector<AlgebraRef> algebras;
  for (const Document& d : docs) {
    const std::string stem = std::filesystem::path(d.source_name).filename().string();
    for (const AlgebraEntry& e : d.algebras) {
      if (!e.validation.ok()) continue;
      RawAlgebra raw = e.raw;
      raw.name = stem + ":" + e.name;
      algebras.push_back(certify(raw));
    }
  }
  const std::size_t from_files = algebras.size();
  for (const AlgebraRef& g : generate_algebras(c.req.seed, c.req.generated)) algebras.push_back(g);
  const SuiteReport r = run_suite(algebras);
  c.j["files"] = c.req.files;
  c.j["file_algebras"] = from_files;
  c.j["generated"] = c.req.generated;
  c.j["seed"] = c.req.seed;
  c.j["report"] = suite_json(r);
  c.text += format_suite(r);
  if (!r.passed()) c.fail_property();
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"validate", "props", "enum",      "quotient", "lift",
                                                 "hedges",   "factor", "valuation", "suite"};
  return names;
}

const std::vector<std::string>& enum_kinds() {
  static const std::vector<std::string> kinds = {"into", "clo", "vto",  "ds",   "dsn",         "dsv",
                                                 "dsnv", "hom", "vthom", "cong", "smarandache", "svto"};
  return kinds;
}

Outcome run(const Request& req) {
  Outcome out;
  try {
    const auto& cmds = command_names();
    if (std::find(cmds.begin(), cmds.end(), req.command) == cmds.end()) usage("unknown command '" + req.command + "'");
    std::vector<Document> docs;
    for (const auto& f : req.files) docs.push_back(load_document(f));
    if (req.command != "suite" && docs.size() != 1) usage(req.command + " takes exactly one input file");

    Ctx c{req, docs.empty() ? Document{} : docs.front(), Json::object(), {}, 0};
    c.j["schema"] = kJsonSchema;
    c.j["command"] = req.command;
    if (!req.files.empty() && req.command != "suite") c.j["file"] = req.files.front();

    static const std::map<std::string, std::function<void(Ctx&)>> table = {
        {"validate", cmd_validate}, {"props", cmd_props},   {"enum", cmd_enum},
        {"quotient", cmd_quotient}, {"lift", cmd_lift},     {"hedges", cmd_hedges},
        {"factor", cmd_factor},     {"valuation", cmd_valuation},
    };
    if (req.command == "suite") {
      cmd_suite(c, docs);
    } else {
      table.at(req.command)(c);
    }
    c.j["exit"] = c.exit_code;
    out.exit_code = c.exit_code;
    out.out = req.json ? c.j.dump(2) + "\n" : c.text;
  } catch (const WorkbenchError& e) {
    out.exit_code = 2;
    out.out.clear();
    out.err = "error[" + std::string(error_code_name(e.code())) + "]: " + e.what() + "\n";
  }
  return out;
}

}  // namespace psbck
