#include "psbck/class_tower.hpp"

#include <algorithm>

#include "psbck/error.hpp"
#include "psbck/limits.hpp"
#include "psbck/operators.hpp"

namespace psbck {
namespace {

// Least element of {z | pred(z)}, if the set has one.
template <class Pred>
std::optional<Element> least(const FiniteAlgebra& a, Pred pred) {
  for (Element z = 0; z < a.size(); ++z) {
    if (!pred(z)) continue;
    bool below_all = true;
    for (Element w = 0; w < a.size() && below_all; ++w)
      if (pred(w) && !a.leq(z, w)) below_all = false;
    if (below_all) return z;
  }
  return std::nullopt;
}

void fail(ClassLevel& level, std::string reason, std::vector<Element> witness = {}) {
  level.holds = false;
  level.reason = std::move(reason);
  level.witness = std::move(witness);
}

void require(ClassLevel& level, const ClassLevel& lower) {
  if (!lower.holds) fail(level, "requires " + lower.name);
}

LawCheck law(std::string name) { return {std::move(name), true, {}}; }

template <class Pred>
void check_pairs(LawCheck& c, std::size_t n, Pred pred) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!pred(x, y)) {
        c.ok = false;
        c.witness = {x, y};
        return;
      }
}

template <class Pred>
void check_triples(LawCheck& c, std::size_t n, Pred pred) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (!pred(x, y, z)) {
          c.ok = false;
          c.witness = {x, y, z};
          return;
        }
}

Verdict vt5_verdict(const UnaryMap& v, const ProductStructure& p) {
  const auto& a = *v.parent;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (!a.leq(v(p.join_of(x, y)), p.join_of(v(x), v(y)))) return Verdict::fail("VT5", {x, y});
    }
  }
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (v(p.join_of(x, y)) != p.join_of(v(x), v(y)))
        return Verdict::fail("join preservation", {x, y});
    }
  }
  return Verdict::pass();
}

std::vector<UnaryMap> vto_flw_on(const AlgebraRef& a, const ProductStructure& p) {
  auto all = enumerate_vto(a);
  std::erase_if(all, [&](const UnaryMap& v) { return !vt5_verdict(v, p).ok; });
  return all;
}

}  // namespace

ProductResult pseudo_product(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  ProductResult r;
  ProductStructure p;
  p.n = n;
  p.odot.resize(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      auto left = least(a, [&](Element z) { return a.leq(x, a.arrow(y, z)); });
      auto right = least(a, [&](Element z) { return a.leq(y, a.squig(x, z)); });
      if (!left || !right || *left != *right) {
        r.failing_pair = {x, y};
        r.reason = !left    ? "{z | x <= y->z} has no least element"
                   : !right ? "{z | y <= x~>z} has no least element"
                            : "the two defining minima differ";
        return r;
      }
      p.odot[x * n + y] = *left;
    }
  }
  std::vector<Element> meets(n * n);
  std::vector<Element> joins(n * n);
  bool lattice = true;
  for (Element x = 0; x < n && lattice; ++x) {
    for (Element y = 0; y < n && lattice; ++y) {
      auto m = meet(a, x, y);
      auto j = join(a, x, y);
      if (!m || !j) {
        lattice = false;
      } else {
        meets[x * n + y] = *m;
        joins[x * n + y] = *j;
      }
    }
  }
  if (lattice) {
    p.meet = std::move(meets);
    p.join = std::move(joins);
  }
  r.structure = std::move(p);
  return r;
}

ProductStructure require_pp(const FiniteAlgebra& a) {
  ProductResult r = pseudo_product(a);
  if (!r.structure) {
    throw WorkbenchError(ErrorCode::kPPRequired,
                         "algebra '" + a.label() + "' has no pseudo-product at (" +
                             a.name(r.failing_pair[0]) + ", " + a.name(r.failing_pair[1]) + ")");
  }
  return std::move(*r.structure);
}

std::vector<std::pair<Element, Element>> product_mismatches(
    const FiniteAlgebra& a, const std::vector<std::vector<Element>>& declared) {
  const ProductStructure p = require_pp(a);
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (x >= declared.size() || y >= declared[x].size() || declared[x][y] != p.product(x, y))
        out.emplace_back(x, y);
  return out;
}

std::vector<const ClassLevel*> ClassificationReport::levels() const {
  return {&bounded, &pp, &lattice, &flw, &mtl, &divisible, &bl, &mv};
}

ClassificationReport classify(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  ClassificationReport r;

  r.bounded.holds = a.bounded();
  if (!r.bounded.holds) r.bounded.reason = "no zero declared";

  ProductResult pr = pseudo_product(a);
  r.pp.holds = pr.structure.has_value();
  if (!r.pp.holds) {
    fail(r.pp, pr.reason, pr.failing_pair);
    fail(r.lattice, "requires pP");
  } else {
    r.product = std::move(pr.structure);
    r.lattice.holds = r.product->lattice();
    if (!r.lattice.holds) {
      // report the least pair without a meet or join
      for (Element x = 0; x < n && r.lattice.witness.empty(); ++x)
        for (Element y = 0; y < n && r.lattice.witness.empty(); ++y)
          if (!meet(a, x, y) || !join(a, x, y)) r.lattice.witness = {x, y};
      r.lattice.reason = "pair without meet or join";
    }
  }

  // FLw: bounded lattice with a monoid product residuated by the implications.
  r.flw.holds = true;
  require(r.flw, r.bounded);
  if (r.flw.holds) require(r.flw, r.pp);
  if (r.flw.holds) require(r.flw, r.lattice);
  if (r.flw.holds) {
    const ProductStructure& p = *r.product;
    const Element one = a.one();
    for (Element x = 0; x < n && r.flw.holds; ++x)
      if (p.product(x, one) != x || p.product(one, x) != x) fail(r.flw, "unit", {x});
    for (Element x = 0; x < n && r.flw.holds; ++x)
      for (Element y = 0; y < n && r.flw.holds; ++y)
        for (Element z = 0; z < n && r.flw.holds; ++z)
          if (p.product(p.product(x, y), z) != p.product(x, p.product(y, z)))
            fail(r.flw, "associativity", {x, y, z});
    for (Element x = 0; x < n && r.flw.holds; ++x)
      for (Element y = 0; y < n && r.flw.holds; ++y)
        for (Element z = 0; z < n && r.flw.holds; ++z) {
          const bool l = a.leq(p.product(x, y), z);
          if (l != a.leq(x, a.arrow(y, z)) || l != a.leq(y, a.squig(x, z)))
            fail(r.flw, "residuation", {x, y, z});
        }
  }

  r.mtl.holds = true;
  require(r.mtl, r.flw);
  if (r.mtl.holds) {
    const ProductStructure& p = *r.product;
    for (Element x = 0; x < n && r.mtl.holds; ++x)
      for (Element y = 0; y < n && r.mtl.holds; ++y)
        if (p.join_of(a.arrow(x, y), a.arrow(y, x)) != a.one() ||
            p.join_of(a.squig(x, y), a.squig(y, x)) != a.one())
          fail(r.mtl, "prelinearity", {x, y});
  }

  r.divisible.holds = true;
  require(r.divisible, r.flw);
  if (r.divisible.holds) {
    const ProductStructure& p = *r.product;
    for (Element x = 0; x < n && r.divisible.holds; ++x)
      for (Element y = 0; y < n && r.divisible.holds; ++y) {
        const Element m = p.meet_of(x, y);
        if (p.product(a.arrow(x, y), x) != m || p.product(x, a.squig(x, y)) != m)
          fail(r.divisible, "divisibility", {x, y});
      }
  }

  r.bl.holds = true;
  require(r.bl, r.mtl);
  if (r.bl.holds) require(r.bl, r.divisible);

  r.mv.holds = true;
  require(r.mv, r.bl);
  if (r.mv.holds && !is_involutive(a)) {
    Element witness = 0;
    for (Element x = 0; x < n; ++x)
      if (neg_sim(a, neg_minus(a, x)) != x || neg_minus(a, neg_sim(a, x)) != x) {
        witness = x;
        break;
      }
    fail(r.mv, "involution", {witness});
  }

  if (r.flw.holds) {
    const ProductStructure& p = *r.product;
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (Element y = 0; y < n && ok; ++y) {
        const Element j = p.join_of(x, y);
        ok = a.squig(a.arrow(x, y), y) == j && a.arrow(a.squig(x, y), y) == j;
      }
    r.mv_identities = ok;
  }
  return r;
}

ProductStructure require_flw(const FiniteAlgebra& a) {
  ClassificationReport r = classify(a);
  if (!r.flw.holds) {
    throw WorkbenchError(ErrorCode::kNotFLw,
                         "algebra '" + a.label() + "' is not FLw (" + r.flw.reason + ")");
  }
  return std::move(*r.product);
}

ImplicationForms implication_forms(const UnaryMap& f, const ProductStructure& p) {
  const auto& a = *f.parent;
  const std::size_t n = a.size();
  ImplicationForms out{true, true, true};
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!a.leq(f(a.arrow(x, y)), a.arrow(f(x), f(y))) ||
          !a.leq(f(a.squig(x, y)), a.squig(f(x), f(y))))
        out.plain = false;
      if (!a.leq(p.product(f(x), f(y)), f(p.product(x, y)))) out.product = false;
      for (Element z = 0; z < n && out.with_z; ++z) {
        if (!a.leq(f(a.arrow(x, y)), a.arrow(f(x), a.arrow(f(z), f(y)))) ||
            !a.leq(f(a.squig(x, y)), a.squig(f(x), a.squig(f(z), f(y)))))
          out.with_z = false;
      }
    }
  }
  return out;
}

LawReport vt_pp_suite(const UnaryMap& v) {
  const auto& a = *v.parent;
  const ProductStructure p = require_pp(a);
  const std::size_t n = a.size();
  LawReport r;

  LawCheck c1 = law("product bound transfers through v");
  check_triples(c1, n, [&](Element x, Element y, Element z) {
    return !a.leq(p.product(x, y), z) || a.leq(p.product(v(x), v(y)), v(z));
  });
  r.checks.push_back(c1);

  LawCheck c2 = law("v(x).v(y) <= v(x.y)");
  check_pairs(c2, n, [&](Element x, Element y) {
    return a.leq(p.product(v(x), v(y)), v(p.product(x, y)));
  });
  r.checks.push_back(c2);

  LawCheck c3 = law("v(x->y) <= v(x)->(v(z)->v(y))");
  check_triples(c3, n, [&](Element x, Element y, Element z) {
    return a.leq(v(a.arrow(x, y)), a.arrow(v(x), a.arrow(v(z), v(y)))) &&
           a.leq(v(a.squig(x, y)), a.squig(v(x), a.squig(v(z), v(y))));
  });
  r.checks.push_back(c3);

  const ImplicationForms forms = implication_forms(v, p);
  r.checks.push_back({"implication axiom with an extra antecedent agrees", forms.with_z == forms.plain, {}});
  r.checks.push_back({"implication axiom in product form agrees", forms.product == forms.plain, {}});
  return r;
}

Verdict is_vto_flw(const UnaryMap& v) {
  const ProductStructure p = require_flw(*v.parent);
  if (Verdict base = is_vto(v); !base) return base;
  return vt5_verdict(v, p);
}

std::vector<UnaryMap> enumerate_vto_flw(const AlgebraRef& a) {
  return vto_flw_on(a, require_flw(*a));
}

Verdict check_vt5_prime(const UnaryMap& v, const ProductStructure& p) {
  const auto& a = *v.parent;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (p.join_of(v(a.arrow(x, y)), v(a.arrow(y, x))) != a.one() ||
          p.join_of(v(a.squig(x, y)), v(a.squig(y, x))) != a.one())
        return Verdict::fail("VT5'", {x, y});
  return Verdict::pass();
}

Agreement mtl_characterization(const AlgebraRef& a) {
  const ProductStructure p = require_flw(*a);
  Agreement out;
  out.left = true;
  for (const UnaryMap& v : vto_flw_on(a, p))
    if (!check_vt5_prime(v, p)) {
      out.left = false;
      break;
    }
  out.right = classify(*a).mtl.holds;
  return out;
}

Agreement mv_characterization(const AlgebraRef& a) {
  const ProductStructure p = require_flw(*a);
  Agreement out;
  out.left = true;
  const std::size_t n = a->size();
  for (const UnaryMap& v : vto_flw_on(a, p)) {
    for (Element x = 0; x < n && out.left; ++x)
      for (Element y = 0; y < n && out.left; ++y) {
        const Element j = v(p.join_of(x, y));
        out.left = a->squig(a->arrow(v(x), v(y)), v(y)) == j &&
                   a->arrow(a->squig(v(x), v(y)), v(y)) == j;
      }
    if (!out.left) break;
  }
  out.right = classify(*a).mv.holds;
  return out;
}

LawReport product_law_suite(const FiniteAlgebra& a) {
  const ProductStructure p = require_pp(a);
  const std::size_t n = a.size();
  LawReport r;

  LawCheck c1 = law("product below both factors");
  check_pairs(c1, n, [&](Element x, Element y) {
    return a.leq(p.product(x, y), x) && a.leq(p.product(x, y), y);
  });
  r.checks.push_back(c1);

  LawCheck c2 = law("implication against multiplied terms");
  check_triples(c2, n, [&](Element x, Element y, Element z) {
    const Element mid = a.arrow(p.product(x, z), p.product(y, z));
    const Element mid2 = a.squig(p.product(z, x), p.product(z, y));
    return a.leq(a.arrow(x, y), mid) && a.leq(mid, a.arrow(x, a.arrow(z, y))) &&
           a.leq(a.squig(x, y), mid2) && a.leq(mid2, a.squig(x, a.squig(z, y)));
  });
  r.checks.push_back(c2);

  ClassificationReport cls = classify(a);
  if (!cls.flw.holds) return r;

  LawCheck c3 = law("divisibility bound");
  check_pairs(c3, n, [&](Element x, Element y) {
    const Element m = p.meet_of(x, y);
    return a.leq(p.product(a.arrow(x, y), x), m) && a.leq(p.product(x, a.squig(x, y)), m);
  });
  r.checks.push_back(c3);

  LawCheck c4 = law("join in the antecedent");
  check_triples(c4, n, [&](Element x, Element y, Element z) {
    const Element j = p.join_of(x, y);
    return p.meet_of(a.arrow(x, z), a.arrow(y, z)) == a.arrow(j, z) &&
           p.meet_of(a.squig(x, z), a.squig(y, z)) == a.squig(j, z);
  });
  r.checks.push_back(c4);

  LawCheck c5 = law("join below double implications");
  check_pairs(c5, n, [&](Element x, Element y) {
    const Element j = p.join_of(x, y);
    const Element left = p.meet_of(a.squig(a.arrow(x, y), y), a.squig(a.arrow(y, x), x));
    const Element right = p.meet_of(a.arrow(a.squig(x, y), y), a.arrow(a.squig(y, x), x));
    return a.leq(j, left) && a.leq(j, right);
  });
  r.checks.push_back(c5);
  return r;
}

SmarandacheCandidate smarandache_substructure(const AlgebraRef& ref, const Subset& q) {
  const auto& a = *ref;
  const Element zero = a.require_zero();
  auto reject = [&](const std::string& why) -> SmarandacheCandidate {
    throw WorkbenchError(ErrorCode::kNotSmarandache, "subset is not a Smarandache substructure: " + why);
  };
  if (q.universe() != a.size()) reject("wrong carrier");
  if (q.is_full()) reject("Q must be a proper subset");
  if (!q.contains(zero) || !q.contains(a.one())) reject("Q must contain 0 and 1");
  if (q.size() < 3) reject("Q needs at least three elements");
  if (!is_subalgebra(a, q)) reject("Q is not closed under the implications");
  SmarandacheCandidate c{q, make_subalgebra(ref, q, a.label() + "|Q"), {}};
  c.report = classify(*c.sub.algebra);
  if (!c.report.mtl.holds) reject("induced structure is not pseudo-MTL (" + c.report.mtl.reason + ")");
  return c;
}

std::vector<SmarandacheCandidate> smarandache_search(const AlgebraRef& ref) {
  const auto& a = *ref;
  const Element zero = a.require_zero();
  const std::size_t n = a.size();
  require_within_cap(n, limits().smarandache_search, "Smarandache search");
  std::vector<Subset> subsets;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Subset q = Subset::from_bits(n, bits);
    if (q.is_full() || q.size() < 3 || !q.contains(zero) || !q.contains(a.one())) continue;
    if (!is_subalgebra(a, q)) continue;
    subsets.push_back(q);
  }
  std::sort(subsets.begin(), subsets.end());
  std::vector<SmarandacheCandidate> out;
  for (const Subset& q : subsets) {
    SmarandacheCandidate c{q, make_subalgebra(ref, q, a.label() + "|Q"), {}};
    c.report = classify(*c.sub.algebra);
    if (c.report.mtl.holds) out.push_back(std::move(c));
  }
  return out;
}

std::vector<UnaryMap> svto(const AlgebraRef& a, const Subset& q) {
  SmarandacheCandidate c = smarandache_substructure(a, q);
  return vto_flw_on(c.sub.algebra, *c.report.product);
}

Restriction restrict_vto(const UnaryMap& v, const Subset& q) {
  Restriction r;
  SmarandacheCandidate c;
  try {
    c = smarandache_substructure(v.parent, q);
  } catch (const WorkbenchError& e) {
    r.reason = e.what();
    return r;
  }
  std::vector<Element> image(c.sub.embedding.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    const Element y = v(c.sub.embedding[i]);
    if (!c.sub.index[y]) {
      r.reason = "v maps " + v.parent->name(c.sub.embedding[i]) + " outside Q";
      return r;
    }
    image[i] = *c.sub.index[y];
  }
  UnaryMap restricted{c.sub.algebra, std::move(image)};
  Verdict ok = is_vto(restricted);
  if (ok) ok = vt5_verdict(restricted, *c.report.product);
  if (!ok) {
    r.reason = "restriction fails " + describe(ok, *c.sub.algebra);
    return r;
  }
  r.map = std::move(restricted);
  return r;
}

}  // namespace psbck
