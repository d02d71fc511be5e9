#include "psbck/morphisms.hpp"

#include <algorithm>
#include <functional>

#include "psbck/error.hpp"
#include "psbck/limits.hpp"
#include "psbck/operators.hpp"

namespace psbck {
namespace {

constexpr Element kUnset = ~Element{0};

bool same_algebra(const AlgebraRef& a, const AlgebraRef& b) {
  return a == b || (a && b && *a == *b);
}

// Depth-first search over maps A -> B in source id order with ascending
// values, so results come out lexicographically. Each new assignment is
// checked against every pair whose three relevant values are known.
void search_homs(const FiniteAlgebra& a, const FiniteAlgebra& b, bool injective,
                 const std::function<bool(const std::vector<Element>&)>& visit) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<Element> f(n, kUnset);
  std::vector<bool> used(m, false);
  f[a.one()] = b.one();
  used[b.one()] = true;

  auto consistent = [&](Element x) {
    for (Element y = 0; y < n; ++y) {
      if (f[y] == kUnset) continue;
      for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
        const Element r = a.arrow(p, q);
        if (f[r] != kUnset && f[r] != b.arrow(f[p], f[q])) return false;
        const Element s = a.squig(p, q);
        if (f[s] != kUnset && f[s] != b.squig(f[p], f[q])) return false;
      }
    }
    return true;
  };

  bool stop = false;
  std::function<void(Element)> step = [&](Element x) {
    if (stop) return;
    if (x == n) {
      if (!visit(f)) stop = true;
      return;
    }
    if (x == a.one()) {
      if (consistent(x)) step(x + 1);
      return;
    }
    for (Element c = 0; c < m && !stop; ++c) {
      if (injective && used[c]) continue;
      f[x] = c;
      if (consistent(x)) {
        used[c] = true;
        step(x + 1);
        used[c] = false;
      }
      f[x] = kUnset;
    }
  };
  step(0);
}

LawCheck subset_check(std::string law, bool ok, const Subset& s) {
  return {std::move(law), ok, ok ? std::vector<Element>{} : s.elements()};
}

}  // namespace

bool operator==(const Homomorphism& a, const Homomorphism& b) {
  return a.map == b.map && same_algebra(a.source, b.source) && same_algebra(a.target, b.target);
}

Homomorphism make_hom(const AlgebraRef& source, const AlgebraRef& target,
                      std::vector<Element> map) {
  if (map.size() != source->size()) {
    throw WorkbenchError(ErrorCode::kInvalidMap,
                         "homomorphism from '" + source->label() + "' needs " +
                             std::to_string(source->size()) + " values, got " +
                             std::to_string(map.size()));
  }
  for (Element y : map) {
    if (y >= target->size()) {
      throw WorkbenchError(ErrorCode::kInvalidMap, "homomorphism value out of range");
    }
  }
  return {source, target, std::move(map)};
}

Verdict is_hom(const Homomorphism& f) {
  const auto& a = *f.source;
  const auto& b = *f.target;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (f(a.arrow(x, y)) != b.arrow(f(x), f(y))) return Verdict::fail("preserves ->", {x, y});
      if (f(a.squig(x, y)) != b.squig(f(x), f(y))) return Verdict::fail("preserves ~>", {x, y});
    }
  }
  return Verdict::pass();
}

std::vector<Homomorphism> enumerate_hom(const AlgebraRef& a, const AlgebraRef& b) {
  const std::size_t cap = limits().endomorphism_enumeration;
  require_within_cap(a->size(), cap, "homomorphism enumeration");
  require_within_cap(b->size(), cap, "homomorphism enumeration");
  std::vector<Homomorphism> out;
  search_homs(*a, *b, false, [&](const std::vector<Element>& f) {
    out.push_back({a, b, f});
    return true;
  });
  return out;
}

Verdict is_vthom(const VtHomomorphism& f) {
  if (!same_algebra(f.v.parent, f.base.source) || !same_algebra(f.u.parent, f.base.target)) {
    throw WorkbenchError(ErrorCode::kParentMismatch,
                         "operators must live on the source and target of the homomorphism");
  }
  if (Verdict h = is_hom(f.base); !h) return h;
  for (Element x = 0; x < f.base.source->size(); ++x) {
    if (f.base(f.v(x)) != f.u(f.base(x))) return Verdict::fail("intertwines v and u", {x});
  }
  return Verdict::pass();
}

std::vector<Homomorphism> enumerate_vthom(const UnaryMap& v, const UnaryMap& u) {
  std::vector<Homomorphism> out;
  for (Homomorphism& h : enumerate_hom(v.parent, u.parent)) {
    bool ok = true;
    for (Element x = 0; x < h.source->size() && ok; ++x) ok = h(v(x)) == u(h(x));
    if (ok) out.push_back(std::move(h));
  }
  return out;
}

Subset hom_kernel(const Homomorphism& f) {
  Subset s(f.source->size());
  for (Element x = 0; x < f.source->size(); ++x)
    if (f(x) == f.target->one()) s.insert(x);
  return s;
}

Subset hom_image(const Homomorphism& f) { return image_of(f, f.source->full_set()); }

Subset image_of(const Homomorphism& f, const Subset& s) {
  Subset out(f.target->size());
  for (Element x : s.elements()) out.insert(f(x));
  return out;
}

Subset preimage_of(const Homomorphism& f, const Subset& s) {
  Subset out(f.source->size());
  for (Element x = 0; x < f.source->size(); ++x)
    if (s.contains(f(x))) out.insert(x);
  return out;
}

bool is_surjective(const Homomorphism& f) { return hom_image(f).is_full(); }

bool is_injective(const Homomorphism& f) {
  return hom_image(f).size() == f.source->size();
}

bool is_very_true_subalgebra(const UnaryMap& v, const Subset& s) {
  if (!is_subalgebra(*v.parent, s)) return false;
  for (Element x : s.elements())
    if (!s.contains(v(x))) return false;
  return true;
}

std::vector<Subset> enumerate_very_true_subalgebras(const UnaryMap& v) {
  const std::size_t n = v.parent->size();
  require_within_cap(n, limits().subset_enumeration, "subalgebra enumeration");
  std::vector<Subset> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Subset s = Subset::from_bits(n, bits);
    if (is_very_true_subalgebra(v, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subset pushforward(const Homomorphism& f, const Subset& d) {
  if (!is_surjective(f)) {
    throw WorkbenchError(ErrorCode::kSurjectivityRequired,
                         "image of a deductive system needs a surjective homomorphism");
  }
  return image_of(f, d);
}

bool TransportReport::passed() const { return first_failure() == nullptr; }

const LawCheck* TransportReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return &c;
  return nullptr;
}

TransportReport transport(const VtHomomorphism& f) {
  if (Verdict ok = is_vthom(f); !ok) {
    throw WorkbenchError(ErrorCode::kInvalidMap,
                         "not a very true homomorphism: " + describe(ok, *f.base.source));
  }
  const Homomorphism& h = f.base;
  TransportReport r;
  r.surjective = is_surjective(h);

  {
    LawCheck c{"image of a very true subalgebra", true, {}};
    for (const Subset& s : enumerate_very_true_subalgebras(f.v)) {
      if (!is_very_true_subalgebra(f.u, image_of(h, s))) {
        c = subset_check(c.law, false, s);
        break;
      }
    }
    r.checks.push_back(c);
  }

  const Subset ker = hom_kernel(h);
  r.checks.push_back(subset_check("kernel is a normal v-deductive system",
                                  is_v_deductive_system(f.v, ker) && is_normal(*h.source, ker),
                                  ker));

  if (r.surjective) {
    LawCheck c{"image of a v-deductive system", true, {}};
    for (const Subset& d : enumerate_ds_v(f.v)) {
      if (!is_v_deductive_system(f.u, image_of(h, d))) {
        c = subset_check(c.law, false, d);
        break;
      }
    }
    r.checks.push_back(c);
  }

  {
    LawCheck c{"preimage of a u-deductive system", true, {}};
    for (const Subset& g : enumerate_ds_v(f.u)) {
      if (!is_v_deductive_system(f.v, preimage_of(h, g))) {
        // witness in target ids
        c = subset_check(c.law, false, g);
        break;
      }
    }
    r.checks.push_back(c);
  }

  const Subset pre = preimage_of(h, kernel(f.u));
  r.checks.push_back(
      subset_check("preimage of Ker(u)", is_v_deductive_system(f.v, pre), pre));
  if (r.surjective) {
    const Subset img = image_of(h, kernel(f.v));
    r.checks.push_back(
        subset_check("image of Ker(v)", is_v_deductive_system(f.u, img), img));
  }
  return r;
}

Homomorphism projection(const Quotient& q) { return {q.source, q.algebra, q.class_of}; }

Factorization factor(const VtHomomorphism& f, const Subset& h) {
  const Homomorphism& psi = f.base;
  const Subset ker = hom_kernel(psi);
  if (!h.is_subset_of(ker)) {
    throw WorkbenchError(ErrorCode::kKernelContainmentViolated,
                         "deductive system is not contained in the kernel");
  }
  Factorization r;
  r.quotient = congruence_from(psi.source, h);
  const Quotient& q = r.quotient;
  r.v_hat = lift_vto_to_quotient(q, f.v);

  std::vector<Element> map(q.class_count());
  for (Element cls = 0; cls < q.class_count(); ++cls) map[cls] = psi(q.representatives[cls]);
  r.induced = {Homomorphism{q.algebra, psi.target, std::move(map)}, r.v_hat.map, f.u};
  r.induced_verdict = is_vthom(r.induced);

  r.commutes = true;
  for (Element x = 0; x < psi.source->size(); ++x)
    if (r.induced.base(q.project(x)) != psi(x)) r.commutes = false;

  std::size_t matching = 0;
  for (const Homomorphism& g : enumerate_vthom(r.v_hat.map, f.u)) {
    bool composes = true;
    for (Element x = 0; x < psi.source->size() && composes; ++x)
      composes = g(q.project(x)) == psi(x);
    if (composes) ++matching;
  }
  r.unique = matching == 1;

  r.image_matches = hom_image(r.induced.base) == hom_image(psi);
  Subset ker_classes(q.class_count());
  for (Element x : ker.elements()) ker_classes.insert(q.project(x));
  r.kernel_matches = hom_kernel(r.induced.base) == ker_classes;
  return r;
}

FirstIsomorphism first_isomorphism(const VtHomomorphism& f) {
  FirstIsomorphism r;
  r.factorization = factor(f, hom_kernel(f.base));
  const Homomorphism& psi = f.base;
  r.image = make_subalgebra(psi.target, hom_image(psi), "Im");

  std::vector<Element> u_image(r.image.embedding.size());
  for (std::size_t i = 0; i < u_image.size(); ++i) {
    const Element y = f.u(r.image.embedding[i]);
    if (!r.image.index[y]) {
      throw WorkbenchError(ErrorCode::kInvalidMap, "u does not preserve the image");
    }
    u_image[i] = *r.image.index[y];
  }
  r.u_on_image = UnaryMap{r.image.algebra, std::move(u_image)};

  const auto& induced = r.factorization.induced.base;
  std::vector<Element> map(induced.map.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = r.image.to_sub(induced.map[i]);
  r.iso = {Homomorphism{induced.source, r.image.algebra, std::move(map)},
           r.factorization.v_hat.map, r.u_on_image};
  r.iso_verdict = is_vthom(r.iso);
  r.bijective = is_injective(r.iso.base) && is_surjective(r.iso.base);
  return r;
}

std::optional<Homomorphism> find_isomorphism(const AlgebraRef& a, const AlgebraRef& b) {
  if (a->size() != b->size()) return std::nullopt;
  std::optional<Homomorphism> found;
  search_homs(*a, *b, true, [&](const std::vector<Element>& f) {
    found = Homomorphism{a, b, f};
    return false;
  });
  return found;
}

}  // namespace psbck
