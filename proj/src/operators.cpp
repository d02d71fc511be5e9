#include "psbck/operators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "psbck/deduction.hpp"
#include "psbck/error.hpp"
#include "psbck/limits.hpp"

namespace psbck {
namespace {

std::optional<Verdict> first_single(std::size_t n, const char* axiom,
                                    const std::function<bool(Element)>& holds) {
  for (Element x = 0; x < n; ++x)
    if (!holds(x)) return Verdict::fail(axiom, {x});
  return std::nullopt;
}

std::optional<Verdict> first_pair(std::size_t n, const char* axiom,
                                  const std::function<bool(Element, Element)>& holds) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!holds(x, y)) return Verdict::fail(axiom, {x, y});
  return std::nullopt;
}

Verdict check_operator(const UnaryMap& f, bool increasing) {
  const auto& a = *f.parent;
  const std::size_t n = a.size();
  const char* io1 = increasing ? "increasing" : "IO1";
  if (auto v = first_single(n, io1, [&](Element x) {
        return increasing ? a.leq(x, f(x)) : a.leq(f(x), x);
      }))
    return *v;
  if (auto v = first_pair(n, "IO2", [&](Element x, Element y) {
        return !a.leq(x, y) || a.leq(f(x), f(y));
      }))
    return *v;
  if (auto v = first_single(n, "IO3", [&](Element x) { return f(f(x)) == f(x); })) return *v;
  return Verdict::pass();
}

// Elements ordered so that everything below x comes before x.
std::vector<Element> linear_extension(const FiniteAlgebra& a) {
  std::vector<Element> order(a.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::vector<std::size_t> below(a.size(), 0);
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(y, x)) ++below[x];
  std::stable_sort(order.begin(), order.end(),
                   [&](Element x, Element y) { return below[x] < below[y]; });
  return order;
}

enum class Direction { kDown, kUp };

// Depth-first search over monotone idempotent maps with f(x) in the down-set
// (or up-set) of x. Elements are assigned along a linear extension in the
// direction of the bound, so f(x) is always assigned before x unless f(x)=x
// and idempotency can be checked on the spot.
std::vector<UnaryMap> search_operators(const AlgebraRef& ref, Direction dir, bool fix_one,
                                       const std::function<bool(const UnaryMap&)>& accept) {
  const auto& a = *ref;
  const std::size_t n = a.size();
  std::vector<Element> order = linear_extension(a);
  if (dir == Direction::kUp) std::reverse(order.begin(), order.end());

  constexpr Element kUnset = ~Element{0};
  std::vector<Element> image(n, kUnset);
  std::vector<UnaryMap> found;

  std::function<void(std::size_t)> step = [&](std::size_t depth) {
    if (depth == n) {
      UnaryMap f{ref, image};
      if (accept(f)) found.push_back(std::move(f));
      return;
    }
    const Element x = order[depth];
    for (Element c = 0; c < n; ++c) {
      if (fix_one && x == a.one() && c != a.one()) continue;
      if (dir == Direction::kDown ? !a.leq(c, x) : !a.leq(x, c)) continue;
      // idempotency: f(c) must be c
      if (c != x && image[c] != c) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Element y = order[k];
        if (a.leq(y, x) && !a.leq(image[y], c)) ok = false;
        if (a.leq(x, y) && !a.leq(c, image[y])) ok = false;
        // an earlier y mapped onto x forces x to be fixed
        if (image[y] == x && c != x) ok = false;
      }
      if (!ok) continue;
      image[x] = c;
      step(depth + 1);
      image[x] = kUnset;
    }
  };
  step(0);
  std::sort(found.begin(), found.end(),
            [](const UnaryMap& f, const UnaryMap& g) { return f.image < g.image; });
  return found;
}

Element double_negation(const FiniteAlgebra& a, Element x) { return neg_sim(a, neg_minus(a, x)); }

void require_glivenko(const FiniteAlgebra& a) {
  if (!a.bounded() || !is_good(a) || !is_glivenko(a)) {
    throw WorkbenchError(ErrorCode::kGlivenkoRequired,
                         "algebra '" + a.label() +
                             "' must be bounded, good and have the Glivenko property");
  }
}

Verdict check_kind(const UnaryMap& f, OperatorKind kind) {
  return kind == OperatorKind::kInterior ? is_interior(f) : is_vto(f);
}

void require_kind(const UnaryMap& f, OperatorKind kind) {
  Verdict v = check_kind(f, kind);
  if (!v) {
    throw WorkbenchError(ErrorCode::kInvalidMap,
                         std::string("map is not a certified ") +
                             (kind == OperatorKind::kInterior ? "interior" : "very true") +
                             " operator: " + describe(v, *f.parent));
  }
}

}  // namespace

Verdict is_interior(const UnaryMap& f) { return check_operator(f, false); }

Verdict is_closure(const UnaryMap& f) { return check_operator(f, true); }

Verdict is_vto(const UnaryMap& f) {
  const auto& a = *f.parent;
  const std::size_t n = a.size();
  if (f(a.one()) != a.one()) return Verdict::fail("VT1", {a.one()});
  if (auto v = first_single(n, "VT2", [&](Element x) { return a.leq(f(x), x); })) return *v;
  if (auto v = first_single(n, "VT3", [&](Element x) { return a.leq(f(x), f(f(x))); })) return *v;
  if (auto v = first_pair(n, "VT4", [&](Element x, Element y) {
        return a.leq(f(a.arrow(x, y)), a.arrow(f(x), f(y))) &&
               a.leq(f(a.squig(x, y)), a.squig(f(x), f(y)));
      }))
    return *v;
  return Verdict::pass();
}

bool is_monotone(const UnaryMap& f) {
  const auto& a = *f.parent;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && !a.leq(f(x), f(y))) return false;
  return true;
}

bool is_idempotent(const UnaryMap& f) {
  for (Element x = 0; x < f.size(); ++x)
    if (f(f(x)) != f(x)) return false;
  return true;
}

std::vector<UnaryMap> enumerate_interior(const AlgebraRef& a) {
  require_within_cap(a->size(), limits().operator_enumeration, "interior operator enumeration");
  return search_operators(a, Direction::kDown, false,
                          [](const UnaryMap& f) { return bool(is_interior(f)); });
}

std::vector<UnaryMap> enumerate_closure(const AlgebraRef& a) {
  require_within_cap(a->size(), limits().operator_enumeration, "closure operator enumeration");
  return search_operators(a, Direction::kUp, false,
                          [](const UnaryMap& f) { return bool(is_closure(f)); });
}

std::vector<UnaryMap> enumerate_vto(const AlgebraRef& a) {
  require_within_cap(a->size(), limits().operator_enumeration, "very true operator enumeration");
  return search_operators(a, Direction::kDown, true,
                          [](const UnaryMap& f) { return bool(is_vto(f)); });
}

UnaryMap compose(const UnaryMap& f, const UnaryMap& g) {
  if (!same_parent(f, g)) {
    throw WorkbenchError(ErrorCode::kParentMismatch, "cannot compose maps on different algebras");
  }
  std::vector<Element> image(g.size());
  for (Element x = 0; x < g.size(); ++x) image[x] = f(g(x));
  return UnaryMap{f.parent, std::move(image)};
}

Subset fix_points(const UnaryMap& f) {
  Subset s(f.size());
  for (Element x = 0; x < f.size(); ++x)
    if (f(x) == x) s.insert(x);
  return s;
}

Subset image_set(const UnaryMap& f) {
  Subset s(f.size());
  for (Element x = 0; x < f.size(); ++x) s.insert(f(x));
  return s;
}

Subset kernel(const UnaryMap& f) {
  Subset s(f.size());
  for (Element x = 0; x < f.size(); ++x)
    if (f(x) == f.parent->one()) s.insert(x);
  return s;
}

UnaryMap globalization(const AlgebraRef& a) {
  UnaryMap g = constant_map(a, a->require_zero());
  g.image[a->one()] = a->one();
  return g;
}

LiftedOperator lift_to_reg(const UnaryMap& f, OperatorKind kind) {
  const AlgebraRef& ref = f.parent;
  require_glivenko(*ref);
  require_kind(f, kind);
  Subalgebra reg = make_subalgebra(ref, regular_elements(*ref), "Reg(" + ref->label() + ")");
  std::vector<Element> image(reg.embedding.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    image[i] = reg.to_sub(double_negation(*ref, f(reg.embedding[i])));
  }
  UnaryMap lifted{reg.algebra, std::move(image)};
  Verdict verdict = check_kind(lifted, kind);
  return {reg.algebra, std::move(lifted), std::move(verdict)};
}

LiftedOperator lift_to_den_quotient(const UnaryMap& f, OperatorKind kind) {
  const AlgebraRef& ref = f.parent;
  require_glivenko(*ref);
  require_kind(f, kind);
  Quotient q = congruence_from(ref, dense_elements(*ref), ref->label() + "/Den");
  std::vector<Element> image(q.class_count());
  for (Element x = 0; x < ref->size(); ++x) {
    const Element target = q.project(f(x));
    if (x == q.representatives[q.project(x)]) {
      image[q.project(x)] = target;
    } else if (image[q.project(x)] != target) {
      throw WorkbenchError(ErrorCode::kWellDefinednessFailure,
                           "lifted operator depends on the representative of class [" +
                               ref->name(q.representatives[q.project(x)]) + "]");
    }
  }
  UnaryMap lifted{q.algebra, std::move(image)};
  Verdict verdict = check_kind(lifted, kind);
  return {q.algebra, std::move(lifted), std::move(verdict)};
}

SigmaHedges sigma_hedges(const UnaryMap& v) {
  const auto& a = *v.parent;
  a.require_zero();
  std::vector<Element> first(a.size());
  std::vector<Element> second(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    first[x] = neg_sim(a, v(neg_minus(a, x)));
    second[x] = neg_minus(a, v(neg_sim(a, x)));
  }
  return {UnaryMap{v.parent, std::move(first)}, UnaryMap{v.parent, std::move(second)}};
}

Verdict is_vtst(const UnaryMap& v, const UnaryMap& s1, const UnaryMap& s2) {
  if (!same_parent(v, s1) || !same_parent(v, s2)) {
    throw WorkbenchError(ErrorCode::kParentMismatch, "vt,st operators live on different algebras");
  }
  const auto& a = *v.parent;
  const Element zero = a.require_zero();
  if (Verdict vt = is_vto(v); !vt) return vt;
  if (s1(zero) != zero || s2(zero) != zero) return Verdict::fail("ST1", {zero});
  if (auto r = first_single(a.size(), "ST2", [&](Element x) {
        return a.leq(x, s1(x)) && a.leq(x, s2(x));
      }))
    return *r;
  if (auto r = first_pair(a.size(), "ST3", [&](Element x, Element y) {
        return a.leq(v(a.arrow(x, y)), a.arrow(s1(x), s1(y))) &&
               a.leq(v(a.squig(x, y)), a.squig(s2(x), s2(y)));
      }))
    return *r;
  return Verdict::pass();
}

Verdict is_vtst(const VtstStructure& s) { return is_vtst(s.v, s.s1, s.s2); }

std::vector<UnaryMap> enumerate_st_components(const UnaryMap& v, bool first) {
  const AlgebraRef& ref = v.parent;
  const auto& a = *ref;
  require_within_cap(a.size(), limits().operator_enumeration, "truth-depressing hedge enumeration");
  const Element zero = a.require_zero();
  const std::size_t n = a.size();
  std::vector<Element> image(n, 0);
  std::vector<UnaryMap> found;
  auto op = [&](Element x, Element y) { return first ? a.arrow(x, y) : a.squig(x, y); };
  // ST3 is checked for each pair as soon as both ends are assigned
  std::function<void(Element)> step = [&](Element x) {
    if (x == n) {
      found.push_back(UnaryMap{ref, image});
      return;
    }
    for (Element c = 0; c < n; ++c) {
      if (x == zero ? c != zero : !a.leq(x, c)) continue;
      image[x] = c;
      bool ok = true;
      for (Element y = 0; y <= x && ok; ++y) {
        ok = a.leq(v(op(x, y)), op(image[x], image[y])) &&
             a.leq(v(op(y, x)), op(image[y], image[x]));
      }
      if (ok) step(x + 1);
    }
  };
  step(0);
  return found;
}

std::vector<UnaryMap> enumerate_monotone_st_inputs(const AlgebraRef& a) {
  require_within_cap(a->size(), limits().operator_enumeration, "monotone hedge enumeration");
  const Element zero = a->require_zero();
  const std::size_t n = a->size();
  std::vector<Element> image(n, 0);
  std::vector<UnaryMap> found;
  std::function<void(Element)> step = [&](Element x) {
    if (x == n) {
      found.push_back(UnaryMap{a, image});
      return;
    }
    for (Element c = 0; c < n; ++c) {
      if (x == zero ? c != zero : !a->leq(x, c)) continue;
      bool ok = true;
      for (Element y = 0; y < x && ok; ++y) {
        if (a->leq(y, x) && !a->leq(image[y], c)) ok = false;
        if (a->leq(x, y) && !a->leq(c, image[y])) ok = false;
      }
      if (!ok) continue;
      image[x] = c;
      step(x + 1);
    }
  };
  step(0);
  return found;
}

}  // namespace psbck
