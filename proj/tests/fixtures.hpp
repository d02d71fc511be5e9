#pragma once

// Hand-entered tables and brute-force oracles shared by the unit tests. The
// oracles deliberately re-derive everything from the raw tables instead of
// calling the library predicates they are used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#include "psbck/algebra.hpp"
#include "psbck/maps.hpp"

namespace fixtures {

using psbck::AlgebraRef;
using psbck::Element;

inline std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline psbck::RawAlgebra raw(const std::string& name, const std::string& elements,
                             const std::string& one, const std::string& zero,
                             const std::vector<std::string>& arrow,
                             const std::vector<std::string>& squig) {
  psbck::RawAlgebra r;
  r.name = name;
  r.element_names = words(elements);
  auto id = [&](const std::string& w) {
    for (Element i = 0; i < r.element_names.size(); ++i)
      if (r.element_names[i] == w) return i;
    throw std::runtime_error("fixture: unknown element " + w);
  };
  r.one = id(one);
  if (!zero.empty()) r.zero = id(zero);
  auto table = [&](const std::vector<std::string>& rows) {
    std::vector<std::vector<Element>> t;
    for (const auto& row : rows) {
      std::vector<Element> ids;
      for (const auto& w : words(row)) ids.push_back(id(w));
      t.push_back(ids);
    }
    return t;
  };
  r.arrow = table(arrow);
  r.squig = table(squig);
  return r;
}

// Four elements, zero = a; the smallest example with interior operators that
// are not very true.
inline AlgebraRef ex4() {
  return psbck::certify(raw("ex4", "1 a b c", "1", "a",
                            {"1 a b c", "1 1 1 1", "1 a 1 c", "1 b 1 1"},
                            {"1 a b c", "1 1 1 1", "1 c 1 c", "1 c 1 1"}));
}

// Six-element involutive algebra with ten very true operators.
inline AlgebraRef ex6() {
  return psbck::certify(raw("ex6", "1 a b c d e", "1", "e",
                            {"1 a b c d e", "1 1 d 1 1 d", "1 c 1 1 1 c", "1 a d 1 d a",
                             "1 c b c 1 b", "1 1 1 1 1 1"},
                            {"1 a b c d e", "1 1 c 1 1 c", "1 d 1 1 1 d", "1 d b 1 d b",
                             "1 a c c 1 a", "1 1 1 1 1 1"}));
}

// Six elements 0 < a < b < c < 1 and 0 < d < c.
inline AlgebraRef ex6b() {
  return psbck::certify(raw("ex6b", "0 a b c d 1", "1", "0",
                            {"1 1 1 1 1 1", "0 1 1 1 c 1", "0 b 1 1 c 1", "0 b b 1 c 1",
                             "0 b b 1 1 1", "0 a b c d 1"},
                            {"1 1 1 1 1 1", "0 1 1 1 c 1", "0 c 1 1 c 1", "0 a b 1 c 1",
                             "0 a b 1 1 1", "0 a b c d 1"}));
}

inline AlgebraRef chain2() {
  return psbck::certify(raw("chain2", "0 1", "1", "0", {"1 1", "0 1"}, {"1 1", "0 1"}));
}

inline AlgebraRef trivial() {
  return psbck::certify(raw("one", "1", "1", "1", {"1"}, {"1"}));
}

// Goedel chain 0 < 1 < ... < n-1 (top is n-1): x->y = top if x<=y else y.
inline AlgebraRef goedel(std::size_t n) {
  psbck::RawAlgebra r;
  r.name = "goedel" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i) r.element_names.push_back("g" + std::to_string(i));
  const Element top = static_cast<Element>(n - 1);
  r.one = top;
  r.zero = 0;
  r.arrow.assign(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) r.arrow[x][y] = x <= y ? top : y;
  r.squig = r.arrow;
  return psbck::certify(r);
}

// Lukasiewicz chain: x->y = min(top, top - x + y).
inline AlgebraRef lukasiewicz(std::size_t n) {
  psbck::RawAlgebra r;
  r.name = "luk" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i) r.element_names.push_back("l" + std::to_string(i));
  const int top = static_cast<int>(n - 1);
  r.one = static_cast<Element>(top);
  r.zero = 0;
  r.arrow.assign(n, std::vector<Element>(n));
  for (int x = 0; x <= top; ++x)
    for (int y = 0; y <= top; ++y) r.arrow[x][y] = static_cast<Element>(std::min(top, top - x + y));
  r.squig = r.arrow;
  return psbck::certify(r);
}

// Four-element Boolean algebra {0, p, q, 1}.
inline AlgebraRef boolean4() {
  // x->y = (not x) or y
  return psbck::certify(raw("bool4", "0 p q 1", "1", "0",
                            {"1 1 1 1", "q 1 q 1", "p p 1 1", "0 p q 1"},
                            {"1 1 1 1", "q 1 q 1", "p p 1 1", "0 p q 1"}));
}

inline std::vector<Element> ids(const AlgebraRef& a, const std::string& names) {
  std::vector<Element> out;
  for (const auto& w : words(names)) out.push_back(*a->find(w));
  return out;
}

inline psbck::UnaryMap map(const AlgebraRef& a, const std::string& names) {
  return psbck::make_map(a, ids(a, names));
}

inline psbck::Subset subset(const AlgebraRef& a, const std::string& names) {
  psbck::Subset s(a->size());
  for (Element x : ids(a, names)) s.insert(x);
  return s;
}

// ---- brute-force oracles ----

inline bool le(const psbck::FiniteAlgebra& a, Element x, Element y) {
  return a.arrow(x, y) == a.one();
}

// Every self-map, in lexicographic order.
inline void for_each_map(std::size_t n, std::size_t m,
                         const std::function<void(const std::vector<Element>&)>& f) {
  std::vector<Element> img(n, 0);
  while (true) {
    f(img);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++img[i] < m) break;
      img[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

inline std::vector<std::vector<Element>> oracle_interior(const psbck::FiniteAlgebra& a) {
  std::vector<std::vector<Element>> out;
  const auto n = a.size();
  for_each_map(n, n, [&](const std::vector<Element>& f) {
    for (Element x = 0; x < n; ++x) {
      if (!le(a, f[x], x) || f[f[x]] != f[x]) return;
      for (Element y = 0; y < n; ++y)
        if (le(a, x, y) && !le(a, f[x], f[y])) return;
    }
    out.push_back(f);
  });
  return out;
}

inline std::vector<std::vector<Element>> oracle_vto(const psbck::FiniteAlgebra& a) {
  std::vector<std::vector<Element>> out;
  const auto n = a.size();
  for_each_map(n, n, [&](const std::vector<Element>& f) {
    if (f[a.one()] != a.one()) return;
    for (Element x = 0; x < n; ++x) {
      if (!le(a, f[x], x) || !le(a, f[x], f[f[x]])) return;
      for (Element y = 0; y < n; ++y) {
        if (!le(a, f[a.arrow(x, y)], a.arrow(f[x], f[y]))) return;
        if (!le(a, f[a.squig(x, y)], a.squig(f[x], f[y]))) return;
      }
    }
    out.push_back(f);
  });
  return out;
}

inline std::vector<std::uint64_t> oracle_ds(const psbck::FiniteAlgebra& a) {
  std::vector<std::uint64_t> out;
  const auto n = a.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    auto in = [&](Element x) { return (bits >> x) & 1U; };
    if (!in(a.one())) continue;
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (Element y = 0; y < n && ok; ++y)
        if (in(x) && (in(a.arrow(x, y)) || in(a.squig(x, y))) && !in(y)) ok = false;
    if (ok) out.push_back(bits);
  }
  return out;
}

inline std::vector<std::vector<Element>> oracle_hom(const psbck::FiniteAlgebra& a,
                                                    const psbck::FiniteAlgebra& b) {
  std::vector<std::vector<Element>> out;
  for_each_map(a.size(), b.size(), [&](const std::vector<Element>& f) {
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y)
        if (f[a.arrow(x, y)] != b.arrow(f[x], f[y]) || f[a.squig(x, y)] != b.squig(f[x], f[y]))
          return;
    out.push_back(f);
  });
  return out;
}

}  // namespace fixtures
