#include "psbck/algebra.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "psbck/error.hpp"
#include "psbck/limits.hpp"

namespace psbck {

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  s.bits_ = universe >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe) - 1);
  return s;
}

Subset Subset::from_bits(std::size_t universe, std::uint64_t bits) {
  Subset s(universe);
  s.bits_ = bits & full(universe).bits_;
  return s;
}

Subset Subset::of(std::size_t universe, std::initializer_list<Element> members) {
  Subset s(universe);
  for (Element x : members) s.insert(x);
  return s;
}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<Element>(std::countr_zero(rest)));
  }
  return out;
}

Element FiniteAlgebra::require_zero() const {
  if (!zero_) {
    throw WorkbenchError(ErrorCode::kUnboundedAlgebra,
                         "algebra '" + label_ + "' has no zero; operation needs a bounded algebra");
  }
  return *zero_;
}

std::optional<Element> FiniteAlgebra::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Element>(i);
  }
  return std::nullopt;
}

RawAlgebra FiniteAlgebra::to_raw() const {
  RawAlgebra raw;
  raw.name = label_;
  raw.element_names = names_;
  raw.one = one_;
  raw.zero = zero_;
  const std::size_t n = size();
  raw.arrow.assign(n, std::vector<Element>(n));
  raw.squig.assign(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      raw.arrow[x][y] = arrow_[x * n + y];
      raw.squig[x][y] = squig_[x * n + y];
    }
  }
  return raw;
}

bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return a.names_ == b.names_ && a.one_ == b.one_ && a.zero_ == b.zero_ && a.arrow_ == b.arrow_ &&
         a.squig_ == b.squig_;
}

namespace {

std::string describe(const std::vector<std::string>& names, const std::vector<Element>& witness) {
  std::string out = "(";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ", ";
    out += names[witness[i]];
  }
  return out + ")";
}

// Lexicographically least pair/triple violating `holds`, if any.
std::optional<std::vector<Element>> first_pair(std::size_t n,
                                               const std::function<bool(Element, Element)>& holds) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!holds(x, y)) return std::vector<Element>{x, y};
  return std::nullopt;
}

std::optional<std::vector<Element>> first_triple(
    std::size_t n, const std::function<bool(Element, Element, Element)>& holds) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (!holds(x, y, z)) return std::vector<Element>{x, y, z};
  return std::nullopt;
}

std::optional<std::vector<Element>> first_single(std::size_t n,
                                                 const std::function<bool(Element)>& holds) {
  for (Element x = 0; x < n; ++x)
    if (!holds(x)) return std::vector<Element>{x};
  return std::nullopt;
}

void check_shape(const RawAlgebra& raw, std::vector<Diagnostic>& out) {
  const std::size_t n = raw.element_names.size();
  auto add = [&](std::string message) { out.push_back({"malformed", {}, std::move(message)}); };
  if (n == 0) {
    add("carrier is empty");
    return;
  }
  if (n > limits().carrier) {
    add("carrier has " + std::to_string(n) + " elements, cap is " +
        std::to_string(limits().carrier));
    return;
  }
  std::set<std::string> seen;
  for (const auto& name : raw.element_names) {
    if (name.empty()) add("empty element name");
    else if (!seen.insert(name).second) add("duplicate element name '" + name + "'");
  }
  if (raw.one >= n) add("constant one is out of range");
  if (raw.zero && *raw.zero >= n) add("constant zero is out of range");
  for (const auto* table : {&raw.arrow, &raw.squig}) {
    const char* which = table == &raw.arrow ? "arrow" : "squig";
    if (table->size() != n) {
      add(std::string(which) + " table has " + std::to_string(table->size()) + " rows, expected " +
          std::to_string(n));
      continue;
    }
    for (std::size_t r = 0; r < n; ++r) {
      const auto& row = (*table)[r];
      if (row.size() != n) {
        add(std::string(which) + " row " + std::to_string(r) + " has " +
            std::to_string(row.size()) + " entries, expected " + std::to_string(n));
        continue;
      }
      for (Element v : row) {
        if (v >= n) {
          add(std::string(which) + " row " + std::to_string(r) + " holds out-of-range id " +
              std::to_string(v));
          break;
        }
      }
    }
  }
}

}  // namespace

Validation validate(const RawAlgebra& raw) {
  Validation result;
  check_shape(raw, result.diagnostics);
  if (!result.diagnostics.empty()) return result;

  const std::size_t n = raw.element_names.size();
  const Element one = raw.one;
  const auto& ar = raw.arrow;
  const auto& sq = raw.squig;
  auto le = [&](Element x, Element y) { return ar[x][y] == one; };
  auto report = [&](const char* rule, const std::optional<std::vector<Element>>& witness,
                    const std::string& text) {
    if (!witness) return;
    result.diagnostics.push_back(
        {rule, *witness, text + " fails at " + describe(raw.element_names, *witness)});
  };

  report("psBCK1",
         first_triple(n,
                      [&](Element x, Element y, Element z) {
                        return le(ar[x][y], sq[ar[y][z]][ar[x][z]]) &&
                               le(sq[x][y], ar[sq[y][z]][sq[x][z]]);
                      }),
         "x->y <= (y->z)~>(x->z) and x~>y <= (y~>z)->(x~>z)");
  report("psBCK2",
         first_pair(n,
                    [&](Element x, Element y) {
                      return le(x, sq[ar[x][y]][y]) && le(x, ar[sq[x][y]][y]);
                    }),
         "x <= (x->y)~>y and x <= (x~>y)->y");
  report("psBCK3", first_single(n, [&](Element x) { return ar[x][x] == one && sq[x][x] == one; }),
         "x <= x");
  report("psBCK4",
         first_single(n, [&](Element x) { return ar[x][one] == one && sq[x][one] == one; }),
         "x <= 1");
  report("psBCK5",
         first_pair(n, [&](Element x, Element y) { return !(le(x, y) && le(y, x)) || x == y; }),
         "antisymmetry");
  report("psBCK6",
         first_pair(n, [&](Element x, Element y) { return (ar[x][y] == one) == (sq[x][y] == one); }),
         "x->y = 1 iff x~>y = 1");
  report("transitivity",
         first_triple(n,
                      [&](Element x, Element y, Element z) {
                        return !(le(x, y) && le(y, z)) || le(x, z);
                      }),
         "derived order transitivity");
  if (raw.zero) {
    const Element zero = *raw.zero;
    report("bounded", first_single(n, [&](Element x) { return le(zero, x); }), "0 <= x");
  }
  if (!result.diagnostics.empty()) return result;

  std::shared_ptr<FiniteAlgebra> algebra(new FiniteAlgebra());
  algebra->label_ = raw.name;
  algebra->names_ = raw.element_names;
  algebra->one_ = one;
  algebra->zero_ = raw.zero;
  algebra->arrow_.resize(n * n);
  algebra->squig_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      algebra->arrow_[x * n + y] = ar[x][y];
      algebra->squig_[x * n + y] = sq[x][y];
    }
  }
  result.algebra = std::move(algebra);
  return result;
}

AlgebraRef certify(const RawAlgebra& raw) {
  Validation v = validate(raw);
  if (v.ok()) return v.algebra;
  std::ostringstream msg;
  msg << "algebra '" << raw.name << "' is not a pseudo-BCK algebra:";
  for (const auto& d : v.diagnostics) msg << "\n  [" << d.rule << "] " << d.message;
  throw WorkbenchError(ErrorCode::kInvalidAlgebra, msg.str());
}

bool leq(const FiniteAlgebra& a, Element x, Element y) { return a.leq(x, y); }

Element neg_minus(const FiniteAlgebra& a, Element x) { return a.arrow(x, a.require_zero()); }

Element neg_sim(const FiniteAlgebra& a, Element x) { return a.squig(x, a.require_zero()); }

Subset regular_elements(const FiniteAlgebra& a) {
  Subset out = a.empty_set();
  for (Element x = 0; x < a.size(); ++x) {
    if (neg_sim(a, neg_minus(a, x)) == x && neg_minus(a, neg_sim(a, x)) == x) out.insert(x);
  }
  return out;
}

Subset dense_elements(const FiniteAlgebra& a) {
  Subset out = a.empty_set();
  for (Element x = 0; x < a.size(); ++x) {
    if (neg_sim(a, neg_minus(a, x)) == a.one() && neg_minus(a, neg_sim(a, x)) == a.one()) {
      out.insert(x);
    }
  }
  return out;
}

bool is_good(const FiniteAlgebra& a) {
  for (Element x = 0; x < a.size(); ++x) {
    if (neg_sim(a, neg_minus(a, x)) != neg_minus(a, neg_sim(a, x))) return false;
  }
  return true;
}

bool is_involutive(const FiniteAlgebra& a) { return regular_elements(a).is_full(); }

bool is_glivenko(const FiniteAlgebra& a) {
  if (!is_good(a)) return false;
  auto dn = [&](Element x) { return neg_sim(a, neg_minus(a, x)); };
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (dn(a.arrow(x, y)) != a.arrow(x, dn(y))) return false;
      if (dn(a.squig(x, y)) != a.squig(x, dn(y))) return false;
    }
  }
  return true;
}

bool is_linear(const FiniteAlgebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = x + 1; y < a.size(); ++y)
      if (!a.leq(x, y) && !a.leq(y, x)) return false;
  return true;
}

bool order_is_bounded_partial_order(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  for (Element x = 0; x < n; ++x) {
    if (!a.leq(x, x) || !a.leq(x, a.one())) return false;
    if (a.zero() && !a.leq(*a.zero(), x)) return false;
    for (Element y = 0; y < n; ++y) {
      if (a.leq(x, y) != (a.squig(x, y) == a.one())) return false;
      if (x != y && a.leq(x, y) && a.leq(y, x)) return false;
      for (Element z = 0; z < n; ++z)
        if (a.leq(x, y) && a.leq(y, z) && !a.leq(x, z)) return false;
    }
  }
  return true;
}

std::optional<Element> join(const FiniteAlgebra& a, Element x, Element y) {
  std::optional<Element> best;
  for (Element z = 0; z < a.size(); ++z) {
    if (!a.leq(x, z) || !a.leq(y, z)) continue;
    if (!best || a.leq(z, *best)) best = z;
  }
  for (Element z = 0; z < a.size(); ++z) {
    if (a.leq(x, z) && a.leq(y, z) && !a.leq(*best, z)) return std::nullopt;
  }
  return best;
}

std::optional<Element> meet(const FiniteAlgebra& a, Element x, Element y) {
  std::optional<Element> best;
  for (Element z = 0; z < a.size(); ++z) {
    if (!a.leq(z, x) || !a.leq(z, y)) continue;
    if (!best || a.leq(*best, z)) best = z;
  }
  if (!best) return std::nullopt;
  for (Element z = 0; z < a.size(); ++z) {
    if (a.leq(z, x) && a.leq(z, y) && !a.leq(z, *best)) return std::nullopt;
  }
  return best;
}

bool is_subalgebra(const FiniteAlgebra& a, const Subset& s) {
  if (!s.contains(a.one())) return false;
  const auto members = s.elements();
  for (Element x : members) {
    for (Element y : members) {
      if (!s.contains(a.arrow(x, y)) || !s.contains(a.squig(x, y))) return false;
    }
  }
  return true;
}

Subalgebra make_subalgebra(const AlgebraRef& a, const Subset& s, std::string label) {
  if (!is_subalgebra(*a, s)) {
    throw WorkbenchError(ErrorCode::kInvalidAlgebra,
                         "subset is not closed under the implications of '" + a->label() + "'");
  }
  Subalgebra sub;
  sub.embedding = s.elements();
  sub.index.assign(a->size(), std::nullopt);
  for (std::size_t i = 0; i < sub.embedding.size(); ++i) {
    sub.index[sub.embedding[i]] = static_cast<Element>(i);
  }
  RawAlgebra raw;
  raw.name = label.empty() ? a->label() + "|sub" : std::move(label);
  const std::size_t m = sub.embedding.size();
  for (Element x : sub.embedding) raw.element_names.push_back(a->name(x));
  raw.one = *sub.index[a->one()];
  if (a->zero() && s.contains(*a->zero())) raw.zero = *sub.index[*a->zero()];
  raw.arrow.assign(m, std::vector<Element>(m));
  raw.squig.assign(m, std::vector<Element>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      raw.arrow[i][j] = *sub.index[a->arrow(sub.embedding[i], sub.embedding[j])];
      raw.squig[i][j] = *sub.index[a->squig(sub.embedding[i], sub.embedding[j])];
    }
  }
  sub.algebra = certify(raw);
  return sub;
}

bool LawReport::passed() const { return first_failure() == nullptr; }

const LawCheck* LawReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return &c;
  return nullptr;
}

LawReport derived_law_suite(const FiniteAlgebra& a) {
  LawReport report;
  const std::size_t n = a.size();
  auto im = [&](Element x, Element y) { return a.arrow(x, y); };
  auto sq = [&](Element x, Element y) { return a.squig(x, y); };
  auto le = [&](Element x, Element y) { return a.leq(x, y); };
  auto add2 = [&](const char* law, const std::function<bool(Element, Element)>& holds) {
    auto w = first_pair(n, holds);
    report.checks.push_back({law, !w.has_value(), w.value_or(std::vector<Element>{})});
  };
  auto add3 = [&](const char* law, const std::function<bool(Element, Element, Element)>& holds) {
    auto w = first_triple(n, holds);
    report.checks.push_back({law, !w.has_value(), w.value_or(std::vector<Element>{})});
  };

  add3("exchange", [&](Element x, Element y, Element z) {
    return im(x, sq(y, z)) == sq(y, im(x, z));
  });
  add3("antitone-in-antecedent", [&](Element x, Element y, Element z) {
    return !le(x, y) || (le(im(y, z), im(x, z)) && le(sq(y, z), sq(x, z)));
  });
  add3("monotone-in-consequent", [&](Element x, Element y, Element z) {
    return !le(x, y) || (le(im(z, x), im(z, y)) && le(sq(z, x), sq(z, y)));
  });
  add3("prefixing", [&](Element x, Element y, Element z) {
    return le(im(x, y), im(im(z, x), im(z, y))) && le(sq(x, y), sq(sq(z, x), sq(z, y)));
  });

  if (!a.bounded()) return report;
  auto mi = [&](Element x) { return neg_minus(a, x); };
  auto si = [&](Element x) { return neg_sim(a, x); };

  add2("double-negation-increasing", [&](Element x, Element) {
    return le(x, si(mi(x))) && le(x, mi(si(x)));
  });
  add2("negation-exchange", [&](Element x, Element y) {
    return im(x, si(y)) == sq(y, mi(x)) && sq(x, mi(y)) == im(y, si(x));
  });
  add2("negated-exchange", [&](Element x, Element y) {
    return im(si(x), si(mi(y))) == sq(mi(y), mi(si(x))) &&
           sq(mi(x), mi(si(y))) == im(si(y), si(mi(x)));
  });
  add2("negation-antitone", [&](Element x, Element y) {
    return !le(x, y) || (le(mi(y), mi(x)) && le(si(y), si(x)) && le(si(mi(x)), si(mi(y))) &&
                         le(mi(si(x)), mi(si(y))));
  });
  add2("triple-negation", [&](Element x, Element) {
    return mi(si(mi(x))) == mi(x) && si(mi(si(x))) == si(x);
  });
  add2("into-double-negation", [&](Element x, Element y) {
    return im(x, si(mi(y))) == sq(mi(y), mi(x)) && sq(mi(y), mi(x)) == im(si(mi(x)), si(mi(y))) &&
           sq(x, mi(si(y))) == im(si(y), si(x)) && im(si(y), si(x)) == sq(mi(si(x)), mi(si(y)));
  });
  add2("into-negation", [&](Element x, Element y) {
    return im(x, si(y)) == sq(mi(si(y)), mi(x)) && sq(mi(si(y)), mi(x)) == im(si(mi(x)), si(y)) &&
           sq(x, mi(y)) == im(si(mi(y)), si(x)) && im(si(mi(y)), si(x)) == sq(mi(si(x)), mi(y));
  });
  add2("double-negation-closed", [&](Element x, Element y) {
    return mi(si(im(x, mi(si(y))))) == im(x, mi(si(y))) &&
           si(mi(sq(x, si(mi(y))))) == sq(x, si(mi(y)));
  });
  add2("contraposition", [&](Element x, Element y) {
    return le(im(x, y), sq(mi(y), mi(x))) && le(sq(x, y), im(si(y), si(x)));
  });
  return report;
}

}  // namespace psbck
