#include "psbck/deduction.hpp"

#include <algorithm>

#include "psbck/error.hpp"
#include "psbck/limits.hpp"
#include "psbck/operators.hpp"

namespace psbck {
namespace {

// Raw power-set scans stay cheaper than closure completion up to this size.
constexpr std::size_t kScanLimit = 12;

bool closed_under_mp(const FiniteAlgebra& a, const Subset& d) {
  for (Element x : d.elements()) {
    for (Element y = 0; y < a.size(); ++y) {
      if (d.contains(a.arrow(x, y)) && !d.contains(y)) return false;
      if (d.contains(a.squig(x, y)) && !d.contains(y)) return false;
    }
  }
  return true;
}

// All closed sets of generate_deductive_system in lectic order (Ganter's
// NextClosure).
std::vector<Subset> next_closure_all(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<Subset> out;
  Subset current = generate_deductive_system(a, a.empty_set());
  while (true) {
    out.push_back(current);
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      const auto x = static_cast<Element>(i);
      if (current.contains(x)) continue;
      const std::uint64_t below = (std::uint64_t{1} << i) - 1;
      Subset seed = Subset::from_bits(n, current.bits() & below);
      seed.insert(x);
      Subset next = generate_deductive_system(a, seed);
      if ((next.bits() & below) == (current.bits() & below)) {
        current = next;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

}  // namespace

bool is_deductive_system(const FiniteAlgebra& a, const Subset& d) {
  return d.universe() == a.size() && d.contains(a.one()) && closed_under_mp(a, d);
}

bool is_normal(const FiniteAlgebra& a, const Subset& d) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (d.contains(a.arrow(x, y)) != d.contains(a.squig(x, y))) return false;
  return true;
}

bool is_normal_deductive_system(const FiniteAlgebra& a, const Subset& d) {
  return is_deductive_system(a, d) && is_normal(a, d);
}

bool is_v_deductive_system(const UnaryMap& v, const Subset& d) {
  if (!is_deductive_system(*v.parent, d)) return false;
  for (Element x : d.elements())
    if (!d.contains(v(x))) return false;
  return true;
}

Subset generate_deductive_system(const FiniteAlgebra& a, Subset seed) {
  seed.insert(a.one());
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element x : seed.elements()) {
      for (Element y = 0; y < a.size(); ++y) {
        if (seed.contains(y)) continue;
        if (seed.contains(a.arrow(x, y)) || seed.contains(a.squig(x, y))) {
          seed.insert(y);
          grew = true;
        }
      }
    }
  }
  return seed;
}

std::vector<Subset> enumerate_ds(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  require_within_cap(n, limits().subset_enumeration, "deductive system enumeration");
  std::vector<Subset> out;
  if (n <= kScanLimit) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Subset d = Subset::from_bits(n, bits);
      if (is_deductive_system(a, d)) out.push_back(d);
    }
  } else {
    out = next_closure_all(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> enumerate_ds_n(const FiniteAlgebra& a) {
  auto all = enumerate_ds(a);
  std::erase_if(all, [&](const Subset& d) { return !is_normal(a, d); });
  return all;
}

std::vector<Subset> enumerate_ds_v(const UnaryMap& v) {
  auto all = enumerate_ds(*v.parent);
  std::erase_if(all, [&](const Subset& d) { return !is_v_deductive_system(v, d); });
  return all;
}

std::vector<Subset> enumerate_ds_nv(const UnaryMap& v) {
  auto all = enumerate_ds_v(v);
  std::erase_if(all, [&](const Subset& d) { return !is_normal(*v.parent, d); });
  return all;
}

Subset Quotient::members(Element cls) const {
  Subset s(class_of.size());
  for (Element x = 0; x < class_of.size(); ++x)
    if (class_of[x] == cls) s.insert(x);
  return s;
}

Quotient congruence_from(const AlgebraRef& ref, const Subset& h, std::string label) {
  const auto& a = *ref;
  if (!is_deductive_system(a, h)) {
    throw WorkbenchError(ErrorCode::kNotNormal, "subset is not a deductive system of '" +
                                                    a.label() + "'");
  }
  if (!is_normal(a, h)) {
    throw WorkbenchError(ErrorCode::kNotNormal, "deductive system is not normal in '" +
                                                    a.label() + "'");
  }
  const std::size_t n = a.size();
  Quotient q;
  q.source = ref;
  q.kernel = h;
  constexpr Element kNone = ~Element{0};
  q.class_of.assign(n, kNone);
  for (Element x = 0; x < n; ++x) {
    if (q.class_of[x] != kNone) continue;
    const auto cls = static_cast<Element>(q.representatives.size());
    q.representatives.push_back(x);
    for (Element y = x; y < n; ++y) {
      if (h.contains(a.arrow(x, y)) && h.contains(a.arrow(y, x))) q.class_of[y] = cls;
    }
  }

  const std::size_t m = q.representatives.size();
  RawAlgebra raw;
  raw.name = label.empty() ? a.label() + "/H" : std::move(label);
  for (Element r : q.representatives) raw.element_names.push_back("[" + a.name(r) + "]");
  raw.one = q.class_of[a.one()];
  if (a.zero()) raw.zero = q.class_of[*a.zero()];
  raw.arrow.assign(m, std::vector<Element>(m, kNone));
  raw.squig.assign(m, std::vector<Element>(m, kNone));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element cx = q.class_of[x];
      const Element cy = q.class_of[y];
      const Element ar = q.class_of[a.arrow(x, y)];
      const Element sq = q.class_of[a.squig(x, y)];
      auto& ca = raw.arrow[cx][cy];
      auto& cs = raw.squig[cx][cy];
      if ((ca != kNone && ca != ar) || (cs != kNone && cs != sq)) {
        throw WorkbenchError(ErrorCode::kWellDefinednessFailure,
                             "quotient operations depend on representatives at (" + a.name(x) +
                                 ", " + a.name(y) + ")");
      }
      ca = ar;
      cs = sq;
    }
  }
  q.algebra = certify(raw);
  return q;
}

std::vector<Quotient> enumerate_congruences(const AlgebraRef& a) {
  std::vector<Quotient> out;
  for (const Subset& h : enumerate_ds_n(*a)) out.push_back(congruence_from(a, h));
  return out;
}

LiftedOperator lift_vto_to_quotient(const Quotient& q, const UnaryMap& v) {
  if (v.parent != q.source && !(*v.parent == *q.source)) {
    throw WorkbenchError(ErrorCode::kParentMismatch, "operator is not defined on the quotient's source");
  }
  const auto& a = *q.source;
  if (!is_normal_deductive_system(a, q.kernel)) {
    throw WorkbenchError(ErrorCode::kNotNormal, "kernel is not a normal deductive system");
  }
  for (Element x : q.kernel.elements()) {
    if (!q.kernel.contains(v(x))) {
      throw WorkbenchError(ErrorCode::kNotVds, "operator maps " + a.name(x) +
                                                   " outside the deductive system");
    }
  }
  std::vector<Element> image(q.class_count());
  for (Element x = 0; x < a.size(); ++x) {
    const Element target = q.project(v(x));
    const Element cls = q.project(x);
    if (x == q.representatives[cls]) {
      image[cls] = target;
    } else if (image[cls] != target) {
      throw WorkbenchError(ErrorCode::kWellDefinednessFailure,
                           "lifted operator depends on the representative of class [" +
                               a.name(q.representatives[cls]) + "]");
    }
  }
  UnaryMap lifted{q.algebra, std::move(image)};
  Verdict verdict = is_vto(lifted);
  return {q.algebra, std::move(lifted), std::move(verdict)};
}

std::optional<CongruenceViolation> congruence_violation(const UnaryMap& v, bool only_v_systems) {
  const auto& a = *v.parent;
  for (const Subset& h : enumerate_ds_n(a)) {
    if (only_v_systems && !is_v_deductive_system(v, h)) continue;
    auto related = [&](Element x, Element y) {
      return h.contains(a.arrow(x, y)) && h.contains(a.arrow(y, x));
    };
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y)
        if (related(x, y) && !related(v(x), v(y))) return CongruenceViolation{h, x, y};
  }
  return std::nullopt;
}

bool vto_congruence_check(const UnaryMap& v) { return !congruence_violation(v, false); }

bool vds_congruence_check(const UnaryMap& v) { return !congruence_violation(v, true); }

}  // namespace psbck
