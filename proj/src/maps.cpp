#include "psbck/maps.hpp"

#include "psbck/error.hpp"

namespace psbck {

bool operator==(const UnaryMap& a, const UnaryMap& b) {
  return a.image == b.image && same_parent(a, b);
}

bool same_parent(const UnaryMap& f, const UnaryMap& g) {
  if (f.parent == g.parent) return true;
  return f.parent && g.parent && *f.parent == *g.parent;
}

UnaryMap make_map(const AlgebraRef& parent, std::vector<Element> image) {
  if (image.size() != parent->size()) {
    throw WorkbenchError(ErrorCode::kInvalidMap,
                         "map on '" + parent->label() + "' needs " +
                             std::to_string(parent->size()) + " values, got " +
                             std::to_string(image.size()));
  }
  for (Element v : image) {
    if (v >= parent->size()) {
      throw WorkbenchError(ErrorCode::kInvalidMap, "map value out of range");
    }
  }
  return UnaryMap{parent, std::move(image)};
}

UnaryMap identity_map(const AlgebraRef& a) {
  std::vector<Element> image(a->size());
  for (Element x = 0; x < a->size(); ++x) image[x] = x;
  return UnaryMap{a, std::move(image)};
}

UnaryMap constant_map(const AlgebraRef& a, Element value) {
  return UnaryMap{a, std::vector<Element>(a->size(), value)};
}

std::string describe(const Verdict& v, const FiniteAlgebra& a) {
  if (v.ok) return "ok";
  std::string out = v.axiom;
  if (!v.witness.empty()) {
    out += " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) out += ", ";
      out += a.name(v.witness[i]);
    }
    out += ")";
  }
  return out;
}

bool pointwise_leq(const UnaryMap& f, const UnaryMap& g) {
  const auto& a = *f.parent;
  for (Element x = 0; x < a.size(); ++x)
    if (!a.leq(f(x), g(x))) return false;
  return true;
}

}  // namespace psbck
