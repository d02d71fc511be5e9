#include "psbck/valuations.hpp"

#include <algorithm>
#include <charconv>

#include "psbck/error.hpp"

namespace psbck {

PseudoValuation make_valuation(const AlgebraRef& a, std::vector<Rational> values) {
  if (values.size() != a->size()) {
    throw WorkbenchError(ErrorCode::kInvalidMap,
                         "valuation on '" + a->label() + "' needs " + std::to_string(a->size()) +
                             " values, got " + std::to_string(values.size()));
  }
  return {a, std::move(values)};
}

Verdict is_pseudo_valuation(const PseudoValuation& phi) {
  const auto& a = *phi.parent;
  const std::size_t n = a.size();
  if (phi(a.one()) != Rational(0)) return Verdict::fail("pv1", {a.one()});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (phi(y) - phi(x) > std::min(phi(a.arrow(x, y)), phi(a.squig(x, y))))
        return Verdict::fail("pv2", {x, y});
  // consequences; a failure here would mean the checker above is wrong
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (a.leq(x, y) && phi(x) < phi(y)) return Verdict::fail("order reversing", {x, y});
  for (Element x = 0; x < n; ++x)
    if (phi(x) < Rational(0)) return Verdict::fail("nonnegative", {x});
  return Verdict::pass();
}

Verdict is_valuation(const PseudoValuation& phi) {
  if (Verdict v = is_pseudo_valuation(phi); !v) return v;
  const auto& a = *phi.parent;
  for (Element x = 0; x < a.size(); ++x)
    if (x != a.one() && phi(x) == Rational(0)) return Verdict::fail("pv3", {x});
  return Verdict::pass();
}

PseudoValuation compose_with_vto(const PseudoValuation& phi, const UnaryMap& v) {
  if (!same_parent(v, UnaryMap{phi.parent, {}})) {
    throw WorkbenchError(ErrorCode::kParentMismatch, "valuation and operator live on different algebras");
  }
  std::vector<Rational> values(phi.values.size());
  for (Element x = 0; x < values.size(); ++x) values[x] = phi(v(x));
  return {phi.parent, std::move(values)};
}

Rational parse_rational(std::string_view text) {
  auto bad = [&]() -> Rational {
    throw WorkbenchError(ErrorCode::kParseError, "not a rational number: '" + std::string(text) + "'");
  };
  auto parse_int = [&](std::string_view s) {
    std::int64_t out = 0;
    if (s.empty()) bad();
    const char* first = s.data();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size()) bad();
    return out;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t num = parse_int(text.substr(0, slash));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) bad();
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace psbck
