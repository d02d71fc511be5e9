#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace psbck {

// Dense 0-based element id; names are surface syntax only.
using Element = std::uint32_t;

// Subset of a carrier with at most 64 elements.
//
// Ordering is by cardinality first and then by the raw bit pattern, which is
// the canonical listing order of deductive systems and substructures.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : universe_(universe) {}

  static Subset full(std::size_t universe);
  static Subset from_bits(std::size_t universe, std::uint64_t bits);
  static Subset of(std::size_t universe, std::initializer_list<Element> members);

  std::size_t universe() const { return universe_; }
  std::uint64_t bits() const { return bits_; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }

  bool contains(Element x) const { return (bits_ >> x) & 1U; }
  void insert(Element x) { bits_ |= std::uint64_t{1} << x; }
  void erase(Element x) { bits_ &= ~(std::uint64_t{1} << x); }

  bool is_subset_of(const Subset& other) const { return (bits_ & ~other.bits_) == 0; }
  bool is_full() const { return *this == full(universe_); }
  std::vector<Element> elements() const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::size_t universe_ = 0;
  std::uint64_t bits_ = 0;
};

// Unchecked tables as they come out of the parser.
struct RawAlgebra {
  std::string name;
  std::vector<std::string> element_names;
  Element one = 0;
  std::optional<Element> zero;
  std::vector<std::vector<Element>> arrow;
  std::vector<std::vector<Element>> squig;
};

// One violated axiom with its lexicographically least witness.
struct Diagnostic {
  std::string rule;
  std::vector<Element> witness;
  std::string message;
};

class FiniteAlgebra;
using AlgebraRef = std::shared_ptr<const FiniteAlgebra>;

struct Validation {
  AlgebraRef algebra;  // null unless every axiom holds
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return algebra != nullptr; }
};

// A certified pseudo-BCK algebra. Instances only come out of validate(), so
// holding one is proof that the axioms hold; they are immutable afterwards.
class FiniteAlgebra {
 public:
  const std::string& label() const { return label_; }
  std::size_t size() const { return names_.size(); }
  Element one() const { return one_; }
  std::optional<Element> zero() const { return zero_; }
  bool bounded() const { return zero_.has_value(); }
  // Throws kUnboundedAlgebra when no zero was declared.
  Element require_zero() const;

  Element arrow(Element x, Element y) const { return arrow_[x * size() + y]; }
  Element squig(Element x, Element y) const { return squig_[x * size() + y]; }
  bool leq(Element x, Element y) const { return arrow(x, y) == one_; }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element x) const { return names_[x]; }
  std::optional<Element> find(std::string_view name) const;

  Subset empty_set() const { return Subset(size()); }
  Subset full_set() const { return Subset::full(size()); }

  RawAlgebra to_raw() const;

  // Same carrier names, constants and tables; the label is ignored.
  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b);

 private:
  friend Validation validate(const RawAlgebra& raw);
  FiniteAlgebra() = default;

  std::string label_;
  std::vector<std::string> names_;
  Element one_ = 0;
  std::optional<Element> zero_;
  std::vector<Element> arrow_;
  std::vector<Element> squig_;
};

// Checks shape first (ragged tables, out-of-range ids, bad names), then every
// axiom, reporting each violated rule once.
Validation validate(const RawAlgebra& raw);

// validate() that throws kInvalidAlgebra listing the diagnostics.
AlgebraRef certify(const RawAlgebra& raw);

bool leq(const FiniteAlgebra& a, Element x, Element y);
Element neg_minus(const FiniteAlgebra& a, Element x);
Element neg_sim(const FiniteAlgebra& a, Element x);

Subset regular_elements(const FiniteAlgebra& a);
Subset dense_elements(const FiniteAlgebra& a);

bool is_good(const FiniteAlgebra& a);
bool is_involutive(const FiniteAlgebra& a);
// Good, and double negation commutes with both implications.
bool is_glivenko(const FiniteAlgebra& a);
bool is_linear(const FiniteAlgebra& a);

// Reflexive, antisymmetric, transitive, with one on top and zero at the bottom.
bool order_is_bounded_partial_order(const FiniteAlgebra& a);

// Smallest element above both, if the derived order has one.
std::optional<Element> join(const FiniteAlgebra& a, Element x, Element y);
std::optional<Element> meet(const FiniteAlgebra& a, Element x, Element y);

// Contains one and is closed under both implications.
bool is_subalgebra(const FiniteAlgebra& a, const Subset& s);

struct Subalgebra {
  AlgebraRef algebra;
  std::vector<Element> embedding;  // sub id -> parent id, increasing
  std::vector<std::optional<Element>> index;  // parent id -> sub id

  Element to_sub(Element parent_id) const { return *index[parent_id]; }
};

// The induced algebra on a closed subset. Keeps the parent's zero when the
// subset contains it.
Subalgebra make_subalgebra(const AlgebraRef& a, const Subset& s, std::string label = {});

// Outcome of one identity family evaluated over all tuples.
struct LawCheck {
  std::string law;
  bool ok = true;
  std::vector<Element> witness;
};

struct LawReport {
  std::vector<LawCheck> checks;

  bool passed() const;
  const LawCheck* first_failure() const;
};

// Exchange, antitone/monotone and prefixing laws on every algebra, plus the
// negation identities when the algebra is bounded.
LawReport derived_law_suite(const FiniteAlgebra& a);

}  // namespace psbck
