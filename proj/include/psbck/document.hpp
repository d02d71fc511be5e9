#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psbck/algebra.hpp"
#include "psbck/deduction.hpp"
#include "psbck/maps.hpp"
#include "psbck/morphisms.hpp"
#include "psbck/valuations.hpp"

namespace psbck {

// 1-based line and column in the source text.
struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct AlgebraEntry {
  std::string name;
  SourcePos pos;
  RawAlgebra raw;
  Validation validation;  // algebra is null when the tables fail the axioms
  std::optional<std::vector<std::vector<Element>>> declared_product;
};

template <class T>
struct Named {
  std::string name;
  std::string on;  // algebra name
  SourcePos pos;
  T value;
};

// Partition of a source algebra recorded next to a serialized quotient.
struct ClassMap {
  std::string quotient;
  std::string source;
  SourcePos pos;
  std::vector<Element> class_of;  // source id -> quotient id
};

struct Document {
  std::string source_name;
  std::vector<AlgebraEntry> algebras;
  std::vector<Named<UnaryMap>> maps;
  std::vector<Named<PseudoValuation>> valuations;
  std::vector<Named<Subset>> subsets;
  std::vector<Named<Homomorphism>> homs;
  std::vector<ClassMap> class_maps;

  // Lookups throw kUsage for unknown names and kInvalidAlgebra when the
  // algebra did not certify.
  const AlgebraEntry& entry(std::string_view name) const;
  AlgebraRef algebra(std::string_view name) const;
  // The named algebra, or the first one in the file when `name` is empty.
  AlgebraRef algebra_or_first(std::string_view name) const;
  const UnaryMap& map(std::string_view name) const;
  const PseudoValuation& valuation(std::string_view name) const;
  const Named<Subset>& subset(std::string_view name) const;
  const Homomorphism& hom(std::string_view name) const;
};

// Throws WorkbenchError(kParseError) with "source:line:col: message" for
// malformed input, unknown names, ragged tables and duplicate definitions.
// Algebras that fail the axioms are kept with their diagnostics; objects
// defined on them raise kInvalidAlgebra.
Document parse_document(std::string_view text, std::string source_name = "<input>");
Document load_document(const std::string& path);

// Serializers producing text parse_document accepts.
std::string serialize_algebra(const FiniteAlgebra& a, const std::string& name);
std::string serialize_map(const UnaryMap& m, const std::string& name, const std::string& on);
std::string serialize_subset(const FiniteAlgebra& a, const Subset& s, const std::string& name,
                             const std::string& on);
std::string serialize_valuation(const PseudoValuation& phi, const std::string& name, const std::string& on);
std::string serialize_hom(const Homomorphism& h, const std::string& name, const std::string& from,
                          const std::string& to);
// Algebra block for A/H followed by its class map over `source`.
std::string serialize_quotient(const Quotient& q, const std::string& name, const std::string& source);

// "A/H" style names are not valid identifiers in every position; this keeps
// letters, digits and "_-./[]'" and replaces the rest.
std::string sanitize_name(std::string_view name);

}  // namespace psbck
