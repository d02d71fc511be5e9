#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "psbck/algebra.hpp"

namespace psbck {

// Named constructions. Every result goes through certify().
AlgebraRef goedel_chain(std::size_t n);
AlgebraRef lukasiewicz_chain(std::size_t n);
// Componentwise tables on pairs; names are "x.y".
AlgebraRef direct_product(const AlgebraRef& a, const AlgebraRef& b);
// b stacked on top of a with the two tops identified. Throws kInvalidAlgebra
// if the glued tables fail the axioms (they should not).
AlgebraRef ordinal_sum(const AlgebraRef& a, const AlgebraRef& b);

// Random bounded poset on n >= 2 points, 0 at the bottom and n-1 on top.
// leq[x][y] is the reflexive transitive order.
std::vector<std::vector<bool>> random_bounded_poset(std::size_t n, std::mt19937_64& rng);

// Fills both implication tables over the given order by randomized
// backtracking, pruning with the monotonicity laws and the two transitivity
// axioms on every fully assigned triple. Falls back to the crisp solution
// x->y = y (x not below y) if the node budget runs out, so it always returns
// a certified algebra.
AlgebraRef search_algebra(const std::vector<std::vector<bool>>& leq, std::mt19937_64& rng,
                          std::string label, std::size_t node_budget = 20000);

// Deterministic mix of chains, products, ordinal sums and searched models,
// all with 1 <= n <= max_n. Same seed, same list.
std::vector<AlgebraRef> generate_algebras(std::uint64_t seed, std::size_t count, std::size_t max_n = 6);

}  // namespace psbck
