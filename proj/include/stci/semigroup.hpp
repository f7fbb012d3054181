#pragma once

#include <optional>
#include <vector>

#include "stci/intvec.hpp"

namespace stci {

// Nonnegative integer coefficients aligned with a generator list; expanding
// them reproduces the target vector exactly.
struct NonnegCombination {
    IntVec coefficients;

    bool operator==(const NonnegCombination&) const = default;
};

// Decides target ∈ N{generators} by complete depth-first search. Every
// generator has a nonzero coordinate, so its coefficient is bounded by the
// matching target coordinate; the search is therefore finite and exhaustive.
// Failed residual states are memoized per call. Coefficients are tried in
// descending order, generator by generator in the given order, so the first
// solution found is the greedy one and the result is deterministic.
//
// Preconditions: target and all generators in N^n, generators nonzero.
std::optional<NonnegCombination> semigroup_membership(const IntVec& target,
                                                      const std::vector<IntVec>& generators);

// Expand a combination back into a vector (for validation).
IntVec expand_combination(const NonnegCombination& comb, const std::vector<IntVec>& generators);

}  // namespace stci
