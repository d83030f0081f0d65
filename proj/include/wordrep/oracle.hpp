// oracle.hpp -- exhaustive search for k-uniform word-representants and exact
// representation numbers at desk scale; the ground truth the constructions
// are validated against

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "wordrep/verify.hpp"

namespace wordrep {

struct SearchBudget {
    int k_max = 3;
    std::optional<std::uint64_t> node_limit;
    std::optional<std::chrono::milliseconds> time_limit;
    bool override_size_guard = false;  // lifts the ~8-vertex guard
    bool disable_first_letter_fixing = false;  // soundness cross-check hook
};

enum class SearchOutcome {
    Found,               // a witness exists (and is returned)
    ExhaustedNoWitness,  // the full space was searched, no witness
    BudgetExceeded,      // unknown: the budget ran out first
};

struct LevelResult {
    SearchOutcome outcome = SearchOutcome::ExhaustedNoWitness;
    std::optional<Word> witness;
    std::uint64_t nodes = 0;
};

/// Depth-first search over k-uniform words with per-letter quotas. Prunes by
/// fixing the first letter to the smallest vertex (sound by the cyclic-shift
/// property of uniform representants), abandoning prefixes where an adjacent
/// pair has stopped alternating, and abandoning prefixes where a
/// non-adjacent pair can no longer break alternation with its remaining
/// quota. Any witness is re-checked through represents() before it is
/// returned. Deterministic: children explored in ascending vertex order.
LevelResult exists_k_uniform_representant(const SimpleGraph& g, int k,
                                          const SearchBudget& budget = {});

struct OracleResult {
    std::optional<int> min_k;
    std::optional<Word> witness;
    bool exhausted = false;  // true iff every level up to k_max was fully searched
    std::uint64_t nodes = 0;
};

/// Smallest k <= budget.k_max admitting a k-uniform representant. A present
/// min_k is exact only when `exhausted` is true; otherwise some smaller
/// level hit a budget wall.
OracleResult min_representation_number(const SimpleGraph& g, const SearchBudget& budget = {});

}  // namespace wordrep
