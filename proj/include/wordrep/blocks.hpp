// blocks.hpp -- the shared factor machinery of the word constructions: pair
// partitions (with optional glued multi-vertex head tokens), block-structured
// pair words, connector permutations, closing words, and construction traces

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordrep/bipartite.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/// One pair of the partition of A. `first` is the first-component token
/// (one A-index normally; two or three glued indices for the head pairs of
/// the poset constructions) and `second` the single second component.
struct PairToken {
    std::vector<int> first;
    int second;

    int min_index() const { return first.front(); }
    int max_index() const { return second; }
    bool contains(int a_index) const;
};

struct PairPartition {
    std::vector<PairToken> pairs;
    bool padded = false;  // true iff an isolated a_{m+1} was appended

    std::size_t count() const { return pairs.size(); }
};

/// Consecutive pairs (1,2),(3,4),...; pads A with an isolated a_{m+1} when
/// m is odd. Requires m >= 1.
PairPartition pair_partition(int m);

/// A pair word over {a_i, a_j} and B, stored as its five named blocks so
/// intra-block ordering decisions stay inspectable. Flattens to
///   lead_star a_i only_first a_j common a_i only_second a_j trail_star
/// where each b in B occurs exactly once and a_i, a_j twice.
struct BlockWord {
    int i = 0, j = 0;
    std::vector<int> lead_star;    // subset of B \ (N(a_i) u N(a_j))
    std::vector<int> only_first;   // N(a_i) \ N(a_j)
    std::vector<int> common;       // N(a_i) n N(a_j)
    std::vector<int> only_second;  // N(a_j) \ N(a_i)
    std::vector<int> trail_star;   // the remaining non-neighbors

    Word flatten() const;
};

/// Hooks that let a construction override the free choices of a pair word:
/// which starred block receives each non-neighbor, and the order of vertices
/// inside each block. Defaults: everything into the leading star, ascending.
struct PairWordPolicies {
    std::function<bool(int b_index)> put_in_leading_star;
    std::function<void(const std::string& block, std::vector<int>& members)> order_block;
};

BlockWord build_pair_word(const BipartiteGraph& g, int i, int j,
                          const PairWordPolicies* policies = nullptr);

/// Connector after pair `left` (0-based, cyclic): over the remaining pairs in
/// index order, all second components then all first-component tokens.
Word connector_after(const PairPartition& pp, std::size_t left);
std::string connector_label(const PairPartition& pp, std::size_t left);

/// Validated form: the two skipped pairs are named by the first index p of
/// the left pair and the last index q of the cyclically-following pair.
Word build_connector(int p, int q, const PairPartition& pp);

/// Closing permutation: second-then-first of the head pair, the reversed
/// B-restriction of the head pair word, then second-then-first of each
/// remaining pair in order.
Word build_closing_word(const Word& head_pair_word, const PairPartition& pp);

/// Raised when a constructed word fails its mandatory verification; always
/// an implementation bug, never a data condition.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when the odd-m intra-block ordering constraints form a cycle.
struct OrderingCycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LabeledPairWord {
    std::string label;  // e.g. "w(1,2)" or "w(1,4)"
    std::vector<std::pair<std::string, std::vector<int>>> blocks;
    Word word;
};

struct Trace {
    PairPartition partition;
    std::vector<LabeledPairWord> pair_words;
    std::vector<std::pair<std::string, Word>> connectors;
    std::optional<std::pair<std::string, Word>> closing;
    bool closing_included = true;  // false for the suffix-dropped construction
    Word assembled;                // output over the padded (and, for the
                                   // poset constructions, relabeled) alphabet
    std::optional<Word> with_closing;  // suffix-dropped runs: assembled + closing
    std::vector<int> relabel;      // head-slot relabeling of A; empty = identity
};

/// A verified construction result: the emitted word, its checked uniformity,
/// and the trace of factors it was assembled from.
struct CertifiedWord {
    Word word;
    int k = 0;
    Trace trace;
};

}  // namespace wordrep
