// construct_odd.hpp -- the odd-m construction: a ceil(m/2)-uniform
// word-representant for odd m >= 5 and non-crown inputs, obtained by a
// specific star-block placement, a specific intra-block ordering, and
// dropping the closing word

#pragma once

#include <map>
#include <variant>

#include "wordrep/blocks.hpp"

namespace wordrep {

/// The split of B by degree: P1 holds the vertices adjacent to all of A but
/// one, each matched to its unique non-neighbor; P2 the rest.
struct DegreeSplit {
    std::vector<int> p1;
    std::vector<int> p2;
    std::map<int, int> anti_match;  // b in P1 -> its non-neighbor a
};

/// Requires `g` connected, reduced, with m odd.
DegreeSplit classify_b(const BipartiteGraph& g);

/// Block slots of a pair word in template position order.
enum class Slot {
    LeadStar = 0,
    OnlyFirst = 1,
    Common = 2,
    OnlySecond = 3,
    TrailStar = 4,
};

/// For each pair word and each b, the block that holds b. Non-star slots are
/// forced by adjacency; star sides follow the placement steps:
///   1. b non-adjacent to >= 2 pairs: leading star in the smallest such
///      pair's word, trailing star in the next; leading star elsewhere.
///   2. b non-adjacent to exactly one pair, not the last: leading star there
///      if b sits in some other word's OnlySecond block, else trailing star.
///   3. b non-adjacent only to the last (padded) pair: trailing star there if
///      b sits in some other word's OnlyFirst block, else leading star.
struct PlacementPlan {
    std::vector<std::vector<Slot>> slot;  // slot[pair][b-1]

    Slot at(std::size_t pair, int b) const { return slot[pair][b - 1]; }
};

/// `g` is the padded graph (isolated last row); partition from
/// pair_partition of the original odd m.
PlacementPlan placement_plan(const BipartiteGraph& g, const PairPartition& pp);

/// Applies the intra-block ordering rules on top of a placement plan:
/// blocks of the first pair word order each member pair by the reversal of
/// their block-position order wherever that order is uniform across the
/// other words (topologically sorted, ascending index tie-break; a
/// constraint cycle raises OrderingCycleError); blocks of every later word
/// use the reverse of the first word's letter order.
std::vector<BlockWord> block_ordering(const BipartiteGraph& g, const PairPartition& pp,
                                      const PlacementPlan& plan);

struct NotApplicable {
    std::string reason;  // "m-even" | "m<5" | "crown:P2-empty" | "antimatch-covers-A"
};

using OddResult = std::variant<CertifiedWord, NotApplicable>;

/// Requires `g` connected, reduced, m <= n. Returns NotApplicable for even
/// m, m < 5, crown graphs (P2 empty), and graphs where every A-vertex is
/// the non-neighbor of some degree-(m-1) vertex (then no valid partner for
/// the padded isolate exists). Otherwise relabels A so the last slot is
/// adjacent to every degree-(m-1) vertex and returns a verified
/// ceil(m/2)-uniform representant; the trace (in relabeled space, see
/// trace.relabel) also carries the verified pre-drop word.
OddResult construct_odd(const BipartiteGraph& g);

/// True iff every two B-vertices occur in both orders across the trace's
/// pair words; the suffix-dropped construction is sound only if this holds.
bool claim_both_orders(const Trace& trace, int n);

}  // namespace wordrep
