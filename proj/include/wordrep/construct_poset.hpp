// construct_poset.hpp -- neighborhood-inclusion structure on A and the two
// even-m constructions that exploit it: a chain of three (head word over four
// vertices) or two disjoint chains of two (two head words over three each),
// both yielding (m/2)-uniform representants for m = 2k, k >= 3

#pragma once

#include <variant>

#include "wordrep/blocks.hpp"
#include "wordrep/construct_odd.hpp"

namespace wordrep {

/// The neighborhood inclusion relation on A: an arc x -> y whenever
/// N(a_x) is contained in N(a_y). Transitive by construction; antisymmetric
/// on reduced graphs.
struct InclusionDag {
    int m = 0;
    std::vector<std::vector<bool>> arc;  // arc[x-1][y-1]

    bool has_arc(int x, int y) const { return arc[x - 1][y - 1]; }
};

/// Requires `g` reduced (mutual inclusion raises std::invalid_argument).
InclusionDag inclusion_poset(const BipartiteGraph& g);

/// Longest chain size plus the lexicographically smallest witness chain of
/// that size.
struct PosetHeight {
    int height = 0;
    std::vector<int> chain;
};

PosetHeight poset_height(const InclusionDag& dag);

enum class WitnessKind { Chain3, TwoChains, None };

/// A usable head-pair witness plus the relabeling of A that moves it into
/// the canonical head positions (chain -> a1..; partners -> the slots the
/// construction expects; everything else ascending).
struct ChainWitness {
    WitnessKind kind = WitnessKind::None;
    std::vector<int> chain;    // chain3: {x,y,z} with x < y < z in the poset;
                               // two chains: {x1,y1,x2,y2}
    std::vector<int> relabel;  // relabel[orig-1] = canonical index; empty if none
};

/// Requires m even with m >= 6. Prefers a 3-chain; otherwise the smallest
/// two disjoint 2-chains; otherwise none.
ChainWitness find_witness(const InclusionDag& dag, int m);

/// The smallest two vertex-disjoint comparable pairs regardless of height;
/// lets the two-chain construction be forced on taller posets.
ChainWitness find_two_disjoint_chains(const InclusionDag& dag, int m);

/// Head word for the chain a1 < a2 < a3 with partner a4 (canonical labels):
///   lead_star a3 [N3\(N2 u N4)] a2 [N2\(N1 u N4)] a1 [N1\N4] a4 [N1 n N4]
///   a1 [(N2 n N4)\N1] a2 [(N3 n N4)\N2] a3 [N4\N3] a4 trail_star
struct Chain3HeadWord {
    std::vector<int> lead_star, only_top, only_mid, low_not_partner, low_and_partner;
    std::vector<int> mid_and_partner, top_and_partner, partner_not_top, trail_star;

    Word flatten() const;
    std::vector<std::pair<std::string, std::vector<int>>> named_blocks() const;
};

/// Requires N(a1) within N(a2) within N(a3); no reducedness assumption.
Chain3HeadWord build_chain3_head_word(const BipartiteGraph& g);

/// Head word for a chain a_lo < a_hi with partner a_p:
///   lead_star a_hi [Nhi\(Nlo u Np)] a_lo [Nlo\Np] a_p [Nlo n Np] a_lo
///   [(Nhi n Np)\Nlo] a_hi [Np\Nhi] a_p trail_star
struct TwoChainHeadWord {
    int lo = 0, hi = 0, partner = 0;
    std::vector<int> lead_star, only_hi, lo_not_partner, lo_and_partner, hi_and_partner;
    std::vector<int> partner_not_hi, trail_star;

    Word flatten() const;
    std::vector<std::pair<std::string, std::vector<int>>> named_blocks() const;
};

/// Requires N(a_lo) within N(a_hi).
TwoChainHeadWord build_2chain_head_word(const BipartiteGraph& g, int lo, int hi, int partner);

/// Both require g connected, reduced, m = 2k with k >= 3, m <= n, and a
/// matching witness; the result is a verified (m/2)-uniform representant.
CertifiedWord construct_chain3(const BipartiteGraph& g, const ChainWitness& witness);
CertifiedWord construct_two_chains(const BipartiteGraph& g, const ChainWitness& witness);

}  // namespace wordrep
