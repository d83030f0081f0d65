#include "wordrep/construct_poset.hpp"

#include <algorithm>
#include <numeric>

namespace wordrep {

InclusionDag inclusion_poset(const BipartiteGraph& g) {
    InclusionDag dag;
    dag.m = g.m();
    dag.arc.assign(g.m(), std::vector<bool>(g.m(), false));
    std::vector<std::vector<int>> nb(g.m());
    for (int i = 1; i <= g.m(); ++i) nb[i - 1] = g.neighbors_of_a(i);
    for (int x = 0; x < g.m(); ++x)
        for (int y = 0; y < g.m(); ++y) {
            if (x == y) continue;
            if (std::includes(nb[y].begin(), nb[y].end(), nb[x].begin(), nb[x].end()))
                dag.arc[x][y] = true;
        }
    for (int x = 0; x < g.m(); ++x)
        for (int y = x + 1; y < g.m(); ++y)
            if (dag.arc[x][y] && dag.arc[y][x])
                throw std::invalid_argument("inclusion_poset: mutual inclusion (not reduced)");
    return dag;
}

PosetHeight poset_height(const InclusionDag& dag) {
    // longest_from[x] = size of the longest chain starting at a_{x+1};
    // inclusion arcs are transitively closed, so plain iteration converges.
    int m = dag.m;
    std::vector<int> longest_from(m, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                if (dag.arc[x][y] && longest_from[x] < 1 + longest_from[y]) {
                    longest_from[x] = 1 + longest_from[y];
                    changed = true;
                }
    }
    PosetHeight out;
    out.height = *std::max_element(longest_from.begin(), longest_from.end());
    int need = out.height;
    int prev = -1;
    while (need > 0) {
        for (int x = 0; x < m; ++x) {
            if (longest_from[x] != need) continue;
            if (prev >= 0 && !dag.arc[prev][x]) continue;
            out.chain.push_back(x + 1);
            prev = x;
            break;
        }
        --need;
    }
    return out;
}

namespace {

// Relabeling: chain vertices into the head slots, partners = smallest
// remaining, everything else ascending.
void attach_relabeling(ChainWitness& w, int m);

}  // namespace

ChainWitness find_witness(const InclusionDag& dag, int m) {
    if (m % 2 != 0 || m < 6)
        throw std::invalid_argument("find_witness: m must be even with m >= 6");
    ChainWitness w;

    // Smallest-lex 3-chain, if any.
    for (int x = 1; x <= m && w.kind == WitnessKind::None; ++x)
        for (int y = 1; y <= m && w.kind == WitnessKind::None; ++y)
            for (int z = 1; z <= m; ++z)
                if (y != x && z != x && z != y && dag.has_arc(x, y) && dag.has_arc(y, z)) {
                    w.kind = WitnessKind::Chain3;
                    w.chain = {x, y, z};
                    break;
                }

    if (w.kind == WitnessKind::None) return find_two_disjoint_chains(dag, m);
    attach_relabeling(w, m);
    return w;
}

ChainWitness find_two_disjoint_chains(const InclusionDag& dag, int m) {
    if (m % 2 != 0 || m < 6)
        throw std::invalid_argument("find_two_disjoint_chains: m must be even with m >= 6");
    ChainWitness w;
    std::vector<std::pair<int, int>> comparable;
    for (int x = 1; x <= m; ++x)
        for (int y = 1; y <= m; ++y)
            if (x != y && dag.has_arc(x, y)) comparable.push_back({x, y});
    for (std::size_t p = 0; p < comparable.size() && w.kind == WitnessKind::None; ++p) {
        for (std::size_t q = p + 1; q < comparable.size(); ++q) {
            auto [x1, y1] = comparable[p];
            auto [x2, y2] = comparable[q];
            if (x2 == x1 || x2 == y1 || y2 == x1 || y2 == y1) continue;
            w.kind = WitnessKind::TwoChains;
            w.chain = {x1, y1, x2, y2};
            break;
        }
    }
    if (w.kind == WitnessKind::None) return w;
    attach_relabeling(w, m);
    return w;
}

namespace {

void attach_relabeling(ChainWitness& w, int m) {
    std::vector<bool> used(m + 1, false);
    for (int v : w.chain) used[v] = true;
    std::vector<int> remaining;
    for (int v = 1; v <= m; ++v)
        if (!used[v]) remaining.push_back(v);

    std::vector<int> slot_of_orig(m + 1, 0);
    if (w.kind == WitnessKind::Chain3) {
        slot_of_orig[w.chain[0]] = 1;
        slot_of_orig[w.chain[1]] = 2;
        slot_of_orig[w.chain[2]] = 3;
        slot_of_orig[remaining[0]] = 4;
        int next = 5;
        for (std::size_t t = 1; t < remaining.size(); ++t) slot_of_orig[remaining[t]] = next++;
    } else {
        slot_of_orig[w.chain[0]] = 1;
        slot_of_orig[w.chain[1]] = 2;
        slot_of_orig[remaining[0]] = 3;
        slot_of_orig[w.chain[2]] = 4;
        slot_of_orig[w.chain[3]] = 5;
        slot_of_orig[remaining[1]] = 6;
        int next = 7;
        for (std::size_t t = 2; t < remaining.size(); ++t) slot_of_orig[remaining[t]] = next++;
    }
    w.relabel.assign(m, 0);
    for (int v = 1; v <= m; ++v) w.relabel[v - 1] = slot_of_orig[v];
}

}  // namespace

namespace {

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_and(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_or(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void append_bs(std::vector<Vertex>& out, const std::vector<int>& block) {
    for (int b : block) out.push_back(vb(b));
}

void verify_or_throw(const Word& w, const BipartiteGraph& g, int expected_k,
                     const std::string& stage) {
    auto k = uniformity(w);
    if (!k || *k != expected_k)
        throw ConstructionError(stage + ": word is not " + std::to_string(expected_k) +
                                "-uniform");
    Verdict v = represents(w, g.to_simple());
    if (!v.represents) {
        const auto& ce = *v.counterexample;
        throw ConstructionError(stage + ": verification failed at (" + to_string(ce.u) + "," +
                                to_string(ce.v) + ") " + to_string(ce.reason));
    }
}

struct Assembly {
    Trace trace;
    Word word;
};

// Shared tail of both constructions: ordinary pair words for the non-head
// pairs, connectors, closing word, assembly, verification on the relabeled
// graph, then mapping back to the original labels.
CertifiedWord finish(const BipartiteGraph& g, const BipartiteGraph& relabeled,
                     const std::vector<int>& relabel, PairPartition pp,
                     std::vector<LabeledPairWord> head_words, const std::string& closing_name) {
    Trace trace;
    std::vector<Word> flats;
    for (auto& hw : head_words) {
        flats.push_back(hw.word);
        trace.pair_words.push_back(std::move(hw));
    }
    for (std::size_t s = head_words.size(); s < pp.count(); ++s) {
        BlockWord bw = build_pair_word(relabeled, pp.pairs[s].first.front(), pp.pairs[s].second);
        Word flat = bw.flatten();
        trace.pair_words.push_back(LabeledPairWord{
            "w(" + std::to_string(bw.i) + "," + std::to_string(bw.j) + ")",
            {{"lead_star", bw.lead_star},
             {"only_first", bw.only_first},
             {"common", bw.common},
             {"only_second", bw.only_second},
             {"trail_star", bw.trail_star}},
            flat});
        flats.push_back(std::move(flat));
    }

    std::vector<Vertex> all;
    for (std::size_t s = 0; s < pp.count(); ++s) {
        Word d = connector_after(pp, s);
        trace.connectors.push_back({connector_label(pp, s), d});
        all.insert(all.end(), flats[s].letters.begin(), flats[s].letters.end());
        all.insert(all.end(), d.letters.begin(), d.letters.end());
    }
    Word closing = build_closing_word(flats.front(), pp);
    trace.closing = {{closing_name, closing}};
    all.insert(all.end(), closing.letters.begin(), closing.letters.end());
    Word assembled{std::move(all)};

    // The trace stays in the relabeled head-slot space; only the emitted
    // word maps back to the original labels.
    int k = g.m() / 2;
    verify_or_throw(assembled, relabeled, k, "relabeled word");

    trace.partition = std::move(pp);
    trace.assembled = assembled;
    trace.relabel = relabel;
    Word final_word = unrelabel_word(assembled, relabel);
    verify_or_throw(final_word, g, k, "final word");
    return CertifiedWord{std::move(final_word), k, std::move(trace)};
}

}  // namespace

Word Chain3HeadWord::flatten() const {
    std::vector<Vertex> out;
    append_bs(out, lead_star);
    out.push_back(va(3));
    append_bs(out, only_top);
    out.push_back(va(2));
    append_bs(out, only_mid);
    out.push_back(va(1));
    append_bs(out, low_not_partner);
    out.push_back(va(4));
    append_bs(out, low_and_partner);
    out.push_back(va(1));
    append_bs(out, mid_and_partner);
    out.push_back(va(2));
    append_bs(out, top_and_partner);
    out.push_back(va(3));
    append_bs(out, partner_not_top);
    out.push_back(va(4));
    append_bs(out, trail_star);
    return Word{std::move(out)};
}

std::vector<std::pair<std::string, std::vector<int>>> Chain3HeadWord::named_blocks() const {
    return {{"lead_star", lead_star},
            {"only_top", only_top},
            {"only_mid", only_mid},
            {"low_not_partner", low_not_partner},
            {"low_and_partner", low_and_partner},
            {"mid_and_partner", mid_and_partner},
            {"top_and_partner", top_and_partner},
            {"partner_not_top", partner_not_top},
            {"trail_star", trail_star}};
}

Chain3HeadWord build_chain3_head_word(const BipartiteGraph& g) {
    auto n1 = g.neighbors_of_a(1), n2 = g.neighbors_of_a(2), n3 = g.neighbors_of_a(3),
         n4 = g.neighbors_of_a(4);
    if (!std::includes(n2.begin(), n2.end(), n1.begin(), n1.end()) ||
        !std::includes(n3.begin(), n3.end(), n2.begin(), n2.end()))
        throw std::invalid_argument("build_chain3_head_word: chain N(a1) <= N(a2) <= N(a3) required");
    std::vector<int> everyone;
    for (int b = 1; b <= g.n(); ++b) everyone.push_back(b);
    Chain3HeadWord w;
    w.lead_star = set_minus(everyone, set_or(set_or(n1, n2), set_or(n3, n4)));
    w.only_top = set_minus(n3, set_or(n2, n4));
    w.only_mid = set_minus(n2, set_or(n1, n4));
    w.low_not_partner = set_minus(n1, n4);
    w.low_and_partner = set_and(n1, n4);
    w.mid_and_partner = set_minus(set_and(n2, n4), n1);
    w.top_and_partner = set_minus(set_and(n3, n4), n2);
    w.partner_not_top = set_minus(n4, n3);
    return w;
}

Word TwoChainHeadWord::flatten() const {
    std::vector<Vertex> out;
    append_bs(out, lead_star);
    out.push_back(va(hi));
    append_bs(out, only_hi);
    out.push_back(va(lo));
    append_bs(out, lo_not_partner);
    out.push_back(va(partner));
    append_bs(out, lo_and_partner);
    out.push_back(va(lo));
    append_bs(out, hi_and_partner);
    out.push_back(va(hi));
    append_bs(out, partner_not_hi);
    out.push_back(va(partner));
    append_bs(out, trail_star);
    return Word{std::move(out)};
}

std::vector<std::pair<std::string, std::vector<int>>> TwoChainHeadWord::named_blocks() const {
    return {{"lead_star", lead_star},
            {"only_hi", only_hi},
            {"lo_not_partner", lo_not_partner},
            {"lo_and_partner", lo_and_partner},
            {"hi_and_partner", hi_and_partner},
            {"partner_not_hi", partner_not_hi},
            {"trail_star", trail_star}};
}

TwoChainHeadWord build_2chain_head_word(const BipartiteGraph& g, int lo, int hi, int partner) {
    auto nlo = g.neighbors_of_a(lo), nhi = g.neighbors_of_a(hi), np = g.neighbors_of_a(partner);
    if (!std::includes(nhi.begin(), nhi.end(), nlo.begin(), nlo.end()))
        throw std::invalid_argument("build_2chain_head_word: chain N(lo) <= N(hi) required");
    std::vector<int> everyone;
    for (int b = 1; b <= g.n(); ++b) everyone.push_back(b);
    TwoChainHeadWord w;
    w.lo = lo;
    w.hi = hi;
    w.partner = partner;
    w.lead_star = set_minus(everyone, set_or(set_or(nlo, nhi), np));
    w.only_hi = set_minus(nhi, set_or(nlo, np));
    w.lo_not_partner = set_minus(nlo, np);
    w.lo_and_partner = set_and(nlo, np);
    w.hi_and_partner = set_minus(set_and(nhi, np), nlo);
    w.partner_not_hi = set_minus(np, nhi);
    return w;
}

CertifiedWord construct_chain3(const BipartiteGraph& g, const ChainWitness& witness) {
    if (witness.kind != WitnessKind::Chain3)
        throw std::invalid_argument("construct_chain3: chain3 witness required");
    if (g.m() % 2 != 0 || g.m() < 6 || g.m() > g.n())
        throw std::invalid_argument("construct_chain3: m = 2k, k >= 3, m <= n required");

    BipartiteGraph relabeled = relabel_a(g, witness.relabel);
    PairPartition pp;
    pp.pairs.push_back(PairToken{{1, 2, 3}, 4});
    for (int i = 5; i < g.m(); i += 2) pp.pairs.push_back(PairToken{{i}, i + 1});

    Chain3HeadWord head = build_chain3_head_word(relabeled);
    std::vector<LabeledPairWord> heads;
    heads.push_back(LabeledPairWord{"w(1,4)", head.named_blocks(), head.flatten()});
    return finish(g, relabeled, witness.relabel, std::move(pp), std::move(heads), "u0");
}

CertifiedWord construct_two_chains(const BipartiteGraph& g, const ChainWitness& witness) {
    if (witness.kind != WitnessKind::TwoChains)
        throw std::invalid_argument("construct_two_chains: two-chain witness required");
    if (g.m() % 2 != 0 || g.m() < 6 || g.m() > g.n())
        throw std::invalid_argument("construct_two_chains: m = 2k, k >= 3, m <= n required");

    BipartiteGraph relabeled = relabel_a(g, witness.relabel);
    PairPartition pp;
    pp.pairs.push_back(PairToken{{1, 2}, 3});
    pp.pairs.push_back(PairToken{{4, 5}, 6});
    for (int i = 7; i < g.m(); i += 2) pp.pairs.push_back(PairToken{{i}, i + 1});

    TwoChainHeadWord first = build_2chain_head_word(relabeled, 1, 2, 3);
    TwoChainHeadWord second = build_2chain_head_word(relabeled, 4, 5, 6);
    std::vector<LabeledPairWord> heads;
    heads.push_back(LabeledPairWord{"w(1,3)", first.named_blocks(), first.flatten()});
    heads.push_back(LabeledPairWord{"w(4,6)", second.named_blocks(), second.flatten()});
    return finish(g, relabeled, witness.relabel, std::move(pp), std::move(heads), "v0");
}

}  // namespace wordrep
