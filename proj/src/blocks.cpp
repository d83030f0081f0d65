#include "wordrep/blocks.hpp"

#include <algorithm>

namespace wordrep {

bool PairToken::contains(int a_index) const {
    return a_index == second ||
           std::find(first.begin(), first.end(), a_index) != first.end();
}

PairPartition pair_partition(int m) {
    if (m < 1) throw std::invalid_argument("pair_partition: m >= 1 required");
    PairPartition pp;
    pp.padded = (m % 2 == 1);
    int top = pp.padded ? m + 1 : m;
    for (int i = 1; i < top; i += 2) pp.pairs.push_back(PairToken{{i}, i + 1});
    return pp;
}

Word BlockWord::flatten() const {
    std::vector<Vertex> out;
    auto bs = [&](const std::vector<int>& block) {
        for (int b : block) out.push_back(vb(b));
    };
    bs(lead_star);
    out.push_back(va(i));
    bs(only_first);
    out.push_back(va(j));
    bs(common);
    out.push_back(va(i));
    bs(only_second);
    out.push_back(va(j));
    bs(trail_star);
    return Word{std::move(out)};
}

BlockWord build_pair_word(const BipartiteGraph& g, int i, int j,
                          const PairWordPolicies* policies) {
    BlockWord w;
    w.i = i;
    w.j = j;
    for (int b = 1; b <= g.n(); ++b) {
        bool ni = g.adjacent(i, b), nj = g.adjacent(j, b);
        if (ni && nj)
            w.common.push_back(b);
        else if (ni)
            w.only_first.push_back(b);
        else if (nj)
            w.only_second.push_back(b);
        else if (!policies || !policies->put_in_leading_star || policies->put_in_leading_star(b))
            w.lead_star.push_back(b);
        else
            w.trail_star.push_back(b);
    }
    if (policies && policies->order_block) {
        policies->order_block("lead_star", w.lead_star);
        policies->order_block("only_first", w.only_first);
        policies->order_block("common", w.common);
        policies->order_block("only_second", w.only_second);
        policies->order_block("trail_star", w.trail_star);
    }
    return w;
}

Word connector_after(const PairPartition& pp, std::size_t left) {
    std::size_t right = (left + 1) % pp.count();
    std::vector<Vertex> out;
    for (std::size_t s = 0; s < pp.count(); ++s) {
        if (s == left || s == right) continue;
        out.push_back(va(pp.pairs[s].second));
    }
    for (std::size_t s = 0; s < pp.count(); ++s) {
        if (s == left || s == right) continue;
        for (int a : pp.pairs[s].first) out.push_back(va(a));
    }
    return Word{std::move(out)};
}

std::string connector_label(const PairPartition& pp, std::size_t left) {
    std::size_t right = (left + 1) % pp.count();
    return "D(" + std::to_string(pp.pairs[left].min_index()) + ":" +
           std::to_string(pp.pairs[right].max_index()) + ")";
}

Word build_connector(int p, int q, const PairPartition& pp) {
    for (std::size_t s = 0; s < pp.count(); ++s) {
        if (pp.pairs[s].min_index() != p) continue;
        std::size_t right = (s + 1) % pp.count();
        if (pp.pairs[right].max_index() != q)
            throw std::invalid_argument("build_connector: pairs (" + std::to_string(p) + ":" +
                                        std::to_string(q) + ") are not consecutive");
        return connector_after(pp, s);
    }
    throw std::invalid_argument("build_connector: no pair starts at " + std::to_string(p));
}

Word build_closing_word(const Word& head_pair_word, const PairPartition& pp) {
    std::vector<Vertex> out;
    auto push_pair = [&](const PairToken& t) {
        out.push_back(va(t.second));
        for (int a : t.first) out.push_back(va(a));
    };
    push_pair(pp.pairs.front());
    std::set<Vertex> bs;
    for (const Vertex& v : head_pair_word.letters)
        if (v.part == Part::B) bs.insert(v);
    Word rev = reversed(restrict_to(head_pair_word, bs));
    out.insert(out.end(), rev.letters.begin(), rev.letters.end());
    for (std::size_t s = 1; s < pp.count(); ++s) push_pair(pp.pairs[s]);
    return Word{std::move(out)};
}

}  // namespace wordrep
