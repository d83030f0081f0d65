#include "wordrep/construct_general.hpp"

#include <algorithm>

namespace wordrep {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("construct_general: " + what);
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

std::set<Vertex> vertex_set(const BipartiteGraph& g) {
    std::set<Vertex> s;
    for (int i = 1; i <= g.m(); ++i) s.insert(va(i));
    for (int j = 1; j <= g.n(); ++j) s.insert(vb(j));
    return s;
}

// The pair construction needs at least two pairs to balance occurrence
// counts; for m <= 2 a connected reduced graph is the path K_{1,1}, P4 or
// P5, which has a direct 2-uniform representant.
CertifiedWord construct_tiny(const BipartiteGraph& g) {
    Word w;
    if (g.m() == 1) {
        require(g.n() == 1, "m = 1 reduced connected graph must be K_{1,1}");
        w = parse_word("a1 b1 a1 b1");
    } else {
        int only_a1 = 0, only_a2 = 0, both = 0;
        for (int b = 1; b <= g.n(); ++b) {
            bool n1 = g.adjacent(1, b), n2 = g.adjacent(2, b);
            require(n1 || n2, "m = 2 connected graph cannot have an isolated b");
            int& slot = n1 && n2 ? both : n1 ? only_a1 : only_a2;
            require(slot == 0, "m = 2 reduced graph has at most one b per neighborhood");
            slot = b;
        }
        require(both != 0, "m = 2 connected graph needs a common neighbor");
        std::vector<int> pattern = {only_a1, -1, only_a1, both, -1, -2, both, only_a2, -2, only_a2};
        std::vector<Vertex> letters;
        for (int t : pattern) {
            if (t == -1)
                letters.push_back(va(1));
            else if (t == -2)
                letters.push_back(va(2));
            else if (t != 0)
                letters.push_back(vb(t));
        }
        w = Word{std::move(letters)};
    }
    verify_or_throw(w, g, 2, "tiny case");
    Trace trace;
    trace.partition = pair_partition(g.m());
    trace.assembled = w;
    return CertifiedWord{w, 2, std::move(trace)};
}

}  // namespace

BipartiteGraph pad_if_odd(const BipartiteGraph& g) {
    if (g.m() % 2 == 0) return g;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= g.m(); ++i)
        for (int j : g.neighbors_of_a(i)) edges.push_back({i, j});
    return BipartiteGraph(g.m() + 1, g.n(), edges);
}

CertifiedWord construct_general(const BipartiteGraph& g) {
    require(g.m() >= 1 && g.n() >= 1, "nonempty parts required");
    require(g.m() <= g.n(), "orientation m <= n required");
    require(g.connected(), "connected graph required");
    require(g.reduced(), "reduced graph required");

    if (g.m() <= 2) return construct_tiny(g);

    BipartiteGraph gp = pad_if_odd(g);
    PairPartition pp = pair_partition(g.m());

    Trace trace;
    trace.partition = pp;
    std::vector<Word> pair_words;
    for (const PairToken& t : pp.pairs) {
        BlockWord bw = build_pair_word(gp, t.first.front(), t.second);
        Word flat = bw.flatten();
        trace.pair_words.push_back(LabeledPairWord{
            "w(" + std::to_string(bw.i) + "," + std::to_string(bw.j) + ")",
            {{"lead_star", bw.lead_star},
             {"only_first", bw.only_first},
             {"common", bw.common},
             {"only_second", bw.only_second},
             {"trail_star", bw.trail_star}},
            flat});
        pair_words.push_back(std::move(flat));
    }

    std::vector<Word> connectors;
    for (std::size_t s = 0; s < pp.count(); ++s) {
        Word d = connector_after(pp, s);
        trace.connectors.push_back({connector_label(pp, s), d});
        connectors.push_back(std::move(d));
    }

    Word closing = build_closing_word(pair_words.front(), pp);
    trace.closing = {{"w0", closing}};

    std::vector<Vertex> all;
    for (std::size_t s = 0; s < pp.count(); ++s) {
        all.insert(all.end(), pair_words[s].letters.begin(), pair_words[s].letters.end());
        all.insert(all.end(), connectors[s].letters.begin(), connectors[s].letters.end());
    }
    all.insert(all.end(), closing.letters.begin(), closing.letters.end());
    Word assembled{std::move(all)};
    trace.assembled = assembled;

    int k = 1 + (g.m() + 1) / 2;
    verify_or_throw(assembled, gp, k, "padded word");

    Word final_word = pp.padded ? restrict_to(assembled, vertex_set(g)) : assembled;
    verify_or_throw(final_word, g, k, "final word");
    return CertifiedWord{std::move(final_word), k, std::move(trace)};
}

}  // namespace wordrep
