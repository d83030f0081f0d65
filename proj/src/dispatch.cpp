#include "wordrep/dispatch.hpp"

#include <algorithm>
#include <map>

#include "wordrep/construct_general.hpp"
#include "wordrep/construct_odd.hpp"
#include "wordrep/construct_poset.hpp"

namespace wordrep {

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::General: return "general";
        case Strategy::Odd: return "odd";
        case Strategy::Chain3: return "chain3";
        case Strategy::TwoChains: return "two2";
    }
    return "?";
}

std::string to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::Yes: return "yes";
        case BoundStatus::No: return "no";
        case BoundStatus::OutOfScope: return "out-of-scope";
    }
    return "?";
}

Word pad_uniform(const Word& w, int from_k, int to_k) {
    if (to_k < from_k) throw std::invalid_argument("pad_uniform: cannot shrink");
    if (to_k == from_k) return w;
    // Letters in last-occurrence order: appending this permutation extends
    // every alternation pattern consistently.
    std::vector<Vertex> tail;
    std::set<Vertex> seen;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        if (seen.insert(*it).second) tail.push_back(*it);
    std::reverse(tail.begin(), tail.end());
    std::vector<Vertex> out = w.letters;
    for (int t = from_k; t < to_k; ++t) out.insert(out.end(), tail.begin(), tail.end());
    return Word{std::move(out)};
}

bool is_crown_graph(const BipartiteGraph& g) {
    if (g.m() != g.n() || g.m() < 2) return false;
    for (int i = 1; i <= g.m(); ++i)
        for (int j = 1; j <= g.n(); ++j)
            if (g.adjacent(i, j) == (i == j)) return false;
    return true;
}

namespace {

struct ComponentOutcome {
    CertifiedWord cw;  // over the component's reduced-oriented labels
    Strategy strategy = Strategy::General;
    bool residual = false;
    std::string note;
};

ComponentOutcome construct_component(const BipartiteGraph& g, std::optional<Strategy> forced) {
    ComponentOutcome out;

    if (forced) {
        switch (*forced) {
            case Strategy::General:
                out.cw = construct_general(g);
                out.strategy = Strategy::General;
                break;
            case Strategy::Odd: {
                OddResult r = construct_odd(g);
                if (auto* na = std::get_if<NotApplicable>(&r))
                    throw std::invalid_argument("strategy odd not applicable: " + na->reason);
                out.cw = std::move(std::get<CertifiedWord>(r));
                out.strategy = Strategy::Odd;
                break;
            }
            case Strategy::Chain3: {
                if (g.m() % 2 != 0 || g.m() < 6)
                    throw std::invalid_argument("strategy chain3 needs m = 2k with k >= 3");
                ChainWitness w = find_witness(inclusion_poset(g), g.m());
                if (w.kind != WitnessKind::Chain3)
                    throw std::invalid_argument("strategy chain3 not applicable: no 3-chain");
                out.cw = construct_chain3(g, w);
                out.strategy = Strategy::Chain3;
                break;
            }
            case Strategy::TwoChains: {
                if (g.m() % 2 != 0 || g.m() < 6)
                    throw std::invalid_argument("strategy two2 needs m = 2k with k >= 3");
                ChainWitness w = find_two_disjoint_chains(inclusion_poset(g), g.m());
                if (w.kind != WitnessKind::TwoChains)
                    throw std::invalid_argument(
                        "strategy two2 not applicable: no two disjoint 2-chains");
                out.cw = construct_two_chains(g, w);
                out.strategy = Strategy::TwoChains;
                break;
            }
        }
        return out;
    }

    if (g.m() % 2 == 1 && g.m() >= 5 && !is_crown_graph(g)) {
        OddResult r = construct_odd(g);
        if (auto* cw = std::get_if<CertifiedWord>(&r)) {
            out.cw = std::move(*cw);
            out.strategy = Strategy::Odd;
            return out;
        }
    }
    if (g.m() % 2 == 0 && g.m() >= 6) {
        ChainWitness w = find_witness(inclusion_poset(g), g.m());
        if (w.kind == WitnessKind::Chain3) {
            out.cw = construct_chain3(g, w);
            out.strategy = Strategy::Chain3;
            return out;
        }
        if (w.kind == WitnessKind::TwoChains) {
            out.cw = construct_two_chains(g, w);
            out.strategy = Strategy::TwoChains;
            return out;
        }
    }
    out.cw = construct_general(g);
    out.strategy = Strategy::General;
    if (is_crown_graph(g)) {
        out.note = "crown-fallback";
        out.residual = true;
    } else if (g.m() == g.n() && g.m() % 2 == 0) {
        out.note = "residual: equal even parts without poset witness";
        out.residual = true;
    }
    return out;
}

}  // namespace

DispatchResult dispatch(const BipartiteGraph& input, std::optional<Strategy> forced) {
    Oriented oriented = orient(input);
    const BipartiteGraph& g = oriented.graph;

    DispatchReport report;
    report.m = g.m();
    report.n = g.n();
    report.bound = conjecture_bound(g.m(), g.n());
    if (oriented.swapped) report.notes = "parts swapped so that m <= n";

    std::vector<Component> comps = components(g);
    std::vector<Word> words;
    std::vector<int> ks;
    std::vector<Trace> traces;
    bool plain = comps.size() == 1 && !oriented.swapped;  // trace usable as-is

    for (std::size_t c = 0; c < comps.size(); ++c) {
        const Component& comp = comps[c];
        ComponentReport cr;
        cr.index = static_cast<int>(c) + 1;

        if (comp.graph.m() + comp.graph.n() == 1) {
            Vertex v = comp.graph.m() == 1 ? va(1) : vb(1);
            words.push_back(component_word_to_parent(Word{{v}}, comp));
            ks.push_back(1);
            cr.m = comp.graph.m();
            cr.n = comp.graph.n();
            cr.k = 1;
            cr.note = "isolated vertex";
            report.components.push_back(cr);
            traces.push_back(Trace{});
            continue;
        }

        TwinReduction tr = reduce(comp.graph);
        cr.reduced_twins = !tr.trivial();
        Oriented sub = orient(tr.reduced);
        cr.swapped_parts = sub.swapped;
        cr.m = sub.graph.m();
        cr.n = sub.graph.n();
        plain = plain && !cr.reduced_twins && !cr.swapped_parts;

        ComponentOutcome outcome = construct_component(sub.graph, forced);
        cr.strategy = outcome.strategy;
        cr.k = outcome.cw.k;
        cr.note = outcome.note;
        if (outcome.residual && comps.size() == 1) report.residual_class = true;

        Word word = unorient_word(outcome.cw.word, sub.swapped);
        word = expand_word_with_twins(word, tr);
        if (!represents(word, comp.graph.to_simple()).represents)
            throw ConstructionError("dispatch: twin-expanded component word failed verification");
        report.components.push_back(cr);
        words.push_back(component_word_to_parent(word, comp));
        ks.push_back(outcome.cw.k);
        traces.push_back(std::move(outcome.cw.trace));
    }

    // Merge: pad every component word to a common uniformity, then
    // concatenate. Distinct components must not alternate, which needs
    // k >= 2 as soon as there are two of them.
    int k = *std::max_element(ks.begin(), ks.end());
    if (comps.size() > 1) k = std::max(k, 2);
    std::vector<Vertex> merged;
    for (std::size_t c = 0; c < words.size(); ++c) {
        Word padded = pad_uniform(words[c], ks[c], k);
        merged.insert(merged.end(), padded.letters.begin(), padded.letters.end());
    }
    Word final_word = unorient_word(Word{std::move(merged)}, oriented.swapped);

    auto ku = uniformity(final_word);
    if (!ku || *ku != k) throw ConstructionError("dispatch: merged word lost uniformity");
    if (!represents(final_word, input.to_simple()).represents)
        throw ConstructionError("dispatch: merged word failed verification against the input");

    report.k_achieved = k;
    int best = 0;
    for (std::size_t c = 0; c < report.components.size(); ++c)
        if (report.components[c].k > report.components[best].k) best = static_cast<int>(c);
    report.strategy_used = report.components[best].strategy;

    if (report.m + report.n < 9)
        report.bound_satisfied = BoundStatus::OutOfScope;
    else
        report.bound_satisfied = k <= report.bound ? BoundStatus::Yes : BoundStatus::No;

    CertifiedWord cw;
    cw.word = std::move(final_word);
    cw.k = k;
    cw.trace = plain ? traces.front() : Trace{};
    if (!plain) cw.trace.assembled = cw.word;
    return DispatchResult{std::move(cw), std::move(report), std::move(traces)};
}

}  // namespace wordrep
