#include "wordrep/construct_odd.hpp"

#include <algorithm>
#include <queue>

#include "wordrep/construct_general.hpp"

namespace wordrep {

DegreeSplit classify_b(const BipartiteGraph& g) {
    if (g.m() % 2 == 0) throw std::invalid_argument("classify_b: m must be odd");
    DegreeSplit out;
    for (int b = 1; b <= g.n(); ++b) {
        if (g.deg_b(b) == g.m() - 1) {
            out.p1.push_back(b);
            for (int a = 1; a <= g.m(); ++a)
                if (!g.adjacent(a, b)) out.anti_match[b] = a;
        } else {
            out.p2.push_back(b);
        }
    }
    return out;
}

namespace {

Slot forced_slot(const BipartiteGraph& g, const PairToken& t, int b) {
    bool ni = g.adjacent(t.first.front(), b), nj = g.adjacent(t.second, b);
    if (ni && nj) return Slot::Common;
    if (ni) return Slot::OnlyFirst;
    if (nj) return Slot::OnlySecond;
    return Slot::LeadStar;  // placeholder; the star side is decided separately
}

}  // namespace

PlacementPlan placement_plan(const BipartiteGraph& g, const PairPartition& pp) {
    if (pp.count() < 3)
        throw std::logic_error("placement_plan: at least three pairs required");
    PlacementPlan plan;
    plan.slot.assign(pp.count(), std::vector<Slot>(g.n(), Slot::LeadStar));

    for (int b = 1; b <= g.n(); ++b) {
        std::vector<std::size_t> nonadj;
        for (std::size_t s = 0; s < pp.count(); ++s) {
            Slot f = forced_slot(g, pp.pairs[s], b);
            plan.slot[s][b - 1] = f;
            if (f == Slot::LeadStar) nonadj.push_back(s);  // b not adjacent to the pair
        }
        auto in_some_other = [&](std::size_t own, Slot wanted) {
            for (std::size_t t = 0; t < pp.count(); ++t)
                if (t != own && plan.slot[t][b - 1] == wanted) return true;
            return false;
        };
        if (nonadj.size() >= 2) {
            plan.slot[nonadj[0]][b - 1] = Slot::LeadStar;
            plan.slot[nonadj[1]][b - 1] = Slot::TrailStar;
            for (std::size_t x = 2; x < nonadj.size(); ++x)
                plan.slot[nonadj[x]][b - 1] = Slot::LeadStar;
        } else if (nonadj.size() == 1) {
            std::size_t s = nonadj[0];
            if (s + 1 < pp.count()) {
                plan.slot[s][b - 1] =
                    in_some_other(s, Slot::OnlySecond) ? Slot::LeadStar : Slot::TrailStar;
            } else {
                plan.slot[s][b - 1] =
                    in_some_other(s, Slot::OnlyFirst) ? Slot::TrailStar : Slot::LeadStar;
            }
        }
    }
    return plan;
}

namespace {

std::vector<std::vector<std::vector<int>>> block_members(const BipartiteGraph& g,
                                                         const PairPartition& pp,
                                                         const PlacementPlan& plan) {
    std::vector<std::vector<std::vector<int>>> members(
        pp.count(), std::vector<std::vector<int>>(5));
    for (std::size_t s = 0; s < pp.count(); ++s)
        for (int b = 1; b <= g.n(); ++b)
            members[s][static_cast<int>(plan.slot[s][b - 1])].push_back(b);
    return members;
}

// Topological order of one block of the first pair word under the uniform
// reversal constraints; ascending b-index breaks ties.
std::vector<int> order_first_word_block(const std::vector<int>& block,
                                        const PlacementPlan& plan, std::size_t pair_count) {
    std::size_t sz = block.size();
    if (sz <= 1) return block;
    std::vector<std::vector<bool>> before(sz, std::vector<bool>(sz, false));
    for (std::size_t x = 0; x < sz; ++x) {
        for (std::size_t y = x + 1; y < sz; ++y) {
            int b = block[x], b2 = block[y];
            bool saw_b_first = false, saw_b2_first = false;
            for (std::size_t t = 1; t < pair_count; ++t) {
                Slot sb = plan.slot[t][b - 1], sb2 = plan.slot[t][b2 - 1];
                if (sb == sb2) continue;
                (sb < sb2 ? saw_b_first : saw_b2_first) = true;
            }
            if (!saw_b_first && !saw_b2_first)
                throw std::logic_error("same-block pair shares every block (twins?)");
            // Uniform order elsewhere forces the reverse order here; mixed
            // orders leave the pair unconstrained.
            if (saw_b_first && !saw_b2_first)
                before[y][x] = true;
            else if (saw_b2_first && !saw_b_first)
                before[x][y] = true;
        }
    }
    std::vector<int> indegree(sz, 0);
    for (std::size_t x = 0; x < sz; ++x)
        for (std::size_t y = 0; y < sz; ++y)
            if (before[x][y]) ++indegree[y];
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (std::size_t x = 0; x < sz; ++x)
        if (indegree[x] == 0) ready.push(block[x]);
    std::vector<int> out;
    auto pos_of = [&](int b) {
        return static_cast<std::size_t>(std::find(block.begin(), block.end(), b) - block.begin());
    };
    while (!ready.empty()) {
        int b = ready.top();
        ready.pop();
        out.push_back(b);
        std::size_t x = pos_of(b);
        for (std::size_t y = 0; y < sz; ++y)
            if (before[x][y] && --indegree[y] == 0) ready.push(block[y]);
    }
    if (out.size() != sz)
        throw OrderingCycleError("intra-block ordering constraints form a cycle");
    return out;
}

}  // namespace

std::vector<BlockWord> block_ordering(const BipartiteGraph& g, const PairPartition& pp,
                                      const PlacementPlan& plan) {
    auto members = block_members(g, pp, plan);

    std::vector<BlockWord> words(pp.count());
    auto fill = [](BlockWord& w, const PairToken& t, std::vector<std::vector<int>>& blocks) {
        w.i = t.first.front();
        w.j = t.second;
        w.lead_star = std::move(blocks[0]);
        w.only_first = std::move(blocks[1]);
        w.common = std::move(blocks[2]);
        w.only_second = std::move(blocks[3]);
        w.trail_star = std::move(blocks[4]);
    };

    for (auto& block : members[0])
        block = order_first_word_block(block, plan, pp.count());
    fill(words[0], pp.pairs[0], members[0]);

    // Later words reverse the first word's letter order inside each block.
    Word first = words[0].flatten();
    std::vector<int> pos(g.n() + 1, 0);
    for (std::size_t p = 0; p < first.size(); ++p)
        if (first.letters[p].part == Part::B) pos[first.letters[p].index] = static_cast<int>(p);
    for (std::size_t s = 1; s < pp.count(); ++s) {
        for (auto& block : members[s])
            std::sort(block.begin(), block.end(), [&](int x, int y) { return pos[x] > pos[y]; });
        fill(words[s], pp.pairs[s], members[s]);
    }
    return words;
}

namespace {

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

}  // namespace

OddResult construct_odd(const BipartiteGraph& g) {
    if (!(g.m() >= 1 && g.m() <= g.n() && g.connected() && g.reduced()))
        throw std::invalid_argument("construct_odd: connected reduced graph with m <= n required");
    if (g.m() % 2 == 0) return NotApplicable{"m-even"};
    if (g.m() < 5) return NotApplicable{"m<5"};
    DegreeSplit split = classify_b(g);
    if (split.p2.empty()) return NotApplicable{"crown:P2-empty"};

    // The vertex paired with the padded isolate must be adjacent to every
    // degree-(m-1) vertex; otherwise the suffix drop can leave a pair of
    // B-letters alternating. Swap a qualifying vertex into the last slot.
    std::set<int> anti;
    for (const auto& [b, a] : split.anti_match) anti.insert(a);
    int head = 0;
    for (int a = g.m(); a >= 1 && head == 0; --a)
        if (!anti.count(a)) head = a;
    if (head == 0) return NotApplicable{"antimatch-covers-A"};
    std::vector<int> relabel(g.m());
    for (int i = 1; i <= g.m(); ++i) relabel[i - 1] = i;
    std::swap(relabel[head - 1], relabel[g.m() - 1]);
    BipartiteGraph gr = relabel_a(g, relabel);

    BipartiteGraph gp = pad_if_odd(gr);
    PairPartition pp = pair_partition(g.m());
    PlacementPlan plan = placement_plan(gp, pp);
    std::vector<BlockWord> words = block_ordering(gp, pp, plan);

    Trace trace;
    trace.partition = pp;
    trace.closing_included = false;
    std::vector<Word> flats;
    for (const BlockWord& bw : words) {
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
    Word dropped{std::move(all)};
    trace.assembled = dropped;

    Word closing = build_closing_word(flats.front(), pp);
    trace.closing = {{"w0", closing}};
    std::vector<Vertex> full = dropped.letters;
    full.insert(full.end(), closing.letters.begin(), closing.letters.end());
    Word predrop{std::move(full)};
    trace.with_closing = predrop;

    // The closing-word form must already represent the padded graph; only
    // then is dropping the suffix meaningful.
    int k = (g.m() + 1) / 2;
    verify_or_throw(predrop, gp, k + 1, "pre-drop word");
    verify_or_throw(dropped, gp, k, "suffix-dropped padded word");

    std::set<Vertex> keep;
    for (int i = 1; i <= g.m(); ++i) keep.insert(va(i));
    for (int j = 1; j <= g.n(); ++j) keep.insert(vb(j));
    trace.relabel = relabel;
    Word final_word = unrelabel_word(restrict_to(dropped, keep), relabel);
    verify_or_throw(final_word, g, k, "final word");
    return CertifiedWord{std::move(final_word), k, std::move(trace)};
}

bool claim_both_orders(const Trace& trace, int n) {
    // position of each b in each pair word
    std::vector<std::vector<int>> pos(trace.pair_words.size(), std::vector<int>(n + 1, -1));
    for (std::size_t s = 0; s < trace.pair_words.size(); ++s) {
        const Word& w = trace.pair_words[s].word;
        for (std::size_t p = 0; p < w.size(); ++p)
            if (w.letters[p].part == Part::B) pos[s][w.letters[p].index] = static_cast<int>(p);
    }
    for (int b = 1; b <= n; ++b) {
        for (int b2 = b + 1; b2 <= n; ++b2) {
            bool fwd = false, bwd = false;
            for (std::size_t s = 0; s < trace.pair_words.size(); ++s) {
                if (pos[s][b] < 0 || pos[s][b2] < 0) return false;
                (pos[s][b] < pos[s][b2] ? fwd : bwd) = true;
            }
            if (!fwd || !bwd) return false;
        }
    }
    return true;
}

}  // namespace wordrep
