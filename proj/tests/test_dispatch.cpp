#include "corpus.hpp"
#include "doctest.h"
#include "wordrep/dispatch.hpp"
#include "wordrep/scan.hpp"

using namespace wordrep;
using namespace wordrep::testing;

TEST_SUITE_BEGIN("dispatch");

TEST_CASE("demo graph dispatches to the odd construction") {
    DispatchResult r = dispatch(demo_graph());
    CHECK(r.report.strategy_used == Strategy::Odd);
    CHECK(r.word.k == 3);
    CHECK(r.report.bound == 3);
    CHECK(r.report.bound_satisfied == BoundStatus::Yes);
    CHECK_FALSE(r.report.residual_class);
    CHECK(represents(r.word.word, demo_graph().to_simple()).represents);
}

TEST_CASE("K_{1,1} is out of conjecture scope") {
    DispatchResult r = dispatch(BipartiteGraph(1, 1, {{1, 1}}));
    CHECK(r.report.strategy_used == Strategy::General);
    CHECK(r.word.k == 2);
    CHECK(r.report.bound_satisfied == BoundStatus::OutOfScope);
}

TEST_CASE("crown fallbacks") {
    DispatchResult c4 = dispatch(crown(4));
    CHECK(c4.report.strategy_used == Strategy::General);
    CHECK(c4.word.k == 3);
    CHECK(c4.report.bound == 2);
    CHECK(c4.report.residual_class);
    // m + n = 8 sits below the conjecture's domain
    CHECK(c4.report.bound_satisfied == BoundStatus::OutOfScope);

    DispatchResult c5 = dispatch(crown(5));
    CHECK(c5.report.strategy_used == Strategy::General);
    CHECK(c5.word.k == 4);
    CHECK(c5.report.bound == 3);
    CHECK(c5.report.bound_satisfied == BoundStatus::No);
    CHECK(c5.report.residual_class);
    CHECK(represents(c5.word.word, crown(5).to_simple()).represents);

    DispatchResult c6 = dispatch(crown(6));
    CHECK(c6.word.k == 4);  // general fallback: 1 + 6/2
    CHECK(c6.report.bound == 3);
    CHECK(c6.report.residual_class);
}

TEST_CASE("orientation and twins are undone transparently") {
    // wide graph: parts swap on ingestion
    BipartiteGraph wide(4, 2, {{1, 1}, {2, 1}, {3, 2}, {4, 1}, {4, 2}});
    DispatchResult r = dispatch(wide);
    CHECK(represents(r.word.word, wide.to_simple()).represents);

    // twins: K_{3,3} reduces to K_{1,1}
    BipartiteGraph k33(3, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3},
                              {3, 1}, {3, 2}, {3, 3}});
    DispatchResult rk = dispatch(k33);
    CHECK(rk.word.k == 2);
    CHECK(represents(rk.word.word, k33.to_simple()).represents);
}

TEST_CASE("disconnected inputs merge with a common uniformity") {
    BipartiteGraph two_edges(2, 2, {{1, 1}, {2, 2}});
    DispatchResult r = dispatch(two_edges);
    CHECK(r.report.components.size() == 2);
    CHECK(r.word.k == 2);
    CHECK(represents(r.word.word, two_edges.to_simple()).represents);

    // isolated vertices only
    BipartiteGraph bare(1, 1);
    DispatchResult rb = dispatch(bare);
    CHECK(rb.word.k == 2);
    CHECK(represents(rb.word.word, bare.to_simple()).represents);

    // mixed sizes force padding of the smaller component's word
    BipartiteGraph mixed(6, 7, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 1},
                                {4, 4}, {4, 5}, {5, 5}, {5, 6}, {6, 6}, {6, 7}, {4, 7}});
    REQUIRE(components(mixed).size() == 2);
    DispatchResult rm = dispatch(mixed);
    CHECK(represents(rm.word.word, mixed.to_simple()).represents);
    int maxk = 0;
    for (const auto& c : rm.report.components) maxk = std::max(maxk, c.k);
    CHECK(rm.word.k == maxk);
}

TEST_CASE("pad_uniform preserves representation") {
    std::uint64_t seed = 9100;
    for (auto g : connected_reduced_samples(25, 3, 5, 0.5, seed)) {
        DispatchResult r = dispatch(g);
        for (int extra = 1; extra <= 2; ++extra) {
            Word padded = pad_uniform(r.word.word, r.word.k, r.word.k + extra);
            CHECK(uniformity(padded) == r.word.k + extra);
            CHECK(represents(padded, g.to_simple()).represents);
        }
    }
}

TEST_CASE("forced strategies") {
    // forcing general on the demo graph reproduces the baseline k
    DispatchResult gen = dispatch(demo_graph(), Strategy::General);
    CHECK(gen.report.strategy_used == Strategy::General);
    CHECK(gen.word.k == 4);

    DispatchResult odd = dispatch(demo_graph(), Strategy::Odd);
    CHECK(odd.word.k == 3);

    CHECK_THROWS_AS(dispatch(crown(5), Strategy::Odd), std::invalid_argument);
    CHECK_THROWS_AS(dispatch(demo_graph(), Strategy::Chain3), std::invalid_argument);
}

TEST_CASE("auto never loses to general") {
    std::uint64_t seed = 60500;
    for (auto [m, n, p] : std::vector<std::tuple<int, int, double>>{
             {4, 4, 0.5}, {5, 6, 0.5}, {6, 6, 0.55}, {7, 8, 0.45}}) {
        for (auto g : connected_reduced_samples(10, m, n, p, seed)) {
            DispatchResult automatic = dispatch(g);
            DispatchResult general = dispatch(g, Strategy::General);
            CHECK(automatic.word.k <= general.word.k);
        }
        seed += 100000;
    }
}

TEST_CASE("scan over the full (2,2) family") {
    ScanReport report = conjecture_scan(enumerate_bipartite(2, 2, true), SearchBudget{});
    REQUIRE(report.records.size() == 1);
    const ScanRecord& rec = report.records[0];
    CHECK(rec.k == 2);
    CHECK(rec.bound == 1);
    CHECK(rec.ok == BoundStatus::OutOfScope);
    CHECK(rec.oracle_min_k == 2);
    CHECK(report.class_counts.size() == 1);
}

TEST_CASE("scan classifies the demo graph and crown singleton") {
    ScanReport demo = conjecture_scan({demo_graph()});
    REQUIRE(demo.records.size() == 1);
    CHECK(demo.records[0].cls == "odd");
    CHECK(demo.records[0].k == 3);
    CHECK(demo.records[0].ok == BoundStatus::Yes);

    ScanReport c5 = conjecture_scan({crown(5)});
    CHECK(c5.records[0].cls == "crown-fallback");
    CHECK(c5.records[0].k == 4);
    CHECK(c5.records[0].bound == 3);
    CHECK(c5.records[0].ok == BoundStatus::No);
}

TEST_SUITE_END();
