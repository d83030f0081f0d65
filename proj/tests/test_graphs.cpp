#include <map>
#include <sstream>

#include "corpus.hpp"
#include "doctest.h"
#include "wordrep/bipartite.hpp"
#include "wordrep/oracle.hpp"

using namespace wordrep;
using wordrep::testing::demo_graph;

TEST_SUITE_BEGIN("graphs");

TEST_CASE("graph file parsing") {
    std::istringstream in("c a comment\np bip 2 2\ne 1 1\ne 2 2\n\n");
    BipartiteGraph g = parse_graph(in);
    CHECK(g.m() == 2);
    CHECK(g.n() == 2);
    CHECK(g.adjacent(1, 1));
    CHECK_FALSE(g.adjacent(1, 2));

    auto fails = [](const std::string& text) {
        std::istringstream s(text);
        CHECK_THROWS_AS(parse_graph(s), ParseError);
    };
    fails("p bip 2 2\ne 1 1\ne 1 1\n");   // duplicate edge
    fails("p bip 2 2\ne 3 1\n");          // out of range
    fails("e 1 1\n");                     // edge before header
    fails("p bip 0 2\n");                 // empty part
    fails("q bip 2 2\n");                 // unknown line
    fails("p bip 2 2\np bip 2 2\n");      // duplicate header
}

TEST_CASE("format/parse round-trip") {
    BipartiteGraph g = demo_graph();
    std::istringstream in(format_graph(g));
    CHECK(parse_graph(in) == g);
}

TEST_CASE("neighborhoods") {
    BipartiteGraph g = demo_graph();
    CHECK(g.neighborhood(va(1)) == std::set<Vertex>{vb(3), vb(4), vb(6)});
    CHECK(g.neighborhood(va(3)) == std::set<Vertex>{vb(1), vb(2), vb(4), vb(5), vb(6)});
    CHECK(g.neighborhood(vb(4)) == std::set<Vertex>{va(1), va(2), va(3), va(4)});
    BipartiteGraph iso(1, 1);
    CHECK(iso.neighborhood(va(1)).empty());
    CHECK_THROWS_AS(g.neighborhood(va(9)), std::invalid_argument);
}

TEST_CASE("components") {
    CHECK(components(demo_graph()).size() == 1);
    CHECK(demo_graph().connected());

    BipartiteGraph two_edges(2, 2, {{1, 1}, {2, 2}});
    auto comps = components(two_edges);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].graph.m() == 1);
    CHECK(comps[0].graph.n() == 1);
    CHECK(comps[0].graph.adjacent(1, 1));
    CHECK(comps[0].a_orig == std::vector<int>{1});
    CHECK(comps[1].b_orig == std::vector<int>{2});

    BipartiteGraph isolated(2, 1, {{1, 1}});
    auto ic = components(isolated);
    REQUIRE(ic.size() == 2);
    CHECK(ic[1].graph.m() == 1);
    CHECK(ic[1].graph.n() == 0);
}

TEST_CASE("orientation") {
    BipartiteGraph wide(3, 2, {{1, 1}, {2, 1}, {3, 2}});
    Oriented o = orient(wide);
    CHECK(o.swapped);
    CHECK(o.graph.m() == 2);
    CHECK(o.graph.n() == 3);
    CHECK(o.graph.adjacent(1, 1));
    CHECK(o.graph.adjacent(1, 2));
    CHECK(o.graph.adjacent(2, 3));
    Word w = parse_word("a1 b2");
    CHECK(unorient_word(w, true) == parse_word("b1 a2"));
    CHECK(unorient_word(w, false) == w);
}

TEST_CASE("twin reduction") {
    BipartiteGraph k22(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    TwinReduction r = reduce(k22);
    CHECK(r.reduced.m() == 1);
    CHECK(r.reduced.n() == 1);
    CHECK(r.reduced.adjacent(1, 1));
    CHECK(r.a_classes == std::vector<std::vector<int>>{{1, 2}});
    CHECK(r.b_classes == std::vector<std::vector<int>>{{1, 2}});

    TwinReduction demo = reduce(demo_graph());
    CHECK(demo.trivial());
    CHECK(demo.reduced == demo_graph());
    CHECK(demo_graph().reduced());

    BipartiteGraph star(1, 3, {{1, 1}, {1, 2}, {1, 3}});
    TwinReduction rs = reduce(star);
    CHECK(rs.reduced.m() == 1);
    CHECK(rs.reduced.n() == 1);
    CHECK(rs.b_classes == std::vector<std::vector<int>>{{1, 2, 3}});

    // idempotent: reducing a reduced graph leaves only singletons
    CHECK(reduce(r.reduced).trivial());
    CHECK(reduce(rs.reduced).trivial());
}

TEST_CASE("twin expansion: fixed words") {
    BipartiteGraph k22(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    TwinReduction r = reduce(k22);
    Word w = parse_word("a1 b1 a1 b1");
    Word out = expand_word_with_twins(w, r);
    CHECK(format_word(out) == "a1 a2 b1 b2 a2 a1 b2 b1");
    CHECK(represents(out, k22.to_simple()).represents);
    CHECK(uniformity(out) == 2);

    BipartiteGraph star(1, 3, {{1, 1}, {1, 2}, {1, 3}});
    Word out2 = expand_word_with_twins(w, reduce(star));
    CHECK(format_word(out2) == "a1 b1 b2 b3 a1 b3 b2 b1");
    CHECK(represents(out2, star.to_simple()).represents);

    // no twins: identity
    CHECK(expand_word_with_twins(w, reduce(BipartiteGraph(1, 1, {{1, 1}}))) == w);

    CHECK_THROWS_AS(expand_word_with_twins(parse_word("a1 b1"), r), std::invalid_argument);
}

TEST_CASE("twin expansion: random round trips") {
    std::uint64_t seed = 555;
    int done = 0;
    while (done < 200) {
        BipartiteGraph g = random_bipartite(3, 5, 0.45, seed++);
        if (!g.connected()) continue;
        TwinReduction r = reduce(g);
        Oriented o = orient(r.reduced);
        if (o.graph.m() < 1 || o.graph.n() < 1) continue;
        // a 2-uniform representant of the reduced graph via padding a crown
        // trick is overkill; reuse the verified general construction through
        // the oracle-free route: any k>=2 representant works, so take the
        // word a1 b1 a1 b1 only for K11 and otherwise skip to the dispatcher
        // tests. Here: exercise expansion against an oracle-found witness.
        SearchBudget budget;
        budget.k_max = 3;
        OracleResult res = min_representation_number(o.graph.to_simple(), budget);
        if (!res.witness || *res.min_k < 2) continue;
        Word lifted = expand_word_with_twins(unorient_word(*res.witness, o.swapped), r);
        CHECK(represents(lifted, g.to_simple()).represents);
        CHECK(uniformity(lifted) == res.min_k);
        ++done;
    }
}

TEST_CASE("crown generator") {
    BipartiteGraph c2 = crown(2);
    CHECK(c2.edge_count() == 2);
    CHECK(c2.adjacent(1, 2));
    CHECK(c2.adjacent(2, 1));
    CHECK_FALSE(c2.adjacent(1, 1));

    // crown(3) is a 6-cycle: connected and 2-regular on 6 vertices
    BipartiteGraph c3 = crown(3);
    CHECK(c3.connected());
    for (int i = 1; i <= 3; ++i) {
        CHECK(c3.deg_a(i) == 2);
        CHECK(c3.deg_b(i) == 2);
    }
    CHECK(c3.reduced());
    CHECK(crown(4).reduced());
    CHECK(crown(4).connected());
    CHECK_THROWS_AS(crown(1), std::invalid_argument);
}

TEST_CASE("random generator determinism") {
    BipartiteGraph forced = random_bipartite(1, 1, 1.0, 99);
    CHECK(forced.adjacent(1, 1));
    CHECK(random_bipartite(3, 5, 0.5, 42) == random_bipartite(3, 5, 0.5, 42));
    CHECK_THROWS_AS(random_bipartite(2, 1, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_bipartite(1, 1, 0.0, 1), std::invalid_argument);
}

TEST_CASE("enumeration: tiny families") {
    CHECK(enumerate_bipartite(1, 1, false).size() == 2);
    auto k11_only = enumerate_bipartite(1, 1, true);
    REQUIRE(k11_only.size() == 1);
    CHECK(k11_only[0].adjacent(1, 1));

    CHECK(enumerate_bipartite(1, 2, true).empty());

    auto g22 = enumerate_bipartite(2, 2, true);
    REQUIRE(g22.size() == 1);
    CHECK(g22[0].edge_count() == 3);  // the path on four vertices

    CHECK_THROWS_AS(enumerate_bipartite(5, 5, false), std::invalid_argument);
}

TEST_CASE("enumeration matches orbit counting and is duplicate-free") {
    // Independent ground truth: orbits of all bit-matrices under generators
    // (adjacent row swaps, adjacent column swaps, transpose when m = n).
    auto orbit_count = [](int m, int n, bool flag) {
        int cells = m * n;
        auto decode = [&](std::uint64_t bits) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j)
                    if (bits >> (cells - 1 - (i * n + j)) & 1ull) edges.push_back({i + 1, j + 1});
            return BipartiteGraph(m, n, edges);
        };
        auto bit_at = [&](std::uint64_t bits, int i, int j) {
            return (bits >> (cells - 1 - (i * n + j))) & 1ull;
        };
        std::vector<int> orbit(1ull << cells, -1);
        int orbits = 0;
        for (std::uint64_t start = 0; start < (1ull << cells); ++start) {
            if (orbit[start] >= 0) continue;
            std::vector<std::uint64_t> stack = {start};
            orbit[start] = orbits;
            while (!stack.empty()) {
                std::uint64_t cur = stack.back();
                stack.pop_back();
                std::vector<std::uint64_t> next;
                for (int r = 0; r + 1 < m; ++r) {  // swap rows r, r+1
                    std::uint64_t out = 0;
                    for (int i = 0; i < m; ++i)
                        for (int j = 0; j < n; ++j) {
                            int src = i == r ? r + 1 : i == r + 1 ? r : i;
                            out |= bit_at(cur, src, j) << (cells - 1 - (i * n + j));
                        }
                    next.push_back(out);
                }
                for (int cswap = 0; cswap + 1 < n; ++cswap) {
                    std::uint64_t out = 0;
                    for (int i = 0; i < m; ++i)
                        for (int j = 0; j < n; ++j) {
                            int src = j == cswap ? cswap + 1 : j == cswap + 1 ? cswap : j;
                            out |= bit_at(cur, i, src) << (cells - 1 - (i * n + j));
                        }
                    next.push_back(out);
                }
                if (m == n) {
                    std::uint64_t out = 0;
                    for (int i = 0; i < m; ++i)
                        for (int j = 0; j < n; ++j)
                            out |= bit_at(cur, j, i) << (cells - 1 - (i * n + j));
                    next.push_back(out);
                }
                for (std::uint64_t nx : next)
                    if (orbit[nx] < 0) {
                        orbit[nx] = orbits;
                        stack.push_back(nx);
                    }
            }
            ++orbits;
        }
        // count orbits that pass the filter (evaluate on each orbit's seed)
        std::map<int, bool> pass;
        for (std::uint64_t bits = 0; bits < (1ull << cells); ++bits) {
            int id = orbit[bits];
            if (pass.count(id)) continue;
            BipartiteGraph g = decode(bits);
            pass[id] = !flag || (g.connected() && g.reduced());
        }
        int count = 0;
        for (auto& [id, ok] : pass)
            if (ok) ++count;
        return count;
    };

    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {1, 4}}) {
        for (bool flag : {false, true}) {
            auto got = enumerate_bipartite(m, n, flag);
            CHECK(static_cast<int>(got.size()) == orbit_count(m, n, flag));
            // pairwise non-isomorphic: canonical forms are all distinct
            std::set<std::uint64_t> canon;
            for (const auto& g : got) canon.insert(canonical_bits(g));
            CHECK(canon.size() == got.size());
        }
    }
}

TEST_CASE("conjecture bound arithmetic") {
    CHECK(conjecture_bound(5, 6) == 3);
    CHECK(conjecture_bound(4, 5) == 3);
    CHECK(conjecture_bound(6, 6) == 3);
    CHECK(conjecture_bound(1, 1) == 1);
    CHECK(conjecture_bound(2, 2) == 1);
}

TEST_SUITE_END();
