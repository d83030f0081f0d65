#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "wordrep/word.hpp"

using namespace wordrep;
using wordrep::testing::demo_graph;
using wordrep::testing::kDemoWord;
using wordrep::testing::kDemoPaddedWord;

namespace {

// Letters a, b, c of the running text examples, mapped into the vertex
// alphabet as a1, b1, b2.
Word abc(const std::string& s) {
    std::vector<Vertex> letters;
    for (char c : s) {
        if (c == 'a') letters.push_back(va(1));
        else if (c == 'b') letters.push_back(vb(1));
        else letters.push_back(vb(2));
    }
    return Word{std::move(letters)};
}

Word random_word(std::mt19937_64& rng, int alphabet, int len) {
    std::vector<Vertex> letters;
    for (int t = 0; t < len; ++t) {
        int pick = static_cast<int>(rng() % (2 * alphabet));
        letters.push_back(pick < alphabet ? va(pick + 1) : vb(pick - alphabet + 1));
    }
    return Word{std::move(letters)};
}

}  // namespace

TEST_SUITE_BEGIN("words");

TEST_CASE("vertex tokens parse and print") {
    CHECK(to_string(va(3)) == "a3");
    CHECK(parse_vertex("b12") == vb(12));
    CHECK(va(1) < va(2));
    CHECK(va(9) < vb(1));
    CHECK_THROWS_AS(parse_vertex("c1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vertex("a0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vertex("a1x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vertex("a"), std::invalid_argument);
}

TEST_CASE("word text form round-trips") {
    Word w = parse_word("b2 a1 b3 a2");
    CHECK(format_word(w) == "b2 a1 b3 a2");
    CHECK(parse_word(format_word(w)) == w);
    CHECK(parse_word("").empty());
}

TEST_CASE("restriction") {
    // x = abbcbaccb, x|_{a,b} = abbbab
    Word x = abc("abbcbaccb");
    CHECK(restrict_to(x, {va(1), vb(1)}) == abc("abbbab"));
    CHECK(restrict_to(Word{}, {va(1)}).empty());
    CHECK(restrict_to(parse_word("a1 b1 a1"), {vb(1)}) == parse_word("b1"));
}

TEST_CASE("reversal") {
    // x^R = bccabcbba
    Word x = abc("abbcbaccb");
    CHECK(reversed(x) == abc("bccabcbba"));
    CHECK(reversed(Word{}).empty());
    CHECK(reversed(parse_word("a1")) == parse_word("a1"));
}

TEST_CASE("alternation") {
    CHECK(alternates(parse_word("a1 b1 a1 b1"), va(1), vb(1)));
    CHECK_FALSE(alternates(parse_word("a1 a1 b1 b1"), va(1), vb(1)));
    CHECK(alternates(Word{}, va(1), vb(1)));          // vacuous
    CHECK(alternates(parse_word("a1"), va(1), vb(1)));  // single letter
    CHECK_THROWS_AS(alternates(Word{}, va(1), va(1)), std::invalid_argument);

    // a1-b4 is an edge of the demo graph; its letters alternate in the
    // demo word.
    CHECK(alternates(parse_word(kDemoWord), va(1), vb(4)));
}

TEST_CASE("uniformity") {
    CHECK(uniformity(parse_word("a1 b1 a1 b1")) == 2);
    CHECK_FALSE(uniformity(parse_word("a1 b1 b1")).has_value());
    CHECK_FALSE(uniformity(Word{}).has_value());

    Word padded = parse_word(kDemoPaddedWord);
    CHECK(padded.size() == 48);
    CHECK(alphabet(padded).size() == 12);
    CHECK(uniformity(padded) == 4);
    CHECK(uniformity(parse_word(kDemoWord)) == 4);
}

TEST_CASE("represents: single edge and failure reasons") {
    SimpleGraph k11({va(1), vb(1)});
    k11.add_edge(va(1), vb(1));
    CHECK(represents(parse_word("a1 b1"), k11).represents);

    SimpleGraph empty2({va(1), vb(1)});
    Verdict v = represents(parse_word("a1 b1 a1 b1"), empty2);
    REQUIRE_FALSE(v.represents);
    CHECK(v.counterexample->u == va(1));
    CHECK(v.counterexample->v == vb(1));
    CHECK(v.counterexample->reason == FailureReason::NonAdjacentAlternating);

    Verdict miss = represents(parse_word("a1 a1 b1 b1"), k11);
    REQUIRE_FALSE(miss.represents);
    CHECK(miss.counterexample->reason == FailureReason::AdjacentNotAlternating);
}

TEST_CASE("represents: demo word against the demo graph") {
    CHECK(represents(parse_word(kDemoWord), demo_graph().to_simple()).represents);
    CHECK(represents(parse_word(kDemoPaddedWord),
                     wordrep::testing::demo_graph_padded().to_simple())
              .represents);
}

TEST_CASE("represents: the lexicographically smallest failing pair is reported") {
    // three isolated vertices; both (a1,a2) and (a1,b1) alternate in the
    // word, and (a1,a2) is the smaller pair
    SimpleGraph bare({va(1), va(2), vb(1)});
    Verdict v = represents(parse_word("a1 a2 b1 a1 a2 b1"), bare);
    REQUIRE_FALSE(v.represents);
    CHECK(v.counterexample->u == va(1));
    CHECK(v.counterexample->v == va(2));
}

TEST_CASE("represents: alphabet mismatches are input errors") {
    SimpleGraph k11({va(1), vb(1)});
    k11.add_edge(va(1), vb(1));
    CHECK_THROWS_AS(represents(parse_word("a1 b1 b2"), k11), VerifierInputError);
    CHECK_THROWS_AS(represents(parse_word("a1 a1"), k11), VerifierInputError);
}

TEST_CASE("restriction and reversal identities") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        Word w = random_word(rng, 4, static_cast<int>(rng() % 24));
        std::set<Vertex> s;
        for (int i = 1; i <= 4; ++i)
            if (rng() & 1) s.insert(va(i));
        for (int j = 1; j <= 4; ++j)
            if (rng() & 1) s.insert(vb(j));

        CHECK(restrict_to(restrict_to(w, s), s) == restrict_to(w, s));
        CHECK(reversed(reversed(w)) == w);
        CHECK(restrict_to(reversed(w), s) == reversed(restrict_to(w, s)));

        Vertex x = va(static_cast<int>(rng() % 4) + 1);
        Vertex y = vb(static_cast<int>(rng() % 4) + 1);
        CHECK(alternates(w, x, y) == alternates(reversed(w), x, y));
    }
}

TEST_CASE("uniform alternation equals a strict (xy)^k shape") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        // random 3-uniform word on 4 letters
        std::vector<Vertex> letters;
        for (int rep = 0; rep < 3; ++rep)
            for (int i = 1; i <= 2; ++i) {
                letters.push_back(va(i));
                letters.push_back(vb(i));
            }
        std::shuffle(letters.begin(), letters.end(), rng);
        Word w{std::move(letters)};
        int k = *uniformity(w);
        for (Vertex x : {va(1), va(2)})
            for (Vertex y : {vb(1), vb(2)}) {
                Word expect_xy, expect_yx;
                for (int t = 0; t < k; ++t) {
                    expect_xy.letters.push_back(x);
                    expect_xy.letters.push_back(y);
                    expect_yx.letters.push_back(y);
                    expect_yx.letters.push_back(x);
                }
                Word r = restrict_to(w, {x, y});
                CHECK(alternates(w, x, y) == (r == expect_xy || r == expect_yx));
            }
    }
}

TEST_CASE("cyclic shifts preserve what a uniform word represents") {
    // Exhaustive over |V| <= 4, k <= 2: the set of alternating pairs of a
    // uniform word is invariant under rotation, hence so is represents().
    for (int v = 1; v <= 4; ++v) {
        for (int k = 1; k <= 2; ++k) {
            std::vector<Vertex> base;
            for (int i = 1; i <= v; ++i)
                for (int t = 0; t < k; ++t) base.push_back(va(i));
            std::sort(base.begin(), base.end());
            do {
                Word w{base};
                std::vector<std::pair<int, int>> alt;
                for (int i = 1; i <= v; ++i)
                    for (int j = i + 1; j <= v; ++j)
                        if (alternates(w, va(i), va(j))) alt.push_back({i, j});
                for (std::size_t shift = 1; shift < base.size(); ++shift) {
                    std::vector<Vertex> rot(base.begin() + shift, base.end());
                    rot.insert(rot.end(), base.begin(), base.begin() + shift);
                    Word wr{std::move(rot)};
                    std::vector<std::pair<int, int>> alt_r;
                    for (int i = 1; i <= v; ++i)
                        for (int j = i + 1; j <= v; ++j)
                            if (alternates(wr, va(i), va(j))) alt_r.push_back({i, j});
                    REQUIRE(alt == alt_r);
                }
            } while (std::next_permutation(base.begin(), base.end()));
        }
    }
}

TEST_SUITE_END();
