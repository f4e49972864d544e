#include <semiind/coloured_graph.hpp>
#include <semiind/counting.hpp>
#include <semiind/oracles.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace semiind;

namespace {

Graph all_red(int n) { return Graph(n, Colour::Red); }

}

TEST(ColouredGraph, DegreesSumToNMinusOne)
{
    Graph g = construct_quasirandom(23, 0.4, 11);
    for (int x = 0; x < g.n(); ++x)
        EXPECT_EQ(g.red_deg(x) + g.blue_deg(x), 22);
}

TEST(ColouredGraph, TextRoundTrip)
{
    for (std::uint64_t seed : {1, 2, 3}) {
        Graph g = construct_quasirandom(9 + int(seed), 0.5, seed);
        EXPECT_EQ(parse_graph(to_text(g)), g);
    }
    EXPECT_THROW(parse_graph(""), std::invalid_argument);
    EXPECT_THROW(parse_graph("4\nRRRBB"), std::invalid_argument);
    EXPECT_THROW(parse_graph("4\nRRRBBX"), std::invalid_argument);
    EXPECT_THROW(parse_graph("x\nRRRBBB"), std::invalid_argument);
}

TEST(ColouredGraph, PartitionedSmallCases)
{
    Graph g = construct_partitioned(4, 2, Colour::Red);
    EXPECT_EQ(g.red_edge_count(), 4u);
    EXPECT_EQ(count_copies(patterns::rbrb_c4(), g), Count(2));
    EXPECT_EQ(construct_partitioned(7, 0, Colour::Red), Graph(7, Colour::Blue));
    EXPECT_EQ(count_copies(patterns::rbrb_c4(), construct_partitioned(6, 3, Colour::Red)), Count(18));
}

TEST(ColouredGraph, TuranAndQuasirandomExtremes)
{
    Graph t = construct_turan_red(6, 3);
    EXPECT_EQ(t.red_edge_count(), 12u);
    for (int x = 0; x < 6; ++x)
        EXPECT_EQ(t.blue_deg(x), 1);
    EXPECT_EQ(construct_turan_red(8, 1), Graph(8, Colour::Blue));
    EXPECT_EQ(count_copies(patterns::ccextt(), construct_turan_red(7, 3)), Count(38));
    EXPECT_EQ(construct_quasirandom(12, 0, 5), Graph(12, Colour::Blue));
    EXPECT_EQ(construct_quasirandom(12, 1, 5), all_red(12));
    EXPECT_THROW(construct_quasirandom(5, 1.5, 1), std::invalid_argument);
}

TEST(ColouredGraph, QuasirandomIsSeedDeterministic)
{
    EXPECT_EQ(construct_quasirandom(50, 0.3, 9), construct_quasirandom(50, 0.3, 9));
    EXPECT_NE(construct_quasirandom(50, 0.3, 9), construct_quasirandom(50, 0.3, 10));
}

// Frozen from a separate mt19937_64 + numpy implementation of the construction and score.
TEST(ColouredGraph, QuasirandomScorePinned)
{
    Graph g = construct_quasirandom(400, 0.75, 1);
    EXPECT_EQ(g.red_edge_count(), 59771u);
    auto q = assess_quasirandomness(g);
    EXPECT_NEAR(q.sigma, 0.7490100250626567, 1e-12);
    EXPECT_NEAR(q.score, 0.019002055518234442, 1e-10);
    EXPECT_LE(q.score, 0.02);

    auto p = assess_quasirandomness(construct_partitioned(20, 10, Colour::Red));
    EXPECT_NEAR(p.sigma, 10.0 / 19, 1e-12);
    EXPECT_NEAR(p.score, 0.2388504155124653, 1e-10);
}

TEST(ColouredGraph, BipartitionAssessment)
{
    Graph g = construct_partitioned(6, 3, Colour::Red);
    VertexSet X{true, true, true, false, false, false};
    auto a = assess_bipartition(g, X);
    EXPECT_EQ(a.delta, 0);
    EXPECT_TRUE(a.minority_edges.empty());
    EXPECT_EQ(a.minority_colour, Colour::Red);

    auto b = assess_bipartition(g.flipped(0, 1), X);
    ASSERT_EQ(b.minority_edges.size(), 1u);
    EXPECT_EQ(b.minority_edges[0], std::make_pair(0, 1));
    EXPECT_EQ(b.delta, Rational(1, 15));

    // all red: 6 edits against K_{3,3} on the red side, 9 on the blue side
    auto c = assess_bipartition(all_red(6), X);
    EXPECT_EQ(c.red_edit, 6u);
    EXPECT_EQ(c.blue_edit, 9u);
    EXPECT_EQ(c.minority_colour, Colour::Red);
    EXPECT_EQ(c.minority_edges.size(), 6u);
    EXPECT_EQ(c.delta, Rational(2, 5));

    // part-size slack: X of size 1 in K_6 is 2 away from 3
    VertexSet one{true, false, false, false, false, false};
    EXPECT_EQ(assess_bipartition(construct_partitioned(6, 1, Colour::Blue), one).delta, Rational(1, 3));
}

TEST(ColouredGraph, ImproveBipartitionRecoversParts)
{
    Graph g = construct_partitioned(12, 6, Colour::Blue).flipped(0, 7);
    VertexSet X(12, false);
    for (int i : {0, 1, 2, 3, 4, 9})
        X[i] = true;
    auto a = assess_bipartition(g, improve_bipartition(g, X));
    EXPECT_EQ(a.minority_edges.size(), 1u);
}

TEST(ColouredGraph, Balance)
{
    EXPECT_EQ(assess_balance(all_red(7)).epsilon, 1);
    EXPECT_EQ(assess_balance(construct_red_cycle(5)).epsilon, 0);
    // K_{5,15}: 5 |30 - 19| + 15 |10 - 19| = 190 over 380
    EXPECT_EQ(assess_balance(construct_partitioned(20, 5, Colour::Red)).epsilon, Rational(1, 2));
}

TEST(ColouredGraph, SwapAndFlip)
{
    EXPECT_EQ(swap_colours(all_red(5)), Graph(5, Colour::Blue));
    Graph g = construct_quasirandom(10, 0.5, 4);
    EXPECT_EQ(flip_edge(flip_edge(g, 1, 2), 1, 2), g);
    EXPECT_NE(flip_edge(g, 1, 2), g);
    EXPECT_THROW(flip_edge(g, 3, 3), std::invalid_argument);
    EXPECT_EQ(swap_colours(swap_colours(g)), g);
}

TEST(ColouredGraph, SwapCommutesWithCounting)
{
    std::mt19937_64 rng(77);
    const std::vector<PatternGraph> hs = {patterns::rrrb_c4(), patterns::rbr_path(), patterns::ccext(),
        patterns::rrbbext_a(), patterns::alt_path(3)};
    for (int i = 0; i < 30; ++i) {
        Graph g = construct_quasirandom(5 + i % 4, 0.3 + 0.02 * i, rng());
        for (auto & h : hs)
            EXPECT_EQ(oracle::copies_by_tuples(h, swap_colours(g)), count_copies(h.swapped(), g));
    }
}

TEST(ColouredGraph, Codegrees)
{
    Graph g = construct_quasirandom(17, 0.45, 21);
    for (int x = 0; x < 17; ++x)
        for (int y = 0; y < 17; ++y) {
            if (x == y)
                continue;
            int r = 0, b = 0;
            for (int w = 0; w < 17; ++w)
                if (w != x && w != y) {
                    r += g.is_red(x, w) && g.is_red(y, w);
                    b += ! g.is_red(x, w) && ! g.is_red(y, w);
                }
            ASSERT_EQ(g.red_codeg(x, y), r);
            ASSERT_EQ(g.blue_codeg(x, y), b);
        }
}
