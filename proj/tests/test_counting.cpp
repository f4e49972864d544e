#include <semiind/counting.hpp>
#include <semiind/formulas.hpp>
#include <semiind/oracles.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace semiind;

namespace {

std::vector<Graph> battery(std::uint64_t seed, int count, int lo, int hi)
{
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i)
        out.push_back(construct_quasirandom(lo + i % (hi - lo + 1), 0.1 + 0.8 * double(rng() % 1000) / 1000, rng()));
    return out;
}

}

TEST(Counting, SingleEdgeAndPartitionedC4)
{
    Graph g = construct_quasirandom(15, 0.35, 3);
    EXPECT_EQ(count_copies(patterns::red_edge(), g), Count(g.red_edge_count()));
    EXPECT_EQ(count_copies(patterns::rbrb_c4(), construct_partitioned(5, 2, Colour::Red)), Count(6));
}

TEST(Counting, GenericCounterMatchesTupleOracle)
{
    const std::vector<PatternGraph> hs = {patterns::rbrb_c4(), patterns::rrbb_c4(), patterns::rrrb_c4(), patterns::ccext(),
        patterns::rrbbext_a(), patterns::rrbbext_b(), patterns::ccextt(), patterns::alt_path(3), patterns::rbr_path(),
        parse_edge_literal("1-2:R,2-3:R,3-4:B,4-5:B,1-5:R")};
    for (auto & g : battery(5, 40, 4, 7))
        for (auto & h : hs)
            ASSERT_EQ(count_embeddings(h, g), oracle::embeddings_by_tuples(h, g)) << h.to_literal();
}

TEST(Counting, SpecialisedCountersOnRandomK7)
{
    Graph g = construct_quasirandom(7, 0.5, 2024);
    EXPECT_EQ(count_copies(patterns::rrbb_c4(), g), count_rrbb_codegree(g));
    EXPECT_EQ(count_copies(patterns::rrbb_c4(), g), oracle::copies_by_tuples(patterns::rrbb_c4(), g));
}

TEST(Counting, SpecialisedCountersMatchGeneric)
{
    for (auto & g : battery(6, 120, 4, 12)) {
        ASSERT_EQ(count_rbrb_antipodal(g), count_copies(patterns::rbrb_c4(), g));
        ASSERT_EQ(count_rrbb_codegree(g), count_copies(patterns::rrbb_c4(), g));
        ASSERT_EQ(count_rrbb_monochromatic(g), count_copies(patterns::rrbb_c4(), g));
        ASSERT_EQ(count_rrrb_codegree(g), count_copies(patterns::rrrb_c4(), g));
        ASSERT_EQ(count_rbr_paths(g), count_copies(patterns::rbr_path(), g));
        ASSERT_EQ(count_alternating_cycles(g, 4), count_copies(patterns::rbrb_c4(), g));
        if (g.n() >= 6) {
            ASSERT_EQ(count_alternating_cycles(g, 6), count_copies(patterns::alt_cycle(6), g));
        }
        if (g.n() >= 8) {
            ASSERT_EQ(count_alternating_cycles(g, 8), count_copies(patterns::alt_cycle(8), g));
        }
    }
}

// Blue codegree of x,y = n - d_x - d_y + c - 2 with d red degrees and c red codegree, adjusted
// by 2 when xy is red: checked against explicit neighbourhood intersections.
TEST(Counting, PairStatsAgainstNeighbourhoods)
{
    for (auto & g : battery(8, 30, 4, 14)) {
        auto s = pair_stats(g);
        const int n = g.n();
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                int r = 0, b = 0, w2xy = 0, w2yx = 0;
                for (int w = 0; w < n; ++w) {
                    if (w == x || w == y)
                        continue;
                    r += g.is_red(x, w) && g.is_red(w, y);
                    b += ! g.is_red(x, w) && ! g.is_red(w, y);
                    w2xy += g.is_red(x, w) && ! g.is_red(w, y);
                    w2yx += g.is_red(y, w) && ! g.is_red(w, x);
                }
                auto i = s.index(x, y);
                ASSERT_EQ(s.red_codeg[i], r);
                ASSERT_EQ(s.blue_codeg[i], b);
                ASSERT_EQ(s.w2R_xy[i], w2xy);
                ASSERT_EQ(s.w2R_yx[i], w2yx);
                ASSERT_EQ(s.bic[i], Count(r) * Count(b));
            }
    }
}

TEST(Counting, CodegreeCountsOnConstructions)
{
    EXPECT_EQ(count_rbrb_antipodal(construct_partitioned(6, 3, Colour::Red)), Count(18));
    Graph blue(9, Colour::Blue);
    EXPECT_EQ(count_rbrb_antipodal(blue), Count(0));
    EXPECT_EQ(count_rrbb_codegree(blue), Count(0));
    EXPECT_EQ(count_rrrb_codegree(blue), Count(0));
}

TEST(Counting, WalkProfile)
{
    Graph c5 = construct_red_cycle(5);
    EXPECT_EQ(walk_profile(c5, 3).W[3], Count(80));
    EXPECT_EQ(walk_profile(c5, 0).W[0], Count(5));
    EXPECT_EQ(walk_profile(Graph(6, Colour::Red), 2).W[2], Count(0));
    EXPECT_EQ(walk_profile(Graph(6, Colour::Red), 1).W[1], Count(30));

    Graph g = construct_quasirandom(8, 0.5, 31);
    auto p = walk_profile(g, 4);
    for (int t = 1; t <= 4; ++t)
        EXPECT_EQ(p.W[t], oracle::alternating_walks_by_tuples(g, t));
}

TEST(Counting, WalksAtHighLengthFitIn128Bits)
{
    // t = 40 on the regular red C_5 still fits: 10 * 2^40
    EXPECT_EQ(walk_profile(construct_red_cycle(5), 40).W[40], Count(10) << 40);
}

TEST(Counting, PairAlternatingWalks)
{
    Graph g = construct_quasirandom(9, 0.5, 12);
    auto m1 = pair_alternating_walks(g, 1);
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y)
            EXPECT_EQ(m1[x * 9 + y], Count(x != y && g.is_red(x, y)));

    // red-then-blue 2-walks inside one part of a red K_{3,3}: the midpoint would be red to x and blue to y
    Graph p = construct_partitioned(6, 3, Colour::Red);
    auto m2 = pair_alternating_walks(p, 2);
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y)
            if (x != y && (x < 3) == (y < 3)) {
                EXPECT_EQ(m2[x * 6 + y], Count(0));
            }

    for (auto & h : battery(13, 40, 3, 9)) {
        const int n = h.n();
        auto m = pair_alternating_walks(h, 2);
        Count s = 0;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y)
                    s += m[x * n + y];
        EXPECT_LE(to_big(s), 2 * goodman_max(n));
    }
}

TEST(Counting, AlternatingCycles)
{
    EXPECT_EQ(count_alternating_cycles(construct_partitioned(4, 2, Colour::Red), 4), Count(2));
    EXPECT_EQ(count_alternating_cycles(construct_partitioned(8, 4, Colour::Red), 4), Count(72));
    EXPECT_EQ(count_alternating_cycles(Graph(7, Colour::Red), 4), Count(0));
    EXPECT_THROW(count_alternating_cycles(Graph(7, Colour::Red), 5), std::invalid_argument);
    // K_{4,4} red, 8-cycles: (1/4)(4)_4 (4)_4 = 144
    EXPECT_EQ(count_alternating_cycles(construct_partitioned(8, 4, Colour::Red), 8), Count(144));
}

TEST(Counting, GoodmanIdentity)
{
    auto a = goodman_identity_check(Graph(5, Colour::Red));
    EXPECT_EQ(a.lhs, Count(0));
    EXPECT_EQ(a.rhs, Count(0));
    auto c = goodman_identity_check(construct_red_cycle(5));
    EXPECT_EQ(c.lhs, Count(10));
    EXPECT_EQ(c.rhs, Count(10));
    for (auto & g : battery(14, 20, 9, 9)) {
        auto s = goodman_identity_check(g);
        EXPECT_EQ(s.lhs, s.rhs);
        // independently: C(9,3) - monochromatic triangles
        EXPECT_EQ(s.lhs, Count(84) - oracle::monochromatic_triangles(g));
        EXPECT_EQ(2 * s.rhs, oracle::copies_by_tuples(patterns::rbr_path(), g));
    }
}

TEST(Counting, InducedCounts)
{
    using namespace simple;
    EXPECT_EQ(induced_count(cycle(4), construct_partitioned(4, 2, Colour::Red)), Count(1));
    for (int m = 2; m <= 5; ++m) {
        Graph kmm = construct_partitioned(2 * m, m, Colour::Red);
        EXPECT_EQ(to_big(induced_count(cycle(4), kmm)), binomial(m, 2) * binomial(m, 2));
    }
    // K4 minus an edge in the 5-partite Turan graph on 10 vertices, against tuple enumeration
    Graph t = construct_turan_red(10, 5);
    EXPECT_EQ(induced_count(k4_minus_edge(), t), oracle::copies_by_tuples(complete_pattern(k4_minus_edge()), t));
    EXPECT_EQ(induced_count(k4_minus_edge(), t), Count(120)); // 5 parts for the non-edge, C(4,2) parts for the rest, 2*2 choices
}

TEST(Counting, QuantumCounts)
{
    Graph g = construct_quasirandom(8, 0.5, 3);
    EXPECT_DOUBLE_EQ(count_quantum(QuantumPattern({{1.0, patterns::rrbb_c4()}}), g),
        to_double(count_copies(patterns::rrbb_c4(), g)));
    QuantumPattern q({{2.5, patterns::rrbb_c4()}, {-1.0, patterns::rbrb_c4()}});
    QuantumPattern q3({{7.5, patterns::rrbb_c4()}, {-3.0, patterns::rbrb_c4()}});
    EXPECT_DOUBLE_EQ(count_quantum(q3, g), 3 * count_quantum(q, g));

    // copies of the alternating C4 decompose over the red-blue K_4's: sum over complete 4-vertex
    // patterns K of #(CC, K) times the induced count of K
    using namespace simple;
    const std::vector<SimpleGraph> k4s = {
        {4, {}}, {4, {{0, 1}}}, {4, {{0, 1}, {2, 3}}}, path(4), {4, {{0, 1}, {1, 2}, {0, 2}}}, {4, {{0, 1}, {0, 2}, {0, 3}}},
        paw(), cycle(4), k4_minus_edge(), complete(4), {4, {{0, 1}, {1, 2}}}};
    Count total = 0;
    for (auto & k : k4s) {
        Graph kg = as_red_graph(k);
        total += count_copies(patterns::rbrb_c4(), kg) * induced_count(k, g);
    }
    EXPECT_EQ(total, count_copies(patterns::rbrb_c4(), g));
}

TEST(Counting, FlipDelta)
{
    const std::vector<PatternGraph> hs = {patterns::rbrb_c4(), patterns::rrrb_c4(), patterns::ccext(), patterns::alt_path(3)};
    for (auto & g : battery(15, 10, 6, 8))
        for (auto & h : hs)
            for (auto [x, y] : {std::pair{0, 1}, {2, 5}}) {
                __int128 before = count_copies(h, g), after = count_copies(h, g.flipped(x, y));
                ASSERT_EQ(flip_delta_copies(h, g, x, y), after - before);
            }
}
