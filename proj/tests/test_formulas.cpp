#include <semiind/counting.hpp>
#include <semiind/formulas.hpp>

#include <gtest/gtest.h>

using namespace semiind;

TEST(Formulas, Goodman)
{
    EXPECT_EQ(goodman_max(3), 1);
    EXPECT_EQ(goodman_max(5), 10);
    // floor(4 * 3 * 4)
    EXPECT_EQ(goodman_max(8), 48);
    for (int n = 3; n <= 40; ++n)
        EXPECT_GE(goodman_max(n), 0);
}

TEST(Formulas, WalkAndPathBounds)
{
    EXPECT_EQ(walk_bound(5, 3), 80);
    EXPECT_EQ(walk_bound(9, 2), 288);
    for (int n = 2; n <= 12; ++n)
        EXPECT_EQ(walk_bound(n, 1), n * (n - 1));
    EXPECT_EQ(path_bound(7, 2), walk_bound(7, 2) / 2);
    EXPECT_THROW(walk_bound(5, 0), std::invalid_argument);
}

TEST(Formulas, CyclesAndRbrb)
{
    EXPECT_EQ(alt_cycle_max(6, 1), 18);
    EXPECT_EQ(alt_cycle_max(7, 2), 0);
    EXPECT_EQ(alt_cycle_max(10, 1), 200);
    EXPECT_EQ(to_big(count_alternating_cycles(construct_partitioned(10, 5, Colour::Red), 4)), 200);
    EXPECT_EQ(to_big(count_alternating_cycles(construct_partitioned(9, 4, Colour::Red), 8)), alt_cycle_max(9, 2));
    EXPECT_EQ(rbrb_max(4), 2);
    EXPECT_EQ(rbrb_max(5), 6);
    EXPECT_EQ(rbrb_max(7), 36);
    for (int n = 4; n <= 50; ++n)
        EXPECT_EQ(alt_cycle_max(n, 1), rbrb_max(n));
    double r = to_double(Rational(rbrb_max(10000), BigInt(10000) * 10000 * 10000 * 10000));
    EXPECT_NEAR(r / (1.0 / 32), 1, 0.005);
}

TEST(Formulas, Rrbb)
{
    EXPECT_EQ(rrbb_value(30, 0), 0);
    EXPECT_EQ(rrbb_value(30, 30), 0);
    for (int n = 4; n <= 30; ++n)
        for (int a = 0; a <= n; ++a)
            EXPECT_EQ(rrbb_value(n, a), rrbb_value(n, n - a));
    // candidates for n = 100 are 58 and 59
    EXPECT_GT(rrbb_value(100, 59), rrbb_value(100, 58));
    EXPECT_EQ(rrbb_best_a(100), std::set<long long>{59});
    // best over all a, compared with the two rounded candidates
    for (int n = 6; n <= 200; ++n) {
        BigInt best = 0;
        for (int a = 0; a <= n; ++a)
            best = std::max(best, rrbb_value(n, a));
        for (auto a : rrbb_best_a(n))
            EXPECT_EQ(rrbb_value(n, a), best) << "n=" << n;
    }
    long long n = 10000;
    double r = to_double(Rational(rrbb_value(n, *rrbb_best_a(n).begin()), BigInt(n) * n * n * n));
    EXPECT_NEAR(r * 16, 1, 0.01);
}

TEST(Formulas, RrrbAndRandom)
{
    EXPECT_EQ(rrrb_profile(Rational(3, 4)), Rational(27, 512));
    EXPECT_EQ(rand_Q(Rational(3, 4)), Rational(81, 64));
    EXPECT_EQ(rand_Q(Rational(3, 4)) / 24, rrrb_profile(Rational(3, 4)));
    EXPECT_EQ(rrrb_values(8), Rational(27 * 4096, 512));
    EXPECT_THROW(rrrb_profile(Rational(1, 2), true), std::invalid_argument);
    EXPECT_NO_THROW(rrrb_profile(Rational(1, 2)));
    EXPECT_THROW(rand_Q(Rational(3, 2)), std::invalid_argument);
    EXPECT_NEAR(profile_crossover(), 0.6035533905932737, 1e-15);

    using namespace simple;
    EXPECT_EQ(rand_density(cycle(4), 0), 0);
    // 4!/8 sigma^4 (1 - sigma)^2 for the induced 4-cycle
    EXPECT_EQ(rand_density(cycle(4), Rational(1, 2)), Rational(3, 64));
    EXPECT_EQ(rand_density(complete(4), 1), 1);
    for (int k = 0; k <= 10; ++k) {
        Rational s(k, 10);
        auto v = rand_density(k4_minus_edge(), s);
        EXPECT_GE(v, 0);
        EXPECT_LE(v, 6);
    }
    // RRRB copies in G(n, sigma) are about C(n,4) * 12 sigma^3 (1 - sigma)
    EXPECT_EQ(random_copy_density(patterns::rrrb_c4(), Rational(3, 4)) / 24, rrrb_profile(Rational(3, 4)));
}

TEST(Formulas, K112)
{
    EXPECT_EQ(k112_tripartite_max(7), 38);
    for (int n = 3; n <= 40; ++n)
        EXPECT_EQ(to_big(count_copies(patterns::ccextt(), construct_turan_red(n, 3))), k112_tripartite_max(n));
    long long n = 30000;
    double r = to_double(Rational(k112_tripartite_max(n), BigInt(n) * n * n * n));
    EXPECT_NEAR(r * 27, 1, 0.001);
}

TEST(Formulas, PartitionedPatternCount)
{
    // alternating C4 in the (2,2)-partitioned K_4 has 2 copies
    for (int m = 2; m <= 8; ++m)
        EXPECT_EQ(partitioned_pattern_count(patterns::rbrb_c4(), 2, 2, m, m, Colour::Red),
            to_big(count_alternating_cycles(construct_partitioned(2 * m, m, Colour::Red), 4)));
    // unequal sides: the RRBB-with-chord pattern sits across a (1,3) split
    for (int s = 3; s <= 6; ++s)
        for (int t = 3; t <= 6; ++t) {
            auto H = patterns::rrbbext_a();
            Graph g = construct_partitioned(s + t, s, Colour::Red);
            // summed over the split shapes the pattern admits, against the direct count
            auto direct = to_big(count_copies(H, g));
            BigInt total = 0;
            for (int a0 = 0; a0 <= 4; ++a0) {
                try {
                    if (a0 <= 4 - a0)
                        total += partitioned_pattern_count(H, a0, 4 - a0, s, t, Colour::Red);
                }
                catch (const std::invalid_argument &) {
                }
            }
            EXPECT_EQ(total, direct) << s << "," << t;
        }
    EXPECT_THROW(partitioned_pattern_count(patterns::rbrb_c4(), 2, 2, 1, 5, Colour::Red), std::invalid_argument);
    EXPECT_THROW(partitioned_pattern_count(patterns::rbrb_c4(), 1, 2, 5, 5, Colour::Red), std::invalid_argument);
}

TEST(Formulas, Densities)
{
    EXPECT_EQ(table1_density("rbrb_c4"), Rational(1, 32));
    EXPECT_EQ(table1_density("rrrb_c4"), Rational(27, 512));
    EXPECT_EQ(table1_density("ccextt"), Rational(1, 27));
    EXPECT_EQ(table1_density("ccext"), Rational(1, 16));
    EXPECT_EQ(table1_density("alt_walk", 3), Rational(1, 4));
    EXPECT_EQ(table1_density("alt_path", 3), Rational(1, 8));
    EXPECT_EQ(table1_density("alt_cycle_4t", 1), Rational(1, 32));
    EXPECT_THROW(table1_density("nope"), std::invalid_argument);
    // the RRBB limit is n^4/16
    EXPECT_EQ(table1_density("rrbb_c4"), Rational(1, 16));
}

TEST(Formulas, UnbalancedAndExtension)
{
    for (int t = 1; t <= 5; ++t)
        EXPECT_EQ(unbalanced_walk_bound(11, t, 0), walk_bound(11, t));
    EXPECT_EQ(unbalanced_walk_bound(5, 1, 1), Rational(3, 4) * 20);
    for (int n = 4; n <= 12; ++n)
        EXPECT_EQ(extension_bound(rbrb_max(n), 2, 1), BigInt(n * n / 4) * ((n - 2) * (n - 2) / 4));
    EXPECT_EQ(extension_bound(18, 2, 1), 36);
    EXPECT_THROW(extension_bound(18, 2, 0), std::invalid_argument);
}

TEST(Formulas, NamedEvaluator)
{
    FormulaArgs a;
    a.sigma = Rational(3, 4);
    auto v = evaluate_formula("rrrb_profile", a);
    ASSERT_TRUE(v.exact);
    EXPECT_EQ(*v.exact, Rational(27, 512));
    FormulaArgs b;
    b.n = 6;
    EXPECT_EQ(*evaluate_formula("rbrb_max", b).exact, 18);
    EXPECT_EQ(*evaluate_formula("ccext_max", b).exact, 36);
    EXPECT_THROW(evaluate_formula("rbrb_max", FormulaArgs{}), std::invalid_argument);
    EXPECT_THROW(evaluate_formula("nope", b), std::invalid_argument);
}

TEST(Formulas, ParseRational)
{
    EXPECT_EQ(parse_rational("0.75"), Rational(3, 4));
    EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_rational("03/08"), Rational(3, 8));
    EXPECT_EQ(parse_rational("-0.05"), Rational(-1, 20));
    EXPECT_EQ(parse_rational("09"), 9);
    EXPECT_EQ(parse_rational("1"), 1);
    EXPECT_EQ(to_string(Rational(27, 512)), "27/512");
    for (auto bad : {"", "1/0", "a", "1e3", "0.5.5", "/2", "1/-2", "--1"})
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}
