#include <semiind/counting.hpp>
#include <semiind/relaxation.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace semiind;

TEST(Relaxation, VectorFromGraphSatisfiesConstraints)
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto v = vector_from_graph<Rational>(construct_quasirandom(9 + int(seed), 0.6, seed));
        EXPECT_EQ(v.p3_residual(), 0);
        EXPECT_TRUE(v.p1());
        EXPECT_TRUE(v.graphical());
        EXPECT_TRUE(v.in_S(0));
    }
}

TEST(Relaxation, ObjectiveOnAllRed)
{
    for (int n : {5, 10, 40}) {
        auto v = vector_from_graph<Rational>(Graph(n, Colour::Red));
        EXPECT_EQ(v.d[0], Rational(n - 1, n));
        EXPECT_EQ(v.z[0], Rational(n - 2, n));
        // C(n,2)/n^2 * z (2d - 2z) = C(n,2)/n^2 * (n-2)/n * 2/n
        EXPECT_EQ(objective_f(v), Rational(n * (n - 1) / 2, n * n) * Rational(n - 2, n) * Rational(2, n));
    }
}

TEST(Relaxation, ObjectiveTracksRrrbCount)
{
    auto v = vector_from_graph<double>(construct_quasirandom(400, 0.75, 1));
    // pinned from the numpy evaluation of the same graph
    EXPECT_NEAR(objective_f(v), 0.104972578984375, 1e-12);
    EXPECT_NEAR(objective_f(v) / (27.0 / 256), 1, 0.03);

    // The gap is the red-pair correction: 2 #RRRB = n^4 f - 2 sum over red xy of the red codegree,
    // so the relative gap is about 1 / ((1 - sigma) n). Below sigma = 3/4 it stays under 5/n.
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        int n = 50 + int(rng() % 151);
        Graph g = construct_quasirandom(n, 0.3 + 0.45 * double(rng() % 1000) / 1000, rng());
        auto fr = objective_f(vector_from_graph<Rational>(g));
        BigInt red_codegrees = 0;
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (g.is_red(x, y))
                    red_codegrees += g.red_codeg(x, y);
        Rational scaled = fr * BigInt(n) * n * n * n;
        EXPECT_EQ(Rational(2 * to_big(count_rrrb_codegree(g))), scaled - 2 * red_codegrees);
        double c = to_double(count_rrrb_codegree(g)), approx = to_double(scaled) / 2;
        EXPECT_LE(std::abs(c - approx) / approx, 5.0 / n) << "n=" << n;
    }
}

TEST(Relaxation, EqualizeFlatVectorTakesNoSteps)
{
    auto v = vector_from_graph<Rational>(construct_red_cycle(7));
    auto tr = equalize(v, Rational(1, 10));
    // red C_7: pairs at distance 1, 2, 3 have different t; check the generic flat case instead
    DegreeCodegreeVector<Rational> flat;
    flat.n = 5;
    flat.d.assign(5, Rational(1, 2));
    flat.z.assign(10, Rational(1, 5));
    auto ft = equalize(flat, Rational(1, 10));
    EXPECT_TRUE(ft.terminated);
    EXPECT_EQ(ft.step_count(), 0u);
    EXPECT_TRUE(tr.terminated);
}

// n = 4, t = (ell + 2g, ell - 2g, ell, ell, ell, ell) with g = 1/10
TEST(Relaxation, EqualizeToyInstance)
{
    const Rational g(1, 10);
    DegreeCodegreeVector<Rational> v;
    v.n = 4;
    v.d.assign(4, Rational(1, 2));
    // t_ij = 1 - 4 z_ij; z = 1/5 gives t = 1/5 = ell for the flat pairs
    v.z.assign(6, Rational(1, 5));
    v.z[0] -= g / 2; // t_01 = ell + 2g
    v.z[1] += g / 2; // t_02 = ell - 2g
    ASSERT_EQ(v.ell(), Rational(1, 5));
    auto tr = equalize(v, g);
    EXPECT_TRUE(tr.terminated);
    EXPECT_GE(tr.step_count(), 1u);
    for (std::size_t k = 1; k < tr.steps.size(); ++k) {
        EXPECT_EQ(tr.steps[k].first, tr.steps[k - 1].first - 8 * g / 5);
        EXPECT_GT(tr.steps[k].second, tr.steps[k - 1].second);
    }
    EXPECT_EQ(tr.final_vector.p3_residual(), v.p3_residual());
}

// Trace pinned from an exact-fraction re-implementation of the step rule.
TEST(Relaxation, EqualizePartitioned)
{
    const Rational g(1, 10);
    auto v = vector_from_graph<Rational>(construct_partitioned(20, 10, Colour::Red));
    auto tr = equalize(v, g);
    ASSERT_TRUE(tr.terminated);
    EXPECT_EQ(tr.step_count(), 1080u);
    EXPECT_EQ(tr.steps.front().first, Rational(3600, 19));
    EXPECT_EQ(tr.steps.front().second, 0);
    EXPECT_EQ(tr.steps.back().first, Rational(1584, 95));
    EXPECT_EQ(tr.steps.back().second, Rational(367, 6250));
    for (std::size_t k = 1; k < tr.steps.size(); ++k) {
        ASSERT_EQ(tr.steps[k].first, tr.steps[k - 1].first - 8 * g / 5);
        ASSERT_GE(tr.steps[k].second - tr.steps[k - 1].second, g * g / (25 * 400));
    }
    // termination: one side of ell is within gamma
    auto ts = tr.final_vector.t_values();
    auto ell = tr.final_vector.ell();
    auto [lo, hi] = std::minmax_element(ts.begin(), ts.end());
    EXPECT_TRUE(*hi < ell + g || *lo > ell - g);

    auto dt = equalize(vector_from_graph<double>(construct_partitioned(20, 10, Colour::Red)), 0.1);
    EXPECT_EQ(dt.step_count(), 1080u);
    EXPECT_THROW(equalize(v, Rational(0)), std::invalid_argument);
}

TEST(Relaxation, SigmaTauProfile)
{
    EXPECT_EQ(g_sigma(Rational(3, 4), Rational(9, 16)), Rational(27, 256));
    for (int k = 0; k <= 20; ++k) {
        Rational s(k, 20);
        EXPECT_EQ(g_sigma(s, Rational(s * s)), Rational(s * s * s * (1 - s)));
    }
    EXPECT_DOUBLE_EQ(tau_star(0.5), 0.3125);
    EXPECT_DOUBLE_EQ(tau_star(0.75), 0.5625);
    // tau_star maximises g over tau >= sigma^2
    for (double s : {0.3, 0.5, 0.62, 0.75, 0.9})
        for (int i = 0; i <= 1000; ++i) {
            double tau = s * s + i * 1e-3;
            EXPECT_LE(g_sigma(s, tau), g_sigma(s, tau_star(s)) + 1e-15);
        }
}

TEST(Relaxation, PairFunctions)
{
    for (double p : {0.1, 0.3, 0.5, 0.8}) {
        auto f = rrbb_pair_functions(p, p, p);
        EXPECT_NEAR(f.b, p * (1 - p), 1e-15);
        EXPECT_NEAR(f.m, 0, 1e-15);
        EXPECT_NEAR(f.t, p * (1 - p), 1e-15);
        auto g = rrbb_pair_functions(p, 1 - p, 0);
        EXPECT_NEAR(g.b, 0, 1e-15);
        EXPECT_NEAR(g.t, 0.5 - p * (1 - p), 1e-15);
    }
    EXPECT_FALSE(rrbb_pair_functions(0.3, 0.3, 0.5).graphical);
    // the closed quadratic form agrees with the direct expression
    std::mt19937_64 rng(8);
    for (int i = 0; i < 10000; ++i) {
        double p = 0.01 + 0.98 * double(rng() % 10000) / 10000, q = double(rng() % 10000) / 10000;
        double lo = std::max(0.0, p + q - 1), hi = std::min(p, q);
        double r = lo + (hi - lo) * double(rng() % 10000) / 10000;
        auto f = rrbb_pair_functions(p, q, r);
        ASSERT_TRUE(f.gap && f.gap_closed);
        ASSERT_NEAR(*f.gap, *f.gap_closed, 1e-9);
    }
    auto s = sweep_tradeoff_gap(91, 101);
    EXPECT_GE(s.min_gap, -1e-12);
}

TEST(Relaxation, ClassifyPairs)
{
    const int m = 10, n = 2 * m;
    Graph g = construct_partitioned(n, m, Colour::Red);
    auto v = vector_from_graph<double>(g);
    std::vector<std::pair<double, double>> A;
    for (int y = 1; y < n; ++y)
        A.emplace_back(v.d[y], v.z[pair_index(n, 0, y)]);
    auto c = rrbb_classify_pairs(v.d[0], A, 0.05, 0.01);
    EXPECT_TRUE(c.A0.empty());
    EXPECT_EQ(c.S.size(), std::size_t(m));     // opposite part, codegree 0
    EXPECT_EQ(c.T.size(), std::size_t(m - 1)); // same part, codegree 1/2
    for (int i : c.S)
        EXPECT_GE(i + 1, m);

    std::vector<std::pair<double, double>> half(5, {0.5, 0.5}), zero(5, {0.5, 0.0});
    EXPECT_EQ(rrbb_classify_pairs(0.5, half, 0.05, 0.01).T.size(), 5u);
    EXPECT_EQ(rrbb_classify_pairs(0.5, zero, 0.05, 0.01).S.size(), 5u);
}

TEST(Relaxation, CanonicalScores)
{
    PatternGraph h(5, {{0, 2, Colour::Red}, {0, 3, Colour::Red}, {0, 4, Colour::Red}, {1, 2, Colour::Red}, {1, 3, Colour::Red},
                          {1, 4, Colour::Red}, {2, 3, Colour::Blue}});
    EXPECT_NEAR(canonical_score(h, 0.99, 0.01), 5.8806, 1e-9);
    for (auto H : {patterns::rbrb_c4(), patterns::rrrb_c4(), patterns::ccext()})
        EXPECT_DOUBLE_EQ(canonical_score(H, 0, 0), H.h());
    EXPECT_TRUE(is_canonical_grid(patterns::rrbb_c4(), 0.01, 0.005));
    EXPECT_FALSE(is_canonical_grid(h, 0.01, 0.01));
    EXPECT_TRUE(partition_compatible(patterns::rbrb_c4()));
    EXPECT_FALSE(partition_compatible(patterns::rrrb_c4()));
}

TEST(Relaxation, SmallInequalities)
{
    // equality cases
    EXPECT_TRUE(sum_product_holds({3, 3, 0}, {3, 3, 0}, 6));
    EXPECT_DOUBLE_EQ(mean_cubic_lhs({0.4, 0.4, 0.4}), 1 - std::pow(0.4, 4));
    auto r = small_inequality_checks(99, 10000);
    EXPECT_EQ(r.sum_product_violations, 0u);
    EXPECT_EQ(r.mean_cubic_violations, 0u);
    EXPECT_GE(r.sum_product_worst_slack, 0);
}

TEST(Relaxation, LambdaAndStrictness)
{
    EXPECT_DOUBLE_EQ(lambda_Q({0.5, 0.5}), 0.125);
    EXPECT_THROW(lambda_Q({0.7, 0.7}), std::invalid_argument);
    auto o = optimize_lambda_Q(6, 30);
    EXPECT_NEAR(o.value, 4.0 / 27, 1e-9);
    ASSERT_EQ(o.argmax.size(), 3u);
    for (double x : o.argmax)
        EXPECT_NEAR(x, 1.0 / 3, 1e-6);

    auto q = q_strict_margins(20, 20, 20);
    EXPECT_EQ(to_big(q.base), q.base_formula);
    EXPECT_EQ(to_big(q.base), 444600);
    for (auto & f : q.inter)
        EXPECT_EQ((long long)f.loss, 1292);
    for (auto & f : q.intra)
        EXPECT_EQ((long long)f.loss, 780);
    EXPECT_EQ((long long)q.min_s2_gap, 8000);
}
