#ifndef SEMIIND_ACCEPTANCE_HPP
#define SEMIIND_ACCEPTANCE_HPP

#include <semiind/formulas.hpp>
#include <semiind/oracles.hpp>
#include <semiind/relaxation.hpp>
#include <semiind/search.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace semiind {

struct CriterionResult
{
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    std::vector<std::string> findings; // reported observations that are not failures
    double seconds = 0;

    CriterionResult() = default;
    CriterionResult(int id_, std::string title_) : id(id_), title(std::move(title_)) {}
};

namespace acceptance {

    struct NamedPattern
    {
        std::string name;
        PatternGraph H;
    };

    inline std::vector<NamedPattern> four_vertex_patterns()
    {
        using namespace patterns;
        return {{"rbrb_c4", rbrb_c4()}, {"rrbb_c4", rrbb_c4()}, {"rrrb_c4", rrrb_c4()}, {"ccext", ccext()},
            {"rrbbext_a", rrbbext_a()}, {"rrbbext_b", rrbbext_b()}, {"ccextt", ccextt()}};
    }

    // Exhaustive maxima for every pattern the battery needs, one enumeration pass per n.
    class MaxTable
    {
    public:
        explicit MaxTable(int threads) : threads_(threads) {}

        const SearchResult & get(const std::string & name, int n)
        {
            if (! table_.count({name, n}))
                fill(n);
            return table_.at({name, n});
        }

    private:
        void fill(int n)
        {
            std::vector<Objective> objs;
            objs.push_back(pattern_objective(patterns::rbr_path(), "rbr_path"));
            for (auto & p : four_vertex_patterns()) {
                if (p.H.h() > n)
                    continue;
                objs.push_back(pattern_objective(p.H, p.name));
                objs.push_back(pattern_objective(p.H.swapped(), p.name + "~swap"));
            }
            auto res = brute_force_max_many(objs, n, threads_);
            for (auto & r : res)
                table_[{r.pattern_name, n}] = r;
        }

        int threads_;
        std::map<std::pair<std::string, int>, SearchResult> table_;
    };

    template <typename T>
    std::string str(const T & v)
    {
        std::ostringstream o;
        o << v;
        return o.str();
    }

    inline std::string str(Count v) { return to_string(v); }

    inline CriterionResult rbrb_exactness(MaxTable & mt)
    {
        CriterionResult c{1, "RBRB exactness and uniqueness, 4 <= n <= 8"};
        c.passed = true;
        std::ostringstream d;
        for (int n = 4; n <= 8; ++n) {
            const auto & r = mt.get("rbrb_c4", n);
            bool value_ok = to_big(r.max_value) == rbrb_max(n);
            std::set<std::uint64_t> got, want{canonical_code(construct_partitioned(n, n / 2, Colour::Red)),
                                                 canonical_code(construct_partitioned(n, n / 2, Colour::Blue))};
            for (auto & g : r.extremal)
                got.insert(canonical_code(g));
            bool set_ok = got == want;
            c.passed = c.passed && value_ok && set_ok;
            d << "n=" << n << ": max " << str(r.max_value) << " vs " << rbrb_max(n) << ", " << r.extremal.size()
              << " extremal class(es)" << (set_ok ? "" : " [set mismatch]") << "; ";
            if (n == 8)
                d << "n=8 pass " << r.seconds << " s";
        }
        c.detail = d.str();
        return c;
    }

    inline CriterionResult goodman_exactness(MaxTable & mt)
    {
        // The maximum number of red-blue 2-paths is twice the floor expression (half of it counts
        // the non-monochromatic triangles), so the check is max / 2 == formula.
        CriterionResult c{2, "Goodman exactness, 3 <= n <= 8 (half the maximum red-blue 2-path count)"};
        c.passed = true;
        std::ostringstream d;
        for (int n = 3; n <= 8; ++n) {
            auto m = to_big(mt.get("rbr_path", n).max_value);
            bool ok = m % 2 == 0 && m / 2 == goodman_max(n);
            c.passed = c.passed && ok;
            d << "n=" << n << ": " << m << "/2 vs " << goodman_max(n) << (ok ? "" : " [MISMATCH]") << "; ";
        }
        c.detail = d.str();
        return c;
    }

    inline CriterionResult walk_equality()
    {
        CriterionResult c{3, "walk equality on red C5, 1 <= t <= 20"};
        auto p = walk_profile(construct_red_cycle(5), 20);
        c.passed = true;
        for (int t = 1; t <= 20; ++t)
            if (p.W[t] != Count(10) << t) {
                c.passed = false;
                c.detail += "t=" + std::to_string(t) + " got " + to_string(p.W[t]) + "; ";
            }
        if (c.passed)
            c.detail = "W[20] = " + to_string(p.W[20]) + " = 10*2^20";
        return c;
    }

    inline CriterionResult oracle_equivalence(std::uint64_t seed)
    {
        CriterionResult c{4, "specialised counters equal the generic embedding counter on 504 random graphs"};
        std::mt19937_64 rng(seed);
        const auto cc = patterns::rbrb_c4(), rrbb = patterns::rrbb_c4(), rrrb = patterns::rrrb_c4(),
                   c6 = patterns::alt_cycle(6);
        std::uint64_t graphs = 0, checks = 0, bad = 0;
        std::ostringstream d;
        auto check = [&](const char * what, Count a, Count b, int n) {
            ++checks;
            if (a != b) {
                if (++bad <= 5)
                    d << what << " mismatch at n=" << n << " (" << to_string(a) << " vs " << to_string(b) << "); ";
            }
        };
        for (int i = 0; i < 504; ++i) {
            const int n = 4 + i % 9;
            const double sigma = 0.15 + 0.7 * double(rng() >> 11) * 0x1.0p-53;
            Graph G = construct_quasirandom(n, sigma, rng());
            ++graphs;
            check("rbrb", count_rbrb_antipodal(G), count_copies(cc, G), n);
            check("rrbb", count_rrbb_codegree(G), count_copies(rrbb, G), n);
            check("rrbb-mono", count_rrbb_monochromatic(G), count_copies(rrbb, G), n);
            check("rrrb", count_rrrb_codegree(G), count_copies(rrrb, G), n);
            check("cycle4", count_alternating_cycles(G, 4), count_copies(cc, G), n);
            if (n >= 6)
                check("cycle6", count_alternating_cycles(G, 6), count_copies(c6, G), n);
            if (n <= 8) {
                check("generic", count_embeddings(rrrb, G), oracle::embeddings_by_tuples(rrrb, G), n);
                auto p = walk_profile(G, 4);
                for (int t = 1; t <= 4; ++t)
                    check("walks", p.W[t], oracle::alternating_walks_by_tuples(G, t), n);
            }
        }
        c.passed = bad == 0;
        d << graphs << " graphs, " << checks << " comparisons, " << bad << " mismatches";
        c.detail = d.str();
        return c;
    }

    inline CriterionResult ccext_exactness(MaxTable & mt)
    {
        CriterionResult c{5, "CCext exactness, 4 <= n <= 7, and the extension bound"};
        c.passed = true;
        std::ostringstream d;
        auto t = extension_count(patterns::ccext(), patterns::rbrb_c4());
        auto s = copies_in_pattern(patterns::rbrb_c4(), patterns::ccext());
        d << "t=" << t << ", s=" << s << "; ";
        for (int n = 4; n <= 7; ++n) {
            BigInt want = BigInt(n * n / 4) * ((n - 2) * (n - 2) / 4);
            auto got = to_big(mt.get("ccext", n).max_value);
            Rational bound = extension_bound(rbrb_max(n), 2, 1);
            bool ok = got == want && Rational(got) == bound && t == 2 && s == 1;
            c.passed = c.passed && ok;
            d << "n=" << n << ": " << got << " vs " << want << (ok ? "" : " [MISMATCH]") << "; ";
        }
        c.detail = d.str();
        return c;
    }

    inline CriterionResult rrrb_asymptotic()
    {
        CriterionResult c{6, "RRRB counts on quasirandom K_400"};
        const int n = 400;
        const double n4 = std::pow(double(n), 4);
        std::ostringstream d;
        Graph G = construct_quasirandom(n, 0.75, 1);
        double r0 = to_double(count_rrrb_codegree(G)) / (27.0 / 512 * n4);
        c.passed = r0 >= 0.95 && r0 <= 1.05;
        d << "sigma=0.75 seed 1: ratio to 27/512 n^4 = " << r0 << "; ";
        std::uint64_t seed = 2;
        for (double s : {0.65, 0.75, 0.90}) {
            Graph Gs = construct_quasirandom(n, s, seed++);
            double r = to_double(count_rrrb_codegree(Gs)) / (0.5 * s * s * s * (1 - s) * n4);
            c.passed = c.passed && r >= 0.93 && r <= 1.07;
            d << "sigma=" << s << ": ratio " << r << "; ";
        }
        c.detail = d.str();
        return c;
    }

    inline CriterionResult equalization(std::uint64_t seed)
    {
        CriterionResult c{7, "equalization trace invariants on 50 vectors (exact rationals)"};
        std::mt19937_64 rng(seed);
        std::uint64_t steps = 0, bad = 0;
        std::ostringstream d;
        for (int k = 0; k < 50; ++k) {
            DegreeCodegreeVector<Rational> v;
            if (k < 25) {
                int n = 5 + k % 6;
                Graph G = k % 5 == 0 ? construct_partitioned(n, n / 2, Colour::Red)
                                     : construct_quasirandom(n, 0.2 + 0.15 * (k % 5), rng());
                v = vector_from_graph<Rational>(G);
            }
            else {
                // random d, random z, then the last z fixed so that (P3) holds exactly
                int n = 4 + k % 7;
                v.n = n;
                for (int i = 0; i < n; ++i)
                    v.d.push_back(Rational(std::int64_t(rng() % 101), 100));
                for (std::size_t p = 0; p < choose2(n); ++p)
                    v.z.push_back(Rational(std::int64_t(rng() % 101), 200));
                v.z.back() -= v.p3_residual();
            }
            Rational gamma = k % 2 == 0 ? Rational(1, 10) : Rational(1, 20);
            auto tr = equalize(v, gamma);
            steps += tr.step_count();
            const Rational drop = 8 * gamma / 5, rise = gamma * gamma / (25 * v.n * v.n);
            bool ok = tr.terminated && tr.final_vector.p3_residual() == v.p3_residual();
            for (std::size_t i = 1; i < tr.steps.size(); ++i)
                ok = ok && tr.steps[i].first == tr.steps[i - 1].first - drop
                    && tr.steps[i].second - tr.steps[i - 1].second >= rise;
            ok = ok && Rational(std::int64_t(tr.step_count())) * drop <= tr.steps[0].first;
            if (! ok) {
                ++bad;
                d << "vector " << k << " failed; ";
            }
        }
        c.passed = bad == 0;
        d << "50 vectors, " << steps << " steps in total, " << bad << " failures";
        c.detail = d.str();
        return c;
    }

    inline CriterionResult tradeoff_gap()
    {
        CriterionResult c{8, "tradeoff gap on a graphical grid; sigma-tau profile bound"};
        auto s = sweep_tradeoff_gap(91, 121);
        std::ostringstream d;
        d << s.points << " grid points, min gap " << s.min_gap << " at (" << s.at_p << "," << s.at_q << "," << s.at_r
          << "); ";
        bool ok = s.points >= 1000000 && s.min_gap >= -1e-12;
        double worst = 1e300;
        for (double sigma : {0.61, 0.7, 0.8, 0.9, 1.0})
            for (int i = 0; i <= 1000; ++i) {
                double tau = sigma * sigma + i * 1e-3;
                double slack = sigma * sigma * sigma * (1 - sigma) - 0.5 * (tau - sigma * sigma) * (tau - sigma * sigma)
                    - g_sigma(sigma, tau);
                worst = std::min(worst, slack);
            }
        ok = ok && worst >= -1e-12;
        d << "profile bound worst slack " << worst;
        c.passed = ok;
        c.detail = d.str();
        return c;
    }

    inline PatternGraph k23_plus_blue_edge()
    {
        std::vector<PatternEdge> es;
        for (int a : {0, 1})
            for (int b : {2, 3, 4})
                es.push_back({a, b, Colour::Red});
        es.push_back({2, 3, Colour::Blue});
        return {5, es};
    }

    inline CriterionResult canonical_pin()
    {
        CriterionResult c{9, "canonical score pin and RRBB canonicity"};
        double v = canonical_score(k23_plus_blue_edge(), 0.99, 0.01);
        auto g = canonical_grid(patterns::rrbb_c4(), 0.01, 0.005);
        c.passed = std::abs(v - 5.8806) <= 1e-9 && g.canonical;
        std::ostringstream d;
        d.precision(12);
        d << "p_H(0.99,0.01) = " << v << "; RRBB grid worst margin " << g.worst_margin << " over " << g.points
          << " points";
        c.detail = d.str();
        return c;
    }

    inline CriterionResult lambda_and_strictness()
    {
        CriterionResult c{10, "multipartite optimum and Q-strict margins"};
        auto o = optimize_lambda_Q(6, 30);
        bool ok = std::abs(o.value - 4.0 / 27) <= 1e-9 && o.argmax.size() == 3;
        for (double x : o.argmax)
            ok = ok && std::abs(x - 1.0 / 3) <= 1e-6;
        auto q = q_strict_margins(20, 20, 20);
        const double m2 = 60.0 * 60.0;
        std::ostringstream d;
        d << "lambda max " << o.value << " at " << o.argmax.size() << " parts; ";
        for (auto & f : q.inter) {
            double r = double(f.loss) / (7 * m2 / 18);
            ok = ok && std::abs(r - 1) <= 0.1;
            d << "inter " << (long long)f.loss << " (ratio " << r << "); ";
        }
        for (auto & f : q.intra) {
            double r = double(f.loss) / (2 * m2 / 9);
            ok = ok && std::abs(r - 1) <= 0.1;
            d << "intra " << (long long)f.loss << " (ratio " << r << "); ";
        }
        ok = ok && q.min_s2_gap > 0 && to_big(q.base) == q.base_formula;
        d << "min attachment gap " << (long long)q.min_s2_gap;
        c.passed = ok;
        c.detail = d.str();
        return c;
    }

    inline CriterionResult property_suites(MaxTable & mt, std::uint64_t seed)
    {
        CriterionResult c{11, "inequality suites, colour-swap symmetry, monotonicity, walk stability"};
        std::ostringstream d;
        auto ineq = small_inequality_checks(seed, 10000);
        bool ok = ineq.sum_product_violations == 0 && ineq.mean_cubic_violations == 0;
        d << "inequalities: " << ineq.sum_product_violations << " + " << ineq.mean_cubic_violations
          << " violations in 2x10^4 trials; ";

        int sym_checks = 0, sym_bad = 0;
        for (auto & p : four_vertex_patterns())
            for (int n = 4; n <= 7; ++n) {
                ++sym_checks;
                if (mt.get(p.name, n).max_value != mt.get(p.name + "~swap", n).max_value)
                    ++sym_bad;
            }
        ok = ok && sym_bad == 0;
        d << "swap symmetry " << sym_checks - sym_bad << "/" << sym_checks << "; ";

        int mono_checks = 0, mono_bad = 0;
        for (auto & p : four_vertex_patterns())
            for (int n = 5; n <= 8; ++n) {
                ++mono_checks;
                // (n - h) max(H,n) <= n max(H,n-1)
                BigInt lhs = BigInt(n - 4) * to_big(mt.get(p.name, n).max_value);
                BigInt rhs = BigInt(n) * to_big(mt.get(p.name, n - 1).max_value);
                if (lhs > rhs)
                    ++mono_bad;
            }
        ok = ok && mono_bad == 0;
        d << "monotonicity " << mono_checks - mono_bad << "/" << mono_checks << "; ";

        std::mt19937_64 rng(seed ^ 0x5eed);
        int stab_bad = 0, stab_graphs = 0;
        for (int k = 0; k < 50; ++k) {
            const int n = 6 + k % 15;
            Graph G;
            switch (k % 5) {
            case 0: G = construct_quasirandom(n, 0.05 + 0.2 * double(rng() % 100) / 100, rng()); break;
            case 1: G = construct_quasirandom(n, 0.75 + 0.2 * double(rng() % 100) / 100, rng()); break;
            case 2: G = construct_partitioned(n, 1 + int(rng() % 2), k % 2 ? Colour::Red : Colour::Blue); break;
            case 3: G = construct_turan_red(n, 2 + int(rng() % 4)); break;
            default: {
                // a red clique on a random prefix, blue elsewhere
                int a = 2 + int(rng() % (n - 2));
                G = Graph::from_function(n, [&](int, int y) { return y < a ? Colour::Red : Colour::Blue; });
            }
            }
            auto eps = assess_balance(G).epsilon;
            if (eps == 0)
                continue;
            ++stab_graphs;
            auto p = walk_profile(G, 6);
            for (int t = 2; t <= 6; ++t)
                if (Rational(to_big(p.W[t])) > unbalanced_walk_bound(n, t, eps))
                    ++stab_bad;
        }
        ok = ok && stab_bad == 0 && stab_graphs == 50;
        d << "walk stability on " << stab_graphs << " unbalanced graphs, " << stab_bad << " violations";
        c.passed = ok;
        c.detail = d.str();
        return c;
    }

    inline CriterionResult large_n_substitutes(MaxTable & mt)
    {
        CriterionResult c{12, "construction values exact at n <= 60; exhaustive maxima dominate constructions at n <= 8"};
        bool ok = true;
        std::ostringstream d;
        int rrbb_checks = 0, k112_checks = 0;
        for (int n = 4; n <= 60; ++n) {
            for (int a = 0; a <= n; ++a) {
                ++rrbb_checks;
                if (to_big(count_rrbb_codegree(construct_partitioned(n, a, Colour::Red))) != rrbb_value(n, a))
                    ok = false;
            }
            ++k112_checks;
            if (to_big(count_copies(patterns::ccextt(), construct_turan_red(n, 3))) != k112_tripartite_max(n))
                ok = false;
        }
        d << rrbb_checks << " partitioned RRBB counts and " << k112_checks << " tripartite counts checked; ";
        for (int n = 4; n <= 8; ++n) {
            BigInt best = 0;
            for (int a = 0; a <= n; ++a)
                best = std::max(best, rrbb_value(n, a));
            auto got = to_big(mt.get("rrbb_c4", n).max_value);
            if (got < best)
                ok = false;
            else if (got > best)
                c.findings.push_back("RRBB n=" + std::to_string(n) + ": exhaustive " + got.str() + " exceeds construction "
                    + best.str());
            auto k = to_big(mt.get("ccextt", n).max_value);
            if (k < k112_tripartite_max(n))
                ok = false;
            else if (k > k112_tripartite_max(n))
                c.findings.push_back("K112 n=" + std::to_string(n) + ": exhaustive " + k.str() + " exceeds tripartite "
                    + k112_tripartite_max(n).str());
        }
        d << c.findings.size() << " strict excess finding(s)";
        c.passed = ok;
        c.detail = d.str();
        return c;
    }

}

struct AcceptanceOptions
{
    int threads = 0;
    std::uint64_t seed = 20240601;
};

inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions & opt = {},
    const std::function<void(const CriterionResult &)> & on_result = {})
{
    using namespace acceptance;
    MaxTable mt(opt.threads);
    std::vector<std::function<CriterionResult()>> jobs = {
        [&] { return rbrb_exactness(mt); },
        [&] { return goodman_exactness(mt); },
        [&] { return walk_equality(); },
        [&] { return oracle_equivalence(opt.seed); },
        [&] { return ccext_exactness(mt); },
        [&] { return rrrb_asymptotic(); },
        [&] { return equalization(opt.seed); },
        [&] { return tradeoff_gap(); },
        [&] { return canonical_pin(); },
        [&] { return lambda_and_strictness(); },
        [&] { return property_suites(mt, opt.seed); },
        [&] { return large_n_substitutes(mt); },
    };
    std::vector<CriterionResult> out;
    for (auto & job : jobs) {
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = job();
        }
        catch (const std::exception & e) {
            r.id = int(out.size()) + 1;
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (on_result)
            on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

inline std::string format_criterion(const CriterionResult & r)
{
    std::ostringstream o;
    o << (r.passed ? "PASS" : "FAIL") << "  [" << (r.id < 10 ? " " : "") << r.id << "] " << r.title << " -- " << r.detail;
    for (auto & f : r.findings)
        o << "\n        finding: " << f;
    return o.str();
}

}

#endif
