#ifndef SEMIIND_FORMULAS_HPP
#define SEMIIND_FORMULAS_HPP

#include <semiind/coloured_graph.hpp>
#include <semiind/counting.hpp>
#include <semiind/pattern.hpp>

#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiind {

struct FormulaValue
{
    std::string name;
    std::optional<Rational> exact;
    double value = 0;
};

inline void require_unit(const Rational & sigma)
{
    if (sigma < 0 || sigma > 1)
        throw std::invalid_argument("sigma must lie in [0,1]");
}

// floor(n/2 * floor((n-1)/2) * ceil((n-1)/2)): half the maximum number of red-blue 2-paths,
// equivalently the maximum number of non-monochromatic triangles.
inline BigInt goodman_max(long long n)
{
    if (n < 3)
        return 0;
    BigInt p = BigInt(n) * ((n - 1) / 2) * (n / 2);
    return p / 2;
}

inline Rational walk_bound(long long n, int t)
{
    if (t < 1)
        throw std::invalid_argument("walk length must be at least 1");
    Rational half(BigInt(n - 1), BigInt(2));
    Rational p = 1;
    for (int i = 0; i < t; ++i)
        p *= half;
    return Rational(2 * n) * p;
}

inline Rational path_bound(long long n, int t) { return walk_bound(n, t) / 2; }

inline BigInt alt_cycle_max(long long n, int t)
{
    if (t < 1)
        throw std::invalid_argument("t must be at least 1");
    if (n < 4LL * t)
        return 0;
    return falling((n + 1) / 2, 2 * t) * falling(n / 2, 2 * t) / (2 * t);
}

inline BigInt rbrb_max(long long n)
{
    if (n < 2)
        return 0;
    return BigInt(n * n / 4) * ((n - 2) * (n - 2) / 4) / 2;
}

inline BigInt rrbb_value(long long n, long long a)
{
    if (a < 0 || a > n)
        throw std::invalid_argument("rrbb_value needs 0 <= a <= n");
    return 3 * (a * binomial(n - a, 3) + (n - a) * binomial(a, 3));
}

// The two roundings of (n + sqrt(3n - 4)) / 2, kept only where they attain the larger value.
inline std::set<long long> rrbb_best_a(long long n)
{
    if (n < 2)
        throw std::invalid_argument("rrbb_best_a needs n >= 2");
    // floor: the largest a with 2a - n <= sqrt(3n - 4), decided in integers
    long long a = n;
    while (a > 0 && (2 * a - n) > 0 && (2 * a - n) * (2 * a - n) > 3 * n - 4)
        --a;
    bool exact = (2 * a - n) >= 0 && (2 * a - n) * (2 * a - n) == 3 * n - 4;
    std::set<long long> cand{a};
    if (! exact && a + 1 <= n)
        cand.insert(a + 1);
    BigInt best = -1;
    for (auto c : cand)
        best = std::max(best, rrbb_value(n, c));
    std::set<long long> out;
    for (auto c : cand)
        if (rrbb_value(n, c) == best)
            out.insert(c);
    return out;
}

inline Rational rrrb_values(long long n) { return Rational(27, 512) * BigInt(n) * n * n * n; }

inline double profile_crossover() { return (1.0 + std::sqrt(2.0)) / 4.0; }

// 1/2 sigma^3 (1 - sigma). The extremal statement needs sigma >= (1+sqrt2)/4; pass
// require_regime to refuse evaluations outside it.
inline Rational rrrb_profile(const Rational & sigma, bool require_regime = false)
{
    require_unit(sigma);
    if (require_regime && to_double(sigma) < profile_crossover())
        throw std::invalid_argument("sigma below the crossover (1+sqrt2)/4");
    return sigma * sigma * sigma * (1 - sigma) / 2;
}

inline Rational rand_Q(const Rational & sigma)
{
    require_unit(sigma);
    return 12 * sigma * sigma * sigma * (1 - sigma);
}

inline Rational rational_power(const Rational & x, long long e)
{
    Rational r = 1;
    for (long long i = 0; i < e; ++i)
        r *= x;
    return r;
}

// Expected copies of H in G_{n,sigma} divided by n^h in the limit: h!/|Aut| sigma^{e_R} (1-sigma)^{e_B}.
inline Rational random_copy_density(const PatternGraph & H, const Rational & sigma)
{
    require_unit(sigma);
    BigInt hf = falling(H.h(), H.h());
    return Rational(hf, BigInt(H.aut_count())) * rational_power(sigma, H.edge_count(Colour::Red))
        * rational_power(1 - sigma, H.edge_count(Colour::Blue));
}

// Induced density of an uncoloured F in G_{n,sigma}: |V|!/|Aut| sigma^e (1-sigma)^{C(v,2)-e}.
inline Rational rand_density(const SimpleGraph & F, const Rational & sigma)
{
    return random_copy_density(complete_pattern(F), sigma);
}

inline BigInt k112_tripartite_max(long long n)
{
    if (n < 1)
        return 0;
    BigInt s = 0;
    for (long long ni : turan_part_sizes(int(n), 3))
        s += binomial(ni, 2) * binomial(n - ni, 2);
    return s;
}

// Copies of H in the (s,t)-partitioned graph, from the count in the (a0,b0)-partitioned graph H
// spans: C(s,a0)C(t,b0) #(H,G0), plus the mirrored term when a0 != b0.
inline BigInt partitioned_pattern_count(const PatternGraph & H, int a0, int b0, long long s, long long t,
    Colour bip_colour = Colour::Red)
{
    if (a0 < 0 || b0 < 0 || a0 + b0 != H.h())
        throw std::invalid_argument("H must have exactly a0 + b0 vertices");
    if (std::min(s, t) < std::max(a0, b0))
        throw std::invalid_argument("need min(s,t) >= max(a0,b0)");
    // connectivity of H as an uncoloured graph
    std::vector<int> seen{0};
    std::vector<bool> mark(H.h(), false);
    mark[0] = true;
    for (std::size_t i = 0; i < seen.size(); ++i)
        for (int w = 0; w < H.h(); ++w)
            if (! mark[w] && H.has_edge(seen[i], w)) {
                mark[w] = true;
                seen.push_back(w);
            }
    if (int(seen.size()) != H.h())
        throw std::invalid_argument("H must be connected");
    Count base = count_copies(H, construct_partitioned(H.h(), a0, bip_colour));
    if (base == 0)
        throw std::invalid_argument("H does not occur in the base partitioned graph");
    BigInt r = binomial(s, a0) * binomial(t, b0);
    if (a0 != b0)
        r += binomial(s, b0) * binomial(t, a0);
    return r * to_big(base);
}

// Limit densities max(H) = lim max(H,n)/n^{|V(H)|}.
inline Rational table1_density(const std::string & name, int t = 1)
{
    auto pow2 = [](int e) { return BigInt(1) << e; };
    if (name == "alt_walk")
        return t >= 1 ? Rational(1, pow2(t - 1)) : throw std::invalid_argument("t >= 1");
    if (name == "alt_path")
        return t >= 1 ? Rational(1, pow2(t)) : throw std::invalid_argument("t >= 1");
    if (name == "alt_cycle_4t")
        return t >= 1 ? Rational(1, BigInt(t) * pow2(4 * t + 1)) : throw std::invalid_argument("t >= 1");
    if (name == "rbrb_c4")
        return Rational(1, 32);
    // n^4/16 + O(n^3) copies; see the notes in the README on the tabulated 1/96
    if (name == "rrbb_c4" || name == "rrbbext_a" || name == "rrbbext_b")
        return Rational(1, 16);
    if (name == "rrrb_c4" || name == "bbbr_c4")
        return Rational(27, 512);
    if (name == "ccext")
        return Rational(1, 16);
    if (name == "ccextt")
        return Rational(1, 27);
    throw std::invalid_argument("no limit density recorded for '" + name + "'");
}

inline Rational unbalanced_walk_bound(long long n, int t, const Rational & epsilon)
{
    if (epsilon < 0 || epsilon > 1)
        throw std::invalid_argument("epsilon must lie in [0,1]");
    Rational e4 = rational_power(epsilon, 4);
    return (1 - e4 / 4) * walk_bound(n, t);
}

inline Rational extension_bound(const BigInt & max_hminus, long long t, long long copies_in_H)
{
    if (copies_in_H < 1)
        throw std::invalid_argument("copies_in_H must be at least 1");
    return Rational(max_hminus * t, BigInt(copies_in_H));
}

struct FormulaArgs
{
    std::optional<long long> n, a, t;
    std::optional<Rational> sigma, epsilon;
    std::string pattern;
};

inline std::vector<std::string> formula_names()
{
    return {"goodman_max", "walk_bound", "path_bound", "alt_cycle_max", "rbrb_max", "ccext_max", "rrbb_value",
        "rrbb_best", "rrrb_values", "rrrb_profile", "rand_Q", "k112_tripartite_max", "density", "unbalanced_walk_bound",
        "profile_crossover", "random_copy_density"};
}

// Evaluate a closed form by name; the CLI front end for this header.
inline FormulaValue evaluate_formula(const std::string & name, const FormulaArgs & args)
{
    auto need = [&](const std::optional<long long> & v, const char * what) {
        if (! v)
            throw std::invalid_argument("formula '" + name + "' needs --" + what);
        return *v;
    };
    auto need_sigma = [&] {
        if (! args.sigma)
            throw std::invalid_argument("formula '" + name + "' needs --sigma");
        return *args.sigma;
    };
    FormulaValue out;
    out.name = name;
    auto set = [&](const Rational & r) {
        out.exact = r;
        out.value = to_double(r);
    };
    if (name == "goodman_max")
        set(Rational(goodman_max(need(args.n, "n"))));
    else if (name == "walk_bound")
        set(walk_bound(need(args.n, "n"), int(need(args.t, "t"))));
    else if (name == "path_bound")
        set(path_bound(need(args.n, "n"), int(need(args.t, "t"))));
    else if (name == "alt_cycle_max")
        set(Rational(alt_cycle_max(need(args.n, "n"), int(need(args.t, "t")))));
    else if (name == "rbrb_max")
        set(Rational(rbrb_max(need(args.n, "n"))));
    else if (name == "ccext_max") {
        long long n = need(args.n, "n");
        set(Rational(BigInt(n * n / 4) * ((n - 2) * (n - 2) / 4)));
    }
    else if (name == "rrbb_value")
        set(Rational(rrbb_value(need(args.n, "n"), need(args.a, "a"))));
    else if (name == "rrbb_best") {
        // the value at the best part size; the argmax set is reported separately by the CLI
        long long n = need(args.n, "n");
        set(Rational(rrbb_value(n, *rrbb_best_a(n).begin())));
    }
    else if (name == "rrrb_values")
        set(rrrb_values(need(args.n, "n")));
    else if (name == "rrrb_profile")
        set(rrrb_profile(need_sigma()));
    else if (name == "rand_Q")
        set(rand_Q(need_sigma()));
    else if (name == "k112_tripartite_max")
        set(Rational(k112_tripartite_max(need(args.n, "n"))));
    else if (name == "density") {
        if (args.pattern.empty())
            throw std::invalid_argument("formula 'density' needs --pattern");
        set(table1_density(args.pattern, int(args.t.value_or(1))));
    }
    else if (name == "unbalanced_walk_bound") {
        if (! args.epsilon)
            throw std::invalid_argument("formula 'unbalanced_walk_bound' needs --epsilon");
        set(unbalanced_walk_bound(need(args.n, "n"), int(need(args.t, "t")), *args.epsilon));
    }
    else if (name == "profile_crossover")
        out.value = profile_crossover();
    else if (name == "random_copy_density") {
        if (args.pattern.empty())
            throw std::invalid_argument("formula 'random_copy_density' needs --pattern");
        auto H = named_pattern(args.pattern);
        if (! H)
            throw std::invalid_argument("unknown pattern '" + args.pattern + "'");
        set(random_copy_density(*H, need_sigma()));
    }
    else
        throw std::invalid_argument("unknown formula '" + name + "'");
    return out;
}

}

#endif
