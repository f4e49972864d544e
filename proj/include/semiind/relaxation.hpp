#ifndef SEMIIND_RELAXATION_HPP
#define SEMIIND_RELAXATION_HPP

#include <semiind/coloured_graph.hpp>
#include <semiind/counting.hpp>
#include <semiind/pattern.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace semiind {

template <typename S>
S abs_of(const S & x)
{
    return x < 0 ? S(-x) : x;
}

template <typename S>
double as_double(const S & x)
{
    if constexpr (std::is_same_v<S, Rational>)
        return to_double(x);
    else
        return double(x);
}

// Normalised red degrees d_i and red codegrees z_ij (pairs in pair_index order).
template <typename S>
struct DegreeCodegreeVector
{
    int n = 0;
    std::vector<S> d;
    std::vector<S> z;

    S sigma() const
    {
        S s = 0;
        for (auto & x : d)
            s += x;
        return s / n;
    }

    S tau() const
    {
        S s = 0;
        for (auto & x : d)
            s += x * x;
        return s / n;
    }

    S t(int i, int j) const { return d[i] + d[j] - 4 * z[pair_index(n, i, j)]; }

    std::vector<S> t_values() const
    {
        std::vector<S> out;
        out.reserve(z.size());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                out.push_back(t(i, j));
        return out;
    }

    S ell() const
    {
        S s = 0;
        for (auto & x : t_values())
            s += x;
        return s / S(std::int64_t(z.size()));
    }

    // t_ij = ell - 4 eps_ij
    std::vector<S> eps_values() const
    {
        S l = ell();
        auto ts = t_values();
        for (auto & x : ts)
            x = (l - x) / 4;
        return ts;
    }

    // (P3): sum z = (n/2)(tau n - sigma)
    S p3_residual() const
    {
        S s = 0;
        for (auto & x : z)
            s += x;
        return s - S(n) / 2 * (tau() * n - sigma());
    }

    bool p1() const
    {
        for (auto & x : d)
            if (x < 0 || x > 1)
                return false;
        return true;
    }

    bool in_S(double tolerance) const { return p1() && std::abs(as_double(p3_residual())) <= tolerance; }

    // (P2): max(0, d_i + d_j - 1) <= z_ij <= min(d_i, d_j)
    bool graphical() const
    {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const S & zz = z[pair_index(n, i, j)];
                S lo = d[i] + d[j] - 1;
                if (lo < 0)
                    lo = 0;
                if (zz < lo || zz > std::min(d[i], d[j]))
                    return false;
            }
        return true;
    }
};

template <typename S>
DegreeCodegreeVector<S> vector_from_graph(const Graph & G)
{
    const int n = G.n();
    DegreeCodegreeVector<S> v;
    v.n = n;
    for (int x = 0; x < n; ++x)
        v.d.push_back(S(G.red_deg(x)) / S(n));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            v.z.push_back(S(G.red_codeg(x, y)) / S(n));
    return v;
}

// f(d,z) = n^-2 sum_{i<j} z_ij (d_i + d_j - 2 z_ij)
template <typename S>
S objective_f(const DegreeCodegreeVector<S> & v)
{
    S s = 0;
    for (int i = 0; i < v.n; ++i)
        for (int j = i + 1; j < v.n; ++j) {
            const S & zz = v.z[pair_index(v.n, i, j)];
            s += zz * (v.d[i] + v.d[j] - 2 * zz);
        }
    return s / (S(v.n) * S(v.n));
}

template <typename S>
struct EqualizationTrace
{
    S gamma;
    std::vector<std::pair<S, S>> steps; // (Sigma_k, f_k), k = 0, 1, ...
    bool terminated = false;
    DegreeCodegreeVector<S> final_vector;

    std::size_t step_count() const { return steps.empty() ? 0 : steps.size() - 1; }
};

// While some t_ij >= ell + gamma and some t_i'j' <= ell - gamma, move gamma/5 of codegree from
// the pair with the smallest t to the pair with the largest t. Both Sigma and f are recomputed
// from the vector after every step rather than updated.
template <typename S>
EqualizationTrace<S> equalize(DegreeCodegreeVector<S> v, const S & gamma, std::size_t max_steps = 0)
{
    if (! (gamma > 0))
        throw std::invalid_argument("gamma must be positive");
    if (v.n < 2)
        throw std::invalid_argument("equalize needs at least two vertices");
    EqualizationTrace<S> tr;
    tr.gamma = gamma;
    const S ell = v.ell();
    std::vector<std::pair<int, int>> at;
    for (int i = 0; i < v.n; ++i)
        for (int j = i + 1; j < v.n; ++j)
            at.emplace_back(i, j);
    auto sigma_of = [&] {
        S s = 0;
        for (auto [i, j] : at)
            s += abs_of<S>(v.t(i, j) - ell);
        return s;
    };
    S sigma0 = sigma_of();
    tr.steps.emplace_back(sigma0, objective_f(v));
    if (max_steps == 0)
        max_steps = std::size_t(std::ceil(as_double(sigma0) * 5 / (8 * as_double(gamma)))) + 2;
    const S shift = gamma / 5;
    for (;;) {
        std::size_t hi = 0, lo = 0;
        S thi = v.t(at[0].first, at[0].second), tlo = thi;
        for (std::size_t k = 1; k < at.size(); ++k) {
            S tk = v.t(at[k].first, at[k].second);
            if (tk > thi) {
                thi = tk;
                hi = k;
            }
            if (tk < tlo) {
                tlo = tk;
                lo = k;
            }
        }
        if (! (thi >= ell + gamma && tlo <= ell - gamma)) {
            tr.terminated = true;
            break;
        }
        if (tr.step_count() >= max_steps)
            break;
        v.z[hi] += shift;
        v.z[lo] -= shift;
        tr.steps.emplace_back(sigma_of(), objective_f(v));
    }
    tr.final_vector = std::move(v);
    return tr;
}

// ---- the sigma-tau profile

template <typename S>
S g_sigma(const S & sigma, const S & tau)
{
    return -(8 * tau * tau - (8 * sigma + 1) * tau + sigma * sigma) / 8;
}

inline double tau_star(double sigma)
{
    double lambda = 2 * sigma * sigma - 0.125 - sigma;
    return lambda < 0 ? sigma / 2 + 1.0 / 16 : sigma * sigma;
}

// ---- RRBB pair functions

struct PairFunctions
{
    double b = 0, m = 0, t = 0;
    bool graphical = false;
    std::optional<double> gap;        // right side minus left side of the tradeoff inequality
    std::optional<double> gap_closed; // the same quantity as a quadratic in r
};

inline bool graphical_triple(double p, double q, double r, double tol = 1e-15)
{
    return r >= std::max(0.0, p + q - 1) - tol && r <= std::min(p, q) + tol;
}

inline PairFunctions rrbb_pair_functions(double p, double q, double r)
{
    PairFunctions f;
    f.b = r * (1 - p - q + r);
    f.m = 0.5 * (p - r) * (p - r) + 0.5 * (q - r) * (q - r);
    f.t = f.b + f.m;
    f.graphical = graphical_triple(p, q, r);
    if (f.graphical && p > 0 && p < 1) {
        const double pp = p * (1 - p);
        f.gap = 0.5 - pp - f.b * (1 / (2 * pp) - 2) - f.t;
        f.gap_closed = (-r * r + r * (3 * p + q - 2 * p * p - 1) + pp * ((1 - p) * (1 - p) - q * q)) / (2 * pp);
    }
    return f;
}

struct GapSweep
{
    double min_gap = std::numeric_limits<double>::infinity();
    double at_p = 0, at_q = 0, at_r = 0;
    std::uint64_t points = 0;
};

// p, q on an evenly spaced grid over [lo, hi]; r on r_points evenly spaced graphical values.
inline GapSweep sweep_tradeoff_gap(int pq_points = 91, int r_points = 121, double lo = 0.05, double hi = 0.95)
{
    GapSweep s;
    for (int i = 0; i < pq_points; ++i)
        for (int j = 0; j < pq_points; ++j) {
            double p = lo + (hi - lo) * i / (pq_points - 1), q = lo + (hi - lo) * j / (pq_points - 1);
            double rlo = std::max(0.0, p + q - 1), rhi = std::min(p, q);
            for (int k = 0; k < r_points; ++k) {
                double r = rlo + (rhi - rlo) * k / (r_points - 1);
                auto f = rrbb_pair_functions(p, q, r);
                ++s.points;
                if (f.gap && *f.gap < s.min_gap) {
                    s.min_gap = *f.gap;
                    s.at_p = p;
                    s.at_q = q;
                    s.at_r = r;
                }
            }
        }
    return s;
}

struct PairClassification
{
    std::vector<int> A0, S, T, unassigned;
};

// Pairs with t below 1/4 - threshold form A0; of the rest, codegree at most eta goes to S and at
// least 1/2 - eta goes to T.
inline PairClassification rrbb_classify_pairs(double p, const std::vector<std::pair<double, double>> & A, double eta,
    double threshold)
{
    PairClassification c;
    for (std::size_t i = 0; i < A.size(); ++i) {
        auto [q, r] = A[i];
        auto f = rrbb_pair_functions(p, q, r);
        if (f.t < 0.25 - threshold)
            c.A0.push_back(int(i));
        else if (r <= eta)
            c.S.push_back(int(i));
        else if (r >= 0.5 - eta)
            c.T.push_back(int(i));
        else
            c.unassigned.push_back(int(i));
    }
    return c;
}

// ---- canonical patterns

inline double canonical_score(const PatternGraph & H, double alpha, double beta)
{
    if (alpha < 0 || alpha > 1 || beta < 0 || beta > 1)
        throw std::invalid_argument("alpha and beta must lie in [0,1]");
    double s = 0;
    for (int i = 0; i < H.h(); ++i) {
        int dr = H.degree(i, Colour::Red), db = H.degree(i, Colour::Blue);
        s += std::pow(1 - alpha, db) * std::pow(1 - beta, dr) + std::pow(alpha, dr) * std::pow(beta, db);
    }
    return s;
}

struct CanonicalGridReport
{
    bool canonical = true;
    double worst_margin = std::numeric_limits<double>::infinity(); // min of (h - eta/2) - p_H
    double at_alpha = 0, at_beta = 0;
    std::uint64_t points = 0;
};

inline CanonicalGridReport canonical_grid(const PatternGraph & H, double eta, double step, double delta = 1e-3)
{
    if (! (step > 0) || ! (eta > 0))
        throw std::invalid_argument("eta and grid step must be positive");
    CanonicalGridReport r;
    const int k = int(std::llround(1.0 / step));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) {
            double a = double(i) / k, b = double(j) / k;
            if (a + b < eta - 1e-12 || a + b > 1 + delta + 1e-12)
                continue;
            ++r.points;
            double margin = (H.h() - eta / 2) - canonical_score(H, a, b);
            if (margin < r.worst_margin) {
                r.worst_margin = margin;
                r.at_alpha = a;
                r.at_beta = b;
            }
        }
    r.canonical = r.worst_margin >= 0;
    return r;
}

inline bool is_canonical_grid(const PatternGraph & H, double eta, double step, double delta = 1e-3)
{
    return canonical_grid(H, eta, step, delta).canonical;
}

// Whether H sits inside some partitioned graph: sides such that one colour crosses and the
// other stays inside. Returns the colour that crosses.
inline std::optional<Colour> partition_compatible(const PatternGraph & H)
{
    for (Colour cross : {Colour::Red, Colour::Blue}) {
        std::vector<int> side(H.h(), -1);
        bool ok = true;
        for (int s = 0; s < H.h() && ok; ++s) {
            if (side[s] >= 0)
                continue;
            side[s] = 0;
            std::vector<int> stack{s};
            while (! stack.empty() && ok) {
                int u = stack.back();
                stack.pop_back();
                for (int w = 0; w < H.h(); ++w) {
                    if (! H.has_edge(u, w))
                        continue;
                    int want = side[u] ^ (H.cell(u, w) == (cross == Colour::Red ? 1 : 2) ? 1 : 0);
                    if (side[w] < 0) {
                        side[w] = want;
                        stack.push_back(w);
                    }
                    else if (side[w] != want)
                        ok = false;
                }
            }
        }
        if (ok)
            return cross;
    }
    return std::nullopt;
}

// ---- small inequalities used by the counting arguments

struct InequalityReport
{
    std::uint64_t trials = 0;
    std::uint64_t sum_product_violations = 0; // sum a_i b_i <= M s / 4
    double sum_product_worst_slack = std::numeric_limits<double>::infinity();
    std::uint64_t mean_cubic_violations = 0; // (1/n) sum (1 - x_i^2)(1 + x x_i) <= 1 - x^4
    double mean_cubic_worst_slack = std::numeric_limits<double>::infinity();
};

inline bool sum_product_holds(const std::vector<long long> & a, const std::vector<long long> & b, long long s)
{
    long long M = 0, ab = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        M += a[i] + b[i];
        ab += a[i] * b[i];
    }
    return 4 * ab <= M * s;
}

inline double mean_cubic_lhs(const std::vector<double> & xs)
{
    double x = 0;
    for (double v : xs)
        x += v;
    x /= double(xs.size());
    double s = 0;
    for (double v : xs)
        s += (1 - v * v) * (1 + x * v);
    return s / double(xs.size());
}

inline InequalityReport small_inequality_checks(std::uint64_t seed, std::uint64_t trials)
{
    if (trials < 1)
        throw std::invalid_argument("need at least one trial");
    std::mt19937_64 rng(seed);
    auto below = [&](long long k) { return (long long)(rng() % std::uint64_t(k)); };
    auto unit = [&] { return double(rng() >> 11) * 0x1.0p-53; };
    InequalityReport r;
    r.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        long long len = 1 + below(20), s = 1 + below(20);
        std::vector<long long> a(len), b(len);
        long long M = 0, ab = 0;
        for (long long i = 0; i < len; ++i) {
            a[i] = below(s + 1);
            b[i] = below(s - a[i] + 1);
            M += a[i] + b[i];
            ab += a[i] * b[i];
        }
        double slack = double(M * s) / 4 - double(ab);
        if (! sum_product_holds(a, b, s))
            ++r.sum_product_violations;
        r.sum_product_worst_slack = std::min(r.sum_product_worst_slack, slack);

        std::vector<double> xs(1 + below(30));
        double mean;
        do {
            mean = 0;
            for (auto & v : xs) {
                v = 2 * unit() - 1;
                mean += v;
            }
        } while (mean == 0);
        if (mean < 0)
            for (auto & v : xs)
                v = -v;
        mean = std::abs(mean) / double(xs.size());
        double gap = (1 - std::pow(mean, 4)) - mean_cubic_lhs(xs);
        if (gap < -1e-12)
            ++r.mean_cubic_violations;
        r.mean_cubic_worst_slack = std::min(r.mean_cubic_worst_slack, gap);
    }
    return r;
}

// ---- multipartite profile for the K_{1,1,2} problem

inline double lambda_Q(const std::vector<double> & x)
{
    double total = 0, s = 0;
    for (double v : x) {
        if (v < -1e-12)
            throw std::invalid_argument("part ratios must be nonnegative");
        total += v;
        s += v * v * (1 - v) * (1 - v);
    }
    if (total > 1 + 1e-9)
        throw std::invalid_argument("part ratios must sum to at most 1");
    return s;
}

struct LambdaOptimum
{
    std::vector<double> argmax; // nonincreasing, zeros dropped
    double value = 0;
};

// Scan all partitions of `grid` units into at most max_parts parts (unused units allowed), then
// polish the best point by pairwise mass transfers with a halving step.
inline LambdaOptimum optimize_lambda_Q(int max_parts = 6, int grid = 30)
{
    if (max_parts < 1 || grid < 1)
        throw std::invalid_argument("need at least one part and one grid unit");
    std::vector<int> cur, best_parts;
    double best = -1;
    auto rec = [&](auto && self, int left, int cap) -> void {
        std::vector<double> x;
        for (int c : cur)
            x.push_back(double(c) / grid);
        double v = lambda_Q(x);
        if (v > best) {
            best = v;
            best_parts = cur;
        }
        if (int(cur.size()) == max_parts)
            return;
        for (int c = std::min(left, cap); c >= 1; --c) {
            cur.push_back(c);
            self(self, left - c, c);
            cur.pop_back();
        }
    };
    rec(rec, grid, grid);

    // coordinates 0..max_parts-1 are parts, the last is unused mass
    std::vector<double> x(max_parts + 1, 0.0);
    double used = 0;
    for (std::size_t i = 0; i < best_parts.size(); ++i) {
        x[i] = double(best_parts[i]) / grid;
        used += x[i];
    }
    x[max_parts] = 1 - used;
    auto value = [&](const std::vector<double> & y) { return lambda_Q(std::vector<double>(y.begin(), y.end() - 1)); };
    double v = value(x);
    for (double h = 1.0 / grid; h > 1e-14; h /= 2) {
        for (bool moved = true; moved;) {
            moved = false;
            for (int i = 0; i <= max_parts; ++i)
                for (int j = 0; j <= max_parts; ++j) {
                    if (i == j || x[j] < h)
                        continue;
                    x[i] += h;
                    x[j] -= h;
                    double w = value(x);
                    if (w > v + 1e-16) {
                        v = w;
                        moved = true;
                    }
                    else {
                        x[i] -= h;
                        x[j] += h;
                    }
                }
        }
    }
    LambdaOptimum o;
    for (int i = 0; i < max_parts; ++i)
        if (x[i] > 1e-12)
            o.argmax.push_back(x[i]);
    std::sort(o.argmax.rbegin(), o.argmax.rend());
    o.value = v;
    return o;
}

struct QStrictMargins
{
    std::vector<int> sizes;
    Count base = 0;         // I(Q, K_{m1,m2,m3}) recounted on the graph
    BigInt base_formula;    // sum_i C(m_i,2) C(m - m_i,2)
    struct Flip
    {
        int part_a, part_b; // equal for an intra-part pair
        __int128 loss;      // I(Q,G) - I(Q, G with the pair recoloured)
    };
    std::vector<Flip> inter, intra;
    std::vector<std::pair<int, Count>> attach; // subset mask of parts joined by a new vertex, copies gained
    __int128 min_s2_gap = 0;                   // min over |A*| = 2, |A| != 2 of gain(A*) - gain(A)
};

// I(Q, J) for Q = 2 C4 + (K4 minus an edge) equals the number of red C4's with a blue chord in
// the red-blue graph whose red graph is J.
inline Count q_induced_count(const Graph & G) { return count_copies(patterns::ccextt(), G); }

inline QStrictMargins q_strict_margins(int m1, int m2, int m3)
{
    if (m1 < 1 || m2 < 1 || m3 < 1)
        throw std::invalid_argument("parts must be nonempty");
    QStrictMargins r;
    r.sizes = {m1, m2, m3};
    const int n = m1 + m2 + m3;
    const int first[3] = {0, m1, m1 + m2};
    Graph G = construct_multipartite_red(r.sizes);
    r.base = q_induced_count(G);
    for (int i = 0; i < 3; ++i)
        r.base_formula += binomial(r.sizes[i], 2) * binomial(n - r.sizes[i], 2);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            r.inter.push_back({i, j, (__int128)r.base - (__int128)q_induced_count(G.flipped(first[i], first[j]))});
    for (int i = 0; i < 3; ++i)
        if (r.sizes[i] >= 2)
            r.intra.push_back({i, i, (__int128)r.base - (__int128)q_induced_count(G.flipped(first[i], first[i] + 1))});
    std::vector<int> part_of(n);
    for (int i = 0; i < 3; ++i)
        for (int v = first[i]; v < first[i] + r.sizes[i]; ++v)
            part_of[v] = i;
    for (int A = 0; A < 8; ++A) {
        Graph GA = Graph::from_function(n + 1, [&](int x, int y) {
            if (y == n)
                return (A >> part_of[x]) & 1 ? Colour::Red : Colour::Blue;
            return part_of[x] != part_of[y] ? Colour::Red : Colour::Blue;
        });
        r.attach.emplace_back(A, q_induced_count(GA) - r.base);
    }
    bool first_gap = true;
    for (auto [As, gs] : r.attach)
        for (auto [A, g] : r.attach)
            if (std::popcount(unsigned(As)) == 2 && std::popcount(unsigned(A)) != 2) {
                __int128 gap = (__int128)gs - (__int128)g;
                if (first_gap || gap < r.min_s2_gap)
                    r.min_s2_gap = gap;
                first_gap = false;
            }
    return r;
}

}

#endif
