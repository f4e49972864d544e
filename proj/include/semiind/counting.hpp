#ifndef SEMIIND_COUNTING_HPP
#define SEMIIND_COUNTING_HPP

#include <semiind/coloured_graph.hpp>
#include <semiind/pattern.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace semiind {

namespace detail {

    struct EmbeddingPlan
    {
        std::vector<int> order;                                  // pattern vertices in search order
        std::vector<std::vector<std::pair<int, Colour>>> checks; // per position: earlier positions joined to it
    };

    // Pinned vertices first, then repeatedly the vertex with the most edges back into the prefix.
    inline EmbeddingPlan make_plan(const PatternGraph & H, const std::vector<int> & pinned)
    {
        const int h = H.h();
        EmbeddingPlan plan;
        std::vector<bool> placed(h, false);
        for (int v : pinned) {
            plan.order.push_back(v);
            placed[v] = true;
        }
        while (int(plan.order.size()) < h) {
            int best = -1, best_back = -1, best_deg = -1;
            for (int v = 0; v < h; ++v) {
                if (placed[v])
                    continue;
                int back = 0, deg = 0;
                for (int u = 0; u < h; ++u)
                    if (H.has_edge(u, v)) {
                        ++deg;
                        back += placed[u];
                    }
                if (back > best_back || (back == best_back && deg > best_deg)) {
                    best = v;
                    best_back = back;
                    best_deg = deg;
                }
            }
            plan.order.push_back(best);
            placed[best] = true;
        }
        plan.checks.resize(h);
        for (int k = 0; k < h; ++k)
            for (int j = 0; j < k; ++j)
                if (auto c = H.cell(plan.order[k], plan.order[j]); c != 0)
                    plan.checks[k].emplace_back(j, c == 1 ? Colour::Red : Colour::Blue);
        return plan;
    }

    inline Count run_plan(const EmbeddingPlan & plan, const Graph & G, const std::vector<int> & pinned_images)
    {
        const int h = int(plan.order.size()), n = G.n(), W = G.words();
        if (h > n)
            return 0;
        std::vector<int> img(h, -1);
        std::vector<std::uint64_t> used(W, 0), cand(std::size_t(h) * W, 0), all(W, ~std::uint64_t(0));
        if (n % 64)
            all[W - 1] = (std::uint64_t(1) << (n % 64)) - 1;
        const int p = int(pinned_images.size());
        for (int k = 0; k < p; ++k) {
            int v = pinned_images[k];
            if (v < 0 || v >= n || (used[v / 64] >> (v % 64)) & 1U)
                return 0;
            for (auto [j, c] : plan.checks[k])
                if (G.colour(img[j], v) != c)
                    return 0;
            img[k] = v;
            used[v / 64] |= std::uint64_t(1) << (v % 64);
        }
        if (p == h)
            return 1;

        auto rec = [&](auto && self, int k) -> Count {
            std::uint64_t * c = cand.data() + std::size_t(k) * W;
            for (int w = 0; w < W; ++w)
                c[w] = all[w] & ~used[w];
            for (auto [j, col] : plan.checks[k]) {
                auto row = G.nbhd(img[j], col);
                for (int w = 0; w < W; ++w)
                    c[w] &= row[w];
            }
            if (k == h - 1) {
                Count s = 0;
                for (int w = 0; w < W; ++w)
                    s += popcount(c[w]);
                return s;
            }
            Count total = 0;
            for (int w = 0; w < W; ++w)
                for (std::uint64_t bits = c[w]; bits; bits &= bits - 1) {
                    int v = w * 64 + std::countr_zero(bits);
                    img[k] = v;
                    used[w] |= std::uint64_t(1) << (v % 64);
                    total += self(self, k + 1);
                    used[w] &= ~(std::uint64_t(1) << (v % 64));
                }
            return total;
        };
        return rec(rec, p);
    }

}

// Injective maps V(H) -> V(G) that give every H-edge its colour. Each entry of `pinned` fixes
// the image of one pattern vertex.
inline Count count_embeddings(const PatternGraph & H, const Graph & G, const std::vector<std::pair<int, int>> & pinned = {})
{
    std::vector<int> pv, gv;
    for (auto [a, x] : pinned) {
        if (a < 0 || a >= H.h())
            throw std::invalid_argument("pinned pattern vertex out of range");
        for (int b : pv)
            if (b == a)
                throw std::invalid_argument("pattern vertex pinned twice");
        pv.push_back(a);
        gv.push_back(x);
    }
    return detail::run_plan(detail::make_plan(H, pv), G, gv);
}

inline Count count_copies(const PatternGraph & H, const Graph & G)
{
    Count e = count_embeddings(H, G);
    if (e % H.aut_count() != 0)
        throw std::logic_error("embedding count not divisible by the automorphism count");
    return e / H.aut_count();
}

inline double count_quantum(const QuantumPattern & Q, const Graph & G)
{
    double s = 0;
    for (auto & [c, H] : Q.terms)
        s += c * to_double(count_copies(H, G));
    return s;
}

inline Graph as_red_graph(const SimpleGraph & J) { return Graph::from_red_edges(J.n, J.edges); }

// Induced copies of F in the red graph of G.
inline Count induced_count(const SimpleGraph & F, const Graph & G)
{
    if (F.n > G.n())
        return 0;
    return count_copies(complete_pattern(F), G);
}

inline Count induced_count(const SimpleGraph & F, const SimpleGraph & J) { return induced_count(F, as_red_graph(J)); }

// ---- alternating walks

struct WalkProfile
{
    int t = 0;
    std::vector<std::vector<Count>> wR, wB; // [k][x]
    std::vector<Count> W, rho, beta;        // [k]
};

inline WalkProfile walk_profile(const Graph & G, int t)
{
    if (t < 0)
        throw std::invalid_argument("walk length must be nonnegative");
    const int n = G.n();
    WalkProfile p;
    p.t = t;
    p.wR.assign(t + 1, std::vector<Count>(n, 1));
    p.wB.assign(t + 1, std::vector<Count>(n, 1));
    p.W.assign(t + 1, 0);
    p.rho.assign(t + 1, 0);
    p.beta.assign(t + 1, 0);
    p.W[0] = Count(n);
    for (int k = 1; k <= t; ++k)
        for (int x = 0; x < n; ++x) {
            Count r = 0, b = 0;
            for (int y = 0; y < n; ++y) {
                if (y == x)
                    continue;
                if (G.is_red(x, y))
                    r += p.wB[k - 1][y];
                else
                    b += p.wR[k - 1][y];
            }
            p.wR[k][x] = r;
            p.wB[k][x] = b;
        }
    for (int k = 0; k <= t; ++k)
        for (int x = 0; x < n; ++x) {
            if (k >= 1)
                p.W[k] += p.wR[k][x] + p.wB[k][x];
            p.rho[k] += p.wR[k][x] * p.wR[k][x] * Count(G.blue_deg(x));
            p.beta[k] += p.wB[k][x] * p.wB[k][x] * Count(G.red_deg(x));
        }
    return p;
}

// Row-major n x n matrix of w_k^R(x, y): alternating k-walks from x to y whose first edge is red.
inline std::vector<Count> pair_alternating_walks(const Graph & G, int k)
{
    if (k < 1)
        throw std::invalid_argument("walk length must be at least 1");
    const int n = G.n();
    std::vector<Count> M(std::size_t(n) * n, 0), next(M.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            M[x * n + y] = (x != y && G.is_red(x, y)) ? 1 : 0;
    for (int step = 2; step <= k; ++step) {
        const Colour c = step % 2 == 1 ? Colour::Red : Colour::Blue;
        std::fill(next.begin(), next.end(), Count(0));
        for (int x = 0; x < n; ++x)
            for (int z = 0; z < n; ++z) {
                Count m = M[x * n + z];
                if (m == 0)
                    continue;
                for (int y = 0; y < n; ++y)
                    if (y != z && G.colour(z, y) == c)
                        next[x * n + y] += m;
            }
        std::swap(M, next);
    }
    return M;
}

// Unlabelled alternating cycles of length len: closed alternating traversals counted once per cycle.
inline Count count_alternating_cycles(const Graph & G, int len)
{
    if (len < 4 || len % 2 != 0)
        throw std::invalid_argument("alternating cycle length must be even and at least 4");
    const int n = G.n();
    if (len > n)
        return 0;
    std::vector<int> path(len);
    std::vector<bool> used(n, false);
    Count traversals = 0;
    // Start at the smallest vertex s of the cycle, first edge red; walk on vertices > s.
    auto rec = [&](auto && self, int depth, Colour next) -> void {
        int cur = path[depth - 1];
        if (depth == len) {
            // closing edge has index len-1, which is odd, so blue
            if (G.colour(cur, path[0]) == Colour::Blue)
                ++traversals;
            return;
        }
        for (int v = path[0] + 1; v < n; ++v) {
            if (used[v] || G.colour(cur, v) != next)
                continue;
            used[v] = true;
            path[depth] = v;
            self(self, depth + 1, other(next));
            used[v] = false;
        }
    };
    for (int s = 0; s < n; ++s) {
        path[0] = s;
        used[s] = true;
        rec(rec, 1, Colour::Red);
        used[s] = false;
    }
    // Each cycle has exactly one traversal from its minimum vertex in each direction, and exactly
    // one of those two directions leaves through a red edge.
    return traversals;
}

// ---- pair statistics and the codegree identities for coloured 4-cycles

struct PairStats
{
    int n = 0;
    // indexed by pair_index(n, x, y) with x < y
    std::vector<int> red_codeg, blue_codeg, w2R_xy, w2R_yx;
    std::vector<Count> bic, mon, T;

    std::size_t index(int x, int y) const { return pair_index(n, x, y); }
};

inline PairStats pair_stats(const Graph & G)
{
    const int n = G.n();
    PairStats s;
    s.n = n;
    const std::size_t pairs = choose2(std::uint64_t(n));
    s.red_codeg.resize(pairs);
    s.blue_codeg.resize(pairs);
    s.w2R_xy.resize(pairs);
    s.w2R_yx.resize(pairs);
    s.bic.resize(pairs);
    s.mon.resize(pairs);
    s.T.resize(pairs);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const std::size_t i = s.index(x, y);
            const int c = G.red_codeg(x, y);
            const int r = G.is_red(x, y) ? 1 : 0, b = 1 - r;
            // Midpoints z of x -red- z -blue- y: red neighbours of x other than y that are not red to y.
            const int wxy = G.red_deg(x) - c - r;
            const int wyx = G.red_deg(y) - c - r;
            // |N_B(x) cap N_B(y)| = (n-2) - |(N_R(x) cup N_R(y)) minus {x,y}|
            //                    = (n-2) - (d_R(x) - r) - (d_R(y) - r) + c
            //                    = n - d_R(x) - d_R(y) + c - 2b.
            const int cb = n - G.red_deg(x) - G.red_deg(y) + c - 2 * b;
            s.red_codeg[i] = c;
            s.blue_codeg[i] = cb;
            s.w2R_xy[i] = wxy;
            s.w2R_yx[i] = wyx;
            s.bic[i] = Count(c) * Count(cb);
            s.mon[i] = Count(choose2(wxy)) + Count(choose2(wyx));
            s.T[i] = Count(c) * Count(wxy + wyx);
        }
    return s;
}

// Each alternating C4 has two antipodal pairs, and at each it is seen once as a product of
// red-first 2-walks in both directions.
inline Count count_rbrb_antipodal(const Graph & G)
{
    auto s = pair_stats(G);
    Count t = 0;
    for (std::size_t i = 0; i < s.bic.size(); ++i)
        t += Count(s.w2R_xy[i]) * Count(s.w2R_yx[i]);
    return t / 2;
}

// Each RRBB cycle has one pair of bichromatic (non-adjacent) vertices.
inline Count count_rrbb_codegree(const Graph & G)
{
    auto s = pair_stats(G);
    Count t = 0;
    for (auto v : s.bic)
        t += v;
    return t;
}

// The same count seen from the monochromatic pair of each RRBB cycle.
inline Count count_rrbb_monochromatic(const Graph & G)
{
    auto s = pair_stats(G);
    Count t = 0;
    for (auto v : s.mon)
        t += v;
    return t;
}

inline Count count_rrrb_codegree(const Graph & G)
{
    auto s = pair_stats(G);
    Count t = 0;
    for (auto v : s.T)
        t += v;
    return t / 2;
}

// Red-then-blue 2-paths, counted once per centre.
inline Count count_rbr_paths(const Graph & G)
{
    Count t = 0;
    for (int x = 0; x < G.n(); ++x)
        t += Count(G.red_deg(x)) * Count(G.blue_deg(x));
    return t;
}

struct GoodmanSides
{
    Count lhs, rhs;
};

// C(n,3) - #monochromatic triangles, against half the number of red-blue 2-paths.
inline GoodmanSides goodman_identity_check(const Graph & G)
{
    const int n = G.n();
    Count mono3 = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            Colour c = G.colour(x, y);
            auto a = G.nbhd(x, c), b = G.nbhd(y, c);
            // third vertex above y
            for (int w = 0; w < G.words(); ++w) {
                std::uint64_t m = a[w] & b[w];
                if (w == (y + 1) / 64) {
                    int off = (y + 1) % 64;
                    m &= off == 0 ? ~std::uint64_t(0) : ~((std::uint64_t(1) << off) - 1);
                }
                else if (w < (y + 1) / 64)
                    m = 0;
                mono3 += popcount(m);
            }
        }
    Count triples = Count(n) * Count(n - 1) * Count(n - 2) / 6;
    if (n < 3)
        triples = 0;
    return {triples - mono3, count_rbr_paths(G) / 2};
}

// ---- counter selection and incremental flips

// The fastest exact counter available for H: codegree identities for the coloured 4-cycles,
// a degree formula for the red-blue 2-path, the generic embedding counter otherwise.
inline std::function<Count(const Graph &)> fast_counter(const PatternGraph & H)
{
    using namespace patterns;
    if (isomorphic(H, rbrb_c4()))
        return count_rbrb_antipodal;
    if (isomorphic(H, rrbb_c4()))
        return count_rrbb_codegree;
    if (isomorphic(H, rrrb_c4()))
        return count_rrrb_codegree;
    if (isomorphic(H, rrrb_c4().swapped()))
        return [](const Graph & G) { return count_rrrb_codegree(G.swapped()); };
    if (isomorphic(H, rbr_path()))
        return count_rbr_paths;
    return [H](const Graph & G) { return count_copies(H, G); };
}

// Change in copies of H when the pair {x,y} of G is recoloured. Only embeddings that send an
// H-edge onto {x,y} are affected, and each such embedding uses exactly one H-edge there.
inline __int128 flip_delta_copies(const PatternGraph & H, const Graph & G, int x, int y)
{
    G.check_pair(x, y);
    const Colour now = G.colour(x, y);
    __int128 delta = 0;
    for (std::size_t i = 0; i < H.edges().size(); ++i) {
        auto e = H.edges()[i];
        std::vector<PatternEdge> rest;
        for (std::size_t j = 0; j < H.edges().size(); ++j)
            if (j != i)
                rest.push_back(H.edges()[j]);
        PatternGraph Hm(H.h(), rest);
        Count both = count_embeddings(Hm, G, {{e.u, x}, {e.v, y}}) + count_embeddings(Hm, G, {{e.u, y}, {e.v, x}});
        delta += e.colour == now ? -(__int128)both : (__int128)both;
    }
    return delta / (__int128)H.aut_count();
}

}

#endif
