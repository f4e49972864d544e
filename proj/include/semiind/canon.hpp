#ifndef SEMIIND_CANON_HPP
#define SEMIIND_CANON_HPP

#include <semiind/coloured_graph.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace semiind {

// Red graph of a small red-blue K_n (n <= 11 so that the pair code fits in 64 bits).
struct SmallGraph
{
    int n = 0;
    std::array<std::uint16_t, 16> adj{};

    bool red(int a, int b) const { return (adj[a] >> b) & 1U; }
    void set_red(int a, int b)
    {
        adj[a] |= std::uint16_t(1U << b);
        adj[b] |= std::uint16_t(1U << a);
    }
    SmallGraph complement() const
    {
        SmallGraph c{n, {}};
        const std::uint16_t all = std::uint16_t((1U << n) - 1);
        for (int v = 0; v < n; ++v)
            c.adj[v] = std::uint16_t(all & ~adj[v] & ~(1U << v));
        return c;
    }
    bool operator==(const SmallGraph &) const = default;
};

constexpr int max_canonical_n = 11;

inline SmallGraph to_small(const Graph & g)
{
    if (g.n() > max_canonical_n)
        throw std::invalid_argument("graph too large for canonical labelling");
    SmallGraph s{g.n(), {}};
    for (int x = 0; x < g.n(); ++x)
        for (int y = x + 1; y < g.n(); ++y)
            if (g.is_red(x, y))
                s.set_red(x, y);
    return s;
}

inline Graph to_graph(const SmallGraph & s)
{
    return Graph::from_function(s.n, [&](int x, int y) { return s.red(x, y) ? Colour::Red : Colour::Blue; });
}

// Pairs in row-major order, first pair in the most significant used bit.
inline std::uint64_t pair_code(const SmallGraph & g)
{
    std::uint64_t code = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            code = (code << 1) | (g.red(i, j) ? 1U : 0U);
    return code;
}

struct CanonicalForm
{
    std::uint64_t code = 0;
    std::array<std::int8_t, 16> position{}; // vertex -> canonical position
};

inline SmallGraph relabel(const SmallGraph & g, const std::array<std::int8_t, 16> & position)
{
    SmallGraph r{g.n, {}};
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (g.red(a, b))
                r.set_red(position[a], position[b]);
    return r;
}

namespace detail {

    struct Partition
    {
        std::array<std::uint16_t, 16> cells{};
        int count = 0;
    };

    // Split cells by the number of neighbours in every cell until stable. Sub-cells are ordered
    // by signature, so the result depends only on the isomorphism type of (graph, partition).
    inline void refine(const SmallGraph & g, Partition & p)
    {
        for (;;) {
            Partition out;
            bool split = false;
            for (int c = 0; c < p.count; ++c) {
                std::uint16_t mask = p.cells[c];
                if (std::popcount(mask) == 1) {
                    out.cells[out.count++] = mask;
                    continue;
                }
                std::array<std::pair<std::uint64_t, int>, 16> sig;
                int k = 0;
                for (std::uint16_t m = mask; m; m &= std::uint16_t(m - 1)) {
                    int v = std::countr_zero(m);
                    std::uint64_t s = 0;
                    for (int d = 0; d < p.count; ++d)
                        s = (s << 4) | std::uint64_t(std::popcount(std::uint16_t(g.adj[v] & p.cells[d])));
                    sig[k++] = {s, v};
                }
                std::sort(sig.begin(), sig.begin() + k);
                std::uint16_t cur = 0;
                for (int i = 0; i < k; ++i) {
                    if (i > 0 && sig[i].first != sig[i - 1].first) {
                        out.cells[out.count++] = cur;
                        cur = 0;
                        split = true;
                    }
                    cur |= std::uint16_t(1U << sig[i].second);
                }
                out.cells[out.count++] = cur;
            }
            p = out;
            if (! split)
                return;
        }
    }

    struct CanonSearch
    {
        const SmallGraph & g;
        std::array<std::uint16_t, 16> twins{};
        bool found = false;
        CanonicalForm best;

        explicit CanonSearch(const SmallGraph & graph) : g(graph)
        {
            for (int u = 0; u < g.n; ++u)
                for (int v = 0; v < g.n; ++v)
                    if (u != v && (g.adj[u] & ~(1U << v)) == (g.adj[v] & ~(1U << u)))
                        twins[u] |= std::uint16_t(1U << v);
        }

        void leaf(const Partition & p)
        {
            CanonicalForm f;
            for (int c = 0; c < p.count; ++c)
                f.position[std::countr_zero(p.cells[c])] = std::int8_t(c);
            std::array<int, 16> at{};
            for (int v = 0; v < g.n; ++v)
                at[f.position[v]] = v;
            std::uint64_t code = 0;
            for (int i = 0; i < g.n; ++i)
                for (int j = i + 1; j < g.n; ++j)
                    code = (code << 1) | (g.red(at[i], at[j]) ? 1U : 0U);
            f.code = code;
            if (! found || code > best.code) {
                best = f;
                found = true;
            }
        }

        void run(Partition p)
        {
            refine(g, p);
            if (p.count == g.n) {
                leaf(p);
                return;
            }
            int t = 0;
            while (std::popcount(p.cells[t]) == 1)
                ++t;
            const std::uint16_t target = p.cells[t];
            std::uint16_t tried = 0;
            for (std::uint16_t m = target; m; m &= std::uint16_t(m - 1)) {
                int v = std::countr_zero(m);
                // Swapping twins is an automorphism fixing everything individualised so far,
                // so their subtrees produce the same leaves.
                if (twins[v] & tried)
                    continue;
                tried |= std::uint16_t(1U << v);
                Partition q;
                for (int c = 0; c < t; ++c)
                    q.cells[q.count++] = p.cells[c];
                q.cells[q.count++] = std::uint16_t(1U << v);
                q.cells[q.count++] = std::uint16_t(target & ~(1U << v));
                for (int c = t + 1; c < p.count; ++c)
                    q.cells[q.count++] = p.cells[c];
                run(q);
            }
        }
    };

}

// Canonical labelling: the maximum pair code over all leaves of the refinement search tree.
inline CanonicalForm canonical_form(const SmallGraph & g)
{
    if (g.n > max_canonical_n)
        throw std::invalid_argument("graph too large for canonical labelling");
    if (g.n == 0)
        return {};
    detail::CanonSearch s(g);
    detail::Partition p;
    p.cells[0] = std::uint16_t((1U << g.n) - 1);
    p.count = 1;
    s.run(p);
    return s.best;
}

inline SmallGraph canonical_graph(const SmallGraph & g) { return relabel(g, canonical_form(g).position); }

inline std::uint64_t canonical_code(const Graph & g) { return canonical_form(to_small(g)).code; }

inline bool graphs_isomorphic(const Graph & a, const Graph & b)
{
    return a.n() == b.n() && canonical_code(a) == canonical_code(b);
}

}

#endif
