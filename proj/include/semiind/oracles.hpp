#ifndef SEMIIND_ORACLES_HPP
#define SEMIIND_ORACLES_HPP

// Deliberately naive reference counters, kept independent of the optimised code paths.

#include <semiind/coloured_graph.hpp>
#include <semiind/pattern.hpp>

#include <vector>

namespace semiind::oracle {

// Every ordered tuple of distinct vertices, checked edge by edge.
inline Count embeddings_by_tuples(const PatternGraph & H, const Graph & G)
{
    const int h = H.h(), n = G.n();
    if (h > n)
        return 0;
    std::vector<int> img(h, 0);
    Count total = 0;
    for (;;) {
        bool ok = true;
        for (int a = 0; a < h && ok; ++a)
            for (int b = a + 1; b < h && ok; ++b) {
                if (img[a] == img[b])
                    ok = false;
                else if (auto c = H.cell(a, b); c != 0 && G.colour(img[a], img[b]) != (c == 1 ? Colour::Red : Colour::Blue))
                    ok = false;
            }
        total += ok;
        int k = h - 1;
        while (k >= 0 && ++img[k] == n)
            img[k--] = 0;
        if (k < 0)
            return total;
    }
}

inline Count copies_by_tuples(const PatternGraph & H, const Graph & G) { return embeddings_by_tuples(H, G) / H.aut_count(); }

// Alternating walks of length t as ordered (t+1)-tuples, consecutive vertices distinct.
inline Count alternating_walks_by_tuples(const Graph & G, int t)
{
    const int n = G.n();
    std::vector<int> v(t + 1, 0);
    Count total = 0;
    for (;;) {
        bool ok = true;
        for (int i = 0; i < t && ok; ++i)
            if (v[i] == v[i + 1])
                ok = false;
        for (int i = 0; i + 1 < t && ok; ++i)
            if (G.colour(v[i], v[i + 1]) == G.colour(v[i + 1], v[i + 2]))
                ok = false;
        total += ok;
        int k = t;
        while (k >= 0 && ++v[k] == n)
            v[k--] = 0;
        if (k < 0)
            return total;
    }
}

// Monochromatic triangles by triple enumeration.
inline Count monochromatic_triangles(const Graph & G)
{
    Count s = 0;
    for (int x = 0; x < G.n(); ++x)
        for (int y = x + 1; y < G.n(); ++y)
            for (int z = y + 1; z < G.n(); ++z)
                s += G.colour(x, y) == G.colour(y, z) && G.colour(y, z) == G.colour(x, z);
    return s;
}

}

#endif
