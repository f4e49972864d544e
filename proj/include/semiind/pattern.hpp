#ifndef SEMIIND_PATTERN_HPP
#define SEMIIND_PATTERN_HPP

#include <semiind/common.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace semiind {

struct PatternEdge
{
    int u, v; // 0-based, u < v
    Colour colour;
    bool operator==(const PatternEdge &) const = default;
};

// A small red-blue graph; pairs that are not edges impose no constraint on a host.
class PatternGraph
{
public:
    PatternGraph() = default;

    PatternGraph(int h, std::vector<PatternEdge> edges) : h_(h), edges_(std::move(edges))
    {
        if (h < 1 || h > 16)
            throw std::invalid_argument("pattern size must be between 1 and 16");
        cell_.assign(std::size_t(h) * h, 0);
        for (auto & e : edges_) {
            if (e.u > e.v)
                std::swap(e.u, e.v);
            if (e.u < 0 || e.v >= h || e.u == e.v)
                throw std::invalid_argument("pattern edge out of range");
            if (cell_[e.u * h + e.v] != 0)
                throw std::invalid_argument("duplicate pattern edge");
            std::uint8_t c = e.colour == Colour::Red ? 1 : 2;
            cell_[e.u * h + e.v] = cell_[e.v * h + e.u] = c;
        }
        std::sort(edges_.begin(), edges_.end(), [](const PatternEdge & a, const PatternEdge & b) {
            return std::pair(a.u, a.v) < std::pair(b.u, b.v);
        });
        aut_ = count_maps(*this, *this);
    }

    int h() const { return h_; }
    const std::vector<PatternEdge> & edges() const { return edges_; }
    std::uint64_t aut_count() const { return aut_; }

    // 0 = no edge, 1 = red, 2 = blue
    std::uint8_t cell(int a, int b) const { return cell_[a * h_ + b]; }
    bool has_edge(int a, int b) const { return cell(a, b) != 0; }

    int degree(int a, Colour c) const
    {
        std::uint8_t want = c == Colour::Red ? 1 : 2;
        int d = 0;
        for (int b = 0; b < h_; ++b)
            d += cell(a, b) == want;
        return d;
    }

    int edge_count(Colour c) const
    {
        int k = 0;
        for (auto & e : edges_)
            k += e.colour == c;
        return k;
    }

    bool is_complete() const { return edges_.size() == choose2(h_); }

    PatternGraph swapped() const
    {
        auto es = edges_;
        for (auto & e : es)
            e.colour = other(e.colour);
        return {h_, es};
    }

    // "1-2:R,2-3:B" with 1-based vertices
    std::string to_literal() const
    {
        std::string s;
        for (auto & e : edges_) {
            if (! s.empty())
                s += ",";
            s += std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1) + ":" + colour_char(e.colour);
        }
        return s;
    }

    bool operator==(const PatternGraph & o) const { return h_ == o.h_ && edges_ == o.edges_; }

    // Number of injective maps V(a) -> V(b) sending every edge of a onto an edge of b of the
    // same colour. With a = b this is the colour-preserving automorphism count.
    static std::uint64_t count_maps(const PatternGraph & a, const PatternGraph & b)
    {
        if (a.h_ > b.h_)
            return 0;
        std::vector<int> img(a.h_, -1);
        std::vector<bool> used(b.h_, false);
        std::uint64_t total = 0;
        auto rec = [&](auto && self, int k) -> void {
            if (k == a.h_) {
                ++total;
                return;
            }
            for (int w = 0; w < b.h_; ++w) {
                if (used[w])
                    continue;
                bool ok = true;
                for (int j = 0; j < k && ok; ++j)
                    if (a.cell(k, j) != 0 && a.cell(k, j) != b.cell(w, img[j]))
                        ok = false;
                if (! ok)
                    continue;
                used[w] = true;
                img[k] = w;
                self(self, k + 1);
                used[w] = false;
            }
        };
        rec(rec, 0);
        return total;
    }

private:
    int h_ = 0;
    std::vector<PatternEdge> edges_;
    std::vector<std::uint8_t> cell_;
    std::uint64_t aut_ = 1;
};

inline PatternGraph swap_colours(const PatternGraph & h) { return h.swapped(); }

inline bool isomorphic(const PatternGraph & a, const PatternGraph & b)
{
    return a.h() == b.h() && a.edges().size() == b.edges().size() && PatternGraph::count_maps(a, b) > 0;
}

// Number of subgraphs of `host` isomorphic to `sub` (host non-edges cannot carry sub edges).
inline std::uint64_t copies_in_pattern(const PatternGraph & sub, const PatternGraph & host)
{
    return PatternGraph::count_maps(sub, host) / sub.aut_count();
}

inline PatternGraph parse_edge_literal(const std::string & text)
{
    std::vector<PatternEdge> es;
    int h = 0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty())
            continue;
        auto dash = item.find('-'), colon = item.find(':');
        if (dash == std::string::npos || colon == std::string::npos || colon < dash || colon + 2 != item.size())
            throw std::invalid_argument("bad edge '" + item + "', expected like 1-2:R");
        int u, v;
        try {
            u = std::stoi(item.substr(0, dash));
            v = std::stoi(item.substr(dash + 1, colon - dash - 1));
        }
        catch (const std::exception &) {
            throw std::invalid_argument("bad edge '" + item + "', expected like 1-2:R");
        }
        if (u < 1 || v < 1)
            throw std::invalid_argument("pattern vertices are numbered from 1");
        es.push_back({u - 1, v - 1, colour_from_char(item.back())});
        h = std::max({h, u, v});
    }
    if (es.empty())
        throw std::invalid_argument("empty edge list");
    return {h, es};
}

// ---- named patterns

namespace patterns {

inline PatternGraph from_cycle(const std::string & colours)
{
    int h = int(colours.size());
    std::vector<PatternEdge> es;
    for (int i = 0; i < h; ++i)
        es.push_back({i, (i + 1) % h, colour_from_char(colours[i])});
    return {h, es};
}

inline PatternGraph red_edge() { return {2, {{0, 1, Colour::Red}}}; }

// Path with a red edge and then a blue edge; its copies are the bichromatic 2-paths.
inline PatternGraph rbr_path() { return {3, {{0, 1, Colour::Red}, {1, 2, Colour::Blue}}}; }

inline PatternGraph rbrb_c4() { return from_cycle("RBRB"); }
inline PatternGraph rrbb_c4() { return from_cycle("RRBB"); }
inline PatternGraph rrrb_c4() { return from_cycle("RRRB"); }

// Alternating path with `len` edges, starting red.
inline PatternGraph alt_path(int len)
{
    std::vector<PatternEdge> es;
    for (int i = 0; i < len; ++i)
        es.push_back({i, i + 1, i % 2 == 0 ? Colour::Red : Colour::Blue});
    return {len + 1, es};
}

inline PatternGraph alt_cycle(int len)
{
    if (len < 4 || len % 2 != 0)
        throw std::invalid_argument("alternating cycles have even length >= 4");
    std::string s;
    for (int i = 0; i < len; ++i)
        s += i % 2 == 0 ? 'R' : 'B';
    return from_cycle(s);
}

// Alternating C4 1-2-3-4 plus a red chord between antipodal vertices 1 and 3.
inline PatternGraph ccext()
{
    return {4, {{0, 1, Colour::Red}, {1, 2, Colour::Blue}, {2, 3, Colour::Red}, {0, 3, Colour::Blue}, {0, 2, Colour::Red}}};
}

// RRBB cycle 1-2-3-4 (2 is the red-red vertex, 4 the blue-blue one).
// _a adds a red chord between the two monochromatic vertices 2 and 4,
// _b adds a red chord between the two bichromatic vertices 1 and 3.
inline PatternGraph rrbbext_a()
{
    return {4, {{0, 1, Colour::Red}, {1, 2, Colour::Red}, {2, 3, Colour::Blue}, {0, 3, Colour::Blue}, {1, 3, Colour::Red}}};
}

inline PatternGraph rrbbext_b()
{
    return {4, {{0, 1, Colour::Red}, {1, 2, Colour::Red}, {2, 3, Colour::Blue}, {0, 3, Colour::Blue}, {0, 2, Colour::Red}}};
}

// Red C4 with one blue chord; counts induced {C4, K4 minus an edge} in the red graph.
inline PatternGraph ccextt()
{
    return {4, {{0, 1, Colour::Red}, {1, 2, Colour::Red}, {2, 3, Colour::Red}, {0, 3, Colour::Red}, {0, 2, Colour::Blue}}};
}

}

// Registry names used by the command line; alt_cycle_<len> and alt_path_<len> take a length suffix.
inline std::optional<PatternGraph> named_pattern(const std::string & name)
{
    using namespace patterns;
    if (name == "red_edge")
        return red_edge();
    if (name == "rbr_path")
        return rbr_path();
    if (name == "rbrb_c4")
        return rbrb_c4();
    if (name == "rrbb_c4")
        return rrbb_c4();
    if (name == "rrrb_c4")
        return rrrb_c4();
    if (name == "ccext")
        return ccext();
    if (name == "rrbbext_a")
        return rrbbext_a();
    if (name == "rrbbext_b")
        return rrbbext_b();
    if (name == "ccextt")
        return ccextt();
    auto suffix = [&](const std::string & prefix) -> std::optional<int> {
        if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size())
            return std::nullopt;
        auto tail = name.substr(prefix.size());
        if (tail.find_first_not_of("0123456789") != std::string::npos || tail.size() > 3)
            return std::nullopt;
        return std::stoi(tail);
    };
    if (auto len = suffix("alt_cycle_"); len && *len >= 4 && *len % 2 == 0 && *len <= 16)
        return alt_cycle(*len);
    if (auto len = suffix("alt_path_"); len && *len >= 1 && *len <= 15)
        return alt_path(*len);
    return std::nullopt;
}

struct QuantumPattern
{
    std::vector<std::pair<double, PatternGraph>> terms;

    QuantumPattern() = default;
    QuantumPattern(std::vector<std::pair<double, PatternGraph>> t) : terms(std::move(t))
    {
        if (terms.empty())
            throw std::invalid_argument("a quantum pattern needs at least one term");
        for (auto & [c, p] : terms)
            if (! std::isfinite(c))
                throw std::invalid_argument("quantum pattern coefficients must be finite");
    }
};

// An uncoloured simple graph, used for induced counts.
struct SimpleGraph
{
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    bool has_edge(int a, int b) const
    {
        for (auto [x, y] : edges)
            if ((x == a && y == b) || (x == b && y == a))
                return true;
        return false;
    }

    SimpleGraph complement() const
    {
        SimpleGraph c{n, {}};
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (! has_edge(a, b))
                    c.edges.emplace_back(a, b);
        return c;
    }
};

// Edges red, non-edges blue.
inline PatternGraph complete_pattern(const SimpleGraph & f)
{
    std::vector<PatternEdge> es;
    for (int a = 0; a < f.n; ++a)
        for (int b = a + 1; b < f.n; ++b)
            es.push_back({a, b, f.has_edge(a, b) ? Colour::Red : Colour::Blue});
    return {f.n, es};
}

namespace simple {

inline SimpleGraph cycle(int n)
{
    SimpleGraph g{n, {}};
    for (int i = 0; i < n; ++i)
        g.edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return g;
}

inline SimpleGraph path(int n)
{
    SimpleGraph g{n, {}};
    for (int i = 0; i + 1 < n; ++i)
        g.edges.emplace_back(i, i + 1);
    return g;
}

inline SimpleGraph complete(int n)
{
    SimpleGraph g{n, {}};
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            g.edges.emplace_back(a, b);
    return g;
}

inline SimpleGraph k4_minus_edge() { return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}}; }

// triangle 0-1-2 with pendant 3 on 0
inline SimpleGraph paw() { return {4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}}; }

}

}

#endif
