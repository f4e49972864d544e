#ifndef SEMIIND_COLOURED_GRAPH_HPP
#define SEMIIND_COLOURED_GRAPH_HPP

#include <semiind/common.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace semiind {

// A red-blue K_n. Each vertex carries a red and a blue neighbourhood row of 64-bit words;
// the red rows are the single source of truth and the blue rows are their complements.
class ColouredCompleteGraph
{
public:
    ColouredCompleteGraph() = default;

    explicit ColouredCompleteGraph(int n, Colour fill = Colour::Blue) :
        n_(n), words_((n + 63) / 64), red_(std::size_t(n) * words_, 0), blue_(std::size_t(n) * words_, 0),
        red_deg_(n, 0)
    {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y)
                    set_bit(fill == Colour::Red ? red_ : blue_, x, y);
        if (fill == Colour::Red)
            std::fill(red_deg_.begin(), red_deg_.end(), n - 1);
    }

    template <typename F>
    static ColouredCompleteGraph from_function(int n, F && colour_of)
    {
        ColouredCompleteGraph g(n);
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (colour_of(x, y) == Colour::Red)
                    g.toggle(x, y);
        return g;
    }

    static ColouredCompleteGraph from_red_edges(int n, const std::vector<std::pair<int, int>> & edges)
    {
        ColouredCompleteGraph g(n);
        for (auto [x, y] : edges) {
            g.check_pair(x, y);
            if (! g.is_red(x, y))
                g.toggle(x, y);
        }
        return g;
    }

    int n() const { return n_; }
    int words() const { return words_; }

    bool is_red(int x, int y) const { return (red_[row(x) + y / 64] >> (y % 64)) & 1U; }
    Colour colour(int x, int y) const { return is_red(x, y) ? Colour::Red : Colour::Blue; }

    std::span<const std::uint64_t> red_row(int x) const { return {red_.data() + row(x), std::size_t(words_)}; }
    std::span<const std::uint64_t> blue_row(int x) const { return {blue_.data() + row(x), std::size_t(words_)}; }
    std::span<const std::uint64_t> nbhd(int x, Colour c) const { return c == Colour::Red ? red_row(x) : blue_row(x); }

    int red_deg(int x) const { return red_deg_[x]; }
    int blue_deg(int x) const { return n_ - 1 - red_deg_[x]; }
    int deg(int x, Colour c) const { return c == Colour::Red ? red_deg(x) : blue_deg(x); }

    std::uint64_t red_edge_count() const
    {
        std::uint64_t s = 0;
        for (int d : red_deg_)
            s += std::uint64_t(d);
        return s / 2;
    }

    int codeg(int x, int y, Colour c) const
    {
        auto a = nbhd(x, c), b = nbhd(y, c);
        int s = 0;
        for (int w = 0; w < words_; ++w)
            s += popcount(a[w] & b[w]);
        return s;
    }
    int red_codeg(int x, int y) const { return codeg(x, y, Colour::Red); }
    int blue_codeg(int x, int y) const { return codeg(x, y, Colour::Blue); }

    ColouredCompleteGraph flipped(int x, int y) const
    {
        check_pair(x, y);
        auto g = *this;
        g.toggle(x, y);
        return g;
    }

    ColouredCompleteGraph swapped() const
    {
        ColouredCompleteGraph g = *this;
        std::swap(g.red_, g.blue_);
        for (auto & d : g.red_deg_)
            d = n_ - 1 - d;
        return g;
    }

    bool operator==(const ColouredCompleteGraph & o) const { return n_ == o.n_ && red_ == o.red_; }

    void check_pair(int x, int y) const
    {
        if (x < 0 || y < 0 || x >= n_ || y >= n_)
            throw std::invalid_argument("vertex out of range");
        if (x == y)
            throw std::invalid_argument("a pair needs two distinct vertices");
    }

private:
    std::size_t row(int x) const { return std::size_t(x) * std::size_t(words_); }

    void set_bit(std::vector<std::uint64_t> & rows, int x, int y) { rows[row(x) + y / 64] |= std::uint64_t(1) << (y % 64); }

    void toggle(int x, int y)
    {
        const std::uint64_t bx = std::uint64_t(1) << (x % 64), by = std::uint64_t(1) << (y % 64);
        red_[row(x) + y / 64] ^= by;
        red_[row(y) + x / 64] ^= bx;
        blue_[row(x) + y / 64] ^= by;
        blue_[row(y) + x / 64] ^= bx;
        int delta = is_red(x, y) ? 1 : -1;
        red_deg_[x] += delta;
        red_deg_[y] += delta;
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> red_, blue_;
    std::vector<int> red_deg_;
};

using Graph = ColouredCompleteGraph;

inline Graph swap_colours(const Graph & g) { return g.swapped(); }
inline Graph flip_edge(const Graph & g, int x, int y) { return g.flipped(x, y); }

// ---- text format: "n\n" followed by the R/B string of pairs (0,1),(0,2),...,(n-2,n-1)

inline std::string to_text(const Graph & g)
{
    std::string s = std::to_string(g.n()) + "\n";
    for (int x = 0; x < g.n(); ++x)
        for (int y = x + 1; y < g.n(); ++y)
            s += colour_char(g.colour(x, y));
    s += "\n";
    return s;
}

inline std::string colour_string(const Graph & g)
{
    std::string s;
    for (int x = 0; x < g.n(); ++x)
        for (int y = x + 1; y < g.n(); ++y)
            s += colour_char(g.colour(x, y));
    return s;
}

inline Graph graph_from_colour_string(int n, const std::string & colours)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    if (colours.size() != choose2(std::uint64_t(n)))
        throw std::invalid_argument("colour string has " + std::to_string(colours.size()) + " characters, expected "
            + std::to_string(choose2(std::uint64_t(n))));
    std::vector<std::pair<int, int>> red;
    std::size_t k = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (colour_from_char(colours[k++]) == Colour::Red)
                red.emplace_back(x, y);
    return Graph::from_red_edges(n, red);
}

inline Graph parse_graph(const std::string & text)
{
    std::istringstream in(text);
    std::string first, second;
    if (! (in >> first))
        throw std::invalid_argument("graph text is empty");
    if (first.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("first line must be the vertex count");
    int n = std::stoi(first);
    in >> second;
    std::string rest;
    if (in >> rest)
        throw std::invalid_argument("trailing content after the colour string");
    return graph_from_colour_string(n, second);
}

// ---- constructions

inline Graph construct_partitioned(int n, int a, Colour bip_colour)
{
    if (n < 0 || a < 0 || a > n)
        throw std::invalid_argument("construct_partitioned needs 0 <= a <= n");
    return Graph::from_function(n, [&](int x, int y) { return (x < a) != (y < a) ? bip_colour : other(bip_colour); });
}

// Part sizes of the balanced t-partition of n, largest first.
inline std::vector<int> turan_part_sizes(int n, int parts)
{
    std::vector<int> sizes(parts, n / parts);
    for (int i = 0; i < n % parts; ++i)
        ++sizes[i];
    return sizes;
}

inline Graph construct_multipartite_red(const std::vector<int> & sizes)
{
    int n = 0;
    std::vector<int> part;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 0)
            throw std::invalid_argument("negative part size");
        n += sizes[i];
        part.insert(part.end(), sizes[i], int(i));
    }
    return Graph::from_function(n, [&](int x, int y) { return part[x] != part[y] ? Colour::Red : Colour::Blue; });
}

inline Graph construct_turan_red(int n, int parts)
{
    if (parts < 1 || parts > std::max(n, 1))
        throw std::invalid_argument("construct_turan_red needs 1 <= parts <= n");
    return construct_multipartite_red(turan_part_sizes(n, parts));
}

// Pairs are visited in row-major upper-triangular order; each consumes one mt19937_64 output u
// and is red iff (u >> 11) * 2^-53 < sigma. Both the engine and this mapping are fully specified,
// so graphs are identical across platforms for a given (n, sigma, seed).
inline Graph construct_quasirandom(int n, double sigma, std::uint64_t seed)
{
    if (! (sigma >= 0.0 && sigma <= 1.0))
        throw std::invalid_argument("sigma must lie in [0,1]");
    std::mt19937_64 rng(seed);
    return Graph::from_function(n, [&](int, int) {
        double u = double(rng() >> 11) * 0x1.0p-53;
        return u < sigma ? Colour::Red : Colour::Blue;
    });
}

inline Graph construct_red_cycle(int n)
{
    return Graph::from_function(n, [&](int x, int y) { return (y - x == 1 || (x == 0 && y == n - 1)) ? Colour::Red : Colour::Blue; });
}

// ---- structural assessments

using VertexSet = std::vector<bool>;

struct BipartitionAssessment
{
    VertexSet X, Y;
    // The colour C whose edge set is compared against K_{X,Y}; minority_edges = E(C) xor E(K_{X,Y}).
    Colour minority_colour = Colour::Red;
    std::vector<std::pair<int, int>> minority_edges;
    std::uint64_t red_edit = 0, blue_edit = 0;
    Rational delta;

    double delta_value() const { return to_double(delta); }
};

inline BipartitionAssessment assess_bipartition(const Graph & g, const VertexSet & X)
{
    const int n = g.n();
    if (int(X.size()) != n)
        throw std::invalid_argument("vertex set size does not match the graph");
    BipartitionAssessment a;
    a.X = X;
    a.Y.assign(n, false);
    long sx = 0;
    for (int v = 0; v < n; ++v) {
        a.Y[v] = ! X[v];
        sx += X[v];
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            bool cross = X[x] != X[y];
            bool red = g.is_red(x, y);
            a.red_edit += (red != cross);
            a.blue_edit += (! red != cross);
        }
    // ties go to Red
    a.minority_colour = a.red_edit <= a.blue_edit ? Colour::Red : Colour::Blue;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            bool cross = X[x] != X[y];
            if ((g.colour(x, y) == a.minority_colour) != cross)
                a.minority_edges.emplace_back(x, y);
        }
    if (n < 2) {
        a.delta = 0;
        return a;
    }
    Rational pairs = Rational(std::int64_t(choose2(n)));
    Rational d2 = Rational(std::int64_t(a.minority_edges.size())) / pairs;
    long lo = std::min<long>(sx, n - sx), hi = std::max<long>(sx, n - sx);
    Rational d1 = 0;
    if (n / 2 - lo > 0)
        d1 = Rational(n / 2 - lo, n);
    if (hi - (n + 1) / 2 > 0)
        d1 = std::max(d1, Rational(hi - (n + 1) / 2, n));
    a.delta = std::max(d1, d2);
    return a;
}

// Greedy local improvement: move single vertices across while that lowers the minority count.
inline VertexSet improve_bipartition(const Graph & g, VertexSet X)
{
    auto cost = [&](const VertexSet & s) { return assess_bipartition(g, s).minority_edges.size(); };
    std::size_t best = cost(X);
    for (bool improved = true; improved;) {
        improved = false;
        for (int v = 0; v < g.n(); ++v) {
            X[v] = ! X[v];
            std::size_t c = cost(X);
            if (c < best) {
                best = c;
                improved = true;
            }
            else
                X[v] = ! X[v];
        }
    }
    return X;
}

struct BalanceAssessment
{
    Rational epsilon;
    double epsilon_value() const { return to_double(epsilon); }
};

inline BalanceAssessment assess_balance(const Graph & g)
{
    const int n = g.n();
    if (n < 2)
        return {Rational(0)};
    // sum |d - (n-1)/2| = sum |2d - (n-1)| / 2, divided by C(n,2) = n(n-1)/2
    long long s = 0;
    for (int x = 0; x < n; ++x)
        s += std::llabs(2LL * g.red_deg(x) - (n - 1));
    return {Rational(s, (long long)n * (n - 1))};
}

struct QuasirandomnessAssessment
{
    double sigma = 0;
    double score = 0;
};

inline QuasirandomnessAssessment assess_quasirandomness(const Graph & g)
{
    const int n = g.n();
    QuasirandomnessAssessment q;
    if (n < 2)
        return q;
    q.sigma = double(g.red_edge_count()) / double(choose2(n));
    const double target = q.sigma * q.sigma * n;
    double s = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            s += 2 * std::abs(g.red_codeg(x, y) - target);
    q.score = s / (double(n) * n * n);
    return q;
}

}

#endif
