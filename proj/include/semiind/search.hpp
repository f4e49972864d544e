#ifndef SEMIIND_SEARCH_HPP
#define SEMIIND_SEARCH_HPP

#include <semiind/canon.hpp>
#include <semiind/counting.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

namespace semiind {

constexpr int enumeration_cap = 9;

struct CapExceeded : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Worker count: explicit value if positive, else SEMIIND_THREADS, else 1.
inline int resolve_threads(int requested = 0)
{
    if (requested > 0)
        return requested;
    if (const char * env = std::getenv("SEMIIND_THREADS")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return 1;
}

template <typename F>
void parallel_for(std::size_t count, int threads, F && body)
{
    threads = std::max(1, std::min<int>(threads, int(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i, 0);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;)
                body(i, w);
        });
    for (auto & t : pool)
        t.join();
}

namespace detail {

    inline std::vector<SmallGraph> extend_level(const std::vector<SmallGraph> & parents, int n, int threads)
    {
        std::vector<std::vector<std::pair<std::uint64_t, SmallGraph>>> local(resolve_threads(threads));
        parallel_for(parents.size(), int(local.size()), [&](std::size_t i, int w) {
            const SmallGraph & P = parents[i];
            const std::uint64_t parent_code = pair_code(P);
            std::unordered_set<std::uint64_t> seen;
            for (std::uint32_t S = 0; S < (1U << (n - 1)); ++S) {
                SmallGraph child = P;
                child.n = n;
                for (int v = 0; v < n - 1; ++v)
                    if ((S >> v) & 1U)
                        child.set_red(v, n - 1);
                auto cf = canonical_form(child);
                if (seen.count(cf.code))
                    continue;
                // Accept only if deleting the canonically last vertex gives back this parent.
                int last = 0;
                while (cf.position[last] != n - 1)
                    ++last;
                SmallGraph del{n - 1, {}};
                for (int a = 0, ia = 0; a < n; ++a) {
                    if (a == last)
                        continue;
                    for (int b = a + 1, ib = ia + 1; b < n; ++b) {
                        if (b == last)
                            continue;
                        if (child.red(a, b))
                            del.set_red(ia, ib);
                        ++ib;
                    }
                    ++ia;
                }
                if (canonical_form(del).code != parent_code)
                    continue;
                seen.insert(cf.code);
                local[w].emplace_back(cf.code, relabel(child, cf.position));
            }
        });
        std::vector<std::pair<std::uint64_t, SmallGraph>> all;
        for (auto & l : local)
            all.insert(all.end(), l.begin(), l.end());
        std::sort(all.begin(), all.end(), [](auto & a, auto & b) { return a.first < b.first; });
        std::vector<SmallGraph> out;
        out.reserve(all.size());
        for (auto & [c, g] : all)
            out.push_back(g);
        return out;
    }

    inline std::mutex & level_mutex()
    {
        static std::mutex m;
        return m;
    }

    inline std::map<int, std::vector<SmallGraph>> & level_cache()
    {
        static std::map<int, std::vector<SmallGraph>> c;
        return c;
    }

}

// One canonically labelled representative per isomorphism class of red graphs on n vertices,
// sorted by canonical code. Built by canonical augmentation: a child of a level n-1 parent is
// kept iff removing its canonically last vertex yields that parent, so each class has exactly
// one parent; duplicates among siblings are removed by canonical code.
inline const std::vector<SmallGraph> & nonisomorphic_graphs(int n, int threads = 0)
{
    if (n < 1)
        throw std::invalid_argument("enumeration needs n >= 1");
    if (n > enumeration_cap)
        throw CapExceeded("exhaustive enumeration is capped at n = " + std::to_string(enumeration_cap)
            + "; use local search for larger n");
    std::lock_guard lock(detail::level_mutex());
    auto & cache = detail::level_cache();
    if (cache.empty())
        cache[1] = {SmallGraph{1, {}}};
    for (int k = 2; k <= n; ++k)
        if (! cache.count(k))
            cache[k] = detail::extend_level(cache[k - 1], k, threads);
    return cache[n];
}

template <typename F>
std::size_t enumerate_nonisomorphic(int n, F && callback, int threads = 0)
{
    const auto & graphs = nonisomorphic_graphs(n, threads);
    for (const auto & s : graphs)
        callback(to_graph(s));
    return graphs.size();
}

// ---- objectives

struct Objective
{
    std::string name;
    std::optional<PatternGraph> pattern;
    std::function<Count(const Graph &)> count;
    bool cheap_recount = true; // whether a full recount per flip is affordable in local search
};

inline Objective pattern_objective(const PatternGraph & H, std::string name = {})
{
    if (name.empty())
        name = H.to_literal();
    auto fast = fast_counter(H);
    using namespace patterns;
    bool cheap = isomorphic(H, rbrb_c4()) || isomorphic(H, rrbb_c4()) || isomorphic(H, rrrb_c4())
        || isomorphic(H, rrrb_c4().swapped()) || isomorphic(H, rbr_path());
    return {name, H, fast, cheap};
}

inline Objective walk_objective(int t)
{
    return {"alt_walk_" + std::to_string(t), std::nullopt, [t](const Graph & G) { return walk_profile(G, t).W[t]; }, true};
}

// Registry names plus alt_walk_<t>.
inline std::optional<Objective> named_objective(const std::string & name)
{
    if (name.rfind("alt_walk_", 0) == 0) {
        auto tail = name.substr(9);
        if (! tail.empty() && tail.size() <= 3 && tail.find_first_not_of("0123456789") == std::string::npos
            && std::stoi(tail) >= 1)
            return walk_objective(std::stoi(tail));
        return std::nullopt;
    }
    if (auto H = named_pattern(name))
        return pattern_objective(*H, name);
    return std::nullopt;
}

// ---- classification of extremal graphs

struct Classification
{
    enum class Kind { Partitioned, Turan, Quasirandom, Other };
    Kind kind = Kind::Other;
    int a = 0, b = 0;                       // part sizes, a <= b (partitioned)
    Colour colour = Colour::Red;            // colour inducing K_{a,b} (partitioned)
    int parts = 0;                          // (turan)
    std::vector<int> part_sizes;            // complete multipartite red graph, if any
    double sigma = 0, score = 0;            // quasirandomness

    std::string describe() const
    {
        switch (kind) {
        case Kind::Partitioned:
            return "partitioned(" + std::to_string(a) + "," + std::to_string(b) + "," + colour_char(colour) + ")";
        case Kind::Turan:
            return "turan(" + std::to_string(parts) + ")";
        case Kind::Quasirandom:
            return "quasirandom(" + std::to_string(sigma) + "," + std::to_string(score) + ")";
        default:
            break;
        }
        std::string s = "other(sigma=" + std::to_string(sigma) + ",score=" + std::to_string(score);
        if (! part_sizes.empty()) {
            s += ",multipartite=";
            for (std::size_t i = 0; i < part_sizes.size(); ++i)
                s += (i ? "+" : "") + std::to_string(part_sizes[i]);
        }
        return s + ")";
    }
};

// Blue graph a disjoint union of cliques <=> red graph complete multipartite. Returns sorted part sizes.
inline std::optional<std::vector<int>> red_multipartite_parts(const Graph & g)
{
    const int n = g.n();
    std::vector<int> part(n, -1), sizes;
    for (int x = 0; x < n; ++x) {
        if (part[x] >= 0)
            continue;
        int id = int(sizes.size());
        sizes.push_back(0);
        for (int y = x; y < n; ++y)
            if (y == x || ! g.is_red(x, y)) {
                if (part[y] >= 0)
                    return std::nullopt;
                part[y] = id;
                ++sizes[id];
            }
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if ((part[x] != part[y]) != g.is_red(x, y))
                return std::nullopt;
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

inline Classification classify_extremal(const Graph & g, double quasirandom_threshold = 0.05)
{
    const int n = g.n();
    Classification c;
    auto q = assess_quasirandomness(g);
    c.sigma = q.sigma;
    c.score = q.score;
    if (n >= 1) {
        std::vector<VertexSet> candidates;
        for (Colour col : {Colour::Red, Colour::Blue}) {
            VertexSet X(n, false);
            X[0] = true;
            for (int y = 1; y < n; ++y)
                X[y] = g.colour(0, y) != col;
            candidates.push_back(X);
        }
        // degree split: vertices of one red degree against the rest
        std::set<int> degs;
        for (int x = 0; x < n; ++x)
            degs.insert(g.red_deg(x));
        if (degs.size() == 2) {
            VertexSet X(n, false);
            for (int x = 0; x < n; ++x)
                X[x] = g.red_deg(x) == *degs.begin();
            candidates.push_back(X);
        }
        for (auto & X : candidates)
            for (Colour col : {Colour::Red, Colour::Blue}) {
                auto a = assess_bipartition(g, X);
                if ((col == Colour::Red ? a.red_edit : a.blue_edit) == 0) {
                    int sx = int(std::count(X.begin(), X.end(), true));
                    c.kind = Classification::Kind::Partitioned;
                    c.a = std::min(sx, n - sx);
                    c.b = std::max(sx, n - sx);
                    c.colour = col;
                    return c;
                }
            }
    }
    if (auto parts = red_multipartite_parts(g)) {
        if (parts->front() - parts->back() <= 1) {
            c.kind = Classification::Kind::Turan;
            c.parts = int(parts->size());
            c.part_sizes = *parts;
            return c;
        }
        c.part_sizes = *parts;
    }
    if (q.score <= quasirandom_threshold)
        c.kind = Classification::Kind::Quasirandom;
    return c;
}

// ---- exhaustive maximum

struct SearchResult
{
    std::string pattern_name;
    std::optional<PatternGraph> pattern;
    int n = 0;
    Count max_value = 0;
    std::vector<Graph> extremal;
    std::vector<int> swap_partner; // index of the colour-swapped extremal graph, -1 if not extremal
    std::vector<Classification> classifications;
    std::uint64_t graphs_examined = 0;
    double seconds = 0;
    // local search only
    int restarts = 0;
    int hits = 0;
};

namespace detail {

    inline void finish_result(SearchResult & r, const std::vector<SmallGraph> & best, const Objective & obj)
    {
        std::vector<std::uint64_t> codes;
        for (auto & s : best) {
            Graph g = to_graph(s);
            Count check = obj.pattern ? count_copies(*obj.pattern, g) : obj.count(g);
            if (check != r.max_value)
                throw std::logic_error("extremal graph failed its recount for " + obj.name);
            r.extremal.push_back(g);
            r.classifications.push_back(classify_extremal(g));
            codes.push_back(pair_code(s));
        }
        for (auto & s : best) {
            auto sc = canonical_form(s.complement()).code;
            auto it = std::find(codes.begin(), codes.end(), sc);
            r.swap_partner.push_back(it == codes.end() ? -1 : int(it - codes.begin()));
        }
    }

}

// Exact max over all red-blue K_n, one pass over the isomorphism classes for all objectives.
inline std::vector<SearchResult> brute_force_max_many(const std::vector<Objective> & objectives, int n, int threads = 0)
{
    auto start = std::chrono::steady_clock::now();
    const auto & graphs = nonisomorphic_graphs(n, threads);
    const std::size_t k = objectives.size();
    const int workers = resolve_threads(threads);
    std::vector<std::vector<Count>> values(k, std::vector<Count>(graphs.size()));
    parallel_for(graphs.size(), workers, [&](std::size_t i, int) {
        Graph g = to_graph(graphs[i]);
        for (std::size_t j = 0; j < k; ++j)
            values[j][i] = objectives[j].count(g);
    });
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::vector<SearchResult> out;
    for (std::size_t j = 0; j < k; ++j) {
        SearchResult r;
        r.pattern_name = objectives[j].name;
        r.pattern = objectives[j].pattern;
        r.n = n;
        r.graphs_examined = graphs.size();
        r.seconds = secs;
        for (auto v : values[j])
            r.max_value = std::max(r.max_value, v);
        std::vector<SmallGraph> best;
        for (std::size_t i = 0; i < graphs.size(); ++i)
            if (values[j][i] == r.max_value)
                best.push_back(graphs[i]);
        detail::finish_result(r, best, objectives[j]);
        out.push_back(std::move(r));
    }
    return out;
}

inline SearchResult brute_force_max(const Objective & obj, int n, int threads = 0)
{
    return brute_force_max_many({obj}, n, threads).front();
}

inline SearchResult brute_force_max(const PatternGraph & H, int n, int threads = 0)
{
    return brute_force_max(pattern_objective(H), n, threads);
}

// ---- local search

// Restart r starts from construct_quasirandom(n, 1/2, s) with s drawn from
// std::seed_seq{seed, r}; flips are tried in row-major pair order, first strict improvement wins.
inline SearchResult local_search_max(const Objective & obj, int n, std::uint64_t seed, int restarts)
{
    if (obj.pattern && obj.pattern->h() > n)
        throw std::invalid_argument("pattern has more vertices than the host");
    if (restarts < 1)
        throw std::invalid_argument("local search needs at least one restart");
    auto start = std::chrono::steady_clock::now();
    SearchResult r;
    r.pattern_name = obj.name;
    r.pattern = obj.pattern;
    r.n = n;
    r.restarts = restarts;
    std::optional<Graph> best;
    std::vector<Count> finals;
    for (int rs = 0; rs < restarts; ++rs) {
        std::seed_seq sq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(rs)};
        std::array<std::uint32_t, 2> w{};
        sq.generate(w.begin(), w.end());
        Graph g = construct_quasirandom(n, 0.5, (std::uint64_t(w[0]) << 32) | w[1]);
        Count value = obj.count(g);
        for (bool improved = true; improved;) {
            improved = false;
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    ++r.graphs_examined;
                    if (obj.cheap_recount || ! obj.pattern) {
                        Graph h = g.flipped(x, y);
                        Count v = obj.count(h);
                        if (v > value) {
                            g = std::move(h);
                            value = v;
                            improved = true;
                        }
                    }
                    else if (flip_delta_copies(*obj.pattern, g, x, y) > 0) {
                        g = g.flipped(x, y);
                        value = obj.count(g);
                        improved = true;
                    }
                }
        }
        finals.push_back(value);
        if (! best || value > r.max_value) {
            best = g;
            r.max_value = value;
        }
    }
    for (auto v : finals)
        r.hits += v == r.max_value;
    r.extremal.push_back(*best);
    r.classifications.push_back(classify_extremal(*best));
    r.swap_partner.push_back(-1);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// ---- per-vertex profile and the extension bound

struct VertexCopyProfile
{
    std::vector<Count> per_vertex;
    double mean = 0;
    double max_deviation_ratio = 0; // max_x |c_x - mean| / mean
};

inline VertexCopyProfile vertex_copy_profile(const PatternGraph & H, const Graph & G)
{
    VertexCopyProfile p;
    const int n = G.n();
    p.per_vertex.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        Count e = 0;
        for (int a = 0; a < H.h(); ++a)
            e += count_embeddings(H, G, {{a, x}});
        p.per_vertex[x] = e / H.aut_count();
    }
    for (auto c : p.per_vertex)
        p.mean += to_double(c);
    if (n > 0)
        p.mean /= n;
    if (p.mean > 0)
        for (auto c : p.per_vertex)
            p.max_deviation_ratio = std::max(p.max_deviation_ratio, std::abs(to_double(c) - p.mean) / p.mean);
    return p;
}

struct ExtensionReport
{
    std::uint64_t t = 0;       // most copies of H through one fixed labelled copy of H-
    std::uint64_t s = 0;       // copies of H- inside H
    Count max_H = 0, max_Hminus = 0;
    Rational bound;
    bool holds = false;
};

// Largest number of copies of H containing a fixed labelled copy of its spanning subgraph Hm,
// over all completions of the remaining pairs.
inline std::uint64_t extension_count(const PatternGraph & H, const PatternGraph & Hm)
{
    const int h = H.h();
    std::vector<std::pair<int, int>> free_pairs;
    for (int a = 0; a < h; ++a)
        for (int b = a + 1; b < h; ++b)
            if (! Hm.has_edge(a, b))
                free_pairs.emplace_back(a, b);
    std::uint64_t base_mask = 0;
    auto bit = [&](int a, int b) { return std::uint64_t(1) << pair_index(h, std::min(a, b), std::max(a, b)); };
    for (auto & e : Hm.edges())
        base_mask |= bit(e.u, e.v);
    std::uint64_t best = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << free_pairs.size()); ++m) {
        std::vector<PatternEdge> es = Hm.edges();
        for (std::size_t i = 0; i < free_pairs.size(); ++i)
            es.push_back({free_pairs[i].first, free_pairs[i].second, (m >> i) & 1U ? Colour::Red : Colour::Blue});
        PatternGraph K(h, es);
        std::set<std::uint64_t> images;
        std::vector<int> img(h, -1);
        std::vector<bool> used(h, false);
        auto rec = [&](auto && self, int k) -> void {
            if (k == h) {
                std::uint64_t mask = 0;
                for (auto & e : H.edges())
                    mask |= bit(img[e.u], img[e.v]);
                if ((mask & base_mask) == base_mask)
                    images.insert(mask);
                return;
            }
            for (int w = 0; w < h; ++w) {
                if (used[w])
                    continue;
                bool ok = true;
                for (int j = 0; j < k && ok; ++j)
                    if (H.cell(k, j) != 0 && H.cell(k, j) != K.cell(w, img[j]))
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
        best = std::max<std::uint64_t>(best, images.size());
    }
    return best;
}

inline bool is_spanning_subpattern(const PatternGraph & Hm, const PatternGraph & H)
{
    if (Hm.h() != H.h())
        return false;
    for (auto & e : Hm.edges())
        if (H.cell(e.u, e.v) != (e.colour == Colour::Red ? 1 : 2))
            return false;
    return true;
}

inline ExtensionReport extension_check(const PatternGraph & H, const PatternGraph & Hm, int n, int threads = 0)
{
    if (! is_spanning_subpattern(Hm, H))
        throw std::invalid_argument("the smaller pattern must be a spanning subgraph of the larger one");
    ExtensionReport r;
    r.t = extension_count(H, Hm);
    r.s = copies_in_pattern(Hm, H);
    auto res = brute_force_max_many({pattern_objective(H), pattern_objective(Hm)}, n, threads);
    r.max_H = res[0].max_value;
    r.max_Hminus = res[1].max_value;
    r.bound = Rational(to_big(r.max_Hminus) * r.t, BigInt(r.s));
    r.holds = Rational(to_big(r.max_H)) <= r.bound;
    return r;
}

}

#endif
