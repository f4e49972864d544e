// semiind: counts, exhaustive and local maxima, closed forms, relaxation traces and the acceptance battery.

#include <semiind/acceptance.hpp>
#include <semiind/formulas.hpp>
#include <semiind/relaxation.hpp>
#include <semiind/search.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

using namespace semiind;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, config_error = 2, verification_failure = 3, cap_exceeded = 4, bad_graph_file = 5 };

struct ConfigError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct GraphFileError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

json count_json(Count c)
{
    if (c <= std::numeric_limits<std::uint64_t>::max())
        return std::uint64_t(c);
    return to_string(c);
}

std::string fixed(double x, int digits = 12)
{
    if (x == 0)
        x = 0; // no "-0"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

// Everything a subcommand might read; flags not relevant to a subcommand are simply not registered on it.
struct Config
{
    std::string pattern, edges, graph_file, kind = "partitioned", colour = "R", sizes, out, format = "json";
    std::string suite = "primary", mode = "equalize", name, method = "brute";
    int n = 0, a = -1, t = 1, parts = 3, threads = 0, restarts = 20, steps = 20;
    std::optional<std::uint64_t> seed;
    std::string sigma, epsilon, gamma = "1/10", from = "0.05", to = "1";
};

void emit(const Config & cfg, const std::string & text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (! f)
        throw ConfigError("cannot write " + cfg.out);
    f << text;
}

std::string dump(const json & j) { return j.dump(2) + "\n"; }

std::uint64_t need_seed(const Config & cfg)
{
    if (! cfg.seed)
        throw ConfigError("--seed is required when randomness is used");
    return *cfg.seed;
}

Rational parse_unit(const std::string & text, const char * what)
{
    try {
        Rational r = parse_rational(text);
        if (r < 0 || r > 1)
            throw ConfigError(std::string("--") + what + " must lie in [0,1]");
        return r;
    }
    catch (const std::invalid_argument &) {
        throw ConfigError(std::string("cannot parse --") + what + " '" + text + "'");
    }
}

// --pattern <registry name> or --edges <literal>; alt_walk_<t> is accepted where an objective is wanted.
Objective objective_of(const Config & cfg)
{
    if (! cfg.edges.empty()) {
        if (! cfg.pattern.empty())
            throw ConfigError("give --pattern or --edges, not both");
        try {
            return pattern_objective(parse_edge_literal(cfg.edges), cfg.edges);
        }
        catch (const std::invalid_argument & e) {
            throw ConfigError(std::string("bad --edges: ") + e.what());
        }
    }
    if (cfg.pattern.empty())
        throw ConfigError("a pattern is required (--pattern or --edges)");
    auto o = named_objective(cfg.pattern);
    if (! o)
        throw ConfigError("unknown pattern '" + cfg.pattern + "'");
    return *o;
}

Graph construct(const Config & cfg)
{
    if (cfg.n < 1)
        throw ConfigError("--n must be positive");
    const int n = cfg.n;
    if (cfg.kind == "partitioned") {
        int a = cfg.a < 0 ? n / 2 : cfg.a;
        if (a > n)
            throw ConfigError("--a exceeds --n");
        return construct_partitioned(n, a, colour_from_char(cfg.colour.empty() ? '?' : cfg.colour[0]));
    }
    if (cfg.kind == "turan")
        return construct_turan_red(n, cfg.parts);
    if (cfg.kind == "multipartite") {
        std::vector<int> sizes;
        std::stringstream ss(cfg.sizes);
        std::string item;
        while (std::getline(ss, item, ','))
            sizes.push_back(std::stoi(item));
        return construct_multipartite_red(sizes);
    }
    if (cfg.kind == "quasirandom") {
        if (cfg.sigma.empty())
            throw ConfigError("quasirandom needs --sigma");
        return construct_quasirandom(n, to_double(parse_unit(cfg.sigma, "sigma")), need_seed(cfg));
    }
    if (cfg.kind == "cycle")
        return construct_red_cycle(n);
    throw ConfigError("unknown construction '" + cfg.kind + "'");
}

Graph load_or_construct(const Config & cfg)
{
    if (cfg.graph_file.empty())
        return construct(cfg);
    std::ifstream f(cfg.graph_file, std::ios::binary);
    if (! f)
        throw GraphFileError("cannot read " + cfg.graph_file);
    std::stringstream buf;
    buf << f.rdbuf();
    try {
        return parse_graph(buf.str());
    }
    catch (const std::exception & e) {
        throw GraphFileError(cfg.graph_file + ": " + e.what());
    }
}

json graph_json(const Graph & g, const Classification & c)
{
    return json{{"colours", colour_string(g)}, {"class", c.describe()}, {"red_edges", g.red_edge_count()}};
}

int cmd_count(const Config & cfg)
{
    Graph G = load_or_construct(cfg);
    auto obj = objective_of(cfg);
    Count c = obj.count(G);
    if (cfg.format == "csv") {
        emit(cfg, "pattern,n,count\n" + obj.name + "," + std::to_string(G.n()) + "," + to_string(c) + "\n");
        return ok;
    }
    emit(cfg, dump(json{{"command", "count"}, {"pattern", obj.name}, {"n", G.n()}, {"count", count_json(c)}}));
    return ok;
}

int cmd_max(const Config & cfg)
{
    auto obj = objective_of(cfg);
    if (cfg.n < 1)
        throw ConfigError("--n must be positive");
    SearchResult r;
    if (cfg.method == "brute")
        r = brute_force_max(obj, cfg.n, cfg.threads);
    else if (cfg.method == "local") {
        if (cfg.restarts < 1)
            throw ConfigError("--restarts must be positive");
        r = local_search_max(obj, cfg.n, need_seed(cfg), cfg.restarts);
    }
    else
        throw ConfigError("--method must be brute or local");
    std::cerr << "searched " << r.graphs_examined << " graphs in " << fixed(r.seconds, 4) << " s\n";
    if (cfg.format == "csv") {
        std::string s = "pattern,n,max_value,extremal_index,colours,class\n";
        for (std::size_t i = 0; i < r.extremal.size(); ++i)
            s += obj.name + "," + std::to_string(cfg.n) + "," + to_string(r.max_value) + "," + std::to_string(i) + ","
                + colour_string(r.extremal[i]) + ",\"" + r.classifications[i].describe() + "\"\n";
        emit(cfg, s);
        return ok;
    }
    json j{{"command", "max"}, {"pattern", obj.name}, {"n", cfg.n}, {"method", cfg.method},
        {"max_value", count_json(r.max_value)}};
    if (cfg.method == "brute")
        j["graphs_examined"] = r.graphs_examined;
    else {
        j["seed"] = *cfg.seed;
        j["restarts"] = r.restarts;
        j["hits"] = r.hits;
    }
    json ex = json::array();
    for (std::size_t i = 0; i < r.extremal.size(); ++i) {
        auto e = graph_json(r.extremal[i], r.classifications[i]);
        if (i < r.swap_partner.size())
            e["swap_partner"] = r.swap_partner[i];
        ex.push_back(e);
    }
    j["extremal"] = ex;
    emit(cfg, dump(j));
    return ok;
}

int cmd_formula(const Config & cfg)
{
    if (cfg.name.empty())
        throw ConfigError("--name is required; known: " + [] {
            std::string s;
            for (auto & f : formula_names())
                s += (s.empty() ? "" : ", ") + f;
            return s;
        }());
    FormulaArgs args;
    if (cfg.n > 0)
        args.n = cfg.n;
    if (cfg.a >= 0)
        args.a = cfg.a;
    args.t = cfg.t;
    if (! cfg.sigma.empty())
        args.sigma = parse_unit(cfg.sigma, "sigma");
    if (! cfg.epsilon.empty())
        args.epsilon = parse_unit(cfg.epsilon, "epsilon");
    args.pattern = cfg.pattern;
    FormulaValue v;
    try {
        v = evaluate_formula(cfg.name, args);
    }
    catch (const std::invalid_argument & e) {
        throw ConfigError(e.what());
    }
    std::string exact = v.exact ? to_string(*v.exact) : "";
    if (cfg.format == "csv") {
        emit(cfg, "name,exact,value\n" + cfg.name + "," + exact + "," + fixed(v.value, 17) + "\n");
        return ok;
    }
    json j{{"command", "formula"}, {"name", cfg.name}};
    if (v.exact)
        j["exact"] = exact;
    j["value"] = v.value;
    if (cfg.name == "rrbb_best") {
        json as = json::array();
        for (auto a : rrbb_best_a(cfg.n))
            as.push_back(a);
        j["argmax_a"] = as;
    }
    emit(cfg, dump(j));
    return ok;
}

int cmd_verify(const Config & cfg)
{
    if (cfg.suite != "primary")
        throw ConfigError("unknown suite '" + cfg.suite + "'");
    AcceptanceOptions opt;
    opt.threads = cfg.threads;
    if (cfg.seed)
        opt.seed = *cfg.seed;
    auto results = run_acceptance(opt, [](const CriterionResult & r) { std::cout << format_criterion(r) << std::endl; });
    int failed = 0;
    json rows = json::array();
    for (auto & r : results) {
        failed += ! r.passed;
        rows.push_back(json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
            {"findings", r.findings}});
    }
    std::cout << results.size() - failed << "/" << results.size() << " criteria passed" << std::endl;
    if (! cfg.out.empty())
        emit(cfg, dump(json{{"suite", cfg.suite}, {"seed", opt.seed}, {"criteria", rows}}));
    return failed ? verification_failure : ok;
}

int cmd_construct(const Config & cfg)
{
    Graph g = construct(cfg);
    emit(cfg, to_text(g));
    return ok;
}

int cmd_relax(const Config & cfg)
{
    if (cfg.mode == "equalize") {
        Graph G = load_or_construct(cfg);
        Rational gamma;
        try {
            gamma = parse_rational(cfg.gamma);
        }
        catch (const std::invalid_argument &) {
            throw ConfigError("cannot parse --gamma");
        }
        if (gamma <= 0)
            throw ConfigError("--gamma must be positive");
        auto v = vector_from_graph<Rational>(G);
        auto tr = equalize(v, gamma);
        std::string s = "k,Sigma,f,Sigma_exact,f_exact\n";
        for (std::size_t k = 0; k < tr.steps.size(); ++k)
            s += std::to_string(k) + "," + fixed(to_double(tr.steps[k].first), 17) + ","
                + fixed(to_double(tr.steps[k].second), 17) + "," + to_string(tr.steps[k].first) + ","
                + to_string(tr.steps[k].second) + "\n";
        emit(cfg, s);
        std::cerr << tr.step_count() << " steps, " << (tr.terminated ? "terminated" : "step cap reached") << "\n";
        return ok;
    }
    if (cfg.mode == "profile") {
        // sigma, the optimal tau, and the sigma-tau profile there next to sigma^3 (1 - sigma), its value at tau = sigma^2
        if (cfg.steps < 1)
            throw ConfigError("--steps must be positive");
        double lo = to_double(parse_unit(cfg.from, "from")), hi = to_double(parse_unit(cfg.to, "to"));
        std::string s = "sigma,tau_star,g_at_tau_star,g_at_sigma_squared\n";
        for (int i = 0; i <= cfg.steps; ++i) {
            double sg = lo + (hi - lo) * i / cfg.steps, ts = tau_star(sg);
            s += fixed(sg) + "," + fixed(ts) + "," + fixed(g_sigma(sg, ts)) + "," + fixed(sg * sg * sg * (1 - sg))
                + "\n";
        }
        emit(cfg, s);
        return ok;
    }
    if (cfg.mode == "gap") {
        auto g = sweep_tradeoff_gap();
        emit(cfg, dump(json{{"command", "relax"}, {"mode", "gap"}, {"points", g.points}, {"min_gap", g.min_gap},
                           {"at", {g.at_p, g.at_q, g.at_r}}}));
        return ok;
    }
    throw ConfigError("--mode must be equalize, profile or gap");
}

// RRRB and Q counts on quasirandom graphs across sigma, next to the closed forms.
int cmd_profile(const Config & cfg)
{
    if (cfg.n < 4)
        throw ConfigError("--n must be at least 4");
    if (cfg.steps < 1)
        throw ConfigError("--steps must be positive");
    const std::uint64_t seed = need_seed(cfg);
    Rational lo = parse_unit(cfg.from, "from"), hi = parse_unit(cfg.to, "to");
    const double n = cfg.n, n4 = n * n * n * n, c4 = double(binomial(cfg.n, 4));
    std::string s = "sigma,rrrb_count,rrrb_over_n4,rrrb_profile,q_count,q_over_binom,rand_Q\n";
    for (int i = 0; i <= cfg.steps; ++i) {
        Rational sg = lo + (hi - lo) * i / cfg.steps;
        Graph G = construct_quasirandom(cfg.n, to_double(sg), seed + i);
        Count r = count_rrrb_codegree(G), q = q_induced_count(G);
        s += fixed(to_double(sg)) + "," + to_string(r) + "," + fixed(to_double(r) / n4) + ","
            + fixed(to_double(rrrb_profile(sg))) + "," + to_string(q) + "," + fixed(to_double(q) / c4) + ","
            + fixed(to_double(rand_Q(sg))) + "\n";
    }
    emit(cfg, s);
    return ok;
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"semiind: red-blue complete graphs, pattern counts and extremal searches"};
    app.require_subcommand(1);
    Config cfg;

    auto add_pattern = [&](CLI::App * c) {
        c->add_option("--pattern", cfg.pattern, "registry name, e.g. rbrb_c4, alt_cycle_6, alt_walk_3");
        c->add_option("--edges", cfg.edges, "edge literal, e.g. \"1-2:R,2-3:B\"");
    };
    auto add_construction = [&](CLI::App * c, bool file) {
        if (file)
            c->add_option("--graph", cfg.graph_file, "graph file (vertex count, then the colour string)");
        c->add_option("--kind", cfg.kind, "partitioned | turan | multipartite | quasirandom | cycle")->capture_default_str();
        c->add_option("--n", cfg.n, "vertex count");
        c->add_option("--a", cfg.a, "part size for partitioned (default n/2)");
        c->add_option("--colour", cfg.colour, "colour of the K_{a,n-a} for partitioned: R or B")->capture_default_str();
        c->add_option("--parts", cfg.parts, "number of parts for turan")->capture_default_str();
        c->add_option("--sizes", cfg.sizes, "comma separated part sizes for multipartite");
        c->add_option("--sigma", cfg.sigma, "red probability for quasirandom");
        c->add_option("--seed", cfg.seed, "seed (required for quasirandom)");
    };
    auto add_common = [&](CLI::App * c) {
        c->add_option("--out", cfg.out, "write the report here instead of stdout");
        c->add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
        c->add_option("--threads", cfg.threads, "worker threads (default: SEMIIND_THREADS, else 1)");
    };

    auto * count = app.add_subcommand("count", "count copies of a pattern in a graph file or construction");
    add_pattern(count);
    add_construction(count, true);
    add_common(count);

    auto * max = app.add_subcommand("max", "maximum count over all red-blue K_n");
    add_pattern(max);
    max->add_option("--n", cfg.n, "vertex count")->required();
    max->add_option("--method", cfg.method, "brute | local")->capture_default_str();
    max->add_option("--seed", cfg.seed, "seed for local search");
    max->add_option("--restarts", cfg.restarts, "local search restarts")->capture_default_str();
    add_common(max);

    auto * formula = app.add_subcommand("formula", "evaluate a named closed form");
    formula->add_option("--name", cfg.name, "formula name")->required();
    formula->add_option("--n", cfg.n);
    formula->add_option("--a", cfg.a);
    formula->add_option("--t", cfg.t)->capture_default_str();
    formula->add_option("--sigma", cfg.sigma, "fraction or decimal");
    formula->add_option("--epsilon", cfg.epsilon, "fraction or decimal");
    formula->add_option("--pattern", cfg.pattern, "pattern name for density formulas");
    add_common(formula);

    auto * verify = app.add_subcommand("verify", "run the acceptance battery");
    verify->add_option("--suite", cfg.suite)->capture_default_str();
    verify->add_option("--seed", cfg.seed, "seed for the randomised criteria");
    verify->add_option("--out", cfg.out, "also write a JSON report");
    verify->add_option("--threads", cfg.threads);

    auto * cons = app.add_subcommand("construct", "write a graph file");
    add_construction(cons, false);
    cons->add_option("--out", cfg.out);

    auto * relax = app.add_subcommand("relax", "equalization traces and relaxation sweeps");
    relax->add_option("--mode", cfg.mode, "equalize | profile | gap")->capture_default_str();
    relax->add_option("--gamma", cfg.gamma, "step parameter for equalize")->capture_default_str();
    relax->add_option("--from", cfg.from)->capture_default_str();
    relax->add_option("--to", cfg.to)->capture_default_str();
    relax->add_option("--steps", cfg.steps)->capture_default_str();
    add_construction(relax, true);
    relax->add_option("--out", cfg.out);

    auto * profile = app.add_subcommand("profile", "sigma sweep of RRRB and Q counts on quasirandom graphs (CSV)");
    profile->add_option("--n", cfg.n)->required();
    profile->add_option("--seed", cfg.seed, "graph i uses seed + i");
    profile->add_option("--from", cfg.from)->capture_default_str();
    profile->add_option("--to", cfg.to)->capture_default_str();
    profile->add_option("--steps", cfg.steps)->capture_default_str();
    profile->add_option("--out", cfg.out);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return config_error;
    }

    try {
        if (cfg.threads < 0)
            throw ConfigError("--threads must be nonnegative");
        if (*count)
            return cmd_count(cfg);
        if (*max)
            return cmd_max(cfg);
        if (*formula)
            return cmd_formula(cfg);
        if (*verify)
            return cmd_verify(cfg);
        if (*cons)
            return cmd_construct(cfg);
        if (*relax)
            return cmd_relax(cfg);
        if (*profile)
            return cmd_profile(cfg);
    }
    catch (const CapExceeded & e) {
        std::cerr << "error: " << e.what() << "\n";
        return cap_exceeded;
    }
    catch (const GraphFileError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_graph_file;
    }
    catch (const ConfigError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return config_error;
    }
    catch (const std::invalid_argument & e) {
        std::cerr << "error: " << e.what() << "\n";
        return config_error;
    }
    return config_error;
}
