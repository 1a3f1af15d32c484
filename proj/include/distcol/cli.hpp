#pragma once

// Command layer behind the distcol executable. Argument parsing lives in the
// tool; everything here works on a resolved RunConfig so it can be driven
// from tests.
//
// Exit status: 0 success, 1 validation failure, 2 parse or configuration error.

#include "distcol/colouring.hpp"
#include "distcol/conflict_graph.hpp"
#include "distcol/constructions.hpp"
#include "distcol/edge_list_io.hpp"
#include "distcol/graph.hpp"
#include "distcol/json_io.hpp"
#include "distcol/walk_census.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace distcol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

/// Matchings are solved exactly by `color` up to this many edges.
inline constexpr std::size_t kAutoExactMatchingEdges = 128;

struct RunConfig {
    std::string command;
    std::string input;
    std::string output;
    std::string colouring; // check: colouring file to validate
    std::uint32_t t = 2;
    std::string algo = "dsatur";
    std::optional<std::uint32_t> k;
    std::uint64_t seed = 1;
    std::uint64_t max_rounds = 1'000'000;
    std::uint64_t budget = kDefaultSearchBudget;
    double delta = kDefaultSparsityDelta;
    double epsilon = kReferenceEpsilon;

    std::string family;
    std::size_t s = 2;
    std::size_t q = 2;
    std::size_t n = 100;
    double d = 4;
    std::uint32_t g = 5;
    std::size_t dims = 2;
    std::size_t alphabet = 3;
    std::optional<std::size_t> a; // complete-bipartite sides; b defaults to a
    std::optional<std::size_t> b;

    bool all_roots = false;
    std::size_t root = 0;
    std::size_t root_sample = 64;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline nlohmann::json config_json(const RunConfig& c)
{
    nlohmann::json j{{"command", c.command}, {"input", c.input}, {"output", c.output}, {"t", c.t},
        {"algo", c.algo}, {"seed", c.seed}, {"maxRounds", c.max_rounds}, {"budget", c.budget},
        {"delta", c.delta}, {"epsilon", c.epsilon}};
    j["k"] = c.k ? nlohmann::json(*c.k) : nlohmann::json(nullptr);
    if (!c.colouring.empty())
        j["colouring"] = c.colouring;
    if (c.command == "gen") {
        j["family"] = c.family;
        j["s"] = c.s;
        j["q"] = c.q;
        j["n"] = c.n;
        j["d"] = c.d;
        j["g"] = c.g;
        j["dims"] = c.dims;
        j["alphabet"] = c.alphabet;
        j["a"] = c.a ? nlohmann::json(*c.a) : nlohmann::json(nullptr);
        j["b"] = c.b ? nlohmann::json(*c.b) : nlohmann::json(nullptr);
    }
    if (c.command == "audit") {
        j["allRoots"] = c.all_roots;
        j["root"] = c.root;
        j["rootSample"] = c.root_sample;
    }
    return j;
}

/// Independent stream seed for a named subcomponent.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : label) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    // splitmix64 finaliser
    std::uint64_t z = seed ^ h;
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct Generated {
    Graph graph;
    nlohmann::json parameters;
    bool seeded = false;
};

inline Generated generate(const RunConfig& c)
{
    using nlohmann::json;
    const auto& f = c.family;
    if (f == "cycle")
        return {cycle(c.n), json{{"n", c.n}}};
    if (f == "path")
        return {path(c.n), json{{"n", c.n}}};
    if (f == "complete-bipartite") {
        auto a = c.a.value_or(c.s);
        auto b = c.b.value_or(a);
        return {complete_bipartite(a, b), json{{"a", a}, {"b", b}}};
    }
    if (f == "blown-up-c5")
        return {blown_up_c5(c.s), json{{"s", c.s}}};
    if (f == "hamming")
        return {hamming(c.dims, c.alphabet), json{{"dims", c.dims}, {"alphabet", c.alphabet}}};
    if (f == "projective-plane")
        return {projective_plane_incidence(c.q), json{{"q", c.q}}};
    if (f == "random-high-girth")
        return {random_high_girth(c.n, c.d, c.g, derive_seed(c.seed, "random-high-girth")),
            json{{"n", c.n}, {"d", c.d}, {"g", c.g}}, true};
    throw UsageError("unknown family '" + f + "'");
}

namespace detail {

    inline Graph load_graph(const std::string& path)
    {
        if (path.empty())
            throw UsageError("--input is required");
        std::ifstream in(path);
        if (!in)
            throw UsageError("cannot open input '" + path + "'");
        try {
            return read_edge_list(in);
        } catch (const ParseError& err) {
            throw UsageError(path + ": " + err.what());
        } catch (const GraphError& err) {
            throw UsageError(path + ": " + err.what());
        }
    }

    inline void write_text(const std::string& path, const std::string& text, std::ostream& fallback)
    {
        if (path.empty()) {
            fallback << text;
            return;
        }
        std::ofstream out(path);
        if (!out)
            throw UsageError("cannot open output '" + path + "'");
        out << text;
    }

    inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

    inline nlohmann::json girth_json(const Graph& g)
    {
        auto gi = girth(g);
        return gi ? nlohmann::json(*gi) : nlohmann::json(nullptr);
    }

    inline MatchingMode matching_mode(const std::string& algo)
    {
        if (algo == "greedy")
            return MatchingMode::greedy;
        if (algo == "exact")
            return MatchingMode::exact;
        throw UsageError("match --algo must be greedy or exact, got '" + algo + "'");
    }

    struct ColourOutcome {
        std::optional<Colouring> colouring;
        nlohmann::json details = nlohmann::json::object();
    };

    inline ColourOutcome colour_with(const ConflictGraph& cg, const RunConfig& c, std::uint64_t seed)
    {
        ColourOutcome out;
        if (c.algo == "greedy") {
            out.colouring = greedy_colour(cg);
        } else if (c.algo == "dsatur") {
            out.colouring = dsatur_colour(cg);
        } else if (c.algo == "exact") {
            auto r = exact_chromatic(cg, c.budget);
            out.colouring = r.colouring;
            out.details = {{"optimal", r.optimal}, {"provenLower", r.lower_bound}, {"nodes", r.nodes}};
        } else if (c.algo == "resample") {
            auto k = c.k.value_or(static_cast<std::uint32_t>(cg.max_degree() + 1));
            auto r = resample_colour(cg, k, seed, c.max_rounds);
            out.colouring = r.colouring;
            out.details = {{"k", k}, {"rounds", r.rounds}, {"success", r.colouring.has_value()}};
        } else {
            throw UsageError("unknown --algo '" + c.algo + "'");
        }
        return out;
    }

    inline void require_t(const RunConfig& c)
    {
        if (c.t < 1)
            throw UsageError("--t must be at least 1");
    }

} // namespace detail

inline int cmd_gen(const RunConfig& c, std::ostream& out)
{
    auto gen = generate(c);
    std::ostringstream edges;
    write_edge_list(edges, gen.graph);
    detail::write_text(c.output, edges.str(), out);
    nlohmann::json side{{"family", c.family}, {"parameters", gen.parameters},
        {"seed", gen.seeded ? nlohmann::json(c.seed) : nlohmann::json(nullptr)},
        {"n", gen.graph.vertex_count()}, {"m", gen.graph.edge_count()},
        {"maxDegree", gen.graph.max_degree()}, {"girth", detail::girth_json(gen.graph)},
        {"config", config_json(c)}};
    if (!c.output.empty())
        detail::write_text(c.output + ".json", detail::dump(side), out);
    return kExitOk;
}

inline int cmd_conflict(const RunConfig& c, std::ostream& out)
{
    detail::require_t(c);
    auto g = detail::load_graph(c.input);
    ConflictGraph cg(g, c.t);
    nlohmann::json j{{"config", config_json(c)}, {"t", c.t}, {"vertices", cg.vertex_count()},
        {"edges", cg.edge_count()}, {"maxDegree", cg.max_degree()}, {"baseMaxDegree", g.max_degree()},
        {"degreeBound", trivial_colour_bound(g.max_degree(), c.t) - 1}};
    detail::write_text(c.output, detail::dump(j), out);
    return kExitOk;
}

inline int cmd_color(const RunConfig& c, std::ostream& out)
{
    detail::require_t(c);
    auto g = detail::load_graph(c.input);
    ConflictGraph cg(g, c.t);
    auto outcome = detail::colour_with(cg, c, derive_seed(c.seed, "resample"));
    nlohmann::json j{{"config", config_json(c)}, {"algo", c.algo}, {"details", outcome.details}};
    if (!outcome.colouring) {
        j["success"] = false;
        detail::write_text(c.output.empty() ? "" : c.output + ".json", detail::dump(j), out);
        return kExitInvalid;
    }
    auto mode = g.edge_count() <= kAutoExactMatchingEdges ? MatchingMode::exact : MatchingMode::greedy;
    auto nu = distance_matching(cg, mode, c.budget);
    j["success"] = true;
    j["matching"] = nu;
    j["bounds"] = bound_report(g, c.t, *outcome.colouring, nu, c.epsilon);
    if (!c.output.empty()) {
        std::ostringstream col;
        write_colouring(col, *outcome.colouring);
        detail::write_text(c.output, col.str(), out);
        detail::write_text(c.output + ".json", detail::dump(j), out);
    } else {
        out << detail::dump(j);
    }
    return kExitOk;
}

inline int cmd_match(const RunConfig& c, std::ostream& out)
{
    detail::require_t(c);
    auto mode = detail::matching_mode(c.algo);
    auto g = detail::load_graph(c.input);
    auto nu = distance_matching(g, c.t, mode, c.budget);
    nlohmann::json j = nu;
    j["config"] = config_json(c);
    detail::write_text(c.output, detail::dump(j), out);
    return kExitOk;
}

inline std::vector<EdgeId> audit_roots(const RunConfig& c, std::size_t m)
{
    std::vector<EdgeId> roots;
    if (!c.all_roots) {
        if (c.root >= m)
            throw UsageError("--root " + std::to_string(c.root) + " out of range (m = " + std::to_string(m) + ")");
        roots.push_back(edge_id(c.root));
        return roots;
    }
    roots = identity_order(m);
    if (m > c.root_sample) {
        std::mt19937_64 rng(derive_seed(c.seed, "audit-roots"));
        std::shuffle(roots.begin(), roots.end(), rng);
        roots.resize(c.root_sample);
        std::sort(roots.begin(), roots.end());
    }
    return roots;
}

inline int cmd_audit(const RunConfig& c, std::ostream& out)
{
    detail::require_t(c);
    if (!(c.delta > 0.0 && c.delta < 1.0))
        throw UsageError("--delta must lie in (0, 1)");
    auto g = detail::load_graph(c.input);
    if (g.edge_count() == 0)
        throw UsageError("graph has no edges to audit");
    auto reports = nlohmann::json::array();
    for (auto root : audit_roots(c, g.edge_count()))
        reports.push_back(audit(g, root, c.t, c.delta));
    nlohmann::json j{{"config", config_json(c)}, {"maxDegree", g.max_degree()},
        {"girth", detail::girth_json(g)}, {"reports", reports}};
    detail::write_text(c.output, detail::dump(j), out);
    return kExitOk;
}

inline int cmd_check(const RunConfig& c, std::ostream& out)
{
    detail::require_t(c);
    auto g = detail::load_graph(c.input);
    if (c.colouring.empty())
        throw UsageError("--colouring is required");
    std::ifstream in(c.colouring);
    if (!in)
        throw UsageError("cannot open colouring '" + c.colouring + "'");
    Colouring col;
    try {
        col = read_colouring(in, g.edge_count());
    } catch (const ParseError& err) {
        throw UsageError(c.colouring + ": " + err.what());
    }
    nlohmann::json j{{"config", config_json(c)}};
    std::vector<Violation> violations;
    try {
        violations = verify_colouring(g, c.t, col);
    } catch (const ColouringError& err) {
        j["valid"] = false;
        j["error"] = err.what();
        detail::write_text(c.output, detail::dump(j), out);
        return kExitInvalid;
    }
    j["valid"] = violations.empty();
    j["colours"] = col.colour_count();
    j["violations"] = violations;
    detail::write_text(c.output, detail::dump(j), out);
    return violations.empty() ? kExitOk : kExitInvalid;
}

struct BenchInstance {
    std::string name;
    RunConfig gen;
};

inline std::vector<BenchInstance> bench_instances(std::uint64_t seed)
{
    auto make = [&](std::string name, std::string family, auto&& tweak) {
        RunConfig r;
        r.command = "gen";
        r.family = std::move(family);
        r.seed = seed;
        tweak(r);
        return BenchInstance{std::move(name), r};
    };
    return {
        make("cycle-6", "cycle", [](RunConfig& r) { r.n = 6; }),
        make("k-3-3", "complete-bipartite", [](RunConfig& r) { r.a = 3; }),
        make("blown-up-c5-2", "blown-up-c5", [](RunConfig& r) { r.s = 2; }),
        make("blown-up-c5-3", "blown-up-c5", [](RunConfig& r) { r.s = 3; }),
        make("hamming-2-3", "hamming", [](RunConfig& r) { r.dims = 2; r.alphabet = 3; }),
        make("hamming-3-3", "hamming", [](RunConfig& r) { r.dims = 3; r.alphabet = 3; }),
        make("projective-plane-2", "projective-plane", [](RunConfig& r) { r.q = 2; }),
        make("projective-plane-3", "projective-plane", [](RunConfig& r) { r.q = 3; }),
        make("projective-plane-5", "projective-plane", [](RunConfig& r) { r.q = 5; }),
        make("random-high-girth-400-6-5", "random-high-girth", [](RunConfig& r) { r.n = 400; r.d = 6; r.g = 5; }),
    };
}

inline constexpr std::size_t kBenchExactEdges = 64;

inline constexpr std::string_view kBenchHeader = "instance,t,n,m,maxdeg,girth,algo,colours,lower,millis";

/// Cells are independent and run concurrently; rows are emitted in grid order.
/// --algo all sweeps every colourer.
inline int cmd_bench(const RunConfig& c, std::ostream& out)
{
    std::vector<std::string> algos{c.algo};
    if (c.algo == "all")
        algos = {"greedy", "dsatur", "resample", "exact"};

    struct Cell {
        const BenchInstance* instance;
        std::uint32_t t;
        std::string algo;
    };
    auto instances = bench_instances(c.seed);
    std::vector<Cell> cells;
    for (const auto& inst : instances)
        for (std::uint32_t t : {1u, 2u, 3u})
            for (const auto& algo : algos)
                cells.push_back({&inst, t, algo});

    auto run_cell = [&c](const Cell& cell) {
        auto graph = generate(cell.instance->gen).graph;
        ConflictGraph cg(graph, cell.t);
        RunConfig rc = c;
        rc.algo = cell.algo;
        rc.t = cell.t;
        // Exact search only where it finishes quickly.
        if (cell.algo == "exact" && cg.vertex_count() > kBenchExactEdges)
            return std::string();
        auto start = std::chrono::steady_clock::now();
        auto outcome = detail::colour_with(cg, rc, derive_seed(c.seed, cell.instance->name + "/resample"));
        auto millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::string lower;
        if (graph.edge_count() <= kAutoExactMatchingEdges) {
            auto nu = distance_matching(cg, MatchingMode::exact, c.budget);
            if (nu.exact && nu.size > 0)
                lower = std::to_string((graph.edge_count() + nu.size - 1) / nu.size);
        }
        auto gi = girth(graph);
        std::ostringstream row;
        row << cell.instance->name << ',' << cell.t << ',' << graph.vertex_count() << ',' << graph.edge_count()
            << ',' << graph.max_degree() << ',' << (gi ? std::to_string(*gi) : std::string()) << ','
            << cell.algo << ',' << (outcome.colouring ? std::to_string(outcome.colouring->colour_count()) : "")
            << ',' << lower << ',' << static_cast<long long>(millis) << '\n';
        return row.str();
    };

    std::vector<std::string> rows(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < cells.size(); i = next++)
            rows[i] = run_cell(cells[i]);
    };
    auto workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
    std::vector<std::future<void>> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool)
        f.get();
    std::ostringstream csv;
    csv << kBenchHeader << '\n';
    for (const auto& r : rows)
        csv << r;
    detail::write_text(c.output, csv.str(), out);
    return kExitOk;
}

inline int run(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    try {
        if (c.command == "gen")
            return cmd_gen(c, out);
        if (c.command == "conflict")
            return cmd_conflict(c, out);
        if (c.command == "color")
            return cmd_color(c, out);
        if (c.command == "match")
            return cmd_match(c, out);
        if (c.command == "audit")
            return cmd_audit(c, out);
        if (c.command == "check")
            return cmd_check(c, out);
        if (c.command == "bench")
            return cmd_bench(c, out);
        throw UsageError("unknown command '" + c.command + "'");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConstructionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ColouringError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace distcol::cli
