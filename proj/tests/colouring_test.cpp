#include "distcol/colouring.hpp"
#include "distcol/constructions.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace distcol;
namespace oracle = distcol::testing;

namespace {

std::vector<std::vector<bool>> matrix_of(const ConflictGraph& cg)
{
    auto n = cg.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (auto f : cg.neighbours(edge_id(i)))
            adj[i][index(f)] = true;
    return adj;
}

// Pairwise distance > t, checked against line-graph distances.
bool is_distance_matching(const Graph& g, std::uint32_t t, const std::vector<EdgeId>& edges)
{
    auto d = oracle::line_graph_distances(g);
    for (auto a : edges)
        for (auto b : edges)
            if (a != b && d[index(a)][index(b)] <= t)
                return false;
    return true;
}

struct Instance {
    std::string name;
    Graph graph;
    std::uint32_t t;
};

// Conflict graphs with at most 12 vertices, for brute-force chromatic checks.
std::vector<Instance> small_conflict_instances()
{
    std::vector<Instance> out;
    for (const auto& [name, g] : oracle::small_corpus())
        if (g.edge_count() <= 12)
            for (std::uint32_t t = 1; t <= 3; ++t)
                out.push_back({name, g, t});
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = oracle::random_bounded_degree(9, 4, 12, 900 + seed);
        out.push_back({"rand" + std::to_string(seed), g, static_cast<std::uint32_t>(1 + seed % 3)});
    }
    return out;
}

} // namespace

TEST(VerifyColouring, Examples)
{
    auto p3 = path(3);
    EXPECT_TRUE(verify_colouring(p3, 1, Colouring({0, 1})).empty());

    auto k3 = cycle(3);
    auto v = verify_colouring(k3, 1, Colouring({7, 7, 7}));
    ASSERT_EQ(v.size(), 3u);
    for (const auto& x : v) {
        EXPECT_LT(index(x.e), index(x.f));
        EXPECT_EQ(x.distance, 1u);
        EXPECT_EQ(x.colour, 7u);
    }

    EXPECT_TRUE(verify_colouring(cycle(6), 2, Colouring({0, 1, 2, 0, 1, 2})).empty());
    EXPECT_EQ(verify_colouring(cycle(6), 3, Colouring({0, 1, 2, 0, 1, 2})).size(), 3u);
}

TEST(VerifyColouring, RejectsIncompleteInput)
{
    auto g = cycle(4);
    Colouring c(4);
    c.assign(edge_id(0), 0);
    c.assign(edge_id(1), 1);
    c.assign(edge_id(3), 1);
    try {
        verify_colouring(g, 1, c);
        FAIL() << "missing colour accepted";
    } catch (const ColouringError& e) {
        EXPECT_NE(std::string(e.what()).find("edge 2"), std::string::npos) << e.what();
    }
    EXPECT_THROW(verify_colouring(g, 1, Colouring(3)), ColouringError);
    EXPECT_THROW(verify_colouring(g, 0, Colouring({0, 1, 0, 1})), ColouringError);
}

TEST(VerifyColouring, MatchesConflictOracle)
{
    std::mt19937_64 rng(11);
    for (const auto& [name, g] : oracle::small_corpus())
        for (std::uint32_t t = 1; t <= 3; ++t) {
            auto adj = oracle::conflict_matrix(g, t);
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<Colour> colours(g.edge_count());
                for (auto& c : colours)
                    c = static_cast<Colour>(rng() % 4);
                std::size_t expected = 0;
                for (std::size_t i = 0; i < colours.size(); ++i)
                    for (std::size_t j = i + 1; j < colours.size(); ++j)
                        expected += adj[i][j] && colours[i] == colours[j] ? 1 : 0;
                EXPECT_EQ(verify_colouring(g, t, Colouring(colours)).size(), expected) << name;
            }
        }
}

TEST(GreedyColour, Examples)
{
    ConflictGraph k9(complete_bipartite(3, 3), 2);
    EXPECT_EQ(greedy_colour(k9).colour_count(), 9u);
    auto reversed = identity_order(9);
    std::reverse(reversed.begin(), reversed.end());
    EXPECT_EQ(greedy_colour(k9, reversed).colour_count(), 9u);

    ConflictGraph edgeless(Graph(4, {{0, 1}, {2, 3}}), 1);
    EXPECT_EQ(greedy_colour(edgeless).colour_count(), 1u);

    auto petersen = oracle::petersen();
    ConflictGraph cg(petersen, 2);
    auto c = greedy_colour(cg);
    EXPECT_LE(c.colour_count(), 13u);
    EXPECT_TRUE(verify_colouring(petersen, 2, c).empty());
}

TEST(GreedyColour, RejectsNonPermutation)
{
    ConflictGraph cg(cycle(4), 1);
    std::vector<EdgeId> dup{edge_id(0), edge_id(1), edge_id(1), edge_id(3)};
    EXPECT_THROW(greedy_colour(cg, dup), ColouringError);
    std::vector<EdgeId> short_order{edge_id(0)};
    EXPECT_THROW(greedy_colour(cg, short_order), ColouringError);
}

TEST(DsaturColour, Examples)
{
    EXPECT_EQ(dsatur_colour(ConflictGraph(complete_bipartite(3, 3), 2)).colour_count(), 9u);
    EXPECT_EQ(dsatur_colour(ConflictGraph(cycle(6), 2)).colour_count(), 3u);
    EXPECT_EQ(dsatur_colour(ConflictGraph(path(2), 3)).colour_count(), 1u);
}

TEST(Colourers, AlwaysValidAndWithinTrivialBound)
{
    for (const auto& [name, g] : oracle::small_corpus())
        for (std::uint32_t t = 1; t <= 3; ++t) {
            ConflictGraph cg(g, t);
            auto bound = trivial_colour_bound(g.max_degree(), t);
            auto greedy = greedy_colour(cg);
            auto dsatur = dsatur_colour(cg);
            EXPECT_TRUE(verify_colouring(g, t, greedy).empty()) << name;
            EXPECT_TRUE(verify_colouring(g, t, dsatur).empty()) << name;
            EXPECT_LE(greedy.colour_count(), cg.max_degree() + 1) << name;
            EXPECT_LE(dsatur.colour_count(), cg.max_degree() + 1) << name;
            if (g.edge_count() > 0) {
                EXPECT_LE(greedy.colour_count(), bound) << name;
            }
        }
}

TEST(ExactChromatic, Examples)
{
    auto c6 = exact_chromatic(ConflictGraph(cycle(6), 2));
    EXPECT_EQ(c6.chromatic, 3u);
    EXPECT_TRUE(c6.optimal);

    auto k33 = exact_chromatic(ConflictGraph(complete_bipartite(3, 3), 2));
    EXPECT_EQ(k33.chromatic, 9u);
    EXPECT_TRUE(k33.optimal);

    auto heawood = projective_plane_incidence(2);
    auto h = exact_chromatic(ConflictGraph(heawood, 3));
    EXPECT_EQ(h.chromatic, 21u);
    EXPECT_TRUE(h.optimal);
    EXPECT_TRUE(verify_colouring(heawood, 3, h.colouring).empty());
}

TEST(ExactChromatic, EmptyGraph)
{
    auto r = exact_chromatic(ConflictGraph(Graph(3, {}), 2));
    EXPECT_EQ(r.chromatic, 0u);
    EXPECT_TRUE(r.optimal);
}

TEST(ExactChromatic, MatchesBacktrackingOracle)
{
    for (const auto& [name, g, t] : small_conflict_instances()) {
        ConflictGraph cg(g, t);
        auto r = exact_chromatic(cg);
        ASSERT_TRUE(r.optimal) << name;
        EXPECT_EQ(r.chromatic, oracle::brute_chromatic(matrix_of(cg))) << name << " t=" << t;
        EXPECT_EQ(r.colouring.colour_count(), r.chromatic);
        EXPECT_TRUE(verify_colouring(g, t, r.colouring).empty()) << name;
    }
}

TEST(ExactChromatic, TinyBudgetStillReturnsValidColouring)
{
    auto g = oracle::petersen();
    auto r = exact_chromatic(ConflictGraph(g, 2), 1);
    EXPECT_TRUE(verify_colouring(g, 2, r.colouring).empty());
    EXPECT_LE(r.lower_bound, r.chromatic);
}

TEST(ResampleColour, SucceedsWithGenerousPalette)
{
    for (const auto& [name, g] : oracle::small_corpus()) {
        ConflictGraph cg(g, 2);
        auto k = static_cast<std::uint32_t>(cg.max_degree() + 1);
        auto r = resample_colour(cg, k, 3, 1'000'000);
        ASSERT_TRUE(r.colouring.has_value()) << name;
        EXPECT_TRUE(verify_colouring(g, 2, *r.colouring).empty()) << name;
        EXPECT_LE(r.colouring->colour_count(), k);
    }
}

TEST(ResampleColour, Examples)
{
    ConflictGraph k9(complete_bipartite(3, 3), 2);
    auto fail = resample_colour(k9, 8, 1, 2000);
    EXPECT_FALSE(fail.colouring.has_value());
    EXPECT_EQ(fail.rounds, 2000u);

    auto c6 = cycle(6);
    auto ok = resample_colour(ConflictGraph(c6, 2), 3, 1, 10'000);
    ASSERT_TRUE(ok.colouring.has_value());
    EXPECT_TRUE(verify_colouring(c6, 2, *ok.colouring).empty());

    EXPECT_THROW(resample_colour(k9, 0, 1, 10), ColouringError);
}

TEST(ResampleColour, Reproducible)
{
    auto g = projective_plane_incidence(3);
    ConflictGraph cg(g, 2);
    auto k = static_cast<std::uint32_t>(cg.max_degree());
    auto a = resample_colour(cg, k, 42, 100'000);
    auto b = resample_colour(cg, k, 42, 100'000);
    EXPECT_EQ(a.rounds, b.rounds);
    EXPECT_EQ(a.colouring, b.colouring);
    auto c = resample_colour(cg, k + 5, 43, 100'000);
    ASSERT_TRUE(c.colouring.has_value());
    EXPECT_TRUE(verify_colouring(g, 2, *c.colouring).empty());
}

TEST(DistanceMatching, Examples)
{
    auto c6 = distance_matching(cycle(6), 2, MatchingMode::exact);
    EXPECT_EQ(c6.size, 2u);
    EXPECT_TRUE(c6.exact);
    EXPECT_EQ(distance_matching(complete_bipartite(3, 3), 2, MatchingMode::exact).size, 1u);
    for (std::uint32_t t = 1; t <= 4; ++t)
        EXPECT_EQ(distance_matching(path(2), t, MatchingMode::exact).size, 1u);
}

TEST(DistanceMatching, ExactMatchesSubsetEnumeration)
{
    std::vector<Instance> instances;
    for (const auto& [name, g] : oracle::small_corpus())
        if (g.edge_count() <= 20)
            for (std::uint32_t t = 1; t <= 3; ++t)
                instances.push_back({name, g, t});
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        instances.push_back({"rand" + std::to_string(seed), oracle::random_bounded_degree(14, 3, 40, 70 + seed), 1});
    for (const auto& [name, g, t] : instances) {
        if (g.edge_count() > 20)
            continue;
        ConflictGraph cg(g, t);
        auto exact = distance_matching(cg, MatchingMode::exact);
        auto greedy = distance_matching(cg, MatchingMode::greedy);
        ASSERT_TRUE(exact.exact);
        EXPECT_EQ(exact.size, oracle::brute_max_independent(matrix_of(cg))) << name << " t=" << t;
        EXPECT_LE(greedy.size, exact.size);
        EXPECT_TRUE(is_distance_matching(g, t, exact.edges)) << name;
        EXPECT_TRUE(is_distance_matching(g, t, greedy.edges)) << name;
    }
}

TEST(BoundReport, Examples)
{
    struct Case {
        Graph g;
        std::uint32_t t;
        std::size_t m, nu, lower;
    };
    std::vector<Case> cases{
        {complete_bipartite(3, 3), 2, 9, 1, 9},
        {projective_plane_incidence(2), 3, 21, 1, 21},
        {cycle(6), 2, 6, 2, 3},
    };
    for (const auto& [g, t, m, nu, lower] : cases) {
        ConflictGraph cg(g, t);
        auto best = exact_chromatic(cg);
        auto r = bound_report(g, t, best.colouring, distance_matching(cg, MatchingMode::exact));
        EXPECT_EQ(r.m, m);
        EXPECT_EQ(r.nu_t, nu);
        ASSERT_TRUE(r.lower_bound.has_value());
        EXPECT_EQ(*r.lower_bound, lower);
        EXPECT_EQ(r.achieved, lower);
        EXPECT_EQ(r.trivial_upper, trivial_colour_bound(g.max_degree(), t));
        EXPECT_LE(r.achieved, r.trivial_upper);
    }
}

TEST(BoundReport, GreedyMatchingSuppressesLowerBound)
{
    auto g = cycle(6);
    ConflictGraph cg(g, 2);
    auto r = bound_report(g, 2, dsatur_colour(cg), distance_matching(cg, MatchingMode::greedy));
    EXPECT_FALSE(r.lower_bound.has_value());
    EXPECT_DOUBLE_EQ(r.theorem_upper, (2.0 - 0.00008) * 4.0);
}

TEST(BoundReport, RejectsInvalidColouring)
{
    auto g = cycle(6);
    auto nu = distance_matching(g, 2, MatchingMode::exact);
    EXPECT_THROW(bound_report(g, 2, Colouring({0, 1, 0, 1, 0, 1}), nu), ColouringError);
}

TEST(ColouringFile, RoundTrip)
{
    Colouring c({3, 0, 2, 1});
    std::stringstream ss;
    write_colouring(ss, c);
    EXPECT_EQ(ss.str(), "0 3\n1 0\n2 2\n3 1\n");
    EXPECT_EQ(read_colouring(ss, 4), c);
}

TEST(ColouringFile, Errors)
{
    auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream is(text);
        try {
            read_colouring(is, 3);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("0 1\n3 1\n"), 2u);
    EXPECT_EQ(line_of("0 1\n0 2\n"), 2u);
    EXPECT_EQ(line_of("0 x\n"), 1u);
    EXPECT_EQ(line_of("0 -1\n"), 1u);
    EXPECT_EQ(line_of("0 1 2\n"), 1u);

    std::istringstream partial("0 1\n2 1\n");
    auto c = read_colouring(partial, 3);
    EXPECT_FALSE(c.assigned(edge_id(1)));
}
