#pragma once

// Graph families: cycles, paths, complete bipartite graphs, blown-up 5-cycles,
// Hamming graphs, point-line incidence graphs of PG(2, q), and random graphs
// of prescribed girth obtained by deleting short cycles and high-degree vertices.

#include "distcol/graph.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace distcol {

class ConstructionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline Graph cycle(std::size_t n)
{
    if (n < 3)
        throw ConstructionError("cycle needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return Graph(n, pairs);
}

inline Graph path(std::size_t n)
{
    if (n < 2)
        throw ConstructionError("path needs n >= 2");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i + 1 < n; ++i)
        pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    return Graph(n, pairs);
}

/// K_{a,b}: parts 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(std::size_t a, std::size_t b)
{
    if (a < 1 || b < 1)
        throw ConstructionError("complete bipartite graph needs both sides >= 1");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
    return Graph(a + b, pairs);
}

/// Five independent parts of size s (part p holds p*s..p*s+s-1), with every
/// pair between cyclically consecutive parts joined. 2s-regular, 5s^2 edges.
inline Graph blown_up_c5(std::size_t s)
{
    if (s < 1)
        throw ConstructionError("blown-up 5-cycle needs part size >= 1");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t p = 0; p < 5; ++p) {
        auto q = (p + 1) % 5;
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                pairs.emplace_back(static_cast<Vertex>(p * s + i), static_cast<Vertex>(q * s + j));
    }
    return Graph(5 * s, pairs);
}

inline constexpr std::size_t kDefaultHammingCap = std::size_t{1} << 20;

/// H(d, q): words of length d over q letters (vertex id = base-q value),
/// adjacent iff they differ in exactly one position.
inline Graph hamming(std::size_t d, std::size_t q, std::size_t max_vertices = kDefaultHammingCap)
{
    if (d < 1 || q < 2)
        throw ConstructionError("Hamming graph needs d >= 1 and q >= 2");
    std::size_t n = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (n > max_vertices / q)
            throw ConstructionError("Hamming graph exceeds " + std::to_string(max_vertices) + " vertices");
        n *= q;
    }
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t place = 1;
        for (std::size_t pos = 0; pos < d; ++pos, place *= q) {
            auto digit = (v / place) % q;
            for (auto other = digit + 1; other < q; ++other)
                pairs.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + (other - digit) * place));
        }
    }
    return Graph(n, pairs);
}

inline bool is_prime(std::uint64_t q)
{
    if (q < 2)
        return false;
    for (std::uint64_t p = 2; p * p <= q; ++p)
        if (q % p == 0)
            return false;
    return true;
}

/// Point-line incidence graph of PG(2, q), q prime. Points are vertices
/// 0..q^2+q, lines follow; both are nonzero vectors of (Z/q)^3 normalised so
/// that the first nonzero coordinate is 1. A point lies on a line iff their
/// dot product vanishes mod q.
inline Graph projective_plane_incidence(std::uint64_t q)
{
    if (!is_prime(q))
        throw ConstructionError("projective plane order must be prime, got " + std::to_string(q));
    if (q > 1000)
        throw ConstructionError("projective plane order too large");
    using Vec = std::array<std::uint64_t, 3>;
    std::vector<Vec> normalised;
    for (std::uint64_t x = 0; x < q; ++x)
        for (std::uint64_t y = 0; y < q; ++y)
            for (std::uint64_t z = 0; z < q; ++z) {
                Vec v{x, y, z};
                if (x == 1 || (x == 0 && y == 1) || (x == 0 && y == 0 && z == 1))
                    normalised.push_back(v);
            }
    const auto k = normalised.size(); // q^2 + q + 1
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t l = 0; l < k; ++l) {
            const auto& a = normalised[p];
            const auto& b = normalised[l];
            if ((a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q == 0)
                pairs.emplace_back(static_cast<Vertex>(p), static_cast<Vertex>(k + l));
        }
    return Graph(2 * k, pairs);
}

/// d = (ln n)^(1/(g+1)), the asymptotic parameter choice for the random
/// construction. Tiny at practical n; random_high_girth takes d freely.
inline double asymptotic_random_degree(std::size_t n, std::uint32_t g)
{
    return std::pow(std::log(static_cast<double>(n)), 1.0 / (g + 1.0));
}

/// Vertices of degree >= this are deleted by random_high_girth.
inline double high_degree_threshold(double d) { return d + d / std::log(d); }

namespace detail {

    /// Edges lying on at least one cycle of length < g.
    inline std::vector<bool> edges_on_short_cycles(const Graph& g, std::uint32_t girth_target)
    {
        std::vector<bool> marked(g.edge_count(), false);
        if (girth_target <= 3)
            return marked;
        // Edge uv is on a cycle of length < g iff u and v are joined by a
        // path of length <= g-2 avoiding uv.
        const std::uint32_t reach = girth_target - 2;
        constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
        std::vector<std::uint32_t> dist(g.vertex_count(), kUnseen);
        std::vector<Vertex> queue;
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            auto [u, v] = g.endpoints(edge_id(i));
            queue.assign({u});
            dist[u] = 0;
            bool found = false;
            for (std::size_t head = 0; head < queue.size() && !found; ++head) {
                auto x = queue[head];
                if (dist[x] == reach)
                    continue;
                for (auto [y, e] : g.incidences(x)) {
                    if (index(e) == i || dist[y] != kUnseen)
                        continue;
                    if (y == v) {
                        found = true;
                        break;
                    }
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
            for (auto x : queue)
                dist[x] = kUnseen;
            marked[i] = found;
        }
        return marked;
    }

} // namespace detail

struct RandomGirthStats {
    std::size_t sampled_edges = 0;
    std::size_t short_cycle_edges_removed = 0;
    std::size_t removal_passes = 0;
    std::size_t high_degree_vertices_removed = 0;
};

/// Samples G(n, d/n), deletes every edge on a cycle shorter than g (all marked
/// edges at once, repeated until the girth is at least g), then deletes every
/// vertex of degree >= d + d/ln d. Surviving vertices are renumbered in order.
/// The result has girth >= g and max degree < d + d/ln d.
inline Graph random_high_girth(std::size_t n, double d, std::uint32_t g, std::uint64_t seed,
    RandomGirthStats* stats = nullptr)
{
    if (g < 3 || n < g)
        throw ConstructionError("random_high_girth needs n >= g >= 3");
    if (!(d >= 2.0) || d > static_cast<double>(n))
        throw ConstructionError("random_high_girth needs 2 <= d <= n");
    RandomGirthStats local;
    auto& st = stats ? *stats : local;
    st = {};

    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(d / static_cast<double>(n));
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng))
                pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    st.sampled_edges = pairs.size();

    Graph graph(n, pairs);
    while (true) {
        auto marked = detail::edges_on_short_cycles(graph, g);
        std::vector<std::pair<Vertex, Vertex>> kept;
        for (std::size_t i = 0; i < graph.edge_count(); ++i)
            if (!marked[i])
                kept.push_back(graph.endpoints(edge_id(i)));
        if (kept.size() == graph.edge_count())
            break;
        st.short_cycle_edges_removed += graph.edge_count() - kept.size();
        ++st.removal_passes;
        graph = Graph(n, kept);
    }

    const double threshold = high_degree_threshold(d);
    std::vector<Vertex> relabel(n, std::numeric_limits<Vertex>::max());
    std::size_t survivors = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (static_cast<double>(graph.degree(v)) >= threshold)
            ++st.high_degree_vertices_removed;
        else
            relabel[v] = static_cast<Vertex>(survivors++);
    }
    std::vector<std::pair<Vertex, Vertex>> kept;
    for (auto [u, v] : graph.edges())
        if (relabel[u] != std::numeric_limits<Vertex>::max() && relabel[v] != std::numeric_limits<Vertex>::max())
            kept.emplace_back(relabel[u], relabel[v]);
    return Graph(survivors, kept);
}

/// k_t = n / (2 d^(t-1)) * (t ln d - ln ln d - ln(e t) + eps), natural logs.
inline double k_t_formula(double n, double d, std::uint32_t t, double eps)
{
    if (t < 2)
        throw ConstructionError("k_t needs t >= 2");
    if (!(d > 1.0) || !(std::log(d) > 1.0))
        throw ConstructionError("k_t needs ln d > 1");
    if (!(n > 0.0))
        throw ConstructionError("k_t needs n > 0");
    const double ln_d = std::log(d);
    return n / (2.0 * std::pow(d, t - 1.0))
        * (t * ln_d - std::log(ln_d) - std::log(std::exp(1.0) * t) + eps);
}

} // namespace distcol
