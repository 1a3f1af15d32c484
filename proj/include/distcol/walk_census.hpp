#pragma once

// Walk counts and the per-root structural quantities of the conflict graph
// (L(G))^t: the neighbourhood N^ of a root edge, the edges S^ it spans,
// distance layers A_0..A_t, the set B_t, and the heavy/light edge split.
//
// Walks are directed vertex-edge sequences (v0, e1, v1, ..., el, vl) that may
// revisit vertices and edges. A single edge therefore carries two walks of
// length one, one per orientation.

#include "distcol/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace distcol {

class EdgeSet {
public:
    explicit EdgeSet(std::size_t edge_count) : mask_(edge_count, false) {}

    EdgeSet(std::size_t edge_count, std::span<const EdgeId> members) : EdgeSet(edge_count)
    {
        for (auto e : members)
            insert(e);
    }

    static EdgeSet all(const Graph& g)
    {
        EdgeSet s(g.edge_count());
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            s.insert(edge_id(i));
        return s;
    }

    void insert(EdgeId e)
    {
        if (mask_.at(index(e)))
            return;
        mask_[index(e)] = true;
        members_.insert(std::lower_bound(members_.begin(), members_.end(), e), e);
    }

    bool contains(EdgeId e) const { return index(e) < mask_.size() && mask_[index(e)]; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    std::span<const EdgeId> members() const noexcept { return members_; }
    std::size_t universe() const noexcept { return mask_.size(); }

private:
    std::vector<bool> mask_;
    std::vector<EdgeId> members_;
};

namespace detail {

    // Arc 2e runs first->second endpoint of edge e, arc 2e+1 the reverse.
    inline std::uint32_t arc_leaving(const Graph& g, Vertex from, EdgeId e)
    {
        return 2 * index(e) + (g.endpoints(e).first == from ? 0u : 1u);
    }

    inline Vertex arc_head(const Graph& g, std::uint32_t arc)
    {
        auto [a, b] = g.endpoints(edge_id(arc / 2));
        return arc % 2 == 0 ? b : a;
    }

    /// Extends every counted walk by one edge, backtracking included.
    inline void extend_walks(const Graph& g, std::vector<std::uint64_t>& arcs)
    {
        std::vector<std::uint64_t> inflow(g.vertex_count(), 0);
        for (std::uint32_t arc = 0; arc < arcs.size(); ++arc)
            if (arcs[arc] != 0)
                inflow[arc_head(g, arc)] += arcs[arc];
        for (Vertex x = 0; x < g.vertex_count(); ++x)
            for (auto inc : g.incidences(x))
                arcs[arc_leaving(g, x, inc.edge)] = inflow[x];
    }

    inline void require_t(std::uint32_t t, std::uint32_t minimum)
    {
        if (t < minimum)
            throw std::invalid_argument("t must be at least " + std::to_string(minimum));
    }

    inline std::uint64_t ipow(std::uint64_t base, std::uint32_t exp)
    {
        std::uint64_t r = 1;
        while (exp-- > 0)
            r *= base;
        return r;
    }

} // namespace detail

/// w_l(X, Y): walks of length 1..max_length whose first edge is in X and
/// last edge is in Y.
inline std::uint64_t count_walks(const Graph& g, const EdgeSet& first, const EdgeSet& last,
    std::uint32_t max_length)
{
    detail::require_t(max_length, 1);
    std::vector<std::uint64_t> arcs(2 * g.edge_count(), 0);
    for (auto e : first.members()) {
        arcs[2 * index(e)] = 1;
        arcs[2 * index(e) + 1] = 1;
    }
    std::uint64_t total = 0;
    for (std::uint32_t len = 1; len <= max_length; ++len) {
        for (auto e : last.members())
            total += arcs[2 * index(e)] + arcs[2 * index(e) + 1];
        if (len < max_length)
            detail::extend_walks(g, arcs);
    }
    return total;
}

/// max{w_{t+1}(e, f) - 1, 0}
inline std::uint64_t tau(const Graph& g, EdgeId e, EdgeId f, std::uint32_t t)
{
    detail::require_t(t, 1);
    auto w = count_walks(g, EdgeSet(g.edge_count(), std::span(&e, 1)),
        EdgeSet(g.edge_count(), std::span(&f, 1)), t + 1);
    return w == 0 ? 0 : w - 1;
}

namespace detail {

    // Walks leaving u through an edge of first_edges, indexed by final arc.
    template <typename OnLength>
    void walks_from(const Graph& g, const EdgeSet& first_edges, Vertex u, std::uint32_t max_length,
        OnLength&& on_length)
    {
        std::vector<std::uint64_t> arcs(2 * g.edge_count(), 0);
        for (auto inc : g.incidences(u))
            if (first_edges.contains(inc.edge))
                arcs[arc_leaving(g, u, inc.edge)] = 1;
        for (std::uint32_t len = 1; len <= max_length; ++len) {
            on_length(arcs);
            if (len < max_length)
                extend_walks(g, arcs);
        }
    }

} // namespace detail

/// sigma_t(u, v): u-v walks of length at most t whose first edge is in n_hat.
inline std::uint64_t sigma(const Graph& g, const EdgeSet& n_hat, Vertex u, Vertex v, std::uint32_t t)
{
    detail::require_t(t, 1);
    std::uint64_t total = 0;
    detail::walks_from(g, n_hat, u, t, [&](const std::vector<std::uint64_t>& arcs) {
        for (auto inc : g.incidences(v))
            total += arcs[detail::arc_leaving(g, inc.neighbour, inc.edge)];
    });
    return total;
}

/// sigma_t(u; f, v): as sigma, with the last edge fixed to f (entering v).
inline std::uint64_t sigma_via(const Graph& g, const EdgeSet& n_hat, Vertex u, EdgeId f, Vertex v,
    std::uint32_t t)
{
    detail::require_t(t, 1);
    if (!g.incident(f, v))
        return 0;
    auto [a, b] = g.endpoints(f);
    auto entering = detail::arc_leaving(g, a == v ? b : a, f);
    std::uint64_t total = 0;
    detail::walks_from(g, n_hat, u, t,
        [&](const std::vector<std::uint64_t>& arcs) { total += arcs[entering]; });
    return total;
}

struct DistanceLayers {
    EdgeId root;
    std::uint32_t t;
    /// layers[i] = A_i, sorted; i = 0..t.
    std::vector<std::vector<Vertex>> layers;

    std::vector<std::size_t> sizes() const
    {
        std::vector<std::size_t> s;
        for (const auto& l : layers)
            s.push_back(l.size());
        return s;
    }
};

inline DistanceLayers distance_layers(const Graph& g, EdgeId root, std::uint32_t t)
{
    detail::require_t(t, 1);
    auto [a, b] = g.endpoints(root);
    Vertex src[] = {a, b};
    auto dist = bfs_distances(g, src, t);
    DistanceLayers out{root, t, std::vector<std::vector<Vertex>>(t + 1)};
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (dist[v])
            out.layers[*dist[v]].push_back(v);
    return out;
}

/// N^: edges at edge distance 1..t from root, i.e. the root's conflict-graph
/// neighbourhood (the root itself excluded).
inline EdgeSet conflict_neighbourhood(const Graph& g, EdgeId root, std::uint32_t t)
{
    detail::require_t(t, 1);
    EdgeSet out(g.edge_count());
    EdgeBall(g).visit(root, t, [&](EdgeId f, std::uint32_t) { out.insert(f); });
    return out;
}

/// B_t: vertices of A_t whose degree in (V, N^) is at least maxdeg/2.
inline std::vector<Vertex> b_t_set(const Graph& g, EdgeId root, std::uint32_t t)
{
    auto layers = distance_layers(g, root, t);
    auto n_hat = conflict_neighbourhood(g, root, t);
    const auto max_degree = g.max_degree();
    std::vector<Vertex> out;
    for (auto u : layers.layers[t]) {
        std::size_t deg = 0;
        for (auto inc : g.incidences(u))
            deg += n_hat.contains(inc.edge) ? 1 : 0;
        if (2 * deg >= max_degree)
            out.push_back(u);
    }
    return out;
}

inline constexpr double kDefaultSparsityDelta = 1.0 / 618.0;

struct SparsityReport {
    EdgeId root;
    std::uint32_t t;
    double delta;
    std::size_t n_hat;
    std::size_t s_hat;
    /// (2 - 2 delta) * maxdeg^(2t)
    double bound;
    bool pass;
    std::size_t b_t_size;
    std::vector<std::size_t> layer_sizes;
};

/// Edges of (L(G))^t with both ends in the given set.
inline std::size_t spanned_conflict_edges(const Graph& g, const EdgeSet& members, std::uint32_t t)
{
    EdgeBall ball(g);
    std::size_t count = 0;
    for (auto f : members.members())
        ball.visit(f, t, [&](EdgeId h, std::uint32_t) {
            if (index(h) > index(f) && members.contains(h))
                ++count;
        });
    return count;
}

/// The pass flag is informational: the (2 - 2 delta) bound only applies once
/// the maximum degree is large.
inline SparsityReport sparsity_audit(const Graph& g, EdgeId root, std::uint32_t t,
    double delta = kDefaultSparsityDelta)
{
    detail::require_t(t, 1);
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie in (0, 1)");
    auto n_hat = conflict_neighbourhood(g, root, t);
    SparsityReport r{root, t, delta, n_hat.size(), spanned_conflict_edges(g, n_hat, t), 0.0, false,
        b_t_set(g, root, t).size(), distance_layers(g, root, t).sizes()};
    r.bound = (2.0 - 2.0 * delta) * std::pow(static_cast<double>(g.max_degree()), 2.0 * t);
    r.pass = static_cast<double>(r.s_hat) <= r.bound;
    return r;
}

struct HeavyLightReport {
    EdgeId root;
    std::uint32_t t;
    /// Every edge at edge distance < t from the root, the root included.
    std::vector<EdgeId> heavy;
    /// Members of N^ at edge distance exactly t.
    std::vector<EdgeId> light;
    /// |heavy ∩ N^|
    std::size_t heavy_count;
    bool claim4; // each vertex of A_{t-1} meets at most one heavy edge
    bool claim5; // no light edge has both ends in A_{t-1}
    bool claim6; // each vertex of A_t has at most two neighbours in A_{t-1}
    bool light_between_top_layers; // light ⊆ [A_{t-1}, A_t]
    /// Max over light f of |{h in N^ : h != f, edge_distance(f, h) <= t}|.
    std::size_t max_light_conflicts;
    std::uint64_t heavy_bound; // 2 maxdeg^(t-1)
    std::uint64_t light_bound; // (3t+2) maxdeg^(t-1)

    bool within_bounds() const { return heavy_count <= heavy_bound && max_light_conflicts <= light_bound; }
    bool claims_hold() const { return claim4 && claim5 && claim6; }
};

/// For graphs of girth >= 2t+1 every claim holds and both bounds are met.
inline HeavyLightReport heavy_light_audit(const Graph& g, EdgeId root, std::uint32_t t)
{
    detail::require_t(t, 2);
    auto [ra, rb] = g.endpoints(root);
    Vertex src[] = {ra, rb};
    auto dist = bfs_distances(g, src, t);
    auto in_layer = [&](Vertex v, std::uint32_t i) { return dist[v] && *dist[v] == i; };
    auto edge_dist = [&](EdgeId f) -> Distance {
        if (f == root)
            return 0;
        auto [a, b] = g.endpoints(f);
        auto d = min_distance(dist[a], dist[b]);
        return d ? Distance(*d + 1) : std::nullopt;
    };

    auto n_hat = conflict_neighbourhood(g, root, t);
    const std::uint64_t maxdeg = g.max_degree();
    HeavyLightReport r{root, t, {}, {}, 0, true, true, true, true, 0,
        2 * detail::ipow(maxdeg, t - 1), (3 * t + 2) * detail::ipow(maxdeg, t - 1)};

    std::vector<bool> heavy(g.edge_count(), false);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto f = edge_id(i);
        auto d = edge_dist(f);
        if (d && *d < t) {
            heavy[i] = true;
            r.heavy.push_back(f);
            if (n_hat.contains(f))
                ++r.heavy_count;
        } else if (n_hat.contains(f)) {
            r.light.push_back(f);
        }
    }

    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in_layer(v, t - 1)) {
            std::size_t heavy_here = 0;
            for (auto inc : g.incidences(v))
                heavy_here += heavy[index(inc.edge)] ? 1 : 0;
            r.claim4 = r.claim4 && heavy_here <= 1;
        }
        if (in_layer(v, t)) {
            std::size_t below = 0;
            for (auto inc : g.incidences(v))
                below += in_layer(inc.neighbour, t - 1) ? 1 : 0;
            r.claim6 = r.claim6 && below <= 2;
        }
    }

    EdgeBall ball(g);
    for (auto f : r.light) {
        auto [a, b] = g.endpoints(f);
        bool a_low = in_layer(a, t - 1), b_low = in_layer(b, t - 1);
        r.claim5 = r.claim5 && !(a_low && b_low);
        bool between = (a_low && in_layer(b, t)) || (b_low && in_layer(a, t));
        r.light_between_top_layers = r.light_between_top_layers && between;

        std::size_t conflicts = 0;
        ball.visit(f, t, [&](EdgeId h, std::uint32_t) { conflicts += n_hat.contains(h) ? 1 : 0; });
        r.max_light_conflicts = std::max(r.max_light_conflicts, conflicts);
    }
    return r;
}

/// Sparsity and heavy/light quantities for one root. The heavy/light part is
/// absent for t = 1.
struct AuditReport {
    SparsityReport sparsity;
    std::optional<HeavyLightReport> heavy_light;
};

inline AuditReport audit(const Graph& g, EdgeId root, std::uint32_t t, double delta = kDefaultSparsityDelta)
{
    AuditReport r{sparsity_audit(g, root, t, delta), std::nullopt};
    if (t >= 2)
        r.heavy_light = heavy_light_audit(g, root, t);
    return r;
}

} // namespace distcol
