#pragma once

// Simple undirected graphs with dense vertex and edge ids, plus the
// distance notions used for distance-t edge colouring.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace distcol {

using Vertex = std::uint32_t;

/// Dense edge identifier, 0..m-1 in insertion order.
enum class EdgeId : std::uint32_t {};

constexpr std::uint32_t index(EdgeId e) noexcept { return static_cast<std::uint32_t>(e); }
constexpr EdgeId edge_id(std::size_t i) noexcept { return static_cast<EdgeId>(i); }

/// Shortest-path length; std::nullopt means unreachable.
using Distance = std::optional<std::uint32_t>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Incidence {
    Vertex neighbour;
    EdgeId edge;
};

class Graph {
public:
    Graph() = default;

    /// Rejects loops, parallel edges and out-of-range endpoints.
    Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs)
        : adjacency_(n)
    {
        if (n > std::numeric_limits<Vertex>::max())
            throw GraphError("vertex count too large");
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(pairs.size() * 2);
        edges_.reserve(pairs.size());
        for (auto [u, v] : pairs) {
            if (u >= n || v >= n)
                throw GraphError(describe("vertex out of range", u, v));
            if (u == v)
                throw GraphError(describe("loop", u, v));
            auto key = (std::uint64_t{std::min(u, v)} << 32) | std::max(u, v);
            if (!seen.insert(key).second)
                throw GraphError(describe("parallel edge", u, v));
            auto e = edge_id(edges_.size());
            edges_.emplace_back(u, v);
            adjacency_[u].push_back({v, e});
            adjacency_[v].push_back({u, e});
        }
    }

    Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs)
        : Graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()))
    {
    }

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const std::pair<Vertex, Vertex>> edges() const noexcept { return edges_; }
    std::pair<Vertex, Vertex> endpoints(EdgeId e) const { return edges_.at(index(e)); }

    /// G(v) together with N(v): one entry per incident edge.
    std::span<const Incidence> incidences(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    std::size_t max_degree() const noexcept
    {
        std::size_t best = 0;
        for (const auto& a : adjacency_)
            best = std::max(best, a.size());
        return best;
    }

    bool incident(EdgeId e, Vertex v) const
    {
        auto [a, b] = endpoints(e);
        return a == v || b == v;
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    static std::string describe(const char* what, Vertex u, Vertex v)
    {
        std::ostringstream os;
        os << what << ": (" << u << ", " << v << ")";
        return os.str();
    }

    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

inline Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs)
{
    return Graph(n, pairs);
}

/// Multi-source BFS. Vertices further than max_depth stay unreachable.
inline std::vector<Distance> bfs_distances(const Graph& g, std::span<const Vertex> sources,
    std::uint32_t max_depth = std::numeric_limits<std::uint32_t>::max())
{
    std::vector<Distance> dist(g.vertex_count());
    std::deque<Vertex> queue;
    for (auto s : sources) {
        if (s >= g.vertex_count())
            throw GraphError("source vertex out of range");
        if (!dist[s]) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        if (*dist[x] == max_depth)
            continue;
        for (auto [y, e] : g.incidences(x)) {
            if (!dist[y]) {
                dist[y] = *dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

inline Distance vertex_distance(const Graph& g, Vertex u, Vertex v)
{
    if (v >= g.vertex_count())
        throw GraphError("vertex out of range");
    Vertex src[] = {u};
    return bfs_distances(g, src)[v];
}

inline Distance min_distance(Distance a, Distance b)
{
    if (!a)
        return b;
    if (!b)
        return a;
    return std::min(*a, *b);
}

inline Distance vertex_edge_distance(const Graph& g, Vertex v, EdgeId e)
{
    auto [a, b] = g.endpoints(e);
    Vertex src[] = {v};
    auto dist = bfs_distances(g, src);
    return min_distance(dist[a], dist[b]);
}

/// 0 for e == f, otherwise 1 + the least vertex distance between endpoints.
/// Agrees with the distance between e and f in the line graph.
inline Distance edge_distance(const Graph& g, EdgeId e, EdgeId f)
{
    auto [a, b] = g.endpoints(e);
    auto [c, d] = g.endpoints(f);
    if (e == f)
        return 0;
    Vertex src[] = {a, b};
    auto dist = bfs_distances(g, src);
    auto best = min_distance(dist[c], dist[d]);
    if (!best)
        return std::nullopt;
    return *best + 1;
}

/// Calls visit(f, distance) for every edge f != e with edge_distance(e, f) <= t.
/// Runs a BFS of depth t-1 from both endpoints of e; scratch buffers are reused.
class EdgeBall {
public:
    explicit EdgeBall(const Graph& g)
        : g_(&g), dist_(g.vertex_count(), kUnseen), edge_stamp_(g.edge_count(), 0)
    {
    }

    template <typename Visit>
    void visit(EdgeId root, std::uint32_t t, Visit&& visit)
    {
        if (t == 0)
            return;
        ++stamp_;
        auto [a, b] = g_->endpoints(root);
        touched_.clear();
        frontier_.clear();
        for (auto s : {a, b}) {
            dist_[s] = 0;
            touched_.push_back(s);
            frontier_.push_back(s);
        }
        edge_stamp_[index(root)] = stamp_;
        // Vertices reached in BFS order, so the first time an edge is seen it
        // is seen from its closer endpoint.
        for (std::size_t head = 0; head < frontier_.size(); ++head) {
            auto x = frontier_[head];
            auto dx = dist_[x];
            for (auto [y, f] : g_->incidences(x)) {
                if (edge_stamp_[index(f)] != stamp_) {
                    edge_stamp_[index(f)] = stamp_;
                    visit(f, dx + 1);
                }
                if (dist_[y] == kUnseen && dx + 1 <= t - 1) {
                    dist_[y] = dx + 1;
                    touched_.push_back(y);
                    frontier_.push_back(y);
                }
            }
        }
        for (auto v : touched_)
            dist_[v] = kUnseen;
    }

private:
    static constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

    const Graph* g_;
    std::vector<std::uint32_t> dist_;
    std::vector<std::uint64_t> edge_stamp_;
    std::uint64_t stamp_ = 0;
    std::vector<Vertex> touched_;
    std::vector<Vertex> frontier_;
};

/// Length of a shortest cycle, or std::nullopt for forests.
/// Cycles of length >= limit are not looked for; pass a limit to stop early.
inline std::optional<std::uint32_t> girth(const Graph& g,
    std::uint32_t limit = std::numeric_limits<std::uint32_t>::max())
{
    const auto n = g.vertex_count();
    std::uint32_t best = limit;
    std::vector<std::uint32_t> dist(n);
    std::vector<EdgeId> parent_edge(n);
    std::vector<Vertex> queue;
    constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), kUnseen);
        queue.assign({root});
        dist[root] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto x = queue[head];
            // Any cycle found from here on has length >= 2*dist[x]+1.
            if (2 * dist[x] + 1 >= best)
                break;
            for (auto [y, e] : g.incidences(x)) {
                if (x != root && e == parent_edge[x])
                    continue;
                if (dist[y] == kUnseen) {
                    dist[y] = dist[x] + 1;
                    parent_edge[y] = e;
                    queue.push_back(y);
                } else {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == limit)
        return std::nullopt;
    return best;
}

/// Vertices are the edge ids of g; adjacent iff the edges share an endpoint.
inline Graph line_graph(const Graph& g)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto inc = g.incidences(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                auto a = index(inc[i].edge), b = index(inc[j].edge);
                pairs.emplace_back(std::min(a, b), std::max(a, b));
            }
    }
    // Simple graphs: two edges share at most one endpoint, so no duplicates.
    std::sort(pairs.begin(), pairs.end());
    return Graph(g.edge_count(), pairs);
}

} // namespace distcol
