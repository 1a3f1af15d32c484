#pragma once

#include "distcol/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace distcol {

/// 1 + 2 * sum_{j=1..t} (maxdeg-1)^j: the first-fit colour bound for (L(G))^t.
inline std::uint64_t trivial_colour_bound(std::size_t max_degree, std::uint32_t t)
{
    std::uint64_t base = max_degree == 0 ? 0 : max_degree - 1;
    std::uint64_t power = 1, sum = 0;
    for (std::uint32_t j = 1; j <= t; ++j) {
        power *= base;
        sum += power;
    }
    return 1 + 2 * sum;
}

/// The t-th power of the line graph of a base graph. Vertex i is EdgeId i of
/// the base graph. The base graph must outlive this object.
class ConflictGraph {
public:
    ConflictGraph(const Graph& base, std::uint32_t t)
        : base_(&base), t_(t), adjacency_(base.edge_count())
    {
        if (t == 0)
            throw GraphError("conflict graph needs t >= 1");
        EdgeBall ball(base);
        for (std::size_t i = 0; i < base.edge_count(); ++i) {
            auto& adj = adjacency_[i];
            ball.visit(edge_id(i), t, [&](EdgeId f, std::uint32_t) { adj.push_back(f); });
            std::sort(adj.begin(), adj.end());
            max_degree_ = std::max(max_degree_, adj.size());
            edge_count_ += adj.size();
        }
        edge_count_ /= 2;
    }

    const Graph& base() const noexcept { return *base_; }
    std::uint32_t t() const noexcept { return t_; }

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t max_degree() const noexcept { return max_degree_; }

    std::span<const EdgeId> neighbours(EdgeId e) const { return adjacency_.at(index(e)); }
    std::size_t degree(EdgeId e) const { return adjacency_.at(index(e)).size(); }

    bool adjacent(EdgeId e, EdgeId f) const
    {
        auto adj = neighbours(e);
        return std::binary_search(adj.begin(), adj.end(), f);
    }

private:
    const Graph* base_;
    std::uint32_t t_;
    std::vector<std::vector<EdgeId>> adjacency_;
    std::size_t max_degree_ = 0;
    std::size_t edge_count_ = 0;
};

inline ConflictGraph conflict_graph(const Graph& g, std::uint32_t t) { return ConflictGraph(g, t); }

} // namespace distcol
