#pragma once

// Distance-t edge colourings, i.e. proper vertex colourings of (L(G))^t, and
// distance-t matchings, i.e. independent sets of (L(G))^t.

#include "distcol/conflict_graph.hpp"
#include "distcol/detail/clique.hpp"
#include "distcol/edge_list_io.hpp"
#include "distcol/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace distcol {

using Colour = std::uint32_t;

class ColouringError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Colouring {
public:
    static constexpr Colour kUnassigned = std::numeric_limits<Colour>::max();

    Colouring() = default;
    explicit Colouring(std::size_t edge_count) : colours_(edge_count, kUnassigned) {}
    explicit Colouring(std::vector<Colour> colours) : colours_(std::move(colours)) {}

    std::size_t size() const noexcept { return colours_.size(); }
    Colour operator[](EdgeId e) const { return colours_.at(index(e)); }
    void assign(EdgeId e, Colour c) { colours_.at(index(e)) = c; }
    bool assigned(EdgeId e) const { return colours_.at(index(e)) != kUnassigned; }
    std::span<const Colour> colours() const noexcept { return colours_; }

    /// Number of distinct colours in use.
    std::size_t colour_count() const
    {
        std::vector<Colour> used;
        for (auto c : colours_)
            if (c != kUnassigned)
                used.push_back(c);
        std::sort(used.begin(), used.end());
        return static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
    }

    friend bool operator==(const Colouring&, const Colouring&) = default;

private:
    std::vector<Colour> colours_;
};

struct Violation {
    EdgeId e;
    EdgeId f;
    std::uint32_t distance;
    Colour colour;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every pair e < f at edge distance <= t sharing a colour. Empty iff valid.
inline std::vector<Violation> verify_colouring(const Graph& g, std::uint32_t t, const Colouring& c)
{
    if (t == 0)
        throw ColouringError("t must be at least 1");
    if (c.size() != g.edge_count())
        throw ColouringError("colouring covers " + std::to_string(c.size()) + " edges, graph has "
            + std::to_string(g.edge_count()));
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c.assigned(edge_id(i)))
            throw ColouringError("edge " + std::to_string(i) + " has no colour");
    std::vector<Violation> out;
    EdgeBall ball(g);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto e = edge_id(i);
        std::vector<Violation> here;
        ball.visit(e, t, [&](EdgeId f, std::uint32_t d) {
            if (index(f) > i && c[f] == c[e])
                here.push_back({e, f, d, c[e]});
        });
        std::sort(here.begin(), here.end(), [](const Violation& a, const Violation& b) { return a.f < b.f; });
        out.insert(out.end(), here.begin(), here.end());
    }
    return out;
}

inline std::vector<EdgeId> identity_order(std::size_t edge_count)
{
    std::vector<EdgeId> order(edge_count);
    for (std::size_t i = 0; i < edge_count; ++i)
        order[i] = edge_id(i);
    return order;
}

/// First fit in the given order. Uses at most max_degree + 1 colours.
inline Colouring greedy_colour(const ConflictGraph& cg, std::span<const EdgeId> order)
{
    const auto n = cg.vertex_count();
    if (order.size() != n)
        throw ColouringError("order is not a permutation of the edge ids");
    std::vector<bool> seen(n, false);
    for (auto e : order) {
        if (index(e) >= n || seen[index(e)])
            throw ColouringError("order is not a permutation of the edge ids");
        seen[index(e)] = true;
    }
    Colouring c(n);
    std::vector<std::size_t> blocked(cg.max_degree() + 2, 0);
    std::size_t stamp = 0;
    for (auto e : order) {
        ++stamp;
        for (auto f : cg.neighbours(e))
            if (c.assigned(f))
                blocked[c[f]] = stamp;
        Colour k = 0;
        while (blocked[k] == stamp)
            ++k;
        c.assign(e, k);
    }
    return c;
}

inline Colouring greedy_colour(const ConflictGraph& cg)
{
    auto order = identity_order(cg.vertex_count());
    return greedy_colour(cg, order);
}

/// DSATUR: repeatedly colour the uncoloured vertex of highest saturation,
/// ties to higher degree and then lower id, with the least free colour.
inline Colouring dsatur_colour(const ConflictGraph& cg)
{
    const auto n = cg.vertex_count();
    const auto palette = cg.max_degree() + 1;
    Colouring c(n);
    std::vector<detail::Bits> seen(n, detail::Bits(palette));
    std::vector<std::size_t> saturation(n, 0);
    // (-saturation, -degree, id) so that begin() is the next vertex.
    using Key = std::tuple<long long, long long, std::uint32_t>;
    auto key = [&](std::uint32_t v) {
        return Key{-static_cast<long long>(saturation[v]), -static_cast<long long>(cg.degree(edge_id(v))), v};
    };
    std::set<Key> queue;
    for (std::uint32_t v = 0; v < n; ++v)
        queue.insert(key(v));
    while (!queue.empty()) {
        auto v = std::get<2>(*queue.begin());
        queue.erase(queue.begin());
        Colour k = 0;
        while (seen[v].test(k))
            ++k;
        c.assign(edge_id(v), k);
        for (auto f : cg.neighbours(edge_id(v))) {
            auto u = index(f);
            if (c.assigned(f) || seen[u].test(k))
                continue;
            queue.erase(key(u));
            seen[u].set(k);
            ++saturation[u];
            queue.insert(key(u));
        }
    }
    return c;
}

namespace detail {

    inline std::vector<Bits> adjacency_bits(const ConflictGraph& cg, bool complement)
    {
        const auto n = cg.vertex_count();
        std::vector<Bits> adj(n, Bits(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (auto f : cg.neighbours(edge_id(i)))
                adj[i].set(index(f));
            if (complement) {
                adj[i].flip();
                adj[i].reset(i);
            }
        }
        return adj;
    }

    class ExactColouringSearch {
    public:
        ExactColouringSearch(const ConflictGraph& cg, std::uint64_t budget, Colouring upper,
            std::vector<std::size_t> clique)
            : cg_(cg), n_(cg.vertex_count()), budget_(budget), best_(std::move(upper)),
              best_count_(best_.colour_count()), lower_(std::max<std::size_t>(clique.size(), 1)),
              width_(best_count_), colour_(n_, Colouring::kUnassigned), counts_(n_ * width_, 0),
              saturation_(n_, 0)
        {
            // Clique members get distinct colours up front; this loses no
            // generality and breaks colour symmetry.
            for (std::size_t i = 0; i < clique.size(); ++i)
                assign(static_cast<std::uint32_t>(clique[i]), static_cast<Colour>(i));
            precoloured_ = clique.size();
        }

        void run()
        {
            if (best_count_ > lower_)
                search(precoloured_, precoloured_);
        }

        const Colouring& best() const { return best_; }
        std::size_t best_count() const { return best_count_; }
        std::size_t lower() const { return lower_; }
        bool aborted() const { return aborted_; }
        std::uint64_t nodes() const { return nodes_; }

    private:
        void assign(std::uint32_t v, Colour c)
        {
            colour_[v] = c;
            for (auto f : cg_.neighbours(edge_id(v)))
                if (counts_[index(f) * width_ + c]++ == 0)
                    ++saturation_[index(f)];
        }

        void unassign(std::uint32_t v)
        {
            auto c = colour_[v];
            for (auto f : cg_.neighbours(edge_id(v)))
                if (--counts_[index(f) * width_ + c] == 0)
                    --saturation_[index(f)];
            colour_[v] = Colouring::kUnassigned;
        }

        std::uint32_t pick() const
        {
            std::uint32_t best = 0;
            bool found = false;
            for (std::uint32_t v = 0; v < n_; ++v) {
                if (colour_[v] != Colouring::kUnassigned)
                    continue;
                if (!found || saturation_[v] > saturation_[best]
                    || (saturation_[v] == saturation_[best]
                        && cg_.degree(edge_id(v)) > cg_.degree(edge_id(best)))) {
                    best = v;
                    found = true;
                }
            }
            return best;
        }

        bool finished() const { return aborted_ || best_count_ == lower_; }

        void search(std::size_t coloured, std::size_t used)
        {
            if (coloured == n_) {
                if (used < best_count_) {
                    best_count_ = used;
                    best_ = Colouring(colour_);
                }
                return;
            }
            if (++nodes_ > budget_) {
                aborted_ = true;
                return;
            }
            auto v = pick();
            auto limit = std::min(used + 1, best_count_ - 1);
            for (Colour c = 0; c < limit; ++c) {
                if (counts_[v * width_ + c] != 0)
                    continue;
                assign(v, c);
                search(coloured + 1, std::max<std::size_t>(used, c + 1));
                unassign(v);
                if (finished())
                    return;
            }
        }

        const ConflictGraph& cg_;
        std::size_t n_;
        std::uint64_t budget_;
        Colouring best_;
        std::size_t best_count_;
        std::size_t lower_;
        std::size_t width_;
        std::vector<Colour> colour_;
        std::vector<std::uint32_t> counts_;
        std::vector<std::size_t> saturation_;
        std::size_t precoloured_ = 0;
        std::uint64_t nodes_ = 0;
        bool aborted_ = false;
    };

} // namespace detail

inline constexpr std::uint64_t kDefaultSearchBudget = 20'000'000;

struct ExactColouring {
    /// Colours used by `colouring`; the chromatic number when optimal.
    std::size_t chromatic;
    Colouring colouring;
    bool optimal;
    /// Best proven lower bound (clique size, or chromatic when optimal).
    std::size_t lower_bound;
    std::uint64_t nodes;
};

/// DSATUR branch and bound seeded with a DSATUR colouring and a large clique.
/// If the node budget runs out the best colouring found is returned with
/// optimal = false.
inline ExactColouring exact_chromatic(const ConflictGraph& cg, std::uint64_t budget = kDefaultSearchBudget)
{
    if (cg.vertex_count() == 0)
        return {0, Colouring(0), true, 0, 0};
    auto upper = dsatur_colour(cg);
    auto clique = detail::max_clique(detail::adjacency_bits(cg, false), budget);
    detail::ExactColouringSearch search(cg, budget, std::move(upper), std::move(clique.vertices));
    search.run();
    bool optimal = !search.aborted() || search.best_count() == search.lower();
    return {search.best_count(), search.best(), optimal,
        optimal ? search.best_count() : search.lower(), clique.nodes + search.nodes()};
}

struct ResampleResult {
    /// Present on success; always a valid colouring.
    std::optional<Colouring> colouring;
    std::uint64_t rounds = 0;
};

/// Moser-Tardos style resampling. Start from a uniformly random k-colouring;
/// while some conflict-graph edge is monochromatic, resample both of its ends.
/// A resampled vertex draws uniformly from the colours absent in its
/// neighbourhood, or from all k colours when none is absent.
inline ResampleResult resample_colour(const ConflictGraph& cg, std::uint32_t k, std::uint64_t seed,
    std::uint64_t max_rounds)
{
    if (k == 0)
        throw ColouringError("resampling needs k >= 1");
    const auto n = cg.vertex_count();
    std::mt19937_64 rng(seed);
    std::vector<Colour> colour(n);
    for (auto& c : colour)
        c = std::uniform_int_distribution<Colour>(0, k - 1)(rng);

    std::vector<std::size_t> conflicts(n, 0);
    std::set<std::uint32_t> bad;
    for (std::uint32_t v = 0; v < n; ++v) {
        for (auto f : cg.neighbours(edge_id(v)))
            conflicts[v] += colour[index(f)] == colour[v] ? 1 : 0;
        if (conflicts[v] > 0)
            bad.insert(v);
    }

    auto update = [&](std::uint32_t u, long long delta) {
        conflicts[u] = static_cast<std::size_t>(static_cast<long long>(conflicts[u]) + delta);
        if (conflicts[u] > 0)
            bad.insert(u);
        else
            bad.erase(u);
    };

    std::vector<std::uint64_t> blocked(k, 0);
    std::uint64_t stamp = 0;
    std::vector<Colour> free;
    auto resample = [&](std::uint32_t v) {
        ++stamp;
        for (auto f : cg.neighbours(edge_id(v)))
            blocked[colour[index(f)]] = stamp;
        free.clear();
        for (Colour c = 0; c < k; ++c)
            if (blocked[c] != stamp)
                free.push_back(c);
        Colour next = free.empty()
            ? std::uniform_int_distribution<Colour>(0, k - 1)(rng)
            : free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
        auto old = colour[v];
        if (next == old)
            return;
        long long own = 0;
        for (auto f : cg.neighbours(edge_id(v))) {
            auto u = index(f);
            if (colour[u] == old) {
                update(u, -1);
                --own;
            } else if (colour[u] == next) {
                update(u, +1);
                ++own;
            }
        }
        colour[v] = next;
        update(v, own);
    };

    ResampleResult result;
    while (!bad.empty()) {
        if (result.rounds == max_rounds)
            return result;
        ++result.rounds;
        auto e = *bad.begin();
        std::uint32_t f = 0;
        for (auto h : cg.neighbours(edge_id(e)))
            if (colour[index(h)] == colour[e]) {
                f = index(h);
                break;
            }
        resample(e);
        resample(f);
    }
    result.colouring = Colouring(std::move(colour));
    return result;
}

enum class MatchingMode { greedy, exact };

struct MatchingResult {
    std::vector<EdgeId> edges;
    std::size_t size = 0;
    /// True when the search proved maximality of the size.
    bool exact = false;
};

/// Edges pairwise at distance > t. Greedy gives a maximal set (smallest
/// conflict degree first); exact gives a maximum one unless the budget runs out.
inline MatchingResult distance_matching(const ConflictGraph& cg, MatchingMode mode,
    std::uint64_t budget = kDefaultSearchBudget)
{
    const auto n = cg.vertex_count();
    MatchingResult r;
    if (mode == MatchingMode::exact) {
        auto clique = detail::max_clique(detail::adjacency_bits(cg, true), budget);
        for (auto v : clique.vertices)
            r.edges.push_back(edge_id(v));
        r.exact = clique.exact;
    } else {
        std::vector<EdgeId> order = identity_order(n);
        std::stable_sort(order.begin(), order.end(),
            [&](EdgeId a, EdgeId b) { return cg.degree(a) < cg.degree(b); });
        std::vector<bool> blocked(n, false);
        for (auto e : order) {
            if (blocked[index(e)])
                continue;
            r.edges.push_back(e);
            for (auto f : cg.neighbours(e))
                blocked[index(f)] = true;
        }
        r.exact = n == 0;
    }
    std::sort(r.edges.begin(), r.edges.end());
    r.size = r.edges.size();
    return r;
}

inline MatchingResult distance_matching(const Graph& g, std::uint32_t t, MatchingMode mode,
    std::uint64_t budget = kDefaultSearchBudget)
{
    return distance_matching(ConflictGraph(g, t), mode, budget);
}

inline constexpr double kReferenceEpsilon = 0.00008;

struct BoundReport {
    std::size_t m;
    std::size_t nu_t;
    /// ceil(m / nu_t); only present when nu_t is exact.
    std::optional<std::size_t> lower_bound;
    std::uint64_t trivial_upper;
    /// (2 - epsilon) * maxdeg^t, a reference line only.
    double theorem_upper;
    std::size_t achieved;
};

inline BoundReport bound_report(const Graph& g, std::uint32_t t, const Colouring& best,
    const MatchingResult& nu, double epsilon = kReferenceEpsilon)
{
    if (!verify_colouring(g, t, best).empty())
        throw ColouringError("colouring is not a valid distance-" + std::to_string(t) + " colouring");
    const auto m = g.edge_count();
    BoundReport r{m, nu.size, std::nullopt, trivial_colour_bound(g.max_degree(), t),
        (2.0 - epsilon) * std::pow(static_cast<double>(g.max_degree()), static_cast<double>(t)),
        best.colour_count()};
    if (nu.exact) {
        if (m > 0 && nu.size == 0)
            throw ColouringError("matching of size 0 on a graph with edges");
        r.lower_bound = m == 0 ? 0 : (m + nu.size - 1) / nu.size;
        if (*r.lower_bound > r.achieved)
            throw ColouringError("lower bound " + std::to_string(*r.lower_bound)
                + " exceeds achieved colour count " + std::to_string(r.achieved));
    }
    return r;
}

/// Lines "<edge-id> <colour>" in id order.
inline void write_colouring(std::ostream& os, const Colouring& c)
{
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c.assigned(edge_id(i)))
            os << i << ' ' << c[edge_id(i)] << '\n';
}

/// Edges missing from the file stay unassigned; verify_colouring names them.
inline Colouring read_colouring(std::istream& is, std::size_t edge_count)
{
    Colouring c(edge_count);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c")
            continue;
        std::istringstream fields(line);
        long long e = -1, colour = -1;
        std::string extra;
        if (!(fields >> e >> colour) || (fields >> extra))
            throw ParseError(lineno, "expected '<edge-id> <colour>'");
        if (e < 0 || static_cast<std::size_t>(e) >= edge_count)
            throw ParseError(lineno, "edge id out of range");
        if (colour < 0 || colour >= static_cast<long long>(Colouring::kUnassigned))
            throw ParseError(lineno, "colour out of range");
        if (c.assigned(edge_id(static_cast<std::size_t>(e))))
            throw ParseError(lineno, "edge " + std::to_string(e)
                + " coloured twice");
        c.assign(edge_id(static_cast<std::size_t>(e)), static_cast<Colour>(colour));
    }
    return c;
}

} // namespace distcol
