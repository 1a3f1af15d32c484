#pragma once

// Maximum clique by branch and bound with greedy colouring bounds
// (Tomita-Seki MCQ ordering).

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <vector>

namespace distcol::detail {

using Bits = boost::dynamic_bitset<std::uint64_t>;

struct CliqueResult {
    std::vector<std::size_t> vertices;
    bool exact = true;
    std::uint64_t nodes = 0;
};

class CliqueSearch {
public:
    CliqueSearch(const std::vector<Bits>& adjacency, std::uint64_t budget)
        : adj_(adjacency), budget_(budget)
    {
    }

    CliqueResult run()
    {
        Bits all(adj_.size());
        all.set();
        if (adj_.empty())
            return {};
        expand(all);
        return {best_, !aborted_, nodes_};
    }

private:
    void expand(Bits candidates)
    {
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        Bits uncoloured = candidates;
        std::size_t colour = 0;
        while (uncoloured.any()) {
            ++colour;
            Bits q = uncoloured;
            for (auto v = q.find_first(); v != Bits::npos; v = q.find_first()) {
                q.reset(v);
                q -= adj_[v];
                uncoloured.reset(v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (aborted_ || current_.size() + bound[i] <= best_.size())
                return;
            auto v = order[i];
            current_.push_back(v);
            Bits next = candidates & adj_[v];
            if (next.none()) {
                if (current_.size() > best_.size())
                    best_ = current_;
            } else {
                expand(next);
            }
            current_.pop_back();
            candidates.reset(v);
        }
    }

    const std::vector<Bits>& adj_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
};

/// The returned clique is always a clique; it is maximum iff exact.
inline CliqueResult max_clique(const std::vector<Bits>& adjacency, std::uint64_t budget)
{
    return CliqueSearch(adjacency, budget).run();
}

} // namespace distcol::detail
