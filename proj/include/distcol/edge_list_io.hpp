#pragma once

// DIMACS-style edge lists: "p edge <n> <m>" then m lines "e <u> <v>", 1-based.

#include "distcol/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace distcol {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

inline void write_edge_list(std::ostream& os, const Graph& g)
{
    os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

/// Comment lines ('c') and blank lines are skipped. Edge ids follow file order.
inline Graph read_edge_list(std::istream& is)
{
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t n = 0, m = 0;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::unordered_set<std::uint64_t> seen;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind == "c")
            continue;
        if (kind == "p") {
            if (have_header)
                throw ParseError(lineno, "duplicate header");
            std::string fmt;
            long long nn = -1, mm = -1;
            if (!(ls >> fmt >> nn >> mm) || (fmt != "edge" && fmt != "edges") || nn < 0 || mm < 0)
                throw ParseError(lineno, "expected 'p edge <n> <m>'");
            n = static_cast<std::size_t>(nn);
            m = static_cast<std::size_t>(mm);
            have_header = true;
        } else if (kind == "e") {
            if (!have_header)
                throw ParseError(lineno, "edge before header");
            long long u = 0, v = 0;
            if (!(ls >> u >> v))
                throw ParseError(lineno, "expected 'e <u> <v>'");
            if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
                throw ParseError(lineno, "vertex out of range 1.." + std::to_string(n));
            if (u == v)
                throw ParseError(lineno, "loop at vertex " + std::to_string(u));
            auto a = static_cast<Vertex>(u - 1), b = static_cast<Vertex>(v - 1);
            if (!seen.insert((std::uint64_t{std::min(a, b)} << 32) | std::max(a, b)).second)
                throw ParseError(lineno, "parallel edge " + std::to_string(u) + " " + std::to_string(v));
            pairs.emplace_back(a, b);
        } else {
            throw ParseError(lineno, "unknown line type '" + kind + "'");
        }
    }
    if (!have_header)
        throw ParseError(lineno, "missing 'p edge' header");
    if (pairs.size() != m)
        throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, found "
                + std::to_string(pairs.size()));
    return Graph(n, pairs);
}

} // namespace distcol
