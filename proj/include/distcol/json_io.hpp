#pragma once

// nlohmann::json conversions for the report types. Field names are part of
// the file format and must not change.

#include "distcol/colouring.hpp"
#include "distcol/graph.hpp"
#include "distcol/walk_census.hpp"

#include <nlohmann/json.hpp>

namespace distcol {

inline void to_json(nlohmann::json& j, const BoundReport& r)
{
    j = nlohmann::json{{"m", r.m}, {"nuT", r.nu_t}};
    if (r.lower_bound)
        j["lowerBound"] = *r.lower_bound;
    j["trivialUpper"] = r.trivial_upper;
    j["theoremUpper"] = r.theorem_upper;
    j["achieved"] = r.achieved;
}

inline void to_json(nlohmann::json& j, const MatchingResult& r)
{
    auto edges = nlohmann::json::array();
    for (auto e : r.edges)
        edges.push_back(index(e));
    j = nlohmann::json{{"edges", edges}, {"size", r.size}, {"exact", r.exact}};
}

inline void to_json(nlohmann::json& j, const Violation& v)
{
    j = nlohmann::json{{"e", index(v.e)}, {"f", index(v.f)}, {"distance", v.distance}, {"colour", v.colour}};
}

/// Heavy/light fields are null when t = 1.
inline void to_json(nlohmann::json& j, const AuditReport& r)
{
    const auto& s = r.sparsity;
    j = nlohmann::json{{"root", index(s.root)}, {"t", s.t}, {"delta", s.delta}, {"nHat", s.n_hat},
        {"sHat", s.s_hat}, {"bound", s.bound}, {"pass", s.pass}, {"bTSize", s.b_t_size},
        {"layersSizes", s.layer_sizes}};
    if (r.heavy_light) {
        const auto& h = *r.heavy_light;
        j["heavyCount"] = h.heavy_count;
        j["claim4"] = h.claim4;
        j["claim5"] = h.claim5;
        j["claim6"] = h.claim6;
        j["maxLightConflicts"] = h.max_light_conflicts;
    } else {
        for (const char* key : {"heavyCount", "claim4", "claim5", "claim6", "maxLightConflicts"})
            j[key] = nullptr;
    }
}

} // namespace distcol
