#pragma once

#include <string>
#include <vector>

#include "mwroute/errors.hpp"
#include "mwroute/instance.hpp"
#include "mwroute/schedule.hpp"

namespace mwroute {

/// Permutation genome: the N site ids plus H-1 distinct separator tokens
/// (values N+1 .. N+H-1) marking route boundaries. Rendered form repeats the
/// depot id in place of every separator and at both ends.
struct Chromosome {
    std::vector<int> genes;

    friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

inline bool is_separator(int gene, int num_sites) { return gene > num_sites; }

/// True iff genes is a permutation of {1 .. N+H-1}.
inline bool is_valid_permutation(const Chromosome& c, int num_sites, int num_vehicles) {
    const std::size_t expect = static_cast<std::size_t>(num_sites) +
                               static_cast<std::size_t>(num_vehicles) - 1;
    if (c.genes.size() != expect) return false;
    std::vector<char> seen(expect + 1, 0);
    for (int g : c.genes) {
        if (g < 1 || static_cast<std::size_t>(g) > expect || seen[static_cast<std::size_t>(g)])
            return false;
        seen[static_cast<std::size_t>(g)] = 1;
    }
    return true;
}

/// Splits the genome at separators into exactly H per-vehicle site sequences
/// (empty sequences are unused vehicles).
inline std::vector<std::vector<int>> split_routes(const Chromosome& c, int num_sites,
                                                  int num_vehicles) {
    std::vector<std::vector<int>> routes(1);
    for (int g : c.genes) {
        if (is_separator(g, num_sites))
            routes.emplace_back();
        else
            routes.back().push_back(g);
    }
    if (routes.size() != static_cast<std::size_t>(num_vehicles))
        throw Error("chromosome has " + std::to_string(routes.size() - 1) + " separators for " +
                    std::to_string(num_vehicles) + " vehicles");
    return routes;
}

inline RoutePlan decode(const Chromosome& c, const ProblemInstance& inst) {
    return schedule_routes(inst, split_routes(c, inst.num_sites(), inst.fleet.num_vehicles));
}

/// Inverse of split_routes: route lists (at most H, padded with unused
/// vehicles) back to a genome with separators in canonical order.
inline Chromosome encode(const std::vector<std::vector<int>>& routes, int num_sites,
                         int num_vehicles) {
    if (routes.size() > static_cast<std::size_t>(num_vehicles))
        throw Error("more routes than vehicles");
    Chromosome c;
    c.genes.reserve(static_cast<std::size_t>(num_sites) + num_vehicles - 1);
    for (int h = 0; h < num_vehicles; ++h) {
        if (h < static_cast<int>(routes.size()))
            for (int id : routes[static_cast<std::size_t>(h)]) c.genes.push_back(id);
        if (h < num_vehicles - 1) c.genes.push_back(num_sites + 1 + h);
    }
    return c;
}

/// Depot-delimited display form: H+N+1 tokens, depot id at both ends and in
/// place of every separator.
inline std::vector<int> rendered_tokens(const Chromosome& c, int num_sites, int depot_id) {
    std::vector<int> out;
    out.reserve(c.genes.size() + 2);
    out.push_back(depot_id);
    for (int g : c.genes) out.push_back(is_separator(g, num_sites) ? depot_id : g);
    out.push_back(depot_id);
    return out;
}

inline std::string render(const Chromosome& c, int num_sites, int depot_id) {
    std::string out;
    for (int t : rendered_tokens(c, num_sites, depot_id)) {
        if (!out.empty()) out += '-';
        out += std::to_string(t);
    }
    return out;
}

} // namespace mwroute
