#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "mwroute/chromosome.hpp"
#include "mwroute/ga.hpp"
#include "mwroute/objective.hpp"

namespace mwroute {

struct OracleResult {
    RoutePlan optimal_plan;
    CostBreakdown optimal_cost;
    double optimal_objective = 0.0;   // penalized, directly comparable to GaResult
    std::uint64_t enumerated_count = 0;
    std::vector<int> rendered;        // depot-delimited tokens of the winner
};

/// Exhaustive search over every assignment of sites to at most H ordered
/// routes. Separators are enumerated as identical symbols and route lists are
/// required to be in nondecreasing lexicographic order, which collapses the
/// vehicle-label symmetry of a uniform fleet. Ties break towards the
/// lexicographically smallest rendered form. Evaluates the same penalized
/// objective as the solver.
inline OracleResult solve_exact(const ProblemInstance& inst, const RiskWeights& weights,
                                double alpha, int max_n = 9,
                                double infeasibility_penalty = 1e9) {
    const int n = inst.num_sites();
    if (n > max_n)
        throw InstanceTooLarge("exact enumeration capped at " + std::to_string(max_n) +
                               " sites, instance has " + std::to_string(n));
    const int h = inst.fleet.num_vehicles;
    const int separator = n + 1; // one shared symbol for all separators

    std::vector<int> symbols;
    symbols.reserve(static_cast<std::size_t>(n + h - 1));
    for (int id = 1; id <= n; ++id) symbols.push_back(id);
    for (int k = 0; k < h - 1; ++k) symbols.push_back(separator);

    OracleResult result;
    bool have_best = false;
    double best_objective = 0.0;

    std::vector<std::vector<int>> routes;
    do {
        routes.assign(1, {});
        for (int s : symbols) {
            if (s == separator)
                routes.emplace_back();
            else
                routes.back().push_back(s);
        }
        bool canonical = true;
        for (std::size_t k = 0; k + 1 < routes.size() && canonical; ++k)
            canonical = !(routes[k + 1] < routes[k]);
        if (!canonical) continue;

        RoutePlan plan = schedule_routes(inst, routes);
        const CostBreakdown cost = evaluate_plan(inst, plan, weights, alpha);
        const double objective =
            cost.blended +
            infeasibility_penalty * static_cast<double>(check_feasibility(plan, inst).size());
        ++result.enumerated_count;

        std::vector<int> tokens = rendered_tokens(encode(routes, n, h), n, inst.depot_id);
        const bool better = !have_best || objective < best_objective ||
                            (objective == best_objective && tokens < result.rendered);
        if (better) {
            have_best = true;
            best_objective = objective;
            result.optimal_plan = std::move(plan);
            result.optimal_cost = cost;
            result.rendered = std::move(tokens);
        }
    } while (std::next_permutation(symbols.begin(), symbols.end()));

    result.optimal_objective = best_objective;
    return result;
}

} // namespace mwroute
