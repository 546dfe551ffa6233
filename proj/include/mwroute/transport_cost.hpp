#pragma once

#include <string>
#include <vector>

#include "mwroute/costs.hpp"
#include "mwroute/instance.hpp"
#include "mwroute/schedule.hpp"

namespace mwroute {

inline double fixed_cost(const RoutePlan& plan, const FleetParams& fleet) {
    return fleet.fixed_cost * plan.used_vehicles();
}

/// Per-distance cost over all traversed edges, both depot legs included.
/// In load-weighted mode the rate additionally scales with the tons on board,
/// which accumulate as pickups happen ("empty outbound").
inline double transport_cost(const RoutePlan& plan, const ProblemInstance& inst) {
    const double rate = inst.fleet.unit_transport_cost;
    const bool weighted = inst.transport_mode == TransportCostMode::LoadWeighted;
    double cost = 0.0;
    for (const auto& route : plan.routes) {
        if (route.empty()) continue;
        double load = 0.0;
        int prev = 0;
        for (int id : route) {
            cost += rate * inst.dist(prev, id) * (weighted ? load : 1.0);
            load += inst.site(id).demand;
            prev = id;
        }
        cost += rate * inst.dist(prev, 0) * (weighted ? load : 1.0);
    }
    return cost;
}

/// Hard-window penalty for a single return time: linear in the overrun on
/// either side of [window_start, window_end], zero inside it.
inline double window_penalty(double return_time, double penalty_rate, double window_start,
                             double window_end) {
    if (return_time < window_start) return penalty_rate * (window_start - return_time);
    if (return_time > window_end) return penalty_rate * (return_time - window_end);
    return 0.0;
}

inline double penalty_cost(const RoutePlan& plan, double penalty_rate, double window_start,
                           double window_end) {
    double total = 0.0;
    for (std::size_t h = 0; h < plan.routes.size(); ++h)
        if (plan.used(h))
            total += window_penalty(plan.schedules[h].return_time, penalty_rate, window_start,
                                    window_end);
    return total;
}

inline double penalty_cost(const RoutePlan& plan, const FleetParams& fleet) {
    return penalty_cost(plan, fleet.penalty_per_hour, fleet.window_start, fleet.window_end);
}

/// Reports every broken routing constraint: per-route capacity, per-vehicle
/// time budget (return by the window end), exactly-once coverage of all
/// sites, and the fleet size.
inline std::vector<Violation> check_feasibility(const RoutePlan& plan, const ProblemInstance& inst) {
    std::vector<Violation> out;
    const int n = inst.num_sites();
    const auto [window_start, window_end] = effective_window(inst);
    (void)window_start;

    if (static_cast<int>(plan.routes.size()) > inst.fleet.num_vehicles)
        out.push_back({"routes", "fleet_size",
                       std::to_string(plan.routes.size()) + " routes for " +
                           std::to_string(inst.fleet.num_vehicles) + " vehicles"});

    std::vector<int> served(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t h = 0; h < plan.routes.size(); ++h) {
        const auto& route = plan.routes[h];
        if (route.empty()) continue;
        const std::string field = "routes[" + std::to_string(h) + "]";
        double load = 0.0;
        for (int id : route) {
            if (id < 1 || id > n) {
                out.push_back({field, "unknown_site", "site id " + std::to_string(id)});
                continue;
            }
            ++served[static_cast<std::size_t>(id)];
            load += inst.site(id).demand;
        }
        if (load > inst.fleet.capacity)
            out.push_back({field, "route_capacity",
                           std::to_string(load) + " t > " + std::to_string(inst.fleet.capacity) + " t"});
        if (h < plan.schedules.size() && plan.schedules[h].return_time > window_end)
            out.push_back({field, "route_time_budget",
                           "returns at " + std::to_string(plan.schedules[h].return_time) +
                               " h, window ends " + std::to_string(window_end) + " h"});
    }
    for (int id = 1; id <= n; ++id) {
        if (served[static_cast<std::size_t>(id)] == 0)
            out.push_back({"routes", "site_unserved", "site " + std::to_string(id)});
        else if (served[static_cast<std::size_t>(id)] > 1)
            out.push_back({"routes", "site_multiply_served", "site " + std::to_string(id)});
    }
    return out;
}

} // namespace mwroute
