#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mwroute/errors.hpp"
#include "mwroute/instance.hpp"

namespace mwroute {

struct VehicleSchedule {
    double depart = 0.0;
    std::vector<double> arrivals; // one per visited site, in visit order
    double return_time = 0.0;

    friend bool operator==(const VehicleSchedule&, const VehicleSchedule&) = default;
};

/// Per-vehicle visit sequences plus their propagated times. Routes implicitly
/// start and end at the depot (matrix slot 0); an empty route means the
/// vehicle stays parked.
struct RoutePlan {
    std::vector<std::vector<int>> routes;   // site ids
    std::vector<VehicleSchedule> schedules; // parallel to routes

    bool used(std::size_t h) const { return h < routes.size() && !routes[h].empty(); }

    int used_vehicles() const {
        int count = 0;
        for (const auto& r : routes) count += !r.empty();
        return count;
    }

    /// On-duty hours summed over used vehicles.
    double total_duration() const {
        double d = 0.0;
        for (std::size_t h = 0; h < routes.size(); ++h)
            if (used(h)) d += schedules[h].return_time - schedules[h].depart;
        return d;
    }

    friend bool operator==(const RoutePlan&, const RoutePlan&) = default;
};

/// Propagates times along each route: arrival = previous event + travel,
/// departure from a site = arrival + service, return = last departure +
/// travel back to the depot.
inline RoutePlan schedule_routes(const ProblemInstance& inst, std::vector<std::vector<int>> routes) {
    const int n = inst.num_sites();
    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& route : routes) {
        for (int id : route) {
            if (id < 1 || id > n)
                throw UnknownSite("site id " + std::to_string(id) + " not in 1.." + std::to_string(n));
            if (visited[static_cast<std::size_t>(id)]++)
                throw DuplicateSite("site " + std::to_string(id) + " appears more than once");
        }
    }

    RoutePlan plan;
    plan.schedules.resize(routes.size());
    for (std::size_t h = 0; h < routes.size(); ++h) {
        VehicleSchedule& s = plan.schedules[h];
        s.depart = inst.fleet.depart_time;
        double t = s.depart;
        int prev = 0;
        for (int id : routes[h]) {
            t += inst.time(prev, id);
            s.arrivals.push_back(t);
            t += inst.site(id).service_time;
            prev = id;
        }
        s.return_time = routes[h].empty() ? s.depart : t + inst.time(prev, 0);
    }
    plan.routes = std::move(routes);
    return plan;
}

} // namespace mwroute
