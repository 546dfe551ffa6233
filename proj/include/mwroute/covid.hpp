#pragma once

#include <string>

#include "mwroute/errors.hpp"
#include "mwroute/instance.hpp"
#include "mwroute/schedule.hpp"

namespace mwroute {

/// Refrigeration cost while vehicles are on the road: proportional to each
/// used vehicle's on-duty duration.
inline double cooling_travel_cost(const RoutePlan& plan, const CovidParams& p) {
    double total = 0.0;
    for (std::size_t h = 0; h < plan.routes.size(); ++h) {
        if (!plan.used(h)) continue;
        const double duration = plan.schedules[h].return_time - plan.schedules[h].depart;
        if (duration < 0)
            throw NegativeDuration("vehicle " + std::to_string(h) + " returns before departing");
        total += (1.0 + p.deterioration) * p.conductivity * p.body_surface * p.delta_t *
                 duration * p.unit_cooling;
    }
    return total;
}

/// Refrigeration cost for door-open loading time, proportional to each
/// vehicle's summed service time. The 0.54/3.22 volume coefficients are
/// fixed empirical constants.
inline double cooling_load_cost(const RoutePlan& plan, const ProblemInstance& inst,
                                const CovidParams& p) {
    double total = 0.0;
    for (const auto& route : plan.routes) {
        double service = 0.0;
        for (int id : route) service += inst.site(id).service_time;
        total += (0.54 * p.carriage_volume + 3.22) * p.delta_t * p.unit_cooling *
                 p.door_factor * service;
    }
    return total;
}

} // namespace mwroute
