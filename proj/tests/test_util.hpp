#pragma once

// Shared builders for in-memory test instances.

#include <cmath>
#include <random>
#include <vector>

#include "mwroute/mwroute.hpp"

namespace testutil {

using namespace mwroute;

/// Uniform risk profile for synthetic edges; leak probability scales with
/// travel time through accident_rate x leak_prob.
inline EdgeRiskProfile base_profile() {
    EdgeRiskProfile e;
    e.accident_rate = 0.002;
    e.leak_prob = 0.05;
    e.water_area = 300.0;
    e.air_area = 400.0;
    e.soil_area = 200.0;
    e.sherwood_water = 0.6;
    e.sherwood_air = 0.5;
    e.sherwood_soil = 0.4;
    e.harm_level = 1.0;
    e.fatality_rate = 0.1;
    e.impact_radius_km = 0.3;
    e.population_density = 150.0;
    e.segment_area = 2.0;
    e.impacted_area = 0.3;
    e.personal_property_value = 3.0e7;
    e.public_property_value = 2.0e7;
    e.damage_severity = 0.3;
    return e;
}

/// Fills a dense risk grid over the instance's edges: lengths come from the
/// distance matrix and speeds from length/time so profiles stay consistent
/// with the travel-time matrix.
inline void add_uniform_risk(ProblemInstance& inst, EdgeRiskProfile base = base_profile()) {
    const std::size_t dim = inst.distance.order();
    inst.risk_grid.assign(dim * dim, base);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            EdgeRiskProfile& e = inst.risk_grid[i * dim + j];
            e.length_km = inst.distance(i, j);
            const double t = inst.travel_time(i, j);
            if (t > 0 && e.length_km > 0)
                e.speed_kmh = e.length_km / t;
            else
                e.speed_kmh = 1.0;
            if (!(t > 0)) e.length_km = 0.0;
        }
    }
}

/// Instance with explicit matrices and no risk data (alpha must be 0 when
/// evaluating it). Matrices are row-major (n+1)x(n+1), slot 0 = depot.
inline ProblemInstance explicit_instance(int n, int h, std::vector<double> dist,
                                         std::vector<double> time, std::vector<double> demands,
                                         std::vector<double> services) {
    ProblemInstance inst;
    inst.depot_id = n + 100;
    const std::size_t dim = static_cast<std::size_t>(n) + 1;
    inst.distance = SquareMatrix(dim);
    inst.travel_time = SquareMatrix(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            inst.distance(i, j) = dist[i * dim + j];
            inst.travel_time(i, j) = time[i * dim + j];
        }
    }
    for (int id = 1; id <= n; ++id)
        inst.sites.push_back({id, demands[static_cast<std::size_t>(id) - 1],
                              services[static_cast<std::size_t>(id) - 1]});
    inst.fleet.num_vehicles = h;
    inst.fleet.capacity = 3.0;
    inst.fleet.fixed_cost = 120.0;
    inst.fleet.unit_transport_cost = 20.0;
    inst.fleet.penalty_per_hour = 1000.0;
    inst.fleet.window_start = 0.0;
    inst.fleet.window_end = 1000.0;
    inst.fleet.depart_time = 8.0;
    return inst;
}

/// Random geometric instance: sites uniform in a 10x10 km box, symmetric
/// distances with a detour factor, travel at a fixed speed, uniform risk,
/// and a window loose enough that time never binds.
inline ProblemInstance random_instance(int n, int h, std::uint64_t seed, bool with_risk = true) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, 10.0);
    std::uniform_real_distribution<double> demand(0.1, 0.3);
    std::uniform_real_distribution<double> service(0.05, 0.15);

    ProblemInstance inst;
    inst.name = "random-" + std::to_string(seed);
    inst.depot_id = n + 1 + h; // clear of site ids and separator tokens
    const std::size_t dim = static_cast<std::size_t>(n) + 1;
    std::vector<std::array<double, 2>> pts(dim);
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    inst.coordinates = pts;
    inst.distance = SquareMatrix(dim);
    inst.travel_time = SquareMatrix(dim);
    const double speed = 40.0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (i == j) continue;
            const double dx = pts[i][0] - pts[j][0];
            const double dy = pts[i][1] - pts[j][1];
            const double d = std::max(1.0, std::sqrt(dx * dx + dy * dy) * 1.3);
            inst.distance(i, j) = d;
            inst.travel_time(i, j) = d / speed;
        }
    }
    for (int id = 1; id <= n; ++id) inst.sites.push_back({id, demand(rng), service(rng)});
    inst.fleet.num_vehicles = h;
    inst.fleet.capacity = 3.0;
    inst.fleet.fixed_cost = 120.0;
    inst.fleet.unit_transport_cost = 20.0;
    inst.fleet.penalty_per_hour = 1000.0;
    inst.fleet.window_start = 0.0;
    inst.fleet.window_end = 1000.0;
    inst.fleet.depart_time = 8.0;
    if (with_risk) add_uniform_risk(inst);
    return inst;
}

} // namespace testutil
