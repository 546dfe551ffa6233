#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwroute/errors.hpp"

namespace mwroute {

enum class Scenario { General, Covid };

/// How the per-distance transport cost treats the load on board.
enum class TransportCostMode {
    Literal,      ///< rate x distance on every traversed edge
    LoadWeighted, ///< rate x distance x tons on board while traversing
};

/// Dense square matrix of doubles, row-major. Row/column 0 is the depot slot;
/// rows/columns 1..N map to site ids 1..N.
class SquareMatrix {
  public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t order, double fill = 0.0)
        : order_(order), cells_(order * order, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return cells_[i * order_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return cells_[i * order_ + j]; }

    std::size_t order() const { return order_; }
    bool empty() const { return order_ == 0; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  private:
    std::size_t order_ = 0;
    std::vector<double> cells_;
};

/// A temporary storage & disposal site to be visited exactly once.
struct Site {
    int id = 0;                // 1..N
    double demand = 0.0;       // tons of waste picked up here
    double service_time = 0.0; // hours spent loading

    friend bool operator==(const Site&, const Site&) = default;
};

/// Hazard data for one directed edge (depot included). Probabilities are
/// dimensionless, lengths km, speeds km/h, areas of influence m^3-equivalent,
/// ground areas km^2, property values CNY.
struct EdgeRiskProfile {
    double accident_rate = 0.0;           // accidents per hour of travel
    double leak_prob = 0.0;               // P(leak | accident)
    double length_km = 0.0;
    double speed_kmh = 0.0;
    double water_area = 0.0;              // affected volume, water bodies
    double air_area = 0.0;                // affected volume, atmosphere
    double soil_area = 0.0;               // affected volume, soil
    double sherwood_water = 0.0;          // diffusion proportionality factors
    double sherwood_air = 0.0;
    double sherwood_soil = 0.0;
    double harm_level = 0.0;              // pollution severity factor
    double fatality_rate = 0.0;           // P(fatality | leak), in [0,1]
    double impact_radius_km = 0.0;        // radius of the affected disc
    double population_density = 0.0;      // persons per km^2
    double segment_area = 1.0;            // km^2 of the road segment
    double impacted_area = 0.0;           // km^2 of it reachable by a spill
    double personal_property_value = 0.0; // CNY
    double public_property_value = 0.0;   // CNY
    double damage_severity = 0.0;         // in [0,1]

    friend bool operator==(const EdgeRiskProfile&, const EdgeRiskProfile&) = default;
};

struct FleetParams {
    int num_vehicles = 1;              // H
    double capacity = 0.0;             // tons per vehicle
    double fixed_cost = 0.0;           // CNY per used vehicle
    double unit_transport_cost = 0.0;  // CNY per km (per ton in load-weighted mode)
    double penalty_per_hour = 0.0;     // CNY per hour outside the return window
    double window_start = 0.0;         // hours since midnight
    double window_end = 24.0;
    double depart_time = 0.0;          // uniform departure from the depot

    friend bool operator==(const FleetParams&, const FleetParams&) = default;
};

/// Low-temperature sterilization parameters for the covid scenario.
/// Defaults are the calibrated reference values.
struct CovidParams {
    double deterioration = 0.08;     // carriage body wear factor
    double conductivity = 2.5;       // heat conductivity factor
    double body_surface = 59.12;     // m^2 carriage surface
    double delta_t = 20.0;           // inside/outside temperature gap, degC
    double unit_cooling = 0.5;       // CNY per hour per unit
    double carriage_volume = 26.78;  // m^3
    double door_factor = 2.0;        // door-opening factor, one of {0.25,0.5,1,1.5,2}
    double night_window_start = 18.0;
    double night_window_end = 24.0;

    friend bool operator==(const CovidParams&, const CovidParams&) = default;
};

/// One broken rule, as data. `field` points into the instance or plan,
/// `rule` is a stable machine-readable name.
struct Violation {
    std::string field;
    std::string rule;
    std::string detail;

    std::string str() const { return field + ": " + rule + " (" + detail + ")"; }
};

/// Immutable problem data. Matrices and the risk grid are indexed with the
/// depot remapped to slot 0; site id i lives at row/column i.
struct ProblemInstance {
    std::string name;
    std::string description;
    Scenario scenario = Scenario::General;
    TransportCostMode transport_mode = TransportCostMode::Literal;

    std::vector<Site> sites;  // sorted by id, ids are 1..N
    int depot_id = 0;         // rendered id of the depot (outside 1..N)

    SquareMatrix distance;    // km, (N+1)x(N+1)
    SquareMatrix travel_time; // hours, (N+1)x(N+1)

    /// Dense (N+1)x(N+1) row-major grid; empty when the instance carries no
    /// risk data at all.
    std::vector<EdgeRiskProfile> risk_grid;

    FleetParams fleet;
    std::optional<CovidParams> covid;

    /// Optional site coordinates (km), slot 0 = depot; used only for plots.
    std::vector<std::array<double, 2>> coordinates;

    int num_sites() const { return static_cast<int>(sites.size()); }
    bool has_risk() const { return !risk_grid.empty(); }

    const Site& site(int id) const {
        if (id < 1 || id > num_sites()) throw UnknownSite("no site with id " + std::to_string(id));
        return sites[static_cast<std::size_t>(id) - 1];
    }

    double dist(int i, int j) const {
        check_edge(i, j, distance.order());
        return distance(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }

    double time(int i, int j) const {
        check_edge(i, j, travel_time.order());
        return travel_time(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }

    const EdgeRiskProfile& risk(int i, int j) const {
        if (!has_risk())
            throw MissingRiskProfile("instance carries no risk data");
        const std::size_t dim = distance.order();
        check_edge(i, j, dim);
        return risk_grid[static_cast<std::size_t>(i) * dim + static_cast<std::size_t>(j)];
    }

    friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

  private:
    static void check_edge(int i, int j, std::size_t dim) {
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= dim || static_cast<std::size_t>(j) >= dim)
            throw MissingEdge("edge (" + std::to_string(i) + "," + std::to_string(j) + ") outside the matrix");
    }
};

/// Return window in effect for the instance's scenario: the fleet window in
/// general, the covid night window otherwise.
inline std::pair<double, double> effective_window(const ProblemInstance& inst) {
    if (inst.scenario == Scenario::Covid) {
        const CovidParams c = inst.covid.value_or(CovidParams{});
        return {c.night_window_start, c.night_window_end};
    }
    return {inst.fleet.window_start, inst.fleet.window_end};
}

namespace detail {

inline bool is_allowed_door_factor(double tau) {
    for (double v : {0.25, 0.5, 1.0, 1.5, 2.0})
        if (std::abs(tau - v) <= 1e-12) return true;
    return false;
}

} // namespace detail

/// Checks every data invariant; returns the broken ones. An empty result
/// means the instance is fully usable.
inline std::vector<Violation> validate_instance(const ProblemInstance& inst) {
    std::vector<Violation> out;
    auto add = [&out](std::string field, std::string rule, std::string detail) {
        out.push_back({std::move(field), std::move(rule), std::move(detail)});
    };
    auto num = [](double v) {
        std::string s = std::to_string(v);
        return s;
    };

    const int n = inst.num_sites();
    const std::size_t dim = static_cast<std::size_t>(n) + 1;
    const FleetParams& f = inst.fleet;

    // sites: ids must be exactly 1..N so matrix slots line up
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    double total_demand = 0.0;
    for (std::size_t k = 0; k < inst.sites.size(); ++k) {
        const Site& s = inst.sites[k];
        const std::string field = "sites[" + std::to_string(k) + "]";
        if (s.id < 1 || s.id > n)
            add(field + ".id", "site_ids_contiguous",
                "ids must cover exactly 1.." + std::to_string(n));
        else if (seen[static_cast<std::size_t>(s.id)]++)
            add(field + ".id", "site_id_unique", "id " + std::to_string(s.id) + " repeated");
        if (s.demand < 0) add(field + ".demand", "demand_nonnegative", num(s.demand));
        if (s.service_time < 0) add(field + ".service_time", "service_time_nonnegative", num(s.service_time));
        if (s.demand > f.capacity)
            add(field + ".demand", "demand_within_vehicle_capacity",
                num(s.demand) + " t exceeds vehicle capacity " + num(f.capacity) + " t");
        total_demand += s.demand;
    }
    if (inst.depot_id >= 1 && inst.depot_id <= n)
        add("depot_id", "depot_id_distinct", "depot id collides with a site id");

    // fleet
    if (f.num_vehicles < 1) add("fleet.num_vehicles", "at_least_one_vehicle", std::to_string(f.num_vehicles));
    if (f.capacity < 0) add("fleet.capacity", "capacity_nonnegative", num(f.capacity));
    if (f.fixed_cost < 0) add("fleet.fixed_cost", "cost_nonnegative", num(f.fixed_cost));
    if (f.unit_transport_cost < 0) add("fleet.unit_transport_cost", "cost_nonnegative", num(f.unit_transport_cost));
    if (f.penalty_per_hour <= 0) add("fleet.penalty", "penalty_positive", num(f.penalty_per_hour));
    if (f.window_start > f.window_end)
        add("fleet.window", "window_ordered", num(f.window_start) + " > " + num(f.window_end));

    // matrices
    if (inst.distance.order() != dim)
        add("distance", "matrix_order", "expected " + std::to_string(dim) + "x" + std::to_string(dim));
    if (inst.travel_time.order() != dim)
        add("travel_time", "matrix_order", "expected " + std::to_string(dim) + "x" + std::to_string(dim));
    double max_distance = 0.0;
    if (inst.distance.order() == dim) {
        for (std::size_t i = 0; i < dim; ++i) {
            if (inst.distance(i, i) != 0.0)
                add("distance[" + std::to_string(i) + "][" + std::to_string(i) + "]",
                    "distance_diagonal_zero", num(inst.distance(i, i)));
            for (std::size_t j = 0; j < dim; ++j) {
                const double d = inst.distance(i, j);
                if (d < 0)
                    add("distance[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                        "distance_nonnegative", num(d));
                max_distance = std::max(max_distance, d);
            }
        }
    }
    if (inst.travel_time.order() == dim) {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                if (inst.travel_time(i, j) < 0)
                    add("travel_time[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                        "travel_time_nonnegative", num(inst.travel_time(i, j)));
    }

    // the window penalty must dominate any single detour, or late returns can
    // be bought off with distance savings
    if (f.penalty_per_hour > 0 && f.unit_transport_cost > 0 &&
        f.penalty_per_hour <= f.unit_transport_cost * max_distance)
        add("fleet.penalty", "penalty_dominates_transport",
            num(f.penalty_per_hour) + " <= " + num(f.unit_transport_cost) + " x " + num(max_distance));

    // risk grid
    if (inst.has_risk()) {
        if (inst.risk_grid.size() != dim * dim)
            add("risk", "risk_grid_order", "expected " + std::to_string(dim * dim) + " profiles");
        else {
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = 0; j < dim; ++j) {
                    const EdgeRiskProfile& e = inst.risk_grid[i * dim + j];
                    const std::string field =
                        "risk[" + std::to_string(i) + "][" + std::to_string(j) + "]";
                    auto prob = [&](double v, const char* name) {
                        if (v < 0 || v > 1) add(field + "." + name, "probability_range", num(v));
                    };
                    prob(e.leak_prob, "leak_prob");
                    prob(e.fatality_rate, "fatality_rate");
                    prob(e.damage_severity, "damage_severity");
                    auto nonneg = [&](double v, const char* name) {
                        if (v < 0) add(field + "." + name, "risk_field_nonnegative", num(v));
                    };
                    nonneg(e.accident_rate, "accident_rate");
                    nonneg(e.length_km, "length_km");
                    nonneg(e.water_area, "water_area");
                    nonneg(e.air_area, "air_area");
                    nonneg(e.soil_area, "soil_area");
                    nonneg(e.sherwood_water, "sherwood_water");
                    nonneg(e.sherwood_air, "sherwood_air");
                    nonneg(e.sherwood_soil, "sherwood_soil");
                    nonneg(e.harm_level, "harm_level");
                    nonneg(e.impact_radius_km, "impact_radius_km");
                    nonneg(e.population_density, "population_density");
                    nonneg(e.segment_area, "segment_area");
                    nonneg(e.impacted_area, "impacted_area");
                    nonneg(e.personal_property_value, "personal_property_value");
                    nonneg(e.public_property_value, "public_property_value");
                    if (e.speed_kmh <= 0)
                        add(field + ".speed_kmh", "speed_positive", num(e.speed_kmh));
                    if (e.impacted_area > e.segment_area)
                        add(field + ".impacted_area", "impacted_within_segment",
                            num(e.impacted_area) + " > " + num(e.segment_area));
                    // travel time and length/speed must describe the same edge
                    if (i != j && e.speed_kmh > 0 && inst.travel_time.order() == dim) {
                        const double t = inst.travel_time(i, j);
                        if (std::abs(t - e.length_km / e.speed_kmh) > 1e-6)
                            add("travel_time[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                                "travel_time_speed_consistency",
                                num(t) + " h vs " + num(e.length_km) + " km / " + num(e.speed_kmh) + " km/h");
                    }
                }
            }
        }
    }

    // covid parameters (validated whenever supplied, and always under the covid scenario)
    if (inst.covid || inst.scenario == Scenario::Covid) {
        const CovidParams c = inst.covid.value_or(CovidParams{});
        auto pos = [&](double v, const char* name) {
            if (v <= 0) add(std::string("covid.") + name, "covid_param_positive", num(v));
        };
        pos(c.deterioration, "deterioration");
        pos(c.conductivity, "conductivity");
        pos(c.body_surface, "body_surface");
        pos(c.delta_t, "delta_t");
        pos(c.unit_cooling, "unit_cooling");
        pos(c.carriage_volume, "carriage_volume");
        if (!detail::is_allowed_door_factor(c.door_factor))
            add("covid.door_factor", "door_factor_enumerated",
                num(c.door_factor) + " not in {0.25, 0.5, 1, 1.5, 2}");
        if (c.night_window_start > c.night_window_end)
            add("covid.night_window", "window_ordered",
                num(c.night_window_start) + " > " + num(c.night_window_end));
    }

    if (!inst.coordinates.empty() && inst.coordinates.size() != dim)
        add("coordinates", "coordinates_order",
            "expected " + std::to_string(dim) + " rows, got " + std::to_string(inst.coordinates.size()));

    // a plan covering all sites exists only if the fleet can carry everything
    if (total_demand > f.capacity * f.num_vehicles)
        add("sites", "fleet_capacity_total",
            num(total_demand) + " t exceeds fleet capacity " +
                num(f.capacity * f.num_vehicles) + " t");

    return out;
}

} // namespace mwroute
