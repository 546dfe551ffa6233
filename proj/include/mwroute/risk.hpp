#pragma once

#include <iostream>
#include <numbers>

#include "mwroute/ahp.hpp"
#include "mwroute/costs.hpp"
#include "mwroute/errors.hpp"
#include "mwroute/instance.hpp"
#include "mwroute/schedule.hpp"

namespace mwroute {

/// Criterion weights (population, property, environment, other) plus the
/// coefficients converting each raw risk into CNY.
struct RiskWeights {
    double population = 0.25;
    double property = 0.25;
    double environment = 0.25;
    double other = 0.25;
    double capital_per_person = 1e6;    // CNY per expected person affected
    double capital_per_volume = 300.0;  // CNY per m^3-equivalent
    double capital_per_accident = 1e5;  // CNY per unit accident probability;
                                        // no published estimate exists, so this
                                        // stays a flagged modeling default
    bool other_conversion_defaulted = true;

    friend bool operator==(const RiskWeights&, const RiskWeights&) = default;
};

/// Weights from the built-in comparison matrix plus default conversions.
inline RiskWeights default_risk_weights() {
    const AhpResult a = derive_weights(default_pcm());
    RiskWeights w;
    w.population = a.weights[0];
    w.property = a.weights[1];
    w.environment = a.weights[2];
    w.other = a.weights[3];
    return w;
}

/// Leak probability for one edge: accident rate per hour x P(leak | accident)
/// x hours on the edge. Clamped into [0,1] with a warning if the data pushes
/// it out.
inline double edge_accident_prob(const EdgeRiskProfile& e) {
    if (e.speed_kmh <= 0) throw ZeroSpeed("edge speed must be positive");
    const double p = e.accident_rate * e.leak_prob * (e.length_km / e.speed_kmh);
    if (p > 1.0) {
        std::cerr << "mwroute: warning: edge accident probability " << p << " clamped to 1\n";
        return 1.0;
    }
    return p < 0.0 ? 0.0 : p;
}

namespace detail {

/// Visits every traversed directed edge of the plan, depot legs included.
template <typename F>
void for_each_traversed_edge(const RoutePlan& plan, F&& f) {
    for (const auto& route : plan.routes) {
        if (route.empty()) continue;
        int prev = 0;
        for (int id : route) {
            f(prev, id);
            prev = id;
        }
        f(prev, 0);
    }
}

inline double env_risk_edge(const EdgeRiskProfile& e) {
    const double spread = e.water_area * e.sherwood_water + e.air_area * e.sherwood_air +
                          e.soil_area * e.sherwood_soil;
    return edge_accident_prob(e) * e.harm_level * spread;
}

inline double pop_risk_edge(const EdgeRiskProfile& e) {
    return edge_accident_prob(e) * e.fatality_rate * std::numbers::pi *
           e.impact_radius_km * e.impact_radius_km * e.population_density;
}

inline double prop_risk_edge(const EdgeRiskProfile& e) {
    if (e.segment_area <= 0) throw ZeroSegmentArea("segment area must be positive");
    return (e.impacted_area / e.segment_area) * edge_accident_prob(e) *
           (e.personal_property_value + e.public_property_value) * e.damage_severity;
}

} // namespace detail

/// Expected polluted volume over the plan's traversed edges.
inline double env_risk(const RoutePlan& plan, const ProblemInstance& inst) {
    double sum = 0.0;
    detail::for_each_traversed_edge(plan, [&](int i, int j) { sum += detail::env_risk_edge(inst.risk(i, j)); });
    return sum;
}

/// Expected persons affected over the plan's traversed edges.
inline double pop_risk(const RoutePlan& plan, const ProblemInstance& inst) {
    double sum = 0.0;
    detail::for_each_traversed_edge(plan, [&](int i, int j) { sum += detail::pop_risk_edge(inst.risk(i, j)); });
    return sum;
}

/// Expected property loss (CNY) over the plan's traversed edges.
inline double prop_risk(const RoutePlan& plan, const ProblemInstance& inst) {
    double sum = 0.0;
    detail::for_each_traversed_edge(plan, [&](int i, int j) { sum += detail::prop_risk_edge(inst.risk(i, j)); });
    return sum;
}

/// All four risk components in one pass plus their weighted capital total.
inline RiskBreakdown total_risk_cost(const RoutePlan& plan, const ProblemInstance& inst,
                                     const RiskWeights& w) {
    RiskBreakdown r;
    detail::for_each_traversed_edge(plan, [&](int i, int j) {
        const EdgeRiskProfile& e = inst.risk(i, j);
        r.accident_prob += edge_accident_prob(e);
        r.environment += detail::env_risk_edge(e);
        r.population += detail::pop_risk_edge(e);
        r.property += detail::prop_risk_edge(e);
    });
    r.total = w.population * w.capital_per_person * r.population + w.property * r.property +
              w.environment * w.capital_per_volume * r.environment +
              w.other * w.capital_per_accident * r.accident_prob;
    return r;
}

} // namespace mwroute
