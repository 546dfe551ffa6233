#pragma once

namespace mwroute {

/// Raw risk components of a plan plus their weighted capital conversion.
struct RiskBreakdown {
    double accident_prob = 0.0; // summed per-edge leak probabilities
    double environment = 0.0;   // m^3-equivalent affected volume
    double population = 0.0;    // expected persons affected
    double property = 0.0;      // CNY
    double total = 0.0;         // CNY after weighting and capital conversion

    friend bool operator==(const RiskBreakdown&, const RiskBreakdown&) = default;
};

/// Every cost component of a plan, all in CNY. Cooling terms stay zero
/// outside the covid scenario.
struct CostBreakdown {
    double fixed = 0.0;
    double transport = 0.0;
    double penalty = 0.0;
    double cooling_travel = 0.0;
    double cooling_load = 0.0;
    RiskBreakdown risk;
    double total_transport = 0.0; // fixed + transport + penalty + cooling
    double blended = 0.0;         // (1-alpha)*total_transport + alpha*risk.total
    double alpha = 0.0;

    friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

/// Scalarized objective between the transport-side total and the risk total.
inline double blend_costs(double transport_total, double risk_total, double alpha) {
    return (1.0 - alpha) * transport_total + alpha * risk_total;
}

} // namespace mwroute
