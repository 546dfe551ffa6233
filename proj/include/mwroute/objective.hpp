#pragma once

#include "mwroute/covid.hpp"
#include "mwroute/risk.hpp"
#include "mwroute/transport_cost.hpp"

namespace mwroute {

/// Covid-scenario objective: transport costs with the night window in force,
/// both cooling terms, and the risk blend.
inline CostBreakdown covid_total_cost(const RoutePlan& plan, const ProblemInstance& inst,
                                      const CovidParams& c, const RiskWeights& weights,
                                      double alpha) {
    CostBreakdown b;
    b.alpha = alpha;
    b.fixed = fixed_cost(plan, inst.fleet);
    b.transport = transport_cost(plan, inst);
    b.penalty = penalty_cost(plan, inst.fleet.penalty_per_hour, c.night_window_start,
                             c.night_window_end);
    b.cooling_travel = cooling_travel_cost(plan, c);
    b.cooling_load = cooling_load_cost(plan, inst, c);
    if (inst.has_risk())
        b.risk = total_risk_cost(plan, inst, weights);
    else if (alpha > 0.0)
        throw MissingRiskProfile("instance carries no risk data but alpha > 0");
    b.total_transport = b.fixed + b.transport + b.penalty + b.cooling_travel + b.cooling_load;
    b.blended = blend_costs(b.total_transport, b.risk.total, alpha);
    return b;
}

/// Full objective of a scheduled plan under the instance's scenario.
inline CostBreakdown evaluate_plan(const ProblemInstance& inst, const RoutePlan& plan,
                                   const RiskWeights& weights, double alpha) {
    if (inst.scenario == Scenario::Covid)
        return covid_total_cost(plan, inst, inst.covid.value_or(CovidParams{}), weights, alpha);

    CostBreakdown b;
    b.alpha = alpha;
    b.fixed = fixed_cost(plan, inst.fleet);
    b.transport = transport_cost(plan, inst);
    b.penalty = penalty_cost(plan, inst.fleet);
    if (inst.has_risk())
        b.risk = total_risk_cost(plan, inst, weights);
    else if (alpha > 0.0)
        throw MissingRiskProfile("instance carries no risk data but alpha > 0");
    b.total_transport = b.fixed + b.transport + b.penalty;
    b.blended = blend_costs(b.total_transport, b.risk.total, alpha);
    return b;
}

/// Transport-side components only; risk and blend stay zero.
inline CostBreakdown total_transport_cost(const RoutePlan& plan, const ProblemInstance& inst) {
    CostBreakdown b;
    b.fixed = fixed_cost(plan, inst.fleet);
    b.transport = transport_cost(plan, inst);
    const auto [window_start, window_end] = effective_window(inst);
    b.penalty = penalty_cost(plan, inst.fleet.penalty_per_hour, window_start, window_end);
    if (inst.scenario == Scenario::Covid) {
        const CovidParams c = inst.covid.value_or(CovidParams{});
        b.cooling_travel = cooling_travel_cost(plan, c);
        b.cooling_load = cooling_load_cost(plan, inst, c);
    }
    b.total_transport = b.fixed + b.transport + b.penalty + b.cooling_travel + b.cooling_load;
    return b;
}

} // namespace mwroute
