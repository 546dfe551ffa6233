#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mwroute/baseline.hpp"
#include "mwroute/ga.hpp"
#include "mwroute/instance_io.hpp"

namespace mwroute {

inline nlohmann::json to_json(const RiskBreakdown& r) {
    return nlohmann::json{{"accident_prob", r.accident_prob},
                          {"environment", r.environment},
                          {"population", r.population},
                          {"property", r.property},
                          {"total", r.total}};
}

inline nlohmann::json to_json(const CostBreakdown& c) {
    return nlohmann::json{{"fixed", c.fixed},
                          {"transport", c.transport},
                          {"penalty", c.penalty},
                          {"cooling_travel", c.cooling_travel},
                          {"cooling_load", c.cooling_load},
                          {"risk", to_json(c.risk)},
                          {"total_transport", c.total_transport},
                          {"blended", c.blended},
                          {"alpha", c.alpha}};
}

inline CostBreakdown cost_breakdown_from_json(const nlohmann::json& j) {
    CostBreakdown c;
    c.fixed = j.at("fixed").get<double>();
    c.transport = j.at("transport").get<double>();
    c.penalty = j.at("penalty").get<double>();
    c.cooling_travel = j.at("cooling_travel").get<double>();
    c.cooling_load = j.at("cooling_load").get<double>();
    const auto& r = j.at("risk");
    c.risk.accident_prob = r.at("accident_prob").get<double>();
    c.risk.environment = r.at("environment").get<double>();
    c.risk.population = r.at("population").get<double>();
    c.risk.property = r.at("property").get<double>();
    c.risk.total = r.at("total").get<double>();
    c.total_transport = j.at("total_transport").get<double>();
    c.blended = j.at("blended").get<double>();
    c.alpha = j.at("alpha").get<double>();
    return c;
}

inline nlohmann::json to_json(const RiskWeights& w) {
    return nlohmann::json{{"population", w.population},
                          {"property", w.property},
                          {"environment", w.environment},
                          {"other", w.other},
                          {"capital_per_person", w.capital_per_person},
                          {"capital_per_volume", w.capital_per_volume},
                          {"capital_per_accident", w.capital_per_accident},
                          {"other_conversion_defaulted", w.other_conversion_defaulted}};
}

inline RiskWeights risk_weights_from_json(const nlohmann::json& j) {
    RiskWeights w;
    w.population = j.at("population").get<double>();
    w.property = j.at("property").get<double>();
    w.environment = j.at("environment").get<double>();
    w.other = j.at("other").get<double>();
    w.capital_per_person = j.at("capital_per_person").get<double>();
    w.capital_per_volume = j.at("capital_per_volume").get<double>();
    w.capital_per_accident = j.at("capital_per_accident").get<double>();
    w.other_conversion_defaulted = j.at("other_conversion_defaulted").get<bool>();
    return w;
}

inline nlohmann::json to_json(const BaselineReport& b) {
    nlohmann::json per_draw = nlohmann::json::array();
    for (const auto& d : b.per_draw)
        per_draw.push_back({{"cost", d.cost}, {"time_hours", d.time_hours}});
    return nlohmann::json{{"draws", b.draws},
                          {"mean_cost", b.mean_cost},
                          {"mean_time_hours", b.mean_time_hours},
                          {"per_draw", std::move(per_draw)}};
}

inline double tons_collected(const RoutePlan& plan, const ProblemInstance& inst) {
    double tons = 0.0;
    for (const auto& route : plan.routes)
        for (int id : route) tons += inst.site(id).demand;
    return tons;
}

inline nlohmann::json ga_result_to_json(const GaResult& r, const ProblemInstance& inst) {
    nlohmann::json routes = nlohmann::json::array();
    for (const auto& route : r.best_plan.routes) routes.push_back(route);
    return nlohmann::json{
        {"routes", std::move(routes)},
        {"rendered", render(r.best_chromosome, inst.num_sites(), inst.depot_id)},
        {"cost", to_json(r.best_cost)},
        {"objective", r.best_objective},
        {"time_hours", r.best_plan.total_duration()},
        {"tons_collected", tons_collected(r.best_plan, inst)},
        {"generations_run", r.generations_run},
        {"termination_reason",
         r.termination_reason == TerminationReason::Converged ? "converged" : "max_iterations"},
        {"history", r.history}};
}

/// Everything produced for one scenario of a run.
struct ScenarioOutcome {
    std::string scenario_name; // "general" or "covid"
    std::string instance_path;
    const ProblemInstance* instance = nullptr; // non-owning
    GaResult ga;
    BaselineReport baseline;
    double savings_percent_cost = 0.0;
    double savings_percent_time = 0.0;
};

inline void compute_savings(ScenarioOutcome& o) {
    o.savings_percent_cost =
        o.baseline.mean_cost != 0
            ? (o.baseline.mean_cost - o.ga.best_objective) / o.baseline.mean_cost * 100.0
            : 0.0;
    o.savings_percent_time =
        o.baseline.mean_time_hours != 0
            ? (o.baseline.mean_time_hours - o.ga.best_plan.total_duration()) /
                  o.baseline.mean_time_hours * 100.0
            : 0.0;
}

inline nlohmann::json run_report_to_json(const std::vector<ScenarioOutcome>& outcomes, double alpha,
                                         std::uint64_t seed, const RiskWeights& weights) {
    nlohmann::json scenarios;
    for (const auto& o : outcomes) {
        scenarios[o.scenario_name] = nlohmann::json{
            {"instance", o.instance_path},
            {"ga", ga_result_to_json(o.ga, *o.instance)},
            {"baseline", to_json(o.baseline)},
            {"savings_percent_cost", o.savings_percent_cost},
            {"savings_percent_time", o.savings_percent_time}};
    }
    return nlohmann::json{{"schema", 1},
                          {"alpha", alpha},
                          {"seed", seed},
                          {"risk_weights", to_json(weights)},
                          {"scenarios", std::move(scenarios)}};
}

} // namespace mwroute
