#pragma once

#include <cstdint>
#include <vector>

#include "mwroute/ga.hpp"

namespace mwroute {

struct BaselineDraw {
    double cost = 0.0;       // penalized objective, same as the solver's
    double time_hours = 0.0; // summed on-duty time
};

/// Cost/time of uniformly random plans, the benchmark the solver is measured
/// against.
struct BaselineReport {
    int draws = 0;
    double mean_cost = 0.0;
    double mean_time_hours = 0.0;
    std::vector<BaselineDraw> per_draw;
};

/// Draws uniformly random chromosomes (no feasibility resampling) and
/// evaluates them with the solver's exact objective.
inline BaselineReport generate_baseline(const ProblemInstance& inst, const RiskWeights& weights,
                                        double alpha, int draws, std::uint64_t seed,
                                        double infeasibility_penalty = 1e9) {
    if (draws < 1) throw ValidationError("baseline draws must be >= 1");
    Rng rng(seed);
    BaselineReport report;
    report.draws = draws;
    report.per_draw.reserve(static_cast<std::size_t>(draws));
    for (int d = 0; d < draws; ++d) {
        const Chromosome c = random_chromosome(inst.num_sites(), inst.fleet.num_vehicles, rng);
        const RoutePlan plan = decode(c, inst);
        const CostBreakdown cost = evaluate_plan(inst, plan, weights, alpha);
        const double objective =
            cost.blended +
            infeasibility_penalty * static_cast<double>(check_feasibility(plan, inst).size());
        report.per_draw.push_back({objective, plan.total_duration()});
        report.mean_cost += objective;
        report.mean_time_hours += plan.total_duration();
    }
    report.mean_cost /= draws;
    report.mean_time_hours /= draws;
    return report;
}

} // namespace mwroute
