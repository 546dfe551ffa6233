// Command-line front end: solve / oracle / baseline / ahp / validate.
//
// Exit codes: 0 success, 1 usage, 2 file or validation problem, 3 solver failure.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mwroute/mwroute.hpp"

namespace {

using namespace mwroute;

struct CommonOpts {
    std::vector<std::string> instances;
    double alpha = 0.5;
    bool alpha_given = false;
    std::uint64_t seed = 0;
    std::string mode;
    std::string ga_config_path;
    std::string out_path;
    std::string svg_path;
    std::string pcm_path;
    std::string transport_mode;
    int draws = 10;
    int max_n = 9;
    std::string plan_path;
    std::string report_path;
    std::optional<double> k_population;
    std::optional<double> k_environment;
    std::optional<double> k_other;
};

RiskWeights resolve_weights(const CommonOpts& opt) {
    RiskWeights w;
    if (!opt.pcm_path.empty()) {
        const AhpResult a = derive_weights(load_pcm(opt.pcm_path));
        if (a.weights.size() != 4)
            throw ValidationError("risk weighting needs a 4x4 comparison matrix");
        w.population = a.weights[0];
        w.property = a.weights[1];
        w.environment = a.weights[2];
        w.other = a.weights[3];
    } else {
        w = default_risk_weights();
    }
    if (opt.k_population) w.capital_per_person = *opt.k_population;
    if (opt.k_environment) w.capital_per_volume = *opt.k_environment;
    if (opt.k_other) {
        w.capital_per_accident = *opt.k_other;
        w.other_conversion_defaulted = false;
    }
    return w;
}

double resolve_alpha(const CommonOpts& opt) {
    if (!opt.alpha_given)
        std::cerr << "mwroute: warning: --alpha not given, defaulting to 0.5\n";
    return opt.alpha;
}

void apply_transport_mode(ProblemInstance& inst, const std::string& mode) {
    if (mode.empty()) return;
    if (mode == "literal")
        inst.transport_mode = TransportCostMode::Literal;
    else if (mode == "load_weighted")
        inst.transport_mode = TransportCostMode::LoadWeighted;
    else
        throw ValidationError("--transport-mode: expected literal or load_weighted");
}

std::string scenario_name(Scenario s) { return s == Scenario::Covid ? "covid" : "general"; }

std::string format_hours(double h) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << h;
    return out.str();
}

std::string format_cny(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << v;
    return out.str();
}

void print_scenario_summary(std::ostream& os, const ScenarioOutcome& o) {
    const ProblemInstance& inst = *o.instance;
    const GaResult& r = o.ga;
    os << "scenario " << o.scenario_name << " — " << o.instance_path << "\n";
    os << "  GA: " << r.generations_run << " generations ("
       << (r.termination_reason == TerminationReason::Converged ? "converged" : "iteration cap")
       << "), objective " << format_cny(r.best_objective) << " CNY\n";
    for (std::size_t h = 0; h < r.best_plan.routes.size(); ++h) {
        if (!r.best_plan.used(h)) continue;
        double load = 0.0;
        for (int id : r.best_plan.routes[h]) load += inst.site(id).demand;
        std::string rendered = std::to_string(inst.depot_id);
        for (int id : r.best_plan.routes[h]) rendered += "-" + std::to_string(id);
        rendered += "-" + std::to_string(inst.depot_id);
        const std::size_t stops = r.best_plan.routes[h].size();
        os << "    vehicle " << h + 1 << ": " << rendered << "  (" << stops
           << (stops == 1 ? " site, " : " sites, ") << std::setprecision(2) << std::fixed << load
           << " t, returns " << format_hours(r.best_plan.schedules[h].return_time) << " h)\n";
    }
    const CostBreakdown& c = r.best_cost;
    os << "  cost: fixed " << format_cny(c.fixed) << ", transport " << format_cny(c.transport)
       << ", penalty " << format_cny(c.penalty) << ", cooling " << format_cny(c.cooling_travel)
       << " + " << format_cny(c.cooling_load) << ", risk " << format_cny(c.risk.total)
       << ", blended " << format_cny(c.blended) << " CNY\n";
    {
        std::ostringstream risk;
        risk.setf(std::ios::scientific);
        risk.precision(3);
        risk << c.risk.population << " persons, property " << c.risk.property
             << " CNY, environment " << c.risk.environment << " m3-eq, leak prob "
             << c.risk.accident_prob;
        os << "  risk components: population " << risk.str() << "\n";
    }
    os << "  collected: " << format_hours(tons_collected(r.best_plan, inst)) << " t in "
       << format_hours(r.best_plan.total_duration()) << " h over "
       << r.best_plan.used_vehicles() << " vehicle(s)\n";
    os << "  baseline (" << o.baseline.draws << " draws): mean cost "
       << format_cny(o.baseline.mean_cost) << " CNY, mean duration "
       << format_hours(o.baseline.mean_time_hours) << " h\n";
    os << "  savings: " << format_hours(o.savings_percent_cost) << "% cost, "
       << format_hours(o.savings_percent_time) << "% time\n";
}

std::filesystem::path svg_path_for(const std::filesystem::path& base, const std::string& scenario,
                                   bool multiple) {
    if (!multiple) return base;
    std::filesystem::path p = base;
    const std::string stem = p.stem().string();
    const std::string ext = p.extension().string();
    p.replace_filename(stem + "_" + scenario + ext);
    return p;
}

int run_solve(const CommonOpts& opt) {
    if (opt.instances.empty()) {
        std::cerr << "mwroute: solve needs at least one --instance\n";
        return 1;
    }
    std::vector<ProblemInstance> instances;
    for (const auto& path : opt.instances) {
        instances.push_back(load_instance(path));
        apply_transport_mode(instances.back(), opt.transport_mode);
    }

    std::vector<Scenario> wanted;
    if (opt.mode == "general")
        wanted = {Scenario::General};
    else if (opt.mode == "covid")
        wanted = {Scenario::Covid};
    else if (opt.mode == "both")
        wanted = {Scenario::General, Scenario::Covid};
    else if (opt.mode.empty()) {
        for (const auto& inst : instances)
            if (std::find(wanted.begin(), wanted.end(), inst.scenario) == wanted.end())
                wanted.push_back(inst.scenario);
    } else {
        std::cerr << "mwroute: --mode must be general, covid or both\n";
        return 1;
    }

    const double alpha = resolve_alpha(opt);
    const RiskWeights weights = resolve_weights(opt);
    GaConfig base_config;
    if (!opt.ga_config_path.empty()) base_config = load_ga_config(opt.ga_config_path);

    std::vector<ScenarioOutcome> outcomes;
    for (Scenario s : wanted) {
        const ProblemInstance* inst = nullptr;
        std::string path;
        for (std::size_t i = 0; i < instances.size(); ++i) {
            if (instances[i].scenario == s) {
                inst = &instances[i];
                path = opt.instances[i];
                break;
            }
        }
        if (!inst) {
            std::cerr << "mwroute: no instance with scenario '" << scenario_name(s)
                      << "' was given\n";
            return 1;
        }
        const std::uint64_t salt = s == Scenario::Covid ? 2 : 0;
        GaConfig config = base_config;
        config.rng_seed = mix_seed(opt.seed, salt);

        ScenarioOutcome o;
        o.scenario_name = scenario_name(s);
        o.instance_path = path;
        o.instance = inst;
        o.ga = run_ga(*inst, weights, alpha, config);
        o.baseline = generate_baseline(*inst, weights, alpha, opt.draws, mix_seed(opt.seed, salt + 1),
                                       config.infeasibility_penalty);
        compute_savings(o);
        outcomes.push_back(std::move(o));
    }

    for (const auto& o : outcomes) print_scenario_summary(std::cout, o);
    if (weights.other_conversion_defaulted)
        std::cout << "note: capital_per_accident " << weights.capital_per_accident
                  << " CNY is a modeling default (no published estimate)\n";

    const nlohmann::json report = run_report_to_json(outcomes, alpha, opt.seed, weights);
    if (!opt.out_path.empty()) {
        atomic_write_text(opt.out_path, report.dump(2) + "\n");
        std::cout << "report written to " << opt.out_path << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }

    if (!opt.svg_path.empty()) {
        for (const auto& o : outcomes) {
            const auto path = svg_path_for(opt.svg_path, o.scenario_name, outcomes.size() > 1);
            atomic_write_text(path, render_routes_svg(*o.instance, o.ga.best_plan));
            std::cout << "route map written to " << path.string() << "\n";
        }
    }
    return 0;
}

int run_oracle(const CommonOpts& opt) {
    if (opt.instances.size() != 1) {
        std::cerr << "mwroute: oracle needs exactly one --instance\n";
        return 1;
    }
    ProblemInstance inst = load_instance(opt.instances[0]);
    apply_transport_mode(inst, opt.transport_mode);
    const double alpha = resolve_alpha(opt);
    const RiskWeights weights = resolve_weights(opt);
    const OracleResult r = solve_exact(inst, weights, alpha, opt.max_n);

    std::string rendered;
    for (int t : r.rendered) {
        if (!rendered.empty()) rendered += '-';
        rendered += std::to_string(t);
    }
    std::cout << "optimal route: " << rendered << "\n";
    std::cout << "objective: " << format_cny(r.optimal_objective) << " CNY (blended "
              << format_cny(r.optimal_cost.blended) << ")\n";
    std::cout << "candidates evaluated: " << r.enumerated_count << "\n";
    if (!opt.out_path.empty()) {
        nlohmann::json routes = nlohmann::json::array();
        for (const auto& route : r.optimal_plan.routes) routes.push_back(route);
        const nlohmann::json j{{"schema", 1},
                               {"rendered", rendered},
                               {"routes", std::move(routes)},
                               {"cost", to_json(r.optimal_cost)},
                               {"objective", r.optimal_objective},
                               {"enumerated_count", r.enumerated_count}};
        atomic_write_text(opt.out_path, j.dump(2) + "\n");
    }
    return 0;
}

int run_baseline(const CommonOpts& opt) {
    if (opt.instances.size() != 1) {
        std::cerr << "mwroute: baseline needs exactly one --instance\n";
        return 1;
    }
    ProblemInstance inst = load_instance(opt.instances[0]);
    apply_transport_mode(inst, opt.transport_mode);
    const double alpha = resolve_alpha(opt);
    const RiskWeights weights = resolve_weights(opt);
    const BaselineReport rep = generate_baseline(inst, weights, alpha, opt.draws, opt.seed);
    std::cout << "baseline over " << rep.draws << " random draws:\n";
    for (const auto& d : rep.per_draw)
        std::cout << "  cost " << format_cny(d.cost) << " CNY, duration "
                  << format_hours(d.time_hours) << " h\n";
    std::cout << "mean: cost " << format_cny(rep.mean_cost) << " CNY, duration "
              << format_hours(rep.mean_time_hours) << " h\n";
    if (!opt.out_path.empty()) atomic_write_text(opt.out_path, to_json(rep).dump(2) + "\n");
    return 0;
}

int run_ahp(const CommonOpts& opt) {
    const AhpResult r =
        opt.pcm_path.empty() ? derive_weights(default_pcm()) : derive_weights(load_pcm(opt.pcm_path));
    static constexpr std::array<const char*, 4> names{"population", "property", "environment",
                                                      "other"};
    std::cout << std::fixed << std::setprecision(4);
    std::cout << "weights:";
    for (std::size_t i = 0; i < r.weights.size(); ++i) {
        std::cout << ' ';
        if (i < names.size() && r.weights.size() == 4) std::cout << names[i] << '=';
        std::cout << r.weights[i];
    }
    std::cout << "\nlambda_max: " << r.lambda_max << "\nCI: " << r.consistency_index
              << "\nCR: " << r.consistency_ratio << "\nconsistent: " << (r.consistent ? "yes" : "no")
              << "\n";
    return 0;
}

int run_validate(const CommonOpts& opt) {
    if (opt.instances.size() != 1) {
        std::cerr << "mwroute: validate needs exactly one --instance\n";
        return 1;
    }
    auto [inst, violations] = load_instance_unchecked(opt.instances[0]);
    apply_transport_mode(inst, opt.transport_mode);
    bool bad = false;
    if (violations.empty()) {
        std::cout << "instance: ok (" << inst.num_sites() << " sites, "
                  << inst.fleet.num_vehicles << " vehicles)\n";
    } else {
        bad = true;
        std::cout << "instance: " << violations.size() << " violation(s)\n";
        for (const auto& v : violations) std::cout << "  " << v.str() << "\n";
    }

    if (!opt.plan_path.empty() && !bad) {
        try {
            const RoutePlan plan = schedule_routes(inst, load_plan_file(opt.plan_path));
            const auto plan_violations = check_feasibility(plan, inst);
            if (plan_violations.empty()) {
                std::cout << "plan: ok (" << plan.used_vehicles() << " vehicle(s) used)\n";
            } else {
                bad = true;
                std::cout << "plan: " << plan_violations.size() << " violation(s)\n";
                for (const auto& v : plan_violations) std::cout << "  " << v.str() << "\n";
            }
        } catch (const DuplicateSite& e) {
            bad = true;
            std::cout << "plan: " << e.what() << "\n";
        } catch (const UnknownSite& e) {
            bad = true;
            std::cout << "plan: " << e.what() << "\n";
        }
    }

    if (!opt.report_path.empty()) {
        const nlohmann::json report = parse_json_file(opt.report_path);
        if (!report.contains("schema") || report.at("schema").get<int>() != 1)
            throw ParseError(opt.report_path + ": unsupported report schema");
        const double alpha = report.at("alpha").get<double>();
        const RiskWeights weights = risk_weights_from_json(report.at("risk_weights"));
        for (const auto& [name, section] : report.at("scenarios").items()) {
            const ProblemInstance scenario_inst =
                load_instance(section.at("instance").get<std::string>());
            std::vector<std::vector<int>> routes;
            for (const auto& rj : section.at("ga").at("routes"))
                routes.push_back(rj.get<std::vector<int>>());
            const RoutePlan plan = schedule_routes(scenario_inst, routes);
            const CostBreakdown fresh = evaluate_plan(scenario_inst, plan, weights, alpha);
            const CostBreakdown stored = cost_breakdown_from_json(section.at("ga").at("cost"));
            auto close = [](double a, double b) {
                return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
            };
            const bool ok = close(fresh.blended, stored.blended) &&
                            close(fresh.total_transport, stored.total_transport) &&
                            close(fresh.risk.total, stored.risk.total);
            if (ok) {
                std::cout << "report[" << name << "]: self-consistent\n";
            } else {
                bad = true;
                std::cout << "report[" << name << "]: stored costs do not match re-evaluation"
                          << " (stored blended " << stored.blended << ", fresh " << fresh.blended
                          << ")\n";
            }
        }
    }
    return bad ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Medical-waste recycling route optimization"};
    app.require_subcommand(1);

    CommonOpts opt;

    auto add_common = [&](CLI::App* cmd, bool with_seed) {
        cmd->add_option("--instance", opt.instances, "Instance JSON file (repeatable)");
        auto* a = cmd->add_option("--alpha", opt.alpha,
                                  "Risk share of the blended objective, in [0,1]");
        a->check(CLI::Range(0.0, 1.0));
        cmd->parse_complete_callback([&opt, a] { opt.alpha_given = a->count() > 0; });
        if (with_seed) cmd->add_option("--seed", opt.seed, "Random seed");
        cmd->add_option("--pcm", opt.pcm_path, "Pairwise comparison matrix JSON (n x n)");
        cmd->add_option("--transport-mode", opt.transport_mode,
                        "Override transport cost mode: literal | load_weighted");
        cmd->add_option("--out", opt.out_path, "Write the JSON report here");
    };

    CLI::App* solve = app.add_subcommand("solve", "Run the genetic solver");
    add_common(solve, true);
    solve->add_option("--mode", opt.mode, "general | covid | both (default: per instance)");
    solve->add_option("--ga-config", opt.ga_config_path, "GA parameter JSON file");
    solve->add_option("--svg", opt.svg_path, "Write a schematic route map here");
    solve->add_option("--draws", opt.draws, "Random baseline draws")->check(CLI::PositiveNumber);
    solve->add_option("--k-population", opt.k_population, "Capital conversion, CNY per person");
    solve->add_option("--k-environment", opt.k_environment, "Capital conversion, CNY per m^3");
    solve->add_option("--k-other", opt.k_other,
                      "Capital conversion, CNY per unit accident probability");

    CLI::App* oracle = app.add_subcommand("oracle", "Exact enumeration for small instances");
    add_common(oracle, false);
    oracle->add_option("--max-n", opt.max_n, "Enumeration size cap")->check(CLI::PositiveNumber);

    CLI::App* baseline = app.add_subcommand("baseline", "Random-route benchmark");
    add_common(baseline, true);
    baseline->add_option("--draws", opt.draws, "Number of random draws")->check(CLI::PositiveNumber);

    CLI::App* ahp = app.add_subcommand("ahp", "Derive risk weights from a comparison matrix");
    ahp->add_option("--pcm", opt.pcm_path, "Pairwise comparison matrix JSON (n x n)");

    CLI::App* validate = app.add_subcommand("validate", "Check an instance, plan or report");
    add_common(validate, false);
    validate->add_option("--plan", opt.plan_path, "Plan JSON (array of site-id routes)");
    validate->add_option("--report", opt.report_path, "Solve report JSON to re-check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(solve)) return run_solve(opt);
        if (app.got_subcommand(oracle)) return run_oracle(opt);
        if (app.got_subcommand(baseline)) return run_baseline(opt);
        if (app.got_subcommand(ahp)) return run_ahp(opt);
        if (app.got_subcommand(validate)) return run_validate(opt);
    } catch (const ParseError& e) {
        std::cerr << "mwroute: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "mwroute: " << e.what() << "\n";
        return 2;
    } catch (const InfeasibleError& e) {
        std::cerr << "mwroute: infeasible: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "mwroute: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
