#include <catch2/catch_amalgamated.hpp>

#include "mwroute/objective.hpp"
#include "test_util.hpp"

using namespace mwroute;
using Catch::Approx;

namespace {

// one site, exactly one hour out, one hour loading, one hour back
ProblemInstance three_hour_instance() {
    ProblemInstance inst = testutil::explicit_instance(1, 2, {0, 8, 8, 0}, {0, 1.0, 1.0, 0},
                                                       {0.5}, {1.0});
    inst.scenario = Scenario::Covid;
    inst.covid = CovidParams{};
    return inst;
}

} // namespace

TEST_CASE("travel cooling cost matches the reference parameters") {
    const ProblemInstance inst = three_hour_instance();
    const RoutePlan plan = schedule_routes(inst, {{1}});
    REQUIRE(plan.schedules[0].return_time - plan.schedules[0].depart == 3.0);
    // 1.08 x 2.5 x 59.12 x 20 x 3 x 0.5
    CHECK(cooling_travel_cost(plan, CovidParams{}) == Approx(4788.72).margin(1e-6));
}

TEST_CASE("travel cooling is zero for zero duration and linear in duration") {
    const ProblemInstance inst = three_hour_instance();
    const RoutePlan parked = schedule_routes(inst, {});
    CHECK(cooling_travel_cost(parked, CovidParams{}) == 0.0);

    // two vehicles: cost proportional to the summed duration
    ProblemInstance two = testutil::explicit_instance(2, 2,
                                                      {0, 8, 8, 8, 8, 0, 8, 8, 8},
                                                      {0, 1.0, 0.5, 1.0, 0, 0.25, 0.5, 0.25, 0},
                                                      {0.5, 0.5}, {1.0, 0.5});
    two.scenario = Scenario::Covid;
    const RoutePlan both = schedule_routes(two, {{1}, {2}});
    const RoutePlan first = schedule_routes(two, {{1}});
    const RoutePlan second = schedule_routes(two, {{2}});
    CHECK(cooling_travel_cost(both, CovidParams{}) ==
          Approx(cooling_travel_cost(first, CovidParams{}) +
                 cooling_travel_cost(second, CovidParams{}))
              .margin(1e-9));
}

TEST_CASE("a plan returning before departure is rejected") {
    RoutePlan corrupt;
    corrupt.routes = {{1}};
    corrupt.schedules.resize(1);
    corrupt.schedules[0].depart = 10.0;
    corrupt.schedules[0].return_time = 9.0;
    CHECK_THROWS_AS(cooling_travel_cost(corrupt, CovidParams{}), NegativeDuration);
}

TEST_CASE("loading cooling cost matches the reference parameters") {
    // total service time 0.5 h
    ProblemInstance inst = testutil::explicit_instance(1, 1, {0, 8, 8, 0}, {0, 1.0, 1.0, 0},
                                                       {0.5}, {0.5});
    inst.scenario = Scenario::Covid;
    const RoutePlan plan = schedule_routes(inst, {{1}});
    // (0.54 x 26.78 + 3.22) x 20 x 0.5 x 2 x 0.5
    CHECK(cooling_load_cost(plan, inst, CovidParams{}) == Approx(176.812).margin(1e-6));

    SECTION("zero service time, zero cost") {
        inst.sites[0].service_time = 0.0;
        const RoutePlan quick = schedule_routes(inst, {{1}});
        CHECK(cooling_load_cost(quick, inst, CovidParams{}) == 0.0);
    }
    SECTION("cost is linear in the door factor") {
        CovidParams closed;
        closed.door_factor = 0.25;
        CovidParams open;
        open.door_factor = 2.0;
        CHECK(cooling_load_cost(plan, inst, open) == 8.0 * cooling_load_cost(plan, inst, closed));
    }
}

TEST_CASE("the blend hits its boundaries exactly") {
    ProblemInstance inst = testutil::random_instance(5, 2, 51);
    inst.scenario = Scenario::Covid;
    inst.covid = CovidParams{};
    inst.covid->night_window_start = 0.0; // keep the tiny test window out of the way
    inst.covid->night_window_end = 1000.0;
    const RoutePlan plan = schedule_routes(inst, {{1, 2, 3}, {4, 5}});
    const RiskWeights w = default_risk_weights();

    const CostBreakdown at0 = evaluate_plan(inst, plan, w, 0.0);
    CHECK(at0.blended == at0.total_transport);
    const CostBreakdown at1 = evaluate_plan(inst, plan, w, 1.0);
    CHECK(at1.blended == at1.risk.total);

    for (double alpha : {0.25, 0.5, 0.75}) {
        const CostBreakdown mid = evaluate_plan(inst, plan, w, alpha);
        CHECK(mid.blended >= std::min(mid.total_transport, mid.risk.total) - 1e-9);
        CHECK(mid.blended <= std::max(mid.total_transport, mid.risk.total) + 1e-9);
    }
}

TEST_CASE("blend arithmetic matches the worked example") {
    // components 360 + 120 + 0 + 4788.72 + 176.812, risk 100, alpha one half
    CHECK(blend_costs(5445.532, 100.0, 0.5) == Approx(2772.766).margin(1e-9));
}

TEST_CASE("the covid total is its components plus the blend") {
    const ProblemInstance inst = three_hour_instance();
    ProblemInstance loose = inst;
    loose.covid->night_window_start = 0.0;
    loose.covid->night_window_end = 1000.0;
    testutil::add_uniform_risk(loose);
    const RoutePlan plan = schedule_routes(loose, {{1}});
    const CostBreakdown b = evaluate_plan(loose, plan, default_risk_weights(), 0.5);
    CHECK(b.cooling_travel == Approx(4788.72).margin(1e-6));
    CHECK(b.total_transport ==
          Approx(b.fixed + b.transport + b.penalty + b.cooling_travel + b.cooling_load)
              .margin(1e-9));
    CHECK(b.blended == Approx(0.5 * b.total_transport + 0.5 * b.risk.total).margin(1e-9));
}

TEST_CASE("the night window drives the covid penalty") {
    ProblemInstance inst = three_hour_instance();
    inst.fleet.window_start = 8.0; // fleet window says the 11.0 return is fine
    inst.fleet.window_end = 18.0;
    REQUIRE(inst.covid->night_window_start == 18.0);
    CHECK(effective_window(inst) == std::pair{18.0, 24.0});
    const RoutePlan plan = schedule_routes(inst, {{1}});
    const CostBreakdown b = evaluate_plan(inst, plan, RiskWeights{}, 0.0);
    // returns at 11.0, seven hours before the night window opens
    CHECK(b.penalty == Approx(7000.0).margin(1e-9));
}

TEST_CASE("general evaluation equals covid evaluation minus cooling, same window") {
    ProblemInstance covid = testutil::random_instance(6, 2, 53);
    covid.scenario = Scenario::Covid;
    covid.covid = CovidParams{};
    covid.covid->night_window_start = covid.fleet.window_start;
    covid.covid->night_window_end = covid.fleet.window_end;

    ProblemInstance general = covid;
    general.scenario = Scenario::General;
    general.covid.reset();

    const RoutePlan plan = schedule_routes(covid, {{1, 2, 3}, {4, 5, 6}});
    const RiskWeights w = default_risk_weights();
    const CostBreakdown c = evaluate_plan(covid, plan, w, 0.25);
    const CostBreakdown g = evaluate_plan(general, plan, w, 0.25);

    CHECK(c.fixed == g.fixed);
    CHECK(c.transport == g.transport);
    CHECK(c.penalty == g.penalty);
    CHECK(c.risk.total == g.risk.total);
    CHECK(c.cooling_travel > 0.0);
    CHECK(c.total_transport ==
          Approx(g.total_transport + c.cooling_travel + c.cooling_load).margin(1e-9));
}

TEST_CASE("covid parameter invariants are validated") {
    ProblemInstance inst = three_hour_instance();
    testutil::add_uniform_risk(inst);

    SECTION("door factor outside the empirical set") {
        inst.covid->door_factor = 0.7;
        bool found = false;
        for (const auto& v : validate_instance(inst)) found |= v.rule == "door_factor_enumerated";
        CHECK(found);
    }
    SECTION("non-positive physical parameter") {
        inst.covid->delta_t = 0.0;
        bool found = false;
        for (const auto& v : validate_instance(inst)) found |= v.rule == "covid_param_positive";
        CHECK(found);
    }
    SECTION("defaults are valid") {
        for (const auto& v : validate_instance(inst)) {
            INFO(v.str());
            CHECK(v.rule == "");
        }
    }
}
