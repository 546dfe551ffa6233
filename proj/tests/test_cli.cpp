#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mwroute/mwroute.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using Catch::Approx;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// run the CLI binary, capture stdout+stderr
RunResult run(const std::string& args) {
    static int counter = 0;
    const fs::path log = fs::temp_directory_path() / ("mwroute_cli_" + std::to_string(counter++) + ".log");
    const std::string cmd = std::string(MWROUTE_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = raw == -1 ? -1 : WEXITSTATUS(raw);
    r.out = slurp(log);
    fs::remove(log);
    return r;
}

const std::string day = std::string(MWROUTE_DATA_DIR) + "/synthetic_dalian_day.json";
const std::string night = std::string(MWROUTE_DATA_DIR) + "/synthetic_dalian_night.json";
const std::string small = std::string(MWROUTE_SAMPLES_DIR) + "/small_instance.json";
const std::string plan_small = std::string(MWROUTE_SAMPLES_DIR) + "/plan_small.json";

} // namespace

TEST_CASE("ahp prints the default weighting") {
    const RunResult r = run("ahp");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.5267") != std::string::npos);
    CHECK(r.out.find("0.3005") != std::string::npos);
    CHECK(r.out.find("0.0630") != std::string::npos);
    CHECK(r.out.find("0.1098") != std::string::npos);
    CHECK(r.out.find("lambda_max: 4.0201") != std::string::npos);
    CHECK(r.out.find("consistent: yes") != std::string::npos);
}

TEST_CASE("ahp reads a comparison matrix file") {
    const RunResult r = run("ahp --pcm " + std::string(MWROUTE_SAMPLES_DIR) + "/pcm_default.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.5267") != std::string::npos);
}

TEST_CASE("solve writes a self-consistent report") {
    const fs::path out = fs::temp_directory_path() / "mwroute_report.json";
    const RunResult r =
        run("solve --instance " + day + " --alpha 0.5 --seed 42 --out " + out.string());
    INFO(r.out);
    REQUIRE(r.exit_code == 0);

    const json report = json::parse(slurp(out));
    CHECK(report.at("schema") == 1);
    CHECK(report.at("alpha") == 0.5);
    REQUIRE(report.at("scenarios").contains("general"));
    const json& general = report.at("scenarios").at("general");

    // the solver beat the baseline end to end
    CHECK(general.at("ga").at("objective").get<double>() <
          general.at("baseline").at("mean_cost").get<double>());
    CHECK(general.at("savings_percent_cost").get<double>() > 0.0);

    // stored costs re-evaluate to the same numbers
    using namespace mwroute;
    const ProblemInstance inst = load_instance(day);
    std::vector<std::vector<int>> routes;
    for (const auto& rj : general.at("ga").at("routes")) routes.push_back(rj.get<std::vector<int>>());
    const RoutePlan plan = schedule_routes(inst, routes);
    const RiskWeights w = risk_weights_from_json(report.at("risk_weights"));
    const CostBreakdown fresh = evaluate_plan(inst, plan, w, 0.5);
    CHECK(fresh.blended ==
          Approx(general.at("ga").at("cost").at("blended").get<double>()).epsilon(1e-12));

    // and the CLI's own re-check agrees
    const RunResult check =
        run("validate --instance " + day + " --report " + out.string());
    INFO(check.out);
    CHECK(check.exit_code == 0);
    CHECK(check.out.find("self-consistent") != std::string::npos);

    fs::remove(out);
}

TEST_CASE("solve runs both scenarios from two instances") {
    const fs::path out = fs::temp_directory_path() / "mwroute_both.json";
    const RunResult r = run("solve --instance " + day + " --instance " + night +
                            " --mode both --alpha 0.4 --seed 7 --out " + out.string());
    INFO(r.out);
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(slurp(out));
    CHECK(report.at("scenarios").contains("general"));
    CHECK(report.at("scenarios").contains("covid"));
    CHECK(report.at("scenarios").at("covid").at("ga").at("cost").at("cooling_travel").get<double>() >
          0.0);
    fs::remove(out);
}

TEST_CASE("solve honors a ga-config file") {
    const fs::path cfg = fs::temp_directory_path() / "mwroute_tiny_ga.json";
    {
        std::ofstream out(cfg);
        out << R"({"population_size": 8, "max_iterations": 5, "convergence_patience": 5})";
    }
    const fs::path out = fs::temp_directory_path() / "mwroute_tiny_report.json";
    const RunResult r = run("solve --instance " + small + " --alpha 0.5 --seed 2 --ga-config " +
                            cfg.string() + " --out " + out.string());
    INFO(r.out);
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(slurp(out));
    CHECK(report.at("scenarios").at("general").at("ga").at("generations_run").get<int>() <= 5);
    fs::remove(cfg);
    fs::remove(out);

    // the checked-in sample parses too
    const RunResult sample = run("solve --instance " + small + " --alpha 0.5 --seed 2 --ga-config " +
                                 std::string(MWROUTE_SAMPLES_DIR) + "/ga_config.json --out " +
                                 out.string());
    CHECK(sample.exit_code == 0);
    fs::remove(out);
}

TEST_CASE("solve warns when alpha is defaulted") {
    const fs::path out = fs::temp_directory_path() / "mwroute_defaulted.json";
    const RunResult r = run("solve --instance " + small + " --seed 3 --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("defaulting to 0.5") != std::string::npos);
    fs::remove(out);
}

TEST_CASE("solve emits an svg map when asked") {
    const fs::path out = fs::temp_directory_path() / "mwroute_map.svg";
    const RunResult r =
        run("solve --instance " + small + " --alpha 0.5 --seed 3 --svg " + out.string() +
            " --out " + (fs::temp_directory_path() / "mwroute_svg_report.json").string());
    REQUIRE(r.exit_code == 0);
    const std::string svg = slurp(out);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("polyline") != std::string::npos);
    fs::remove(out);
    fs::remove(fs::temp_directory_path() / "mwroute_svg_report.json");
}

TEST_CASE("oracle solves the small sample") {
    const RunResult r = run("oracle --instance " + small + " --alpha 0.3");
    INFO(r.out);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("optimal route:") != std::string::npos);
    CHECK(r.out.find("candidates evaluated:") != std::string::npos);
}

TEST_CASE("baseline reports draws and means") {
    const RunResult r = run("baseline --instance " + small + " --alpha 0.5 --seed 7 --draws 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("3 random draws") != std::string::npos);
    CHECK(r.out.find("mean:") != std::string::npos);
}

TEST_CASE("validate accepts the bundled data and sample plan") {
    const RunResult inst = run("validate --instance " + day);
    CHECK(inst.exit_code == 0);
    CHECK(inst.out.find("instance: ok") != std::string::npos);

    const RunResult plan = run("validate --instance " + small + " --plan " + plan_small);
    INFO(plan.out);
    CHECK(plan.exit_code == 0);
    CHECK(plan.out.find("plan: ok") != std::string::npos);
}

TEST_CASE("validate flags a broken plan") {
    const fs::path bad = fs::temp_directory_path() / "mwroute_bad_plan.json";
    {
        std::ofstream out(bad);
        out << "[[1,2,5],[7,3,6,4],[1]]"; // site 1 twice
    }
    const RunResult r = run("validate --instance " + small + " --plan " + bad.string());
    CHECK(r.exit_code == 2);
    fs::remove(bad);
}

TEST_CASE("exit codes distinguish usage, data and success") {
    CHECK(run("frobnicate").exit_code == 1);                    // unknown subcommand
    CHECK(run("solve --bogus-flag 1").exit_code == 1);          // unknown flag
    CHECK(run("solve --seed 1").exit_code == 1);                // missing instance
    CHECK(run("solve --instance /no/such/file.json --seed 1 --alpha 0.5").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("a validation failure in the instance exits with 2") {
    const fs::path bad = fs::temp_directory_path() / "mwroute_bad_instance.json";
    using namespace mwroute;
    nlohmann::json doc = instance_to_json(load_instance(small));
    doc["sites"][0]["demand"] = 99.0; // exceeds vehicle capacity
    atomic_write_text(bad, doc.dump());
    const RunResult r = run("solve --instance " + bad.string() + " --alpha 0.5 --seed 1");
    CHECK(r.exit_code == 2);
    fs::remove(bad);
}
