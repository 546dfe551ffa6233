#pragma once

#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mwroute/ahp.hpp"
#include "mwroute/ga.hpp"
#include "mwroute/instance.hpp"

namespace mwroute {

namespace detail {

struct RiskFieldDef {
    const char* key;
    double EdgeRiskProfile::* member;
};

inline const std::array<RiskFieldDef, 19>& risk_field_defs() {
    static const std::array<RiskFieldDef, 19> defs{{
        {"accident_rate", &EdgeRiskProfile::accident_rate},
        {"leak_prob", &EdgeRiskProfile::leak_prob},
        {"length_km", &EdgeRiskProfile::length_km},
        {"speed_kmh", &EdgeRiskProfile::speed_kmh},
        {"water_area", &EdgeRiskProfile::water_area},
        {"air_area", &EdgeRiskProfile::air_area},
        {"soil_area", &EdgeRiskProfile::soil_area},
        {"sherwood_water", &EdgeRiskProfile::sherwood_water},
        {"sherwood_air", &EdgeRiskProfile::sherwood_air},
        {"sherwood_soil", &EdgeRiskProfile::sherwood_soil},
        {"harm_level", &EdgeRiskProfile::harm_level},
        {"fatality_rate", &EdgeRiskProfile::fatality_rate},
        {"impact_radius_km", &EdgeRiskProfile::impact_radius_km},
        {"population_density", &EdgeRiskProfile::population_density},
        {"segment_area", &EdgeRiskProfile::segment_area},
        {"impacted_area", &EdgeRiskProfile::impacted_area},
        {"personal_property_value", &EdgeRiskProfile::personal_property_value},
        {"public_property_value", &EdgeRiskProfile::public_property_value},
        {"damage_severity", &EdgeRiskProfile::damage_severity},
    }};
    return defs;
}

/// A partially specified risk profile: only the listed fields apply.
struct RiskSpec {
    std::vector<std::pair<double EdgeRiskProfile::*, double>> values;
    bool has_speed = false;
    bool has_length = false;

    void apply(EdgeRiskProfile& e) const {
        for (const auto& [member, value] : values) e.*member = value;
    }
};

inline double require_number(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError(where + ": expected a number");
    return j.get<double>();
}

inline int require_int(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    return j.get<int>();
}

inline RiskSpec parse_risk_fields(const nlohmann::json& j, const std::string& where,
                                  bool allow_endpoints) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    RiskSpec spec;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (allow_endpoints && (key == "from" || key == "to")) continue;
        const RiskFieldDef* def = nullptr;
        for (const auto& d : risk_field_defs())
            if (key == d.key) { def = &d; break; }
        if (!def) throw ParseError(where + ": unknown risk field '" + key + "'");
        spec.values.emplace_back(def->member, require_number(*it, where + "." + key));
        if (key == "speed_kmh") spec.has_speed = true;
        if (key == "length_km") spec.has_length = true;
    }
    return spec;
}

inline SquareMatrix parse_matrix(const nlohmann::json& j, std::size_t dim,
                                 const std::string& where) {
    if (!j.is_array() || j.size() != dim)
        throw ParseError(where + ": expected " + std::to_string(dim) + " rows");
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const auto& row = j[i];
        if (!row.is_array() || row.size() != dim)
            throw ParseError(where + "[" + std::to_string(i) + "]: expected " +
                             std::to_string(dim) + " columns");
        for (std::size_t k = 0; k < dim; ++k)
            m(i, k) = require_number(row[k], where + "[" + std::to_string(i) + "][" +
                                                 std::to_string(k) + "]");
    }
    return m;
}

inline nlohmann::json matrix_to_json(const SquareMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.order(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void reject_unknown_keys(const nlohmann::json& j, std::initializer_list<const char*> known,
                                const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) { ok = true; break; }
        if (!ok) throw ParseError(where + ": unknown key '" + it.key() + "'");
    }
}

inline CovidParams parse_covid(const nlohmann::json& j) {
    reject_unknown_keys(j,
                        {"deterioration", "conductivity", "body_surface", "delta_t", "unit_cooling",
                         "carriage_volume", "door_factor", "night_window_start", "night_window_end"},
                        "fleet.covid");
    CovidParams c;
    auto opt = [&](const char* key, double& slot) {
        if (j.contains(key)) slot = require_number(j.at(key), std::string("fleet.covid.") + key);
    };
    opt("deterioration", c.deterioration);
    opt("conductivity", c.conductivity);
    opt("body_surface", c.body_surface);
    opt("delta_t", c.delta_t);
    opt("unit_cooling", c.unit_cooling);
    opt("carriage_volume", c.carriage_volume);
    opt("door_factor", c.door_factor);
    opt("night_window_start", c.night_window_start);
    opt("night_window_end", c.night_window_end);
    return c;
}

inline nlohmann::json covid_to_json(const CovidParams& c) {
    return nlohmann::json{{"deterioration", c.deterioration},
                          {"conductivity", c.conductivity},
                          {"body_surface", c.body_surface},
                          {"delta_t", c.delta_t},
                          {"unit_cooling", c.unit_cooling},
                          {"carriage_volume", c.carriage_volume},
                          {"door_factor", c.door_factor},
                          {"night_window_start", c.night_window_start},
                          {"night_window_end", c.night_window_end}};
}

template <typename F>
auto rethrow_json_as_parse_error(const char* what, F&& body) {
    try {
        return body();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

} // namespace detail

/// Parses and resolves an instance document: applies risk defaults and
/// overrides, fills edge lengths from the distance matrix, derives travel
/// times from length/speed (or speeds from length/time) where absent.
/// Does not run validation; callers get the instance plus the violation list.
inline std::pair<ProblemInstance, std::vector<Violation>>
load_instance_json_unchecked_impl(const nlohmann::json& j) {
    using nlohmann::json;
    if (!j.is_object()) throw ParseError("instance: expected a JSON object");
    detail::reject_unknown_keys(j,
                                {"name", "description", "scenario", "depot_id", "sites", "distance",
                                 "travel_time", "coordinates", "risk_defaults", "risk_overrides",
                                 "fleet"},
                                "instance");

    ProblemInstance inst;
    if (j.contains("name")) inst.name = j.at("name").get<std::string>();
    if (j.contains("description")) inst.description = j.at("description").get<std::string>();

    const std::string scenario = j.at("scenario").get<std::string>();
    if (scenario == "general")
        inst.scenario = Scenario::General;
    else if (scenario == "covid")
        inst.scenario = Scenario::Covid;
    else
        throw ParseError("scenario: expected \"general\" or \"covid\", got \"" + scenario + "\"");

    inst.depot_id = detail::require_int(j.at("depot_id"), "depot_id");

    const auto& sites = j.at("sites");
    if (!sites.is_array() || sites.empty()) throw ParseError("sites: expected a nonempty array");
    for (std::size_t k = 0; k < sites.size(); ++k) {
        const auto& sj = sites[k];
        const std::string where = "sites[" + std::to_string(k) + "]";
        detail::reject_unknown_keys(sj, {"id", "demand", "service_time"}, where);
        Site s;
        s.id = detail::require_int(sj.at("id"), where + ".id");
        s.demand = detail::require_number(sj.at("demand"), where + ".demand");
        if (sj.contains("service_time"))
            s.service_time = detail::require_number(sj.at("service_time"), where + ".service_time");
        inst.sites.push_back(s);
    }
    std::sort(inst.sites.begin(), inst.sites.end(),
              [](const Site& a, const Site& b) { return a.id < b.id; });

    const std::size_t dim = inst.sites.size() + 1;
    inst.distance = detail::parse_matrix(j.at("distance"), dim, "distance");

    // fleet block
    const auto& fj = j.at("fleet");
    detail::reject_unknown_keys(fj,
                                {"num_vehicles", "capacity", "fixed_cost", "unit_transport_cost",
                                 "penalty", "window_start", "window_end", "depart",
                                 "transport_cost_mode", "covid"},
                                "fleet");
    FleetParams& f = inst.fleet;
    f.num_vehicles = detail::require_int(fj.at("num_vehicles"), "fleet.num_vehicles");
    f.capacity = detail::require_number(fj.at("capacity"), "fleet.capacity");
    f.fixed_cost = detail::require_number(fj.at("fixed_cost"), "fleet.fixed_cost");
    f.unit_transport_cost =
        detail::require_number(fj.at("unit_transport_cost"), "fleet.unit_transport_cost");
    f.penalty_per_hour = detail::require_number(fj.at("penalty"), "fleet.penalty");
    if (fj.contains("window_start"))
        f.window_start = detail::require_number(fj.at("window_start"), "fleet.window_start");
    if (fj.contains("window_end"))
        f.window_end = detail::require_number(fj.at("window_end"), "fleet.window_end");
    f.depart_time = fj.contains("depart")
                        ? detail::require_number(fj.at("depart"), "fleet.depart")
                        : f.window_start;
    if (fj.contains("transport_cost_mode")) {
        const std::string mode = fj.at("transport_cost_mode").get<std::string>();
        if (mode == "literal")
            inst.transport_mode = TransportCostMode::Literal;
        else if (mode == "load_weighted")
            inst.transport_mode = TransportCostMode::LoadWeighted;
        else
            throw ParseError("fleet.transport_cost_mode: expected \"literal\" or \"load_weighted\"");
    }
    if (fj.contains("covid")) inst.covid = detail::parse_covid(fj.at("covid"));

    if (j.contains("coordinates")) {
        const auto& cj = j.at("coordinates");
        if (!cj.is_array()) throw ParseError("coordinates: expected an array of [x,y] pairs");
        for (std::size_t k = 0; k < cj.size(); ++k) {
            const auto& row = cj[k];
            const std::string where = "coordinates[" + std::to_string(k) + "]";
            if (!row.is_array() || row.size() != 2) throw ParseError(where + ": expected [x,y]");
            inst.coordinates.push_back({detail::require_number(row[0], where + "[0]"),
                                        detail::require_number(row[1], where + "[1]")});
        }
    }

    // risk resolution
    const bool has_risk = j.contains("risk_defaults") || j.contains("risk_overrides");
    std::vector<char> speed_given;
    if (has_risk) {
        detail::RiskSpec defaults;
        if (j.contains("risk_defaults"))
            defaults = detail::parse_risk_fields(j.at("risk_defaults"), "risk_defaults", false);
        std::map<std::pair<int, int>, detail::RiskSpec> overrides;
        if (j.contains("risk_overrides")) {
            const auto& oj = j.at("risk_overrides");
            if (!oj.is_array()) throw ParseError("risk_overrides: expected an array");
            for (std::size_t k = 0; k < oj.size(); ++k) {
                const std::string where = "risk_overrides[" + std::to_string(k) + "]";
                const auto& entry = oj[k];
                if (!entry.is_object() || !entry.contains("from") || !entry.contains("to"))
                    throw ParseError(where + ": expected an object with 'from' and 'to'");
                const int from = detail::require_int(entry.at("from"), where + ".from");
                const int to = detail::require_int(entry.at("to"), where + ".to");
                if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= dim ||
                    static_cast<std::size_t>(to) >= dim)
                    throw ParseError(where + ": endpoint outside 0.." + std::to_string(dim - 1));
                if (!overrides.emplace(std::make_pair(from, to),
                                       detail::parse_risk_fields(entry, where, true))
                         .second)
                    throw ParseError(where + ": duplicate override for edge (" +
                                     std::to_string(from) + "," + std::to_string(to) + ")");
            }
        }
        inst.risk_grid.assign(dim * dim, EdgeRiskProfile{});
        speed_given.assign(dim * dim, 0);
        for (std::size_t a = 0; a < dim; ++a) {
            for (std::size_t b = 0; b < dim; ++b) {
                EdgeRiskProfile& e = inst.risk_grid[a * dim + b];
                defaults.apply(e);
                bool has_speed = defaults.has_speed;
                bool has_length = defaults.has_length;
                const auto it = overrides.find({static_cast<int>(a), static_cast<int>(b)});
                if (it != overrides.end()) {
                    it->second.apply(e);
                    has_speed |= it->second.has_speed;
                    has_length |= it->second.has_length;
                }
                if (!has_length) e.length_km = inst.distance(a, b);
                speed_given[a * dim + b] = has_speed;
            }
        }
    }

    // travel times: explicit matrix, or derived from length/speed
    if (j.contains("travel_time")) {
        inst.travel_time = detail::parse_matrix(j.at("travel_time"), dim, "travel_time");
    } else {
        if (!has_risk)
            throw ValidationError(
                "travel_time: matrix missing and no risk speeds available to derive it");
        inst.travel_time = SquareMatrix(dim);
        for (std::size_t a = 0; a < dim; ++a) {
            for (std::size_t b = 0; b < dim; ++b) {
                if (a == b) continue;
                const EdgeRiskProfile& e = inst.risk_grid[a * dim + b];
                if (!(e.speed_kmh > 0))
                    throw ValidationError("risk[" + std::to_string(a) + "][" + std::to_string(b) +
                                          "].speed_kmh: deriving travel_time needs a positive speed");
                inst.travel_time(a, b) = e.length_km / e.speed_kmh;
            }
        }
    }

    // back-fill speeds from length/time so every profile is self-consistent
    if (has_risk) {
        for (std::size_t a = 0; a < dim; ++a) {
            for (std::size_t b = 0; b < dim; ++b) {
                if (speed_given[a * dim + b]) continue;
                EdgeRiskProfile& e = inst.risk_grid[a * dim + b];
                const double t = inst.travel_time(a, b);
                if (t > 0 && e.length_km > 0)
                    e.speed_kmh = e.length_km / t;
                else if (t == 0 && e.length_km == 0)
                    e.speed_kmh = 1.0; // degenerate zero-length edge; leak probability is 0
                else
                    e.speed_kmh = 0.0; // impossible pair; validation reports it
            }
        }
    }

    std::vector<Violation> violations = validate_instance(inst);
    return {std::move(inst), std::move(violations)};
}

inline std::pair<ProblemInstance, std::vector<Violation>>
load_instance_json_unchecked(const nlohmann::json& j) {
    return detail::rethrow_json_as_parse_error("instance",
                                               [&] { return load_instance_json_unchecked_impl(j); });
}

/// Throwing wrapper: parse, resolve, validate. Total-demand overflow maps to
/// InfeasibleError, any other broken invariant to ValidationError.
inline ProblemInstance load_instance_json(const nlohmann::json& j) {
    auto [inst, violations] = load_instance_json_unchecked(j);
    if (!violations.empty()) {
        for (const auto& v : violations)
            if (v.rule == "fleet_capacity_total") throw InfeasibleError(v.str());
        std::string msg = violations.front().str();
        if (violations.size() > 1)
            msg += " (+" + std::to_string(violations.size() - 1) + " more)";
        throw ValidationError(msg);
    }
    return std::move(inst);
}

inline nlohmann::json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

inline std::pair<ProblemInstance, std::vector<Violation>>
load_instance_unchecked(const std::filesystem::path& path) {
    try {
        return load_instance_json_unchecked(parse_json_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

inline ProblemInstance load_instance(const std::filesystem::path& path) {
    try {
        return load_instance_json(parse_json_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

inline nlohmann::json instance_to_json(const ProblemInstance& inst) {
    using nlohmann::json;
    json j;
    if (!inst.name.empty()) j["name"] = inst.name;
    if (!inst.description.empty()) j["description"] = inst.description;
    j["scenario"] = inst.scenario == Scenario::Covid ? "covid" : "general";
    j["depot_id"] = inst.depot_id;
    json sites = json::array();
    for (const Site& s : inst.sites)
        sites.push_back({{"id", s.id}, {"demand", s.demand}, {"service_time", s.service_time}});
    j["sites"] = std::move(sites);
    j["distance"] = detail::matrix_to_json(inst.distance);
    j["travel_time"] = detail::matrix_to_json(inst.travel_time);
    if (!inst.coordinates.empty()) {
        json coords = json::array();
        for (const auto& c : inst.coordinates) coords.push_back({c[0], c[1]});
        j["coordinates"] = std::move(coords);
    }
    json fleet{{"num_vehicles", inst.fleet.num_vehicles},
               {"capacity", inst.fleet.capacity},
               {"fixed_cost", inst.fleet.fixed_cost},
               {"unit_transport_cost", inst.fleet.unit_transport_cost},
               {"penalty", inst.fleet.penalty_per_hour},
               {"window_start", inst.fleet.window_start},
               {"window_end", inst.fleet.window_end},
               {"depart", inst.fleet.depart_time}};
    if (inst.transport_mode == TransportCostMode::LoadWeighted)
        fleet["transport_cost_mode"] = "load_weighted";
    if (inst.covid) fleet["covid"] = detail::covid_to_json(*inst.covid);
    j["fleet"] = std::move(fleet);
    if (inst.has_risk()) {
        const std::size_t dim = inst.distance.order();
        json overrides = json::array();
        for (std::size_t a = 0; a < dim; ++a) {
            for (std::size_t b = 0; b < dim; ++b) {
                const EdgeRiskProfile& e = inst.risk_grid[a * dim + b];
                json entry{{"from", static_cast<int>(a)}, {"to", static_cast<int>(b)}};
                for (const auto& def : detail::risk_field_defs()) entry[def.key] = e.*(def.member);
                overrides.push_back(std::move(entry));
            }
        }
        j["risk_overrides"] = std::move(overrides);
    }
    return j;
}

/// Writes `text` via a temp file + rename so a failed write never leaves a
/// partial file behind.
inline void atomic_write_text(const std::filesystem::path& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path dir = path.parent_path();
    const fs::path tmp = (dir.empty() ? fs::path(".") : dir) / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out << text;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw Error("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw Error("failed to move " + tmp.string() + " into place: " + ec.message());
    }
}

inline void write_instance(const ProblemInstance& inst, const std::filesystem::path& path) {
    atomic_write_text(path, instance_to_json(inst).dump());
}

/// Plan file: a JSON array of routes, each an array of site ids.
inline std::vector<std::vector<int>> load_plan_file(const std::filesystem::path& path) {
    const nlohmann::json j = parse_json_file(path);
    if (!j.is_array()) throw ParseError(path.string() + ": expected an array of routes");
    std::vector<std::vector<int>> routes;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const auto& rj = j[k];
        const std::string where = path.string() + "[" + std::to_string(k) + "]";
        if (!rj.is_array()) throw ParseError(where + ": expected an array of site ids");
        std::vector<int> route;
        for (std::size_t i = 0; i < rj.size(); ++i)
            route.push_back(detail::require_int(rj[i], where + "[" + std::to_string(i) + "]"));
        routes.push_back(std::move(route));
    }
    return routes;
}

inline GaConfig load_ga_config_json_impl(const nlohmann::json& j) {
    detail::reject_unknown_keys(j,
                                {"population_size", "max_iterations", "improvement_epsilon",
                                 "convergence_patience", "crossover_prob", "mutation_prob",
                                 "elitism_count", "infeasibility_penalty", "rng_seed",
                                 "eval_workers"},
                                "ga_config");
    GaConfig c;
    if (j.contains("population_size"))
        c.population_size = detail::require_int(j.at("population_size"), "ga_config.population_size");
    if (j.contains("max_iterations"))
        c.max_iterations = detail::require_int(j.at("max_iterations"), "ga_config.max_iterations");
    if (j.contains("convergence_patience"))
        c.convergence_patience =
            detail::require_int(j.at("convergence_patience"), "ga_config.convergence_patience");
    if (j.contains("improvement_epsilon"))
        c.improvement_epsilon =
            detail::require_number(j.at("improvement_epsilon"), "ga_config.improvement_epsilon");
    if (j.contains("crossover_prob"))
        c.crossover_prob = detail::require_number(j.at("crossover_prob"), "ga_config.crossover_prob");
    if (j.contains("mutation_prob"))
        c.mutation_prob = detail::require_number(j.at("mutation_prob"), "ga_config.mutation_prob");
    if (j.contains("elitism_count"))
        c.elitism_count = detail::require_int(j.at("elitism_count"), "ga_config.elitism_count");
    if (j.contains("infeasibility_penalty"))
        c.infeasibility_penalty =
            detail::require_number(j.at("infeasibility_penalty"), "ga_config.infeasibility_penalty");
    if (j.contains("rng_seed"))
        c.rng_seed = j.at("rng_seed").get<std::uint64_t>();
    if (j.contains("eval_workers"))
        c.eval_workers = detail::require_int(j.at("eval_workers"), "ga_config.eval_workers");
    validate_config(c);
    return c;
}

inline GaConfig load_ga_config_json(const nlohmann::json& j) {
    return detail::rethrow_json_as_parse_error("ga_config", [&] { return load_ga_config_json_impl(j); });
}

inline GaConfig load_ga_config(const std::filesystem::path& path) {
    return load_ga_config_json(parse_json_file(path));
}

/// PCM file: a JSON n x n array of positive numbers.
inline PairwiseMatrix load_pcm(const std::filesystem::path& path) {
    const nlohmann::json j = parse_json_file(path);
    if (!j.is_array() || j.empty()) throw ParseError(path.string() + ": expected an n x n array");
    const std::size_t n = j.size();
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = j[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError(path.string() + ": row " + std::to_string(i) + " must have " +
                             std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k)
            entries.push_back(detail::require_number(
                row[k], path.string() + "[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    }
    return PairwiseMatrix(n, std::move(entries));
}

} // namespace mwroute
