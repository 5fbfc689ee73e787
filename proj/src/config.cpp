#include "ldcu/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ldcu/errors.hpp"

namespace ldcu {

namespace {

using nlohmann::json;

const std::set<std::string> known_keys = {
    "problem", "scheme", "nx", "ny", "t_final", "cfl", "theta", "gamma",
    "epsilon", "max_steps", "snapshot_times", "tv_window", "overshoot_window",
    "overshoot_lo", "overshoot_hi", "left", "right", "split", "domain",
};

double require_positive(const json& j, const std::string& key) {
    if (!j.is_number()) throw ConfigError("'" + key + "' must be a number");
    const double v = j.get<double>();
    if (!(v > 0.0)) throw ConfigError("'" + key + "' must be positive, got " + j.dump());
    return v;
}

int require_positive_int(const json& j, const std::string& key) {
    if (!j.is_number_integer()) throw ConfigError("'" + key + "' must be an integer");
    const long long v = j.get<long long>();
    if (v <= 0) throw ConfigError("'" + key + "' must be positive, got " + j.dump());
    return static_cast<int>(v);
}

std::pair<double, double> require_interval(const json& j, const std::string& key) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ConfigError("'" + key + "' must be a [lo, hi] pair");
    const double lo = j[0].get<double>(), hi = j[1].get<double>();
    if (!(lo < hi)) throw ConfigError("'" + key + "' must satisfy lo < hi");
    return {lo, hi};
}

Prim1 require_prim(const json& j, const std::string& key) {
    if (!j.is_array() || j.size() != 3)
        throw ConfigError("'" + key + "' must be [rho, u, p]");
    Prim1 w{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
    if (!(w.rho > 0.0) || !(w.p > 0.0))
        throw ConfigError("'" + key + "' must have positive rho and p");
    return w;
}

RunConfig from_json(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config root must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (!known_keys.count(key)) throw ConfigError("unknown config key '" + key + "'");
    }
    if (!doc.contains("problem") || !doc["problem"].is_string())
        throw ConfigError("'problem' (string) is required");

    RunConfig cfg;
    cfg.problem = doc["problem"].get<std::string>();
    if (doc.contains("scheme")) {
        if (!doc["scheme"].is_string()) throw ConfigError("'scheme' must be a string");
        cfg.scheme = flavor_from_string(doc["scheme"].get<std::string>());
    }
    if (doc.contains("nx")) cfg.nx = require_positive_int(doc["nx"], "nx");
    if (doc.contains("ny")) cfg.ny = require_positive_int(doc["ny"], "ny");
    if (doc.contains("t_final")) {
        if (!doc["t_final"].is_number()) throw ConfigError("'t_final' must be a number");
        cfg.t_final = doc["t_final"].get<double>();
        if (*cfg.t_final < 0.0) throw ConfigError("'t_final' must be nonnegative");
    }
    if (doc.contains("cfl")) {
        cfg.cfl = require_positive(doc["cfl"], "cfl");
        if (cfg.cfl >= 1.0) throw ConfigError("'cfl' must be below 1");
    }
    if (doc.contains("theta")) {
        cfg.theta = require_positive(doc["theta"], "theta");
        if (cfg.theta < 1.0 || cfg.theta > 2.0) throw ConfigError("'theta' must lie in [1, 2]");
    }
    if (doc.contains("gamma")) {
        cfg.gamma = require_positive(doc["gamma"], "gamma");
        if (cfg.gamma <= 1.0) throw ConfigError("'gamma' must exceed 1");
    }
    if (doc.contains("epsilon")) cfg.epsilon = require_positive(doc["epsilon"], "epsilon");
    if (doc.contains("max_steps")) {
        if (!doc["max_steps"].is_number_integer())
            throw ConfigError("'max_steps' must be an integer");
        cfg.max_steps = doc["max_steps"].get<long long>();
        if (*cfg.max_steps <= 0) throw ConfigError("'max_steps' must be positive");
    }
    if (doc.contains("snapshot_times")) {
        if (!doc["snapshot_times"].is_array())
            throw ConfigError("'snapshot_times' must be an array of numbers");
        for (const auto& t : doc["snapshot_times"]) {
            if (!t.is_number()) throw ConfigError("'snapshot_times' must be an array of numbers");
            const double v = t.get<double>();
            if (v < 0.0) throw ConfigError("'snapshot_times' entries must be nonnegative");
            cfg.snapshot_times.push_back(v);
        }
    }
    if (doc.contains("tv_window")) cfg.tv_window = require_interval(doc["tv_window"], "tv_window");
    if (doc.contains("overshoot_window"))
        cfg.overshoot_window = require_interval(doc["overshoot_window"], "overshoot_window");
    if (doc.contains("overshoot_lo")) cfg.overshoot_lo = doc["overshoot_lo"].get<double>();
    if (doc.contains("overshoot_hi")) cfg.overshoot_hi = doc["overshoot_hi"].get<double>();
    if (doc.contains("left")) cfg.left = require_prim(doc["left"], "left");
    if (doc.contains("right")) cfg.right = require_prim(doc["right"], "right");
    if (doc.contains("split")) cfg.split = doc["split"].get<double>();
    if (doc.contains("domain")) cfg.domain = require_interval(doc["domain"], "domain");
    return cfg;
}

json apply_overrides(json doc, const std::vector<std::string>& overrides) {
    for (const std::string& ov : overrides) {
        const size_t eq = ov.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("override '" + ov + "' is not of the form key=value");
        const std::string key = ov.substr(0, eq);
        const std::string value = ov.substr(eq + 1);
        if (!known_keys.count(key)) throw ConfigError("unknown config key '" + key + "'");
        json parsed = json::parse(value, nullptr, false);
        if (parsed.is_discarded()) parsed = value; // bare strings pass through
        doc[key] = parsed;
    }
    return doc;
}

} // namespace

RunConfig parse_config(const std::string& json_text) {
    return parse_config(json_text, {});
}

RunConfig parse_config(const std::string& json_text, const std::vector<std::string>& overrides) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded()) throw ConfigError("config is not valid JSON");
    return from_json(apply_overrides(std::move(doc), overrides));
}

RunConfig load_config_file(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), overrides);
}

AnyProblem build_problem(const RunConfig& cfg) {
    AnyProblem prob = [&]() -> AnyProblem {
        if (cfg.problem == "custom_riemann") {
            if (!cfg.left || !cfg.right || !cfg.split || !cfg.domain || !cfg.t_final)
                throw ConfigError(
                    "custom_riemann requires 'left', 'right', 'split', 'domain', 't_final'");
            return custom_riemann(*cfg.left, *cfg.right, *cfg.split, cfg.domain->first,
                                  cfg.domain->second, *cfg.t_final);
        }
        return make_problem(cfg.problem);
    }();

    std::visit(
        [&](auto& p) {
            p.gamma = cfg.gamma;
            if (cfg.t_final) p.t_final = *cfg.t_final;
        },
        prob);

    // snapshot times cannot exceed the final time
    const double t_final = std::visit([](const auto& p) { return p.t_final; }, prob);
    for (double t : cfg.snapshot_times)
        if (t > t_final)
            throw ConfigError("snapshot time " + std::to_string(t) + " exceeds t_final");
    return prob;
}

SchemeConfig scheme_config(const RunConfig& cfg) {
    SchemeConfig sc;
    sc.flavor = cfg.scheme;
    sc.gas.gamma = cfg.gamma;
    sc.limiter.theta = cfg.theta;
    sc.eps = cfg.epsilon;
    return sc;
}

} // namespace ldcu
