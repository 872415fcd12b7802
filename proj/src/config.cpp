#include "isacsim/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "isacsim/errors.hpp"
#include "isacsim/table.hpp"
#include "isacsim/units.hpp"

namespace isacsim {

namespace {

using nlohmann::json;

struct Suffix {
    const char* name;
    double factor;  // multiplicative, or
    bool db = false; // decibel-style conversion
    double db_scale = 1.0;
};

const std::map<Quantity, std::vector<Suffix>>& suffix_table() {
    static const std::map<Quantity, std::vector<Suffix>> table = {
        {Quantity::kPower, {{"W", 1.0}, {"mW", 1e-3}, {"dBm", 1e-3, true}}},
        {Quantity::kGain, {{"linear", 1.0}, {"dBi", 1.0, true}, {"dB", 1.0, true}}},
        {Quantity::kLength, {{"m", 1.0}, {"km", 1e3}}},
        {Quantity::kIntensity, {{"per_m2", 1.0}, {"per_km2", 1e-6}}},
        {Quantity::kSpeed, {{"m_per_s", 1.0}, {"km_per_h", 1.0 / 3.6}}},
        {Quantity::kTime, {{"s", 1.0}, {"ms", 1e-3}}},
        {Quantity::kArea, {{"m2", 1.0}, {"km2", 1e6}}},
    };
    return table;
}

std::string accepted_suffixes(Quantity kind) {
    std::string s;
    for (const auto& suf : suffix_table().at(kind)) {
        if (!s.empty()) s += ", ";
        s += suf.name;
    }
    return s;
}

double get_quantity(const json& obj, const std::string& key, Quantity kind) {
    if (!obj.contains(key)) throw ConfigError("missing config key: " + key);
    const json& v = obj.at(key);
    if (v.is_number())
        throw ConfigError("config key '" + key + "' needs an explicit unit suffix (" +
                          accepted_suffixes(kind) + "); bare numbers are rejected");
    if (!v.is_string())
        throw ConfigError("config key '" + key + "' must be a string like \"46 dBm\"");
    return parse_quantity(v.get<std::string>(), kind);
}

double get_number(const json& obj, const std::string& key) {
    if (!obj.contains(key)) throw ConfigError("missing config key: " + key);
    const json& v = obj.at(key);
    if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a plain number");
    return v.get<double>();
}

RadioNodeParams parse_node(const json& obj, const std::string& label) {
    if (!obj.is_object()) throw ConfigError("config section '" + label + "' must be an object");
    RadioNodeParams node;
    node.tx_power = get_quantity(obj, "tx_power", Quantity::kPower);
    node.antenna_gain = get_quantity(obj, "antenna_gain", Quantity::kGain);
    node.path_loss_exponent = get_number(obj, "path_loss_exponent");
    return node;
}

} // namespace

double parse_quantity(const std::string& text, Quantity kind) {
    const auto space = text.find_first_of(" \t");
    if (space == std::string::npos)
        throw ConfigError("quantity '" + text + "' needs a unit suffix (" +
                          accepted_suffixes(kind) + ")");
    const std::string num_part = text.substr(0, space);
    std::string suffix = text.substr(space + 1);
    while (!suffix.empty() && (suffix.front() == ' ' || suffix.front() == '\t'))
        suffix.erase(suffix.begin());

    double value = 0.0;
    const char* begin = num_part.data();
    const char* end = begin + num_part.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr != end)
        throw ConfigError("cannot parse number in quantity '" + text + "'");

    for (const auto& suf : suffix_table().at(kind)) {
        if (suffix == suf.name) {
            if (suf.db) return db_to_linear(value) * suf.factor;
            return value * suf.factor;
        }
    }
    throw ConfigError("unknown unit '" + suffix + "' in quantity '" + text + "' (accepted: " +
                      accepted_suffixes(kind) + ")");
}

SimConfig ExperimentConfig::sim_config() const {
    SimConfig cfg;
    cfg.net = net;
    cfg.window = window.value_or(Window{0.0, 0.0, true});
    cfg.replications = replications;
    cfg.periods_per_drv = periods_per_drv;
    cfg.seed = seed;
    cfg.fidelity = fidelity;
    return cfg;
}

ExperimentConfig default_config() {
    // Default deployment: BS layer 46 dBm / 14 dBi, DRV layer 30 dBm / 5 dBi,
    // lambda_v = 2 lambda_b = 1 per km^2, u = 1.4 m/s, E[T_s] = 0.5 s.
    static const char* kDefaultJson = R"({
  "network": {
    "bs":  {"tx_power": "46 dBm", "antenna_gain": "14 dBi", "path_loss_exponent": 4.0},
    "drv": {"tx_power": "30 dBm", "antenna_gain": "5 dBi",  "path_loss_exponent": 4.0},
    "wavelength": "0.1 m",
    "mean_rcs": "1 m2",
    "clutter_rcs": "0 m2",
    "bs_intensity": "0.5 per_km2",
    "drv_intensity": "1 per_km2",
    "speed": "1.4 m_per_s",
    "pause_mean": "0.5 s",
    "pri": "0.05 s"
  },
  "sim": {"replications": 1000, "periods_per_drv": 100, "fidelity": "assumption_matched"},
  "seed": 20250811,
  "output_dir": "out",
  "coverage_cases": [
    {"name": "case1", "alpha_b": 4.0, "alpha_v": 4.0, "d_v": "500 m", "n_angles": 720},
    {"name": "case2", "alpha_b": 3.0, "alpha_v": 5.0, "d_v": "500 m", "n_angles": 720}
  ],
  "sweep": {"parameter": "drv_intensity", "min": "0.5 per_km2", "max": "5 per_km2",
            "steps": 4, "scale": "log"}
})";
    return parse_config(kDefaultJson);
}

ExperimentConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be a JSON object");

    ExperimentConfig cfg;
    cfg.config_hash = fnv1a64(root.dump());

    if (!root.contains("network")) throw ConfigError("missing config section: network");
    const json& net = root.at("network");
    cfg.net.bs = parse_node(net.value("bs", json::object()), "network.bs");
    cfg.net.drv = parse_node(net.value("drv", json::object()), "network.drv");
    cfg.net.wavelength = get_quantity(net, "wavelength", Quantity::kLength);
    cfg.net.mean_rcs = get_quantity(net, "mean_rcs", Quantity::kArea);
    cfg.net.clutter_rcs = get_quantity(net, "clutter_rcs", Quantity::kArea);
    cfg.net.bs_intensity = get_quantity(net, "bs_intensity", Quantity::kIntensity);
    cfg.net.drv_intensity = get_quantity(net, "drv_intensity", Quantity::kIntensity);
    cfg.net.speed = get_quantity(net, "speed", Quantity::kSpeed);
    cfg.net.pause_mean = get_quantity(net, "pause_mean", Quantity::kTime);
    cfg.net.pri = get_quantity(net, "pri", Quantity::kTime);

    try {
        validate(cfg.net);
    } catch (const ModelValidityError&) {
        throw; // surfaced with exit code 2 by the CLI
    }

    if (root.contains("sim")) {
        const json& sim = root.at("sim");
        if (sim.contains("replications"))
            cfg.replications = static_cast<int>(get_number(sim, "replications"));
        if (sim.contains("periods_per_drv"))
            cfg.periods_per_drv = static_cast<int>(get_number(sim, "periods_per_drv"));
        if (sim.contains("fidelity")) {
            const std::string f = sim.at("fidelity").get<std::string>();
            if (f == "assumption_matched")
                cfg.fidelity = Fidelity::kAssumptionMatched;
            else if (f == "full")
                cfg.fidelity = Fidelity::kFull;
            else
                throw ConfigError("sim.fidelity must be assumption_matched or full, got " + f);
        }
        if (sim.contains("window")) {
            const json& w = sim.at("window");
            Window win;
            win.width = get_quantity(w, "width", Quantity::kLength);
            win.height = get_quantity(w, "height", Quantity::kLength);
            win.wrap = w.value("wrap", true);
            if (!(win.width > 0.0 && win.height > 0.0))
                throw ConfigError("sim.window must have positive extent");
            cfg.window = win;
        }
        if (cfg.replications < 1) throw ConfigError("sim.replications must be >= 1");
        if (cfg.periods_per_drv < 1) throw ConfigError("sim.periods_per_drv must be >= 1");
    }

    if (root.contains("seed")) {
        const json& s = root.at("seed");
        if (!s.is_number_unsigned() && !s.is_number_integer())
            throw ConfigError("seed must be an integer");
        cfg.seed = s.get<std::uint64_t>();
    }
    if (root.contains("output_dir")) cfg.output_dir = root.at("output_dir").get<std::string>();

    if (root.contains("coverage_cases")) {
        for (const json& c : root.at("coverage_cases")) {
            CoverageCase cc;
            cc.name = c.value("name", "case");
            cc.alpha_b = get_number(c, "alpha_b");
            cc.alpha_v = get_number(c, "alpha_v");
            cc.d_v = get_quantity(c, "d_v", Quantity::kLength);
            if (c.contains("n_angles")) cc.n_angles = static_cast<int>(get_number(c, "n_angles"));
            if (cc.n_angles < 16) throw ConfigError("coverage case n_angles must be >= 16");
            if (c.contains("expansion_point")) {
                const json& ep = c.at("expansion_point");
                cc.expansion_point = Point2{get_quantity(ep, "x", Quantity::kLength),
                                            get_quantity(ep, "y", Quantity::kLength)};
            }
            cfg.coverage_cases.push_back(cc);
        }
    }

    if (root.contains("sweep")) {
        const json& sw = root.at("sweep");
        cfg.sweep.parameter = sw.value("parameter", "");
        Quantity kind;
        if (cfg.sweep.parameter == "drv_intensity")
            kind = Quantity::kIntensity;
        else if (cfg.sweep.parameter == "pri")
            kind = Quantity::kTime;
        else if (cfg.sweep.parameter == "speed")
            kind = Quantity::kSpeed;
        else
            throw ConfigError("sweep.parameter must be drv_intensity, pri or speed, got '" +
                              cfg.sweep.parameter + "'");
        cfg.sweep.min = get_quantity(sw, "min", kind);
        cfg.sweep.max = get_quantity(sw, "max", kind);
        cfg.sweep.steps = static_cast<int>(get_number(sw, "steps"));
        const std::string scale = sw.value("scale", "linear");
        if (scale == "log")
            cfg.sweep.log_scale = true;
        else if (scale != "linear")
            throw ConfigError("sweep.scale must be linear or log");
        if (cfg.sweep.steps < 2) throw ConfigError("sweep.steps must be >= 2");
        if (!(cfg.sweep.max > cfg.sweep.min)) throw ConfigError("sweep.max must exceed sweep.min");
        if (cfg.sweep.log_scale && !(cfg.sweep.min > 0.0))
            throw ConfigError("log sweep requires min > 0");
    }

    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

std::vector<double> sweep_values(const SweepSpec& sweep) {
    if (sweep.steps < 2) throw ConfigError("sweep needs at least 2 steps");
    std::vector<double> out(static_cast<std::size_t>(sweep.steps));
    for (int i = 0; i < sweep.steps; ++i) {
        const double t = static_cast<double>(i) / (sweep.steps - 1);
        out[static_cast<std::size_t>(i)] =
            sweep.log_scale
                ? sweep.min * std::pow(sweep.max / sweep.min, t)
                : sweep.min + (sweep.max - sweep.min) * t;
    }
    return out;
}

} // namespace isacsim
