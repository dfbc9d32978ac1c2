// Copyright 2026 The kraus-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "kraus_forge/cli.h"
#include "kraus_forge/error.h"

namespace kraus_forge::cli {

using nlohmann::json;

namespace {

void check_keys(const json &obj, const std::set<std::string> &allowed, const std::string &where) {
    if (!obj.is_object()) {
        throw ConfigError(where + " must be a JSON object");
    }
    for (const auto &[key, value] : obj.items()) {
        if (!allowed.count(key)) {
            throw ConfigError("unknown key \"" + key + "\" in " + where);
        }
    }
}

double number_at(const json &obj, const std::string &key, const std::string &where) {
    const json &v = obj.at(key);
    if (!v.is_number()) {
        throw ConfigError(where + "." + key + " must be a number");
    }
    return v.get<double>();
}

template <typename T>
void read_number(const json &obj, const std::string &key, const std::string &where, T &dst) {
    if (obj.contains(key)) {
        dst = static_cast<T>(number_at(obj, key, where));
    }
}

std::string string_at(const json &obj, const std::string &key, const std::string &where) {
    const json &v = obj.at(key);
    if (!v.is_string()) {
        throw ConfigError(where + "." + key + " must be a string");
    }
    return v.get<std::string>();
}

Channel parse_channel(const std::string &s) {
    if (s == "gad") {
        return Channel::Gad;
    }
    if (s == "pd") {
        return Channel::Pd;
    }
    throw ConfigError("channel must be \"gad\" or \"pd\", got \"" + s + "\"");
}

OutputFormat parse_format(const std::string &s) {
    if (s == "json") {
        return OutputFormat::Json;
    }
    if (s == "csv") {
        return OutputFormat::Csv;
    }
    throw ConfigError("format must be \"json\" or \"csv\", got \"" + s + "\"");
}

double parse_double(const std::string &s, const std::string &what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw ConfigError(what + ": \"" + s + "\" is not a number");
    }
    return v;
}

void apply_lamb_shift(PhysicalParams &p, const std::string &s) {
    if (s == "none") {
        p.shift = ShiftMode::None;
    } else if (s == "quadrature") {
        p.shift = ShiftMode::Quadrature;
    } else {
        p.shift = ShiftMode::Value;
        p.shift_value = parse_double(s, "lamb_shift");
    }
}

PhysicalParams physical_from_json(const json &j) {
    const std::string where = "parameterization";
    check_keys(j, {"kind", "alpha", "omega0", "cutoff", "temperature", "ohmicity", "lamb_shift"},
               where);
    PhysicalParams p;
    read_number(j, "alpha", where, p.bath.alpha);
    read_number(j, "omega0", where, p.bath.omega0);
    read_number(j, "cutoff", where, p.bath.omega_c);
    read_number(j, "temperature", where, p.bath.temperature);
    read_number(j, "ohmicity", where, p.bath.ohmicity);
    if (j.contains("lamb_shift")) {
        const json &v = j.at("lamb_shift");
        if (v.is_number()) {
            p.shift = ShiftMode::Value;
            p.shift_value = v.get<double>();
        } else if (v.is_string()) {
            apply_lamb_shift(p, v.get<std::string>());
        } else {
            throw ConfigError("parameterization.lamb_shift must be a string or number");
        }
    }
    return p;
}

RatesParams rates_from_json(const json &j) {
    const std::string where = "parameterization";
    check_keys(j, {"kind", "x", "y", "z", "r"}, where);
    RatesParams p;
    read_number(j, "x", where, p.gad.x);
    read_number(j, "y", where, p.gad.y);
    read_number(j, "z", where, p.gad.z);
    read_number(j, "r", where, p.pd.r);
    return p;
}

ScaledParams scaled_from_json(const json &j) {
    const std::string where = "parameterization";
    check_keys(j, {"kind", "theta", "omega"}, where);
    ScaledParams p;
    read_number(j, "theta", where, p.theta);
    read_number(j, "omega", where, p.omega);
    return p;
}

// Command-line values; unset optionals leave the file config untouched.
struct Flags {
    std::string config;
    std::optional<std::string> channel;
    bool physical = false;
    bool rates = false;
    bool scaled = false;
    std::optional<double> alpha, omega0, cutoff, temperature, ohmicity;
    std::optional<std::string> lamb_shift;
    std::optional<double> x, y, z, rate;
    std::optional<double> theta, omega, tau;
    std::optional<double> t, t_start, t_end;
    std::optional<int> steps;
    std::optional<std::string> output, format;
    std::vector<std::string> tol;
    std::optional<double> kraus_cutoff;
    std::optional<std::string> input;
    std::string figure_name;
    std::vector<double> temperatures, times;
    std::optional<std::size_t> grid_u, grid_v;
    bool compare_standard_ad = false;
};

void add_common(CLI::App *sub, Flags &f) {
    sub->add_option("--config", f.config, "JSON run configuration; flags override it");
    sub->add_option("--channel", f.channel, "gad | pd");
    sub->add_flag("--physical", f.physical, "bath parameterization (alpha, omega0, cutoff, T)");
    sub->add_flag("--rates", f.rates, "rate parameterization (x, y, z | r)");
    sub->add_flag("--scaled", f.scaled, "dimensionless parameterization (theta, omega, tau)");
    sub->add_option("--alpha", f.alpha, "bath coupling");
    sub->add_option("--omega0", f.omega0, "qubit splitting");
    sub->add_option("--cutoff", f.cutoff, "bath cutoff frequency omega_c");
    sub->add_option("--temperature", f.temperature, "bath temperature (k_B = 1)");
    sub->add_option("--ohmicity", f.ohmicity, "spectral exponent s (1 = ohmic)");
    sub->add_option("--lamb-shift", f.lamb_shift, "none | quadrature | <value of x>");
    sub->add_option("--x", f.x, "GAD shift rate x");
    sub->add_option("--y", f.y, "GAD decay rate y");
    sub->add_option("--z", f.z, "GAD excitation rate z");
    sub->add_option("--rate", f.rate, "PD dephasing rate r");
    sub->add_option("--theta", f.theta, "scaled theta");
    sub->add_option("--omega", f.omega, "scaled Omega in [-2, 0)");
    sub->add_option("--tau", f.tau, "single scaled time tau");
    sub->add_option("--t", f.t, "single evolution time");
    sub->add_option("--t-start", f.t_start, "first time of the grid");
    sub->add_option("--t-end", f.t_end, "last time of the grid");
    sub->add_option("--steps", f.steps, "number of grid points");
    sub->add_option("-o,--output", f.output, "output file (derive, verify) or directory (figure)");
    sub->add_option("--format", f.format, "json | csv");
    sub->add_option("--tol", f.tol, "per-check tolerance override, name=value");
    sub->add_option("--kraus-cutoff", f.kraus_cutoff, "drop Choi eigenvalues at or below this");
}

template <typename T>
T &ensure(Parameterization &p) {
    if (!std::holds_alternative<T>(p)) {
        p = T{};
    }
    return std::get<T>(p);
}

void merge(RunConfig &cfg, const Flags &f) {
    if (f.channel) {
        cfg.channel = parse_channel(*f.channel);
    }
    const bool phys = f.physical || f.alpha || f.omega0 || f.cutoff || f.temperature ||
                      f.ohmicity || f.lamb_shift;
    const bool rates = f.rates || f.x || f.y || f.z || f.rate;
    const bool scaled = f.scaled || f.theta || f.omega || f.tau;
    if (int(phys) + int(rates) + int(scaled) > 1) {
        throw ConfigError("flags mix parameterizations; use exactly one of physical, rates, scaled");
    }
    if (phys) {
        auto &p = ensure<PhysicalParams>(cfg.params);
        if (f.alpha) p.bath.alpha = *f.alpha;
        if (f.omega0) p.bath.omega0 = *f.omega0;
        if (f.cutoff) p.bath.omega_c = *f.cutoff;
        if (f.temperature) p.bath.temperature = *f.temperature;
        if (f.ohmicity) p.bath.ohmicity = *f.ohmicity;
        if (f.lamb_shift) apply_lamb_shift(p, *f.lamb_shift);
    }
    if (rates) {
        auto &p = ensure<RatesParams>(cfg.params);
        if (f.x) p.gad.x = *f.x;
        if (f.y) p.gad.y = *f.y;
        if (f.z) p.gad.z = *f.z;
        if (f.rate) p.pd.r = *f.rate;
    }
    if (scaled) {
        auto &p = ensure<ScaledParams>(cfg.params);
        if (f.theta) p.theta = *f.theta;
        if (f.omega) p.omega = *f.omega;
    }

    if ((f.t || f.tau) && (f.t_start || f.t_end || f.steps)) {
        throw ConfigError("--t/--tau cannot be combined with --t-start/--t-end/--steps");
    }
    if (f.t && f.tau) {
        throw ConfigError("give either --t or --tau");
    }
    if (f.t || f.tau) {
        const double v = f.t ? *f.t : *f.tau;
        cfg.time = TimeGrid{v, v, 1};
    } else if (f.t_start || f.t_end || f.steps) {
        TimeGrid g = cfg.time.value_or(TimeGrid{});
        if (f.t_start) g.start = *f.t_start;
        g.end = f.t_end ? *f.t_end : (cfg.time ? g.end : g.start);
        if (f.steps) g.steps = *f.steps;
        cfg.time = g;
    }

    if (f.output) cfg.output_path = *f.output;
    if (f.format) cfg.format = parse_format(*f.format);
    if (f.kraus_cutoff) cfg.kraus_cutoff = *f.kraus_cutoff;
    for (const auto &entry : f.tol) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ConfigError("--tol expects name=value, got \"" + entry + "\"");
        }
        cfg.tolerances[entry.substr(0, eq)] = parse_double(entry.substr(eq + 1), "--tol");
    }
    if (f.input) cfg.input_document = *f.input;
    if (!f.temperatures.empty()) cfg.figure.temperatures = f.temperatures;
    if (!f.times.empty()) cfg.figure.times = f.times;
    if (f.grid_u) cfg.figure.grid_u = *f.grid_u;
    if (f.grid_v) cfg.figure.grid_v = *f.grid_v;
    if (f.compare_standard_ad) cfg.figure.compare_standard_ad = true;
}

RunConfig load_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file " + path);
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError("config file " + path + ": " + e.what());
    }
    return config_from_json(j);
}

int report_exception(std::ostream &err) {
    try {
        throw;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const IoError &e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIoError;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        const bool bad_input =
            e.code() == ErrorCode::InvalidParameter || e.code() == ErrorCode::NegativeTime;
        return bad_input ? kExitConfigError : kExitPipelineError;
    } catch (const json::exception &e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitPipelineError;
    }
}

}  // namespace

std::vector<double> TimeGrid::points() const {
    if (steps <= 1) {
        return {start};
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        out.push_back(k + 1 == steps ? end : start + (end - start) * k / (steps - 1));
    }
    return out;
}

std::string_view channel_name(Channel channel) {
    return channel == Channel::Gad ? "gad" : "pd";
}

RunConfig config_from_json(const json &j) {
    check_keys(j, {"channel", "parameterization", "time", "t", "tau", "output", "tolerances",
                   "kraus_cutoff", "figure", "input"},
               "config");
    RunConfig cfg;
    try {
        if (j.contains("channel")) {
            cfg.channel = parse_channel(string_at(j, "channel", "config"));
        }
        if (j.contains("parameterization")) {
            const json &p = j.at("parameterization");
            if (!p.is_object() || !p.contains("kind")) {
                throw ConfigError("parameterization needs a \"kind\"");
            }
            const std::string kind = string_at(p, "kind", "parameterization");
            if (kind == "physical") {
                cfg.params = physical_from_json(p);
            } else if (kind == "rates") {
                cfg.params = rates_from_json(p);
            } else if (kind == "scaled") {
                cfg.params = scaled_from_json(p);
            } else {
                throw ConfigError("parameterization.kind must be physical, rates or scaled");
            }
        }
        const int time_keys = int(j.contains("time")) + int(j.contains("t")) + int(j.contains("tau"));
        if (time_keys > 1) {
            throw ConfigError("give only one of time, t, tau");
        }
        if (j.contains("time")) {
            const json &g = j.at("time");
            check_keys(g, {"start", "end", "steps"}, "time");
            TimeGrid grid;
            read_number(g, "start", "time", grid.start);
            grid.end = grid.start;
            read_number(g, "end", "time", grid.end);
            read_number(g, "steps", "time", grid.steps);
            cfg.time = grid;
        }
        for (const char *key : {"t", "tau"}) {
            if (j.contains(key)) {
                const double v = number_at(j, key, "config");
                cfg.time = TimeGrid{v, v, 1};
            }
        }
        if (j.contains("output")) {
            const json &o = j.at("output");
            check_keys(o, {"path", "format"}, "output");
            if (o.contains("path")) cfg.output_path = string_at(o, "path", "output");
            if (o.contains("format")) cfg.format = parse_format(string_at(o, "format", "output"));
        }
        if (j.contains("tolerances")) {
            const json &t = j.at("tolerances");
            if (!t.is_object()) {
                throw ConfigError("tolerances must be an object");
            }
            for (const auto &[name, value] : t.items()) {
                cfg.tolerances[name] = number_at(t, name, "tolerances");
            }
        }
        read_number(j, "kraus_cutoff", "config", cfg.kraus_cutoff);
        if (j.contains("figure")) {
            const json &fig = j.at("figure");
            check_keys(fig, {"temperatures", "times", "grid_u", "grid_v", "compare_standard_ad"},
                       "figure");
            if (fig.contains("temperatures"))
                cfg.figure.temperatures = fig.at("temperatures").get<std::vector<double>>();
            if (fig.contains("times")) cfg.figure.times = fig.at("times").get<std::vector<double>>();
            read_number(fig, "grid_u", "figure", cfg.figure.grid_u);
            read_number(fig, "grid_v", "figure", cfg.figure.grid_v);
            if (fig.contains("compare_standard_ad"))
                cfg.figure.compare_standard_ad = fig.at("compare_standard_ad").get<bool>();
        }
        if (j.contains("input")) {
            cfg.input_document = string_at(j, "input", "config");
        }
    } catch (const json::exception &e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

void validate(const RunConfig &cfg) {
    if (cfg.channel == Channel::Pd && std::holds_alternative<ScaledParams>(cfg.params)) {
        throw ConfigError("the pd channel has no scaled parameterization; use --rate");
    }
    if (cfg.time) {
        const TimeGrid &g = *cfg.time;
        if (!std::isfinite(g.start) || !std::isfinite(g.end)) {
            throw ConfigError("time grid must be finite");
        }
        if (g.start > g.end) {
            throw ConfigError("time grid needs t_start <= t_end");
        }
        if (g.steps < 1) {
            throw ConfigError("time grid needs steps >= 1");
        }
        if (g.start < 0.0) {
            throw ConfigError("times must be >= 0");
        }
    }
    if (!(cfg.kraus_cutoff >= 0.0)) {
        throw ConfigError("kraus cutoff must be >= 0");
    }
    for (const auto &[name, value] : cfg.tolerances) {
        if (!(value >= 0.0)) {
            throw ConfigError("tolerance " + name + " must be >= 0");
        }
    }
    for (double t : cfg.figure.times) {
        if (!(t >= 0.0)) {
            throw ConfigError("figure times must be >= 0");
        }
    }
    for (double temp : cfg.figure.temperatures) {
        if (!(temp >= 0.0)) {
            throw ConfigError("figure temperatures must be >= 0");
        }
    }
    if (cfg.figure.grid_u < 2 || cfg.figure.grid_v < 2) {
        throw ConfigError("grid counts must be >= 2");
    }
}

double resolve_tolerance(const RunConfig &cfg, const std::string &name, double builtin) {
    if (const auto it = cfg.tolerances.find(name); it != cfg.tolerances.end()) {
        return it->second;
    }
    if (const char *env = std::getenv("KRAUS_FORGE_TOL")) {
        return parse_double(env, "KRAUS_FORGE_TOL");
    }
    return builtin;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Kraus operators for qubit damping channels"};
    app.require_subcommand(1);
    Flags flags;

    auto *derive = app.add_subcommand("derive", "derive Kraus sets from the master equation");
    add_common(derive, flags);

    auto *verify = app.add_subcommand("verify", "check closed forms and invariants");
    add_common(verify, flags);
    verify->add_option("--input", flags.input, "re-verify a derive JSON document");

    auto *figure = app.add_subcommand("figure", "emit Bloch-ellipsoid and volume-rate data");
    add_common(figure, flags);
    figure->add_option("figure", flags.figure_name, "bloch3d | volume_rate")
        ->required()
        ->check(CLI::IsMember({"bloch3d", "volume_rate"}));
    figure->add_option("--temperatures", flags.temperatures, "bath temperatures");
    figure->add_option("--times", flags.times, "snapshot times (bloch3d)");
    figure->add_option("--grid-u", flags.grid_u, "azimuthal samples");
    figure->add_option("--grid-v", flags.grid_v, "polar samples, poles included");
    figure->add_flag("--compare-standard-ad", flags.compare_standard_ad,
                     "also emit the zero-temperature AD clouds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    }

    try {
        RunConfig cfg = flags.config.empty() ? RunConfig{} : load_config_file(flags.config);
        merge(cfg, flags);
        validate(cfg);
        if (derive->parsed()) {
            return cmd_derive(cfg, out);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, out);
        }
        const Figure which = flags.figure_name == "bloch3d" ? Figure::Bloch3d : Figure::VolumeRate;
        return cmd_figure(cfg, which, out);
    } catch (...) {
        return report_exception(err);
    }
}

}  // namespace kraus_forge::cli
