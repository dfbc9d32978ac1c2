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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "kraus_forge/bloch.h"
#include "kraus_forge/cli.h"
#include "kraus_forge/error.h"
#include "kraus_forge/serialize.h"

namespace kraus_forge::cli {

using nlohmann::json;

namespace {

// One GAD evaluation point: the generator the pipeline exponentiates, the
// time it runs for, and the same point in scaled variables.
struct GadPoint {
    SuperopMatrix generator;
    double time = 0.0;
    GadScaled scaled;
};

GadRates physical_rates(const PhysicalParams &p) {
    switch (p.shift) {
        case ShiftMode::None:
            return rates_from_physics(p.bath, 0.0);
        case ShiftMode::Value:
            return rates_from_physics(p.bath, p.shift_value);
        case ShiftMode::Quadrature:
            break;
    }
    return rates_from_physics(p.bath);
}

std::optional<GadRates> gad_rates(const RunConfig &cfg) {
    if (const auto *p = std::get_if<PhysicalParams>(&cfg.params)) {
        return physical_rates(*p);
    }
    if (const auto *p = std::get_if<RatesParams>(&cfg.params)) {
        validate(p->gad);
        return p->gad;
    }
    return std::nullopt;
}

PdParams pd_params(const RunConfig &cfg) {
    if (const auto *p = std::get_if<PhysicalParams>(&cfg.params)) {
        return pd_rate_from_physics(p->bath);
    }
    if (const auto *p = std::get_if<RatesParams>(&cfg.params)) {
        validate(p->pd);
        return p->pd;
    }
    throw ConfigError("pd channel needs --rates (--rate) or --physical parameters");
}

std::vector<GadPoint> gad_points(const RunConfig &cfg, const std::vector<double> &times) {
    std::vector<GadPoint> points;
    if (const auto rates = gad_rates(cfg)) {
        const SuperopMatrix generator = gad_L(*rates);
        for (double t : times) {
            points.push_back({generator, t, rescale(*rates, t)});
        }
        return points;
    }
    const auto *p = std::get_if<ScaledParams>(&cfg.params);
    if (p == nullptr) {
        throw ConfigError("gad channel needs --physical, --rates or --scaled parameters");
    }
    GadScaled check{p->theta, p->omega, 0.0};
    validate(check);
    const SuperopMatrix generator = gad_scaled_L(p->theta, p->omega);
    for (double tau : times) {
        points.push_back({generator, tau, GadScaled{p->theta, p->omega, tau}});
    }
    return points;
}

json parameters_json(const RunConfig &cfg) {
    json j = json::object();
    if (const auto *p = std::get_if<PhysicalParams>(&cfg.params)) {
        j["kind"] = "physical";
        j["alpha"] = p->bath.alpha;
        j["omega0"] = p->bath.omega0;
        j["cutoff"] = p->bath.omega_c;
        j["temperature"] = p->bath.temperature;
        j["ohmicity"] = p->bath.ohmicity;
        if (p->shift == ShiftMode::Value) {
            j["lamb_shift"] = p->shift_value;
        } else {
            j["lamb_shift"] = p->shift == ShiftMode::None ? "none" : "quadrature";
        }
    } else if (const auto *p = std::get_if<RatesParams>(&cfg.params)) {
        j["kind"] = "rates";
        if (cfg.channel == Channel::Gad) {
            j["x"] = p->gad.x;
            j["y"] = p->gad.y;
            j["z"] = p->gad.z;
        } else {
            j["r"] = p->pd.r;
        }
    } else if (const auto *p = std::get_if<ScaledParams>(&cfg.params)) {
        j["kind"] = "scaled";
        j["theta"] = p->theta;
        j["omega"] = p->omega;
    }
    return j;
}

std::ofstream open_output(const std::string &path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open " + path + " for writing");
    }
    return f;
}

void finish_output(std::ofstream &f, const std::string &path) {
    f.flush();
    if (!f) {
        throw IoError("write to " + path + " failed");
    }
}

// Writes `text` to cfg.output_path, or to `out` when no path is set.
void emit(const RunConfig &cfg, const std::string &text, std::ostream &out) {
    if (cfg.output_path.empty()) {
        out << text;
        return;
    }
    auto f = open_output(cfg.output_path);
    f << text;
    finish_output(f, cfg.output_path);
}

std::vector<double> flatten(const QubitOperator &op) {
    std::vector<double> v;
    for (const Complex &c : op.data) {
        v.push_back(c.real());
        v.push_back(c.imag());
    }
    return v;
}

// ---- derive ----

struct DerivedPoint {
    double t = 0.0;
    std::optional<GadScaled> scaled;
    KrausSet kraus;
};

std::vector<DerivedPoint> derive_points(const RunConfig &cfg) {
    if (!cfg.time) {
        throw ConfigError("derive needs a time: --t, --tau or --t-start/--t-end/--steps");
    }
    const std::vector<double> times = cfg.time->points();
    std::vector<DerivedPoint> out;
    if (cfg.channel == Channel::Pd) {
        const SuperopMatrix generator = pd_L(pd_params(cfg));
        for (double t : times) {
            out.push_back({t, std::nullopt, derive_kraus(generator, t, cfg.kraus_cutoff)});
        }
        return out;
    }
    for (const GadPoint &p : gad_points(cfg, times)) {
        out.push_back({p.time, p.scaled, derive_kraus(p.generator, p.time, cfg.kraus_cutoff)});
    }
    return out;
}

std::string derive_json(const RunConfig &cfg, const std::vector<DerivedPoint> &points) {
    json doc;
    doc["channel"] = std::string(channel_name(cfg.channel));
    doc["parameterization"] = parameters_json(cfg);
    if (cfg.channel == Channel::Gad) {
        if (const auto rates = gad_rates(cfg)) {
            doc["rates"] = {{"x", rates->x}, {"y", rates->y}, {"z", rates->z}};
        }
    } else {
        doc["rates"] = {{"r", pd_params(cfg).r}};
    }
    doc["kraus_cutoff"] = cfg.kraus_cutoff;
    json list = json::array();
    for (const DerivedPoint &p : points) {
        json item = kraus_set_to_json(p.kraus);
        item["t"] = p.t;
        if (p.scaled) {
            item["scaled"] = {
                {"theta", p.scaled->theta}, {"omega", p.scaled->omega}, {"tau", p.scaled->tau}};
        }
        list.push_back(std::move(item));
    }
    doc["points"] = std::move(list);
    return doc.dump(2) + "\n";
}

std::string derive_csv(const std::vector<DerivedPoint> &points) {
    std::vector<std::vector<double>> rows;
    for (const DerivedPoint &p : points) {
        const double residual = p.kraus.completeness_residual();
        for (std::size_t k = 0; k < p.kraus.size(); ++k) {
            std::vector<double> row{p.t, double(k), p.kraus.weights()[k], residual};
            const auto entries = flatten(p.kraus[k]);
            row.insert(row.end(), entries.begin(), entries.end());
            rows.push_back(std::move(row));
        }
    }
    std::ostringstream s;
    write_csv(s,
              {"t", "index", "weight", "completeness_residual", "e00_re", "e00_im", "e01_re",
               "e01_im", "e10_re", "e10_im", "e11_re", "e11_im"},
              rows);
    return s.str();
}

// ---- verify ----

struct Check {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed() const {
        return std::isfinite(residual) && residual <= tolerance;
    }
};

class Report {
   public:
    explicit Report(const RunConfig &cfg) : cfg_(cfg) {}

    // Keeps the worst residual seen for `name`.
    void record(const std::string &name, double residual, double builtin) {
        for (Check &c : checks_) {
            if (c.name == name) {
                if (!(residual <= c.residual)) {
                    c.residual = residual;
                }
                return;
            }
        }
        checks_.push_back({name, residual, resolve_tolerance(cfg_, name, builtin)});
    }

    const std::vector<Check> &checks() const {
        return checks_;
    }

    bool all_passed() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const Check &c) { return c.passed(); });
    }

   private:
    const RunConfig &cfg_;
    std::vector<Check> checks_;
};

double sorted_diff(std::array<double, 4> a, std::array<double, 4> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double m = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

double bloch_error(const KrausSet &kraus, double u, double v, const Vec3 &expected) {
    const Vec3 got = bloch_vector(apply_channel(kraus, density_from_bloch(unit_bloch(u, v))));
    double m = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        m = std::max(m, std::abs(got[i] - expected[i]));
    }
    return m;
}

constexpr std::array<double, 3> kThetas{0.0, 1.0, 5.0};
constexpr std::array<double, 3> kOmegas{-2.0, -1.0, -0.1};
constexpr std::array<double, 5> kTaus{0.1, 0.5, 1.0, 2.0, 5.0};
constexpr std::size_t kAngleGrid = 12;

void verify_gad(Report &r) {
    const HermitianBasis &basis = HermitianBasis::pauli();
    for (double omega : kOmegas) {
        for (double tau : kTaus) {
            const auto l0 = propagate(gad_scaled_L(0.0, omega), tau);
            const auto l5 = propagate(gad_scaled_L(5.0, omega), tau);
            r.record("gad.theta_independence",
                     sorted_diff(choi_from_propagator(l0, basis).eigenvalues(),
                                 choi_from_propagator(l5, basis).eigenvalues()),
                     1e-12);
            const KrausSet standard = gad_kraus_closed(GadScaled{0.0, -2.0, tau});
            r.record("ad.standard_vs_textbook",
                     choi_distance(standard, textbook_ad_kraus(-std::expm1(-2.0 * tau))), 1e-9);
        }
    }
    for (double theta : kThetas) {
        for (double omega : kOmegas) {
            const SuperopMatrix generator = gad_scaled_L(theta, omega);
            for (double tau : kTaus) {
                const GadScaled s{theta, omega, tau};
                const SuperopMatrix numeric = propagate(generator, tau);
                r.record("gad.propagator_closed_vs_numeric",
                         max_abs_diff(gad_F_closed(s).entries, numeric.entries), 1e-10);

                const ChoiMatrix choi = choi_from_propagator(numeric, basis);
                const auto &ev = choi.eigenvalues();
                r.record("gad.choi_eigenvalues", sorted_diff(ev, gad_choi_eigenvalues(s)), 1e-10);
                r.record("gad.choi_trace", std::abs(ev[0] + ev[1] + ev[2] + ev[3] - 2.0), 1e-12);

                const KrausSet pipeline = kraus_from_choi(choi, basis);
                const KrausSet closed = gad_kraus_closed(s);
                const KrausSet reference =
                    reference_gad_kraus(ReferenceGadParams::from_scaled(s))
                        .left_multiplied(z_rotation(theta * tau));
                r.record("gad.completeness_pipeline", pipeline.completeness_residual(), 1e-9);
                r.record("gad.completeness_closed", closed.completeness_residual(), 1e-9);
                r.record("gad.completeness_reference", reference.completeness_residual(), 1e-9);
                r.record("gad.closed_vs_pipeline", choi_distance(closed, pipeline), 1e-9);
                r.record("gad.reference_vs_pipeline", choi_distance(reference, pipeline), 1e-9);

                double action = 0.0;
                for (std::size_t i = 0; i < kAngleGrid; ++i) {
                    const double u = 2.0 * M_PI * double(i) / double(kAngleGrid);
                    for (std::size_t j = 0; j < kAngleGrid; ++j) {
                        const double v = M_PI * double(j) / double(kAngleGrid - 1);
                        action = std::max(action, bloch_error(pipeline, u, v, gad_bloch(s, u, v)));
                    }
                }
                r.record("gad.channel_action", action, 1e-9);
                r.record("gad.volume",
                         std::abs(map_volume(bloch_map(pipeline)) - bloch_volume(s)), 1e-10);
            }
            const KrausSet late = derive_kraus(generator, 20.0);
            r.record("gad.asymptotic", choi_distance(late, gad_kraus_asymptotic(omega)), 1e-7);
        }
    }
}

void verify_pd(Report &r) {
    const PdParams params{1.0};
    const SuperopMatrix generator = pd_L(params);
    for (double t : {0.1, 1.0, 5.0}) {
        const KrausSet pipeline = derive_kraus(generator, t);
        const KrausSet closed = pd_kraus(params, t);
        const KrausSet standard = pd_standard_kraus(-std::expm1(-2.0 * params.r * t));
        r.record("pd.completeness_pipeline", pipeline.completeness_residual(), 1e-9);
        r.record("pd.completeness_closed", closed.completeness_residual(), 1e-9);
        r.record("pd.closed_vs_pipeline", choi_distance(closed, pipeline), 1e-12);
        r.record("pd.standard_vs_pipeline", choi_distance(standard, pipeline), 1e-12);
        double action = 0.0;
        for (std::size_t i = 0; i < kAngleGrid; ++i) {
            const double u = 2.0 * M_PI * double(i) / double(kAngleGrid);
            for (std::size_t j = 0; j < kAngleGrid; ++j) {
                const double v = M_PI * double(j) / double(kAngleGrid - 1);
                action = std::max(action, bloch_error(pipeline, u, v, pd_bloch(params, t, u, v)));
            }
        }
        r.record("pd.channel_action", action, 1e-9);
    }
}

void verify_document(Report &r, const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read " + path);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError(path + ": " + e.what());
    }
    if (!doc.contains("points") || !doc.at("points").is_array()) {
        throw ConfigError(path + " has no \"points\" array");
    }
    for (const json &item : doc.at("points")) {
        const KrausSet kraus = kraus_set_from_json(item);
        const double residual = kraus.completeness_residual();
        r.record("input.completeness", residual, 1e-9);
        if (item.contains("completeness_residual")) {
            const double recorded = item.at("completeness_residual").get<double>();
            r.record("input.recorded_residual", std::abs(residual - recorded), 1e-15);
        }
    }
}

std::string verify_text(const Report &r) {
    std::string s;
    for (const Check &c : r.checks()) {
        s += fmt::format("{} {} residual={:.3e} tol={:.1e}\n", c.passed() ? "PASS" : "FAIL", c.name,
                         c.residual, c.tolerance);
    }
    s += r.all_passed() ? "all checks passed\n" : "some checks FAILED\n";
    return s;
}

std::string verify_json(const Report &r) {
    json list = json::array();
    for (const Check &c : r.checks()) {
        list.push_back({{"name", c.name},
                        {"residual", c.residual},
                        {"tolerance", c.tolerance},
                        {"passed", c.passed()}});
    }
    json doc{{"checks", std::move(list)}, {"passed", r.all_passed()}};
    return doc.dump(2) + "\n";
}

// ---- figure ----

std::string fig_name(const char *prefix, double value) {
    return fmt::format("{}{}", prefix, value);
}

BathSpectrum figure_bath(const RunConfig &cfg) {
    if (const auto *p = std::get_if<PhysicalParams>(&cfg.params)) {
        return p->bath;
    }
    if (!std::holds_alternative<std::monostate>(cfg.params)) {
        throw ConfigError("figures are defined over bath temperatures; use --physical parameters");
    }
    return BathSpectrum{};
}

PhysicalParams figure_physics(const RunConfig &cfg, double temperature) {
    PhysicalParams p;
    if (const auto *given = std::get_if<PhysicalParams>(&cfg.params)) {
        p = *given;
    }
    p.bath = figure_bath(cfg);
    p.bath.temperature = temperature;
    return p;
}

std::filesystem::path figure_dir(const RunConfig &cfg) {
    std::filesystem::path dir = cfg.output_path.empty() ? "." : cfg.output_path;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create output directory " + dir.string());
    }
    return dir;
}

void write_cloud(const std::filesystem::path &path, const PointCloud &cloud) {
    auto f = open_output(path.string());
    write_point_cloud_csv(f, cloud);
    finish_output(f, path.string());
}

struct Panel {
    double temperature;
    std::vector<double> times;
};

int figure_bloch3d(const RunConfig &cfg, std::ostream &out) {
    std::vector<Panel> panels;
    std::vector<double> standard_times;
    if (cfg.figure.temperatures.empty() && cfg.figure.times.empty()) {
        panels = {{100.0, {0.0, 0.05}}, {300.0, {0.0, 0.05}}, {1.0, {0.0, 2.5}}};
        standard_times = {0.0, 2.5};
    } else {
        const std::vector<double> temps = cfg.figure.temperatures.empty()
                                              ? std::vector<double>{100.0, 300.0}
                                              : cfg.figure.temperatures;
        const std::vector<double> times =
            cfg.figure.times.empty() ? std::vector<double>{0.0, 0.05} : cfg.figure.times;
        for (double temp : temps) {
            panels.push_back({temp, times});
        }
        if (cfg.figure.compare_standard_ad) {
            standard_times = times;
        }
    }
    if (cfg.figure.compare_standard_ad && standard_times.empty()) {
        standard_times = panels.front().times;
    }

    const auto dir = figure_dir(cfg);
    std::vector<std::vector<double>> summary;
    auto add_summary = [&](double temp, double t, bool standard, const AffineBlochMap &map) {
        const EllipsoidShape shape = ellipsoid_shape(map);
        summary.push_back({temp, t, standard ? 1.0 : 0.0, shape.semi_axes[0], shape.semi_axes[1],
                           shape.semi_axes[2], shape.center[0], shape.center[1], shape.center[2],
                           map_volume(map)});
    };

    for (const Panel &panel : panels) {
        const GadRates rates = physical_rates(figure_physics(cfg, panel.temperature));
        const SuperopMatrix generator = gad_L(rates);
        for (double t : panel.times) {
            const AffineBlochMap map = bloch_map(derive_kraus(generator, t, cfg.kraus_cutoff));
            const auto name = fig_name("bloch3d_T", panel.temperature) + fig_name("_t", t) + ".csv";
            write_cloud(dir / name, sample_ellipsoid(map, cfg.figure.grid_u, cfg.figure.grid_v));
            add_summary(panel.temperature, t, false, map);
            out << (dir / name).string() << '\n';
        }
    }
    if (!standard_times.empty()) {
        // Zero-temperature decay rate of the same bath.
        const GadRates cold = physical_rates(figure_physics(cfg, 0.0));
        for (double t : standard_times) {
            const AffineBlochMap map = bloch_map(textbook_ad_kraus(-std::expm1(-cold.y * t)));
            const auto name = fig_name("bloch3d_standard_ad_t", t) + ".csv";
            write_cloud(dir / name, sample_ellipsoid(map, cfg.figure.grid_u, cfg.figure.grid_v));
            add_summary(0.0, t, true, map);
            out << (dir / name).string() << '\n';
        }
    }
    const auto summary_path = (dir / "bloch3d_summary.csv").string();
    auto f = open_output(summary_path);
    write_csv(f,
              {"T", "t", "standard_ad", "axis1", "axis2", "axis3", "center_x", "center_y",
               "center_z", "volume"},
              summary);
    finish_output(f, summary_path);
    out << summary_path << '\n';
    return kExitOk;
}

int figure_volume_rate(const RunConfig &cfg, std::ostream &out) {
    const std::vector<double> temps = cfg.figure.temperatures.empty()
                                          ? std::vector<double>{100.0, 300.0}
                                          : cfg.figure.temperatures;
    const std::vector<double> times = cfg.time.value_or(TimeGrid{0.0, 0.2, 41}).points();
    const auto dir = figure_dir(cfg);
    for (double temp : temps) {
        const GadRates rates = physical_rates(figure_physics(cfg, temp));
        std::vector<std::vector<double>> rows;
        for (double t : times) {
            rows.push_back({t, volume_rate(rates, t)});
        }
        const auto path = (dir / (fig_name("volume_rate_T", temp) + ".csv")).string();
        auto f = open_output(path);
        write_csv(f, {"t", "kappa"}, rows);
        finish_output(f, path);
        out << path << '\n';
    }
    return kExitOk;
}

}  // namespace

int cmd_derive(const RunConfig &cfg, std::ostream &out) {
    const auto points = derive_points(cfg);
    emit(cfg, cfg.format == OutputFormat::Json ? derive_json(cfg, points) : derive_csv(points), out);
    return kExitOk;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    Report report(cfg);
    if (!cfg.input_document.empty()) {
        verify_document(report, cfg.input_document);
    } else {
        verify_gad(report);
        verify_pd(report);
    }
    out << verify_text(report);
    if (!cfg.output_path.empty()) {
        auto f = open_output(cfg.output_path);
        f << verify_json(report);
        finish_output(f, cfg.output_path);
    }
    return report.all_passed() ? kExitOk : kExitInvariantFailed;
}

int cmd_figure(const RunConfig &cfg, Figure figure, std::ostream &out) {
    return figure == Figure::Bloch3d ? figure_bloch3d(cfg, out) : figure_volume_rate(cfg, out);
}

}  // namespace kraus_forge::cli
