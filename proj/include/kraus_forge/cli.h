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

#ifndef KRAUS_FORGE_CLI_H
#define KRAUS_FORGE_CLI_H

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "kraus_forge/bath.h"
#include "kraus_forge/gad_channel.h"
#include "kraus_forge/pd_channel.h"

namespace kraus_forge::cli {

/// Process exit statuses; part of the public interface.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvariantFailed = 1,
    kExitConfigError = 2,
    kExitPipelineError = 3,
    kExitIoError = 4,
};

class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class Channel { Gad, Pd };
enum class OutputFormat { Json, Csv };
enum class ShiftMode { None, Quadrature, Value };

struct PhysicalParams {
    BathSpectrum bath;
    ShiftMode shift = ShiftMode::None;
    double shift_value = 0.0;
};

struct RatesParams {
    GadRates gad;
    PdParams pd{1.0};
};

/// θ and Ω; τ comes from the time grid.
struct ScaledParams {
    double theta = 0.0;
    double omega = -2.0;
};

using Parameterization = std::variant<std::monostate, PhysicalParams, RatesParams, ScaledParams>;

struct TimeGrid {
    double start = 0.0;
    double end = 0.0;
    int steps = 1;

    /// `steps` evenly spaced points from start to end (just `start` when
    /// steps == 1).
    std::vector<double> points() const;
};

struct FigureOptions {
    std::vector<double> temperatures;
    std::vector<double> times;
    std::size_t grid_u = 24;
    std::size_t grid_v = 13;
    bool compare_standard_ad = false;
};

struct RunConfig {
    Channel channel = Channel::Gad;
    Parameterization params;
    std::optional<TimeGrid> time;
    std::string output_path;
    OutputFormat format = OutputFormat::Json;
    std::map<std::string, double> tolerances;
    double kraus_cutoff = 1e-12;
    FigureOptions figure;
    /// verify: a derive document to re-check instead of running the suites.
    std::string input_document;
};

/// Strict reader for the `--config` file; unknown keys are errors.
RunConfig config_from_json(const nlohmann::json &j);

/// Checks the invariants a parsed config must satisfy (one parameterization
/// kind, channel/parameterization compatibility, t_start ≤ t_end, steps ≥ 1,
/// non-negative times). Throws ConfigError.
void validate(const RunConfig &cfg);

/// Built-in tolerance for a verify check, replaced by KRAUS_FORGE_TOL when set
/// and by cfg.tolerances[name] above that.
double resolve_tolerance(const RunConfig &cfg, const std::string &name, double builtin);

std::string_view channel_name(Channel channel);

/// Entry point shared by the executable and the tests. Returns the exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

int cmd_derive(const RunConfig &cfg, std::ostream &out);
int cmd_verify(const RunConfig &cfg, std::ostream &out);
enum class Figure { Bloch3d, VolumeRate };
int cmd_figure(const RunConfig &cfg, Figure figure, std::ostream &out);

}  // namespace kraus_forge::cli

#endif
